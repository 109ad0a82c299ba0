"""Words over ordered alphabets and scattered-subword counting.

A word is a :class:`Word` (an immutable ``str`` subclass) carrying an
ordered :class:`Alphabet`.  Plain strings are accepted by every function
and coerced: strings over ``{0,1}`` are read as binary words with
``0 -> a`` and ``1 -> b``, strings over ``{a,b}`` (including the empty
string) get the canonical binary alphabet ``a < b``, and anything else
gets its distinct characters in sorted order.

The central quantity is ``binom(w, u)``, the number of occurrences of
``u`` as a scattered subword of ``w``.  For a pair of distinct letters,
``binom(w, ab)`` counts the grid cells left of the broken-line drawing
of ``w`` (letter ``a`` = one step right, letter ``b`` = one step up) and
``binom(w, ba)`` the cells right of it, so the two counts always sum to
``|w|_a * |w|_b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import DomainError

__all__ = [
    "Alphabet",
    "Word",
    "GridPoint",
    "count_letter",
    "binom",
    "left_set",
    "right_set",
    "sum_positions",
    "project",
    "is_palindrome",
    "is_balanced",
    "apply_morphism",
    "thue_morse_prefix",
    "mirror",
    "exchange_letters",
]

_ALIAS_01 = str.maketrans("01", "ab")
_SWAP_AB = str.maketrans("ab", "ba")


@dataclass(frozen=True)
class Alphabet:
    """Ordered alphabet of distinct single-character letters."""

    letters: tuple[str, ...]

    def __post_init__(self):
        if not self.letters:
            raise DomainError("an alphabet needs at least one letter")
        if len(self.letters) > 26:
            raise DomainError("alphabets beyond 26 letters are not supported")
        seen = set()
        for ch in self.letters:
            if not isinstance(ch, str) or len(ch) != 1 or not ch.isprintable():
                raise DomainError(f"not a single printable letter: {ch!r}")
            if ch in seen:
                raise DomainError(f"duplicate letter {ch!r}")
            seen.add(ch)

    @classmethod
    def binary(cls) -> "Alphabet":
        return cls(("a", "b"))

    @classmethod
    def of(cls, letters) -> "Alphabet":
        return cls(tuple(letters))

    def index(self, letter: str) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise DomainError(
                f"letter {letter!r} not in alphabet {''.join(self.letters)!r}"
            ) from None

    def pairs(self) -> Iterator[tuple[str, str]]:
        """All letter pairs (x, y) with x strictly before y in the order."""
        for i, x in enumerate(self.letters):
            for y in self.letters[i + 1 :]:
                yield x, y

    def __contains__(self, letter: object) -> bool:
        return letter in self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)


_BINARY = Alphabet.binary()


class Word(str):
    """A finite word over an ordered alphabet.

    Behaves exactly like the underlying ``str`` (equality, hashing and
    ordering are textual); the alphabet only fixes the letter order used
    by vector- and matrix-valued operations.  ``Word("0110")`` is parsed
    as the binary word ``abba``.
    """

    __slots__ = ("alphabet",)

    alphabet: Alphabet

    def __new__(cls, text: object = "", alphabet: Alphabet | None = None) -> "Word":
        if isinstance(text, Word) and alphabet is None:
            return text
        text = str(text)
        if alphabet is None:
            chars = set(text)
            if chars and chars <= {"0", "1"}:
                text = text.translate(_ALIAS_01)
                alphabet = _BINARY
            elif chars <= {"a", "b"}:
                alphabet = _BINARY
            else:
                alphabet = Alphabet(tuple(sorted(chars)))
        else:
            for ch in set(text):
                if ch not in alphabet:
                    raise DomainError(f"letter {ch!r} not in alphabet")
        w = str.__new__(cls, text)
        w.alphabet = alphabet
        return w

    def __repr__(self) -> str:
        return f"Word({str.__repr__(self)})"


class GridPoint(NamedTuple):
    """A unit cell of the |w|_a x |w|_b rectangle, 1-indexed."""

    i: int
    j: int


def _binary_word(w) -> Word:
    """Coerce to a word over the canonical binary alphabet {a, b}."""
    w = Word(w)
    if not set(w) <= {"a", "b"}:
        raise DomainError(f"operation needs a binary word over {{a, b}}: {str(w)!r}")
    return w if w.alphabet == _BINARY else Word(str(w), _BINARY)


def count_letter(w, letter: str) -> int:
    """Number of occurrences of a letter; the letter must be in the alphabet."""
    w = Word(w)
    if letter not in w.alphabet:
        raise DomainError(f"letter {letter!r} not in alphabet of {str(w)!r}")
    return str.count(w, letter)


def binom(w, u) -> int:
    """Number of occurrences of u as a scattered subword of w.

    Counted over strictly increasing index sequences, by the usual
    dynamic program over prefixes; O(|w|*|u|).  binom(w, "") == 1.
    """
    w = Word(w)
    u = str(u)
    for ch in set(u):
        if ch not in w.alphabet:
            raise DomainError(f"letter {ch!r} not in alphabet of {str(w)!r}")
    m = len(u)
    if m == 0:
        return 1
    ends = [0] * (m + 1)
    ends[0] = 1
    for c in w:
        for j in range(m, 0, -1):
            if u[j - 1] == c:
                ends[j] += ends[j - 1]
    return ends[m]


def _row_widths(w, a: str = "a", b: str = "b") -> list[int]:
    """For j = 1..|w|_b, the number of a's strictly before the j-th b."""
    w = Word(w)
    if a == b:
        raise DomainError("the two letters must differ")
    if a not in w.alphabet or b not in w.alphabet:
        raise DomainError(f"letters {a!r}, {b!r} must both be in the alphabet")
    widths = []
    seen_a = 0
    for ch in w:
        if ch == a:
            seen_a += 1
        elif ch == b:
            widths.append(seen_a)
    return widths


def left_set(w, a: str = "a", b: str = "b") -> set[GridPoint]:
    """Cells left of the broken line of w projected onto {a, b}.

    Row j holds one cell per ``a`` preceding the j-th ``b``; the total
    number of cells is binom(w, ab).
    """
    widths = _row_widths(w, a, b)
    return {
        GridPoint(i, j)
        for j, width in enumerate(widths, 1)
        for i in range(1, width + 1)
    }


def right_set(w, a: str = "a", b: str = "b") -> set[GridPoint]:
    """Complement of left_set within the |w|_a x |w|_b rectangle."""
    w = Word(w)
    widths = _row_widths(w, a, b)
    na = str.count(w, a)
    return {
        GridPoint(i, j)
        for j, width in enumerate(widths, 1)
        for i in range(width + 1, na + 1)
    }


def sum_positions(w, letter: str) -> int:
    """Sum of the 1-based positions at which the letter occurs."""
    w = Word(w)
    if letter not in w.alphabet:
        raise DomainError(f"letter {letter!r} not in alphabet of {str(w)!r}")
    return sum(i for i, ch in enumerate(w, 1) if ch == letter)


def project(w, a: str = "a", b: str = "b") -> Word:
    """Erase every letter other than a and b, preserving order."""
    if a == b:
        raise DomainError("the two letters must differ")
    w = Word(w)
    kept = "".join(ch for ch in w if ch in (a, b))
    return Word(kept, Alphabet(tuple(sorted((a, b)))))


def is_palindrome(w) -> bool:
    w = Word(w)
    return str(w) == str(w)[::-1]


def is_balanced(w) -> bool:
    """Whether every pair of equal-length factors has a-counts within 1.

    Binary words only.  Uses the sliding-window check: for each window
    length, the max and min a-count over all windows differ by at most 1.
    """
    w = _binary_word(w)
    n = len(w)
    prefix_a = [0] * (n + 1)
    for i, ch in enumerate(w):
        prefix_a[i + 1] = prefix_a[i] + (ch == "a")
    for length in range(1, n):
        counts = [prefix_a[i + length] - prefix_a[i] for i in range(n - length + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


_MORPHISMS = {
    "L_a": {"a": "a", "b": "ab"},
    "L_b": {"a": "ba", "b": "b"},
    "mu": {"a": "ab", "b": "ba"},
}


def apply_morphism(name: str, w) -> Word:
    """Image of a binary word under a named free-monoid morphism.

    Known names: "L_a" (a -> a, b -> ab), "L_b" (a -> ba, b -> b),
    "mu" (a -> ab, b -> ba) and "mu2" for mu applied twice.
    """
    w = _binary_word(w)
    if name == "mu2":
        return apply_morphism("mu", apply_morphism("mu", w))
    table = _MORPHISMS.get(name)
    if table is None:
        raise DomainError(f"unknown morphism {name!r}")
    return Word("".join(table[ch] for ch in w), _BINARY)


def thue_morse_prefix(n: int) -> Word:
    """First n letters of the fixed point of mu starting with a."""
    if n < 0:
        raise DomainError("length must be nonnegative")
    s = "a"
    while len(s) < n:
        s = "".join(_MORPHISMS["mu"][ch] for ch in s)
    return Word(s[:n], _BINARY)


def mirror(w) -> Word:
    """The reverse of w."""
    w = Word(w)
    return Word(str(w)[::-1], w.alphabet)


def exchange_letters(w) -> Word:
    """Swap a and b throughout a binary word."""
    w = _binary_word(w)
    return Word(str(w).translate(_SWAP_AB), _BINARY)
