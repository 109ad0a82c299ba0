"""Rewriting view of 2-binomial equivalence on binary words.

The one-step relation switches a factor ``ab`` and a later, disjoint
factor ``ba`` simultaneously: ``x ab y ba z  ->  x ba y ab z``.  Both
switches together preserve every subword count of length <= 2, and the
symmetric closure of the relation connects exactly the words with equal
counts.  A class is determined by the triple (|w|_a, |w|_b, binom(w,ab))
and has closed-form least and greatest members under the relation.

The distance between two words counts the grid cells lying between
their broken-line drawings; one rewriting step moves a word two cells
closer to any fixed equivalent target, which yields derivations of
provably minimal length.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .matrices import parikh_vector
from .words import Word, _binary_word, _row_widths, binom

__all__ = [
    "ClassSignature",
    "signature_of",
    "rewrite_successors",
    "rewrite_predecessors",
    "spa_successors",
    "is_rewrite_a",
    "is_rewrite_b",
    "PsiDecomposition",
    "psi_decomposition",
    "distance",
    "Derivation",
    "minimal_derivation",
    "init_word",
    "final_word",
    "is_singleton_class",
    "class_count",
]


@dataclass(frozen=True)
class ClassSignature:
    """The triple (|w|_a, |w|_b, binom(w, ab)) that pins down a class."""

    na: int
    nb: int
    m: int

    def __post_init__(self):
        if self.na < 0 or self.nb < 0:
            raise DomainError("letter counts must be nonnegative")
        if not 0 <= self.m <= self.na * self.nb:
            raise DomainError(
                f"pair count {self.m} out of range 0..{self.na * self.nb}"
            )


def _coerce_signature(sig) -> ClassSignature:
    if isinstance(sig, ClassSignature):
        return sig
    return ClassSignature(*sig)


def signature_of(w) -> ClassSignature:
    w = _binary_word(w)
    return ClassSignature(str.count(w, "a"), str.count(w, "b"), binom(w, "ab"))


def _ab_positions(s: str) -> list[int]:
    return [i for i in range(len(s) - 1) if s[i] == "a" and s[i + 1] == "b"]


def _ba_positions(s: str) -> list[int]:
    return [i for i in range(len(s) - 1) if s[i] == "b" and s[i + 1] == "a"]


def _swap(s: str, i: int, j: int) -> str:
    """Replace the factor at i by its reversal and likewise at j (i < j)."""
    return (
        s[:i] + s[i + 1] + s[i] + s[i + 2 : j] + s[j + 1] + s[j] + s[j + 2 :]
    )


def rewrite_successors(w) -> set[Word]:
    """All words reached by one forward step x ab y ba z -> x ba y ab z.

    The two switched factors must be disjoint (the ba starts at least
    two positions after the ab).
    """
    w = _binary_word(w)
    s = str(w)
    out = set()
    ba = _ba_positions(s)
    for i in _ab_positions(s):
        for j in ba:
            if j >= i + 2:
                out.add(Word(_swap(s, i, j)))
    return out


def rewrite_predecessors(w) -> set[Word]:
    """All words v with v -> w: switch an earlier ba and a later ab back."""
    w = _binary_word(w)
    s = str(w)
    out = set()
    ab = _ab_positions(s)
    for i in _ba_positions(s):
        for j in ab:
            if j >= i + 2:
                out.add(Word(_swap(s, i, j)))
    return out


def _spa_moves(s: str):
    """Yield (successor, letter, start, gap) for each step on a factor
    ab x ba whose gap x is a power of a single letter."""
    n = len(s)
    for i in range(n - 3):
        if s[i] != "a" or s[i + 1] != "b":
            continue
        k = i + 2
        # gap of a's
        run = 0
        while k + run < n and s[k + run] == "a":
            run += 1
        if k + run + 1 < n and s[k + run] == "b" and s[k + run + 1] == "a":
            j = k + run
            yield _swap(s, i, j), "a", i, run
        # gap of b's; only the maximal run can be followed by the final a
        run = 0
        while k + run < n and s[k + run] == "b":
            run += 1
        if run >= 1 and k + run < n and s[k + run] == "a":
            j = k + run - 1
            yield _swap(s, i, j), "b", i, run - 1


def spa_successors(w) -> set[Word]:
    """Successors through steps ab a^m ba -> ba a^m ab or the b-gap twin.

    These restricted steps generate the same reachability relation as
    the unrestricted one and their single steps are exactly the covers
    of the class ordering.
    """
    w = _binary_word(w)
    return {Word(v) for v, _, _, _ in _spa_moves(str(w))}


def is_rewrite_a(u, v) -> bool:
    """Whether u -> v by one step ab a^m ba -> ba a^m ab."""
    u = _binary_word(u)
    v = _binary_word(v)
    if len(u) != len(v):
        return False
    return any(
        letter == "a" and w == str(v) for w, letter, _, _ in _spa_moves(str(u))
    )


def is_rewrite_b(u, v) -> bool:
    """Whether u -> v by one step ab b^m ba -> ba b^m ab."""
    u = _binary_word(u)
    v = _binary_word(v)
    if len(u) != len(v):
        return False
    return any(
        letter == "b" and w == str(v) for w, letter, _, _ in _spa_moves(str(u))
    )


@dataclass(frozen=True)
class PsiDecomposition:
    """Paired factorization of two words cut where letter counts agree.

    Every pair of segments is nonempty and all pairs but possibly the
    last have equal letter-count vectors (all of them when the two whole
    words agree).  The maximal decomposition cuts at every common proper
    nonempty prefix pair with equal counts, so its pairs cannot be cut
    further.
    """

    pairs: tuple[tuple[Word, Word], ...]
    maximal: bool = True


def psi_decomposition(u, v) -> PsiDecomposition:
    """The unique maximal decomposition of (u, v); needs equal counts."""
    u = Word(u)
    v = Word(v)
    if u.alphabet != v.alphabet:
        raise DomainError("words must share one alphabet")
    if parikh_vector(u) != parikh_vector(v):
        raise DomainError("words must have equal letter counts")
    n = len(u)
    letters = u.alphabet.letters
    index = {ch: i for i, ch in enumerate(letters)}
    diff = [0] * len(letters)
    nonzero = 0
    cuts = [0]
    for t in range(n - 1):
        iu = index[u[t]]
        iv = index[v[t]]
        before = diff[iu]
        diff[iu] += 1
        if before == 0:
            nonzero += 1
        elif before == -1:
            nonzero -= 1
        before = diff[iv]
        diff[iv] -= 1
        if before == 0:
            nonzero += 1
        elif before == 1:
            nonzero -= 1
        if nonzero == 0:
            cuts.append(t + 1)
    cuts.append(n)
    pairs = tuple(
        (Word(str(u)[lo:hi], u.alphabet), Word(str(v)[lo:hi], v.alphabet))
        for lo, hi in zip(cuts, cuts[1:])
        if hi > lo
    )
    return PsiDecomposition(pairs, maximal=True)


def distance(u, v) -> int:
    """Cells between the broken lines of u and v.

    Size of the symmetric difference of the two left cell sets; a metric
    on binary words, defined for any pair and even whenever the words
    are equivalent.
    """
    ru = _row_widths(_binary_word(u))
    rv = _row_widths(_binary_word(v))
    common = min(len(ru), len(rv))
    d = sum(abs(x - y) for x, y in zip(ru, rv))
    d += sum(ru[common:]) + sum(rv[common:])
    return d


@dataclass(frozen=True)
class Derivation:
    """A chain of words linked by single rewriting steps in either direction.

    ``swaps[t]`` gives the 0-based start positions (ab_start, ba_start)
    of the ``ab`` and ``ba`` factors of ``words[t]`` whose simultaneous
    switch produces ``words[t+1]``.
    """

    words: tuple[Word, ...]
    swaps: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.swaps)

    def as_dicts(self) -> list[dict]:
        out = []
        for t, w in enumerate(self.words):
            swap = list(self.swaps[t]) if t < len(self.swaps) else None
            out.append({"word": str(w), "swap_positions": swap})
        return out


def _segment_pair_count(s: str, lo: int, hi: int) -> int:
    count = 0
    seen_a = 0
    for t in range(lo, hi):
        if s[t] == "a":
            seen_a += 1
        else:
            count += seen_a
    return count


def _one_step_toward(cur: str, target: str) -> tuple[str, tuple[int, int]]:
    """One rewriting step from cur strictly toward target.

    Cuts (cur, target) maximally at equal-count prefixes, picks a
    segment with surplus ab-count and one with deficit, and switches an
    ab factor inside the first against a ba factor inside the second.
    Each such step lowers distance(cur, target) by exactly 2.
    """
    n = len(cur)
    cuts = [0]
    bal = 0
    for t in range(n - 1):
        bal += (cur[t] == "a") - (target[t] == "a")
        if bal == 0:
            cuts.append(t + 1)
    cuts.append(n)
    alpha = beta = None
    for lo, hi in zip(cuts, cuts[1:]):
        if hi == lo:
            continue
        surplus = _segment_pair_count(cur, lo, hi) - _segment_pair_count(
            target, lo, hi
        )
        if surplus > 0 and alpha is None:
            alpha = (lo, hi)
        elif surplus < 0 and beta is None:
            beta = (lo, hi)
        if alpha is not None and beta is not None:
            break
    assert alpha is not None and beta is not None
    ab_pos = next(
        t for t in range(alpha[0], alpha[1] - 1) if cur[t] == "a" and cur[t + 1] == "b"
    )
    ba_pos = next(
        t for t in range(beta[0], beta[1] - 1) if cur[t] == "b" and cur[t + 1] == "a"
    )
    lo_pos, hi_pos = min(ab_pos, ba_pos), max(ab_pos, ba_pos)
    return _swap(cur, lo_pos, hi_pos), (ab_pos, ba_pos)


def minimal_derivation(u, v) -> Derivation:
    """A shortest rewriting chain from u to v, of length distance(u,v)/2.

    The endpoints must be equivalent.  Steps may run forward or backward
    along the one-step relation; each consecutive pair differs by one
    simultaneous ab/ba switch.
    """
    u = _binary_word(u)
    v = _binary_word(v)
    if signature_of(u) != signature_of(v):
        raise DomainError("words are not 2-binomially equivalent")
    words = [u]
    swaps = []
    cur = str(u)
    target = str(v)
    while cur != target:
        cur, swap = _one_step_toward(cur, target)
        words.append(Word(cur))
        swaps.append(swap)
    return Derivation(tuple(words), tuple(swaps))


def init_word(sig) -> Word:
    """Least member of the class: no factor ba occurs before a factor ab.

    Shape a^i b^(nb-j) a b^j a^(na-i-1) where m = i*nb + j, with the
    degenerate all-a / a-block-then-b-block cases at the range ends.
    """
    sig = _coerce_signature(sig)
    na, nb, m = sig.na, sig.nb, sig.m
    if nb == 0:
        return Word("a" * na)
    if m == na * nb:
        return Word("a" * na + "b" * nb)
    i, j = divmod(m, nb)
    return Word("a" * i + "b" * (nb - j) + "a" + "b" * j + "a" * (na - i - 1))


def final_word(sig) -> Word:
    """Greatest member of the class: no factor ab occurs before a factor ba.

    Shape b^(nb-i-1) a^j b a^(na-j) b^i where m = i*na + j, with the
    degenerate all-b / a-block-then-b-block cases at the range ends.
    """
    sig = _coerce_signature(sig)
    na, nb, m = sig.na, sig.nb, sig.m
    if na == 0:
        return Word("b" * nb)
    if m == na * nb:
        return Word("a" * na + "b" * nb)
    i, j = divmod(m, na)
    return Word("b" * (nb - i - 1) + "a" * j + "b" + "a" * (na - j) + "b" * i)


def is_singleton_class(w) -> bool:
    """Whether w is alone in its class (its least and greatest members agree)."""
    sig = signature_of(w)
    return init_word(sig) == final_word(sig)


def class_count(n: int) -> int:
    """Number of equivalence classes among all 2^n binary words of length n."""
    if n < 0:
        raise DomainError("length must be nonnegative")
    total = n**3 + 5 * n + 6
    assert total % 6 == 0
    return total // 6
