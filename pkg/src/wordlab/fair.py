"""Fair words: equal counts of xy and yx for every letter pair.

A word is fair when binom(w, xy) = binom(w, yx) for all distinct
letters x, y; on the binary alphabet this means the broken line cuts
its bounding rectangle into two parts of equal area, or equivalently
binom(w, ab) = |w|_a * |w|_b / 2.  Every palindrome is fair, no binary
fair word has both letter counts odd, and a word is fair exactly when
the least member of its equivalence class is a palindrome.

The module counts binary fair words by length two independent ways
(filtering all words, and counting signed weight assignments by
meet-in-the-middle), characterizes fairness through an exact
least-squares line fit and through the mirror sum of b-positions,
computes fair factorization lengths, and builds palindromic balanced
fair words with prescribed letter counts.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .equivalence import signature_of, init_word
from .errors import DomainError, ResourceError
from .matrices import parikh_vector, precedence_matrix
from .words import (
    Alphabet,
    Word,
    _binary_word,
    apply_morphism,
    binom,
    mirror,
    sum_positions,
    thue_morse_prefix,
)

__all__ = [
    "delta",
    "deltas",
    "is_fair",
    "FairAnalysis",
    "analyze",
    "fair_count",
    "BRUTE_LIMIT",
    "SIGNED_LIMIT",
    "fair_asymptotic_ratio",
    "least_squares_fit",
    "fair_iff_reverse_sum",
    "fair_length",
    "palindromic_length",
    "fair_factor_census",
    "construct_balanced_fair",
    "syntactic_fair_equivalent",
    "thue_morse_fair_length_audit",
    "fair_iff_init_palindrome",
    "AUDIT_LIMIT",
]

BRUTE_LIMIT = 20
SIGNED_LIMIT = 24
AUDIT_LIMIT = 256

_BINARY = Alphabet.binary()


def deltas(w) -> dict[str, int]:
    """binom(w, xy) - binom(w, yx) for every alphabet pair x < y,
    keyed by the two-letter string xy."""
    w = Word(w)
    mat = precedence_matrix(w)
    letters = w.alphabet.letters
    out = {}
    for i, x in enumerate(letters):
        for j in range(i + 1, len(letters)):
            out[x + letters[j]] = mat.rows[i][j] - mat.rows[j][i]
    return out


def delta(w, x: str, y: str) -> int:
    """binom(w, xy) - binom(w, yx) for one ordered letter pair."""
    w = Word(w)
    if x == y:
        raise DomainError("the two letters must differ")
    return binom(w, x + y) - binom(w, y + x)


def is_fair(w) -> bool:
    """Whether every letter pair occurs equally often in both orders."""
    return all(d == 0 for d in deltas(w).values())


@dataclass(frozen=True)
class FairAnalysis:
    """Per-word fairness record.

    ``fit`` holds the exact least-squares line (intercept, slope) over
    the 0/1 letter values for binary words of length >= 2, else None;
    the slope is zero exactly when the word is fair.  ``fair_length``
    is None for the empty word.
    """

    word: Word
    deltas: Mapping[str, int]
    is_fair: bool
    fit: tuple[Fraction, Fraction] | None
    fair_length: int | None

    def as_dict(self) -> dict:
        fit = None
        if self.fit is not None:
            alpha, beta = self.fit
            fit = {
                "alpha": {"num": alpha.numerator, "den": alpha.denominator},
                "beta": {"num": beta.numerator, "den": beta.denominator},
            }
        return {
            "word": str(self.word),
            "deltas": dict(self.deltas),
            "is_fair": self.is_fair,
            "fit": fit,
            "fair_length": self.fair_length,
        }


def analyze(w) -> FairAnalysis:
    """Assemble the full fairness record of one word."""
    w = Word(w)
    ds = deltas(w)
    fit = None
    if set(w) <= {"a", "b"} and len(w) >= 2:
        fit = least_squares_fit(w)
    return FairAnalysis(
        word=w,
        deltas=ds,
        is_fair=all(d == 0 for d in ds.values()),
        fit=fit,
        fair_length=fair_length(w) if w else None,
    )


_BRUTE_CHUNK = 1 << 20


def _count_fair_masks(args) -> int:
    """Count fair words among the bitmask range [lo, hi) of length n.

    Bit k of a mask is the letter at position k+1 (set = b).  The test
    is the direct one: equal counts of the two letter orders.
    """
    n, lo, hi = args
    masks = np.arange(lo, hi, dtype=np.int64)
    seen_a = np.zeros(masks.shape, dtype=np.int32)
    seen_b = np.zeros(masks.shape, dtype=np.int32)
    ab = np.zeros(masks.shape, dtype=np.int32)
    ba = np.zeros(masks.shape, dtype=np.int32)
    for k in range(n):
        bit = ((masks >> k) & 1).astype(np.int32)
        ab += bit * seen_a
        ba += (1 - bit) * seen_b
        seen_a += 1 - bit
        seen_b += bit
    return int(np.count_nonzero(ab == ba))


def _fair_count_brute(n: int, jobs: int) -> int:
    chunks = [
        (n, lo, min(lo + _BRUTE_CHUNK, 1 << n))
        for lo in range(0, 1 << n, _BRUTE_CHUNK)
    ]
    if jobs > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_fair_masks, chunks))
    return sum(_count_fair_masks(c) for c in chunks)


def _fair_count_signed(n: int) -> int:
    """Count sign assignments with sum eps_k * (n+1-2k) = 0.

    Meet-in-the-middle over the two weight halves; O(2^(n/2)).
    """
    weights = [n + 1 - 2 * k for k in range(1, n + 1)]
    half = n // 2

    def signed_sums(ws):
        sums = Counter({0: 1})
        for w in ws:
            nxt = Counter()
            for s, cnt in sums.items():
                nxt[s + w] += cnt
                nxt[s - w] += cnt
            sums = nxt
        return sums

    left = signed_sums(weights[:half])
    right = signed_sums(weights[half:])
    return sum(cnt * right.get(-s, 0) for s, cnt in left.items())


def fair_count(
    n: int, method: str = "signed_sum", limit: int | None = None, jobs: int = 1
) -> int:
    """Number of binary fair words of length n.

    "brute" filters all 2^n words by the pair-count test (vectorized,
    default bound 20); "signed_sum" counts the sign assignments of the
    weights n+1-2k that sum to zero (default bound 24).  Pass ``limit``
    to move a bound; exceeding it raises ResourceError.
    """
    if n < 0:
        raise DomainError("length must be nonnegative")
    method = {"signed": "signed_sum"}.get(method, method)
    if method == "brute":
        bound = BRUTE_LIMIT if limit is None else limit
        if n > bound:
            raise ResourceError(f"brute enumeration capped at length {bound}")
        return _fair_count_brute(n, jobs)
    if method == "signed_sum":
        bound = SIGNED_LIMIT if limit is None else limit
        if n > bound:
            raise ResourceError(f"signed-sum counting capped at length {bound}")
        return _fair_count_signed(n)
    raise DomainError(f"unknown method {method!r}")


def fair_asymptotic_ratio(n: int) -> float:
    """fair_count(n) divided by its growth estimate
    2^(2*floor((n-1)/2)+1) * sqrt(3/pi) * floor(n/2)^(-3/2).

    Diagnostic only; drifts toward 1 as n grows.
    """
    if n < 2:
        raise DomainError("defined for lengths >= 2")
    f = fair_count(n, "signed_sum", limit=max(n, SIGNED_LIMIT))
    growth = (
        2 ** (2 * ((n - 1) // 2) + 1)
        * math.sqrt(3 / math.pi)
        * (n // 2) ** -1.5
    )
    return f / growth


def least_squares_fit(w) -> tuple[Fraction, Fraction]:
    """Exact least-squares line through the points (i, w_i).

    Letters are read as values a = 0, b = 1 at positions 1..n; returns
    (intercept, slope) as exact rationals from the normal equations.
    The slope is 0 exactly for fair words, and then the intercept is
    |w|_b / |w|.
    """
    w = _binary_word(w)
    n = len(w)
    if n < 2:
        raise DomainError("the fit needs at least two letters")
    sy = str.count(w, "b")
    sxy = sum_positions(w, "b")
    sx = n * (n + 1) // 2
    sxx = n * (n + 1) * (2 * n + 1) // 6
    det = n * sxx - sx * sx
    beta = Fraction(n * sxy - sx * sy, det)
    alpha = (Fraction(sy) - beta * sx) / n
    return alpha, beta


def fair_iff_reverse_sum(w) -> tuple[bool, bool]:
    """(is_fair(w), S_b(w) == S_b(reverse of w)); the two always agree."""
    w = _binary_word(w)
    return is_fair(w), sum_positions(w, "b") == sum_positions(mirror(w), "b")


class _FactorDeltas:
    """O(1) fairness tests for the factors of one binary word."""

    def __init__(self, s: str):
        n = len(s)
        a = [0] * (n + 1)
        b = [0] * (n + 1)
        wa = [0] * (n + 1)  # sum of b-counts at the a positions
        wb = [0] * (n + 1)  # sum of a-counts at the b positions
        for t, ch in enumerate(s):
            a[t + 1] = a[t] + (ch == "a")
            b[t + 1] = b[t] + (ch == "b")
            wa[t + 1] = wa[t] + (b[t] if ch == "a" else 0)
            wb[t + 1] = wb[t] + (a[t] if ch == "b" else 0)
        self.a, self.b, self.wa, self.wb = a, b, wa, wb

    def is_fair(self, i: int, j: int) -> bool:
        """Whether the factor at positions [i, j) is fair."""
        a, b, wa, wb = self.a, self.b, self.wa, self.wb
        count_ab = (wb[j] - wb[i]) - a[i] * (b[j] - b[i])
        count_ba = (wa[j] - wa[i]) - b[i] * (a[j] - a[i])
        return count_ab == count_ba


def fair_length(w) -> int:
    """Least number of nonempty fair factors concatenating to w.

    Shortest-path dynamic program over cut positions with O(1) factor
    fairness tests; undefined (an error) for the empty word.
    """
    w = _binary_word(w)
    n = len(w)
    if n == 0:
        raise DomainError("the empty word has no fair factorization length")
    tables = _FactorDeltas(str(w))
    best = [0] + [n + 1] * n
    for j in range(1, n + 1):
        for i in range(j):
            if best[i] + 1 < best[j] and tables.is_fair(i, j):
                best[j] = best[i] + 1
    return best[n]


def palindromic_length(w) -> int:
    """Least number of nonempty palindromic factors concatenating to w."""
    w = Word(w)
    n = len(w)
    if n == 0:
        raise DomainError("the empty word has no palindromic factorization length")
    s = str(w)
    pal = [[False] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        pal[i][i] = True
        if i < n:
            pal[i][i + 1] = True
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            j = i + length
            pal[i][j] = s[i] == s[j - 1] and pal[i + 1][j - 1]
    best = [0] + [n + 1] * n
    for j in range(1, n + 1):
        for i in range(j):
            if best[i] + 1 < best[j] and pal[i][j]:
                best[j] = best[i] + 1
    return best[n]


def fair_factor_census(w) -> set[Word]:
    """All distinct fair factors of w, the empty word included."""
    w = Word(w)
    n = len(w)
    out = {Word("", w.alphabet)}
    if set(w) <= {"a", "b"}:
        tables = _FactorDeltas(str(w))
        fair_span = tables.is_fair
    else:
        fair_span = lambda i, j: is_fair(Word(str(w)[i:j], w.alphabet))
    seen = set()
    for i in range(n):
        for j in range(i + 1, n + 1):
            sub = str(w)[i:j]
            if sub in seen:
                continue
            seen.add(sub)
            if fair_span(i, j):
                out.add(Word(sub, w.alphabet))
    return out


def construct_balanced_fair(k: int, el: int) -> Word:
    """A palindromic balanced fair word with k a's and el b's.

    At least one of the counts must be even (no fair word has both
    odd).  Equal counts give (ab)^m (ba)^m; otherwise recurse on the
    smaller shape and expand with the letter-doubling morphism L_a or
    L_b, appending the repeated letter.
    """
    if k < 0 or el < 0:
        raise DomainError("letter counts must be nonnegative")
    if k % 2 == 1 and el % 2 == 1:
        raise DomainError("no fair word has both letter counts odd")
    if k == el:
        m = k // 2
        return Word("ab" * m + "ba" * m)
    if el == 0:
        return Word("a" * k)
    if k == 0:
        return Word("b" * el)
    if el < k:
        core = construct_balanced_fair(k - el - 1, el)
        return Word(str(apply_morphism("L_a", core)) + "a")
    core = construct_balanced_fair(k, el - k - 1)
    return Word(str(apply_morphism("L_b", core)) + "b")


def syntactic_fair_equivalent(u, v) -> bool:
    """Whether u and v act alike inside fair words.

    Holds exactly when the letter counts agree and every letter pair has
    the same order imbalance in both words; equivalently, all pairwise
    projections are 2-binomially equivalent.
    """
    u = Word(u)
    v = Word(v)
    if u.alphabet != v.alphabet:
        raise DomainError("words must share one alphabet")
    return parikh_vector(u) == parikh_vector(v) and deltas(u) == deltas(v)


def _max_fair_length_range(args) -> int:
    """Max fair factorization length over factors starting in [lo, hi)."""
    s, lo, hi = args
    tables = _FactorDeltas(s)
    n = len(s)
    worst = 0
    for start in range(lo, hi):
        best = [0] * (n + 1)
        for j in range(start + 1, n + 1):
            bj = n + 1
            for i in range(start, j):
                if best[i] + 1 < bj and tables.is_fair(i, j):
                    bj = best[i] + 1
            best[j] = bj
            if bj > worst:
                worst = bj
    return worst


def thue_morse_fair_length_audit(
    max_len: int, limit: int = AUDIT_LIMIT, jobs: int = 1
) -> int:
    """Largest fair factorization length among all nonempty factors of
    the Thue-Morse prefix of the given length.

    Bounded by 4 for every prefix; reaches 4 once the prefix is long
    enough to contain aababbaa.
    """
    if max_len < 0:
        raise DomainError("length must be nonnegative")
    if max_len > limit:
        raise ResourceError(f"audit capped at prefix length {limit}")
    s = str(thue_morse_prefix(max_len))
    n = len(s)
    if n == 0:
        return 0
    if jobs > 1 and n >= 64:
        step = -(-n // jobs)
        spans = [(s, lo, min(lo + step, n)) for lo in range(0, n, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return max(pool.map(_max_fair_length_range, spans))
    return _max_fair_length_range((s, 0, n))


def fair_iff_init_palindrome(w) -> tuple[bool, bool]:
    """(is_fair(w), least class member is a palindrome); always equal."""
    w = _binary_word(w)
    least = init_word(signature_of(w))
    return is_fair(w), str(least) == str(least)[::-1]
