"""Bounded integer partitions, dominance order, and the word bijections.

A partition is a plain non-increasing tuple of nonnegative integers;
trailing zeros are meaningful here because the word bijections produce
fixed-length sequences.  ``part_p(w)`` lists, longest prefix first, the
a-counts of the b-ended prefixes of a binary word (exactly |w|_b parts,
each <= |w|_a, summing to binom(w, ab)); ``part_s(w)`` is its conjugate
read off the a-started suffixes.  ``word_from_partition`` inverts
``part_p``, so the words of one equivalence class correspond one-to-one
to the partitions of binom(w, ab) into at most |w|_b parts bounded by
|w|_a.

Dominance compares prefix sums; its covers move a single unit either to
the adjacent position or between equal parts, and those two moves match
the two single-letter-gap rewriting steps on words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DomainError
from .equivalence import is_rewrite_a, is_rewrite_b
from .words import Word, _binary_word, _row_widths

__all__ = [
    "part_p",
    "part_s",
    "word_from_partition",
    "dominance_leq",
    "conjugate",
    "strip_zeros",
    "brylawski_covers",
    "covers_rule1",
    "covers_rule2",
    "count_partitions",
    "bounded_partitions",
    "CoverVerdict",
    "check_cover_correspondence",
    "RULE_ADJACENT",
    "RULE_EQUAL_PARTS",
]

RULE_ADJACENT = "adjacent"
RULE_EQUAL_PARTS = "equal-parts"


def _validated(parts: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise DomainError("partition parts must be nonnegative")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise DomainError(f"parts must be non-increasing: {parts}")
    return parts


def strip_zeros(parts: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zero parts (the comparison normal form)."""
    parts = tuple(parts)
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def part_p(w) -> tuple[int, ...]:
    """a-counts of the b-ended prefixes, longest first.

    Exactly |w|_b parts (zeros kept), each bounded by |w|_a, summing to
    binom(w, ab).
    """
    w = _binary_word(w)
    return tuple(reversed(_row_widths(w)))


def part_s(w) -> tuple[int, ...]:
    """b-counts of the a-started suffixes, longest first.

    Exactly |w|_a parts (zeros kept), each bounded by |w|_b; the
    conjugate of part_p(w).
    """
    w = _binary_word(w)
    n = len(w)
    suffix_b = 0
    out = [0] * str.count(w, "a")
    seen_a = str.count(w, "a")
    for t in range(n - 1, -1, -1):
        if w[t] == "b":
            suffix_b += 1
        else:
            seen_a -= 1
            out[seen_a] = suffix_b
    return tuple(out)


def word_from_partition(parts: Sequence[int], nb_parts: int, bound: int) -> Word:
    """The unique binary word w with part_p(w) = parts, |w|_b = nb_parts
    and |w|_a = bound.

    Short inputs are zero-padded to nb_parts parts; the largest part may
    not exceed the bound.
    """
    parts = _validated(parts)
    if len(parts) > nb_parts:
        raise DomainError(f"more than {nb_parts} parts: {parts}")
    if parts and parts[0] > bound:
        raise DomainError(f"largest part {parts[0]} exceeds bound {bound}")
    lam = list(parts) + [0] * (nb_parts - len(parts) + 1)
    pieces = []
    for i in range(nb_parts - 1, -1, -1):
        pieces.append("a" * (lam[i] - lam[i + 1]) + "b")
    pieces.append("a" * (bound - (lam[0] if nb_parts else 0)))
    return Word("".join(pieces))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """Whether mu is dominated by lam: every prefix sum of lam is >=.

    The two partitions must have equal sums; they are zero-padded to a
    common length first.
    """
    mu = _validated(mu)
    lam = _validated(lam)
    if sum(mu) != sum(lam):
        raise DomainError("dominance compares partitions of one integer")
    size = max(len(mu), len(lam))
    mu = mu + (0,) * (size - len(mu))
    lam = lam + (0,) * (size - len(lam))
    total_mu = total_lam = 0
    for x, y in zip(mu, lam):
        total_mu += x
        total_lam += y
        if total_mu > total_lam:
            return False
    return True


def conjugate(parts: Sequence[int], length: int | None = None) -> tuple[int, ...]:
    """Transpose of the diagram: entry j counts the parts of size >= j.

    With ``length`` the result is zero-padded (or rejected if it cannot
    fit) to exactly that many entries.
    """
    parts = _validated(parts)
    width = parts[0] if parts else 0
    if length is None:
        length = width
    elif length < width:
        raise DomainError(f"conjugate needs at least {width} entries")
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, length + 1))


def brylawski_covers(lam: Sequence[int]) -> set[tuple[tuple[int, ...], str]]:
    """All (mu, rule) with lam covering mu in dominance order.

    A cover moves one unit from position j to a later position k, with
    either k = j+1 ("adjacent") or mu_j = mu_k ("equal-parts"); a move
    realizable both ways is reported under both tags.  Lengths are kept,
    so zeros may turn into parts.
    """
    lam = _validated(lam)
    out = set()
    k = len(lam)
    for j in range(k):
        if lam[j] == 0:
            break
        for t in range(j + 1, k):
            mu = list(lam)
            mu[j] -= 1
            mu[t] += 1
            if any(mu[i] < mu[i + 1] for i in range(k - 1)):
                continue
            if t == j + 1:
                out.add((tuple(mu), RULE_ADJACENT))
            if mu[j] == mu[t]:
                out.add((tuple(mu), RULE_EQUAL_PARTS))
    return out


def _single_move(lam: Sequence[int], mu: Sequence[int]):
    """The (j, k) unit move turning mu into lam, or None.

    Requires equal lengths, equal sums, both non-increasing, and exactly
    two differing positions j < k with lam_j = mu_j + 1, lam_k = mu_k - 1.
    """
    if len(lam) != len(mu) or sum(lam) != sum(mu):
        return None
    diff = [t for t in range(len(lam)) if lam[t] != mu[t]]
    if len(diff) != 2:
        return None
    j, k = diff
    if lam[j] == mu[j] + 1 and lam[k] == mu[k] - 1:
        return j, k
    return None


def _is_partition(parts: Sequence[int]) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)) and all(
        p >= 0 for p in parts
    )


def covers_rule1(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam covers mu by an adjacent-position unit move (k = j+1)."""
    if not (_is_partition(lam) and _is_partition(mu)):
        return False
    move = _single_move(tuple(lam), tuple(mu))
    return move is not None and move[1] == move[0] + 1


def covers_rule2(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam covers mu by a unit move between equal parts of mu."""
    if not (_is_partition(lam) and _is_partition(mu)):
        return False
    lam = tuple(lam)
    mu = tuple(mu)
    move = _single_move(lam, mu)
    return move is not None and mu[move[0]] == mu[move[1]]


@lru_cache(maxsize=None)
def count_partitions(n: int, k: int, bound: int) -> int:
    """Partitions of n into at most k parts, each at most bound.

    Symmetric in (k, bound) by conjugation.
    """
    if n < 0 or k < 0 or bound < 0:
        raise DomainError("arguments must be nonnegative")
    if n == 0:
        return 1
    if k == 0 or bound == 0:
        return 0
    total = count_partitions(n, k, bound - 1)
    if n >= bound:
        total += count_partitions(n - bound, k - 1, bound)
    return total


def bounded_partitions(
    n: int, k: int, bound: int
) -> Iterator[tuple[int, ...]]:
    """Generate the partitions of n into exactly k parts (zeros allowed),
    each at most bound, largest part first."""
    if n < 0 or k < 0 or bound < 0:
        raise DomainError("arguments must be nonnegative")

    def rec(remaining: int, slots: int, cap: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        lo = -(-remaining // slots)  # ceil: keep non-increasing feasible
        for first in range(min(cap, remaining), lo - 1, -1):
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest

    yield from rec(n, k, bound)


@dataclass(frozen=True)
class CoverVerdict:
    """Cross-check record tying word steps to partition covers.

    For words u, v it holds that u steps to v with an a-gap exactly when
    part_p(v) covers part_p(u) by rule 1, exactly when part_s(u) covers
    part_s(v) by rule 2; the b-gap step swaps the two rules.
    """

    rewrite_a: bool
    rewrite_b: bool
    prefix_rule1: bool
    prefix_rule2: bool
    suffix_rule1: bool
    suffix_rule2: bool

    @property
    def consistent(self) -> bool:
        return (
            self.rewrite_a == self.prefix_rule1 == self.suffix_rule2
            and self.rewrite_b == self.prefix_rule2 == self.suffix_rule1
        )


def check_cover_correspondence(u, v) -> CoverVerdict:
    """Evaluate all six step/cover predicates for the ordered pair (u, v)."""
    u = _binary_word(u)
    v = _binary_word(v)
    pu, pv = part_p(u), part_p(v)
    su, sv = part_s(u), part_s(v)
    same_shape = len(u) == len(v) and len(pu) == len(pv) and sum(pu) == sum(pv)
    return CoverVerdict(
        rewrite_a=is_rewrite_a(u, v),
        rewrite_b=is_rewrite_b(u, v),
        prefix_rule1=same_shape and covers_rule1(pv, pu),
        prefix_rule2=same_shape and covers_rule2(pv, pu),
        suffix_rule1=same_shape and covers_rule1(su, sv),
        suffix_rule2=same_shape and covers_rule2(su, sv),
    )
