"""Letter-count vectors and the matrix stores of short subword counts.

Two equivalent stores are provided for the counts of subwords of length
at most 2.  The precedence matrix of a word over a k-letter alphabet is
the k x k integer matrix with letter counts on the diagonal and
``binom(w, xy)`` at the (x, y) off-diagonal entry; it composes letter by
letter under the ``circ`` product.  The (k+1) x (k+1) upper-triangular
Parikh matrix stores the counts of the contiguous alphabet runs
``a_i a_{i+1} ... a_{j-1}`` and composes under ordinary matrix product.

Two words over the same alphabet have equal counts for every subword of
length <= 2 exactly when their precedence matrices coincide; on the
binary alphabet this is further equivalent to having the same letter
counts and the same sum of positions of ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .words import Alphabet, Word, binom, sum_positions

__all__ = [
    "ParikhVector",
    "parikh_vector",
    "PrecedenceMatrix",
    "precedence_matrix",
    "circ",
    "ParikhMatrix",
    "parikh_matrix",
    "parmat_product",
    "equivalent_2binomial",
]

ParikhVector = tuple  # counts per letter, in alphabet order

_BINARY = Alphabet.binary()


def parikh_vector(w) -> tuple[int, ...]:
    """Occurrence count of each letter, in alphabet order."""
    w = Word(w)
    return tuple(str.count(w, ch) for ch in w.alphabet)


@dataclass(frozen=True)
class PrecedenceMatrix:
    """k x k store of letter counts (diagonal) and pair counts binom(w, xy).

    With ``upper_only`` the sub-diagonal entries are zeroed; the upper
    triangle still determines the lower one through
    binom(w, xy) + binom(w, yx) = |w|_x * |w|_y.
    """

    alphabet: Alphabet
    rows: tuple[tuple[int, ...], ...]
    upper_only: bool = False

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def as_dict(self) -> dict:
        return {
            "alphabet": "".join(self.alphabet.letters),
            "rows": [list(row) for row in self.rows],
            "upper_only": self.upper_only,
        }


def precedence_matrix(w, upper_only: bool = False) -> PrecedenceMatrix:
    """Precedence matrix of a word, entries computed from subword counts."""
    w = Word(w)
    letters = w.alphabet.letters
    rows = []
    for i, x in enumerate(letters):
        row = []
        for j, y in enumerate(letters):
            if i == j:
                row.append(str.count(w, x))
            elif upper_only and i > j:
                row.append(0)
            else:
                row.append(binom(w, x + y))
        rows.append(tuple(row))
    return PrecedenceMatrix(w.alphabet, tuple(rows), upper_only)


def circ(a: PrecedenceMatrix, b: PrecedenceMatrix) -> PrecedenceMatrix:
    """Letterwise product of precedence matrices.

    Diagonals add; each off-diagonal entry gains the cross term
    a_ii * b_jj (new pairs straddling the concatenation point).
    """
    if a.alphabet != b.alphabet:
        raise DomainError("circ needs matrices over one alphabet")
    if a.upper_only != b.upper_only:
        raise DomainError("circ cannot mix full and upper-only matrices")
    k = len(a.alphabet)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            if i == j:
                row.append(a.rows[i][i] + b.rows[i][i])
            elif a.upper_only and i > j:
                row.append(0)
            else:
                row.append(a.rows[i][j] + b.rows[i][j] + a.rows[i][i] * b.rows[j][j])
        rows.append(tuple(row))
    return PrecedenceMatrix(a.alphabet, tuple(rows), a.upper_only)


@dataclass(frozen=True)
class ParikhMatrix:
    """(k+1) x (k+1) unit upper-triangular store of alphabet-run counts."""

    alphabet: Alphabet
    rows: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def as_dict(self) -> dict:
        return {
            "alphabet": "".join(self.alphabet.letters),
            "rows": [list(row) for row in self.rows],
        }


def parikh_matrix(w) -> ParikhMatrix:
    """Parikh matrix of a word.

    Entry (i, j) with i < j holds binom(w, a_i a_{i+1} ... a_{j-1});
    the diagonal is 1 and everything below is 0.  For a binary word the
    top row reads (1, |w|_a, binom(w, ab)).
    """
    w = Word(w)
    letters = w.alphabet.letters
    k = len(letters)
    rows = []
    for i in range(k + 1):
        row = []
        for j in range(k + 1):
            if i == j:
                row.append(1)
            elif i > j:
                row.append(0)
            else:
                row.append(binom(w, "".join(letters[i:j])))
        rows.append(tuple(row))
    return ParikhMatrix(w.alphabet, tuple(rows))


def parmat_product(a: ParikhMatrix, b: ParikhMatrix) -> ParikhMatrix:
    """Ordinary matrix product of Parikh matrices."""
    if a.alphabet != b.alphabet:
        raise DomainError("product needs matrices over one alphabet")
    size = len(a.rows)
    rows = tuple(
        tuple(sum(a.rows[i][t] * b.rows[t][j] for t in range(size)) for j in range(size))
        for i in range(size)
    )
    return ParikhMatrix(a.alphabet, rows)


def equivalent_2binomial(u, v) -> bool:
    """Whether two words agree on every subword count of length <= 2.

    Decided by comparing precedence matrices.  On the binary alphabet
    the equivalent letter-counts + sum-of-b-positions criterion is
    asserted to agree.
    """
    u = Word(u)
    v = Word(v)
    if u.alphabet != v.alphabet:
        raise DomainError("words must share one alphabet")
    same = precedence_matrix(u) == precedence_matrix(v)
    if u.alphabet == _BINARY:
        by_sums = parikh_vector(u) == parikh_vector(v) and sum_positions(
            u, "b"
        ) == sum_positions(v, "b")
        assert same == by_sums
    return same
