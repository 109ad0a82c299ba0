"""Scattered-subword combinatorics of binary words.

Subword occurrence counts and their grid-area reading, 2-binomial
equivalence with canonical class representatives and minimal rewriting
derivations, the lattice of an equivalence class and its isomorphism
with bounded integer-partition lattices under dominance, and the theory
of fair words (equal counts of ab and ba): counting, exact least-squares
characterization, fair factorization lengths, and balanced palindromic
constructions.
"""

from .errors import DomainError, ResourceError
from .words import (
    Alphabet,
    GridPoint,
    Word,
    apply_morphism,
    binom,
    count_letter,
    exchange_letters,
    is_balanced,
    is_palindrome,
    left_set,
    mirror,
    project,
    right_set,
    sum_positions,
    thue_morse_prefix,
)
from .matrices import (
    ParikhMatrix,
    PrecedenceMatrix,
    circ,
    equivalent_2binomial,
    parikh_matrix,
    parikh_vector,
    parmat_product,
    precedence_matrix,
)
from .equivalence import (
    ClassSignature,
    Derivation,
    PsiDecomposition,
    class_count,
    distance,
    final_word,
    init_word,
    is_singleton_class,
    minimal_derivation,
    psi_decomposition,
    rewrite_predecessors,
    rewrite_successors,
    signature_of,
    spa_successors,
)
from .partitions import (
    CoverVerdict,
    brylawski_covers,
    bounded_partitions,
    check_cover_correspondence,
    conjugate,
    count_partitions,
    dominance_leq,
    part_p,
    part_s,
    strip_zeros,
    word_from_partition,
)
from .lattice import (
    ClassGraph,
    cover_graph,
    enumerate_class,
    join,
    meet,
    verify_lattice,
)
from .fair import (
    FairAnalysis,
    analyze,
    construct_balanced_fair,
    delta,
    deltas,
    fair_asymptotic_ratio,
    fair_count,
    fair_factor_census,
    fair_iff_init_palindrome,
    fair_iff_reverse_sum,
    fair_length,
    is_fair,
    least_squares_fit,
    palindromic_length,
    syntactic_fair_equivalent,
    thue_morse_fair_length_audit,
)
from .render import (
    render_class_dot,
    render_diagonal,
    render_ferrers,
    render_line,
)

__version__ = "0.1.0"
