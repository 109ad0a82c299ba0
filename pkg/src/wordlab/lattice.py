"""Enumerating an equivalence class and its lattice structure.

The class of a binary word, ordered by reachability under the ab/ba
switching relation, is a lattice running from its least member (no ba
before an ab) to its greatest (no ab before a ba).  Mapping each member
w to part_p(w) is an order isomorphism onto the partitions of
binom(w, ab) into at most |w|_b parts bounded by |w|_a under dominance,
and it carries the single-letter-gap steps onto the dominance covers.

Meets take componentwise minima of the prefix sums of part_p; joins go
through the conjugate partitions (componentwise maxima can leave the
lattice, the conjugate route never does).
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .equivalence import (
    ClassSignature,
    _coerce_signature,
    final_word,
    init_word,
    rewrite_successors,
    signature_of,
    spa_successors,
)
from .errors import DomainError, ResourceError
from .partitions import (
    bounded_partitions,
    brylawski_covers,
    conjugate,
    count_partitions,
    part_p,
    word_from_partition,
)
from .words import Word, _binary_word

__all__ = [
    "DEFAULT_BUDGET",
    "ClassGraph",
    "enumerate_class",
    "cover_graph",
    "meet",
    "join",
    "verify_lattice",
]

DEFAULT_BUDGET = 10**6
_BUDGET_ENV = "WORDLAB_BUDGET"


def _budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(_BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class ClassGraph:
    """A full equivalence class with its step edges.

    ``relation`` is "spa" for the single-letter-gap (cover) steps or
    "full" for all one-step switches.  Nodes and edges are sorted
    lexicographically; the unique source is the least class member and
    the unique sink the greatest.
    """

    signature: ClassSignature
    relation: str
    nodes: tuple[Word, ...]
    edges: tuple[tuple[Word, Word], ...]

    def as_dict(self) -> dict:
        return {
            "signature": {
                "na": self.signature.na,
                "nb": self.signature.nb,
                "m": self.signature.m,
            },
            "relation": self.relation,
            "nodes": [str(w) for w in self.nodes],
            "edges": [[str(u), str(v)] for u, v in self.edges],
        }


def enumerate_class(sig, budget: int | None = None) -> tuple[Word, ...]:
    """All words with the given signature, sorted lexicographically.

    Breadth-first closure of the single-letter-gap steps from the least
    member; the class size (a bounded-partition count) is checked
    against the node budget first.
    """
    sig = _coerce_signature(sig)
    limit = _budget(budget)
    expected = count_partitions(sig.m, sig.nb, sig.na)
    if expected > limit:
        raise ResourceError(
            f"class of {sig} has {expected} members, over the budget {limit}"
        )
    start = init_word(sig)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt in spa_successors(w):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return tuple(sorted(seen))


def cover_graph(sig, relation: str = "spa", budget: int | None = None) -> ClassGraph:
    """The class with its "spa" cover edges or its "full" step edges."""
    if relation not in ("spa", "full"):
        raise DomainError(f"unknown relation {relation!r}")
    sig = _coerce_signature(sig)
    nodes = enumerate_class(sig, budget)
    successors = spa_successors if relation == "spa" else rewrite_successors
    edges = sorted((u, v) for u in nodes for v in successors(u))
    return ClassGraph(sig, relation, nodes, tuple(edges))


def _prefix_sums(parts) -> list[int]:
    total = 0
    out = []
    for p in parts:
        total += p
        out.append(total)
    return out


def _from_sums(sums) -> tuple[int, ...]:
    out = []
    prev = 0
    for s in sums:
        out.append(s - prev)
        prev = s
    return tuple(out)


def meet(u, v) -> Word:
    """Greatest common lower bound of two equivalent words.

    Componentwise minimum of the prefix sums of the two part_p images,
    pulled back through word_from_partition.
    """
    u = _binary_word(u)
    v = _binary_word(v)
    sig = signature_of(u)
    if sig != signature_of(v):
        raise DomainError("words are not 2-binomially equivalent")
    sums = [min(x, y) for x, y in zip(_prefix_sums(part_p(u)), _prefix_sums(part_p(v)))]
    return word_from_partition(_from_sums(sums), sig.nb, sig.na)


def join(u, v) -> Word:
    """Least common upper bound of two equivalent words.

    Computed as the conjugate of the meet of the conjugate partitions;
    taking componentwise maxima of prefix sums directly can fall outside
    the partition lattice.
    """
    u = _binary_word(u)
    v = _binary_word(v)
    sig = signature_of(u)
    if sig != signature_of(v):
        raise DomainError("words are not 2-binomially equivalent")
    cu = conjugate(part_p(u), sig.na)
    cv = conjugate(part_p(v), sig.na)
    sums = [min(x, y) for x, y in zip(_prefix_sums(cu), _prefix_sums(cv))]
    lam = conjugate(_from_sums(sums), sig.nb)
    return word_from_partition(lam, sig.nb, sig.na)


def verify_lattice(sig, budget: int | None = None) -> bool:
    """Exhaustively confirm the lattice structure of one class.

    Checks, against brute-force reachability over the cover edges, that
    every pair of members has a unique greatest lower and least upper
    bound agreeing with meet()/join(), that the class is in bijection
    with the bounded partitions through part_p, and that the cover edges
    map exactly onto the dominance covers.  O(V^3) in the class size;
    the node budget guards V.
    """
    sig = _coerce_signature(sig)
    graph = cover_graph(sig, "spa", budget)
    nodes = list(graph.nodes)
    count = len(nodes)
    if count != count_partitions(sig.m, sig.nb, sig.na):
        return False

    images = {w: part_p(w) for w in nodes}
    wanted = set(bounded_partitions(sig.m, sig.nb, sig.na))
    if set(images.values()) != wanted or len(set(images.values())) != count:
        return False

    edge_images = {(images[u], images[v]) for u, v in graph.edges}
    cover_images = {
        (mu, lam)
        for lam in wanted
        for mu, _rule in brylawski_covers(lam)
        if mu in wanted
    }
    if edge_images != cover_images:
        return False

    index = {w: t for t, w in enumerate(nodes)}
    below = [1 << t for t in range(count)]  # reflexive reachability bitsets
    # propagate along edges until stable (the graph is tiny and acyclic)
    changed = True
    while changed:
        changed = False
        for u, v in graph.edges:
            iu, iv = index[u], index[v]
            merged = below[iv] | below[iu]
            if merged != below[iv]:
                below[iv] = merged
                changed = True

    for s in range(count):
        for t in range(s, count):
            lower = [x for x in range(count) if below[s] >> x & 1 and below[t] >> x & 1]
            greatest = [x for x in lower if all(below[x] >> y & 1 for y in lower)]
            if len(greatest) != 1 or nodes[greatest[0]] != meet(nodes[s], nodes[t]):
                return False
            upper = [
                x for x in range(count) if below[x] >> s & 1 and below[x] >> t & 1
            ]
            least = [x for x in upper if all(below[y] >> x & 1 for y in upper)]
            if len(least) != 1 or nodes[least[0]] != join(nodes[s], nodes[t]):
                return False

    return nodes[0] == init_word(sig) and nodes[-1] == final_word(sig)
