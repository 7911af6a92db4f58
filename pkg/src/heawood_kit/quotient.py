"""Finite quotients of the tiling: graphs, torus complexes, f-vectors.

The graph of a signature k is the tiling graph modulo the sublattice of k.
Its dual object is a triangulated torus whose vertices are the lattice
classes and whose facets correspond one-to-one with graph vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial
from typing import Callable, Optional, Sequence

from .intlin import IntMatrix
from .lattice import (
    KSignature,
    class_canonicalizer,
    enumerate_fundamental,
    from_ambient,
    quotient_order_general,
    reduce_to_fundamental,
    to_ambient,
)
from .tiling import base_permutation, neighbors, tiles_containing

VertexKey = tuple[int, ...]


class NotSimplicial(ValueError):
    """A facet repeats a vertex or a facet list repeats a facet."""


def _key_with_reducer(
    x: Sequence[int], reduce_class: Callable[[tuple[int, ...]], tuple[int, ...]]
) -> VertexKey:
    """Canonical coordinates of the class of a tiling vertex.

    For each residue shift there is one way to write x as base permutation
    plus lattice vector; reducing the lattice part and re-embedding gives a
    class invariant.  The minimum over shifts is taken so the key is well
    defined even when the reducer's image is not shift-aligned.
    """
    n = len(x)
    best: Optional[VertexKey] = None
    for c in range(n):
        p = base_permutation(x, c)
        offset = from_ambient(tuple(xa - pa for xa, pa in zip(x, p)))
        rep = reduce_class(offset)
        emb = to_ambient(rep)
        cand = tuple(pa + ea for pa, ea in zip(p, emb))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def vertex_key(x: Sequence[int], k: KSignature) -> VertexKey:
    """Canonical representative coordinates of x modulo the sublattice of k."""
    return _key_with_reducer(tuple(x), lambda a: reduce_to_fundamental(a, k))


@dataclass(frozen=True)
class QuotientGraph:
    """Finite (d+1)-regular graph with stable vertex indexing.

    Vertices are canonical keys sorted lexicographically; labels default to
    the keys but dual graphs reuse the type with facet labels.
    """

    d: int
    labels: tuple[VertexKey, ...]
    adjacency: tuple[tuple[int, ...], ...]
    signature: Optional[KSignature] = None
    general_matrix: Optional[IntMatrix] = None
    index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not self.index:
            object.__setattr__(
                self, "index", {lab: i for i, lab in enumerate(self.labels)}
            )

    @property
    def vertex_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i, nbrs in enumerate(self.adjacency)
            for j in nbrs
            if i < j
        ]

    def key_of(self, x: Sequence[int]) -> VertexKey:
        if self.signature is not None:
            return vertex_key(x, self.signature)
        if self.general_matrix is not None:
            reducer = class_canonicalizer(self.general_matrix)
            return _key_with_reducer(tuple(x), reducer)
        raise ValueError("graph carries no quotient data")


def _bfs_quotient(
    d: int, reduce_class: Callable[[tuple[int, ...]], tuple[int, ...]]
) -> tuple[tuple[VertexKey, ...], tuple[tuple[int, ...], ...]]:
    seed = _key_with_reducer(tuple(range(1, d + 2)), reduce_class)
    adjacency: dict[VertexKey, set[VertexKey]] = {}
    frontier = [seed]
    adjacency[seed] = set()
    while frontier:
        nxt = []
        for key in frontier:
            for nb in neighbors(key):
                nb_key = _key_with_reducer(nb, reduce_class)
                adjacency[key].add(nb_key)
                if nb_key not in adjacency:
                    adjacency[nb_key] = set()
                    nxt.append(nb_key)
        frontier = nxt
    labels = tuple(sorted(adjacency))
    pos = {lab: i for i, lab in enumerate(labels)}
    adj = tuple(
        tuple(sorted(pos[nb] for nb in adjacency[lab])) for lab in labels
    )
    return labels, adj


def build_heawood_graph(k: KSignature) -> QuotientGraph:
    """Quotient graph of a signature, by closure from the seed vertex."""
    labels, adj = _bfs_quotient(k.d, lambda a: reduce_to_fundamental(a, k))
    return QuotientGraph(d=k.d, labels=labels, adjacency=adj, signature=k)


def build_general_quotient(rows: IntMatrix, d: int = 2) -> QuotientGraph:
    """Quotient graph for an arbitrary finite-quotient generator matrix.

    The sublattice is the integer row span plus the all-ones line; vertex
    count comes out as (d+1)!/(d+1) times the quotient order, which for
    d=2 is twice the order.
    """
    if rows.cols != d + 1:
        raise ValueError("matrix width must be d+1")
    quotient_order_general(rows)  # raises when infinite
    reducer = class_canonicalizer(rows)
    labels, adj = _bfs_quotient(d, reducer)
    return QuotientGraph(d=d, labels=labels, adjacency=adj, general_matrix=rows)


@dataclass(frozen=True)
class SimplicialComplex:
    """Pure complex given by facets over integer-indexed vertices."""

    vertex_count: int
    facets: tuple[tuple[int, ...], ...]
    vertex_labels: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.facets[0]) - 1 if self.facets else -1

    def validate(self) -> None:
        seen = set()
        width = len(self.facets[0]) if self.facets else 0
        for idx, facet in enumerate(self.facets):
            if len(facet) != width:
                raise NotSimplicial(f"facet {idx} has mixed dimension")
            if len(set(facet)) != len(facet):
                raise NotSimplicial(f"facet {idx} repeats a vertex")
            if tuple(sorted(facet)) != facet:
                raise NotSimplicial(f"facet {idx} is not sorted")
            if facet in seen:
                raise NotSimplicial(f"facet {idx} duplicates an earlier one")
            seen.add(facet)
            if any(not 0 <= v < self.vertex_count for v in facet):
                raise NotSimplicial(f"facet {idx} references unknown vertex")

    def faces(self, i: int) -> set[tuple[int, ...]]:
        """All i-dimensional faces as sorted vertex tuples."""
        out = set()
        for facet in self.facets:
            out.update(combinations(facet, i + 1))
        return out

    def fvector_enumerated(self) -> tuple[int, ...]:
        return tuple(len(self.faces(i)) for i in range(self.dim + 1))

    def euler_characteristic(self) -> int:
        return sum(
            (-1) ** i * count for i, count in enumerate(self.fvector_enumerated())
        )


def build_torus_complex(k: KSignature) -> SimplicialComplex:
    """Triangulated torus dual to the graph of k.

    Vertices are the fundamental classes; each graph vertex contributes the
    facet of the d+1 tile classes containing it, in graph vertex order so
    the duality bijection is positional.
    """
    if k.delta:
        raise NotSimplicial("zero entries void the simplicial guarantees")
    graph = build_heawood_graph(k)
    classes = enumerate_fundamental(k)
    class_index = {rep: i for i, rep in enumerate(classes)}
    facets = []
    for key in graph.labels:
        tile_reps = [
            reduce_to_fundamental(offset, k) for offset in tiles_containing(key)
        ]
        facet = tuple(sorted(class_index[rep] for rep in tile_reps))
        facets.append(facet)
    complex_ = SimplicialComplex(
        vertex_count=len(classes),
        facets=tuple(facets),
        vertex_labels=tuple(classes),
    )
    complex_.validate()
    return complex_


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind, by the alternating sum."""
    if m > n:
        return 0
    if m == 0:
        return 1 if n == 0 else 0
    total = sum((-1) ** (m - i) * comb(m, i) * i**n for i in range(1, m + 1))
    return total // factorial(m)


def stirling2_recurrence(n: int, m: int) -> int:
    """Independent oracle: S(n,m) = m S(n-1,m) + S(n-1,m-1)."""
    if m > n:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    if m == 0:
        return 0
    return m * stirling2_recurrence(n - 1, m) + stirling2_recurrence(n - 1, m - 1)


def fvector_formula(k: KSignature) -> tuple[int, ...]:
    """Closed-form face counts: f_i = i! S(d+1, i+1) D."""
    d = k.d
    order = k.order()
    return tuple(
        factorial(i) * stirling2(d + 1, i + 1) * order for i in range(d + 1)
    )


def dual_graph(c: SimplicialComplex) -> QuotientGraph:
    """Graph on facets, adjacent when they share a codimension-1 face."""
    ridge_map: dict[tuple[int, ...], list[int]] = {}
    for idx, facet in enumerate(c.facets):
        for ridge in combinations(facet, len(facet) - 1):
            ridge_map.setdefault(ridge, []).append(idx)
    adjacency: list[set[int]] = [set() for _ in c.facets]
    for sharing in ridge_map.values():
        for i, j in combinations(sharing, 2):
            adjacency[i].add(j)
            adjacency[j].add(i)
    return QuotientGraph(
        d=c.dim,
        labels=tuple(c.facets),
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


def skeleton_graph(c: SimplicialComplex) -> QuotientGraph:
    """1-skeleton of a complex as a plain graph on its vertices."""
    adjacency: list[set[int]] = [set() for _ in range(c.vertex_count)]
    for i, j in c.faces(1):
        adjacency[i].add(j)
        adjacency[j].add(i)
    labels = tuple((v,) for v in range(c.vertex_count))
    return QuotientGraph(
        d=1,
        labels=labels,
        adjacency=tuple(tuple(sorted(nbrs)) for nbrs in adjacency),
    )


def euler_characteristic(c: SimplicialComplex) -> int:
    return c.euler_characteristic()
