"""Graph analyses: bipartiteness, cycle census, Hamiltonicity, coloring.

The alternating walk alternates the two unit-step moves attached to a
coordinate index; premature closure at the seed is the interesting failure
mode.  Chromatic numbers are exact via DSATUR bounds plus backtracking.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import isqrt
from typing import Optional, Sequence

from .lattice import KSignature
from .quotient import QuotientGraph, build_heawood_graph, vertex_key

DEFAULT_CHROMATIC_CAP = 60
DEFAULT_HAMILTONIAN_BUDGET = 10**6


class CapExceeded(RuntimeError):
    """An exact analysis was requested above its configured cap."""


def _cap(default: int) -> int:
    value = os.environ.get("HEAWOOD_CAP")
    return int(value) if value else default


@dataclass(frozen=True)
class BipartiteReport:
    bipartite: bool
    coloring: Optional[tuple[int, ...]] = None
    odd_cycle: Optional[tuple[int, ...]] = None


def is_bipartite(g: QuotientGraph) -> BipartiteReport:
    """Two-color by BFS; return the coloring or an odd closed walk."""
    n = g.vertex_count
    color = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in g.adjacency[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    # walk both endpoints up to the root; the joined paths
                    # close an odd cycle through their meeting point
                    up_v, up_w = [v], [w]
                    while up_v[-1] != root:
                        up_v.append(parent[up_v[-1]])
                    while up_w[-1] != root:
                        up_w.append(parent[up_w[-1]])
                    while len(up_v) > 1 and len(up_w) > 1 and up_v[-2] == up_w[-2]:
                        up_v.pop()
                        up_w.pop()
                    cycle = up_v + up_w[-2::-1]
                    return BipartiteReport(False, odd_cycle=tuple(cycle))
    return BipartiteReport(True, coloring=tuple(color))


@dataclass(frozen=True)
class CycleReport:
    length: int
    vertices: tuple[int, ...]
    classification: str


def six_cycles_through(g: QuotientGraph, v: int) -> list[CycleReport]:
    """All simple 6-cycles through v, one per rotation/reflection class."""
    seen = set()
    out = []
    adj = [set(nbrs) for nbrs in g.adjacency]

    def extend(path: list[int]) -> None:
        if len(path) == 6:
            if path[0] in adj[path[-1]]:
                canon = _canonical_cycle(path)
                if canon not in seen:
                    seen.add(canon)
                    out.append(
                        CycleReport(6, tuple(path), _classify_cycle(g, path))
                    )
            return
        for w in g.adjacency[path[-1]]:
            if w not in path:
                path.append(w)
                extend(path)
                path.pop()

    extend([v])
    return out


def _canonical_cycle(path: Sequence[int]) -> tuple[int, ...]:
    n = len(path)
    best = None
    for seq in (list(path), list(reversed(path))):
        for r in range(n):
            cand = tuple(seq[r:] + seq[:r])
            if best is None or cand < best:
                best = cand
    assert best is not None
    return best


def _classify_cycle(g: QuotientGraph, path: Sequence[int]) -> str:
    if len(path) == 6:
        return "hexagon-face-candidate"
    if len(path) == 4:
        return "square-face-candidate"
    return "other"


@dataclass(frozen=True)
class HamiltonianWalkResult:
    mode: str
    outcome: str
    length: int
    cycle: Optional[tuple[int, ...]] = None
    vertices: Optional[int] = None


def hamiltonian_alternating(k: KSignature, i: int) -> HamiltonianWalkResult:
    """Walk from the seed alternating the two moves attached to index i.

    The even steps add e_i - e_{i+1}, the odd steps e_i - e_{i-1}, indices
    cyclic and 1-based.  Each step is asserted to be a graph edge.  The
    deterministic walk has unique predecessors, so the first revisited
    state is the start; the walk is Hamiltonian exactly when that happens
    after one step per vertex.
    """
    g = build_heawood_graph(k)
    n = k.n
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range")
    plus = i - 1  # coordinate gaining a unit on even steps
    minus_even = i % n  # e_i - e_{i+1}
    minus_odd = (i - 2) % n  # e_i - e_{i-1}

    seed = g.key_of(tuple(range(1, n + 1)))
    seed_idx = g.index[seed]
    current = seed
    cycle = [seed_idx]
    parity = 0
    while True:
        step = list(current)
        step[plus] += 1
        step[minus_even if parity == 0 else minus_odd] -= 1
        nxt = g.key_of(tuple(step))
        assert g.index[nxt] in g.adjacency[g.index[current]], "walk left the graph"
        parity ^= 1
        current = nxt
        if current == seed and parity == 0:
            break
        cycle.append(g.index[current])
        if len(cycle) > 2 * g.vertex_count + 2:
            raise AssertionError("walk failed to close")
    distinct = len(set(cycle))
    if distinct == g.vertex_count and len(cycle) == g.vertex_count:
        return HamiltonianWalkResult(
            mode=f"alternating({i})",
            outcome="hamiltonian-cycle",
            length=len(cycle),
            cycle=tuple(cycle),
            vertices=g.vertex_count,
        )
    return HamiltonianWalkResult(
        mode=f"alternating({i})",
        outcome="premature-closure",
        length=len(cycle),
        cycle=tuple(cycle),
        vertices=g.vertex_count,
    )


def hamiltonian_backtracking(
    g: QuotientGraph, budget: Optional[int] = None
) -> HamiltonianWalkResult:
    """Exhaustive cycle search with a node budget.

    Outcome none-found is a proof only when the search space was exhausted
    within budget; otherwise the result is flagged indeterminate.
    """
    limit = budget if budget is not None else _cap(DEFAULT_HAMILTONIAN_BUDGET)
    n = g.vertex_count
    if n == 0:
        return HamiltonianWalkResult("general-backtracking", "none-found", 0)
    expanded = 0
    path = [0]
    on_path = [False] * n
    on_path[0] = True

    def search() -> Optional[list[int]]:
        nonlocal expanded
        expanded += 1
        if expanded > limit:
            raise CapExceeded("node budget exhausted")
        v = path[-1]
        if len(path) == n:
            return list(path) if 0 in g.adjacency[v] else None
        for w in g.adjacency[v]:
            if not on_path[w]:
                path.append(w)
                on_path[w] = True
                hit = search()
                if hit is not None:
                    return hit
                path.pop()
                on_path[w] = False
        return None

    try:
        cycle = search()
    except CapExceeded:
        return HamiltonianWalkResult(
            "general-backtracking", "indeterminate", 0, vertices=n
        )
    if cycle is None:
        return HamiltonianWalkResult(
            "general-backtracking", "none-found", 0, vertices=n
        )
    _validate_cycle(g, cycle)
    return HamiltonianWalkResult(
        "general-backtracking",
        "hamiltonian-cycle",
        len(cycle),
        cycle=tuple(cycle),
        vertices=n,
    )


def _validate_cycle(g: QuotientGraph, cycle: Sequence[int]) -> None:
    assert len(set(cycle)) == len(cycle) == g.vertex_count
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        assert b in g.adjacency[a], "cycle uses a non-edge"


def greedy_clique(g: QuotientGraph) -> list[int]:
    """Greedy clique for a chromatic lower bound."""
    best: list[int] = []
    degrees = sorted(range(g.vertex_count), key=lambda v: -len(g.adjacency[v]))
    for start in degrees[: min(g.vertex_count, 30)]:
        clique = [start]
        candidates = set(g.adjacency[start])
        while candidates:
            v = max(candidates, key=lambda u: len(candidates & set(g.adjacency[u])))
            clique.append(v)
            candidates &= set(g.adjacency[v])
        if len(clique) > len(best):
            best = clique
    return best


def dsatur_coloring(g: QuotientGraph) -> tuple[int, ...]:
    """Greedy coloring by descending saturation; an upper bound witness."""
    n = g.vertex_count
    color = [-1] * n
    saturation: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (len(saturation[u]), len(g.adjacency[u])),
        )
        c = 0
        while c in saturation[v]:
            c += 1
        color[v] = c
        for w in g.adjacency[v]:
            saturation[w].add(c)
    return tuple(color)


def _colorable(g: QuotientGraph, t: int) -> bool:
    """Backtracking t-colorability, most-constrained vertex first."""
    n = g.vertex_count
    color = [-1] * n
    forbidden: list[set[int]] = [set() for _ in range(n)]

    def step(assigned: int) -> bool:
        if assigned == n:
            return True
        v = max(
            (u for u in range(n) if color[u] < 0),
            key=lambda u: (len(forbidden[u]), len(g.adjacency[u])),
        )
        if len(forbidden[v]) >= t:
            return False
        # cap the palette at one fresh color to break color symmetry
        fresh_used = False
        max_seen = max((color[u] for u in range(n) if color[u] >= 0), default=-1)
        for c in range(min(t, max_seen + 2)):
            if c in forbidden[v]:
                continue
            if c > max_seen:
                if fresh_used:
                    break
                fresh_used = True
            color[v] = c
            touched = []
            for w in g.adjacency[v]:
                if color[w] < 0 and c not in forbidden[w]:
                    forbidden[w].add(c)
                    touched.append(w)
            if step(assigned + 1):
                return True
            color[v] = -1
            for w in touched:
                forbidden[w].discard(c)
        return False

    return step(0)


def chromatic_number(g: QuotientGraph, cap: Optional[int] = None) -> int:
    """Exact chromatic number for graphs within the vertex cap."""
    limit = cap if cap is not None else _cap(DEFAULT_CHROMATIC_CAP)
    if g.vertex_count > limit:
        raise CapExceeded(
            f"vertex count {g.vertex_count} above chromatic cap {limit}"
        )
    if g.vertex_count == 0:
        return 0
    if g.edge_count == 0:
        return 1
    lower = max(2, len(greedy_clique(g)))
    upper = max(dsatur_coloring(g)) + 1
    for t in range(lower, upper):
        if _colorable(g, t):
            return t
    return upper


def heawood_number(p: int) -> int:
    """Map-coloring bound for the orientable genus-p surface, all-integer."""
    if p < 0:
        raise ValueError("genus must be nonnegative")
    return (7 + isqrt(1 + 48 * p)) // 2
