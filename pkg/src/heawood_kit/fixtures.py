"""Hand-verified complexes shipped with the package.

The genus-3 triangulation lives in a plain-text facet list (one facet per
line, comma-separated labels) so transcription errors fail loudly against
the count checks here and in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .quotient import NotSimplicial, SimplicialComplex, dual_graph
from .symmetry import brute_force_automorphisms

KLEIN_VERTEX_COUNT = 24
KLEIN_FACET_COUNT = 56


@dataclass(frozen=True)
class NamedComplexFixture:
    name: str
    labels: tuple[str, ...]
    facets: tuple[tuple[str, ...], ...]


def complex_from_facets(
    labels: Sequence, facets: Sequence[Sequence]
) -> SimplicialComplex:
    """Validated complex from labeled facets."""
    labels = tuple(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    if len(index) != len(labels):
        raise NotSimplicial("duplicate vertex labels")
    width = len(facets[0]) if facets else 0
    translated = []
    for pos, facet in enumerate(facets):
        if len(facet) != width:
            raise NotSimplicial(f"facet {pos} has mixed dimension")
        try:
            translated.append(tuple(sorted(index[lab] for lab in facet)))
        except KeyError as exc:
            raise NotSimplicial(f"facet {pos} uses unknown label {exc}") from None
    complex_ = SimplicialComplex(
        vertex_count=len(labels),
        facets=tuple(translated),
        vertex_labels=labels,
    )
    complex_.validate()
    return complex_


def load_fixture(name: str) -> NamedComplexFixture:
    text = (
        resources.files("heawood_kit.data").joinpath(f"{name}.txt").read_text()
    )
    facets = tuple(
        tuple(part.strip() for part in line.split(","))
        for line in text.splitlines()
        if line.strip()
    )
    labels = tuple(sorted({lab for facet in facets for lab in facet}))
    return NamedComplexFixture(name=name, labels=labels, facets=facets)


def klein_quartic() -> SimplicialComplex:
    """The 24-vertex, 56-facet genus-3 surface."""
    fixture = load_fixture("klein_quartic")
    if len(fixture.labels) != KLEIN_VERTEX_COUNT:
        raise NotSimplicial("fixture label count drifted")
    if len(fixture.facets) != KLEIN_FACET_COUNT:
        raise NotSimplicial("fixture facet count drifted")
    return complex_from_facets(fixture.labels, fixture.facets)


def simplicial_automorphism_order(c: SimplicialComplex) -> int:
    """Order of the facet-preserving vertex permutation group.

    Every simplicial automorphism is a 1-skeleton automorphism, so the
    skeleton group is enumerated and filtered to the permutations that
    send facets to facets.
    """
    from .quotient import skeleton_graph

    skeleton = skeleton_graph(c)
    group = brute_force_automorphisms(skeleton, cap=c.vertex_count)
    facet_set = set(c.facets)
    count = 0
    for perm in group.elements:
        if all(
            tuple(sorted(perm.images[v] for v in facet)) in facet_set
            for facet in c.facets
        ):
            count += 1
    return count


def klein_quartic_aut_order() -> dict[str, int]:
    """Simplicial and dual-graph automorphism orders of the fixture."""
    c = klein_quartic()
    dual = dual_graph(c)
    dual_order = brute_force_automorphisms(dual, cap=len(c.facets)).order
    return {
        "simplicial": simplicial_automorphism_order(c),
        "dual_graph": dual_order,
    }
