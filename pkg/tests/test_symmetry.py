from functools import lru_cache

import pytest

from heawood_kit.lattice import KSignature
from heawood_kit.quotient import QuotientGraph, build_heawood_graph
from heawood_kit.symmetry import (
    CapExceeded,
    NotAnAutomorphism,
    VertexPermutation,
    admitted_cyclic_order,
    brute_force_automorphisms,
    cyclic_C,
    generated_group,
    group_closure,
    orbit,
    rotation_R,
    translation_generators,
    verify_exceptional_W,
)


@lru_cache(maxsize=None)
def graph(entries):
    return build_heawood_graph(KSignature(entries))


def cycle_graph(n):
    labels = tuple((i,) for i in range(n))
    adjacency = tuple(
        tuple(sorted(((i - 1) % n, (i + 1) % n))) for i in range(n)
    )
    return QuotientGraph(d=1, labels=labels, adjacency=adjacency)


def test_translation_generators():
    g = graph((1, 1, 1))
    gens = translation_generators(g)
    assert len(gens) == 2
    t_group = group_closure(gens)
    assert t_group.order == 7
    assert len(orbit(t_group, 0)) == 7

    g = graph((2, 3, 2))
    assert group_closure(translation_generators(g)).order == 24


def test_translation_by_all_w_is_identity():
    g = graph((1, 1, 1))
    gens = translation_generators(g)
    # composing shifts along w_1 and w_2 with the inverse of both is trivial
    combined = gens[0] * gens[1]
    inv = combined.inverse()
    assert (combined * inv).images == tuple(range(g.vertex_count))


def test_rotation_R():
    g = graph((1, 1, 1))
    r = rotation_R(g)
    assert (r * r).images == tuple(range(g.vertex_count))
    assert r.images[g.index[g.key_of((1, 2, 3))]] == g.index[g.key_of((3, 2, 1))]
    for entries in [(2, 1, 2), (1, 3, 2), (2, 2, 2)]:
        rotation_R(graph(entries))  # adjacency verified on construction


def test_cyclic_C_admission():
    g = graph((2, 1, 2, 1))
    cyclic_C(g, 2)
    with pytest.raises(NotAnAutomorphism):
        cyclic_C(g, 1)
    assert admitted_cyclic_order(KSignature((2, 1, 2, 1))) == 2
    assert admitted_cyclic_order(
        KSignature((2, 3, 4, 3, 2, 3, 4, 3, 2, 3, 4, 3))
    ) == 3
    assert admitted_cyclic_order(KSignature((2, 2, 2))) == 3
    for s in range(1, 4):
        cyclic_C(graph((2, 2, 2)), s)


def test_group_closure_examples():
    assert group_closure([VertexPermutation.identity(5)]).order == 1
    assert generated_group(graph((2, 2, 2))).order == 114
    assert generated_group(graph((1, 1, 1))).order == 42


def test_group_closure_cap():
    g = graph((2, 2, 2))
    with pytest.raises(CapExceeded):
        generated = generated_group(g).generators
        group_closure(generated, cap=10)


def test_brute_force_small_cases():
    assert brute_force_automorphisms(cycle_graph(6)).order == 12
    assert brute_force_automorphisms(graph((1, 1, 1))).order == 336
    assert brute_force_automorphisms(graph((2, 2, 2))).order == 114


def test_brute_force_agrees_with_generated_constant_k():
    for entries in [(2, 2, 2), (1, 2, 1), (2, 1, 2)]:
        g = graph(entries)
        brute = brute_force_automorphisms(g)
        generated = generated_group(g)
        if entries == (2, 2, 2):
            assert brute.order == generated.order
        expected = 2 * admitted_cyclic_order(KSignature(entries)) * KSignature(
            entries
        ).order()
        assert brute.order == expected
        assert generated.order == expected


def test_brute_force_transitive():
    for entries in [(1, 1, 1), (2, 1, 2)]:
        g = graph(entries)
        group = brute_force_automorphisms(g)
        assert len(orbit(group, 0)) == g.vertex_count


def test_brute_force_cap():
    with pytest.raises(CapExceeded):
        brute_force_automorphisms(graph((2, 2, 2)), cap=10)


def test_generators_preserve_adjacency():
    g = graph((1, 2, 1))
    from heawood_kit.symmetry import is_automorphism

    for gen in translation_generators(g) + [rotation_R(g)]:
        assert is_automorphism(g, gen.images)


def test_exceptional_W():
    assert verify_exceptional_W(graph((1, 1, 1)))
    assert not verify_exceptional_W(graph((1, 2, 1)))
    g = graph((1, 1, 1))
    from heawood_kit.symmetry import is_automorphism

    assert is_automorphism(g, tuple(range(g.vertex_count)))
