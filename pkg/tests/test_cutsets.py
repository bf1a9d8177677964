"""Cutset enumeration against the brute-force oracle, and the verdicts."""

import pytest

import bei
from bei import members, vset

from conftest import (
    connected_atlas,
    naive_cutsets,
    naive_is_accessible_system,
    naive_is_unmixed,
)


def test_is_cutset_examples(square_leaves_product):
    assert bei.is_cutset(bei.path_graph(4), 0)
    for n in range(2, 6):
        k = bei.complete_graph(n)
        for v in range(n):
            assert not bei.is_cutset(k, vset([v]))
        assert not bei.is_cutset(k, k.full_mask)
    assert bei.is_cutset(square_leaves_product, vset([0, 2]))
    with pytest.raises(ValueError):
        bei.is_cutset(bei.path_graph(3), vset([5]))


def test_whole_vertex_set_never_a_cutset():
    for g in (bei.path_graph(4), bei.cycle_graph(5), bei.complete_graph(3)):
        assert not bei.is_cutset(g, g.full_mask)


def test_enumerate_frozen_small_families():
    # P3 = a-b-c: only the middle vertex separates
    rep = bei.enumerate_cutsets(bei.path_graph(3))
    assert rep.cutsets == (0, vset([1]))
    # P4: the two middle vertices, one at a time
    rep4 = bei.enumerate_cutsets(bei.path_graph(4))
    assert rep4.cutsets == (0, vset([1]), vset([2]))
    # complete graphs have no nonempty cutset
    assert bei.enumerate_cutsets(bei.complete_graph(4)).cutsets == (0,)


def test_enumerate_matches_naive_on_small_corpus():
    for g in connected_atlas(5):
        assert sorted(m for m, _ in bei.iter_cutsets(g)) == naive_cutsets(g)


def test_enumerate_matches_naive_on_disconnected_graphs():
    for g in (
        bei.Graph(4, [(0, 1), (2, 3)]),
        bei.Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)]),
        bei.Graph(3),
    ):
        assert sorted(m for m, _ in bei.iter_cutsets(g)) == naive_cutsets(g)


def test_report_fields(square_leaves_base):
    rep = bei.enumerate_cutsets(square_leaves_base)
    assert rep.connected and rep.base_components == 1
    assert rep.is_unmixed
    assert rep.cutsets[0] == 0
    assert all(
        w == m.bit_count() + 1 for m, w in zip(rep.cutsets, rep.per_cutset_components)
    )
    assert rep.oracle_dimension == square_leaves_base.n + 1
    js = rep.to_json()
    assert js["unmixedness_definition"] == "standard"
    assert js["cutsets"][0] == []


def test_report_size_cap():
    g = bei.cycle_graph(5)
    full = bei.enumerate_cutsets(g)
    capped = bei.enumerate_cutsets(g, size_cap=1)
    assert capped.cutsets == tuple(m for m in full.cutsets if m.bit_count() <= 1)
    assert capped.size_cap == 1


def test_sorted_by_size_then_lex():
    rep = bei.enumerate_cutsets(bei.cycle_graph(5))
    keys = [(m.bit_count(), members(m)) for m in rep.cutsets]
    assert keys == sorted(keys)


def test_unmixedness_examples(square_leaves_base, square_leaves_product):
    for n in range(1, 6):
        assert bei.is_unmixed(bei.complete_graph(n))
    assert bei.is_unmixed(square_leaves_base)
    assert not bei.is_unmixed(square_leaves_product)
    mask, w = bei.unmixedness_violation(square_leaves_product)
    assert members(mask) == [0, 2] and w == 4


def test_unmixedness_matches_naive_on_corpus():
    for g in connected_atlas(5):
        assert bei.is_unmixed(g) == naive_is_unmixed(g)


def test_disconnected_unmixedness_extension():
    # both parts unmixed: the union satisfies components == |T| + components(G)
    g = bei.disjoint_union(bei.path_graph(3), bei.path_graph(3))
    assert bei.is_unmixed(g)
    rep = bei.enumerate_cutsets(g)
    assert not rep.connected
    assert rep.to_json()["unmixedness_definition"] == "disconnected-extension"
    # one part mixed: the union is mixed too
    star = bei.Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert not bei.is_unmixed(bei.disjoint_union(star, bei.path_graph(2)))


def test_accessibility_examples(square_leaves_product):
    for n in range(1, 6):
        assert bei.is_accessible(bei.complete_graph(n))
    assert bei.is_accessible(bei.path_graph(4))
    # the corona counterexample has an accessible cutset system but is not
    # unmixed, hence not accessible
    assert bei.is_accessible_system(square_leaves_product)
    assert not bei.is_accessible(square_leaves_product)
    # the 4-cycle fails at the system level: {0,2} has no removable vertex
    c4 = bei.cycle_graph(4)
    assert not bei.is_accessible_system(c4)
    assert not bei.is_accessible(c4)


def test_accessible_system_matches_naive_on_corpus():
    for g in connected_atlas(5):
        assert bei.is_accessible_system(g) == naive_is_accessible_system(g)


def test_dimension_oracle_examples():
    for n in range(1, 6):
        assert bei.dimension_oracle(bei.complete_graph(n)) == n + 1
    # one copy of P3 on K2: 5 vertices, dimension 6
    g = bei.l_corona(bei.CoronaSpec(bei.complete_graph(2), 1, bei.path_graph(3)))[0]
    assert bei.dimension_oracle(g) == 6
    # complete base with unmixed pendant everywhere: n + n*h + 1
    for n in (1, 2, 3):
        for h in (bei.complete_graph(2), bei.path_graph(3)):
            prod = bei.corona(bei.complete_graph(n), h)[0]
            assert bei.dimension_oracle(prod) == n + n * h.n + 1


def test_dimension_oracle_unmixed_iff_tight_on_corpus():
    # for connected graphs, dimension n+1 is equivalent to every cutset
    # having components == |T| + 1 *at the maximum*; unmixedness implies it
    for g in connected_atlas(5):
        if bei.is_unmixed(g):
            assert bei.dimension_oracle(g) == g.n + 1


def test_simplicial_vertices_in_no_cutset_on_corpus():
    for g in connected_atlas(5):
        sim = bei.simplicial_vertices(g)
        for mask, _ in bei.iter_cutsets(g):
            assert mask & sim == 0


def test_witness_chain():
    assert bei.accessibility_witness_chain(bei.path_graph(4), 0) == []
    assert bei.accessibility_witness_chain(bei.path_graph(4), vset([1])) == [1]
    # the opposite pair in a 4-cycle is a cutset with no chain
    c4 = bei.cycle_graph(4)
    assert bei.is_cutset(c4, vset([0, 2]))
    assert bei.accessibility_witness_chain(c4, vset([0, 2])) is None
    with pytest.raises(ValueError):
        bei.accessibility_witness_chain(bei.path_graph(4), vset([0]))


def test_witness_chain_prefers_smallest_vertex(square_leaves_product):
    chain = bei.accessibility_witness_chain(square_leaves_product, vset([0, 2]))
    assert chain == [0, 2]


def test_enumeration_bound():
    big = bei.Graph(30)
    with pytest.raises(bei.EnumerationBoundError):
        list(bei.iter_cutsets(big))
    assert bei.dimension_oracle(big, bound=30) == 30 + 30  # 30 isolated vertices
    with pytest.raises(bei.EnumerationBoundError):
        bei.enumerate_cutsets(bei.path_graph(5), bound=4)


def test_bound_env_var(monkeypatch):
    monkeypatch.setenv("BEI_BOUND", "3")
    assert bei.enumeration_bound() == 3
    with pytest.raises(bei.EnumerationBoundError):
        list(bei.iter_cutsets(bei.path_graph(4)))
    assert bei.enumeration_bound(10) == 10  # explicit argument wins
    monkeypatch.setenv("BEI_BOUND", "junk")
    with pytest.raises(ValueError):
        bei.enumeration_bound()
    monkeypatch.delenv("BEI_BOUND")
    assert bei.enumeration_bound() == bei.DEFAULT_BOUND
