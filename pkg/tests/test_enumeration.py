"""Exhaustive generation of graph classes and canonical forms.

Counts are frozen against independent references: the graph atlas shipped
with networkx (all graphs on at most seven vertices), nonisomorphic_trees,
and published censuses of k-trees, planar triangulations, and stacked
triangulations.
"""

import itertools
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import arbitrary_graphs, from_nx
from wienerseq import (
    Graph,
    brute_force_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_order,
    complete,
    cycle,
    degeneracy_check,
    enumerate_apollonian,
    enumerate_class,
    enumerate_connected,
    enumerate_k_connected,
    enumerate_k_trees,
    enumerate_maximal_k_degenerate,
    enumerate_maximal_planar,
    enumerate_odd_trees,
    is_connected,
    is_k_connected,
    is_odd_tree,
    parse_class_spec,
    path,
    relabel,
    star,
    write_graph6,
)

CONNECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TREE_COUNTS = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
TWO_TREE_COUNTS = {3: 1, 4: 1, 5: 2, 6: 5, 7: 12, 8: 39, 9: 136, 10: 529}
THREE_TREE_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 15, 9: 58, 10: 275}
APOLLONIAN_COUNTS = {3: 1, 4: 1, 5: 1, 6: 1, 7: 3, 8: 7, 9: 24, 10: 93, 11: 434}
MAXIMAL_PLANAR_COUNTS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50}
ODD_TREE_COUNTS = {4: 1, 6: 2, 8: 3, 10: 7, 12: 13}
LABELED_CONNECTED_COUNTS = {2: 1, 3: 4, 4: 38, 5: 728, 6: 26704}


@pytest.mark.parametrize("n,count", sorted(CONNECTED_COUNTS.items()))
def test_connected_counts(n, count):
    assert sum(1 for _ in enumerate_connected(n)) == count


def test_connected_counts_match_atlas():
    atlas = Counter()
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() >= 2 and nx.is_connected(G):
            atlas[G.number_of_nodes()] += 1
    assert dict(atlas) == CONNECTED_COUNTS


def test_connected_per_size_matches_atlas():
    atlas = Counter(
        G.number_of_edges()
        for G in nx.graph_atlas_g()
        if G.number_of_nodes() == 6 and nx.is_connected(G)
    )
    ours = {m: sum(1 for _ in enumerate_connected(6, m=m)) for m in range(5, 16)}
    assert ours == dict(atlas)


@pytest.mark.parametrize("n,count", sorted(LABELED_CONNECTED_COUNTS.items()))
def test_labeled_connected_counts(n, count):
    assert sum(1 for _ in enumerate_connected(n, dedup="labeled")) == count


def test_labeled_collapses_to_unlabeled():
    forms = {canonical_form(g) for g in enumerate_connected(5, dedup="labeled")}
    assert len(forms) == CONNECTED_COUNTS[5]


def test_enumeration_is_deterministic_and_sorted():
    records = [write_graph6(g) for g in enumerate_connected(6)]
    assert records == [write_graph6(g) for g in enumerate_connected(6)]
    keys = [(g.m, write_graph6(g)) for g in enumerate_connected(6)]
    assert keys == sorted(keys)
    assert len(set(records)) == len(records)


@pytest.mark.parametrize("n,count", sorted(TREE_COUNTS.items()))
def test_tree_counts(n, count):
    assert sum(1 for _ in enumerate_k_trees(n, 1)) == count


@pytest.mark.parametrize("n,count", sorted(TWO_TREE_COUNTS.items()))
def test_two_tree_counts(n, count):
    assert sum(1 for _ in enumerate_k_trees(n, 2)) == count


@pytest.mark.parametrize("n,count", sorted(THREE_TREE_COUNTS.items()))
def test_three_tree_counts(n, count):
    assert sum(1 for _ in enumerate_k_trees(n, 3)) == count


@pytest.mark.parametrize("k", [1, 2, 3])
def test_k_trees_are_maximal_k_degenerate(k):
    for n in range(k + 1, 8):
        for g in enumerate_k_trees(n, k):
            assert g.m == k * n - k * (k + 1) // 2
            assert degeneracy_check(g, k) == (True, True)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_k_trees_within_maximal_k_degenerate(k):
    for n in range(k + 1, 8):
        trees = {canonical_form(g) for g in enumerate_k_trees(n, k)}
        degen = {canonical_form(g) for g in enumerate_maximal_k_degenerate(n, k)}
        assert trees <= degen


def test_maximal_k_degenerate_members_verify():
    for n in range(3, 8):
        for k in (1, 2, 3):
            if n < k + 1:
                continue
            for g in enumerate_maximal_k_degenerate(n, k):
                assert degeneracy_check(g, k) == (True, True)


@pytest.mark.parametrize("n,count", sorted(ODD_TREE_COUNTS.items()))
def test_odd_tree_counts(n, count):
    assert sum(1 for _ in enumerate_odd_trees(n)) == count


def test_odd_tree_counts_match_reference():
    for n in (4, 6, 8, 10):
        ref = sum(
            1
            for T in nx.nonisomorphic_trees(n)
            if all(d % 2 == 1 for _, d in T.degree())
        )
        assert sum(1 for _ in enumerate_odd_trees(n)) == ref


def test_odd_tree_members_are_odd_trees():
    for n in (4, 6, 8, 10):
        for g in enumerate_odd_trees(n):
            assert is_odd_tree(g)


@pytest.mark.parametrize("n,count", sorted(APOLLONIAN_COUNTS.items()))
def test_apollonian_counts(n, count):
    assert sum(1 for _ in enumerate_apollonian(n)) == count


@pytest.mark.parametrize("n,count", sorted(MAXIMAL_PLANAR_COUNTS.items()))
def test_maximal_planar_counts(n, count):
    assert sum(1 for _ in enumerate_maximal_planar(n)) == count


def test_maximal_planar_members_are_planar_triangulations():
    for n in range(4, 9):
        for g in enumerate_maximal_planar(n):
            assert g.m == 3 * g.n - 6
            ok, _ = nx.check_planarity(nx.Graph(list(g.edges)))
            assert ok


def test_apollonian_equals_planar_three_trees():
    for n in range(4, 10):
        apo = {canonical_form(g) for g in enumerate_apollonian(n)}
        planar = {canonical_form(g) for g in enumerate_maximal_planar(n)}
        three_trees = {canonical_form(g) for g in enumerate_k_trees(n, 3)}
        assert apo == planar & three_trees
        assert apo == {canonical_form(g) for g in enumerate_maximal_planar(n, mode="apollonian")}


def test_k_connected_counts():
    # every connected graph is 1-connected at n >= 2
    assert sum(1 for _ in enumerate_k_connected(6, 1)) == CONNECTED_COUNTS[6]
    for n in range(4, 8):
        expected = sum(1 for g in enumerate_connected(n) if is_k_connected(g, 2))
        assert sum(1 for _ in enumerate_k_connected(n, 2)) == expected


@given(arbitrary_graphs(min_n=1, max_n=8))
@settings(deadline=None)
def test_canonical_form_is_relabel_invariant(g):
    base = canonical_form(g)
    order = tuple(reversed(range(g.n)))
    assert canonical_form(relabel(g, order)) == base
    cg = canonical_graph(g)
    assert write_graph6(cg) == base
    assert sorted(cg.degree(v) for v in range(cg.n)) == sorted(
        g.degree(v) for v in range(g.n)
    )


def test_canonical_order_is_a_permutation():
    g = star(7)
    order = canonical_order(g)
    assert sorted(order) == list(range(7))


def test_canonical_form_separates_iff_nonisomorphic():
    for n in range(2, 7):
        by_m = {}
        for g in enumerate_connected(n):
            by_m.setdefault(g.m, []).append(g)
        for group in by_m.values():
            # enumeration already dedups, so all pairs must be nonisomorphic
            for a, b in itertools.combinations(group, 2):
                assert canonical_form(a) != canonical_form(b)
                assert not brute_force_isomorphic(a, b)


def test_canonical_form_identifies_relabelings_against_brute_force():
    for g in enumerate_connected(5):
        h = relabel(g, tuple(reversed(range(g.n))))
        assert brute_force_isomorphic(g, h)
        assert canonical_form(g) == canonical_form(h)


def test_brute_force_isomorphic_examples():
    assert brute_force_isomorphic(path(4), relabel(path(4), (3, 1, 0, 2)))
    assert not brute_force_isomorphic(path(4), star(4))
    assert not brute_force_isomorphic(path(4), path(5))


def test_enumeration_ceilings():
    with pytest.raises(ValueError):
        list(enumerate_connected(9))
    with pytest.raises(ValueError):
        list(enumerate_connected(8, dedup="labeled"))
    with pytest.raises(ValueError):
        list(enumerate_k_trees(11, 2))
    with pytest.raises(ValueError):
        list(enumerate_k_trees(8, 4))
    with pytest.raises(ValueError):
        list(enumerate_k_trees(2, 2))
    with pytest.raises(ValueError):
        list(enumerate_odd_trees(7))
    with pytest.raises(ValueError):
        list(enumerate_odd_trees(16))
    with pytest.raises(ValueError):
        list(enumerate_maximal_planar(10))
    with pytest.raises(ValueError):
        list(enumerate_apollonian(12))


def test_class_spec_dispatch():
    assert [write_graph6(g) for g in enumerate_class("connected", (5,))] == [
        write_graph6(g) for g in enumerate_connected(5)
    ]
    name, args = parse_class_spec("k_tree:8,2")
    assert (name, args) == ("k_tree", (8, 2))
    assert sum(1 for _ in enumerate_class(name, args)) == TWO_TREE_COUNTS[8]
    for bad in ("nope:5", "connected", "k_tree:8", "connected:x"):
        with pytest.raises(ValueError):
            parse_class_spec(bad)
