"""Corpus generators and random samplers used by the verification sweeps."""

import random

import pytest

from sgn import SignedGraph, is_balanced, is_connected
from sgn.enumeration import (
    bicyclic_graphs_labeled,
    connected_graphs_labeled,
    connected_graphs_upto_iso,
    force_unbalanced,
    iter_signed_corpus,
    random_low_cyclomatic_graph,
    random_signed_graph,
    random_tree_attached_bicyclic,
    signed_graphs_mod_switching,
    switching_class_signs,
)
from sgn.families import bicyclic_class, gen_cycle


def test_labeled_connected_counts():
    # known counts of labeled connected graphs
    for n, want in [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)]:
        assert sum(1 for _ in connected_graphs_labeled(n)) == want


def test_bicyclic_labeled_counts():
    assert sum(1 for _ in bicyclic_graphs_labeled(4)) == 6
    assert sum(1 for _ in bicyclic_graphs_labeled(5)) == 205


def test_switching_class_count():
    edges = tuple((u, v) for u in range(4) for v in range(u + 1, 4))  # K4
    signs = list(switching_class_signs(4, edges))
    assert len(signs) == 2 ** (6 - 4 + 1)
    assert len(set(signs)) == len(signs)


def test_switching_classes_are_inequivalent():
    from sgn import canonical_signature

    edges = tuple(gen_cycle(5, 0).underlying_edges)
    reps = list(signed_graphs_mod_switching(5, edges))
    canons = {canonical_signature(g) for g in reps}
    assert len(canons) == len(reps) == 2


def test_iso_corpus_counts():
    by_n = {}
    for n, edges in connected_graphs_upto_iso(7):
        by_n[n] = by_n.get(n, 0) + 1
    # connected graphs up to isomorphism on 1..7 vertices
    assert by_n == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def test_iso_corpus_bound():
    with pytest.raises(ValueError):
        connected_graphs_upto_iso(8)


def test_signed_corpus_sample():
    seen = 0
    for g in iter_signed_corpus(4):
        assert is_connected(g)
        seen += 1
    assert seen == 1 + 1 + 3 + 18  # sign classes by n for n <= 4


def test_random_samplers_are_wellformed():
    rng = random.Random(0)
    for _ in range(50):
        g = random_signed_graph(rng, rng.randint(1, 9))
        assert isinstance(g, SignedGraph)
    for _ in range(50):
        g = random_low_cyclomatic_graph(rng, rng.randint(3, 9), rng.randint(0, 2))
        assert is_connected(g)
        assert g.cyclomatic_number() <= 2


@pytest.mark.parametrize("kind", ["BPlus", "BPlusPlus", "Theta"])
def test_random_tree_attached_bicyclic(kind):
    rng = random.Random(1)
    n_lo = {"BPlus": 7, "BPlusPlus": 8, "Theta": 5}[kind]
    for _ in range(40):
        n = rng.randint(n_lo, 10)
        g = random_tree_attached_bicyclic(rng, n, kind)
        assert g.n == n and g.m == n + 1
        assert is_connected(g)
        assert bicyclic_class(g) == kind


def test_force_unbalanced():
    rng = random.Random(2)
    for _ in range(30):
        g = random_tree_attached_bicyclic(rng, 8, "Theta")
        h = force_unbalanced(rng, g)
        assert not is_balanced(h)[0]
        assert h.underlying_edges == g.underlying_edges
    with pytest.raises(ValueError):
        force_unbalanced(rng, SignedGraph(3, [(0, 1, 1)]))
