import random

import pytest

from graphlie import catalog
from graphlie.corpus import random_labeled_graph
from graphlie.graph_model import GraphError, LabeledDigraph
from graphlie.lie_core import build_lie
from graphlie.substructures import (
    Triviality,
    brute_force_ideal,
    check_graph_ideal,
    check_subalgebra,
    component_ideals,
    enumerate_substructures,
)

from conftest import CORPUS


def test_g51_pair_is_ideal():
    g = catalog.get("g5_1").graph
    r = check_graph_ideal(g, ["x1", "x2"])
    assert r.span == {"x1", "x2", "x5"}
    assert r.is_subalgebra and r.is_graph_ideal and r.combinatorial_ideal and not r.is_trivial


def test_g52_pairs_not_ideals():
    g = catalog.get("g5_2").graph
    for pair in (["x1", "x3"], ["x1", "x2"]):
        r = check_graph_ideal(g, pair)
        assert r.is_subalgebra and not r.is_graph_ideal and not r.combinatorial_ideal


def test_full_and_empty_subsets():
    g = catalog.get("g5_2").graph
    whole = check_graph_ideal(g, g.vertices)
    assert whole.is_graph_ideal and whole.triviality is Triviality.WHOLE
    empty = check_subalgebra(g, [])
    assert empty.span == frozenset() and empty.is_subalgebra
    assert empty.triviality is Triviality.CENTRAL


def test_unknown_vertex():
    with pytest.raises(GraphError):
        check_subalgebra(catalog.get("g5_2").graph, ["x9"])


def test_component_ideals_hxh():
    reports = component_ideals(catalog.get("heis_x_heis").graph)
    assert [r.span for r in reports] == [{"x1", "x2", "x3"}, {"x4", "x5", "x6"}]
    assert all(r.is_graph_ideal for r in reports)


def test_component_ideals_connected():
    (r,) = component_ideals(catalog.get("g5_2").graph)
    assert r.is_graph_ideal and r.triviality is Triviality.WHOLE


def test_component_ideals_isolated_vertex():
    reports = component_ideals(catalog.get("heis_x_g1").graph)
    iso = [r for r in reports if r.vertices == ("x4",)]
    assert iso and iso[0].triviality is Triviality.ABELIAN_FACTOR and iso[0].is_graph_ideal


def test_enumerate_g52_size_two():
    reports = enumerate_substructures(catalog.get("g5_2").graph, 2)
    nontrivial = [r.span for r in reports if not r.is_trivial]
    assert sorted(nontrivial, key=sorted) == sorted(
        [frozenset({"x1", "x3", "x5"}), frozenset({"x1", "x2", "x4"})], key=sorted
    )


def test_enumerate_g62():
    reports = enumerate_substructures(catalog.get("g6_2").graph, 4)
    nontrivial = [r for r in reports if not r.is_trivial]
    assert len(nontrivial) == 5 and all(r.is_subalgebra for r in nontrivial)
    assert {r.span for r in nontrivial if r.is_graph_ideal} == {
        frozenset("x1 x2 x3 x5 x6".split()),
        frozenset("x1 x2 x4 x5 x6".split()),
    }


def test_enumerate_edgeless():
    g = LabeledDigraph(("a", "b", "c"), ())
    assert all(r.is_trivial for r in enumerate_substructures(g))


def test_enumerate_order_deterministic():
    g = catalog.get("g6_2").graph
    first = enumerate_substructures(g)
    assert first == enumerate_substructures(g)
    flags = [r.is_trivial for r in first]
    assert flags == sorted(flags)


def test_enumerate_rejects_oversized_cap():
    with pytest.raises(ValueError):
        enumerate_substructures(catalog.get("g5_2").graph, 9)


def test_subalgebra_universal_on_corpus(corpus_graph):
    if corpus_graph.n > 8:
        pytest.skip("subset sweep limited to 8 vertices")
    for report in enumerate_substructures(corpus_graph):
        assert report.is_subalgebra
        if report.is_graph_ideal:
            assert report.is_subalgebra


def test_components_are_graph_ideals(corpus_graph):
    for r in component_ideals(corpus_graph):
        assert r.combinatorial_ideal and r.is_graph_ideal


def _oracle_records(graphs):
    for g in graphs:
        alg = build_lie(g)
        for r in enumerate_substructures(g):
            assert brute_force_ideal(alg, r.vertices + r.labels) == r.is_graph_ideal
            yield g, r


def test_combinatorial_criterion_is_sufficient():
    rng = random.Random(7)
    graphs = [random_labeled_graph(rng, rng.randint(1, 7), rng.random(), rng.randint(1, 4)) for _ in range(40)]
    for _, r in _oracle_records(graphs):
        if r.combinatorial_ideal:
            assert r.is_graph_ideal


def test_converse_evidence_recorded(capsys):
    rng = random.Random(11)
    graphs = list(CORPUS.values())
    graphs = [g for g in graphs if g.n <= 7]
    graphs += [random_labeled_graph(rng, rng.randint(1, 7), rng.random(), rng.randint(1, 3)) for _ in range(40)]
    checked = gaps = 0
    for _, r in _oracle_records(graphs):
        checked += 1
        gaps += r.non_graph_ideal
    with capsys.disabled():
        print(f"\n[converse] subsets checked={checked} oracle-only ideals={gaps}")


def test_label_shared_outside_subset():
    # x2-x3 leaves S = {x3, x4} with label c2, which S already contains
    g = LabeledDigraph(
        ("x1", "x2", "x3", "x4"),
        (("x1", "x2", "c1"), ("x3", "x4", "c2"), ("x2", "x3", "c2")),
    )
    r = check_graph_ideal(g, ["x3", "x4"])
    assert r.combinatorial_ideal and r.is_graph_ideal
    r = check_graph_ideal(g, ["x1", "x2"])
    assert not r.combinatorial_ideal and not r.is_graph_ideal
