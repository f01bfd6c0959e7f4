import itertools

import pytest

from graphlie import catalog
from graphlie.corpus import uniquely_labeled_corpus
from graphlie.derivations import (
    build_kmn_distinct_labels,
    build_kmn_single_label,
    commutator,
    der0,
    derivation_system,
    in_span,
    is_derivation,
    kmn_dimension_exact,
    kmn_dimension_formula,
)
from graphlie.graph_model import LabeledDigraph
from graphlie.lie_core import build_lie
from graphlie.morphisms import orient

from oracles import der0_dimension_sympy

HEIS = LabeledDigraph(("a", "b"), (("a", "b", "u"),))


def test_heisenberg_dimension():
    assert der0(build_lie(HEIS)).dimension == 4


def test_system_layout():
    alg = build_lie(build_kmn_single_label(2, 3))
    system = derivation_system(alg)
    assert system.matrix.cols == 25 + 1
    assert system.matrix.rows == 10 * 1


@pytest.mark.parametrize(
    "m, n, single, distinct",
    # frozen from the sympy oracle in tests/oracles.py
    [(1, 1, 4, 4), (1, 2, 7, 7), (2, 2, 12, 8), (1, 3, 12, 13), (2, 3, 19, 13), (3, 3, 28, 18)],
)
def test_kmn_against_frozen_oracle(m, n, single, distinct):
    assert der0(build_lie(build_kmn_single_label(m, n))).dimension == single
    assert der0(build_lie(build_kmn_distinct_labels(m, n))).dimension == distinct


@pytest.mark.parametrize("m, n", [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3)])
@pytest.mark.parametrize("builder", [build_kmn_single_label, build_kmn_distinct_labels])
def test_kmn_matches_live_oracle(builder, m, n):
    alg = build_lie(builder(m, n))
    assert der0(alg).dimension == der0_dimension_sympy(alg)


@pytest.mark.parametrize("name", ["g5_1", "g5_2", "g6_2", "heis_x_g1", "k4_single"])
def test_catalog_matches_live_oracle(name):
    alg = build_lie(catalog.get(name).graph)
    assert der0(alg).dimension == der0_dimension_sympy(alg)


def test_isomorphic_algebras_same_dimension():
    # K4 with one label is isomorphic to g5,1
    assert der0(build_lie(catalog.get("k4_single").graph)).dimension == der0(
        build_lie(catalog.get("g5_1").graph)
    ).dimension


def test_exact_closed_form_grid():
    for m, n in itertools.product(range(1, 6), repeat=2):
        assert der0(build_lie(build_kmn_single_label(m, n))).dimension == kmn_dimension_exact(m, n, "single")
        assert der0(build_lie(build_kmn_distinct_labels(m, n))).dimension == kmn_dimension_exact(m, n, "distinct")


def test_published_formulas_values():
    assert kmn_dimension_formula(2, 3, "single") == 16
    assert kmn_dimension_formula(2, 2, "distinct") == 20
    with pytest.raises(ValueError, match="m = n = 1"):
        kmn_dimension_formula(1, 1, "distinct")
    with pytest.raises(ValueError):
        kmn_dimension_formula(0, 2, "single")


def test_published_formulas_agree_on_small_cases():
    for m, n in [(1, 1), (1, 2), (2, 1)]:
        assert kmn_dimension_formula(m, n, "single") == kmn_dimension_exact(m, n, "single")
    for m, n in [(1, 2), (2, 1)]:
        assert kmn_dimension_formula(m, n, "distinct") == kmn_dimension_exact(m, n, "distinct")


def test_builders():
    g = build_kmn_single_label(2, 3)
    assert (g.n, len(g.edges), len(g.labels)) == (5, 6, 1)
    assert all(t.startswith("x") and h.startswith("y") for t, h, _ in g.edges)
    assert build_kmn_distinct_labels(1, 1).edges[0][:2] == build_kmn_single_label(1, 1).edges[0][:2]
    d = build_kmn_distinct_labels(2, 2)
    assert (len(d.edges), len(d.labels)) == (4, 4)
    star = build_kmn_distinct_labels(3, 1)
    assert {h for _, h, _ in star.edges} == {"y1"} and len(star.labels) == 3
    with pytest.raises(ValueError):
        build_kmn_single_label(0, 1)
    with pytest.raises(ValueError):
        build_kmn_distinct_labels(1, -1)


def test_symmetric_in_m_and_n():
    for m, n in [(2, 3), (1, 4)]:
        for builder in (build_kmn_single_label, build_kmn_distinct_labels):
            assert der0(build_lie(builder(m, n))).dimension == der0(build_lie(builder(n, m))).dimension


def test_basis_elements_are_derivations(corpus_graph):
    alg = build_lie(corpus_graph)
    if alg.dim > 14:
        pytest.skip("pairwise check limited to small algebras")
    for d in der0(alg).basis:
        assert is_derivation(d)


@pytest.mark.parametrize("name", ["g5_2", "g6_2", "heis_x_heis", "K3_free"])
def test_closed_under_commutator(name):
    space = der0(build_lie(catalog.get(name).graph))
    for d1, d2 in itertools.combinations(space.basis, 2):
        assert in_span(space, commutator(d1, d2))


@pytest.mark.parametrize("p", [2, 3, 4])
def test_free_algebra(p):
    g = catalog.get("K_p_free", p=p).graph
    alg = build_lie(g)
    assert alg.dim == p + p * (p - 1) // 2
    assert der0(alg).dimension == p * p


@pytest.mark.parametrize("name, g", sorted(uniquely_labeled_corpus(5).items()))
def test_dimension_orientation_invariant(name, g):
    dims = {der0(build_lie(orient(g, mask))).dimension for mask in range(1 << len(g.edges))}
    assert len(dims) == 1
