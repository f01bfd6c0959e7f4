import networkx as nx
import pytest
from hypothesis import given, settings

from graphlie.corpus import complete
from graphlie.graph_model import (
    GraphError,
    GraphParseError,
    LabeledDigraph,
    adjacency,
    component_count_spectral,
    components,
    induced_subgraph,
    laplacian,
    neighborhood,
    parse,
    reverse_edge,
    serialize,
    valency,
)

from conftest import labeled_graphs

EDGE = LabeledDigraph(("a", "b"), (("a", "b", "u"),))
K4_ONE = LabeledDigraph(
    ("x1", "x2", "x3", "x4"),
    tuple((f"x{i}", f"x{j}", "c1") for i in range(1, 5) for j in range(i + 1, 5)),
)
TWO_EDGES = LabeledDigraph(("a", "b", "c", "d"), (("a", "b", "u"), ("c", "d", "v")))


def test_parse_minimal():
    g = parse("vertices: a b\nedge a -> b : u")
    assert g.vertices == ("a", "b") and g.edges == (("a", "b", "u"),) and g.labels == ("u",)


def test_parse_comments_and_whitespace():
    g = parse("# header\nvertices: a\nvertices:   b  c # more\n\nedge a->b:u\n  edge  c  ->  b  :  v  \n")
    assert g.vertices == ("a", "b", "c")
    assert g.edges == (("a", "b", "u"), ("c", "b", "v"))


@pytest.mark.parametrize(
    "text, message, line",
    [
        ("vertices: a\nedge a -> a : u", "loop", 2),
        ("vertices: a b\nedge a -> b : u\nedge b -> a : v", "multi-edge", 3),
        ("vertices: a b\nedge a -> b : u\nedge a -> b : u", "duplicate edge", 3),
        ("vertices: a a", "duplicate vertex", 1),
        ("vertices: a\nedge a -> z : u", "undeclared", 2),
        ("vertices: a b\nedge a => b : u", "syntax", 2),
        ("vertices: a b\nedge a -> b : a", "clashes", 2),
    ],
)
def test_parse_errors(text, message, line):
    with pytest.raises(GraphParseError, match=message) as exc:
        parse(text, source="g.lg")
    assert exc.value.line == line
    assert str(exc.value).startswith(f"g.lg:{line}:")


def test_constructor_rejects_nonsurjective_labels():
    with pytest.raises(GraphError):
        LabeledDigraph(("a", "b"), (("a", "b", "u"),), ("u", "w"))


@settings(max_examples=100, deadline=None)
@given(labeled_graphs(max_vertices=7))
def test_serialize_roundtrip(g):
    assert parse(serialize(g)) == g
    assert serialize(parse(serialize(g))) == serialize(g)


def test_matrices_single_edge():
    assert adjacency(EDGE) == [[0, 1], [1, 0]]
    assert valency(EDGE) == [[1, 0], [0, 1]]
    assert laplacian(EDGE) == [[-1, 1], [1, -1]]


def test_matrices_k4():
    assert adjacency(K4_ONE) == [[int(i != j) for j in range(4)] for i in range(4)]
    assert valency(K4_ONE) == [[3 if i == j else 0 for j in range(4)] for i in range(4)]


def test_matrices_edgeless():
    g = LabeledDigraph(("a", "b", "c"), ())
    assert adjacency(g) == [[0] * 3] * 3
    assert laplacian(g) == [[0] * 3] * 3
    assert valency(LabeledDigraph(("a",), ())) == [[0]]


def test_laplacian_block_diagonal():
    block = [[-1, 1], [1, -1]]
    lap = laplacian(TWO_EDGES)
    assert [r[:2] for r in lap[:2]] == block and [r[2:] for r in lap[2:]] == block
    assert all(v == 0 for r in lap[:2] for v in r[2:])


@pytest.mark.parametrize(
    "g, parts",
    [
        (K4_ONE, [("x1", "x2", "x3", "x4")]),
        (TWO_EDGES, [("a", "b"), ("c", "d")]),
        (LabeledDigraph(("p", "q", "r"), ()), [("p",), ("q",), ("r",)]),
    ],
)
def test_components_examples(g, parts):
    assert components(g) == parts
    assert component_count_spectral(g) == len(parts)


@settings(max_examples=150, deadline=None)
@given(labeled_graphs(max_vertices=9))
def test_spectral_matches_union_find(g):
    assert component_count_spectral(g) == len(components(g))
    ref = nx.Graph()
    ref.add_nodes_from(g.vertices)
    ref.add_edges_from((t, h) for t, h, _ in g.edges)
    assert sorted(map(sorted, components(g))) == sorted(map(sorted, nx.connected_components(ref)))


def test_induced_subgraph_examples():
    assert induced_subgraph(K4_ONE, K4_ONE.vertices) == K4_ONE
    empty = induced_subgraph(K4_ONE, [])
    assert empty.vertices == () and empty.edges == () and empty.labels == ()
    sub = induced_subgraph(complete(4), ["x1", "x2"])
    assert sub.edges == (("x1", "x2", "c1"),) and sub.labels == ("c1",)
    with pytest.raises(GraphError):
        induced_subgraph(K4_ONE, ["nope"])


@settings(max_examples=100, deadline=None)
@given(labeled_graphs(max_vertices=6))
def test_induced_subgraph_monotone(g):
    for k in range(g.n + 1):
        sub = induced_subgraph(g, g.vertices[:k])
        assert set(sub.edges) <= set(g.edges)
        assert set(sub.labels) == {e[2] for e in sub.edges}


def test_reverse_edge():
    assert reverse_edge(EDGE, "a", "b").edges == (("b", "a", "u"),)
    g2 = reverse_edge(K4_ONE, "x1", "x2")
    assert len(set(g2.edges) & set(K4_ONE.edges)) == 5
    assert reverse_edge(g2, "x2", "x1") == K4_ONE
    with pytest.raises(GraphError):
        reverse_edge(EDGE, "b", "a")


@settings(max_examples=100, deadline=None)
@given(labeled_graphs(max_vertices=6))
def test_reverse_preserves_matrices(g):
    for t, h, _ in g.edges:
        g2 = reverse_edge(g, t, h)
        assert adjacency(g2) == adjacency(g)
        assert laplacian(g2) == laplacian(g)
        assert component_count_spectral(g2) == component_count_spectral(g)
        assert reverse_edge(g2, h, t) == g


def test_neighborhood():
    star = LabeledDigraph(("c", "l1", "l2", "l3"), (("c", "l1", "u"), ("l2", "c", "u"), ("c", "l3", "u")))
    assert neighborhood(star, "c") == {"l1", "l2", "l3"}
    assert neighborhood(LabeledDigraph(("a",), ()), "a") == set()
    assert neighborhood(EDGE, "b") == {"a"}
    with pytest.raises(GraphError):
        neighborhood(EDGE, "z")


def test_signed_label_antisymmetric():
    for t, h, c in K4_ONE.edges:
        assert K4_ONE.signed_label(t, h) == (1, c)
        assert K4_ONE.signed_label(h, t) == (-1, c)
    assert TWO_EDGES.signed_label("a", "c") == (0, None)
