import random

import pytest
from hypothesis import strategies as st

from graphlie import catalog
from graphlie.corpus import random_labeled_graph, uniquely_labeled_corpus
from graphlie.derivations import build_kmn_distinct_labels, build_kmn_single_label
from graphlie.graph_model import LabeledDigraph


@st.composite
def labeled_graphs(draw, max_vertices=6, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    verts = [f"v{i}" for i in range(n)]
    pairs = [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    n_labels = draw(st.integers(1, max(1, len(chosen))))
    edges = []
    for a, b in chosen:
        if draw(st.booleans()):
            a, b = b, a
        edges.append((a, b, f"c{draw(st.integers(0, n_labels - 1))}"))
    return LabeledDigraph(tuple(verts), tuple(edges))


def corpus_graphs():
    graphs = {name: catalog.get(name).graph for name in catalog.TABLE_ENTRIES}
    graphs["k4_single"] = catalog.get("k4_single").graph
    graphs["g51_k4_source"] = catalog.get("g51_k4_source").graph
    for p in (2, 3, 4):
        graphs[f"K{p}_free"] = catalog.get("K_p_free", p=p).graph
    for m, n in [(1, 1), (2, 3), (3, 3)]:
        graphs[f"K{m},{n}_single"] = build_kmn_single_label(m, n)
        graphs[f"K{m},{n}_distinct"] = build_kmn_distinct_labels(m, n)
    graphs.update({f"unique_{k}": g for k, g in uniquely_labeled_corpus(5).items()})
    rng = random.Random(20241)
    for k in range(20):
        n = rng.randint(1, 7)
        graphs[f"random_{k}"] = random_labeled_graph(rng, n, rng.random(), rng.randint(1, 4))
    graphs["edgeless_3"] = LabeledDigraph(("a", "b", "c"), ())
    return graphs


CORPUS = corpus_graphs()


@pytest.fixture(params=sorted(CORPUS), scope="module")
def corpus_graph(request):
    return CORPUS[request.param]
