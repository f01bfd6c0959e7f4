"""Graph families used by the test suite and the experiment scripts."""

from __future__ import annotations

import random
from itertools import combinations

from .graph_model import LabeledDigraph


def random_labeled_graph(
    rng: random.Random,
    n: int,
    edge_prob: float = 0.5,
    n_labels: int | None = None,
) -> LabeledDigraph:
    """Random simple graph on x1..xn with random orientations.

    Labels are drawn from a pool of ``n_labels`` names (default: one per
    edge, so every label is distinct) and then restricted to those used.
    """
    verts = tuple(f"x{i}" for i in range(1, n + 1))
    edges = []
    for a, b in combinations(verts, 2):
        if rng.random() < edge_prob:
            edges.append((a, b) if rng.random() < 0.5 else (b, a))
    pool = n_labels if n_labels is not None else max(1, len(edges))
    labeled = []
    for k, (a, b) in enumerate(edges):
        idx = rng.randrange(pool) if n_labels is not None else k
        labeled.append((a, b, f"c{idx + 1}"))
    return LabeledDigraph(verts, tuple(labeled))


def _unique(verts, pairs) -> LabeledDigraph:
    return LabeledDigraph(tuple(verts), tuple((a, b, f"c{k}") for k, (a, b) in enumerate(pairs, 1)))


def path(n: int) -> LabeledDigraph:
    v = [f"x{i}" for i in range(1, n + 1)]
    return _unique(v, zip(v, v[1:]))


def cycle(n: int) -> LabeledDigraph:
    v = [f"x{i}" for i in range(1, n + 1)]
    return _unique(v, [(v[i], v[(i + 1) % n]) for i in range(n)])


def star(leaves: int) -> LabeledDigraph:
    v = ["x0"] + [f"x{i}" for i in range(1, leaves + 1)]
    return _unique(v, [("x0", x) for x in v[1:]])


def complete(p: int) -> LabeledDigraph:
    v = [f"x{i}" for i in range(1, p + 1)]
    return _unique(v, combinations(v, 2))


def complete_bipartite(m: int, n: int) -> LabeledDigraph:
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]
    return _unique(xs + ys, [(x, y) for x in xs for y in ys])


def uniquely_labeled_corpus(max_vertices: int = 5) -> dict[str, LabeledDigraph]:
    """Connected graphs with one label per edge: paths, cycles, stars, K3, K4, K2,2."""
    out: dict[str, LabeledDigraph] = {}
    for n in range(2, max_vertices + 1):
        out[f"P{n}"] = path(n)
    for n in range(3, max_vertices + 1):
        out[f"C{n}"] = cycle(n)
    for k in range(2, max_vertices):
        out[f"K1,{k}"] = star(k)
    out["K3"] = complete(3)
    if max_vertices >= 4:
        out["K4"] = complete(4)
        out["K2,2"] = complete_bipartite(2, 2)
    return out
