"""Labeled directed simple graphs, their matrices, and the ``.lg`` text format.

A ``.lg`` file is line oriented; ``#`` starts a comment::

    vertices: x1 x2 x3
    edge x1 -> x2 : c1
    edge x2 -> x3 : c2

``vertices:`` lines are cumulative and must precede the edge lines. Labels
are declared by use, in order of first appearance.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .exact_linalg import RationalMatrix, rank

Edge = tuple[str, str, str]

_NAME = re.compile(r"^[A-Za-z0-9_]+$")
_EDGE_LINE = re.compile(
    r"^edge\s+([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)\s*:\s*([A-Za-z0-9_]+)$"
)


class GraphError(ValueError):
    """Invalid graph data, or an operation referring to a missing vertex/edge."""


class GraphParseError(GraphError):
    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if line is not None:
            where = f"{source or '<text>'}:{line}: "
        super().__init__(where + message)


@dataclass(frozen=True)
class LabeledDigraph:
    """Finite simple directed graph with a surjective edge labeling.

    At most one edge joins any unordered pair of vertices. Vertex and label
    names are disjoint. ``labels`` lists exactly the labels used on edges.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(dict.fromkeys(e[2] for e in self.edges)))
        else:
            object.__setattr__(self, "labels", tuple(self.labels))
        _validate(self)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.labels)

    def vertex_index(self, v: str) -> int:
        try:
            return self._vindex[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    @property
    def _vindex(self) -> dict[str, int]:
        cache = self.__dict__.get("_vi")
        if cache is None:
            cache = {v: i for i, v in enumerate(self.vertices)}
            object.__setattr__(self, "_vi", cache)
        return cache

    def edge_between(self, x: str, y: str) -> Edge | None:
        """The edge joining ``x`` and ``y`` in either direction, if any."""
        for e in self.edges:
            if (e[0] == x and e[1] == y) or (e[0] == y and e[1] == x):
                return e
        return None

    def label_multiplicity(self, label: str) -> int:
        return sum(1 for e in self.edges if e[2] == label)

    def signed_label(self, x: str, y: str) -> tuple[int, str | None]:
        """Signed label of the ordered pair: (+1, c) for x->y, (-1, c) for y->x, (0, None) otherwise."""
        for t, h, c in self.edges:
            if t == x and h == y:
                return 1, c
            if t == y and h == x:
                return -1, c
        return 0, None

    def with_edges(self, edges: Iterable[Edge]) -> "LabeledDigraph":
        edges = tuple(edges)
        used = {e[2] for e in edges}
        return LabeledDigraph(self.vertices, edges, tuple(c for c in self.labels if c in used))


def _validate(g: LabeledDigraph) -> None:
    if len(set(g.vertices)) != len(g.vertices):
        raise GraphError("duplicate vertex name")
    if len(set(g.labels)) != len(g.labels):
        raise GraphError("duplicate label name")
    for name in g.vertices + g.labels:
        if not _NAME.match(name):
            raise GraphError(f"invalid name {name!r}")
    clash = set(g.vertices) & set(g.labels)
    if clash:
        raise GraphError(f"names used both as vertex and label: {sorted(clash)}")
    vset = set(g.vertices)
    seen: set[frozenset[str]] = set()
    for t, h, c in g.edges:
        if t not in vset or h not in vset:
            raise GraphError(f"edge {t}->{h} uses an undeclared vertex")
        if t == h:
            raise GraphError(f"loop edge at {t}")
        key = frozenset((t, h))
        if key in seen:
            raise GraphError(f"multiple edges between {t} and {h}")
        seen.add(key)
    used = {e[2] for e in g.edges}
    if used != set(g.labels):
        raise GraphError(
            f"labeling not surjective or label undeclared: labels={list(g.labels)}, used={sorted(used)}"
        )


# --------------------------------------------------------------------------- text format


def parse(text: str, source: str | None = None) -> LabeledDigraph:
    vertices: list[str] = []
    edges: list[Edge] = []
    pairs: dict[frozenset[str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        def fail(msg: str) -> GraphParseError:
            return GraphParseError(msg, lineno, source)

        if line.startswith("vertices:"):
            if edges:
                raise fail("vertices: line after edge lines")
            for name in line[len("vertices:"):].split():
                if not _NAME.match(name):
                    raise fail(f"invalid vertex name {name!r}")
                if name in vertices:
                    raise fail(f"duplicate vertex {name!r}")
                vertices.append(name)
            continue
        mo = _EDGE_LINE.match(line)
        if mo is None:
            raise fail(f"syntax error: {raw.strip()!r}")
        t, h, c = mo.groups()
        for v in (t, h):
            if v not in vertices:
                raise fail(f"undeclared vertex {v!r}")
        if t == h:
            raise fail(f"loop edge at {t!r}")
        key = frozenset((t, h))
        if key in pairs:
            if any(e[0] == t and e[1] == h for e in edges):
                raise fail(f"duplicate edge {t} -> {h} (first on line {pairs[key]})")
            raise fail(f"multi-edge between {t} and {h} (first on line {pairs[key]})")
        if c in vertices:
            raise fail(f"label {c!r} clashes with a vertex name")
        pairs[key] = lineno
        edges.append((t, h, c))
    try:
        return LabeledDigraph(tuple(vertices), tuple(edges))
    except GraphError as exc:
        raise GraphParseError(str(exc), None, source) from exc


def serialize(g: LabeledDigraph) -> str:
    lines = ["vertices: " + " ".join(g.vertices) if g.vertices else "vertices:"]
    lines += [f"edge {t} -> {h} : {c}" for t, h, c in g.edges]
    return "\n".join(lines) + "\n"


def load(path) -> LabeledDigraph:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), source=str(path))


# --------------------------------------------------------------------------- matrices


def adjacency(g: LabeledDigraph) -> list[list[int]]:
    n = g.n
    a = [[0] * n for _ in range(n)]
    for t, h, _ in g.edges:
        i, j = g.vertex_index(t), g.vertex_index(h)
        a[i][j] = a[j][i] = 1
    return a


def valency(g: LabeledDigraph) -> list[list[int]]:
    a = adjacency(g)
    n = g.n
    return [[sum(a[i]) if i == j else 0 for j in range(n)] for i in range(n)]


def laplacian(g: LabeledDigraph) -> list[list[int]]:
    """Adjacency minus valency. This is the negative of the usual convention;
    the kernel is the same either way."""
    a, b = adjacency(g), valency(g)
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def component_count_spectral(g: LabeledDigraph) -> int:
    """Nullity of the Laplacian, computed exactly over Q."""
    if g.n == 0:
        return 0
    return g.n - rank(RationalMatrix.from_rows(laplacian(g), g.n))


class _DisjointSet:
    def __init__(self, items: Iterable[str]):
        self.parent = {x: x for x in items}

    def find(self, x: str) -> str:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: str, y: str) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def components(g: LabeledDigraph) -> list[tuple[str, ...]]:
    """Connected components of the underlying undirected graph.

    Each component lists its vertices in declaration order; components are
    ordered by their first vertex.
    """
    ds = _DisjointSet(g.vertices)
    for t, h, _ in g.edges:
        ds.union(t, h)
    groups: dict[str, list[str]] = {}
    for v in g.vertices:
        groups.setdefault(ds.find(v), []).append(v)
    return [tuple(vs) for vs in groups.values()]


def is_connected(g: LabeledDigraph) -> bool:
    return len(components(g)) <= 1


def induced_subgraph(g: LabeledDigraph, subset: Iterable[str]) -> LabeledDigraph:
    subset = set(subset)
    for v in subset:
        g.vertex_index(v)
    verts = tuple(v for v in g.vertices if v in subset)
    edges = tuple(e for e in g.edges if e[0] in subset and e[1] in subset)
    used = {e[2] for e in edges}
    return LabeledDigraph(verts, edges, tuple(c for c in g.labels if c in used))


def reverse_edge(g: LabeledDigraph, tail: str, head: str) -> LabeledDigraph:
    edges = list(g.edges)
    for k, (t, h, c) in enumerate(edges):
        if t == tail and h == head:
            edges[k] = (h, t, c)
            return LabeledDigraph(g.vertices, tuple(edges), g.labels)
    raise GraphError(f"no edge {tail} -> {head}")


def neighborhood(g: LabeledDigraph, v: str) -> set[str]:
    g.vertex_index(v)
    out = set()
    for t, h, _ in g.edges:
        if t == v:
            out.add(h)
        elif h == v:
            out.add(t)
    return out


def isolated_vertices(g: LabeledDigraph) -> list[str]:
    touched = {e[0] for e in g.edges} | {e[1] for e in g.edges}
    return [v for v in g.vertices if v not in touched]
