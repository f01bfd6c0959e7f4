"""Degree-0 linear maps between graph algebras and edge-reversal isomorphisms.

The reversal recipe for an edge a -> b: negate a, fix the other vertices,
negate every label carried by an edge at a other than a -> b, fix the
remaining labels. Every map handed back is first run through
:func:`is_graded_lie_isomorphism`; if the check fails the caller receives a
:class:`Counterexample` instead of a map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exact_linalg import RationalMatrix, rank
from .graph_model import (
    GraphError,
    LabeledDigraph,
    components,
    is_connected,
    neighborhood,
    reverse_edge,
)
from .lie_core import Element, LieAlgebra, bracket, build_lie


class MorphismError(ValueError):
    """A precondition of a construction is violated."""


@dataclass(frozen=True)
class GradedLinearMap:
    source: LieAlgebra
    target: LieAlgebra
    block_minus_one: RationalMatrix
    block_minus_two: RationalMatrix

    def __post_init__(self) -> None:
        if self.block_minus_one.shape != (self.target.n, self.source.n):
            raise ValueError(
                f"g_-1 block is {self.block_minus_one.shape}, expected {(self.target.n, self.source.n)}"
            )
        if self.block_minus_two.shape != (self.target.m, self.source.m):
            raise ValueError(
                f"g_-2 block is {self.block_minus_two.shape}, expected {(self.target.m, self.source.m)}"
            )

    @classmethod
    def identity(cls, alg: LieAlgebra, target: LieAlgebra | None = None) -> "GradedLinearMap":
        return cls(alg, target or alg, RationalMatrix.identity(alg.n), RationalMatrix.identity(alg.m))

    @classmethod
    def diagonal(cls, source: LieAlgebra, target: LieAlgebra, signs: dict[str, int]) -> "GradedLinearMap":
        """Diagonal map with the given sign (default +1) on each basis name."""
        one = [[signs.get(v, 1) if i == j else 0 for j in range(source.n)]
               for i, v in enumerate(source.minus_one_basis)]
        two = [[signs.get(c, 1) if i == j else 0 for j in range(source.m)]
               for i, c in enumerate(source.minus_two_basis)]
        return cls(source, target, RationalMatrix.from_rows(one, source.n),
                   RationalMatrix.from_rows(two, source.m))

    def then(self, other: "GradedLinearMap") -> "GradedLinearMap":
        """``other`` after ``self``."""
        if other.source != self.target:
            raise ValueError("composition of maps with mismatched algebras")
        return GradedLinearMap(
            self.source,
            other.target,
            other.block_minus_one @ self.block_minus_one,
            other.block_minus_two @ self.block_minus_two,
        )

    def as_dict(self) -> dict:
        def rows(m: RationalMatrix):
            return [[str(x) for x in m.row(i)] for i in range(m.rows)]

        return {
            "source_basis": list(self.source.basis_names),
            "target_basis": list(self.target.basis_names),
            "block_minus_one": rows(self.block_minus_one),
            "block_minus_two": rows(self.block_minus_two),
        }


def apply(f: GradedLinearMap, v: Sequence) -> Element:
    if len(v) != f.source.dim:
        raise ValueError(f"element has length {len(v)}, source dimension is {f.source.dim}")
    n = f.source.n
    return tuple(f.block_minus_one @ v[:n]) + tuple(f.block_minus_two @ v[n:])


@dataclass
class IsomorphismReport:
    invertible: bool
    homomorphism: bool
    witness: tuple[str, str] | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.invertible and self.homomorphism

    def __bool__(self) -> bool:
        return self.passed


def is_graded_lie_isomorphism(f: GradedLinearMap) -> IsomorphismReport:
    """Both blocks invertible and f[a,b] = [fa,fb] on every basis pair."""
    blocks_square = f.source.n == f.target.n and f.source.m == f.target.m
    invertible = (
        blocks_square
        and rank(f.block_minus_one) == f.source.n
        and rank(f.block_minus_two) == f.source.m
    )
    src = f.source
    images = [apply(f, src.basis_vector(k)) for k in range(src.dim)]
    for a, b in combinations(range(src.dim), 2):
        lhs = apply(f, bracket(src, src.basis_vector(a), src.basis_vector(b)))
        rhs = bracket(f.target, images[a], images[b])
        if lhs != rhs:
            names = src.basis_names
            return IsomorphismReport(
                invertible, False, (names[a], names[b]),
                f"f[{names[a]},{names[b]}] != [f{names[a]},f{names[b]}]",
            )
    detail = "" if invertible else "a block is singular or not square"
    return IsomorphismReport(invertible, True, None, detail)


@dataclass(frozen=True)
class Counterexample:
    """A constructed map that failed verification."""

    graph: LabeledDigraph
    reversed_graph: LabeledDigraph
    candidate: GradedLinearMap
    report: IsomorphismReport
    step: tuple[str, str] | None = None

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Isomorphism:
    map: GradedLinearMap
    graph: LabeledDigraph

    def __iter__(self):
        yield self.map
        yield self.graph


def reversal_map(g: LabeledDigraph, tail: str, head: str) -> tuple[GradedLinearMap, LabeledDigraph]:
    """The reversal recipe for one edge, with no hypothesis checks and no verification."""
    g2 = reverse_edge(g, tail, head)
    _, reversed_label = g.signed_label(tail, head)
    signs = {tail: -1}
    for y in neighborhood(g, tail):
        if y == head:
            continue
        _, c = g.signed_label(tail, y)
        if c != reversed_label:
            signs[c] = -1
    return GradedLinearMap.diagonal(build_lie(g), build_lie(g2), signs), g2


def _verified(g, g2, f, step=None):
    report = is_graded_lie_isomorphism(f)
    if report.passed:
        return Isomorphism(f, g2)
    return Counterexample(g, g2, f, report, step)


def _require_edge(g: LabeledDigraph, tail: str, head: str) -> str:
    sign, c = g.signed_label(tail, head)
    if sign != 1:
        raise GraphError(f"no edge {tail} -> {head}")
    return c


def reversal_isomorphism(g: LabeledDigraph, tail: str, head: str) -> Isomorphism | Counterexample:
    c = _require_edge(g, tail, head)
    k = g.label_multiplicity(c)
    if k != 1:
        raise MorphismError(f"label {c!r} occurs {k} times; the reversed edge must carry a unique label")
    f, g2 = reversal_map(g, tail, head)
    return _verified(g, g2, f, (tail, head))


def relabel_group_reversal(g: LabeledDigraph, label: str) -> Isomorphism | Counterexample:
    """Reverse every edge labelled ``label``, one component at a time."""
    if label not in g.labels:
        raise MorphismError(f"unknown label {label!r}")
    for comp in components(g):
        cs = set(comp)
        k = sum(1 for e in g.edges if e[2] == label and e[0] in cs)
        if k > 1:
            raise MorphismError(
                f"label {label!r} occurs {k} times in the component containing {comp[0]!r}"
            )
    targets = [(t, h) for t, h, c in g.edges if c == label]
    current = g
    total = GradedLinearMap.identity(build_lie(g))
    for t, h in targets:
        step, current = reversal_map(current, t, h)
        total = total.then(step)
    return _verified(g, current, total)


def orientation_isomorphism(g: LabeledDigraph, edges: Iterable[tuple[str, str]]) -> Isomorphism | Counterexample:
    """Reverse the listed edges (given as tail, head in ``g``) one at a time.

    Each step is the single-edge recipe on the current graph, verified on
    its own; the composite is verified again against the final graph.
    """
    if not is_connected(g):
        raise MorphismError("graph is not connected")
    if len(g.labels) != len(g.edges):
        raise MorphismError("edges are not uniquely labeled")
    edges = list(edges)
    for t, h in edges:
        _require_edge(g, t, h)
    current = g
    total = GradedLinearMap.identity(build_lie(g))
    for t, h in edges:
        step = reversal_isomorphism(current, t, h)
        if isinstance(step, Counterexample):
            return step
        total = total.then(step.map)
        current = step.graph
    return _verified(g, current, total)


def orient(g: LabeledDigraph, mask: int) -> LabeledDigraph:
    """Reverse edge k of ``g`` whenever bit k of ``mask`` is set."""
    return LabeledDigraph(
        g.vertices,
        tuple((h, t, c) if mask >> k & 1 else (t, h, c) for k, (t, h, c) in enumerate(g.edges)),
        g.labels,
    )


MAX_SEARCH_EDGES = 8


@dataclass(frozen=True)
class OrientationHit:
    mask: int
    graph: LabeledDigraph
    map: GradedLinearMap
    candidate_index: int


def find_isomorphism_by_orientation_search(
    source_alg: LieAlgebra,
    g: LabeledDigraph,
    candidate=None,
    *,
    family: Sequence | None = None,
) -> OrientationHit | None:
    """Try candidate maps against every orientation of ``g``.

    ``candidate`` is a pair ``(block_minus_one, block_minus_two)`` given as
    matrices or nested lists; ``family`` is a sequence of such pairs.
    Orientations are visited in increasing bitmask order, mask 0 being ``g``
    as given, and the first verified (orientation, candidate) is returned.
    """
    if len(g.edges) > MAX_SEARCH_EDGES:
        raise MorphismError(
            f"{len(g.edges)} edges exceeds the search budget of {MAX_SEARCH_EDGES}"
        )
    pairs = list(family or [])
    if candidate is not None:
        pairs.insert(0, candidate)
    if not pairs:
        raise ValueError("no candidate maps supplied")
    blocks = [(_as_matrix(a, g.n, source_alg.n), _as_matrix(b, g.m, source_alg.m)) for a, b in pairs]
    for mask in range(1 << len(g.edges)):
        h = orient(g, mask)
        target = build_lie(h)
        for idx, (b1, b2) in enumerate(blocks):
            f = GradedLinearMap(source_alg, target, b1, b2)
            if is_graded_lie_isomorphism(f).passed:
                return OrientationHit(mask, h, f, idx)
    return None


def _as_matrix(x, rows: int, cols: int) -> RationalMatrix:
    if isinstance(x, RationalMatrix):
        return x
    if rows == 0 or cols == 0:
        return RationalMatrix.zeros(rows, cols)
    return RationalMatrix.from_rows(x, cols)


def images_to_blocks(source: LieAlgebra, target_vertices: Sequence[str], target_labels: Sequence[str],
                     images: dict[str, dict[str, object]]):
    """Convert ``{source_name: {target_name: coeff}}`` into the two blocks."""
    vpos = {v: i for i, v in enumerate(target_vertices)}
    lpos = {c: i for i, c in enumerate(target_labels)}
    b1 = [[Fraction(0)] * source.n for _ in target_vertices]
    b2 = [[Fraction(0)] * source.m for _ in target_labels]
    for j, x in enumerate(source.minus_one_basis):
        for y, c in images.get(x, {}).items():
            if y not in vpos:
                raise MorphismError(f"image of vertex {x!r} leaves g_-1 ({y!r})")
            b1[vpos[y]][j] += Fraction(c)
    for j, x in enumerate(source.minus_two_basis):
        for y, c in images.get(x, {}).items():
            if y not in lpos:
                raise MorphismError(f"image of label {x!r} leaves g_-2 ({y!r})")
            b2[lpos[y]][j] += Fraction(c)
    return (RationalMatrix.from_rows(b1, source.n) if target_vertices else RationalMatrix.zeros(0, source.n),
            RationalMatrix.from_rows(b2, source.m) if target_labels else RationalMatrix.zeros(0, source.m))


def sweep_orientations(g: LabeledDigraph) -> dict:
    """Connect ``g`` to each of its 2^|E| orientations via orientation_isomorphism."""
    passed = failed = 0
    failures = []
    for mask in range(1 << len(g.edges)):
        flips = [(t, h) for k, (t, h, _) in enumerate(g.edges) if mask >> k & 1]
        result = orientation_isomorphism(g, flips)
        if isinstance(result, Isomorphism) and result.graph == orient(g, mask):
            passed += 1
        else:
            failed += 1
            failures.append(mask)
    return {"orientations": 1 << len(g.edges), "passed": passed, "failed": failed, "failed_masks": failures}
