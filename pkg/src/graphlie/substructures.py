"""Subalgebras and graph-ideals coming from induced subgraphs.

For a vertex subset S the candidate subspace is spanned by S together with
the labels of the induced subgraph on S. Two routes decide whether it is an
ideal: the combinatorial test (every edge leaving S carries a label already
in the induced label set) and a brute-force closure check against the full
basis. The brute-force answer is the one reported; the combinatorial answer
is kept alongside so disagreements stay visible.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .exact_linalg import solve_membership
from .graph_model import (
    LabeledDigraph,
    components,
    induced_subgraph,
    isolated_vertices,
    neighborhood,
)
from .lie_core import LieAlgebra, bracket, build_lie


class Triviality(str, Enum):
    NONE = ""
    WHOLE = "whole algebra"
    CENTRAL = "inside g_-2"
    ABELIAN_FACTOR = "abelian factor"
    # some vertex of S has no neighbour inside S, so the span splits off an
    # abelian summand; the tables leave these out
    ABELIAN_SUMMAND = "abelian summand"


@dataclass(frozen=True)
class SubstructureReport:
    vertices: tuple[str, ...]
    labels: tuple[str, ...]
    is_subalgebra: bool
    is_graph_ideal: bool
    combinatorial_ideal: bool
    triviality: Triviality

    @property
    def is_trivial(self) -> bool:
        return self.triviality is not Triviality.NONE

    @property
    def span(self) -> frozenset[str]:
        return frozenset(self.vertices + self.labels)

    @property
    def non_graph_ideal(self) -> bool:
        """Closure oracle says ideal but the combinatorial criterion does not."""
        return self.is_graph_ideal and not self.combinatorial_ideal

    def as_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "labels": list(self.labels),
            "subalgebra": self.is_subalgebra,
            "graph_ideal": self.is_graph_ideal,
            "combinatorial_ideal": self.combinatorial_ideal,
            "trivial": self.is_trivial,
            "trivial_reason": self.triviality.value or None,
        }

    def describe(self) -> str:
        return "<" + ",".join(self.vertices + self.labels) + ">"


def _span_vectors(alg: LieAlgebra, names: Iterable[str]):
    return [alg.basis_vector(x) for x in names]


def _in_span(vectors, v) -> bool:
    if not any(v):
        return True
    return solve_membership(vectors, v) is not None


def _closed(alg: LieAlgebra, left: Iterable[str], span_names: tuple[str, ...]) -> bool:
    vecs = _span_vectors(alg, span_names)
    for a in left:
        va = alg.basis_vector(a)
        for b in span_names:
            if not _in_span(vecs, bracket(alg, va, alg.basis_vector(b))):
                return False
    return True


def brute_force_subalgebra(alg: LieAlgebra, span_names: tuple[str, ...]) -> bool:
    return _closed(alg, span_names, span_names)


def brute_force_ideal(alg: LieAlgebra, span_names: tuple[str, ...]) -> bool:
    return _closed(alg, alg.basis_names, span_names)


def combinatorial_ideal(g: LabeledDigraph, subset: Iterable[str]) -> bool:
    subset = set(subset)
    inner = set(induced_subgraph(g, subset).labels)
    for x in subset:
        for y in neighborhood(g, x):
            _, c = g.signed_label(x, y)
            if c not in inner:
                return False
    return True


def _triviality(g: LabeledDigraph, sub: LabeledDigraph) -> Triviality:
    if not sub.vertices:
        return Triviality.CENTRAL
    if len(sub.vertices) == g.n and len(sub.labels) == g.m:
        return Triviality.WHOLE
    iso = set(isolated_vertices(g))
    if all(v in iso for v in sub.vertices):
        return Triviality.ABELIAN_FACTOR
    if isolated_vertices(sub):
        return Triviality.ABELIAN_SUMMAND
    return Triviality.NONE


def _report(g: LabeledDigraph, alg: LieAlgebra, subset: Iterable[str]) -> SubstructureReport:
    sub = induced_subgraph(g, subset)
    span_names = sub.vertices + sub.labels
    return SubstructureReport(
        vertices=sub.vertices,
        labels=sub.labels,
        is_subalgebra=brute_force_subalgebra(alg, span_names),
        is_graph_ideal=brute_force_ideal(alg, span_names),
        combinatorial_ideal=combinatorial_ideal(g, sub.vertices),
        triviality=_triviality(g, sub),
    )


def check_subalgebra(g: LabeledDigraph, subset: Iterable[str]) -> SubstructureReport:
    return _report(g, build_lie(g), subset)


def check_graph_ideal(g: LabeledDigraph, subset: Iterable[str]) -> SubstructureReport:
    return _report(g, build_lie(g), subset)


def component_ideals(g: LabeledDigraph) -> list[SubstructureReport]:
    alg = build_lie(g)
    return [_report(g, alg, comp) for comp in components(g)]


ENUMERATION_WARN_AT = 16


def enumerate_substructures(g: LabeledDigraph, max_subset_size: int | None = None) -> list[SubstructureReport]:
    """Reports for every vertex subset of size <= ``max_subset_size``.

    Nontrivial reports come first; within each group subsets are ordered by
    size and then lexicographically by vertex position. Cost is 2^|V| subset
    checks at the default size cap.
    """
    if max_subset_size is None:
        max_subset_size = g.n
    if max_subset_size > g.n:
        raise ValueError(f"max_subset_size {max_subset_size} exceeds |V| = {g.n}")
    if g.n >= ENUMERATION_WARN_AT and max_subset_size > 3:
        warnings.warn(f"enumerating subsets of a {g.n}-vertex graph is exponential", stacklevel=2)
    alg = build_lie(g)
    reports = [
        _report(g, alg, subset)
        for k in range(max_subset_size + 1)
        for subset in combinations(g.vertices, k)
    ]
    return [r for r in reports if not r.is_trivial] + [r for r in reports if r.is_trivial]
