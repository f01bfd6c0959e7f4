"""Degree-0 derivations of a graph algebra, computed as an exact nullspace.

Unknowns are the entries of the two diagonal blocks of a graded map D:
first the n x n block on g_-1 (column-major: entry (r, i) is the coefficient
of x_r in D x_i), then the m x m block on g_-2 in the same layout. For each
vertex pair i < j and each label l one equation says that the l-coordinate
of D[x_i, x_j] - [D x_i, x_j] - [x_i, D x_j] vanishes.

Published closed forms for complete bipartite graphs K_{m,n}, edges
directed from the m-side to the n-side, are kept in
:func:`kmn_dimension_formula`:

* one label:          (m+n)(m+n+1)/2 + 1
* mn distinct labels: m^2 + n^2 + m^2 n^2 - mn

The nullspace disagrees with both once the graph is big enough. For one
label they coincide only when m + n <= 3; the equations behind the
formula are not independent. For distinct labels they coincide only at
(1,2) and (2,1); the label block is fixed entrywise by the vertex blocks,
which is m^2 n^2 conditions rather than mn. :func:`kmn_dimension_exact`
gives the counts the solver produces. The distinct-label formula is also
refused at m = n = 1, where its derivation has no second row or column to
eliminate against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exact_linalg import RationalMatrix, nullspace_basis, solve_membership
from .graph_model import LabeledDigraph
from .lie_core import LieAlgebra, bracket
from .morphisms import GradedLinearMap, apply


@dataclass(frozen=True)
class DerivationSystem:
    n: int
    m: int
    matrix: RationalMatrix

    @property
    def unknowns(self) -> int:
        return self.n * self.n + self.m * self.m

    def vertex_var(self, r: int, i: int) -> int:
        return i * self.n + r

    def label_var(self, p: int, l: int) -> int:
        return self.n * self.n + l * self.m + p


@dataclass(frozen=True)
class DerivationSpace:
    basis: tuple[GradedLinearMap, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def derivation_system(alg: LieAlgebra) -> DerivationSystem:
    n, m = alg.n, alg.m
    probe = DerivationSystem(n, m, RationalMatrix.zeros(0, n * n + m * m))
    rows = []
    for i, j in combinations(range(n), 2):
        for l in range(m):
            row = [0] * probe.unknowns
            # D[x_i, x_j] projected to c_l: sum_p s[i][j][p] * E[l][p]
            for p, s in alg.structure[i][j].items():
                row[probe.label_var(l, p)] += s
            # [D x_i, x_j] = sum_r A[r][i] s[r][j][l]
            for r in range(n):
                s = alg.structure[r][j].get(l, 0)
                if s:
                    row[probe.vertex_var(r, i)] -= s
                s = alg.structure[i][r].get(l, 0)
                if s:
                    row[probe.vertex_var(r, j)] -= s
            rows.append(row)
    return DerivationSystem(n, m, RationalMatrix.from_rows(rows, probe.unknowns) if rows
                            else RationalMatrix.zeros(0, probe.unknowns))


def _to_map(alg: LieAlgebra, system: DerivationSystem, v) -> GradedLinearMap:
    n, m = system.n, system.m
    a = [[v[system.vertex_var(r, i)] for i in range(n)] for r in range(n)]
    e = [[v[system.label_var(p, l)] for l in range(m)] for p in range(m)]
    return GradedLinearMap(
        alg, alg,
        RationalMatrix.from_rows(a, n) if n else RationalMatrix.zeros(0, 0),
        RationalMatrix.from_rows(e, m) if m else RationalMatrix.zeros(0, 0),
    )


def der0(alg: LieAlgebra) -> DerivationSpace:
    system = derivation_system(alg)
    return DerivationSpace(tuple(_to_map(alg, system, v) for v in nullspace_basis(system.matrix)))


def is_derivation(d: GradedLinearMap) -> bool:
    alg = d.source
    basis = [alg.basis_vector(k) for k in range(alg.dim)]
    for a, b in combinations(range(alg.dim), 2):
        lhs = apply(d, bracket(alg, basis[a], basis[b]))
        rhs = [x + y for x, y in zip(bracket(alg, apply(d, basis[a]), basis[b]),
                                     bracket(alg, basis[a], apply(d, basis[b])))]
        if list(lhs) != rhs:
            return False
    return True


def flatten(d: GradedLinearMap) -> tuple[Fraction, ...]:
    return d.block_minus_one.transpose().entries + d.block_minus_two.transpose().entries


def commutator(d1: GradedLinearMap, d2: GradedLinearMap) -> GradedLinearMap:
    return GradedLinearMap(
        d1.source, d1.target,
        d1.block_minus_one @ d2.block_minus_one - d2.block_minus_one @ d1.block_minus_one,
        d1.block_minus_two @ d2.block_minus_two - d2.block_minus_two @ d1.block_minus_two,
    )


def in_span(space: DerivationSpace, d: GradedLinearMap) -> bool:
    return solve_membership([flatten(b) for b in space.basis], flatten(d)) is not None


def build_kmn_single_label(m: int, n: int) -> LabeledDigraph:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]
    return LabeledDigraph(tuple(xs + ys), tuple((x, y, "u") for x in xs for y in ys))


def build_kmn_distinct_labels(m: int, n: int) -> LabeledDigraph:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    xs = [f"x{i}" for i in range(1, m + 1)]
    ys = [f"y{j}" for j in range(1, n + 1)]
    edges = tuple((xs[i], ys[j], f"c{i + 1}_{j + 1}") for i in range(m) for j in range(n))
    return LabeledDigraph(tuple(xs + ys), edges)


def kmn_dimension_formula(m: int, n: int, labeling: str) -> int:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if labeling == "single":
        return (m + n) * (m + n + 1) // 2 + 1
    if labeling == "distinct":
        if max(m, n) < 2:
            raise ValueError(
                "distinct-label formula does not apply at m = n = 1 "
                "(it gives 2; the Heisenberg algebra has dim Der_0 = 4)"
            )
        return m * m + n * n + m * m * n * n - m * n
    raise ValueError(f"labeling must be 'single' or 'distinct', not {labeling!r}")


def complete_graph_distinct_labels(p: int) -> LabeledDigraph:
    """K_p with all C(p,2) edges labelled differently: the free 2-step algebra on p generators."""
    xs = [f"x{i}" for i in range(1, p + 1)]
    edges = tuple((xs[i], xs[j], f"c{i + 1}_{j + 1}") for i, j in combinations(range(p), 2))
    return LabeledDigraph(tuple(xs), edges)


def kmn_dimension_exact(m: int, n: int, labeling: str) -> int:
    """dim Der_0 for K_{m,n} as the nullspace actually comes out.

    Single label: the sums of the off-diagonal vertex blocks give m-1 and
    n-1 independent conditions and the mn conditions A_i + D_j = lambda
    have rank m+n-1, leaving (m+n-1)^2 + 3. Distinct labels: the label
    block is determined by the vertex blocks; the off-diagonal vertex block
    from the n-side survives only when m = 1 (and symmetrically).
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if labeling == "single":
        return (m + n - 1) ** 2 + 3
    if labeling == "distinct":
        return m * m + n * n + (n if m == 1 else 0) + (m if n == 1 else 0)
    raise ValueError(f"labeling must be 'single' or 'distinct', not {labeling!r}")
