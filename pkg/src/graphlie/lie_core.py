"""The 2-step nilpotent Lie algebra attached to a labeled directed graph.

Basis order is vertices first, then labels. Brackets of two vertices are
read off the structure tensor; every bracket involving a label vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .exact_linalg import as_rational, span_rank
from .graph_model import LabeledDigraph

Element = tuple[Fraction, ...]


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    """Stratified algebra g_-2 + g_-1 with structure constants in {-1, 0, 1}.

    ``structure[i][j]`` maps a label index to the nonzero coefficient of
    ``[x_i, x_j]``; absent pairs bracket to zero. Validation of the tensor is
    left to :func:`verify_axioms` so that malformed tensors can be reported
    rather than rejected on construction.
    """

    minus_one_basis: tuple[str, ...]
    minus_two_basis: tuple[str, ...]
    structure: tuple[tuple[dict[int, int], ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_brackets(
        cls,
        vertices: Sequence[str],
        labels: Sequence[str],
        brackets: dict[tuple[int, int, int], int],
    ) -> "LieAlgebra":
        """Build from a sparse map (i, j, l) -> s[i][j][l]. Entries are taken
        verbatim, so antisymmetry must be supplied by the caller."""
        n = len(vertices)
        s = [[{} for _ in range(n)] for _ in range(n)]
        for (i, j, l), v in brackets.items():
            if v:
                s[i][j][l] = v
        return cls(tuple(vertices), tuple(labels), tuple(tuple(r) for r in s))

    @property
    def n(self) -> int:
        return len(self.minus_one_basis)

    @property
    def m(self) -> int:
        return len(self.minus_two_basis)

    @property
    def dim(self) -> int:
        return self.n + self.m

    @property
    def basis_names(self) -> tuple[str, ...]:
        return self.minus_one_basis + self.minus_two_basis

    def s(self, i: int, j: int, l: int) -> int:
        return self.structure[i][j].get(l, 0)

    def basis_vector(self, k: int | str) -> Element:
        if isinstance(k, str):
            k = self.index(k)
        return tuple(Fraction(int(i == k)) for i in range(self.dim))

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise AlgebraError(f"unknown basis element {name!r}") from None

    def element(self, coeffs: dict[str, object]) -> Element:
        v = [Fraction(0)] * self.dim
        for name, c in coeffs.items():
            v[self.index(name)] += as_rational(c)
        return tuple(v)

    def zero(self) -> Element:
        return (Fraction(0),) * self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.minus_one_basis == other.minus_one_basis
            and self.minus_two_basis == other.minus_two_basis
            and _canonical(self.structure) == _canonical(other.structure)
        )

    def __hash__(self) -> int:
        return hash((self.minus_one_basis, self.minus_two_basis, _canonical(self.structure)))


def _canonical(structure) -> tuple:
    return tuple(
        tuple(tuple(sorted((l, v) for l, v in d.items() if v)) for d in row) for row in structure
    )


def build_lie(g: LabeledDigraph) -> LieAlgebra:
    lidx = {c: k for k, c in enumerate(g.labels)}
    brackets = {}
    for t, h, c in g.edges:
        i, j, l = g.vertex_index(t), g.vertex_index(h), lidx[c]
        brackets[(i, j, l)] = 1
        brackets[(j, i, l)] = -1
    return LieAlgebra.from_brackets(g.vertices, g.labels, brackets)


def bracket(alg: LieAlgebra, u: Sequence, v: Sequence) -> Element:
    if len(u) != alg.dim or len(v) != alg.dim:
        raise AlgebraError(f"element size mismatch: expected {alg.dim}, got {len(u)} and {len(v)}")
    n = alg.n
    out = [Fraction(0)] * alg.dim
    for i in range(n):
        ui = u[i]
        if not ui:
            continue
        row = alg.structure[i]
        for j in range(n):
            vj = v[j]
            if not vj:
                continue
            for l, s in row[j].items():
                out[n + l] += s * ui * vj
    return tuple(out)


@dataclass
class CheckResult:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        return {"check": self.name, "passed": self.passed, "witness": self.witness, "detail": self.detail}


@dataclass
class AxiomReport:
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def verify_axioms(alg: LieAlgebra) -> AxiomReport:
    """Exhaustive check over basis tuples.

    Covers antisymmetry, the Jacobi identity, vanishing of double brackets,
    and [g_-1, g_-1] = g_-2. Each failed check carries one witness.
    """
    n, d = alg.n, alg.dim
    basis = [alg.basis_vector(k) for k in range(d)]
    br = [[bracket(alg, basis[a], basis[b]) for b in range(d)] for a in range(d)]

    anti = CheckResult("antisymmetry", True)
    for i in range(n):
        for j in range(i, n):
            if any(alg.s(i, j, l) != -alg.s(j, i, l) for l in range(alg.m)):
                anti = CheckResult("antisymmetry", False, (i + 1, j + 1),
                                   f"[{alg.basis_names[i]},{alg.basis_names[j]}] is not antisymmetric")
                break
        if not anti.passed:
            break

    jacobi = CheckResult("jacobi", True)
    nilpotent = CheckResult("two_step", True)
    for a, b, c in product(range(d), repeat=3):
        ab_c = bracket(alg, br[a][b], basis[c])
        if nilpotent.passed and any(ab_c):
            nilpotent = CheckResult("two_step", False, (a + 1, b + 1, c + 1), "[[a,b],c] != 0")
        if jacobi.passed:
            total = [
                x + y + z
                for x, y, z in zip(
                    ab_c, bracket(alg, br[b][c], basis[a]), bracket(alg, br[c][a], basis[b])
                )
            ]
            if any(total):
                jacobi = CheckResult("jacobi", False, (a + 1, b + 1, c + 1), "Jacobi sum != 0")
        if not (jacobi.passed or nilpotent.passed):
            break

    images = [br[i][j] for i, j in combinations(range(n), 2) if any(br[i][j])]
    r = span_rank(images, d)
    gen = CheckResult(
        "stratified_generation",
        r == alg.m,
        None if r == alg.m else (r, alg.m),
        f"dim [g_-1,g_-1] = {r}, dim g_-2 = {alg.m}",
    )
    return AxiomReport([anti, jacobi, nilpotent, gen])


def graph_from_algebra(alg: LieAlgebra) -> LabeledDigraph:
    """Recover a labeled directed graph whose algebra is ``alg``.

    Each nonzero pair is emitted with the orientation that makes its
    constant +1.
    """
    edges = []
    for i, j in combinations(range(alg.n), 2):
        nz = {l: v for l, v in alg.structure[i][j].items() if v}
        back = {l: v for l, v in alg.structure[j][i].items() if v}
        pair = (alg.minus_one_basis[i], alg.minus_one_basis[j])
        if {l: -v for l, v in back.items()} != nz:
            raise AlgebraError(f"pair {pair} is not antisymmetric")
        if len(nz) > 1:
            raise AlgebraError(f"two labels on pair {pair}")
        if not nz:
            continue
        (l, v), = nz.items()
        if v not in (1, -1):
            raise AlgebraError(f"structure constant {v} on pair {pair} is not +-1")
        c = alg.minus_two_basis[l]
        edges.append((pair[0], pair[1], c) if v == 1 else (pair[1], pair[0], c))
    return LabeledDigraph(alg.minus_one_basis, tuple(edges), alg.minus_two_basis)


def stratification(alg: LieAlgebra) -> tuple[tuple[str, ...], tuple[str, ...]]:
    return alg.minus_one_basis, alg.minus_two_basis


def algebra_to_json(alg: LieAlgebra) -> dict:
    rels = []
    for i, j in combinations(range(alg.n), 2):
        for l, v in sorted(alg.structure[i][j].items()):
            if v:
                rels.append({
                    "left": alg.minus_one_basis[i],
                    "right": alg.minus_one_basis[j],
                    "result": alg.minus_two_basis[l],
                    "sign": v,
                })
    return {
        "dim": alg.dim,
        "generators": list(alg.minus_one_basis),
        "center": list(alg.minus_two_basis),
        "relations": rels,
    }
