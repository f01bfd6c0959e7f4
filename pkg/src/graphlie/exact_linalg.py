"""Exact linear algebra over the rationals.

Entries are :class:`fractions.Fraction`; nothing in here touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def as_rational(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass int, Fraction or a 'p/q' string")
    return Fraction(value)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense immutable matrix with rational entries, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(as_rational(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], self.rows
        )

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = [other.column(j) for j in range(other.cols)]
            return RationalMatrix.from_rows(
                [[_dot(self.row(i), c) for c in cols] for i in range(self.rows)],
                other.cols,
            )
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} does not fit {self.shape}")
        return tuple(_dot(self.row(i), vec) for i in range(self.rows))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "RationalMatrix":
        c = as_rational(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def _dot(a: Iterable[Fraction], b: Iterable[Fraction]) -> Fraction:
    total = Fraction(0)
    for x, y in zip(a, b):
        if x and y:
            total += x * y
    return total


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan elimination; returns pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow[:] = [x * inv for x in prow]
        nz = [k for k in range(c, ncols) if prow[k]]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                for k in nz:
                    row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and the ascending list of pivot columns."""
    rows = m.to_rows()
    pivots = _rref_rows(rows, m.cols)
    return RationalMatrix.from_rows(rows, m.cols), pivots


def rank(m: RationalMatrix) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: RationalMatrix) -> list[tuple[Fraction, ...]]:
    """Basis of {v : m v = 0}, one vector per free column.

    Each vector has a 1 in its free column and zeros in the other free
    columns, so the basis is the canonical one read off the RREF.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r, f]
        basis.append(tuple(v))
    return basis


def solve_membership(vectors: Sequence[Sequence[Fraction]], target: Sequence[Fraction]):
    """Coefficients expressing ``target`` in ``vectors``, or None if not in the span."""
    if not vectors:
        return [] if not any(target) else None
    n = len(vectors)
    dim = len(target)
    aug = RationalMatrix.from_rows(
        [[vectors[k][i] for k in range(n)] + [target[i]] for i in range(dim)], n + 1
    )
    reduced, pivots = rref(aug)
    if n in pivots:
        return None
    coeffs = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        coeffs[pc] = reduced[r, n]
    return coeffs


def span_rank(vectors: Sequence[Sequence[Fraction]], dim: int) -> int:
    if not vectors:
        return 0
    return rank(RationalMatrix.from_rows(vectors, dim))
