"""Exact rational scalars and sparse linear algebra over Q.

Vectors are sparse ``dict[int, Fraction]`` with no stored zeros.  Matrices are
:class:`SparseMatrix` values.  Pivots are always chosen leftmost, so the
reduced representative of a vector modulo a span is canonical.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction
SparseVector = dict  # int -> Fraction


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(x)


def clean(vec: Mapping[int, Fraction]) -> dict:
    return {k: to_fraction(v) for k, v in vec.items() if v != 0}


def axpy(y: dict, a: Fraction, x: Mapping) -> None:
    """In place ``y += a*x`` with zero removal."""
    if a == 0:
        return
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


@dataclass(frozen=True)
class SparseMatrix:
    rows: int
    cols: int
    entries: Mapping[tuple, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        ent = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            v = to_fraction(v)
            if v:
                ent[(r, c)] = v
        object.__setattr__(self, "entries", ent)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "SparseMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        ent = {}
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged matrix")
            for j, v in enumerate(row):
                if v:
                    ent[(i, j)] = v
        return cls(nr, nc, ent)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Mapping[int, Fraction]]) -> "SparseMatrix":
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                ent[(i, j)] = v
        return cls(nrows, len(columns), ent)

    @classmethod
    def from_rows(cls, ncols: int, rows: Sequence[Mapping[int, Fraction]]) -> "SparseMatrix":
        ent = {}
        for i, row in enumerate(rows):
            for j, v in row.items():
                ent[(i, j)] = v
        return cls(len(rows), ncols, ent)

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def to_dense(self) -> list:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_dicts(self) -> list:
        out = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def column_dicts(self) -> list:
        out = [dict() for _ in range(self.cols)]
        for (r, c), v in self.entries.items():
            out[c][r] = v
        return out

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def matvec(self, vec: Mapping[int, Fraction]) -> dict:
        out: dict = {}
        cols = self.column_dicts()
        for j, x in vec.items():
            axpy(out, x, cols[j])
        return out

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of Q^dim.

    Each stored row has a leading 1 at its pivot and zeros to the left of it.
    Rows are kept fully reduced against each other so that ``rows()`` is the
    reduced row-echelon form of the span.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._rows: dict = {}  # pivot -> row
        self._order: list = []  # sorted pivots
        self._lock = threading.Lock()

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list:
        return list(self._order)

    def _check(self, vec):
        for k in vec:
            if not 0 <= k < self.dim:
                raise ValueError(f"coordinate {k} outside dimension {self.dim}")

    def reduce(self, vec: Mapping[int, Fraction]) -> dict:
        self._check(vec)
        v = clean(vec)
        if not v:
            return v
        for p in self._order:
            c = v.get(p)
            if c:
                axpy(v, -c, self._rows[p])
        return v

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        """Add a vector; return True iff it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        with self._lock:
            for q, row in self._rows.items():
                c = row.get(p)
                if c:
                    axpy(row, -c, v)
            self._rows[p] = v
            lo, hi = 0, len(self._order)
            while lo < hi:
                mid = (lo + hi) // 2
                if self._order[mid] < p:
                    lo = mid + 1
                else:
                    hi = mid
            self._order.insert(lo, p)
        return True

    def extend(self, vecs: Iterable[Mapping[int, Fraction]]) -> int:
        return sum(1 for v in vecs if self.add(v))

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def rows(self) -> list:
        return [dict(self._rows[p]) for p in self._order]


def row_echelon(m: SparseMatrix):
    """Reduced row-echelon form: returns ``(echelon, pivots, rank)``."""
    basis = EchelonBasis(m.cols)
    basis.extend(m.row_dicts())
    rows = basis.rows()
    echelon = SparseMatrix.from_rows(m.cols, rows + [{}] * (m.rows - len(rows)))
    return echelon, basis.pivots, basis.rank


def rank(m: SparseMatrix) -> int:
    # Eliminate along the shorter side.
    if m.rows <= m.cols:
        vecs, dim = m.row_dicts(), m.cols
    else:
        vecs, dim = m.column_dicts(), m.rows
    basis = EchelonBasis(dim)
    basis.extend(vecs)
    return basis.rank


def rank_of_vectors(vecs: Iterable[Mapping[int, Fraction]], dim: int) -> int:
    basis = EchelonBasis(dim)
    basis.extend(vecs)
    return basis.rank


def kernel_basis(m: SparseMatrix) -> list:
    """Sparse basis of the right kernel, one vector per free column."""
    ech = EchelonBasis(m.cols)
    ech.extend(m.row_dicts())
    rows = {min(r): r for r in ech.rows()}
    pivset = set(rows)
    out = []
    for f in range(m.cols):
        if f in pivset:
            continue
        v = {f: Fraction(1)}
        for p, row in rows.items():
            c = row.get(f)
            if c:
                v[p] = -c
        out.append(v)
    return out


def reduce_modulo(span: Sequence[Sequence], v: Sequence) -> list:
    """Canonical representative of dense ``v`` modulo the span of dense vectors."""
    n = len(v)
    for s in span:
        if len(s) != n:
            raise ValueError(f"dimension mismatch: {len(s)} != {n}")
    basis = EchelonBasis(n)
    basis.extend({i: to_fraction(x) for i, x in enumerate(s) if x} for s in span)
    red = basis.reduce({i: to_fraction(x) for i, x in enumerate(v) if x})
    return [red.get(i, Fraction(0)) for i in range(n)]


def solve(m: SparseMatrix, rhs: Mapping[int, Fraction]) -> dict:
    """One solution x of ``m x = rhs``; raises ValueError if inconsistent."""
    aug_col = m.cols
    rows = m.row_dicts()
    for i, r in enumerate(rows):
        c = rhs.get(i)
        if c:
            r[aug_col] = to_fraction(c)
    for i in rhs:
        if not 0 <= i < m.rows:
            raise ValueError("rhs index out of range")
    basis = EchelonBasis(m.cols + 1)
    basis.extend(rows)
    x = {}
    for r in basis.rows():
        p = min(r)
        if p == aug_col:
            raise ValueError("inconsistent linear system")
        c = r.get(aug_col)
        if c:
            x[p] = c
    return x
