"""Exact dense vectors and matrices over Q(i, sqrt2, sqrt3).

Internally a vector is stored "packed": an integer coefficient array of
shape (dim, 8) over the field basis together with a single positive common
denominator, always reduced so the gcd of all numerators and the
denominator is 1.  This keeps every operation exact while letting the hot
matrix-vector products run as one integer matmul: each matrix carries a
lazily-built kernel with the basis multiplication tensor pre-contracted
into its entries.

Arithmetic uses int64 arrays while the values provably fit and falls back
to arbitrary-precision Python integers otherwise, so results never depend
on the representation chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .algebra import BASIS_MUL, AlgebraicNumber

# Structure tensor of the basis: _T[a, b, c] = coefficient of basis c in
# (basis a * basis b).
_T = np.zeros((8, 8, 8), dtype=np.int64)
for _a in range(8):
    for _b in range(8):
        _idx, _coef = BASIS_MUL[_a][_b]
        _T[_a, _b, _idx] = _coef

_INT64_SAFE = 2 ** 62


def _pack(entries: Sequence[AlgebraicNumber]):
    """Flatten AlgebraicNumbers to (int array of shape (len, 8), common den)."""
    den = 1
    for e in entries:
        for f in e.coeffs:
            den = den * f.denominator // math.gcd(den, f.denominator)
    num = [[f.numerator * (den // f.denominator) for f in e.coeffs]
           for e in entries]
    return _canonical(np.array(num, dtype=object), den)


def _canonical(num: np.ndarray, den: int):
    """Reduce to lowest terms and pick the narrowest safe dtype."""
    g = den
    for v in num.flat:
        g = math.gcd(g, int(v))
        if g == 1:
            break
    if g > 1:
        num = num // g
        den //= g
    mx = max((abs(int(v)) for v in num.flat), default=0)
    if mx < _INT64_SAFE:
        num = num.astype(np.int64)
    else:
        num = num.astype(object)
    return num, den, mx


def _unpack_one(row, den) -> AlgebraicNumber:
    return AlgebraicNumber(Fraction(int(v), den) for v in row)


class StateVector:
    """An exact vector over Q(i, sqrt2, sqrt3)."""

    __slots__ = ("dim", "_num", "_den", "_max")

    def __init__(self, entries: Iterable[AlgebraicNumber]):
        entries = tuple(entries)
        if not entries:
            raise ValueError("empty state vector")
        self.dim = len(entries)
        self._num, self._den, self._max = _pack(entries)

    @classmethod
    def _from_packed(cls, num: np.ndarray, den: int) -> "StateVector":
        v = object.__new__(cls)
        v.dim = num.shape[0]
        v._num, v._den, v._max = _canonical(num, den)
        return v

    @classmethod
    def basis_state(cls, dim: int, index: int) -> "StateVector":
        num = np.zeros((dim, 8), dtype=np.int64)
        num[index, 0] = 1
        return cls._from_packed(num, 1)

    @property
    def entries(self) -> tuple:
        return tuple(_unpack_one(self._num[i], self._den)
                     for i in range(self.dim))

    def __getitem__(self, i: int) -> AlgebraicNumber:
        return _unpack_one(self._num[i], self._den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return (self.dim == other.dim and self._den == other._den
                and np.array_equal(self._num, other._num))

    def __hash__(self):
        return hash((self.dim, self._den, bytes(str(self._num.tolist()), "ascii")))

    def support(self) -> frozenset:
        """Indices with a nonzero amplitude."""
        return frozenset(i for i in range(self.dim) if self._num[i].any())

    def _abs_sq_rows(self):
        """Per-entry |z|^2 in packed form: (int array (dim, 8), den)."""
        if (self._num.dtype != object
                and self._max * self._max * 64 < _INT64_SAFE):
            conj = self._num.copy()
            conj[:, 4:] = -conj[:, 4:]
            rows = np.einsum("ja,jb,abc->jc", conj, self._num, _T)
        else:
            rows = np.zeros((self.dim, 8), dtype=object)
            for i in range(self.dim):
                c = [int(v) for v in self._num[i]]
                for a in range(8):
                    if not c[a]:
                        continue
                    sa = -c[a] if a >= 4 else c[a]
                    for b in range(8):
                        if not c[b]:
                            continue
                        idx, coef = BASIS_MUL[a][b]
                        rows[i, idx] += sa * c[b] * coef
        return rows, self._den * self._den

    def norm_sq(self) -> AlgebraicNumber:
        """Sum of |entry|^2; a real field element."""
        rows, den_sq = self._abs_sq_rows()
        total = rows.sum(axis=0)
        return AlgebraicNumber(Fraction(int(v), den_sq) for v in total)

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]

    @classmethod
    def from_json(cls, data) -> "StateVector":
        return cls(AlgebraicNumber.from_json(e) for e in data)

    def __repr__(self):
        return "StateVector([" + ", ".join(str(e) for e in self.entries) + "])"


def inner(u: StateVector, v: StateVector) -> AlgebraicNumber:
    """<u|v> = sum_j conj(u_j) * v_j, exactly."""
    if u.dim != v.dim:
        raise ValueError(f"dimension mismatch: {u.dim} != {v.dim}")
    total = AlgebraicNumber.from_rational(0)
    for i in range(u.dim):
        total = total + u[i].conj() * v[i]
    return total


class SquareMatrix:
    """An exact square matrix over Q(i, sqrt2, sqrt3)."""

    __slots__ = ("dim", "_num", "_den", "_max", "_kernel")

    def __init__(self, rows: Iterable[Iterable[AlgebraicNumber]]):
        rows = [tuple(r) for r in rows]
        self.dim = len(rows)
        if any(len(r) != self.dim for r in rows):
            raise ValueError("matrix is not square")
        flat = [e for r in rows for e in r]
        num, self._den, self._max = _pack(flat)
        self._num = num.reshape(self.dim, self.dim, 8)
        self._kernel = None

    @classmethod
    def _from_packed(cls, num: np.ndarray, den: int) -> "SquareMatrix":
        m = object.__new__(cls)
        m.dim = num.shape[0]
        flat, m._den, m._max = _canonical(num.reshape(-1, 8), den)
        m._num = flat.reshape(num.shape)
        m._kernel = None
        return m

    @classmethod
    def identity(cls, dim: int) -> "SquareMatrix":
        num = np.zeros((dim, dim, 8), dtype=np.int64)
        for i in range(dim):
            num[i, i, 0] = 1
        return cls._from_packed(num, 1)

    @property
    def entries(self) -> tuple:
        return tuple(tuple(_unpack_one(self._num[i, j], self._den)
                           for j in range(self.dim))
                     for i in range(self.dim))

    def __getitem__(self, ij) -> AlgebraicNumber:
        i, j = ij
        return _unpack_one(self._num[i, j], self._den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return (self.dim == other.dim and self._den == other._den
                and np.array_equal(self._num, other._num))

    def __hash__(self):
        return hash((self.dim, self._den, bytes(str(self._num.tolist()), "ascii")))

    def dagger(self) -> "SquareMatrix":
        num = self._num.transpose(1, 0, 2).copy()
        num[:, :, 4:] = -num[:, :, 4:]
        return SquareMatrix._from_packed(num, self._den)

    def _get_kernel(self):
        # K[i, c, j, b] = sum_a num[i, j, a] * T[a, b, c], flattened to a
        # (dim*8) x (dim*8) integer matrix so apply() is a single matmul.
        if self._kernel is None:
            k = np.tensordot(self._num.astype(object), _T.astype(object),
                             axes=([2], [0]))            # (i, j, b, c)
            k = k.transpose(0, 3, 1, 2).reshape(self.dim * 8, self.dim * 8)
            mx = max((abs(int(v)) for v in k.flat), default=0)
            if mx < _INT64_SAFE:
                k = k.astype(np.int64)
            self._kernel = (k, mx)
        return self._kernel

    def apply(self, v: StateVector) -> StateVector:
        """Exact matrix-vector product."""
        if self.dim != v.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {v.dim}")
        k, kmax = self._get_kernel()
        vec = v._num.reshape(-1)
        # One multiply-accumulate stays well inside int64 iff this bound does.
        if kmax * v._max * self.dim * 8 < _INT64_SAFE:
            if k.dtype == object:
                k = k.astype(np.int64)
            out = k @ vec.astype(np.int64)
        else:
            out = k.astype(object) @ vec.astype(object)
        return StateVector._from_packed(out.reshape(self.dim, 8),
                                        self._den * v._den)

    def matmul(self, other: "SquareMatrix") -> "SquareMatrix":
        """Exact matrix product."""
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")
        a = self.entries
        b = other.entries
        rows = []
        for i in range(self.dim):
            row = []
            for k in range(self.dim):
                acc = AlgebraicNumber.from_rational(0)
                for j in range(self.dim):
                    if a[i][j].is_zero() or b[j][k].is_zero():
                        continue
                    acc = acc + a[i][j] * b[j][k]
                row.append(acc)
            rows.append(row)
        return SquareMatrix(rows)

    __matmul__ = matmul

    def is_unitary(self) -> bool:
        """True iff M† M equals the identity exactly."""
        return self.dagger().matmul(self) == SquareMatrix.identity(self.dim)

    def to_json(self) -> list:
        return [[e.to_json() for e in row] for row in self.entries]

    @classmethod
    def from_json(cls, data) -> "SquareMatrix":
        return cls([AlgebraicNumber.from_json(e) for e in row] for row in data)

    def __repr__(self):
        return f"SquareMatrix(dim={self.dim})"


@dataclass(frozen=True)
class Projector:
    """Diagonal 0/1 projector onto a set of computational basis indices."""

    dim: int
    indices: frozenset

    def __post_init__(self):
        if not self.indices:
            raise ValueError("empty projector")
        if any(i < 0 or i >= self.dim for i in self.indices):
            raise IndexError(f"projector indices out of range for dim {self.dim}")

    def mass(self, v: StateVector) -> Fraction:
        """Exact squared norm of the projected component of a unit vector."""
        if v.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {v.dim}")
        rows, den_sq = v._abs_sq_rows()
        total = [0] * 8
        for i in self.indices:
            for c in range(8):
                total[c] += int(rows[i, c])
        if any(total[1:]):
            value = AlgebraicNumber(Fraction(v, den_sq) for v in total)
            raise ValueError(f"projected mass {value} is not rational")
        return Fraction(total[0], den_sq)


def project_mass(p: Projector, v: StateVector) -> Fraction:
    return p.mass(v)


def format_state_table(columns: "dict[str, list[StateVector]]",
                       row_labels: Sequence[str]) -> str:
    """Render states in the row-per-stage, column-per-input table layout."""
    headers = list(columns)
    cells = {}
    for name, states in columns.items():
        for r, s in enumerate(states):
            cells[(r, name)] = "(" + ", ".join(str(e) for e in s.entries) + ")"
    widths = {h: max(len(h), *(len(cells[(r, h)]) for r in range(len(row_labels))))
              for h in headers}
    label_w = max(len(l) for l in row_labels)
    lines = [" " * label_w + " | " +
             " | ".join(h.center(widths[h]) for h in headers)]
    lines.append("-" * len(lines[0]))
    for r, label in enumerate(row_labels):
        lines.append(label.rjust(label_w) + " | " +
                     " | ".join(cells[(r, h)].ljust(widths[h]) for h in headers))
    return "\n".join(lines)
