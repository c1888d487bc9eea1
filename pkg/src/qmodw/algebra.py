"""Exact arithmetic in the number field Q(i, sqrt2, sqrt3).

Every amplitude and matrix entry used by the mod-2 and mod-3 circuits lives
in this degree-8 field.  An element is stored by its coordinates over the
fixed basis

    (1, sqrt2, sqrt3, sqrt6, i, i*sqrt2, i*sqrt3, i*sqrt6)

with rational coordinates kept in lowest terms (``fractions.Fraction``).
The basis is linearly independent over Q, so structural equality of the
coordinate tuple coincides with mathematical equality and zero-testing is
a plain all-zero check.  All values are immutable; nothing here ever
rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

BASIS_NAMES = ("1", "√2", "√3", "√6",
               "i", "i√2", "i√3", "i√6")

# Product of the four real basis elements 1, sqrt2, sqrt3, sqrt6:
# _REAL_MUL[a][b] = (index, integer coefficient).
_REAL_MUL = {
    (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
    (1, 1): (0, 2), (1, 2): (3, 1), (1, 3): (2, 2),
    (2, 2): (0, 3), (2, 3): (1, 3),
    (3, 3): (0, 6),
}
for (_a, _b), _v in list(_REAL_MUL.items()):
    _REAL_MUL[(_b, _a)] = _v

# Full 8x8 basis product: BASIS_MUL[a][b] = (index, integer coefficient),
# folding in i*i = -1.
BASIS_MUL = [[None] * 8 for _ in range(8)]
for _a in range(8):
    for _b in range(8):
        _ia, _ra = divmod(_a, 4)
        _ib, _rb = divmod(_b, 4)
        _t, _c = _REAL_MUL[(_ra, _rb)]
        BASIS_MUL[_a][_b] = (_t + 4 * ((_ia + _ib) % 2),
                             -_c if (_ia and _ib) else _c)

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_SQRT6 = math.sqrt(6.0)


class AlgebraicNumber:
    """An exact element of Q(i, sqrt2, sqrt3)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar]):
        c = tuple(Fraction(x) for x in coeffs)
        if len(c) != 8:
            raise ValueError(f"need 8 basis coordinates, got {len(c)}")
        self._c = c

    @property
    def coeffs(self) -> tuple:
        return self._c

    @classmethod
    def from_rational(cls, value: Scalar) -> "AlgebraicNumber":
        return cls((Fraction(value), 0, 0, 0, 0, 0, 0, 0))

    def __bool__(self) -> bool:
        return any(self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def rational_part(self) -> Fraction:
        """The coordinate on basis element 1."""
        return self._c[0]

    def as_rational(self) -> Fraction:
        """This value as a Fraction; raises if any irrational coordinate is set."""
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self._c[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraicNumber):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self._c[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __add__(self, other) -> "AlgebraicNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraicNumber(a + b for a, b in zip(self._c, other._c))

    __radd__ = __add__

    def __neg__(self) -> "AlgebraicNumber":
        return AlgebraicNumber(-a for a in self._c)

    def __sub__(self, other) -> "AlgebraicNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraicNumber(a - b for a, b in zip(self._c, other._c))

    def __rsub__(self, other) -> "AlgebraicNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "AlgebraicNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = [Fraction(0)] * 8
        for a, ca in enumerate(self._c):
            if not ca:
                continue
            for b, cb in enumerate(other._c):
                if not cb:
                    continue
                idx, coef = BASIS_MUL[a][b]
                out[idx] += ca * cb * coef
        return AlgebraicNumber(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "AlgebraicNumber":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def conj(self) -> "AlgebraicNumber":
        """Complex conjugate: negates the four imaginary coordinates."""
        c = self._c
        return AlgebraicNumber(c[:4] + tuple(-x for x in c[4:]))

    def abs_sq(self) -> "AlgebraicNumber":
        """|a|^2 = a * conj(a); real (imaginary coordinates all zero)."""
        return self * self.conj()

    def inv(self) -> "AlgebraicNumber":
        """Exact multiplicative inverse via Galois conjugates.

        1/z = conj(z) / |z|^2 reduces to inverting the real element
        |z|^2 in Q(sqrt2, sqrt3), which is done by multiplying together
        its three nontrivial Galois conjugates (sign flips on sqrt2
        and/or sqrt3) so that the product of all four is rational.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i, sqrt2, sqrt3)")
        r = self.abs_sq()
        s2 = AlgebraicNumber((r._c[0], -r._c[1], r._c[2], -r._c[3], 0, 0, 0, 0))
        s3 = AlgebraicNumber((r._c[0], r._c[1], -r._c[2], -r._c[3], 0, 0, 0, 0))
        s23 = AlgebraicNumber((r._c[0], -r._c[1], -r._c[2], r._c[3], 0, 0, 0, 0))
        prod = s2 * s3 * s23
        norm = (r * prod).as_rational()  # full Galois product, rational by construction
        return self.conj() * prod * AlgebraicNumber.from_rational(1 / norm)

    def approx(self) -> complex:
        """Floating approximation for reports only; never used in decisions."""
        c = [float(x) for x in self._c]
        re = c[0] + c[1] * _SQRT2 + c[2] * _SQRT3 + c[3] * _SQRT6
        im = c[4] + c[5] * _SQRT2 + c[6] * _SQRT3 + c[7] * _SQRT6
        return complex(re, im)

    def to_json(self) -> list:
        """Exact encoding: 8 [numerator, denominator] pairs."""
        return [[f.numerator, f.denominator] for f in self._c]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "AlgebraicNumber":
        return cls(Fraction(p, q) for p, q in data)

    def __str__(self) -> str:
        terms = []
        for f, name in zip(self._c, BASIS_NAMES):
            if not f:
                continue
            if name == "1":
                terms.append(str(f))
            elif f == 1:
                terms.append(name)
            elif f == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{f}·{name}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"AlgebraicNumber({self})"


def _coerce(value) -> "AlgebraicNumber | None":
    if isinstance(value, AlgebraicNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return AlgebraicNumber.from_rational(value)
    return None


ZERO = AlgebraicNumber.from_rational(0)
ONE = AlgebraicNumber.from_rational(1)
SQRT2 = AlgebraicNumber((0, 1, 0, 0, 0, 0, 0, 0))
SQRT3 = AlgebraicNumber((0, 0, 1, 0, 0, 0, 0, 0))
SQRT6 = AlgebraicNumber((0, 0, 0, 1, 0, 0, 0, 0))
I = AlgebraicNumber((0, 0, 0, 0, 1, 0, 0, 0))

# Primitive cube root of unity: -1/2 + (sqrt3/2) i.
OMEGA = AlgebraicNumber((Fraction(-1, 2), 0, 0, 0, 0, 0, Fraction(1, 2), 0))
