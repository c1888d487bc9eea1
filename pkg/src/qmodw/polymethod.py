"""Polynomial-method lower bounds for symmetric Boolean functions.

Multilinear polynomials with coefficients in Q(i, sqrt2, sqrt3),
symmetrization to a univariate polynomial in the Hamming weight, support
certificates, and the root-counting lower bound: a symmetric function
with value 1 at weight 0 needs a certifying polynomial of degree at least
the number of Hamming weights on which it vanishes.  For the weight-
divisibility function this count equals ceil(n(1 - 1/m)), matching the
query algorithm's cost exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .algebra import AlgebraicNumber, ZERO, ONE


class DomainError(ValueError):
    """Argument outside the mathematical domain of the operation."""


class HypothesisViolated(ValueError):
    """A theorem hypothesis does not hold for the given function."""


def _as_bits(x) -> tuple:
    if isinstance(x, str):
        if any(c not in "01" for c in x):
            raise ValueError(f"not a bit string: {x!r}")
        return tuple(int(c) for c in x)
    return tuple(int(b) for b in x)


class MultilinearPolynomial:
    """sum over S of a_S * prod_{i in S} x_i, variables indexed 1..n."""

    def __init__(self, n: int, coeffs: Mapping):
        if n < 0:
            raise ValueError(f"negative variable count: {n}")
        self.n = n
        clean = {}
        for subset, a in coeffs.items():
            s = frozenset(subset)
            if any(not 1 <= i <= n for i in s):
                raise ValueError(f"variable out of range in {sorted(s)}")
            if not isinstance(a, AlgebraicNumber):
                a = AlgebraicNumber.from_rational(a)
            if not a.is_zero():
                clean[s] = clean.get(s, ZERO) + a
        self.coeffs = {s: a for s, a in clean.items() if not a.is_zero()}

    @property
    def degree(self) -> int:
        """Degree of the zero polynomial is 0 here (it has no monomials)."""
        return max((len(s) for s in self.coeffs), default=0)

    def eval(self, x) -> AlgebraicNumber:
        bits = _as_bits(x)
        if len(bits) != self.n:
            raise ValueError(f"expected {self.n} bits, got {len(bits)}")
        ones = {i + 1 for i, b in enumerate(bits) if b}
        total = ZERO
        for s, a in self.coeffs.items():
            if s <= ones:
                total = total + a
        return total

    def __eq__(self, other):
        if not isinstance(other, MultilinearPolynomial):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        return f"MultilinearPolynomial(n={self.n}, terms={len(self.coeffs)})"


class UnivariatePolynomial:
    """Polynomial over Q(i, sqrt2, sqrt3); trailing zero coefficients dropped."""

    def __init__(self, coeffs: Sequence):
        cs = [c if isinstance(c, AlgebraicNumber)
              else AlgebraicNumber.from_rational(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree of the zero polynomial is taken as 0."""
        return max(len(self.coeffs) - 1, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def eval(self, t: Union[int, Fraction]) -> AlgebraicNumber:
        t = Fraction(t)
        total = ZERO
        power = Fraction(1)
        for c in self.coeffs:
            total = total + c * AlgebraicNumber.from_rational(power)
            power *= t
        return total

    def __eq__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"UnivariatePolynomial(degree={self.degree})"


def symmetrize(p: MultilinearPolynomial) -> UnivariatePolynomial:
    """The univariate q with q(k) = mean of p over weight-k inputs.

    Averaging over all variable permutations gives every degree-k monomial
    the same coefficient c_k = (sum of a_S over |S| = k) / C(n, k), and on
    0/1 inputs the degree-k part sums to C(|x|, k), so

        q(t) = sum_k c_k * t (t-1) ... (t-k+1) / k!.
    """
    n = p.n
    level_sums = {}
    for s, a in p.coeffs.items():
        level_sums[len(s)] = level_sums.get(len(s), ZERO) + a
    out = [ZERO] * (p.degree + 1)
    for k, total in level_sums.items():
        c_k = total * AlgebraicNumber.from_rational(
            Fraction(1, math.comb(n, k)))
        # t(t-1)...(t-k+1)/k! expanded in the monomial basis
        falling = [Fraction(1)]
        for j in range(k):
            falling = _shift_mul(falling, -j)
        scale = Fraction(1, math.factorial(k))
        for d, coef in enumerate(falling):
            out[d] = out[d] + c_k * AlgebraicNumber.from_rational(coef * scale)
    return UnivariatePolynomial(out)


def _shift_mul(poly, root):
    """Multiply a rational-coefficient polynomial by (t + root)."""
    out = [Fraction(0)] * (len(poly) + 1)
    for d, c in enumerate(poly):
        out[d] += c * root
        out[d + 1] += c
    return out


def symmetrize_bruteforce(p: MultilinearPolynomial, k: int) -> AlgebraicNumber:
    """Independent oracle: the literal average of p over all weight-k inputs."""
    n = p.n
    total = ZERO
    for ones in itertools.combinations(range(1, n + 1), k):
        bits = [0] * n
        for i in ones:
            bits[i - 1] = 1
        total = total + p.eval(bits)
    return total * AlgebraicNumber.from_rational(Fraction(1, math.comb(n, k)))


@dataclass(frozen=True)
class SymmetricFunctionSpec:
    """A symmetric Boolean function, given by its value at each weight 0..n."""

    n: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise ValueError(
                f"need {self.n + 1} weight values, got {len(self.values)}")
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("weight values must be bits")

    def eval(self, x) -> int:
        bits = _as_bits(x)
        if len(bits) != self.n:
            raise ValueError(f"expected {self.n} bits, got {len(bits)}")
        return self.values[sum(bits)]

    def zero_weights(self) -> tuple:
        """Weights in 1..n at which the function vanishes."""
        return tuple(i for i in range(1, self.n + 1) if self.values[i] == 0)


def mod_m_spec(n: int, m: int) -> SymmetricFunctionSpec:
    """The n-bit function that is 1 iff the Hamming weight is 0 mod m."""
    if not 2 <= m <= n:
        raise DomainError(
            f"defined for 2 <= m <= n, got m={m}, n={n}")
    return SymmetricFunctionSpec(
        n, tuple(1 if w % m == 0 else 0 for w in range(n + 1)))


def is_nondeterministic_poly(p: MultilinearPolynomial, f) -> bool:
    """True iff p and f have the same support on the Boolean cube."""
    if isinstance(f, SymmetricFunctionSpec):
        if f.n != p.n:
            raise ValueError(f"size mismatch: {f.n} != {p.n}")
        truth = f.eval
    else:
        table = list(f)
        if len(table) != 2 ** p.n:
            raise ValueError(
                f"truth table size {len(table)} != 2^{p.n}")
        truth = lambda bits: table[int("".join(map(str, bits)), 2) if bits else 0]
    for bits in itertools.product((0, 1), repeat=p.n):
        if p.eval(bits).is_zero() != (truth(bits) == 0):
            return False
    return True


def ndeg_lower_bound(f: SymmetricFunctionSpec) -> int:
    """Number of vanishing weights: a lower bound on the certifying degree.

    Requires f to take value 1 on the all-zeros input.
    """
    if f.values[0] != 1:
        raise HypothesisViolated("requires value 1 at weight 0")
    return len(f.zero_weights())


def certificate_roundtrip(p: MultilinearPolynomial,
                          f: SymmetricFunctionSpec):
    """Symmetrize a support certificate and count the roots it certifies.

    Checks q = symmetrize(p) is nonzero at 0 and zero at every weight
    where f vanishes; returns (all checks passed, number of certified
    roots).  The root count never exceeds deg(p).
    """
    if f.values[0] != 1:
        raise HypothesisViolated("requires value 1 at weight 0")
    if not is_nondeterministic_poly(p, f):
        raise ValueError("polynomial support does not match the function")
    q = symmetrize(p)
    ok = not q.eval(0).is_zero()
    roots = 0
    for w in f.zero_weights():
        if q.eval(w).is_zero():
            roots += 1
        else:
            ok = False
    ok = ok and roots <= p.degree
    return ok, roots
