import random
from fractions import Fraction

import pytest

from qmodw.algebra import AlgebraicNumber, I, ONE, SQRT2
from qmodw.hamming_mod import query_bound
from qmodw.polymethod import (
    DomainError, HypothesisViolated, MultilinearPolynomial,
    SymmetricFunctionSpec, UnivariatePolynomial, certificate_roundtrip,
    is_nondeterministic_poly, mod_m_spec, ndeg_lower_bound, symmetrize,
    symmetrize_bruteforce,
)


def poly(n, **terms):
    """terms like p_12=1 meaning coefficient on x1*x2."""
    coeffs = {}
    for key, value in terms.items():
        digits = key.split("_")[1] if "_" in key else ""
        subset = frozenset(int(c) for c in digits)
        coeffs[subset] = value
    return MultilinearPolynomial(n, coeffs)


def random_polynomial(rng, n, max_terms=12):
    all_vars = list(range(1, n + 1))
    coeffs = {}
    for _ in range(rng.randint(1, max_terms)):
        size = rng.randint(0, n)
        subset = frozenset(rng.sample(all_vars, size))
        coeffs[subset] = AlgebraicNumber(
            [Fraction(rng.randint(-4, 4), rng.randint(1, 4))
             for _ in range(8)])
    return MultilinearPolynomial(n, coeffs)


# ---------------------------------------------------------
# Evaluation
# ---------------------------------------------------------

def test_eval_top_monomial():
    p = poly(2, p_12=1)
    assert p.eval("11") == ONE
    assert p.eval("10").is_zero()


def test_eval_negated_variable():
    p = poly(3, p_=1, p_1=-1)  # 1 - x1
    assert p.eval("011") == ONE
    assert p.eval("100").is_zero()


def test_eval_length_mismatch():
    with pytest.raises(ValueError):
        poly(2, p_1=1).eval("101")


def test_coefficients_merge_and_drop_zeros():
    p = MultilinearPolynomial(2, {(1,): ONE, frozenset({1}): -ONE})
    assert p.coeffs == {}
    assert p.degree == 0


# ---------------------------------------------------------
# Symmetrization
# ---------------------------------------------------------

def test_symmetrize_single_variable():
    q = symmetrize(poly(2, p_1=1))
    assert q == UnivariatePolynomial([0, Fraction(1, 2)])
    assert q.eval(0).is_zero()
    assert q.eval(1) == AlgebraicNumber.from_rational(Fraction(1, 2))
    assert q.eval(2) == ONE


def test_symmetrize_top_monomial():
    # t(t-1)/2
    q = symmetrize(poly(2, p_12=1))
    assert q == UnivariatePolynomial(
        [0, Fraction(-1, 2), Fraction(1, 2)])


def test_symmetrize_constant():
    q = symmetrize(poly(3, p_=SQRT2))
    assert q == UnivariatePolynomial([SQRT2])


def test_symmetrize_matches_bruteforce_randomized():
    rng = random.Random(20240824)
    for _ in range(25):
        n = rng.randint(1, 6)
        p = random_polynomial(rng, n)
        q = symmetrize(p)
        assert q.degree <= p.degree
        for k in range(n + 1):
            assert q.eval(k) == symmetrize_bruteforce(p, k), (n, k)


def test_symmetrize_degree_never_grows():
    rng = random.Random(7)
    for _ in range(10):
        p = random_polynomial(rng, 5)
        assert symmetrize(p).degree <= p.degree


# ---------------------------------------------------------
# Support certificates
# ---------------------------------------------------------

def test_and_certificate():
    assert is_nondeterministic_poly(poly(2, p_12=1), [0, 0, 0, 1])


def test_or_certificate_with_sum():
    # x1 + x2 never vanishes on 01, 10, 11
    assert is_nondeterministic_poly(poly(2, p_1=1, p_2=1), [0, 1, 1, 1])


def test_or_non_certificate_with_difference():
    # x1 - x2 vanishes on 11 although OR(11) = 1
    assert not is_nondeterministic_poly(poly(2, p_1=1, p_2=-1), [0, 1, 1, 1])


def test_certificate_against_symmetric_spec():
    nor = SymmetricFunctionSpec(2, (1, 0, 0))
    p = poly(2, p_=1, p_1=-1, p_2=-1, p_12=1)  # (1-x1)(1-x2)
    assert is_nondeterministic_poly(p, nor)


def test_certificate_size_mismatch():
    with pytest.raises(ValueError):
        is_nondeterministic_poly(poly(2, p_1=1), [0, 1])
    with pytest.raises(ValueError):
        is_nondeterministic_poly(poly(2, p_1=1), SymmetricFunctionSpec(3, (1, 0, 0, 0)))


def test_complex_coefficients_allowed():
    p = MultilinearPolynomial(1, {frozenset(): I, frozenset({1}): SQRT2})
    assert is_nondeterministic_poly(p, [1, 1])


# ---------------------------------------------------------
# The zero-weight count bound
# ---------------------------------------------------------

def test_mod_spec_values():
    assert mod_m_spec(4, 2).values == (1, 0, 1, 0, 1)
    assert mod_m_spec(6, 3).values == (1, 0, 0, 1, 0, 0, 1)


def test_mod_spec_domain():
    with pytest.raises(DomainError):
        mod_m_spec(4, 5)
    with pytest.raises(DomainError):
        mod_m_spec(4, 1)


def test_zero_weight_counts():
    assert ndeg_lower_bound(mod_m_spec(6, 3)) == 4
    assert ndeg_lower_bound(mod_m_spec(4, 2)) == 2


def test_all_ones_function_has_no_zero_weights():
    f = SymmetricFunctionSpec(5, (1,) * 6)
    assert ndeg_lower_bound(f) == 0


def test_hypothesis_requires_one_at_weight_zero():
    f = SymmetricFunctionSpec(3, (0, 1, 1, 1))
    with pytest.raises(HypothesisViolated):
        ndeg_lower_bound(f)


def test_bound_table_matches_query_bound():
    for n in range(2, 21):
        for m in range(2, n + 1):
            zeros = ndeg_lower_bound(mod_m_spec(n, m))
            assert zeros == query_bound(n, m), (n, m)


def test_mod_m_ones_count():
    # value 1 on exactly 1 + floor(n/m) of the n+1 weights
    for n in range(2, 21):
        for m in range(2, n + 1):
            spec = mod_m_spec(n, m)
            assert sum(spec.values) == 1 + n // m


# ---------------------------------------------------------
# Certificate roundtrip
# ---------------------------------------------------------

def test_roundtrip_nor():
    nor = SymmetricFunctionSpec(2, (1, 0, 0))
    p = poly(2, p_=1, p_1=-1, p_2=-1, p_12=1)
    assert certificate_roundtrip(p, nor) == (True, 2)


def test_roundtrip_constant_one():
    f = SymmetricFunctionSpec(2, (1, 1, 1))
    assert certificate_roundtrip(poly(2, p_=1), f) == (True, 0)


def test_roundtrip_rejects_wrong_support():
    f = SymmetricFunctionSpec(2, (1, 0, 0))
    with pytest.raises(ValueError):
        certificate_roundtrip(poly(2, p_=1), f)


def test_roundtrip_mod2_certificate():
    # (1 - x1)(1 - x2)(1 - x3)(1 - x4) + x1 x2 x3 x4 ... too blunt; use the
    # parity-like product certificate for the weight-0-mod-2 function on 2 bits
    f = SymmetricFunctionSpec(2, (1, 0, 1))
    # p = 1 - x1 - x2 + 2 x1 x2 is 1 on 00 and 11, 0 on 01 and 10
    p = poly(2, p_=1, p_1=-1, p_2=-1, p_12=2)
    ok, roots = certificate_roundtrip(p, f)
    assert ok and roots == 1
