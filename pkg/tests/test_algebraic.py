import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pisotdyn.algebraic import (
    FIBONACCI,
    PADOVAN,
    PELL,
    IntMatrix,
    IntPolynomial,
    NotSquarefreeError,
    RealApprox,
    Recurrence,
    char_poly,
    dominant_root_interval,
    irreducible_over_q,
    is_primitive,
    is_pv,
    power_sums,
    pv_decay,
    pv_verdict,
    ratio_limit_check,
    recurrence_term,
    schur_cohn,
    sturm_count,
    wielandt_bound,
)

GOLDEN = IntPolynomial((-1, -1, 1))      # x^2 - x - 1
PLASTIC = IntPolynomial((-1, -1, 0, 1))  # x^3 - x - 1
SILVER = IntPolynomial((-1, -2, 1))      # x^2 - 2x - 1


class TestIntPolynomial:
    def test_degree_and_call(self):
        assert GOLDEN.degree == 2
        assert GOLDEN(2) == 1
        assert GOLDEN(Fraction(1, 2)) == Fraction(-5, 4)

    def test_leading_zero_trimmed(self):
        p = IntPolynomial((1, 2, 0, 0))
        assert p.coefficients == (1, 2)

    def test_reciprocal(self):
        assert GOLDEN.reciprocal().coefficients == (1, -1, -1)

    def test_squarefree(self):
        assert GOLDEN.is_squarefree()
        sq = IntPolynomial((1, 2, 1))  # (x+1)^2
        assert not sq.is_squarefree()
        assert sq.squarefree_part().coefficients == (1, 1)

    def test_cauchy_bound(self):
        assert GOLDEN.cauchy_bound() == 2

    def test_pretty(self):
        assert GOLDEN.pretty() == "x^2 - x - 1"
        assert IntPolynomial((0, -3, 0, 1)).pretty() == "x^3 - 3x"


class TestCharPoly:
    def test_fibonacci(self):
        m = IntMatrix(((1, 1), (1, 0)))
        assert char_poly(m).coefficients == (-1, -1, 1)

    def test_pell(self):
        m = IntMatrix(((1, 2), (1, 1)))
        assert char_poly(m).coefficients == (-1, -2, 1)

    def test_padovan(self):
        m = IntMatrix(((0, 0, 1), (1, 0, 0), (1, 1, 0)))
        assert char_poly(m).coefficients == (-1, -1, 0, 1)

    def test_identity(self):
        m = IntMatrix.identity(3)
        # (x-1)^3 = x^3 - 3x^2 + 3x - 1
        assert char_poly(m).coefficients == (-1, 3, -3, 1)


class TestPrimitivity:
    def test_fibonacci(self):
        assert is_primitive(IntMatrix(((1, 1), (1, 0))))

    def test_block_diagonal(self):
        assert not is_primitive(IntMatrix(((2, 0), (0, 2))))

    def test_padovan(self):
        assert is_primitive(IntMatrix(((0, 0, 1), (1, 0, 0), (1, 1, 0))))

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            is_primitive(IntMatrix(((1, -1), (1, 1))))

    def test_wielandt(self):
        assert wielandt_bound(3) == 5


class TestSchurCohn:
    def test_golden(self):
        c = schur_cohn(GOLDEN)
        assert (c.inside, c.on_circle, c.outside) == (1, 0, 1)

    def test_silver(self):
        c = schur_cohn(SILVER)
        assert (c.inside, c.on_circle, c.outside) == (1, 0, 1)

    def test_circle_roots(self):
        c = schur_cohn(IntPolynomial((-1, 0, 1)))  # x^2 - 1
        assert (c.inside, c.on_circle, c.outside) == (0, 2, 0)

    def test_cyclotomic(self):
        # x^4 + x^3 + x^2 + x + 1: all roots on the circle
        c = schur_cohn(IntPolynomial((1, 1, 1, 1, 1)))
        assert (c.inside, c.on_circle, c.outside) == (0, 4, 0)

    def test_origin_roots(self):
        # x^2 has a double root at 0: rejected without deflation
        with pytest.raises(NotSquarefreeError):
            schur_cohn(IntPolynomial((0, 0, 1)))
        c = schur_cohn(IntPolynomial((0, 1)))  # x
        assert (c.inside, c.on_circle, c.outside) == (1, 0, 0)
        c = schur_cohn(IntPolynomial((0, -2, 0, 1)))  # x(x^2 - 2)
        assert (c.inside, c.on_circle, c.outside) == (1, 0, 2)

    def test_palindromic_mixed(self):
        # x^2 - 4x + 1: reciprocal pair 2 ± sqrt(3)
        c = schur_cohn(IntPolynomial((1, -4, 1)))
        assert (c.inside, c.on_circle, c.outside) == (1, 0, 1)

    def test_all_outside(self):
        c = schur_cohn(IntPolynomial((6, 5, 1)))  # (x+2)(x+3)
        assert (c.inside, c.on_circle, c.outside) == (0, 0, 2)

    def test_non_squarefree_rejected(self):
        with pytest.raises(NotSquarefreeError):
            schur_cohn(IntPolynomial((1, 2, 1)))


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_schur_cohn_counts_sum_property(tail):
    p = IntPolynomial(tuple(tail) + (1,)).squarefree_part()
    c = schur_cohn(p)
    assert c.inside + c.on_circle + c.outside == p.degree


class TestIrreducibility:
    def test_quadratics(self):
        assert irreducible_over_q(GOLDEN) is True
        assert irreducible_over_q(IntPolynomial((-1, 0, 1))) is False

    def test_cubic(self):
        assert irreducible_over_q(PLASTIC) is True
        assert irreducible_over_q(IntPolynomial((0, -1, 0, 1))) is False

    def test_quartic_product_of_quadratics(self):
        # (x^2+1)(x^2+2) = x^4 + 3x^2 + 2, no rational roots
        assert irreducible_over_q(IntPolynomial((2, 0, 3, 0, 1))) is False
        # x^4 + 1 is irreducible over Q
        assert irreducible_over_q(IntPolynomial((1, 0, 0, 0, 1))) is True

    def test_degree5_modular(self):
        # x^5 - x - 1 is irreducible (mod certificate should find it)
        assert irreducible_over_q(IntPolynomial((-1, -1, 0, 0, 0, 1))) is True


class TestPV:
    def test_named_pv_numbers(self):
        assert is_pv(GOLDEN)
        assert is_pv(PLASTIC)
        assert is_pv(SILVER)

    def test_sqrt3_rejected(self):
        assert pv_verdict(IntPolynomial((-3, 0, 1))) == "not_pv"

    def test_negative_dominant_rejected(self):
        # x^2 + 4x + 1: roots -2 ± sqrt(3); outside root is negative
        assert pv_verdict(IntPolynomial((1, 4, 1))) == "not_pv"

    def test_degree_one(self):
        for k in (2, 3, 10):
            assert is_pv(IntPolynomial((-k, 1)))
        assert not is_pv(IntPolynomial((-1, 1)))  # x - 1: root not > 1

    def test_non_monic(self):
        with pytest.raises(ValueError):
            pv_verdict(IntPolynomial((-1, 2)))


class TestPowerSums:
    def test_lucas(self):
        assert [power_sums(GOLDEN, n) for n in range(1, 5)] == [1, 3, 4, 7]

    def test_silver_square(self):
        assert power_sums(SILVER, 2) == 6  # (1+sqrt2)^2 + (1-sqrt2)^2

    def test_newton_base_case(self):
        # s_d for monic p relates to the coefficients by Newton's identity;
        # cross-check with a brute float evaluation
        p = IntPolynomial((3, -2, -1, 1))
        import numpy as np

        roots = np.roots(list(reversed(p.coefficients)))
        for n in (1, 2, 3, 6):
            assert abs(power_sums(p, n) - sum(roots**n).real) < 1e-8


class TestDecay:
    def test_golden_equals_inverse_powers(self):
        iv = dominant_root_interval(GOLDEN, Fraction(1, 10**18))
        tau = iv.midpoint
        for n in (1, 5, 10):
            d = pv_decay(GOLDEN, n)
            expected = Fraction(1, 1) / tau**n
            assert abs(d.midpoint - expected) < Fraction(1, 10**12)

    def test_rejects_non_pv(self):
        with pytest.raises(ValueError):
            pv_decay(IntPolynomial((-3, 0, 1)), 4)


class TestRecurrences:
    def test_fibonacci(self):
        assert recurrence_term(FIBONACCI, 7) == 13

    def test_padovan(self):
        assert [recurrence_term(PADOVAN, n) for n in range(6)] == [1, 1, 1, 2, 2, 3]

    def test_pell(self):
        assert recurrence_term(PELL, 5) == 29

    def test_ratio_limit(self):
        assert float(ratio_limit_check(FIBONACCI, GOLDEN, 20).upper) < 1e-7
        assert float(ratio_limit_check(PELL, SILVER, 15).upper) < 1e-9
        assert float(ratio_limit_check(PADOVAN, PLASTIC, 40).upper) < 1e-4

    def test_binet_remark(self):
        # |F_n * sqrt(5) - tau^n| < 2 * tau^-n for n <= 30
        iv = dominant_root_interval(GOLDEN, Fraction(1, 10**30))
        tau = iv.midpoint
        sqrt5 = 2 * tau - 1  # exact in the number field; rational stand-in
        for n in range(1, 31):
            fn = recurrence_term(FIBONACCI, n)
            assert abs(fn * sqrt5 - tau**n) < 2 / tau**n + Fraction(1, 10**6)


class TestRealApprox:
    def test_interval_invariants(self):
        iv = RealApprox(Fraction(1), Fraction(2))
        assert iv.contains(Fraction(3, 2))
        assert float(iv) == 1.5
        with pytest.raises(ValueError):
            RealApprox(Fraction(2), Fraction(1))

    def test_dominant_root_golden(self):
        iv = dominant_root_interval(GOLDEN)
        tau = (1 + math.sqrt(5)) / 2
        assert iv.lower <= Fraction(tau).limit_denominator(10**15) <= iv.upper or \
            abs(float(iv.midpoint) - tau) < 1e-11


class TestSturm:
    def test_root_counts(self):
        # x^2 - 2 has one root in (1, 2]
        assert sturm_count((-2, 0, 1), Fraction(1), Fraction(2)) == 1
        assert sturm_count((-2, 0, 1), Fraction(-2), Fraction(2)) == 2
        assert sturm_count((-2, 0, 1), Fraction(2), Fraction(3)) == 0
