"""Exact-arithmetic layer: numbers, polynomials, generating series."""

from fractions import Fraction
from math import factorial

import pytest

from dualbasis.exact import (FormalSeries, Polynomial, bernoulli_egf,
                             bernoulli_number, bernoulli_poly, euler_number,
                             hermite_poly, poly_derivative, poly_eval,
                             poly_eval_real)


def reciprocal_series(coeffs, order):
    """Independent Fraction-only series reciprocal (oracle helper); coeffs[0]
    must be 1."""
    inv = [Fraction(1)]
    for n in range(1, order + 1):
        inv.append(-sum(coeffs[i] * inv[n - i] for i in range(1, n + 1)))
    return inv


def bernoulli_via_division(n):
    # n! * [t^n] t/(e^t - 1), with (e^t - 1)/t inverted term by term
    denom = [Fraction(1, factorial(i + 1)) for i in range(n + 1)]
    return reciprocal_series(denom, n)[n] * factorial(n)


def euler_via_sech(n):
    # n! * [t^n] 1/cosh t
    cosh = [Fraction(1, factorial(i)) if i % 2 == 0 else Fraction(0)
            for i in range(n + 1)]
    return reciprocal_series(cosh, n)[n] * factorial(n)


class TestBernoulliNumbers:
    def test_seed(self):
        assert bernoulli_number(0) == 1

    def test_b2(self):
        assert bernoulli_number(2) == Fraction(1, 6)

    def test_b12_against_series_division_oracle(self):
        assert bernoulli_via_division(12) == Fraction(-691, 2730)
        assert bernoulli_number(12) == Fraction(-691, 2730)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_matches_division_oracle(self, n):
        assert bernoulli_number(n) == bernoulli_via_division(n)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_defining_recurrence(self, n):
        from math import comb
        s = sum(comb(n + 1, k) * bernoulli_number(k) for k in range(n + 1))
        assert s == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            bernoulli_number(-1)


class TestEulerNumbers:
    def test_values(self):
        assert euler_number(0) == 1
        assert euler_via_sech(2) == -1
        assert euler_number(2) == -1
        assert euler_via_sech(4) == 5
        assert euler_number(4) == 5

    @pytest.mark.parametrize("n", range(0, 17, 2))
    def test_matches_sech_oracle(self, n):
        assert euler_number(n) == euler_via_sech(n)

    def test_odd_rejected(self):
        with pytest.raises(ValueError, match="even"):
            euler_number(3)


class TestPolynomials:
    def test_b1(self):
        assert bernoulli_poly(1) == Polynomial([Fraction(-1, 2), 1])

    def test_b2(self):
        assert bernoulli_poly(2) == Polynomial([Fraction(1, 6), -1, 1])

    def test_b5_at_zero(self):
        # odd Bernoulli numbers >= 3 vanish
        assert poly_eval(bernoulli_poly(5), 0) == 0

    def test_h1_h2_h3(self):
        assert hermite_poly(1) == Polynomial([0, 2])
        assert hermite_poly(2) == Polynomial([-2, 0, 4])
        assert hermite_poly(3) == Polynomial([0, -12, 0, 8])

    def test_eval_examples(self):
        b2 = bernoulli_poly(2)
        assert poly_eval(b2, 0) == Fraction(1, 6)
        assert poly_eval(b2, Fraction(1, 2)) == Fraction(-1, 12)
        assert poly_eval(Polynomial(), Fraction(7, 3)) == 0

    def test_eval_real_matches_exact(self):
        b4 = bernoulli_poly(4)
        assert poly_eval_real(b4, 0.5) == pytest.approx(
            float(poly_eval(b4, Fraction(1, 2))), abs=1e-15)

    def test_derivative_examples(self):
        assert poly_derivative(bernoulli_poly(2)) == 2 * bernoulli_poly(1)
        assert poly_derivative(hermite_poly(2)) == 4 * hermite_poly(1)
        assert poly_derivative(Polynomial([5])) == Polynomial()

    @pytest.mark.parametrize("n", range(0, 31))
    def test_appell_ladders(self, n):
        if n == 0:
            assert poly_derivative(bernoulli_poly(0)) == Polynomial()
            assert poly_derivative(hermite_poly(0)) == Polynomial()
        else:
            assert poly_derivative(bernoulli_poly(n)) == n * bernoulli_poly(n - 1)
            assert poly_derivative(hermite_poly(n)) == (2 * n) * hermite_poly(n - 1)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_difference_identity(self, n):
        # B_n(x+1) - B_n(x) = n x^{n-1}, the standard Appell consequence
        p = bernoulli_poly(n)
        xp1 = Polynomial([1, 1])
        power = Polynomial([1])
        shifted = Polynomial()
        for c in p.coeffs:
            shifted = shifted + c * power
            power = power * xp1
        expected = Polynomial([0] * (n - 1) + [n])
        assert shifted - p == expected


class TestFormalSeries:
    def test_reciprocal_roundtrip(self):
        s = FormalSeries([Polynomial([1]), Polynomial([0, 1]), Polynomial([3])])
        prod = s * s.reciprocal()
        assert prod.coefficient(0) == Polynomial([1])
        assert prod.coefficient(1) == Polynomial()
        assert prod.coefficient(2) == Polynomial()

    def test_reciprocal_needs_constant(self):
        with pytest.raises(ValueError):
            FormalSeries([Polynomial(), Polynomial([1])]).reciprocal()

    def test_scale_variable(self):
        s = FormalSeries([Polynomial([1]), Polynomial([1]), Polynomial([1])])
        t = s.scale_variable(Fraction(1, 2))
        assert t.coefficient(2) == Polynomial([Fraction(1, 4)])

    def test_egf_low_orders(self):
        egf = bernoulli_egf(2)
        assert egf.coefficient(0) == Polynomial([1])
        assert egf.coefficient(1) == bernoulli_poly(1)

    def test_egf_order_six_against_binomial_route(self):
        # series-division coefficient vs the binomial-formula polynomial
        egf = bernoulli_egf(6)
        assert egf.coefficient(6) == Fraction(1, factorial(6)) * bernoulli_poly(6)

    @pytest.mark.parametrize("n", range(0, 13))
    def test_egf_matches_polys_through_12(self, n):
        egf = bernoulli_egf(12)
        assert egf.coefficient(n) == Fraction(1, factorial(n)) * bernoulli_poly(n)
