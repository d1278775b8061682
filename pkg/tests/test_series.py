"""Floating evaluators: values, error contracts, tail-bound honesty."""

from fractions import Fraction
from math import pi

import numpy as np
import pytest

from dualbasis.exact import bernoulli_poly, poly_eval
from dualbasis.series import (TruncatedSeries, bernoulli_fourier,
                              bernoulli_fourier_tail_bound, clausen_a,
                              clausen_a_tail_bound, clausen_c,
                              clausen_c_tail_bound, dirichlet_beta,
                              dirichlet_beta_tail_bound, hurwitz_basis,
                              lerch_phi, lerch_tail_bound,
                              poisson_lerch_bridge, unit_phase, zeta,
                              zeta_tail_bound)

ZETA3 = 1.2020569031595942854  # classical constant, cross-checked below


def euler_transformed_leibniz(terms=60):
    """Oracle for beta(1): iterated averaging of Leibniz partial sums."""
    partial = np.cumsum([(-1.0) ** k / (2 * k + 1) for k in range(terms)])
    while len(partial) > 1:
        partial = 0.5 * (partial[:-1] + partial[1:])
    return float(partial[0])


class TestZeta:
    def test_values(self):
        assert abs(zeta(4) - pi**4 / 90) <= 1e-12
        assert abs(zeta(6) - pi**6 / 945) <= 1e-12
        assert abs(zeta(2) - pi**2 / 6) <= 1e-12

    def test_direct_summation_oracle_s2(self):
        k = np.arange(1, 1_000_001, dtype=float)
        direct = float(np.sum(k**-2.0))
        assert abs(direct + 1.0 / 1_000_000 - pi**2 / 6) <= 2e-12  # integral-test tail
        assert abs(zeta(2) - direct - 1.0 / 1_000_000) <= 2e-12

    def test_divergent_rejected(self):
        with pytest.raises(ValueError, match="divergent"):
            zeta(1.0)
        with pytest.raises(ValueError):
            zeta_tail_bound(0.5)


class TestDirichletBeta:
    def test_values(self):
        assert abs(dirichlet_beta(3) - pi**3 / 32) <= 1e-12
        assert abs(dirichlet_beta(5) - 5 * pi**5 / 1536) <= 1e-12

    def test_s1_against_euler_transform_oracle(self):
        oracle = euler_transformed_leibniz()
        assert abs(oracle - pi / 4) <= 1e-12
        assert abs(dirichlet_beta(1) - pi / 4) <= 1e-12

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            dirichlet_beta(0.0)


class TestHurwitzBasis:
    def test_examples(self):
        assert hurwitz_basis(2, 0) == pytest.approx(1 / 6, abs=1e-15)
        assert hurwitz_basis(3, 0) == 0.0
        # oracle: exact binomial formula gives B_4(1/2) = (2^{-3}-1)B_4 = 7/240
        exact = poly_eval(bernoulli_poly(4), Fraction(1, 2))
        assert exact == Fraction(7, 240)
        assert hurwitz_basis(4, 0.5) == pytest.approx(7 / 240, abs=1e-15)

    def test_order_validated(self):
        with pytest.raises(ValueError):
            hurwitz_basis(0, 0.3)

    def test_array_input(self):
        xs = np.array([0.0, 0.5])
        vals = hurwitz_basis(2, xs)
        assert vals == pytest.approx([1 / 6, -1 / 12], abs=1e-15)


class TestClausen:
    def test_literal_at_zero(self):
        # phase e^{-3 pi i/2} = i turns Im into Re Li_3(1) = zeta(3)
        expected = -(3 / (2 * pi**3)) * zeta(3)
        assert clausen_a(3, 0.0, variant="literal") == pytest.approx(expected, abs=1e-10)

    def test_standard_at_zero(self):
        assert clausen_a(3, 0.0, variant="standard") == 0.0

    def test_standard_quarter(self):
        # sin(pi k/2) selects odd k alternating: -(3/(2 pi^3)) beta(3) = -3/64
        assert clausen_a(3, 0.25, variant="standard") == pytest.approx(-3 / 64, abs=1e-10)

    def test_order_contract(self):
        with pytest.raises(ValueError):
            clausen_a(4, 0.1)
        with pytest.raises(ValueError, match="conditional convergence"):
            clausen_a(1, 0.1)
        with pytest.raises(ValueError):
            clausen_a(3, 0.1, variant="bogus")

    def test_cosine_values(self):
        assert clausen_c(2, 0.0) == pytest.approx(-1 / 3, abs=1e-10)
        assert clausen_c(2, 0.5) == pytest.approx(1 / 6, abs=1e-10)
        assert clausen_c(4, 0.0) == pytest.approx(-4 / 15, abs=1e-10)

    def test_cosine_order_contract(self):
        with pytest.raises(ValueError):
            clausen_c(3, 0.1)

    @pytest.mark.parametrize("x", [0.1, 0.25, 0.37])
    def test_symmetries(self, x):
        trunc = TruncatedSeries(20_000)
        assert abs(clausen_c(2, x, trunc) - clausen_c(2, 1 - x, trunc)) <= 1e-12
        assert abs(clausen_c(4, x, trunc) - clausen_c(4, 1 - x, trunc)) <= 1e-12
        a = clausen_a(3, x, trunc, "standard")
        assert abs(a + clausen_a(3, 1 - x, trunc, "standard")) <= 1e-12

    @pytest.mark.parametrize("x", [0.1, 0.25, 0.37, 0.5, 0.8])
    def test_c2_is_minus_two_b2(self, x):
        trunc = TruncatedSeries(50_000)
        bound = clausen_c_tail_bound(2, trunc, x)
        assert abs(clausen_c(2, x, trunc) + 2 * hurwitz_basis(2, x)) <= bound


class TestLerch:
    def test_specializations(self):
        assert lerch_phi(1.0, 2, 1.0).real == pytest.approx(pi**2 / 6, abs=1e-4)
        assert abs(lerch_phi(1.0, 2, 1.0).real - pi**2 / 6) <= lerch_tail_bound(2, 1.0)
        assert lerch_phi(0.0, 2, 3.0) == pytest.approx(1 / 9, abs=0)
        assert lerch_phi(-1.0, 2, 1.0).real == pytest.approx(pi**2 / 12, abs=1e-9)

    @pytest.mark.parametrize("s", [2, 3, 4, 6])
    def test_agrees_with_zeta(self, s):
        combined = lerch_tail_bound(s, 1.0) + zeta_tail_bound(s)
        assert abs(lerch_phi(1.0, s, 1.0).real - zeta(s)) <= combined

    def test_error_contracts(self):
        with pytest.raises(ValueError, match="pole chain"):
            lerch_phi(1.0, 2, 0.0)
        with pytest.raises(ValueError):
            lerch_phi(unit_phase(0.3), 0.5, 1.0)
        # inside the disc small s converges geometrically
        assert abs(lerch_phi(0.5, 0.5, 1.0))


class TestBridge:
    def test_half_values(self):
        assert poisson_lerch_bridge(2, 0.5).real == pytest.approx(1 / 12, abs=1e-9)
        assert poisson_lerch_bridge(4, 0.5).real == pytest.approx(7 / 120, abs=1e-10)

    def test_index_shift_identity(self):
        # e^{2 pi i x} * bridge(2, x) = pi^{-2} * Li_2(e^{2 pi i x})
        x = 0.3
        z = unit_phase(x)
        lhs = z * poisson_lerch_bridge(2, x)
        n = np.arange(1, 100_001, dtype=float)
        li2 = complex(np.sum(np.exp(2j * pi * x * n) * n**-2.0))
        assert abs(lhs - li2 / pi**2) <= 1e-9

    def test_s_contract(self):
        with pytest.raises(ValueError):
            poisson_lerch_bridge(1, 0.5)
        with pytest.raises(ValueError):
            poisson_lerch_bridge(2.5, 0.5)


class TestBernoulliFourier:
    def test_examples(self):
        assert bernoulli_fourier(2, 0.5) == pytest.approx(-1 / 12, abs=1e-8)
        exact = float(poly_eval(bernoulli_poly(4), Fraction(1, 3)))
        assert bernoulli_fourier(4, 1 / 3) == pytest.approx(exact, abs=1e-8)

    def test_low_order_rejected(self):
        with pytest.raises(ValueError):
            bernoulli_fourier(1, 0.3)

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    @pytest.mark.parametrize("x", [0.1, 0.25, 0.37, 0.5, 0.8])
    def test_matches_polynomial_within_bound(self, n, x):
        trunc = TruncatedSeries(10_000)
        bound = bernoulli_fourier_tail_bound(n, x, trunc)
        exact = float(poly_eval(bernoulli_poly(n), Fraction(x)))
        assert abs(bernoulli_fourier(n, x, trunc) - exact) <= bound


class TestTailBoundHonesty:
    """The reported bound dominates the K vs 4K refinement difference, and
    refining K never makes the observed error worse (beyond roundoff)."""

    CASES = [
        ("zeta", lambda t: zeta(2.0, t), lambda t: zeta_tail_bound(2.0, t),
         lambda: pi**2 / 6),
        ("beta", lambda t: dirichlet_beta(1.0, t), lambda t: dirichlet_beta_tail_bound(1.0, t),
         lambda: pi / 4),
        ("clausen_a", lambda t: clausen_a(3, 0.37, t, "standard"),
         lambda t: clausen_a_tail_bound(3, t, 0.37),
         lambda: clausen_a(3, 0.37, TruncatedSeries(400_000), "standard")),
        ("clausen_c", lambda t: clausen_c(2, 0.37, t),
         lambda t: clausen_c_tail_bound(2, t, 0.37),
         lambda: clausen_c(2, 0.37, TruncatedSeries(400_000))),
        ("lerch", lambda t: lerch_phi(-1.0, 2, 1.0, t).real,
         lambda t: lerch_tail_bound(2, 1.0, t),
         lambda: pi**2 / 12),
        ("fourier", lambda t: bernoulli_fourier(2, 0.37, t),
         lambda t: bernoulli_fourier_tail_bound(2, 0.37, t),
         lambda: float(poly_eval(bernoulli_poly(2), Fraction(37, 100)))),
    ]

    @pytest.mark.parametrize("name,f,bound,ref", CASES, ids=[c[0] for c in CASES])
    def test_refinement_within_bound(self, name, f, bound, ref):
        k = 2000
        v1, v4 = f(TruncatedSeries(k)), f(TruncatedSeries(4 * k))
        assert abs(v1 - v4) <= bound(TruncatedSeries(k))

    @pytest.mark.parametrize("name,f,bound,ref", CASES, ids=[c[0] for c in CASES])
    def test_bound_dominates_true_error(self, name, f, bound, ref):
        reference = ref()
        for k in (2000, 8000):
            t = TruncatedSeries(k)
            assert abs(f(t) - reference) <= bound(t)

    @pytest.mark.parametrize("name,f,bound,ref", CASES, ids=[c[0] for c in CASES])
    def test_refining_does_not_worsen(self, name, f, bound, ref):
        reference = ref()
        e1 = abs(f(TruncatedSeries(2000)) - reference)
        e2 = abs(f(TruncatedSeries(8000)) - reference)
        assert e2 <= e1 + 1e-13
