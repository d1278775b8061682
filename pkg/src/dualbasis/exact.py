"""Exact rational arithmetic: Bernoulli/Euler numbers, Bernoulli and Hermite
polynomials, and truncated formal power series with polynomial coefficients.

Everything in this module is computed over `fractions.Fraction`; no floating
point enters until a caller explicitly asks for it (`poly_eval_real`).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence, Union

import numpy as np

Rational = Fraction

__all__ = [
    "Rational",
    "Polynomial",
    "FormalSeries",
    "bernoulli_number",
    "euler_number",
    "bernoulli_poly",
    "hermite_poly",
    "poly_eval",
    "poly_eval_real",
    "poly_derivative",
    "bernoulli_egf",
]


class Polynomial:
    """Dense polynomial over Fraction, coefficients in ascending degree.

    Trailing zeros are normalized away; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[int, Fraction]] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # immutable after construction
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if not self.coeffs or not other.coeffs:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([c * Fraction(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)


def poly_eval(p: Polynomial, x: Union[int, Fraction]) -> Fraction:
    """Exact Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_eval_real(p: Polynomial, x):
    """Horner evaluation in double precision; `x` may be a scalar or ndarray."""
    if np.isscalar(x):
        acc = 0.0
        for c in reversed(p.coeffs):
            acc = acc * x + float(c)
        return acc
    xs = np.asarray(x, dtype=float)
    acc = np.zeros_like(xs)
    for c in reversed(p.coeffs):
        acc = acc * xs + float(c)
    return acc


def poly_derivative(p: Polynomial) -> Polynomial:
    """Exact formal derivative."""
    return Polynomial([i * c for i, c in enumerate(p.coeffs)][1:])


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    """B_n (convention B_1 = -1/2) via sum_{k=0}^{n} C(n+1,k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Fraction(1)
    s = sum(Fraction(comb(n + 1, k)) * bernoulli_number(k) for k in range(n))
    return -s / (n + 1)


@lru_cache(maxsize=None)
def euler_number(n: int) -> Fraction:
    """E_n for even n, from the sech-series recurrence sum_k C(2m,2k) E_2k = 0."""
    if n < 0 or n % 2 != 0:
        raise ValueError("euler number defined here only for even index")
    if n == 0:
        return Fraction(1)
    m = n // 2
    s = sum(Fraction(comb(n, 2 * k)) * euler_number(2 * k) for k in range(m))
    return -s


@lru_cache(maxsize=None)
def bernoulli_poly(n: int) -> Polynomial:
    """B_n(x) = sum_k C(n,k) B_k x^(n-k), exact."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] += comb(n, k) * bernoulli_number(k)
    return Polynomial(coeffs)


@lru_cache(maxsize=None)
def hermite_poly(n: int) -> Polynomial:
    """Physicists' Hermite polynomial: H_{n+1} = 2x H_n - 2n H_{n-1}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Polynomial([1])
    if n == 1:
        return Polynomial([0, 2])
    two_x = Polynomial([0, 2])
    h_prev, h = hermite_poly(n - 2), hermite_poly(n - 1)
    return two_x * h - (2 * (n - 1)) * h_prev


class FormalSeries:
    """Truncated power series in t whose coefficients are Polynomials in x.

    A series of order T stores exactly T+1 coefficients; products and
    reciprocals are exact through order T.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Polynomial], order: Union[int, None] = None):
        cs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            cs = cs[: order + 1]
            cs += [Polynomial()] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("FormalSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        T = min(self.order, other.order)
        return FormalSeries([self.coeffs[i] + other.coeffs[i] for i in range(T + 1)])

    def __mul__(self, other) -> "FormalSeries":
        if isinstance(other, FormalSeries):
            T = min(self.order, other.order)
            out = []
            for n in range(T + 1):
                acc = Polynomial()
                for i in range(n + 1):
                    acc = acc + self.coeffs[i] * other.coeffs[n - i]
                out.append(acc)
            return FormalSeries(out)
        return FormalSeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def reciprocal(self) -> "FormalSeries":
        """1/series; the constant coefficient must be a nonzero constant."""
        c0 = self.coeffs[0]
        if c0.degree > 0 or not c0:
            raise ValueError("reciprocal needs an invertible constant term")
        inv0 = Polynomial([1 / c0.coeffs[0]])
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = Polynomial()
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * out[n - i]
            out.append(-1 * (inv0 * acc))
        return FormalSeries(out)

    def scale_variable(self, c: Union[int, Fraction]) -> "FormalSeries":
        """Compose with the scalar substitution t -> c*t."""
        c = Fraction(c)
        return FormalSeries([self.coeffs[n] * c**n for n in range(self.order + 1)])

    def coefficient(self, n: int) -> Polynomial:
        return self.coeffs[n]


def _exp_xt(T: int) -> FormalSeries:
    # e^{xt}: coefficient of t^n is x^n / n!
    return FormalSeries(
        [Polynomial([0] * n + [Fraction(1, factorial(n))]) for n in range(T + 1)]
    )


def _expm1_over_t(T: int) -> FormalSeries:
    # (e^t - 1)/t: coefficient of t^n is 1/(n+1)!
    return FormalSeries([Polynomial([Fraction(1, factorial(n + 1))]) for n in range(T + 1)])


def bernoulli_egf(T: int) -> FormalSeries:
    """The series t*e^{xt}/(e^t - 1) through order T.

    Coefficient of t^n is B_n(x)/n!, computed by exact series reciprocal and
    multiplication (not via `bernoulli_poly`), so it serves as an independent
    route to the same polynomials.
    """
    if T < 0:
        raise ValueError("order must be >= 0")
    return _exp_xt(T) * _expm1_over_t(T).reciprocal()
