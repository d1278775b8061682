"""Floating-point evaluators for zeta, Dirichlet beta, the Lerch transcendent,
the Clausen-type bases, the Bernoulli-side basis, and the Fourier bridge.

Contract: double precision with explicit a-priori error bounds. Every
evaluator has a companion ``*_tail_bound`` giving an upper bound on
|returned value - exact value| for the same truncation. Bounds combine the
series truncation tail (monotone/integral-test or Euler-Maclaurin remainder)
with an explicit double-precision evaluation allowance; the latter models
argument rounding in the trig calls (~2*pi*k*|x|*eps per term) plus pairwise
summation accumulation, with a safety factor of 4.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, log1p, log2, pi
from typing import Optional, Union

import numpy as np

from .exact import bernoulli_poly, poly_eval, poly_eval_real

__all__ = [
    "TruncatedSeries",
    "DEFAULT_K",
    "unit_phase",
    "zeta",
    "zeta_tail_bound",
    "dirichlet_beta",
    "dirichlet_beta_tail_bound",
    "hurwitz_basis",
    "clausen_a",
    "clausen_a_tail_bound",
    "clausen_c",
    "clausen_c_tail_bound",
    "lerch_phi",
    "lerch_tail_bound",
    "poisson_lerch_bridge",
    "bernoulli_fourier",
    "bernoulli_fourier_tail_bound",
]

DEFAULT_K = 100_000
_EPS = np.finfo(float).eps
_CHUNK = 4096


@dataclass(frozen=True)
class TruncatedSeries:
    """Truncation request: sum the first `k` terms (or indices 0..k for
    unilateral sums starting at 0). The matching a-priori tail bound is
    stated per evaluator."""

    k: int = DEFAULT_K

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("truncation index must be >= 1")


def _k_of(trunc: Optional[TruncatedSeries]) -> int:
    return trunc.k if trunc is not None else DEFAULT_K


def unit_phase(x: float) -> complex:
    """e^{2*pi*i*x} as an explicit (re, im) pair; |z| = 1 to roundoff."""
    return cmath.exp(2j * pi * x)


def _partial_zeta_bound(p: float, K: int) -> float:
    # upper bound for sum_{k<=K} k^{-p}
    if p >= 2.0:
        return pi * pi / 6.0
    if p > 1.0:
        return 1.0 + 1.0 / (p - 1.0)
    return 1.0 + np.log(K)


def _roundoff(scale_flat: float, scale_arg: float, K: int) -> float:
    # scale_flat: bound on sum of |terms|; scale_arg: bound on the
    # argument-rounding-weighted sum of |terms|.
    return 4.0 * _EPS * (scale_flat * (3.0 + log2(max(K, 2))) + scale_arg)


# --------------------------------------------------------------------------
# zeta and beta
# --------------------------------------------------------------------------

def zeta(s: float, trunc: Optional[TruncatedSeries] = None) -> float:
    """Riemann zeta for real s > 1: partial sum to K plus the Euler-Maclaurin
    tail correction through the B_4 term."""
    if s <= 1:
        raise ValueError("series divergent; analytic continuation out of scope")
    K = _k_of(trunc)
    k = np.arange(1, K + 1, dtype=float)
    head = float(np.sum(k ** (-float(s))))
    tail = (
        K ** (1.0 - s) / (s - 1.0)
        - K ** (-s) / 2.0
        + s * K ** (-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * K ** (-s - 3.0) / 720.0
    )
    return head + tail


def zeta_tail_bound(s: float, trunc: Optional[TruncatedSeries] = None) -> float:
    if s <= 1:
        raise ValueError("series divergent; analytic continuation out of scope")
    K = _k_of(trunc)
    # Euler-Maclaurin remainder is bounded by the first omitted (B_6) term.
    em = s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * K ** (-s - 5.0) / 30240.0
    return em + _roundoff(_partial_zeta_bound(s, K), 0.0, K)


def _hurwitz_tail(s: float, c: float, M: int) -> float:
    # sum_{t>=M} (t+c)^{-s} for s != 1, Euler-Maclaurin through the B_4 term
    y = M + c
    return (
        y ** (1.0 - s) / (s - 1.0)
        + y ** (-s) / 2.0
        + s * y ** (-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * y ** (-s - 3.0) / 720.0
    )


def dirichlet_beta(s: float, trunc: Optional[TruncatedSeries] = None) -> float:
    """Dirichlet beta, sum_k (-1)^k (2k+1)^{-s}, for real s > 0.

    Summed as paired chains (4t+1)^{-s} - (4t+3)^{-s} with an Euler-Maclaurin
    tail on each chain (logarithmic integral branch at s = 1), so small s
    reach full double accuracy.
    """
    if s <= 0:
        raise ValueError("alternating series requires s > 0")
    K = _k_of(trunc)
    t = np.arange(0, K + 1, dtype=float)
    head = float(np.sum((4 * t + 1.0) ** (-float(s)) - (4 * t + 3.0) ** (-float(s))))
    M = K + 1
    a, b = M + 0.25, M + 0.75
    if s == 1.0:
        tail = (
            log1p(0.5 / a)
            + (1.0 / a - 1.0 / b) / 2.0
            + (a**-2 - b**-2) / 12.0
            - 6.0 * (a**-4 - b**-4) / 720.0
        ) / 4.0
    else:
        tail = 4.0 ** (-float(s)) * (_hurwitz_tail(s, 0.25, M) - _hurwitz_tail(s, 0.75, M))
    return head + tail


def dirichlet_beta_tail_bound(s: float, trunc: Optional[TruncatedSeries] = None) -> float:
    if s <= 0:
        raise ValueError("alternating series requires s > 0")
    K = _k_of(trunc)
    # alternating-series bound: first omitted term (conservative; the
    # Euler-Maclaurin-corrected value is far inside it)
    alt = (4.0 * (K + 1) + 1.0) ** (-float(s))
    return alt + _roundoff(_partial_zeta_bound(max(s, 2.0), K) + 1.0, 0.0, K)


# --------------------------------------------------------------------------
# Hurwitz-side basis
# --------------------------------------------------------------------------

def hurwitz_basis(n: int, x) -> float:
    """B_n(x) for integer n >= 1, by exact polynomial evaluation (the
    integer-order basis coincides with the Bernoulli polynomial); converted
    to double at the end. Array `x` takes the double-precision Horner path."""
    if n < 1:
        raise ValueError("order must be >= 1")
    p = bernoulli_poly(n)
    if np.isscalar(x) or isinstance(x, Fraction):
        return float(poly_eval(p, Fraction(x)))
    return poly_eval_real(p, x)


# --------------------------------------------------------------------------
# Clausen-type bases
# --------------------------------------------------------------------------

def _series_real(x, K: int, p: float, trig) -> Union[float, np.ndarray]:
    # sum_{k=1}^{K} trig(2*pi*k*x) / k^p, chunked over k
    xv = np.asarray(x, dtype=float)
    scalar = xv.ndim == 0
    xs = np.atleast_1d(xv)
    acc = np.zeros(xs.shape)
    for lo in range(1, K + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, K + 1), dtype=float)
        acc += trig(2.0 * pi * xs[:, None] * k[None, :]) @ (k ** (-p))
    return float(acc[0]) if scalar else acc


def _series_complex(x, K: int, p: float) -> Union[complex, np.ndarray]:
    # sum_{k=1}^{K} e^{2*pi*i*k*x} / k^p
    xv = np.asarray(x, dtype=float)
    scalar = xv.ndim == 0
    xs = np.atleast_1d(xv)
    acc = np.zeros(xs.shape, dtype=complex)
    for lo in range(1, K + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, K + 1), dtype=float)
        acc += np.exp(2j * pi * xs[:, None] * k[None, :]) @ (k ** (-p))
    return complex(acc[0]) if scalar else acc


def _check_odd_order(order: int) -> None:
    if order % 2 == 0:
        raise ValueError("order must be odd")
    if order == 1:
        raise ValueError("conditional convergence unsupported")
    if order < 0:
        raise ValueError("order must be positive")


def clausen_a(order: int, x, trunc: Optional[TruncatedSeries] = None,
              variant: str = "standard"):
    """Odd-order Clausen-side basis, order = 2n+1 >= 3, two variants.

    variant="literal": -(2n+1)!/(2*pi)^{2n+1} * 2 * Im(e^{-i*pi*(2n+1)/2} *
    Li_{2n+1}(e^{2*pi*i*x})), evaluated with the phase exactly as displayed
    (this reduces to a cosine-type series).

    variant="standard": the sine-Clausen form
    -(2n+1)!/(2*pi)^{2n+1} * 2 * sum_k sin(2*pi*k*x)/k^{2n+1}.
    """
    _check_odd_order(order)
    K = _k_of(trunc)
    pref = -factorial(order) / (2.0 * pi) ** order * 2.0
    if variant == "standard":
        return pref * _series_real(x, K, float(order), np.sin)
    if variant == "literal":
        phase = cmath.exp(-1j * pi * order / 2.0)
        li = _series_complex(x, K, float(order))
        return pref * np.imag(phase * li) if not np.isscalar(x) \
            else pref * (phase * li).imag
    raise ValueError(f"unknown variant {variant!r}")


def clausen_a_tail_bound(order: int, trunc: Optional[TruncatedSeries] = None,
                         x: float = 1.0) -> float:
    _check_odd_order(order)
    K = _k_of(trunc)
    pref = 2.0 * factorial(order) / (2.0 * pi) ** order
    tail = pref * K ** (1.0 - order) / (order - 1.0)
    fp = _roundoff(pref * _partial_zeta_bound(order, K),
                   pref * 2.0 * pi * abs(x) * _partial_zeta_bound(order - 1, K), K)
    return tail + fp


def clausen_c(order: int, x, trunc: Optional[TruncatedSeries] = None):
    """Even-order cosine-Clausen basis:
    -(2n)!/pi^{2n} * sum_k cos(2*pi*k*x)/k^{2n}, order = 2n >= 2."""
    if order % 2 != 0 or order < 2:
        raise ValueError("order must be even and >= 2")
    K = _k_of(trunc)
    pref = -factorial(order) / pi**order
    return pref * _series_real(x, K, float(order), np.cos)


def clausen_c_tail_bound(order: int, trunc: Optional[TruncatedSeries] = None,
                         x: float = 1.0) -> float:
    if order % 2 != 0 or order < 2:
        raise ValueError("order must be even and >= 2")
    K = _k_of(trunc)
    pref = factorial(order) / pi**order
    tail = pref * K ** (1.0 - order) / (order - 1.0)
    fp = _roundoff(pref * _partial_zeta_bound(order, K),
                   pref * 2.0 * pi * abs(x) * _partial_zeta_bound(order - 1, K), K)
    return tail + fp


# --------------------------------------------------------------------------
# Lerch transcendent and the bridge
# --------------------------------------------------------------------------

def lerch_phi(z, s: float, a: float, trunc: Optional[TruncatedSeries] = None) -> complex:
    """Phi(z, s, a) = sum_{n>=0} z^n / (n+a)^s, truncated at n = K.

    Requires a > 0 and |z| <= 1; for |z| = 1 additionally s > 1.
    """
    if a <= 0:
        raise ValueError("pole chain: a must be > 0")
    z = complex(z)
    r = abs(z)
    if r > 1.0 + 1e-12:
        raise ValueError("|z| must be <= 1")
    if s <= 1 and r > 1.0 - 1e-12:
        raise ValueError("series divergent on the unit circle for s <= 1")
    K = _k_of(trunc)
    if r == 0.0:
        return complex(a ** (-float(s)))
    n = np.arange(0, K + 1, dtype=float)
    log_z = cmath.log(z)
    zn = np.exp(n * log_z.real + 1j * (n * log_z.imag))
    return complex(np.sum(zn * (n + a) ** (-float(s))))


def lerch_tail_bound(s: float, a: float, trunc: Optional[TruncatedSeries] = None) -> float:
    """Integral-test bound on |sum_{n>K} z^n/(n+a)^s| for |z| <= 1."""
    if a <= 0:
        raise ValueError("pole chain: a must be > 0")
    if s <= 1:
        raise ValueError("integral-test bound needs s > 1")
    K = _k_of(trunc)
    tail = (K + a) ** (1.0 - s) / (s - 1.0)
    return tail + _roundoff(_partial_zeta_bound(s, K) + a ** (-float(s)), 0.0, K)


def poisson_lerch_bridge(s: int, x: float, trunc: Optional[TruncatedSeries] = None) -> complex:
    """pi^{-s} * Gamma(s) * Phi(e^{2*pi*i*x}, s, 1) for integer s >= 2.

    Gamma is needed only at positive integers here and is taken as the exact
    factorial promoted to double.
    """
    if int(s) != s or s < 2:
        raise ValueError("bridge implemented for integer s >= 2")
    s = int(s)
    return pi ** (-s) * factorial(s - 1) * lerch_phi(unit_phase(x), s, 1.0, trunc)


# --------------------------------------------------------------------------
# Fourier-side oracle for the Bernoulli basis
# --------------------------------------------------------------------------

def bernoulli_fourier(n: int, x, trunc: Optional[TruncatedSeries] = None):
    """-n!/(2*pi*i)^n * sum_{k != 0} e^{2*pi*i*k*x} / k^n for n >= 2,
    x in (0,1), conjugate pairs combined so the result is real.

    On the open interval this converges to B_n(x); it is the independent
    Fourier-side route to the same values as `hurwitz_basis`.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    K = _k_of(trunc)
    pref = -factorial(n) / (2j * pi) ** n
    xv = np.asarray(x, dtype=float)
    scalar = xv.ndim == 0
    xs = np.atleast_1d(xv)
    acc = np.zeros(xs.shape, dtype=complex)
    sign = (-1.0) ** n
    for lo in range(1, K + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, K + 1), dtype=float)
        ph = np.exp(2j * pi * xs[:, None] * k[None, :])
        acc += (ph + sign * np.conj(ph)) @ (k ** (-float(n)))
    out = np.real(pref * acc)
    return float(out[0]) if scalar else out


def bernoulli_fourier_tail_bound(n: int, x: float,
                                 trunc: Optional[TruncatedSeries] = None) -> float:
    if n < 2:
        raise ValueError("n must be >= 2")
    K = _k_of(trunc)
    pref = 2.0 * factorial(n) / (2.0 * pi) ** n
    tail = pref * K ** (1.0 - n) / (n - 1.0)
    fp = _roundoff(pref * _partial_zeta_bound(n, K),
                   pref * 2.0 * pi * abs(x) * _partial_zeta_bound(n - 1, K), K)
    return tail + fp
