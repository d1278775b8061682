"""Finite trigonometric selector kernels on the half-integer nodes
theta_j = (2j+1)*pi/(2J), and the identities linking kernel-weighted Lerch
averages on the unit circle to signed congruence chains.

The kernels K_J^{sin}(k) = (1/J) sum_j sin(k theta_j)/sin(theta_j) and
K_J^{cos}(k) = (1/J) sum_j cos(k theta_j)/cos(theta_j) vanish on even k, take
values +-1 on odd k, and satisfy K(k + 2J) = -K(k), K(k + 4J) = K(k). The cos
kernel is rejected for odd J: the node theta = pi/2 appears there (2j+1 = J)
and cos(theta_j) vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, cos, pi, sin, sqrt
from typing import Optional, Tuple

import numpy as np

from .series import TruncatedSeries, lerch_phi

__all__ = [
    "SelectorKernel",
    "kernel_value",
    "kernel_table",
    "kernel_closed_form_j2",
    "lerch_selector_identity",
]

SNAP_TOL = 1e-9


@dataclass(frozen=True)
class SelectorKernel:
    """One full period of a selector kernel: values at k = 0..4J-1."""

    J: int
    parity: str
    values: Tuple[float, ...]

    def at(self, k: int) -> float:
        return self.values[k % (4 * self.J)]


def _nodes(J: int) -> np.ndarray:
    return (2.0 * np.arange(J) + 1.0) * pi / (2.0 * J)


def _check_parity(J: int, parity: str) -> None:
    if parity not in ("sin", "cos"):
        raise ValueError(f"unknown parity {parity!r}")
    if parity == "cos" and J % 2 == 1:
        raise ValueError("cos node vanishes at theta = pi/2 (odd J)")


def kernel_value(J: int, parity: str, k: int) -> float:
    """(1/J) sum_j trig(k*theta_j)/trig(theta_j); negative k through the
    defining formula."""
    if J < 1:
        raise ValueError("J must be >= 1")
    _check_parity(J, parity)
    th = _nodes(J)
    if parity == "sin":
        return float(np.sum(np.sin(k * th) / np.sin(th)) / J)
    return float(np.sum(np.cos(k * th) / np.cos(th)) / J)


def kernel_table(J: int, parity: str) -> SelectorKernel:
    """Tabulate k = 0..4J-1, snapping values within 1e-9 of {-1, 0, 1}."""
    vals = []
    for k in range(4 * J):
        v = kernel_value(J, parity, k)
        for target in (-1.0, 0.0, 1.0):
            if abs(v - target) <= SNAP_TOL:
                v = target
                break
        vals.append(v)
    return SelectorKernel(J, parity, tuple(vals))


def kernel_closed_form_j2(k: int, parity: str) -> float:
    """Closed forms at J = 2:
    sin: sqrt(2)*sin(k*pi/2)*cos(k*pi/4); cos: sqrt(2)*sin(k*pi/2)*sin(k*pi/4)."""
    if parity == "sin":
        return sqrt(2.0) * sin(k * pi / 2.0) * cos(k * pi / 4.0)
    if parity == "cos":
        return sqrt(2.0) * sin(k * pi / 2.0) * sin(k * pi / 4.0)
    raise ValueError(f"unknown parity {parity!r}")


def _chain_rhs(J: int, k: int, s: int, a: float, branch: str, L: int) -> float:
    # signed congruence chains: sum over Chebyshev offsets d = k-1-2t of
    # alternating sums over n = 2J*u - d >= 0
    total = 0.0
    for t in range(k):
        d = k - 1 - 2 * t
        sign = (-1.0) ** d if branch == "sin" else (-1.0) ** t
        u0 = max(0, ceil(d / (2 * J)))
        u = np.arange(u0, L + 1, dtype=float)
        total += sign * float(np.sum((-1.0) ** u * (2.0 * J * u - d + a) ** (-float(s))))
    return total


def lerch_selector_identity(J: int, k: int, s: int, a: float, branch: str,
                            L: int = 10_000,
                            trunc: Optional[TruncatedSeries] = None):
    """Two independent evaluations of the kernel-weighted Lerch average.

    Left side: (1/(2J)) * sum_{j=0}^{2J-1} [trig(k*theta_j)/trig(theta_j)] *
    Phi(z_j, s, a) with z_j = -e^{i*theta_j} (sin branch) or +e^{i*theta_j}
    (cos branch). The node set runs over the full circle so conjugate angles
    pair up and the sum is real; |Im| <= 1e-8 is asserted and the real part
    returned.

    Right side: expanding trig(k*theta)/trig(theta) = sum_t eps_t *
    e^{i*(k-1-2t)*theta} and averaging e^{i*m*theta_j} over the nodes leaves
    only m = 0 mod 2J with sign (-1)^{m/2J}, giving the congruence-chain form

        rhs = sum_{t=0}^{k-1} eps_t * sum_{u >= max(0, ceil(d_t/2J))}
              (-1)^u (2J*u - d_t + a)^{-s},   d_t = k-1-2t,

    with eps_t = (-1)^{d_t} on the sin branch and (-1)^t on the cos branch,
    truncated at u = L. All chain denominators are n + a with n >= 0, so the
    sum is pole-free for a > 0; integer s >= 2 keeps every term well defined.

    Returns (lhs, rhs, |lhs - rhs|).
    """
    if int(s) != s or s < 2:
        raise ValueError("bilateral sum undefined for non-integer s; need integer s >= 2")
    if a <= 0:
        raise ValueError("pole chain: a must be > 0")
    if J < 1:
        raise ValueError("J must be >= 1")
    _check_parity(J, branch)
    s = int(s)

    # negative k via kernel parity: sin is odd in k, cos is even
    k_sign = 1.0
    if k < 0:
        k = -k
        if branch == "sin":
            k_sign = -1.0

    th = (2.0 * np.arange(2 * J) + 1.0) * pi / (2.0 * J)
    total = 0j
    for t in th:
        if branch == "sin":
            wgt = sin(k * t) / sin(t)
            z = -complex(cos(t), sin(t))
        else:
            wgt = cos(k * t) / cos(t)
            z = complex(cos(t), sin(t))
        total += wgt * lerch_phi(z, s, a, trunc)
    total *= k_sign / (2 * J)
    if abs(total.imag) > 1e-8:
        raise AssertionError(f"kernel-weighted sum not real: Im = {total.imag:.3e}")
    lhs = total.real

    rhs = k_sign * _chain_rhs(J, k, s, a, branch, L)
    return lhs, rhs, abs(lhs - rhs)
