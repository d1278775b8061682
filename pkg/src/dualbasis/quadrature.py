"""Principal-value quadrature on [0,1] for the singular weights csc(2*pi*x),
cot(pi*x), and their rotated blend.

PV realization (trapezoid rule): uniform nodes i/N with standard trapezoid
weights; every node sitting on a singular point of the weight is dropped and
its quadrature weight is split half-and-half onto its two neighbours
(periodically across 0 == 1). Around a simple pole the neighbour pair is
symmetric, so their divergent parts cancel exactly and the local rule
reproduces the symmetric-limit principal value to O(h^2) while preserving the
total weight of the rule. The midpoint rule needs no drops: its nodes avoid
the singular set by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, pi, sin
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "WeightSpec",
    "QuadratureConfig",
    "alt_weight",
    "sym_weight",
    "rotated_weight",
    "weight_eval",
    "pv_integrate",
    "convergence_probe",
]


@dataclass(frozen=True)
class WeightSpec:
    """Singular weight on (0,1): kind "alt" = csc(2*pi*x), "sym" = cot(pi*x),
    "rotated" = cos(phi)*csc(2*pi*x) + sin(phi)*cot(pi*x)."""

    kind: str
    phi: float = 0.0

    def __post_init__(self):
        if self.kind not in ("alt", "sym", "rotated"):
            raise ValueError(f"unknown weight kind {self.kind!r}")

    @property
    def singular_points(self) -> Tuple[float, ...]:
        if self.kind == "sym":
            return (0.0, 1.0)
        return (0.0, 0.5, 1.0)


def alt_weight() -> WeightSpec:
    return WeightSpec("alt")


def sym_weight() -> WeightSpec:
    return WeightSpec("sym")


def rotated_weight(phi: float) -> WeightSpec:
    return WeightSpec("rotated", phi)


def _weight_values(w: WeightSpec, x: np.ndarray) -> np.ndarray:
    if w.kind == "alt":
        return 1.0 / np.sin(2.0 * pi * x)
    if w.kind == "sym":
        return np.cos(pi * x) / np.sin(pi * x)
    return (cos(w.phi) / np.sin(2.0 * pi * x)
            + sin(w.phi) * np.cos(pi * x) / np.sin(pi * x))


def weight_eval(w: WeightSpec, x: float):
    """Weight value at a non-singular point; rotated blends exactly linearly."""
    if np.isscalar(x):
        if float(x) in w.singular_points:
            raise ValueError(f"weight singular at x = {x}")
        return float(_weight_values(w, np.asarray(float(x))))
    return _weight_values(w, np.asarray(x, dtype=float))


@dataclass(frozen=True)
class QuadratureConfig:
    rule: str = "trapezoid"
    nodes: int = 200

    def __post_init__(self):
        if self.rule not in ("trapezoid", "midpoint"):
            raise ValueError(f"unknown rule {self.rule!r}")
        if self.nodes < 4:
            raise ValueError("need at least 4 nodes")


def _eval_f(f: Callable, xs: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(xs), dtype=float)
        if vals.shape != xs.shape:
            raise ValueError
    except (TypeError, ValueError):
        vals = np.array([float(f(x)) for x in xs])
    return vals


def _trapezoid_weights(N: int, singular: Sequence[float]) -> np.ndarray:
    h = 1.0 / N
    qw = np.full(N + 1, h)
    qw[0] = qw[N] = h / 2.0
    for p in singular:
        i = p * N
        if i != int(i):  # singular point off the grid: nothing to drop
            continue
        i = int(i)
        wi = qw[i]
        qw[i] = 0.0
        if i in (0, N):  # periodic pole 0 == 1: neighbours are h and 1-h
            qw[1] += wi / 2.0
            qw[N - 1] += wi / 2.0
        else:
            qw[i - 1] += wi / 2.0
            qw[i + 1] += wi / 2.0
    return qw


def pv_integrate(f: Callable, w: WeightSpec, cfg: Optional[QuadratureConfig] = None) -> float:
    """PV / finite-part integral of f(x)*w(x) over [0,1].

    trapezoid: nodes i/N (N even required so x = 1/2 lands on a node),
    singular nodes dropped symmetrically as described in the module docstring.
    midpoint: nodes (i+1/2)/N, no drops. Raises if f is non-finite at any
    retained node.
    """
    cfg = cfg or QuadratureConfig()
    N = cfg.nodes
    if cfg.rule == "trapezoid":
        if N % 2 != 0:
            raise ValueError("N must be even")
        qw = _trapezoid_weights(N, w.singular_points)
        keep = qw != 0.0
        xs = np.arange(N + 1)[keep] / N
        qws = qw[keep]
    else:
        xs = (np.arange(N) + 0.5) / N
        if any(p * N - 0.5 == int(p * N - 0.5) and 0 <= p * N - 0.5 < N
               for p in w.singular_points):
            raise ValueError("midpoint node coincides with a singular point; use even N")
        qws = np.full(N, 1.0 / N)
    fv = _eval_f(f, xs)
    if not np.all(np.isfinite(fv)):
        raise ValueError("integrand singularity off the PV set")
    return float(np.sum(qws * fv * _weight_values(w, xs)))


def convergence_probe(f: Callable, w: WeightSpec, n_values: Sequence[int],
                      rule: str = "trapezoid"):
    """Evaluate at an increasing sequence of N; return (N, value, delta_to_next)
    triples (delta is None for the last entry)."""
    ns = list(n_values)
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("N sequence must be strictly increasing")
    values = [pv_integrate(f, w, QuadratureConfig(rule, n)) for n in ns]
    out = []
    for i, (n, v) in enumerate(zip(ns, values)):
        delta = values[i + 1] - v if i + 1 < len(values) else None
        out.append((n, v, delta))
    return out
