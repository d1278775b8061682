"""Finite-section ladder operators on degree-truncated Bernoulli and Hermite
bases, with exact (Fraction) matrices for the algebraic identities and float
matrices for the normalized square-root ladders.

Truncation semantics: on a basis of degrees 0..D the top degree is corrupted
by the cutoff, so every commutator identity is asserted on the leading block
of degrees 0..D-1 only.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, sqrt
from typing import Tuple, Union

from .exact import bernoulli_egf, bernoulli_poly

__all__ = [
    "OperatorMatrix",
    "commutator",
    "lowering_op",
    "raising_op",
    "number_op",
    "hermite_poly_derivative_op",
    "annihilation_op",
    "creation_op",
    "hermite_ladder",
    "coherent_state_check",
]

Entry = Union[Fraction, float]

BASIS_TAGS = ("bernoulli", "hermite-poly", "hermite-fn")


class OperatorMatrix:
    """Square matrix on a degree-truncated basis. `exact` matrices hold
    Fractions and are compared exactly; float matrices carry roundoff."""

    __slots__ = ("entries", "basis", "exact")

    def __init__(self, entries, basis: str, exact: bool):
        if basis not in BASIS_TAGS:
            raise ValueError(f"unknown basis tag {basis!r}")
        rows = tuple(tuple(r) for r in entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "exact", exact)

    def __setattr__(self, name, value):
        raise AttributeError("OperatorMatrix is immutable")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def _compatible(self, other: "OperatorMatrix") -> None:
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._compatible(other)
        n = self.dim
        a, b = self.entries, other.entries
        zero = Fraction(0) if (self.exact and other.exact) else 0.0
        out = [[sum((a[i][k] * b[k][j] for k in range(n)), zero) for j in range(n)]
               for i in range(n)]
        return OperatorMatrix(out, self.basis, self.exact and other.exact)

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        self._compatible(other)
        out = [[a - b for a, b in zip(ra, rb)]
               for ra, rb in zip(self.entries, other.entries)]
        return OperatorMatrix(out, self.basis, self.exact and other.exact)

    def __eq__(self, other) -> bool:
        if isinstance(other, OperatorMatrix):
            return (self.basis == other.basis and self.exact == other.exact
                    and self.entries == other.entries)
        return NotImplemented

    def __hash__(self):
        return hash((self.entries, self.basis, self.exact))

    def apply(self, vec) -> tuple:
        """Matrix-vector product on basis coordinates."""
        if len(vec) != self.dim:
            raise ValueError("vector length mismatch")
        return tuple(sum(r[j] * vec[j] for j in range(self.dim)) for r in self.entries)

    def leading_block(self, k: int) -> tuple:
        """Entries of the degrees 0..k-1 sub-block."""
        return tuple(r[:k] for r in self.entries[:k])

    def identity_like(self) -> "OperatorMatrix":
        one = Fraction(1) if self.exact else 1.0
        zero = Fraction(0) if self.exact else 0.0
        ent = [[one if i == j else zero for j in range(self.dim)] for i in range(self.dim)]
        return OperatorMatrix(ent, self.basis, self.exact)


def commutator(p: OperatorMatrix, q: OperatorMatrix) -> OperatorMatrix:
    """PQ - QP; requires matching dim and basis tag."""
    return (p @ q) - (q @ p)


def block_max_abs(m: OperatorMatrix, k: int) -> float:
    return max((abs(e) for row in m.leading_block(k) for e in row), default=0.0)


def _zeros(d: int, exact: bool):
    zero = Fraction(0) if exact else 0.0
    return [[zero] * (d + 1) for _ in range(d + 1)]


def lowering_op(D: int) -> OperatorMatrix:
    """Derivative on the Bernoulli basis: B_n -> n B_{n-1}."""
    if D < 1:
        raise ValueError("D must be >= 1")
    ent = _zeros(D, True)
    for n in range(1, D + 1):
        ent[n - 1][n] = Fraction(n)
    return OperatorMatrix(ent, "bernoulli", True)


def raising_op(D: int) -> OperatorMatrix:
    """Degree shift B_n -> B_{n+1}; the top column is truncated away."""
    if D < 1:
        raise ValueError("D must be >= 1")
    ent = _zeros(D, True)
    for n in range(D):
        ent[n + 1][n] = Fraction(1)
    return OperatorMatrix(ent, "bernoulli", True)


def number_op(D: int) -> OperatorMatrix:
    """Degree operator: diagonal (0, 1, ..., D)."""
    if D < 1:
        raise ValueError("D must be >= 1")
    ent = _zeros(D, True)
    for n in range(D + 1):
        ent[n][n] = Fraction(n)
    return OperatorMatrix(ent, "bernoulli", True)


def hermite_poly_derivative_op(D: int) -> OperatorMatrix:
    """Derivative on the Hermite polynomial basis: H_n -> 2n H_{n-1}."""
    if D < 1:
        raise ValueError("D must be >= 1")
    ent = _zeros(D, True)
    for n in range(1, D + 1):
        ent[n - 1][n] = Fraction(2 * n)
    return OperatorMatrix(ent, "hermite-poly", True)


def annihilation_op(D: int) -> OperatorMatrix:
    """Normalized lowering B_n -> sqrt(n) B_{n-1}. The degree-0 row is zero,
    which is the n = 0 kernel convention for the inverse square root."""
    if D < 1:
        raise ValueError("D must be >= 1")
    ent = _zeros(D, False)
    for n in range(1, D + 1):
        ent[n - 1][n] = sqrt(n)
    return OperatorMatrix(ent, "bernoulli", False)


def creation_op(D: int) -> OperatorMatrix:
    """Normalized raising B_n -> sqrt(n+1) B_{n+1}, top column truncated."""
    if D < 1:
        raise ValueError("D must be >= 1")
    ent = _zeros(D, False)
    for n in range(D):
        ent[n + 1][n] = sqrt(n + 1)
    return OperatorMatrix(ent, "bernoulli", False)


def hermite_ladder(D: int) -> Tuple[OperatorMatrix, OperatorMatrix]:
    """(annihilate, create) on normalized Hermite functions h_n =
    c_n H_n(x) e^{-x^2/2}, c_n = (2^n n! sqrt(pi))^{-1/2}.

    Built from the recurrences x H_n = H_{n+1}/2 + n H_{n-1} and
    H_n' = 2n H_{n-1}: with the Gaussian weight, the position and derivative
    operators act as

        x h_n  = sqrt((n+1)/2) h_{n+1} + sqrt(n/2) h_{n-1}
        d/dx h_n = sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}

    and a = (x + d/dx)/sqrt(2), a* = (x - d/dx)/sqrt(2).
    """
    if D < 1:
        raise ValueError("D must be >= 1")
    pos = _zeros(D, False)
    der = _zeros(D, False)
    for n in range(D + 1):
        up = sqrt((n + 1) / 2.0)
        dn = sqrt(n / 2.0)
        if n + 1 <= D:
            pos[n + 1][n] = up
            der[n + 1][n] = -up
        if n - 1 >= 0:
            pos[n - 1][n] = dn
            der[n - 1][n] = dn
    inv = 1.0 / sqrt(2.0)
    a = [[(pos[i][j] + der[i][j]) * inv for j in range(D + 1)] for i in range(D + 1)]
    adag = [[(pos[i][j] - der[i][j]) * inv for j in range(D + 1)] for i in range(D + 1)]
    return (OperatorMatrix(a, "hermite-fn", False),
            OperatorMatrix(adag, "hermite-fn", False))


@lru_cache(maxsize=None)
def _egf_matches_polys(T: int) -> bool:
    egf = bernoulli_egf(T)
    return all(
        egf.coefficient(n) == Fraction(1, factorial(n)) * bernoulli_poly(n)
        for n in range(T + 1)
    )


def coherent_state_check(T: int, y: Union[int, Fraction]) -> Fraction:
    """Truncated coherent state with basis coordinates v_n = y^n/n! for
    n <= T: applies the lowering matrix, subtracts y times the state, and
    returns the largest absolute basis coordinate of the defect on degrees
    <= T-1 (exactly zero; the truncation only injures the top coordinate).
    Also verifies that exponentiating the raising operator on the degree-0
    element reproduces the generating-function coefficients B_n(x)/n!
    exactly."""
    if T < 2:
        raise ValueError("T must be >= 2")
    y = Fraction(y)
    if not _egf_matches_polys(T):
        raise AssertionError("generating-function coefficients disagree")
    state = tuple(y**n / factorial(n) for n in range(T + 1))
    lowered = lowering_op(T).apply(state)
    defect = [abs(lo - y * v) for lo, v in zip(lowered[:T], state[:T])]
    return max(defect, default=Fraction(0))
