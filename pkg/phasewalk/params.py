"""
Coin-parameter algebra for the phase-parameterized coin C = H T H.

T = diag(e^{i pi tau1}, e^{i pi tau2}) and H is the Hadamard matrix, so that

    C = (1/2) [[a, b],
               [b, a]]

with a = e^{i pi tau1} + e^{i pi tau2} and b = e^{i pi tau1} - e^{i pi tau2}.
Rows and columns are ordered (left, right).
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateCoinError, DomainError

# |tau1 - tau2| below this marks the b = 0 (identity-like) regime
DEGENERACY_THRESHOLD = 1e-12

UNITARY_TOLERANCE = 1e-12

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


@dataclass(frozen=True)
class PhaseParams:
    """Coin phases (tau1, tau2) and the derived constants a, b.

    Use :func:`make_params` to build one; it validates the range.
    """

    tau1: float
    tau2: float
    a: complex = field(init=False)
    b: complex = field(init=False)
    degenerate: bool = field(init=False)
    zero_width: bool = field(init=False)

    def __post_init__(self):
        e1 = complex(np.exp(1j * math.pi * self.tau1))
        e2 = complex(np.exp(1j * math.pi * self.tau2))
        degenerate = abs(self.tau1 - self.tau2) < DEGENERACY_THRESHOLD
        # |tau1 - tau2| = 1: a = 0, the swap coin, the walk never leaves the origin
        zero_width = abs(abs(self.tau1 - self.tau2) - 1.0) < DEGENERACY_THRESHOLD
        object.__setattr__(self, "a", 0j if zero_width else e1 + e2)
        object.__setattr__(self, "b", 0j if degenerate else e1 - e2)
        object.__setattr__(self, "degenerate", degenerate)
        object.__setattr__(self, "zero_width", zero_width)

    @property
    def delta(self) -> float:
        return self.tau1 - self.tau2

    @property
    def abs_a(self) -> float:
        """|a| = 2|cos(pi (tau1 - tau2) / 2)|; exactly 0 for the swap coin."""
        if self.zero_width:
            return 0.0
        return 2.0 * abs(math.cos(math.pi * self.delta / 2.0))

    @property
    def abs_b(self) -> float:
        """|b| = 2|sin(pi (tau1 - tau2) / 2)|; exactly 0 when degenerate."""
        if self.degenerate:
            return 0.0
        return 2.0 * abs(math.sin(math.pi * self.delta / 2.0))

    @property
    def half_width(self) -> float:
        """|a|/2, the speed of the two peaks and the half-width of the limit support."""
        return self.abs_a / 2.0

    @property
    def phase(self) -> complex:
        """Global phase e^{i pi (tau1 + tau2) / 2}; a = 2 phase cos, b = 2i phase sin."""
        return complex(np.exp(0.5j * math.pi * (self.tau1 + self.tau2)))

    def require_nondegenerate(self, operation: str) -> None:
        if self.degenerate:
            raise DegenerateCoinError(operation)

    def require_spread(self, operation: str) -> None:
        if self.zero_width:
            raise DomainError(
                f"{operation} needs a support of positive width; tau=({self.tau1}, {self.tau2}) "
                f"gives a = 0 and the limit law is a point mass at 0"
            )


@dataclass(frozen=True)
class CoinMatrix:
    """2x2 coin, rows/columns ordered (left, right)."""

    entries: np.ndarray

    def is_unitary(self, tol: float = UNITARY_TOLERANCE) -> bool:
        product = self.entries @ self.entries.conj().T
        return bool(np.max(np.abs(product - np.eye(2))) <= tol)

    def is_symmetric(self) -> bool:
        return self.entries[0, 1] == self.entries[1, 0]


def _check_tau(name: str, value) -> float:
    try:
        tau = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a real number in [0, 1], got {value!r}")
    if not math.isfinite(tau) or tau < 0.0 or tau > 1.0:
        raise DomainError(f"{name} must lie in [0, 1], got {value!r}")
    return tau


def make_params(tau1, tau2) -> PhaseParams:
    """Validate (tau1, tau2) and derive a, b and the degeneracy flag."""
    return PhaseParams(_check_tau("tau1", tau1), _check_tau("tau2", tau2))


def coin_matrix(p: PhaseParams) -> CoinMatrix:
    half_a = p.a / 2.0
    half_b = p.b / 2.0
    return CoinMatrix(np.array([[half_a, half_b], [half_b, half_a]], dtype=complex))


def hadamard_product(p: PhaseParams) -> np.ndarray:
    """H T H multiplied out numerically, independent of the a/b closed form."""
    phases = np.diag(np.exp(1j * math.pi * np.array([p.tau1, p.tau2])))
    return HADAMARD @ phases @ HADAMARD
