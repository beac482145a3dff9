"""
Large-t closed form of the amplitudes by stationary phase.

Branch j contributes the oscillatory integral

    (1/2pi) int e^{t f_j(k)} |lambda_j><lambda_j|alpha0> dk,   f_j(k) = log lambda_j(k) - i gamma k

with gamma = n/t. On the real line f_j = i(omega_j(k) - gamma k), so the
stationary points solve omega_j'(k) = gamma:

    sin theta_j = (-1)^j tan(pi (tau1 - tau2)/2) gamma / sqrt(1 - gamma^2)

These are real exactly when |gamma| <= |a|/2. Each real stationary point adds

    (1/2pi) g(theta) e^{t f(theta)} sqrt(2pi / (t |omega''|)) e^{i pi/4 sgn omega''}

Every branch has a second stationary point at -pi - theta. The pair of
branches evaluated at theta and theta + pi differ by a sign, which is what
cancels the amplitude at positions of the wrong parity.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from .errors import DomainError
from .exactsim import evolve, initial_state, probability
from .params import PhaseParams
from .spectral import branch_root, eigensystem, phase_curvature

log = logging.getLogger(__name__)

DEFAULT_MARGIN = 0.01
GAMMA_LIMIT = 1.0 - 1e-9


@dataclass(frozen=True)
class SaddleData:
    """Stationary point of branch ``j`` at velocity ratio ``gamma``.

    ``theta`` is complex; its imaginary part vanishes inside the support.
    """

    gamma: float
    j: int
    theta: complex
    f_at_theta: complex
    f2_at_theta: complex
    inside_support: bool
    second: bool = False

    @property
    def theta_real(self) -> float:
        """The stationary point as a real momentum; defined inside the support only."""
        if not self.inside_support:
            raise DomainError(f"gamma={self.gamma!r} lies outside the support; theta is complex ({self.theta!r})")
        return float(self.theta.real)

    @property
    def curvature(self) -> float:
        """omega''(theta), the real second derivative of the eigenphase."""
        return float(np.imag(self.f2_at_theta))


@dataclass(frozen=True)
class AsymptoticAmplitudes:
    n: int
    t: int
    alpha_left: complex
    alpha_right: complex
    valid: bool
    # outside the support, where the exact amplitudes decay exponentially
    decay: bool = False

    @property
    def probability(self) -> float:
        return abs(self.alpha_left) ** 2 + abs(self.alpha_right) ** 2


def _check_branch(j: int) -> None:
    if j not in (1, 2):
        raise DomainError(f"branch index j must be 1 or 2, got {j!r}")


def _wrap(theta: complex) -> complex:
    real = theta.real
    if real < -math.pi:
        real += 2.0 * math.pi
    elif real > math.pi:
        real -= 2.0 * math.pi
    return complex(real, theta.imag)


def _eigenvalue(p: PhaseParams, k: complex, j: int) -> complex:
    sign = 1.0 if j == 1 else -1.0
    return complex((p.a * cmath.cos(k) + sign * branch_root(p, k)) / 2.0)


def saddle_point(p: PhaseParams, gamma: float, j: int, second: bool = False) -> SaddleData:
    """Solve omega_j'(theta) = gamma.

    ``second`` selects the partner solution -pi - theta, wrapped into [-pi, pi].
    """
    _check_branch(j)
    if abs(gamma) >= 1.0:
        raise DomainError(f"velocity ratio gamma must satisfy |gamma| < 1, got {gamma!r}")
    p.require_nondegenerate("saddle_point")
    p.require_spread("saddle_point")

    sign = -1.0 if j == 1 else 1.0
    ratio = p.abs_b / p.abs_a if p.abs_a > 0.0 else math.inf
    sin_theta = sign * ratio * gamma / math.sqrt(1.0 - gamma * gamma)
    inside = abs(gamma) <= p.half_width
    if inside:
        theta = complex(math.asin(max(-1.0, min(1.0, sin_theta))))
    else:
        theta = complex(np.arcsin(complex(sin_theta)))
    if second:
        theta = _wrap(-math.pi - theta)

    lam = _eigenvalue(p, theta, j)
    f = cmath.log(lam) - 1j * gamma * theta
    f2 = 1j * complex(phase_curvature(p, theta, j))
    return SaddleData(
        gamma=float(gamma),
        j=j,
        theta=theta,
        f_at_theta=f,
        f2_at_theta=f2,
        inside_support=inside,
        second=second,
    )


def _contribution(p: PhaseParams, alpha0: np.ndarray, t: int, n: int, saddle: SaddleData) -> np.ndarray:
    theta = saddle.theta.real
    eigenvalues, vectors, _ = eigensystem(p, np.array(theta))
    lam = eigenvalues[saddle.j - 1]
    v = vectors[saddle.j - 1]
    weight = v * np.vdot(v, alpha0)
    # lambda^t through its logarithm; t is an integer so the log branch is irrelevant
    oscillation = np.exp(t * np.log(lam) - 1j * n * theta)
    curvature = saddle.curvature
    width = math.sqrt(2.0 * math.pi / (t * abs(curvature)))
    turn = cmath.exp(0.25j * math.pi * math.copysign(1.0, curvature))
    return weight * oscillation * width * turn / (2.0 * math.pi)


def asymptotic_amplitudes(
    p: PhaseParams,
    alpha0: Sequence[complex],
    t: int,
    n: int,
    two_saddle: bool = True,
    margin: float = DEFAULT_MARGIN,
) -> AsymptoticAmplitudes:
    """Stationary-phase estimate of alpha_t(n).

    Positions in the caustic band ``(|a|/2)(1 - margin) < |n/t| <= |a|/2``
    come back with ``valid=False``; positions beyond the support come back
    with ``valid=False`` and ``decay=True``. Both carry zero amplitudes.
    """
    if t < 1:
        raise DomainError(f"asymptotic amplitudes need t >= 1, got {t}")
    p.require_nondegenerate("asymptotic_amplitudes")
    p.require_spread("asymptotic_amplitudes")
    gamma = n / t
    if abs(gamma) >= GAMMA_LIMIT:
        raise DomainError(f"|n/t| must stay below 1, got n={n}, t={t}")
    if abs(gamma) > p.half_width:
        return AsymptoticAmplitudes(n, t, 0j, 0j, valid=False, decay=True)
    if abs(gamma) > p.half_width * (1.0 - margin):
        return AsymptoticAmplitudes(n, t, 0j, 0j, valid=False)

    alpha0 = np.asarray(alpha0, dtype=complex)
    total = np.zeros(2, dtype=complex)
    for j in (1, 2):
        partners = (False, True) if two_saddle else (False,)
        for second in partners:
            total += _contribution(p, alpha0, t, n, saddle_point(p, gamma, j, second))
    return AsymptoticAmplitudes(n, t, complex(total[0]), complex(total[1]), valid=True)


def asymptotic_probability(
    p: PhaseParams,
    alpha0: Sequence[complex],
    t: int,
    n: int,
    two_saddle: bool = True,
    margin: float = DEFAULT_MARGIN,
) -> float:
    return asymptotic_amplitudes(p, alpha0, t, n, two_saddle, margin).probability


def asymptotic_curve(
    p: PhaseParams,
    alpha0: Sequence[complex],
    t: int,
    two_saddle: bool = True,
    margin: float = DEFAULT_MARGIN,
) -> List[AsymptoticAmplitudes]:
    """One row per n in [-t, t]; rows past the support are flagged ``decay``."""
    if t < 1:
        raise DomainError(f"asymptotic amplitudes need t >= 1, got {t}")
    rows = []
    for n in range(-t, t + 1):
        if abs(n / t) > p.half_width:
            rows.append(AsymptoticAmplitudes(n, t, 0j, 0j, valid=False, decay=True))
        else:
            rows.append(asymptotic_amplitudes(p, alpha0, t, n, two_saddle, margin))
    return rows


def middle_region_error(
    p: PhaseParams,
    alpha0: Sequence[complex],
    t: int,
    fraction: float = 0.6,
    two_saddle: bool = True,
) -> float:
    """Sum of |P_asym - P_exact| over |n/t| <= fraction * |a|/2."""
    if not 0.0 < fraction < 1.0:
        raise DomainError(f"fraction must lie in (0, 1), got {fraction!r}")
    exact = probability(evolve(initial_state(*alpha0), p, t))
    limit = fraction * p.half_width * t
    total = 0.0
    for n in range(-t, t + 1):
        if abs(n) <= limit:
            estimate = asymptotic_probability(p, alpha0, t, n, two_saddle)
            total += abs(estimate - exact[n + t])
    log.debug("middle-region error t=%d two_saddle=%s: %.6g", t, two_saddle, total)
    return total
