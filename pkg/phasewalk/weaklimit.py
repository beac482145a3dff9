"""
Limit law of X_t / t.

As t grows, X_t / t converges weakly to h(K, J) where K is uniform on
[-pi, pi], J picks branch j with probability |<lambda_j(K)|alpha0>|^2 and

    h(k, j) = (-1)^j sin k / sqrt(sin^2 k + tan^2(pi (tau1 - tau2)/2)).

The law lives on [-|a|/2, |a|/2]. For initial states satisfying
Im(alpha_left conj(alpha_right)) sin(pi (tau1 - tau2)) = 0 with
|alpha_left| = |alpha_right| it has the density

    f(y) = (|b|/2) / (pi (1 - y^2) sqrt((|a|/2)^2 - y^2)).

The denominator is usually printed with (y^2 - 1), which is negative on the
support; (1 - y^2) is the form that integrates to one.

For any other initial state the law is still the pushforward of the
measure above; :func:`measure_cdf` evaluates its CDF on a midpoint k grid.
"""

import logging
import math
from dataclasses import dataclass
from functools import partial
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import integrate

from .errors import DomainError
from .exactsim import evolve, initial_state, probability
from .params import PhaseParams
from .spectral import eigensystem

log = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-10
QUAD_EPSABS = 1e-10
QUAD_EPSREL = 1e-8
QUAD_LIMIT = 200
# largest accepted quad error estimate
QUAD_ERROR_BOUND = 1e-7
# midpoint nodes for the general limit measure; CDF error is O(1/nodes)
MEASURE_NODES = 1 << 16


@dataclass(frozen=True)
class LimitLaw:
    params: PhaseParams
    half_width: float
    density: Callable[[float], float]
    cdf: Callable[[float], float]
    contains: Callable[[float], bool]


@dataclass(frozen=True)
class VelocitySample:
    """Draws of (K, J) and the velocity h(K, J), one entry per draw."""

    k: np.ndarray
    j: np.ndarray
    h: np.ndarray
    seed: Optional[int] = None


def velocity_map(p: PhaseParams, k, j: int):
    """h(k, j); vectorized over ``k``."""
    p.require_nondegenerate("velocity_map")
    sign = -1.0 if j == 1 else 1.0
    sin_k = np.sin(k)
    # multiplied through by |a| so that a = 0 gives h = 0 instead of 0/0
    return sign * p.abs_a * sin_k / np.sqrt(p.abs_a ** 2 * sin_k * sin_k + p.abs_b ** 2)


def support_interval(p: PhaseParams) -> Tuple[float, float]:
    if p.zero_width:
        return 0.0, 0.0
    return -p.half_width, p.half_width


def in_support(p: PhaseParams, y):
    """True where ``y`` lies in the open support (-|a|/2, |a|/2). Vectorized."""
    inside = np.abs(np.asarray(y, dtype=float)) < p.half_width
    return bool(inside) if inside.ndim == 0 else inside


def limit_density(p: PhaseParams, y):
    """f(y) on the open support, 0 outside it (see :func:`in_support`). Vectorized over ``y``."""
    p.require_nondegenerate("limit_density")
    p.require_spread("limit_density")
    y = np.asarray(y, dtype=float)
    c = p.half_width
    s = p.abs_b / 2.0
    inside = np.abs(y) < c
    safe = np.where(inside, y, 0.0)
    # 1 - y^2 = s^2 + (c - y)(c + y) keeps the edge values accurate when s is tiny
    gap = (c - safe) * (c + safe)
    value = s / (math.pi * (s * s + gap) * np.sqrt(gap))
    out = np.where(inside, value, 0.0)
    return float(out) if out.ndim == 0 else out


def _edge_points(s: float, lower: float, upper: float) -> List[float]:
    """Breakpoints at distances s, 10 s, 100 s, ... from u = -pi/2 and u = pi/2.

    In the variable u the density is a Lorentzian of width ~s at each end.
    """
    half_pi = math.pi / 2.0
    points = []
    width = s
    while width < 0.5:
        for u in (-half_pi + width, half_pi - width):
            if lower < u < upper:
                points.append(u)
        width *= 10.0
    return sorted(points)


def _integrate_density(p: PhaseParams, lower: float, upper: float, operation: str) -> float:
    """Integral of f over y in [c sin(lower), c sin(upper)], after y = c sin u."""
    s = p.abs_b / 2.0
    points = _edge_points(s, lower, upper)
    result = integrate.quad(
        lambda u: s / (math.pi * (math.cos(u) ** 2 + (s * math.sin(u)) ** 2)),
        lower,
        upper,
        points=points or None,
        epsabs=QUAD_EPSABS,
        epsrel=QUAD_EPSREL,
        limit=QUAD_LIMIT,
        full_output=1,
    )
    value, error = result[0], result[1]
    if len(result) > 3:
        log.debug("%s: quad reported %s", operation, result[3])
    if not error <= QUAD_ERROR_BOUND:
        raise DomainError(
            f"{operation}: quadrature error estimate {error:.3g} exceeds {QUAD_ERROR_BOUND:g} "
            f"for tau=({p.tau1}, {p.tau2})"
        )
    return value


def limit_cdf(p: PhaseParams, y: float) -> float:
    """F(y) by adaptive quadrature after the substitution y = (|a|/2) sin u.

    For |tau1 - tau2| = 1 the law is a point mass at 0 and F is a unit step.
    """
    p.require_nondegenerate("limit_cdf")
    if p.zero_width:
        return 1.0 if y >= 0.0 else 0.0
    c = p.half_width
    if y <= -c:
        return 0.0
    if y >= c:
        return 1.0
    value = _integrate_density(p, -math.pi / 2.0, math.asin(y / c), "limit_cdf")
    return min(1.0, max(0.0, value))


def limit_cdf_closed_form(p: PhaseParams, y):
    """F(y) = 1/2 + arctan((|b|/2) y / sqrt((|a|/2)^2 - y^2)) / pi. Vectorized."""
    p.require_nondegenerate("limit_cdf_closed_form")
    y = np.asarray(y, dtype=float)
    if p.zero_width:
        out = np.where(y >= 0.0, 1.0, 0.0)
        return float(out) if out.ndim == 0 else out
    c = p.half_width
    inside = np.abs(y) < c
    safe = np.where(inside, y, 0.0)
    value = 0.5 + np.arctan((p.abs_b / 2.0) * safe / np.sqrt((c - safe) * (c + safe))) / math.pi
    out = np.where(inside, value, np.where(y >= c, 1.0, 0.0))
    return float(out) if out.ndim == 0 else out


def density_mass(p: PhaseParams) -> float:
    """Total mass of f over the support."""
    p.require_nondegenerate("density_mass")
    p.require_spread("density_mass")
    return _integrate_density(p, -math.pi / 2.0, math.pi / 2.0, "density_mass")


def _measure_table(p: PhaseParams, alpha0: Sequence[complex], nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    """Sorted velocities h(k_m, j) and the cumulative limit-measure weight up to each."""
    if nodes < 2:
        raise DomainError(f"measure_cdf needs at least 2 nodes, got {nodes}")
    ks = -math.pi + (np.arange(nodes) + 0.5) * (2.0 * math.pi / nodes)
    _, vectors, _ = eigensystem(p, ks)
    weights = np.abs(np.einsum("kjd,d->kj", vectors.conj(), np.asarray(alpha0, dtype=complex))) ** 2
    velocities = np.stack([velocity_map(p, ks, 1), velocity_map(p, ks, 2)], axis=-1)
    order = np.argsort(velocities.ravel(), kind="stable")
    return velocities.ravel()[order], np.cumsum(weights.ravel()[order]) / nodes


def measure_cdf(p: PhaseParams, alpha0: Sequence[complex], y, nodes: int = MEASURE_NODES):
    """P(h(K, J) <= y) for any initial state. Vectorized over ``y``.

    Agrees with :func:`limit_cdf_closed_form` for symmetric initial states.
    """
    p.require_nondegenerate("measure_cdf")
    velocities, cumulative = _measure_table(p, alpha0, nodes)
    y = np.asarray(y, dtype=float)
    index = np.searchsorted(velocities, y, side="right")
    out = np.clip(np.where(index > 0, cumulative[np.maximum(index - 1, 0)], 0.0), 0.0, 1.0)
    return float(out) if out.ndim == 0 else out


def limit_law(p: PhaseParams) -> LimitLaw:
    p.require_nondegenerate("limit_law")
    p.require_spread("limit_law")
    return LimitLaw(
        params=p,
        half_width=p.half_width,
        density=partial(limit_density, p),
        cdf=partial(limit_cdf, p),
        contains=partial(in_support, p),
    )


def symmetric_initial_state() -> Tuple[complex, complex]:
    """(1/sqrt 2, 1/sqrt 2), which satisfies the symmetry condition for every coin."""
    amplitude = complex(1.0 / math.sqrt(2.0))
    return amplitude, amplitude


def is_symmetric_initial(p: PhaseParams, alpha0: Sequence[complex], tol: float = SYMMETRY_TOLERANCE) -> bool:
    left, right = complex(alpha0[0]), complex(alpha0[1])
    balanced = abs(abs(left) ** 2 - abs(right) ** 2) <= tol
    cross = (left * right.conjugate()).imag * math.sin(math.pi * p.delta)
    return balanced and abs(cross) <= tol


def ks_distance(p: PhaseParams, alpha0: Sequence[complex], t: int) -> float:
    """Sup distance between the exact distribution of X_t/t and its limit CDF.

    The empirical side uses exact probabilities, so there is no sampling noise.
    Symmetric initial states are compared with the closed-form CDF, all others
    with :func:`measure_cdf`.
    """
    p.require_nondegenerate("ks_distance")
    if t < 1:
        raise DomainError(f"ks_distance needs t >= 1, got {t}")
    state = evolve(initial_state(*alpha0), p, t)
    prob = probability(state)
    after = np.cumsum(prob)
    before = after - prob
    ys = state.positions / t
    if is_symmetric_initial(p, alpha0):
        cdf = partial(limit_cdf_closed_form, p)
    else:
        log.info(
            "initial state (%s, %s) is not symmetric for tau=(%g, %g); comparing with the general limit measure",
            alpha0[0], alpha0[1], p.tau1, p.tau2,
        )
        cdf = partial(measure_cdf, p, alpha0)
    # the exact CDF jumps at each site: match its left limit with the limit law's
    limit = cdf(ys)
    limit_left = cdf(np.nextafter(ys, -np.inf))
    distance = max(float(np.max(np.abs(after - limit))), float(np.max(np.abs(before - limit_left))))
    log.debug("ks distance tau=(%g, %g) t=%d: %.6g", p.tau1, p.tau2, t, distance)
    return distance


def pushforward_sample(
    p: PhaseParams, alpha0: Sequence[complex], size: int, seed: Optional[int] = None
) -> VelocitySample:
    """Draw h(K, J) under the limit measure."""
    p.require_nondegenerate("pushforward_sample")
    rng = np.random.default_rng(seed)
    k = rng.uniform(-math.pi, math.pi, size)
    _, vectors, _ = eigensystem(p, k)
    overlap = np.einsum("kd,d->k", vectors[:, 0, :].conj(), np.asarray(alpha0, dtype=complex))
    first = rng.uniform(0.0, 1.0, size) < np.abs(overlap) ** 2
    j = np.where(first, 1, 2)
    h = np.where(first, velocity_map(p, k, 1), velocity_map(p, k, 2))
    return VelocitySample(k=k, j=j, h=h, seed=seed)
