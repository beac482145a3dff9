"""
Exact evolution of the walk on the line.

This is the reference oracle every other route is checked against. The state
at time t is stored densely over positions [-t, t]; amplitude index i holds
position n = i - t. Only slots with n + t even are ever written by :func:`step`.

One step:

    psi_{t+1}(n) = M+ psi_t(n-1) + M- psi_t(n+1)
    M+ = [[0, 0], [b/2, a/2]]     (right movers arrive from n-1)
    M- = [[a/2, b/2], [0, 0]]     (left movers arrive from n+1)
"""

import logging
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from .errors import DomainError
from .params import PhaseParams

log = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-10
# variances at or below this (sites^2) are roundoff: the walk is not spreading
VARIANCE_FLOOR = 1e-9


@dataclass(frozen=True)
class WalkState:
    """Walk amplitudes at time ``t``.

    ``left[i]`` and ``right[i]`` are the amplitudes at position ``i - t``.
    """

    t: int
    left: np.ndarray
    right: np.ndarray

    @property
    def positions(self) -> np.ndarray:
        return np.arange(-self.t, self.t + 1)

    def amplitude(self, n: int) -> Tuple[complex, complex]:
        if abs(n) > self.t:
            return 0j, 0j
        i = n + self.t
        return complex(self.left[i]), complex(self.right[i])

    def total_probability(self) -> float:
        return float(np.sum(probability(self)))


def step_matrices(p: PhaseParams) -> Tuple[np.ndarray, np.ndarray]:
    """Return (M+, M-)."""
    m_plus = np.array([[0.0, 0.0], [p.b / 2.0, p.a / 2.0]], dtype=complex)
    m_minus = np.array([[p.a / 2.0, p.b / 2.0], [0.0, 0.0]], dtype=complex)
    return m_plus, m_minus


def initial_state(alpha_left: complex, alpha_right: complex) -> WalkState:
    norm = abs(alpha_left) ** 2 + abs(alpha_right) ** 2
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise DomainError(
            f"initial amplitudes must have unit norm, got |left|^2 + |right|^2 = {norm!r}"
        )
    return WalkState(
        t=0,
        left=np.array([alpha_left], dtype=complex),
        right=np.array([alpha_right], dtype=complex),
    )


def step(s: WalkState, p: PhaseParams) -> WalkState:
    t = s.t
    size = 2 * t + 3
    left = np.zeros(size, dtype=complex)
    right = np.zeros(size, dtype=complex)
    # occupied slots of s sit at even indices; they land on even indices again
    old_left = s.left[0::2]
    old_right = s.right[0::2]
    half_a = p.a / 2.0
    half_b = p.b / 2.0
    left[0:2 * t + 1:2] = half_a * old_left + half_b * old_right
    right[2:2 * t + 3:2] = half_b * old_left + half_a * old_right
    return WalkState(t=t + 1, left=left, right=right)


def evolve(s: WalkState, p: PhaseParams, steps: int) -> WalkState:
    if steps < 0:
        raise DomainError(f"steps must be nonnegative, got {steps}")
    for _ in range(steps):
        s = step(s, p)
    return s


def evolve_history(s: WalkState, p: PhaseParams, steps: int, every: int = 1) -> Iterator[WalkState]:
    """Yield the state every ``every`` steps, starting with ``s`` itself."""
    if steps < 0:
        raise DomainError(f"steps must be nonnegative, got {steps}")
    if every < 1:
        raise DomainError(f"every must be at least 1, got {every}")
    yield s
    for i in range(1, steps + 1):
        s = step(s, p)
        if i % every == 0:
            yield s


def probability(s: WalkState) -> np.ndarray:
    """P_t(n) = |left(n)|^2 + |right(n)|^2, aligned with ``s.positions``.

    This is the squared norm <psi_t(n)|psi_t(n)>, not its square.
    """
    return np.abs(s.left) ** 2 + np.abs(s.right) ** 2


def moments(s: WalkState) -> Tuple[float, float]:
    """(mean, variance) of the position distribution."""
    prob = probability(s)
    n = s.positions.astype(float)
    # np.sum reduces contiguous float arrays pairwise
    mean = float(np.sum(n * prob))
    second = float(np.sum(n * n * prob))
    return mean, second - mean * mean


def peak_positions(s: WalkState) -> Tuple[int, int]:
    """Positions of the largest probability on the left (n < 0) and right (n > 0)."""
    if s.t == 0:
        return 0, 0
    prob = probability(s)
    n = s.positions
    left_half = n < 0
    right_half = n > 0
    return int(n[left_half][np.argmax(prob[left_half])]), int(n[right_half][np.argmax(prob[right_half])])


def variance_exponent(p: PhaseParams, alpha0: Sequence[complex], times: Sequence[int]) -> float:
    """Least-squares slope of log V(t) against log t over ``times``.

    Ballistic spreading gives 2.
    """
    times = sorted(set(int(t) for t in times))
    if len(times) < 2 or times[0] < 1:
        raise DomainError("need at least two positive times to fit a growth exponent")
    state = initial_state(*alpha0)
    variances = []
    for t in times:
        state = evolve(state, p, t - state.t)
        variances.append(moments(state)[1])
    log.debug("variance samples: %s", list(zip(times, variances)))
    if min(variances) <= VARIANCE_FLOOR:
        raise DomainError(
            f"variance stays below {VARIANCE_FLOOR:g} for tau=({p.tau1}, {p.tau2}); there is no growth exponent"
        )
    slope, _ = np.polyfit(np.log(times), np.log(variances), 1)
    return float(slope)
