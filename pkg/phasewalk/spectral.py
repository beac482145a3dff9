"""
Momentum-space route: diagonalize M_k and invert the Fourier transform.

With psi~_t(k) = sum_n e^{ikn} psi_t(n) one step becomes psi~_{t+1} = M_k psi~_t,

    M_k = e^{ik} M+ + e^{-ik} M- = (1/2) [[a e^{-ik}, b e^{-ik}],
                                          [b e^{ik},  a e^{ik} ]].

Eigenpairs (j = 1 takes the + sign):

    lambda_j(k) = (a cos k +- rho(k)) / 2
    v_j(k)      = N_j(k) (-i a sin k +- rho(k), b e^{ik})

where rho(k) is the branch of sqrt(b^2 - a^2 sin^2 k) given by

    rho(k) = -i e^{i pi (tau1 + tau2)/2} sqrt(|b|^2 + |a|^2 sin^2 k).

rho is analytic in k and never vanishes for b != 0, so the eigenvalue curves
are continuous over the whole Brillouin zone, and branch j travels with group
velocity h(k, j) = (-1)^j |a| sin k / sqrt(|b|^2 + |a|^2 sin^2 k).

Real-space amplitudes come back through the periodic trapezoidal rule. The
integrand e^{-ikn} psi~_t(k) is a trigonometric polynomial of degree <= 2t,
so any grid with more than 2t nodes integrates it exactly.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, QuadratureError
from .exactsim import WalkState
from .params import PhaseParams

log = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-10
ORTHONORMAL_TOLERANCE = 1e-10
NEAR_DEGENERATE_GAP = 1e-8
# min_k gap = |b|; below this M_k^t is formed by repeated squaring instead of
# through an ill-conditioned eigenbasis
RECONSTRUCTION_GAP = 1e-3
# reconstruction rows evaluated per block, bounds the phase-matrix memory
ROW_BLOCK = 256


@dataclass(frozen=True)
class MomentumOperator:
    k: float
    entries: np.ndarray

    def is_unitary(self, tol: float = 1e-12) -> bool:
        product = self.entries @ self.entries.conj().T
        return bool(np.max(np.abs(product - np.eye(2))) <= tol)


@dataclass(frozen=True)
class MomentumSpectrum:
    """Eigen data of M_k. ``vectors[j-1]`` is the normalized |lambda_j(k)>."""

    k: float
    eigenvalues: np.ndarray
    vectors: np.ndarray
    normalizers: np.ndarray
    reduced_tolerance: bool = False

    @property
    def gap(self) -> float:
        return float(abs(self.eigenvalues[0] - self.eigenvalues[1]))


def _check_momentum(k: float) -> None:
    if not -math.pi - 1e-12 <= k <= math.pi + 1e-12:
        raise DomainError(f"momentum k must lie in [-pi, pi], got {k!r}")


def _momentum_matrices(p: PhaseParams, ks: np.ndarray) -> np.ndarray:
    ks = np.asarray(ks, dtype=float)
    down = np.exp(-1j * ks) / 2.0
    up = np.exp(1j * ks) / 2.0
    out = np.empty(ks.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = p.a * down
    out[..., 0, 1] = p.b * down
    out[..., 1, 0] = p.b * up
    out[..., 1, 1] = p.a * up
    return out


def branch_root(p: PhaseParams, k):
    """rho(k), the continuous branch of sqrt(b^2 - a^2 sin^2 k). Accepts complex k."""
    sin_k = np.sin(k)
    return -1j * p.phase * np.sqrt(p.abs_b ** 2 + p.abs_a ** 2 * sin_k * sin_k)


def eigensystem(p: PhaseParams, ks):
    """Eigenpairs of M_k over an array of momenta.

    Returns (eigenvalues, vectors, normalizers) with shapes (..., 2),
    (..., 2, 2) and (..., 2); ``vectors[..., j-1, :]`` is |lambda_j(k)>.
    """
    p.require_nondegenerate("spectrum")
    ks = np.asarray(ks)
    sin_k = np.sin(ks)
    cos_k = np.cos(ks)
    rho = branch_root(p, ks)
    base = -1j * p.a * sin_k
    x_plus = base + rho
    x_minus = base - rho
    # x_plus * x_minus = -b^2: recover the smaller one from the larger
    # instead of subtracting nearly equal numbers
    plus_small = np.abs(x_plus) < np.abs(x_minus)
    x_plus = np.where(plus_small, -p.b ** 2 / np.where(plus_small, x_minus, 1.0), x_plus)
    x_minus = np.where(plus_small, x_minus, -p.b ** 2 / np.where(plus_small, 1.0, x_plus))
    lower = p.b * np.exp(1j * ks)

    eigenvalues = np.stack([(p.a * cos_k + rho) / 2.0, (p.a * cos_k - rho) / 2.0], axis=-1)
    normalizers = np.stack(
        [
            1.0 / np.sqrt(np.abs(x_plus) ** 2 + p.abs_b ** 2),
            1.0 / np.sqrt(np.abs(x_minus) ** 2 + p.abs_b ** 2),
        ],
        axis=-1,
    )
    vectors = np.empty(ks.shape + (2, 2), dtype=complex)
    vectors[..., 0, 0] = normalizers[..., 0] * x_plus
    vectors[..., 0, 1] = normalizers[..., 0] * lower
    vectors[..., 1, 0] = normalizers[..., 1] * x_minus
    vectors[..., 1, 1] = normalizers[..., 1] * lower
    return eigenvalues, vectors, normalizers


def momentum_operator(p: PhaseParams, k: float) -> MomentumOperator:
    _check_momentum(k)
    return MomentumOperator(k=float(k), entries=_momentum_matrices(p, np.array(k)))


def spectrum(p: PhaseParams, k: float) -> MomentumSpectrum:
    _check_momentum(k)
    eigenvalues, vectors, normalizers = eigensystem(p, np.array(float(k)))
    reduced = bool(abs(eigenvalues[0] - eigenvalues[1]) <= NEAR_DEGENERATE_GAP)
    if reduced:
        log.warning(
            "near-degenerate eigenvalues at k=%g (gap %.3g); orthonormality tolerance reduced",
            k, abs(eigenvalues[0] - eigenvalues[1]),
        )
    return MomentumSpectrum(
        k=float(k),
        eigenvalues=eigenvalues,
        vectors=vectors,
        normalizers=normalizers,
        reduced_tolerance=reduced,
    )


def eigen_residuals(p: PhaseParams, spec: MomentumSpectrum) -> Tuple[float, float]:
    """||M_k v_j - lambda_j v_j|| for j = 1, 2."""
    m = _momentum_matrices(p, np.array(spec.k))
    return tuple(
        float(np.linalg.norm(m @ spec.vectors[j] - spec.eigenvalues[j] * spec.vectors[j]))
        for j in range(2)
    )


def initial_overlap(p: PhaseParams, k: float, alpha0: Sequence[complex]) -> Tuple[complex, complex]:
    """(xi_1, xi_2) with xi_j = <lambda_j(k)|psi~_0(k)>."""
    spec = spectrum(p, k)
    xi = spec.vectors.conj() @ np.asarray(alpha0, dtype=complex)
    return complex(xi[0]), complex(xi[1])


def group_velocity(p: PhaseParams, k, j: int):
    """d arg(lambda_j)/dk, from lambda_j'(k) / lambda_j(k)."""
    sign = 1.0 if j == 1 else -1.0
    sin_k = np.sin(k)
    cos_k = np.cos(k)
    root = np.sqrt(p.abs_b ** 2 + p.abs_a ** 2 * sin_k * sin_k)
    d_rho = -1j * p.phase * p.abs_a ** 2 * sin_k * cos_k / root
    lam = (p.a * cos_k + sign * branch_root(p, k)) / 2.0
    d_lam = (-p.a * sin_k + sign * d_rho) / 2.0
    return np.imag(d_lam / lam)


def phase_curvature(p: PhaseParams, k, j: int):
    """Second derivative of arg(lambda_j) in k: (-1)^j |a||b|^2 cos k / (|b|^2 + |a|^2 sin^2 k)^{3/2}.

    Accepts complex k (analytic continuation).
    """
    sign = -1.0 if j == 1 else 1.0
    sin_k = np.sin(k)
    return sign * p.abs_a * p.abs_b ** 2 * np.cos(k) / (p.abs_b ** 2 + p.abs_a ** 2 * sin_k * sin_k) ** 1.5


def unimodular_power(values: np.ndarray, t: int, axis: int = 0) -> np.ndarray:
    """values**t as exp(t log values), with the phase unwrapped along ``axis``."""
    values = np.asarray(values)
    angle = np.unwrap(np.angle(values), axis=axis)
    return np.exp(t * (np.log(np.abs(values)) + 1j * angle))


def _uses_direct_powers(p: PhaseParams) -> bool:
    return p.abs_b <= RECONSTRUCTION_GAP


def momentum_power(p: PhaseParams, k: float, t: int) -> np.ndarray:
    """M_k^t as sum_j lambda_j^t |lambda_j><lambda_j|.

    Near the degenerate coin (|b| <= RECONSTRUCTION_GAP) the 2x2 matrix is
    raised to the power directly.
    """
    if _uses_direct_powers(p):
        p.require_nondegenerate("momentum_power")
        return np.linalg.matrix_power(momentum_operator(p, k).entries, t)
    spec = spectrum(p, k)
    out = np.zeros((2, 2), dtype=complex)
    for j in range(2):
        v = spec.vectors[j]
        out += spec.eigenvalues[j] ** t * np.outer(v, v.conj())
    return out


def quadrature_nodes(t: int, nodes: Optional[int] = None) -> np.ndarray:
    """Uniform grid on [-pi, pi) for the step-t inverse transform."""
    required = 2 * t + 4
    if nodes is None:
        nodes = max(4 * t + 8, 256)
    if nodes < required:
        raise QuadratureError(nodes, required)
    return -math.pi + 2.0 * math.pi * np.arange(nodes) / nodes


def fourier_state(p: PhaseParams, alpha0: Sequence[complex], t: int, ks: np.ndarray) -> np.ndarray:
    """psi~_t(k) = sum_j lambda_j^t xi_j |lambda_j>, shape (len(ks), 2)."""
    p.require_nondegenerate("reconstruct_amplitudes")
    alpha0 = np.asarray(alpha0, dtype=complex)
    if _uses_direct_powers(p):
        log.debug("|b|=%.3g below %g: forming M_k^t by repeated squaring", p.abs_b, RECONSTRUCTION_GAP)
        powers = np.linalg.matrix_power(_momentum_matrices(p, ks), t)
        return np.einsum("kde,e->kd", powers, alpha0)
    eigenvalues, vectors, _ = eigensystem(p, ks)
    xi = np.einsum("kjd,d->kj", vectors.conj(), alpha0)
    weights = unimodular_power(eigenvalues, t, axis=0) * xi
    return np.einsum("kj,kjd->kd", weights, vectors)


def _invert(ks: np.ndarray, psi_k: np.ndarray, positions: np.ndarray) -> np.ndarray:
    out = np.empty((len(positions), 2), dtype=complex)
    for start in range(0, len(positions), ROW_BLOCK):
        block = positions[start:start + ROW_BLOCK]
        kernel = np.exp(-1j * np.outer(block, ks))
        # sum over the contiguous last axis so numpy reduces pairwise
        out[start:start + ROW_BLOCK, 0] = np.sum(kernel * psi_k[:, 0], axis=-1)
        out[start:start + ROW_BLOCK, 1] = np.sum(kernel * psi_k[:, 1], axis=-1)
    return out / len(ks)


def _check_time(t: int) -> None:
    if t < 0:
        raise DomainError(f"t must be nonnegative, got {t}")


def reconstruct_amplitudes(
    p: PhaseParams, alpha0: Sequence[complex], t: int, n: int, nodes: Optional[int] = None
) -> Tuple[complex, complex]:
    """alpha_t(n) from the inverse Fourier integrals."""
    _check_time(t)
    if abs(n) > t:
        raise DomainError(f"position n={n} lies outside [-t, t] for t={t}")
    ks = quadrature_nodes(t, nodes)
    psi_k = fourier_state(p, alpha0, t, ks)
    left, right = _invert(ks, psi_k, np.array([n]))[0]
    return complex(left), complex(right)


def reconstruct_state(
    p: PhaseParams, alpha0: Sequence[complex], t: int, nodes: Optional[int] = None
) -> WalkState:
    """All positions in [-t, t] from one momentum grid.

    Parity-forbidden slots carry quadrature roundoff (~1e-16), not exact zeros.
    """
    _check_time(t)
    ks = quadrature_nodes(t, nodes)
    psi_k = fourier_state(p, alpha0, t, ks)
    amplitudes = _invert(ks, psi_k, np.arange(-t, t + 1))
    log.debug("reconstructed t=%d from %d momentum nodes", t, len(ks))
    return WalkState(t=t, left=amplitudes[:, 0].copy(), right=amplitudes[:, 1].copy())


@dataclass(frozen=True)
class SpectrumGrid:
    ks: np.ndarray
    eigenvalues: np.ndarray
    vectors: np.ndarray
    normalizers: np.ndarray
    velocities: np.ndarray

    @property
    def max_jump(self) -> float:
        """Largest eigenvalue change between neighbouring grid nodes (continuity check)."""
        return float(np.max(np.abs(np.diff(self.eigenvalues, axis=0))))


def spectrum_grid(p: PhaseParams, nodes: int) -> SpectrumGrid:
    """Eigen data on ``nodes`` points spanning [-pi, pi] inclusive."""
    if nodes < 2:
        raise DomainError(f"spectrum grid needs at least 2 nodes, got {nodes}")
    ks = np.linspace(-math.pi, math.pi, nodes)
    eigenvalues, vectors, normalizers = eigensystem(p, ks)
    velocities = np.stack([group_velocity(p, ks, 1), group_velocity(p, ks, 2)], axis=-1)
    return SpectrumGrid(ks, eigenvalues, vectors, normalizers, velocities)
