"""Tests for the momentum-space route"""

import cmath
import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from phasewalk.errors import DegenerateCoinError, DomainError, QuadratureError
from phasewalk.exactsim import evolve, initial_state, step_matrices
from phasewalk.params import coin_matrix, make_params
from phasewalk.spectral import (
    branch_root,
    eigen_residuals,
    group_velocity,
    initial_overlap,
    momentum_operator,
    momentum_power,
    phase_curvature,
    quadrature_nodes,
    reconstruct_amplitudes,
    reconstruct_state,
    spectrum,
    spectrum_grid,
)
from phasewalk.weaklimit import velocity_map

HALF = 1 / math.sqrt(2)

PARAMETER_SETS = [(0.5, 0), (0.75, 0.5), (0.3, 0.9), (0.1, 0.2), (1.0, 0.35)]

momenta = st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False)
# keep |tau1 - tau2| away from the degenerate regime
phase_pairs = st.tuples(
    st.floats(min_value=0.0, max_value=1.0), st.floats(min_value=0.0, max_value=1.0)
).filter(lambda pair: abs(pair[0] - pair[1]) > 1e-3)


class TestMomentumOperator(unittest.TestCase):

    def test_zero_momentum_is_coin(self):
        p = make_params(0.3, 0.9)
        np.testing.assert_allclose(momentum_operator(p, 0.0).entries, coin_matrix(p).entries, atol=1e-15)

    def test_identity_coin_is_diagonal(self):
        p = make_params(0, 0)
        k = 0.7
        expected = np.diag([cmath.exp(-1j * k), cmath.exp(1j * k)])
        np.testing.assert_allclose(momentum_operator(p, k).entries, expected, atol=1e-15)

    def test_equals_shifted_transfer_matrices(self):
        p = make_params(0.75, 0.5)
        m_plus, m_minus = step_matrices(p)
        for k in np.linspace(-math.pi, math.pi, 9):
            expected = cmath.exp(1j * k) * m_plus + cmath.exp(-1j * k) * m_minus
            np.testing.assert_allclose(momentum_operator(p, k).entries, expected, atol=1e-15)

    def test_out_of_range_momentum(self):
        with self.assertRaises(DomainError):
            momentum_operator(make_params(0.5, 0), 4.0)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(0.0, 1.0), st.floats(0.0, 1.0), momenta)
    def test_unitary(self, tau1, tau2, k):
        self.assertTrue(momentum_operator(make_params(tau1, tau2), k).is_unitary(1e-12))


class TestSpectrum(unittest.TestCase):

    def test_zero_momentum_eigenvalues_are_phases(self):
        p = make_params(0.5, 0)
        spec = spectrum(p, 0.0)
        found = sorted(spec.eigenvalues, key=lambda z: cmath.phase(z))
        expected = sorted([cmath.exp(0.5j * math.pi), 1.0], key=lambda z: cmath.phase(z))
        np.testing.assert_allclose(found, expected, atol=1e-14)

    def test_quarter_turn_half_zero(self):
        p = make_params(0.5, 0)
        spec = spectrum(p, math.pi / 2)
        root = cmath.sqrt(p.b ** 2 - p.a ** 2) / 2
        self.assertAlmostEqual(abs(spec.eigenvalues[0] + spec.eigenvalues[1]), 0.0, places=14)
        self.assertAlmostEqual(abs(abs(spec.eigenvalues[0]) - abs(root)), 0.0, places=14)
        np.testing.assert_allclose(np.abs(spec.eigenvalues), 1.0, atol=1e-12)

    def test_degenerate_coin_rejected(self):
        with self.assertRaises(DegenerateCoinError):
            spectrum(make_params(0.4, 0.4), 0.3)

    def test_branch_root_squares_to_radicand(self):
        for tau1, tau2 in PARAMETER_SETS:
            p = make_params(tau1, tau2)
            for k in np.linspace(-math.pi, math.pi, 17):
                rho = branch_root(p, k)
                self.assertAlmostEqual(abs(rho ** 2 - (p.b ** 2 - p.a ** 2 * math.sin(k) ** 2)), 0.0, places=13)

    @settings(max_examples=150, deadline=None)
    @given(phase_pairs, momenta)
    def test_spectrum_invariants(self, taus, k):
        p = make_params(*taus)
        spec = spectrum(p, k)
        np.testing.assert_allclose(np.abs(spec.eigenvalues), 1.0, atol=1e-12)
        for residual in eigen_residuals(p, spec):
            self.assertLess(residual, 1e-10)
        if spec.gap > 1e-8:
            gram = spec.vectors.conj() @ spec.vectors.T
            np.testing.assert_allclose(gram, np.eye(2), atol=1e-10)
        self.assertTrue(np.all(spec.normalizers > 0))

    def test_eigenvalue_curves_continuous(self):
        p = make_params(0.75, 0.5)
        jumps = [spectrum_grid(p, nodes).max_jump for nodes in (65, 257, 1025)]
        self.assertLess(jumps[1], jumps[0])
        self.assertLess(jumps[2], jumps[1])
        self.assertLess(jumps[2], 0.01)

    def test_spectral_identity(self):
        rng = np.random.default_rng(7)
        for tau1, tau2 in PARAMETER_SETS[:3]:
            p = make_params(tau1, tau2)
            for k in rng.uniform(-math.pi, math.pi, 100):
                m = momentum_operator(p, k).entries
                power = np.eye(2, dtype=complex)
                for t in range(1, 51):
                    power = m @ power
                    if t in (1, 7, 50):
                        np.testing.assert_allclose(momentum_power(p, k, t), power, atol=1e-10)


class TestInitialOverlap(unittest.TestCase):

    def test_eigenvector_overlap(self):
        p = make_params(0.3, 0.9)
        k = 1.1
        v1 = spectrum(p, k).vectors[0]
        xi1, xi2 = initial_overlap(p, k, v1)
        self.assertAlmostEqual(abs(xi1 - 1), 0.0, places=10)
        self.assertAlmostEqual(abs(xi2), 0.0, places=10)

    def test_left_mover_at_zero(self):
        p = make_params(0.5, 0)
        spec = spectrum(p, 0.0)
        xi = initial_overlap(p, 0.0, (1, 0))
        for j in range(2):
            self.assertAlmostEqual(abs(xi[j] - spec.vectors[j][0].conjugate()), 0.0, places=14)

    @settings(max_examples=50, deadline=None)
    @given(phase_pairs, momenta, st.floats(0.0, 2 * math.pi))
    def test_completeness(self, taus, k, angle):
        alpha0 = (math.cos(angle / 2), cmath.exp(1j * angle) * math.sin(angle / 2))
        xi1, xi2 = initial_overlap(make_params(*taus), k, alpha0)
        self.assertAlmostEqual(abs(xi1) ** 2 + abs(xi2) ** 2, 1.0, delta=1e-12)


class TestGroupVelocity(unittest.TestCase):

    def test_matches_velocity_map(self):
        ks = np.linspace(-math.pi, math.pi, 101)
        for tau1, tau2 in PARAMETER_SETS:
            p = make_params(tau1, tau2)
            for j in (1, 2):
                np.testing.assert_allclose(group_velocity(p, ks, j), velocity_map(p, ks, j), atol=1e-12)

    def test_matches_eigenphase_derivative(self):
        p = make_params(0.75, 0.5)
        ks = np.linspace(-3.0, 3.0, 61)
        step = 1e-5
        for j in (1, 2):
            plus = np.array([spectrum(p, k + step).eigenvalues[j - 1] for k in ks])
            minus = np.array([spectrum(p, k - step).eigenvalues[j - 1] for k in ks])
            numeric = np.angle(plus / minus) / (2 * step)
            np.testing.assert_allclose(group_velocity(p, ks, j), numeric, atol=1e-8)

    def test_curvature_is_velocity_derivative(self):
        p = make_params(0.3, 0.9)
        ks = np.linspace(-3.0, 3.0, 61)
        step = 1e-5
        for j in (1, 2):
            numeric = (group_velocity(p, ks + step, j) - group_velocity(p, ks - step, j)) / (2 * step)
            np.testing.assert_allclose(phase_curvature(p, ks, j), numeric, atol=1e-7)


class TestReconstruction(unittest.TestCase):

    def test_one_step_by_hand(self):
        left, right = reconstruct_amplitudes(make_params(0.5, 0), (1, 0), 1, -1)
        self.assertAlmostEqual(abs(left - (1 + 1j) / 2), 0.0, places=12)
        self.assertAlmostEqual(abs(right), 0.0, places=12)

    def test_wrong_parity_vanishes(self):
        left, right = reconstruct_amplitudes(make_params(0.75, 0.5), (HALF, HALF), 10, 3)
        self.assertLess(abs(left), 1e-12)
        self.assertLess(abs(right), 1e-12)

    def test_matches_exact_at_hundred_steps(self):
        p = make_params(0.75, 0.5)
        alpha0 = (HALF, 1j * HALF)
        exact = evolve(initial_state(*alpha0), p, 100)
        rebuilt = reconstruct_state(p, alpha0, 100)
        np.testing.assert_allclose(rebuilt.left, exact.left, atol=1e-10)
        np.testing.assert_allclose(rebuilt.right, exact.right, atol=1e-10)

    def test_single_position_matches_state(self):
        p = make_params(0.3, 0.9)
        alpha0 = (0.6, 0.8j)
        exact = evolve(initial_state(*alpha0), p, 50)
        for n in (-50, -12, 0, 30, 50):
            np.testing.assert_allclose(reconstruct_amplitudes(p, alpha0, 50, n), exact.amplitude(n), atol=1e-10)

    def test_minimum_node_count(self):
        p = make_params(0.5, 0)
        with self.assertRaises(QuadratureError) as ctx:
            reconstruct_state(p, (1, 0), 50, nodes=100)
        self.assertEqual(ctx.exception.required, 104)
        rebuilt = reconstruct_state(p, (1, 0), 50, nodes=104)
        exact = evolve(initial_state(1, 0), p, 50)
        np.testing.assert_allclose(rebuilt.left, exact.left, atol=1e-10)

    def test_default_node_count(self):
        self.assertEqual(len(quadrature_nodes(10)), 256)
        self.assertEqual(len(quadrature_nodes(100)), 408)

    def test_near_degenerate_coin_matches_exact(self):
        alpha0 = (HALF, 1j * HALF)
        for gap in (1e-4, 1e-9, 1e-11):
            p = make_params(0.3, 0.3 + gap)
            exact = evolve(initial_state(*alpha0), p, 50)
            rebuilt = reconstruct_state(p, alpha0, 50)
            worst = max(np.max(np.abs(rebuilt.left - exact.left)), np.max(np.abs(rebuilt.right - exact.right)))
            self.assertLessEqual(worst, 1e-10, msg=f"gap={gap}")

    def test_near_degenerate_power_matches_product(self):
        p = make_params(0.6, 0.6 + 1e-9)
        m = momentum_operator(p, 0.4).entries
        power = np.eye(2, dtype=complex)
        for _ in range(30):
            power = m @ power
        np.testing.assert_allclose(momentum_power(p, 0.4, 30), power, atol=1e-12)

    def test_degenerate_coin_not_reconstructed(self):
        with self.assertRaises(DegenerateCoinError):
            reconstruct_state(make_params(0.25, 0.25), (1, 0), 10)

    def test_position_outside_light_cone(self):
        with self.assertRaises(DomainError):
            reconstruct_amplitudes(make_params(0.5, 0), (1, 0), 5, 6)


if __name__ == "__main__":
    unittest.main()
