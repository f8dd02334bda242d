import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trischmidt.oscillator import (
    DegenerateFrequencyError,
    PhysicalScales,
    as_excitation,
    coupling_matrix,
    coupling_ratios,
    coupling_ratios_degenerate,
    energy,
    frequency_geometry,
    mass_scalings,
    mixing_matrix,
    normal_coordinates,
)
from trischmidt.specfun import DegreeLimitError

angle_triples = st.tuples(
    st.floats(-math.pi, math.pi),
    st.floats(-math.pi, math.pi),
    st.floats(-math.pi, math.pi),
)


class TestMixingMatrix:
    def test_identity_at_zero_angles(self):
        assert np.allclose(mixing_matrix((0, 0, 0)).matrix, np.eye(3), atol=1e-15)

    def test_single_axis_rotation(self):
        m = mixing_matrix((math.pi / 4, 0, 0)).matrix
        r = math.sqrt(2) / 2
        expected = np.array([[r, 0, -r], [0, 1, 0], [r, 0, r]])
        assert np.allclose(m, expected, atol=1e-15)

    def test_generic_entries(self):
        m = mixing_matrix((math.pi / 6, math.pi / 6, math.pi / 6)).matrix
        assert m[0, 0] == pytest.approx(0.75)  # cos(pi/6) cos(pi/6)
        assert m[1, 0] == pytest.approx(0.5)  # sin(pi/6)
        assert np.allclose(m @ m.T, np.eye(3), atol=1e-12)
        assert np.linalg.det(m) == pytest.approx(1.0, abs=1e-12)

    @given(angles=angle_triples)
    @settings(max_examples=300, deadline=None)
    def test_orthogonality_everywhere(self, angles):
        m = mixing_matrix(angles).matrix
        assert np.abs(m @ m.T - np.eye(3)).max() < 1e-12
        assert abs(np.linalg.det(m) - 1.0) < 1e-12
        assert np.abs((m**2).sum(axis=1) - 1.0).max() < 1e-13


class TestNormalCoordinates:
    def test_identity(self):
        q = normal_coordinates((0, 0, 0), (1, 1, 1), (1.0, 2.0, 3.0))
        assert np.allclose(q, [1.0, 2.0, 3.0], atol=1e-15)

    def test_mass_scaling_only(self):
        q = normal_coordinates((0, 0, 0), (4.0, 1.0, 0.25), (1.0, 1.0, 1.0))
        _, mu = mass_scalings((4.0, 1.0, 0.25))
        assert np.allclose(q, mu, atol=1e-15)
        assert mu[0] * mu[1] * mu[2] == pytest.approx(1.0, abs=1e-12)

    def test_quarter_turn(self):
        q = normal_coordinates((math.pi / 4, 0, 0), (1, 1, 1), (1.0, 0.0, 1.0))
        assert np.allclose(q, [0.0, 0.0, math.sqrt(2)], atol=1e-15)

    def test_rejects_nonpositive_mass(self):
        with pytest.raises(ValueError):
            normal_coordinates((0, 0, 0), (1.0, 0.0, 1.0), (1.0, 1.0, 1.0))


class TestCouplingMatrix:
    def test_degenerate_spectrum_is_rotation_invariant(self):
        k = coupling_matrix((4.0, 4.0, 4.0), (0.3, -0.8, 1.2))
        assert np.allclose(k, np.diag([4.0, 4.0, 4.0]), atol=1e-12)

    def test_identity_angles(self):
        k = coupling_matrix((1.0, 2.0, 3.0), (0, 0, 0))
        assert np.allclose(k, np.diag([1.0, 2.0, 3.0]), atol=1e-15)

    def test_eigenvalues_recover_spectrum(self):
        k = coupling_matrix((1.0, 2.0, 3.0), (math.pi / 8, math.pi / 8, math.pi / 8))
        assert np.allclose(np.sort(np.linalg.eigvalsh(k)), [1.0, 2.0, 3.0], atol=1e-10)

    def test_congruence_orientation(self):
        # K = M^T diag(S^2) M (and not M diag(S^2) M^T)
        sigma_sq = (0.7, 2.2, 3.9)
        angles = (0.5, -0.4, 0.9)
        m = mixing_matrix(angles).matrix
        k = coupling_matrix(sigma_sq, angles)
        assert np.abs(m.T @ np.diag(sigma_sq) @ m - k).max() < 1e-12
        assert np.abs(m @ k @ m.T - np.diag(sigma_sq)).max() < 1e-12


class TestCouplingRatios:
    def test_vanish_at_zero_angles(self):
        assert coupling_ratios((1.0, 2.0, 3.0), (0, 0, 0)) == pytest.approx((0, 0, 0))

    def test_single_rotation_gives_tangent(self):
        r12, r13, r23 = coupling_ratios((1.0, 2.0, 3.0), (math.pi / 8, 0, 0))
        assert r13 == pytest.approx(-math.tan(math.pi / 4), abs=1e-12)
        assert r12 == pytest.approx(0.0, abs=1e-14)
        assert r23 == pytest.approx(0.0, abs=1e-14)

    def test_matches_entry_quotients(self):
        sigma_sq = (1.0, 2.0, 3.0)
        angles = (math.pi / 8, math.pi / 8, math.pi / 8)
        k = coupling_matrix(sigma_sq, angles)
        w = np.diag(k)
        quotients = (
            2 * k[0, 1] / (w[0] - w[1]),
            2 * k[0, 2] / (w[0] - w[2]),
            2 * k[1, 2] / (w[1] - w[2]),
        )
        assert coupling_ratios(sigma_sq, angles) == pytest.approx(quotients, rel=1e-10)

    def test_degenerate_frequencies_rejected(self):
        with pytest.raises(DegenerateFrequencyError):
            coupling_ratios((2.0, 2.0, 2.0), (0.4, 0.1, -0.2))


class TestDegenerateRatios:
    def test_zero_angles(self):
        assert coupling_ratios_degenerate((0, 0, 0)) == pytest.approx((0, 0, 0))

    def test_single_rotation(self):
        _, r13, _ = coupling_ratios_degenerate((math.pi / 8, 0, 0))
        assert r13 == pytest.approx(-1.0, abs=1e-14)

    def test_is_equal_spacing_limit(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            angles = rng.uniform(-math.pi / 5, math.pi / 5, 3)
            limit = coupling_ratios_degenerate(angles)
            eps = 1e-6
            finite = coupling_ratios((1 + 2 * eps, 1 + eps, 1.0), angles)
            assert max(abs(a - b) for a, b in zip(finite, limit)) < 1e-4

    def test_convergence_bounds_at_both_epsilons(self):
        # the ratios depend on the squared frequencies only through their
        # differences, so an exactly equally spaced triple matches the limit
        # up to rounding noise; the first-order bound err <= O(eps) is what
        # both epsilons are held to
        angles = (0.31, -0.18, 0.42)
        limit = coupling_ratios_degenerate(angles)

        def err(eps):
            finite = coupling_ratios((1 + 2 * eps, 1 + eps, 1.0), angles)
            return max(abs(a - b) for a, b in zip(finite, limit))

        assert err(1e-4) < 1e-2
        assert err(1e-6) < 1e-4

    def test_denominator_vanishing_reported(self):
        # theta = pi/4 with the other angles zero kills the 12 and 13
        # denominators; the error names the first offending expression
        with pytest.raises(DegenerateFrequencyError, match="ratio 12 denominator"):
            coupling_ratios_degenerate((math.pi / 4, 0.0, 0.0))


class TestFrequencyGeometry:
    def test_degenerate(self):
        varpi, ratios = frequency_geometry((1.0, 1.0, 1.0))
        assert varpi == 1.0
        assert ratios == pytest.approx((1.0, 1.0, 1.0))

    def test_powers_of_two(self):
        varpi, ratios = frequency_geometry((1.0, 4.0, 16.0))
        assert varpi == pytest.approx(2.0, abs=1e-14)
        assert ratios == pytest.approx((0.5, 1.0, 2.0), abs=1e-14)

    @given(
        s=st.tuples(
            st.floats(0.1, 30.0), st.floats(0.1, 30.0), st.floats(0.1, 30.0)
        )
    )
    @settings(max_examples=100, deadline=None)
    def test_ratio_product_is_one(self, s):
        _, ratios = frequency_geometry(s)
        assert ratios[0] * ratios[1] * ratios[2] == pytest.approx(1.0, abs=1e-12)


class TestEnergy:
    def test_ground_state_degenerate(self):
        assert energy((0, 0, 0), (1.0, 1.0, 1.0)) == pytest.approx(1.5, abs=1e-14)

    def test_three_quanta_degenerate(self):
        assert energy((1, 1, 1), (1.0, 1.0, 1.0)) == pytest.approx(4.5, abs=1e-14)

    def test_general_spectrum(self):
        assert energy((1, 0, 0), (1.0, 4.0, 16.0)) == pytest.approx(4.5, abs=1e-12)

    def test_hbar_scaling(self):
        scales = PhysicalScales(hbar=2.0)
        assert energy((0, 0, 0), (1.0, 1.0, 1.0), scales) == pytest.approx(3.0)

    def test_nonpositive_scales_rejected(self):
        with pytest.raises(ValueError):
            energy((0, 0, 0), (1.0, 1.0, 1.0), PhysicalScales(hbar=0.0))

    def test_permutation_sensitivity(self):
        nondegenerate = (1.0, 4.0, 16.0)
        assert energy((1, 0, 0), nondegenerate) != pytest.approx(
            energy((0, 1, 0), nondegenerate)
        )
        degenerate = (2.0, 2.0, 2.0)
        assert energy((1, 2, 3), degenerate) == pytest.approx(
            energy((3, 2, 1), degenerate), abs=1e-12
        )


class TestExcitationValidation:
    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            as_excitation((-1, 0, 0))

    def test_non_integer_rejected(self):
        with pytest.raises(ValueError):
            as_excitation((1.7, 0, 0))
        assert as_excitation((2.0, 0, 1)).n1 == 2  # integral floats are fine

    def test_wrong_arity_rejected(self):
        with pytest.raises(ValueError):
            as_excitation((1, 2))

    def test_total_property(self):
        assert as_excitation((2, 1, 0)).total == 3

    def test_degree_bound(self):
        assert as_excitation((13, 13, 14)).total == 40
        with pytest.raises(DegreeLimitError):
            as_excitation((20, 20, 20))
