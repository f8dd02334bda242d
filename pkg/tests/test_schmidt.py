import json
import math

import numpy as np
import pytest

from trischmidt.docio import render_json
from trischmidt.oscillator import mixing_matrix
from trischmidt.schmidt import (
    coefficients_k16,
    coefficients_sum,
    selection_rule,
    to_document,
    wavefunction_eval,
)
from trischmidt.specfun import DegreeLimitError, hermite_function


class TestSelectionRule:
    def test_matching_total(self):
        assert selection_rule((0, 0, 1), 0, 0, 1)

    def test_mismatched_total(self):
        assert not selection_rule((0, 0, 1), 1, 1, 0)

    def test_redistributed_quanta(self):
        assert selection_rule((2, 1, 0), 0, 3, 0)


class TestCoefficientsSum:
    def test_ground_state(self):
        sm = coefficients_sum((0, 0, 0), mixing_matrix((0.9, -1.3, 0.4)))
        assert sm.amplitudes.shape == (1, 1)
        assert sm.entry(0, 0) == pytest.approx(1.0, abs=1e-15)

    def test_unit_excitation_is_bottom_row(self):
        mix = mixing_matrix((0.5, 0.4, 0.3))
        sm = coefficients_sum((0, 0, 1), mix)
        c1, c2, c3 = mix.c
        assert sm.entry(1, 0) == pytest.approx(c1, abs=1e-15)
        assert sm.entry(0, 1) == pytest.approx(c2, abs=1e-15)
        assert sm.entry(0, 0) == pytest.approx(c3, abs=1e-15)

    def test_identity_mixing_gives_product_state(self):
        sm = coefficients_sum((1, 0, 0), mixing_matrix((0, 0, 0)))
        expected = np.zeros((2, 2))
        expected[1, 0] = 1.0
        assert np.allclose(sm.amplitudes, expected, atol=1e-15)

    @pytest.mark.parametrize("exc", [(1, 1, 1), (2, 1, 0), (0, 0, 3), (2, 0, 2)])
    def test_completeness(self, exc):
        rng = np.random.default_rng(17)
        for _ in range(5):
            mix = mixing_matrix(rng.uniform(-math.pi, math.pi, 3))
            sm = coefficients_sum(exc, mix)
            assert float((sm.amplitudes**2).sum()) == pytest.approx(1.0, abs=1e-10)

    def test_degree_bound(self):
        with pytest.raises(DegreeLimitError):
            coefficients_sum((20, 20, 20), mixing_matrix((0, 0, 0)))


class TestRouteEquivalence:
    def test_two_quanta_generic_angles(self):
        mix = mixing_matrix((math.pi / 6, math.pi / 5, math.pi / 7))
        direct = coefficients_sum((0, 0, 2), mix)
        closed = coefficients_k16((0, 0, 2), mix)
        assert np.abs(direct.amplitudes - closed.amplitudes).max() < 1e-10

    def test_three_axes_excited(self):
        mix = mixing_matrix((0.4, 0.3, 0.2))
        direct = coefficients_sum((1, 1, 1), mix)
        closed = coefficients_k16((1, 1, 1), mix)
        assert np.abs(direct.amplitudes - closed.amplitudes).max() < 1e-10
        # entries with k + l > n3 = 1 must have come from the sum route
        assert closed.fallback_mask[2, 0]
        assert not closed.fallback_mask[0, 0]

    def test_identity_angles_full_fallback(self):
        # all four ratio denominators vanish at the identity mixing
        closed = coefficients_k16((0, 0, 1), mixing_matrix((0, 0, 0)))
        assert closed.fallback_count == 3
        assert closed.entry(0, 0) == pytest.approx(1.0, abs=1e-15)

    def test_sum_route_has_no_mask(self):
        sm = coefficients_sum((0, 0, 1), mixing_matrix((0.1, 0.2, 0.3)))
        assert sm.fallback_mask is None
        assert sm.fallback_count == 0


class TestWavefunction:
    def test_gaussian_peak(self):
        mix = mixing_matrix((1.1, -0.7, 0.2))
        value = wavefunction_eval((0, 0, 0), mix, (0.0, 0.0, 0.0))
        assert value == pytest.approx(math.pi**-0.75, abs=1e-12)

    def test_ground_state_is_rotation_invariant(self):
        point = (0.7, -0.4, 1.1)
        norm_sq = sum(v * v for v in point)
        expected = math.pi**-0.75 * math.exp(-norm_sq / 2)
        for angles in ((0, 0, 0), (0.5, 0.3, -0.8), (1.2, -1.0, 0.1)):
            value = wavefunction_eval((0, 0, 0), mixing_matrix(angles), point)
            assert value == pytest.approx(expected, abs=1e-12)

    def test_single_quantum_identity(self):
        # H_1(1) = 2 against the (2^1 1!)^(-1/2) normalization
        value = wavefunction_eval((1, 0, 0), mixing_matrix((0, 0, 0)), (1.0, 0.0, 0.0))
        expected = math.pi**-0.75 * 2.0 / math.sqrt(2.0) * math.exp(-0.5)
        assert value == pytest.approx(expected, abs=1e-12)
        assert value == pytest.approx(0.3635007844, abs=1e-9)

    def test_expansion_reconstructs_wavefunction(self):
        mix = mixing_matrix((0.4, -0.3, 0.6))
        rng = np.random.default_rng(23)
        for exc in ((0, 0, 2), (1, 1, 0), (1, 0, 1)):
            sm = coefficients_sum(exc, mix)
            for point in rng.uniform(-2, 2, (5, 3)):
                series = sum(
                    v
                    * hermite_function(k, point[0])
                    * hermite_function(l, point[1])
                    * hermite_function(m, point[2])
                    for k, l, m, v in sm.items()
                )
                assert series == pytest.approx(
                    wavefunction_eval(exc, mix, point), abs=1e-8
                )


class TestSerialization:
    def test_document_shape(self):
        mix = mixing_matrix((0.5, 0.4, 0.3))
        doc = to_document(coefficients_sum((0, 0, 1), mix))
        assert doc["n"] == [0, 0, 1]
        assert doc["angles"] == [0.5, 0.4, 0.3]
        assert [e["m"] for e in doc["entries"]] == [1, 0, 0]
        by_kl = {(e["k"], e["l"]): e["value"] for e in doc["entries"]}
        assert by_kl[(1, 0)] == pytest.approx(mix.c[0])

    def test_json_round_trip(self):
        mix = mixing_matrix((0.5, 0.4, 0.3))
        doc = to_document(coefficients_sum((1, 0, 1), mix))
        parsed = json.loads(render_json(doc))
        assert parsed["n"] == [1, 0, 1]
        original = {(e["k"], e["l"]): e["value"] for e in doc["entries"]}
        recovered = {(e["k"], e["l"]): e["value"] for e in parsed["entries"]}
        # 17 significant digits round-trip doubles exactly
        assert recovered == original
