"""Closed forms, classification, the rating quartic, and verification sweeps."""
import numpy as np
import pytest

from wteleport import (
    BellOutcome,
    BobOutcome,
    InvalidInput,
    Region,
    classify_region,
    efficiency_ratio,
    input_concurrence,
    predicted_concurrence_phi,
    predicted_concurrence_psi,
    predicted_concurrence_werner,
    quartic,
    quartic_roots,
    state_independent_alpha_sq,
    sweep,
)

N_GRID = (0.1, 0.25, 0.5, 1.0, 2.0, 4.0, 10.0)

# frozen from an independent high-precision root search
ROOT_LOW = 0.016694849973322434
ROOT_HIGH = 2.5871608510577097


class TestPredictedPhi:
    def test_identity_channel(self):
        for alpha_sq in np.linspace(0.01, 0.99, 25):
            alpha = np.sqrt(alpha_sq)
            assert predicted_concurrence_phi(alpha, 1.0) == pytest.approx(
                2.0 * alpha * np.sqrt(1.0 - alpha_sq), abs=1e-15
            )

    def test_product_endpoints(self):
        assert predicted_concurrence_phi(0.0, 2.0) == 0.0
        assert predicted_concurrence_phi(1.0, 2.0) == 0.0

    def test_preserving_point_at_n4(self):
        assert predicted_concurrence_phi(np.sqrt(1.0 / 3.0), 4.0) == pytest.approx(
            2.0 * np.sqrt(2.0) / 3.0, abs=1e-14
        )

    def test_factors_into_input_concurrence_times_ratio(self):
        for n in N_GRID:
            for alpha_sq in (0.1, 0.5, 0.9):
                alpha = np.sqrt(alpha_sq)
                assert predicted_concurrence_phi(alpha, n) == pytest.approx(
                    input_concurrence(alpha) * efficiency_ratio(alpha_sq, n), abs=1e-13
                )

    def test_out_of_range(self):
        with pytest.raises(InvalidInput):
            predicted_concurrence_phi(1.1, 1.0)
        with pytest.raises(InvalidInput):
            predicted_concurrence_phi(0.5, 0.0)


class TestPredictedPsi:
    def test_identity_channel(self):
        for alpha_sq in (0.2, 0.5, 0.8):
            alpha = np.sqrt(alpha_sq)
            assert predicted_concurrence_psi(alpha, 1.0) == pytest.approx(
                input_concurrence(alpha), abs=1e-14
            )

    def test_symmetric_weight_matches_phi(self):
        for n in N_GRID:
            assert predicted_concurrence_psi(np.sqrt(0.5), n) == pytest.approx(
                predicted_concurrence_phi(np.sqrt(0.5), n), abs=1e-14
            )

    def test_mirror_of_phi(self):
        # beta^2 = 1/3 (alpha^2 = 2/3) mirrors the phi case at alpha^2 = 1/3
        assert predicted_concurrence_psi(np.sqrt(2.0 / 3.0), 4.0) == pytest.approx(
            2.0 * np.sqrt(2.0) / 3.0, abs=1e-14
        )


class TestPredictedWerner:
    def test_vanishes_at_threshold(self):
        assert predicted_concurrence_werner(1.0 / 3.0, 2.0) == 0.0

    def test_vanishes_fully_mixed(self):
        assert predicted_concurrence_werner(0.0, 2.0) == 0.0

    def test_exceeds_physical_range_unclamped(self):
        # the closed form verbatim: 2.0 at n=1, p=1 even though concurrence
        # cannot exceed 1; the sweep flags it against the oracle's 1.0
        assert predicted_concurrence_werner(1.0, 1.0) == pytest.approx(2.0, abs=1e-15)

    def test_out_of_range(self):
        with pytest.raises(InvalidInput):
            predicted_concurrence_werner(-0.1, 1.0)


class TestStateIndependentPoint:
    def test_n4(self):
        point = state_independent_alpha_sq(4.0)
        assert point.alpha_sq == pytest.approx(1.0 / 3.0, abs=1e-15)
        assert not point.any_alpha

    def test_n1_flags_every_input(self):
        point = state_independent_alpha_sq(1.0)
        assert point.alpha_sq == pytest.approx(0.5, abs=1e-15)
        assert point.any_alpha

    def test_n9_preserves_concurrence(self):
        point = state_independent_alpha_sq(9.0)
        assert point.alpha_sq == pytest.approx(0.25, abs=1e-15)
        alpha = np.sqrt(point.alpha_sq)
        assert predicted_concurrence_phi(alpha, 9.0) == pytest.approx(
            input_concurrence(alpha), abs=1e-14
        )
        assert input_concurrence(alpha) == pytest.approx(2 * 0.5 * np.sqrt(0.75), abs=1e-15)

    def test_rationalized_form_matches_raw(self):
        for n in (0.1, 0.25, 0.5, 2.0, 4.0, 9.0, 10.0):
            raw = (np.sqrt(n) - 1.0) / (n - 1.0)
            assert state_independent_alpha_sq(n).alpha_sq == pytest.approx(raw, abs=1e-13)

    def test_preserving_at_special_point(self):
        for n in (0.25, 0.5, 2.0, 4.0, 9.0):
            point = state_independent_alpha_sq(n)
            alpha = np.sqrt(point.alpha_sq)
            assert predicted_concurrence_phi(alpha, n) == pytest.approx(
                input_concurrence(alpha), abs=1e-12
            )


class TestClassifyRegion:
    def test_degraded_above_threshold_for_large_n(self):
        assert classify_region(0.9, 4.0) is Region.DEGRADED

    def test_boundary_is_preserving(self):
        assert classify_region(1.0 / 3.0, 4.0) is Region.PRESERVING

    def test_degraded_below_threshold_for_small_n(self):
        # threshold at n = 0.25 is 2/3; ratio at alpha^2 = 0.1 is ~0.541
        assert classify_region(0.1, 0.25) is Region.DEGRADED
        assert efficiency_ratio(0.1, 0.25) == pytest.approx(0.5 / 0.925, abs=1e-12)

    def test_consistent_with_ratio(self):
        for n in N_GRID:
            for alpha_sq in np.linspace(0.02, 0.98, 25):
                region = classify_region(alpha_sq, n)
                alpha = np.sqrt(alpha_sq)
                degraded = predicted_concurrence_phi(alpha, n) < input_concurrence(alpha) - 1e-12
                assert (region is Region.DEGRADED) == degraded

    def test_open_interval_enforced(self):
        with pytest.raises(InvalidInput):
            classify_region(0.0, 2.0)
        with pytest.raises(InvalidInput):
            classify_region(1.0, 2.0)


class TestQuartic:
    def test_exact_values(self):
        assert quartic(0.0) == 1.0
        assert quartic(1.0) == -48.0
        assert quartic(3.0) == 64.0

    def test_roots(self):
        report = quartic_roots()
        assert report.coefficients == (1.0, 4.0, 6.0, -60.0, 1.0)
        r1, r2 = report.roots_positive
        assert 0.0 < r1 < 0.1
        assert 2.0 < r2 < 3.0
        assert abs(quartic(r1)) <= 1e-8
        assert abs(quartic(r2)) <= 1e-8
        assert r1 == pytest.approx(ROOT_LOW, abs=1e-9)
        assert r2 == pytest.approx(ROOT_HIGH, abs=1e-9)

    def test_sign_regions(self):
        report = quartic_roots()
        (low, mid, high) = report.sign_regions
        assert (low.sign, mid.sign, high.sign) == (1, -1, 1)
        assert low.lower == 0.0
        assert low.upper == report.roots_positive[0]
        assert mid.upper == report.roots_positive[1]
        assert high.upper is None
        # sample evaluations confirm the pattern
        assert quartic(0.01) > 0.0
        assert quartic(1.0) < 0.0
        assert quartic(3.0) > 0.0


class TestUnimodality:
    def test_single_peak_over_input_weight(self):
        alpha_sq_values = np.linspace(0.01, 0.99, 99)
        for n in N_GRID:
            values = [
                predicted_concurrence_phi(np.sqrt(s), n) for s in alpha_sq_values
            ]
            diffs = np.diff(values)
            signs = [int(np.sign(d)) for d in diffs if abs(d) > 1e-12]
            changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
            assert changes == 1, f"n={n}"
            assert signs[0] == 1 and signs[-1] == -1

    def test_peak_value_reaches_one(self):
        # the maximum over alpha^2 is 1 for every n, at alpha^2 = 1/(n+1)
        for n in N_GRID:
            assert predicted_concurrence_phi(np.sqrt(1.0 / (n + 1.0)), n) == pytest.approx(
                1.0, abs=1e-12
            )


class TestSweep:
    def test_pure_point(self):
        rows = sweep("pure", n_values=(1.0,), alpha_sq_values=(0.25,))
        assert len(rows) == 8
        phi = next(
            r for r in rows if r.bell is BellOutcome.PHI_PLUS and r.bob is BobOutcome.ZERO
        )
        expected = 2.0 * 0.5 * np.sqrt(0.75)
        assert phi.oracle_concurrence == pytest.approx(expected, abs=1e-12)
        assert phi.formula_concurrence == pytest.approx(expected, abs=1e-12)
        assert phi.verdict == "MATCH"

    def test_bob_one_rows_match_zero(self):
        rows = sweep("pure", n_values=(2.0,), alpha_sq_values=(0.3, 0.7))
        one_rows = [r for r in rows if r.bob is BobOutcome.ONE]
        assert len(one_rows) == 8
        for row in one_rows:
            assert row.formula_concurrence == 0.0
            assert row.verdict == "MATCH"

    def test_werner_discrepancy(self):
        rows = sweep("werner", n_values=(1.0,), p_values=(1.0,))
        phi = next(
            r for r in rows if r.bell is BellOutcome.PHI_PLUS and r.bob is BobOutcome.ZERO
        )
        assert phi.oracle_concurrence == pytest.approx(1.0, abs=1e-10)
        assert phi.formula_concurrence == pytest.approx(2.0, abs=1e-12)
        assert phi.verdict == "DISCREPANT"

    def test_default_pure_grid_all_match(self):
        rows = sweep("pure")
        assert len(rows) == 7 * 19 * 8
        assert all(r.verdict == "MATCH" for r in rows)

    def test_deterministic_ordering(self):
        rows = sweep("pure", n_values=(1.0, 2.0), alpha_sq_values=(0.25, 0.75))
        coords = [(r.n, r.alpha_sq) for r in rows]
        assert coords == sorted(coords)
        first_point = [(r.bell, r.bob) for r in rows[:8]]
        assert first_point == [(bell, bob) for bell in BellOutcome for bob in BobOutcome]

    def test_parameter_validation(self):
        with pytest.raises(InvalidInput):
            sweep("pure", n_values=())
        with pytest.raises(InvalidInput):
            sweep("pure", p_values=(0.5,))
        with pytest.raises(InvalidInput):
            sweep("werner", alpha_sq_values=(0.5,))
        with pytest.raises(InvalidInput):
            sweep("nonsense")
        with pytest.raises(InvalidInput):
            sweep("pure", n_values=(1.0,), alpha_sq_values=(-0.5,))
