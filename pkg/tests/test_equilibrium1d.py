import numpy as np
import pytest

import polcomp as pc
from polcomp.errors import DimensionError, InternalConsistencyError, PreconditionError

from helpers import (
    central_difference,
    grid_equilibrium_1d,
    outward_spread,
    random_diverse_instance,
    shock_for,
)


class TestClosedForm:
    def test_reference_two_type(self, two_type, nu_quadratic, unit_shock):
        eq = pc.equilibrium_1d(two_type, nu_quadratic, unit_shock)
        assert eq.x_low == pytest.approx(0.25, abs=1e-12)
        assert eq.x_high == pytest.approx(0.75, abs=1e-12)
        assert eq.payoff == pytest.approx(0.625, abs=1e-12)
        assert eq.x_risk_neutral == pytest.approx(0.5, abs=1e-12)
        assert eq.median == pytest.approx(0.5, abs=1e-12)
        assert np.allclose(eq.weights_high, [0.25, 0.75], atol=1e-12)
        assert np.allclose(eq.weights_low, [0.75, 0.25], atol=1e-12)

    def test_linear_payoff_collapses(self, two_type, nu_linear, unit_shock):
        # risk-neutral boundary: mechanical weights are even and platforms meet
        eq = pc.equilibrium_1d(two_type, nu_linear, unit_shock, check=False)
        assert np.allclose(eq.weights_high, [0.5, 0.5], atol=1e-15)
        assert np.allclose(eq.weights_low, [0.5, 0.5], atol=1e-15)
        assert eq.x_low == pytest.approx(0.5, abs=1e-15)
        assert eq.x_high == pytest.approx(0.5, abs=1e-15)
        with pytest.raises(PreconditionError):
            pc.equilibrium_1d(two_type, nu_linear, unit_shock)

    def test_three_type_symmetric_closed_form(self, three_type_symmetric, nu_quadratic):
        shock = pc.Shock(5.0)
        eq = pc.equilibrium_1d(three_type_symmetric, nu_quadratic, shock)
        assert eq.x_high == pytest.approx(0.42, abs=1e-12)
        assert eq.x_low == pytest.approx(-0.42, abs=1e-12)
        assert eq.payoff == pytest.approx(0.5 + 0.84**2 / 10.0, abs=1e-12)

    def test_three_type_matches_grid_oracle(self, three_type_symmetric, nu_quadratic):
        # independent brute-force best-response iteration on a 1e4-point grid
        shock = pc.Shock(5.0)
        x_lo, x_hi = grid_equilibrium_1d(three_type_symmetric, nu_quadratic, shock,
                                         n_points=10_000)
        assert x_hi == pytest.approx(0.42, abs=2.5e-4)
        assert x_lo == pytest.approx(-0.42, abs=2.5e-4)

    def test_single_type_flagged_non_diverse(self, nu_quadratic, unit_shock):
        d = pc.VoterDistribution([[0.7]], [1.0])
        eq = pc.equilibrium_1d(d, nu_quadratic, unit_shock)
        assert not eq.diverse
        assert eq.x_low == eq.x_high == pytest.approx(0.7)
        assert eq.payoff == pytest.approx(0.5)

    def test_requires_one_dimension(self, two_type_2d, nu_quadratic, unit_shock):
        with pytest.raises(DimensionError):
            pc.equilibrium_1d(two_type_2d, nu_quadratic, unit_shock)

    def test_support_violation_caught(self, nu_quadratic):
        # platforms land where gaps escape a too-narrow shock: identity breaks
        d = pc.VoterDistribution([-0.5, 1.5], [0.5, 0.5])
        with pytest.raises(InternalConsistencyError):
            pc.equilibrium_1d(d, nu_quadratic, pc.Shock(1.0))
        eq = pc.equilibrium_1d(d, nu_quadratic, pc.Shock(1.0), check=False)
        assert eq.distance == pytest.approx(1.0, abs=1e-12)
        assert eq.payoff == pytest.approx(1.0, abs=1e-12)


class TestBenchmarkAndMedian:
    def test_proportional_benchmark_is_mean(self):
        d = pc.VoterDistribution([0.0, 1.0, 3.0], [0.2, 0.5, 0.3])
        rn = pc.risk_neutral_benchmark(d, pc.proportional_power())
        assert rn == pytest.approx(0.2 * 0 + 0.5 * 1 + 0.3 * 3, abs=1e-12)

    def test_two_type_symmetric_benchmark(self, two_type):
        assert pc.risk_neutral_benchmark(two_type, pc.proportional_power()) == \
            pytest.approx(0.5, abs=1e-15)

    def test_premium_benchmark(self, two_type):
        rho = pc.majority_premium_power(1.0, 0.5)
        assert pc.risk_neutral_benchmark(two_type, rho) == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("bliss,shares,expected", [
        ([0.0, 1.0], [0.5, 0.5], 0.5),
        ([-1.0, 0.0, 1.0], [0.3, 0.4, 0.3], 0.0),
        ([0.0, 1.0], [0.2, 0.8], 1.0),
    ])
    def test_median_examples(self, bliss, shares, expected):
        median, _ = pc.median_bliss(pc.VoterDistribution(bliss, shares))
        assert median == pytest.approx(expected, abs=1e-15)

    def test_median_index_reported(self):
        median, idx = pc.median_bliss(pc.VoterDistribution([-1.0, 0.0, 1.0], [0.3, 0.4, 0.3]))
        assert idx == 1
        median, idx = pc.median_bliss(pc.VoterDistribution([0.0, 1.0], [0.5, 0.5]))
        assert idx is None


class TestGradient:
    def test_hand_values(self, two_type, nu_quadratic, unit_shock):
        assert pc.payoff_gradient(two_type, nu_quadratic, unit_shock, 1) == \
            pytest.approx(0.25, abs=1e-12)
        assert pc.payoff_gradient(two_type, nu_quadratic, unit_shock, 0) == \
            pytest.approx(-0.25, abs=1e-12)

    def test_matches_finite_differences(self, nu_quadratic):
        rng = np.random.default_rng(21)
        for _ in range(10):
            dist = random_diverse_instance(rng, dim=1)
            shock = shock_for(dist)
            i = int(rng.integers(dist.n_types))
            analytic = pc.payoff_gradient(dist, nu_quadratic, shock, i)

            def payoff_at(xi):
                bliss = dist.bliss.copy()
                bliss[i, 0] = xi
                return pc.equilibrium_1d(pc.VoterDistribution(bliss, dist.shares),
                                         nu_quadratic, shock).payoff

            fd = central_difference(payoff_at, float(dist.bliss[i, 0]))
            assert abs(analytic - fd) <= 1e-6 * max(abs(analytic), 1e-3)

    def test_sign_follows_median_side(self, nu_quadratic):
        rng = np.random.default_rng(22)
        for _ in range(10):
            dist = random_diverse_instance(rng, dim=1)
            shock = shock_for(dist)
            median, _ = pc.median_bliss(dist)
            for i in range(dist.n_types):
                g = pc.payoff_gradient(dist, nu_quadratic, shock, i)
                xi = dist.bliss[i, 0]
                if xi > median + 1e-9:
                    assert g > 0
                elif xi < median - 1e-9:
                    assert g < 0

    def test_index_out_of_range(self, two_type, nu_quadratic, unit_shock):
        with pytest.raises(PreconditionError):
            pc.payoff_gradient(two_type, nu_quadratic, unit_shock, 2)


class TestClassification:
    def test_reference_stances(self, two_type, nu_quadratic, unit_shock):
        assert pc.classify_group(two_type, nu_quadratic, unit_shock, 1, "A") is \
            pc.GroupStance.ATTRACT
        assert pc.classify_group(two_type, nu_quadratic, unit_shock, 0, "A") is \
            pc.GroupStance.ALIENATE
        assert pc.classify_group(two_type, nu_quadratic, unit_shock, 1, "B") is \
            pc.GroupStance.ALIENATE
        assert pc.classify_group(two_type, nu_quadratic, unit_shock, 0, "B") is \
            pc.GroupStance.ATTRACT

    def test_median_type_unclassified(self, nu_quadratic):
        d = pc.VoterDistribution([-1.0, 0.0, 1.0], [0.25, 0.5, 0.25])
        shock = pc.Shock(5.0)
        assert pc.classify_group(d, nu_quadratic, shock, 1, "A") is \
            pc.GroupStance.UNCLASSIFIED
        assert pc.classify_group(d, nu_quadratic, shock, 1, "B") is \
            pc.GroupStance.UNCLASSIFIED

    def test_between_thresholds_unclassified(self, nu_quadratic):
        # group strictly between the low platform and the median
        d = pc.VoterDistribution([-1.0, -0.3, 0.0, 1.0], [0.3, 0.1, 0.25, 0.35])
        shock = pc.Shock(5.0)
        eq = pc.equilibrium_1d(d, nu_quadratic, shock)
        assert eq.x_low < -0.3 < eq.median
        assert pc.classify_group(d, nu_quadratic, shock, 1, "A") is \
            pc.GroupStance.UNCLASSIFIED


class TestEquilibriumProperties:
    def test_divergence_on_random_instances(self, nu_quadratic, nu_sqrt):
        rng = np.random.default_rng(23)
        for nu in (nu_quadratic, nu_sqrt):
            for _ in range(25):
                dist = random_diverse_instance(rng, dim=1)
                eq = pc.equilibrium_1d(dist, nu, shock_for(dist))
                assert eq.x_high - eq.x_low > 1e-9

    def test_weight_dominance(self, nu_quadratic):
        # high-side weights first-order dominate low-side weights over types
        rng = np.random.default_rng(24)
        for _ in range(15):
            dist = random_diverse_instance(rng, dim=1)
            eq = pc.equilibrium_1d(dist, nu_quadratic, shock_for(dist))
            tail_hi = np.cumsum(eq.weights_high[::-1])[::-1]
            tail_lo = np.cumsum(eq.weights_low[::-1])[::-1]
            assert np.all(tail_hi >= tail_lo - 1e-12)
            assert np.any(tail_hi > tail_lo + 1e-12)

    def test_median_weight_comparison(self, nu_quadratic):
        rng = np.random.default_rng(25)
        for _ in range(15):
            dist = random_diverse_instance(rng, dim=1)
            eq = pc.equilibrium_1d(dist, nu_quadratic, shock_for(dist))
            x = dist.bliss[eq.order, 0]
            for pos in range(dist.n_types):
                if x[pos] > eq.median + 1e-9:
                    assert eq.weights_high[pos] > eq.weights_low[pos]
                elif x[pos] < eq.median - 1e-9:
                    assert eq.weights_high[pos] < eq.weights_low[pos]

    def test_platforms_bracket_population_mean(self, nu_quadratic):
        # proportional power: the welfare optimum sits between the platforms
        rng = np.random.default_rng(26)
        for _ in range(15):
            dist = random_diverse_instance(rng, dim=1)
            eq = pc.equilibrium_1d(dist, nu_quadratic, shock_for(dist))
            mean = float(dist.mean_bliss()[0])
            assert eq.x_low < mean < eq.x_high

    def test_grid_best_response_fixed_point(self, nu_quadratic):
        rng = np.random.default_rng(27)
        dist = random_diverse_instance(rng, n_types=3, dim=1)
        shock = shock_for(dist)
        eq = pc.equilibrium_1d(dist, nu_quadratic, shock)
        x_lo, x_hi = grid_equilibrium_1d(dist, nu_quadratic, shock, n_points=10_000)
        span = float(dist.bliss[:, 0].max() - dist.bliss[:, 0].min())
        assert abs(x_hi - eq.x_high) <= 2.0 * span / 10_000 + 1e-12
        assert abs(x_lo - eq.x_low) <= 2.0 * span / 10_000 + 1e-12


class TestSpread:
    def test_pure_outward_shift(self):
        base = pc.VoterDistribution([-1.0, 1.0], [0.5, 0.5])
        cand = pc.VoterDistribution([-2.0, 2.0], [0.5, 0.5])
        assert pc.is_spread(base, cand)

    def test_reflexive_is_not_spread(self):
        base = pc.VoterDistribution([-1.0, 1.0], [0.5, 0.5])
        assert not pc.is_spread(base, base)

    def test_right_side_moved_inward(self):
        base = pc.VoterDistribution([-1.0, 1.0], [0.5, 0.5])
        cand = pc.VoterDistribution([-2.0, 0.5], [0.5, 0.5])
        assert not pc.is_spread(base, cand)

    def test_translation_is_not_spread(self):
        base = pc.VoterDistribution([-1.0, 1.0], [0.5, 0.5])
        assert not pc.is_spread(base, base.translate([7.0]))

    def test_single_side_shift_is_spread(self):
        base = pc.VoterDistribution([0.0, 1.0], [0.5, 0.5])
        cand = pc.VoterDistribution([0.0, 1.2], [0.5, 0.5])
        assert pc.is_spread(base, cand)

    def test_requires_one_dimension(self, two_type_2d):
        with pytest.raises(DimensionError):
            pc.is_spread(two_type_2d, two_type_2d)


class TestSpreadPayoffs:
    def test_symmetric_outward(self, nu_quadratic):
        base = pc.VoterDistribution([0.0, 1.0], [0.5, 0.5])
        cand = pc.VoterDistribution([-0.5, 1.5], [0.5, 0.5])
        shock = pc.Shock(4.0)
        cmp = pc.compare_spread_payoffs(base, cand, nu_quadratic, shock)
        assert cmp.base_distance == pytest.approx(0.5, abs=1e-12)
        assert cmp.candidate_distance == pytest.approx(1.0, abs=1e-12)
        assert cmp.base_payoff == pytest.approx(0.5 + 0.25 / 8.0, abs=1e-12)
        assert cmp.candidate_payoff == pytest.approx(0.5 + 1.0 / 8.0, abs=1e-12)

    def test_right_type_only(self, nu_quadratic, unit_shock):
        base = pc.VoterDistribution([0.0, 1.0], [0.5, 0.5])
        cand = pc.VoterDistribution([0.0, 1.2], [0.5, 0.5])
        cmp = pc.compare_spread_payoffs(base, cand, nu_quadratic, unit_shock)
        assert cmp.candidate_distance == pytest.approx(0.6, abs=1e-12)
        assert cmp.candidate_payoff == pytest.approx(0.68, abs=1e-12)

    def test_translation_control(self, nu_quadratic, unit_shock):
        # translating the electorate moves platforms but not distance or payoff
        base = pc.VoterDistribution([0.0, 1.0], [0.5, 0.5])
        moved = base.translate([7.0])
        eq0 = pc.equilibrium_1d(base, nu_quadratic, unit_shock)
        eq1 = pc.equilibrium_1d(moved, nu_quadratic, unit_shock)
        assert eq1.distance == pytest.approx(eq0.distance, abs=1e-12)
        assert eq1.payoff == pytest.approx(eq0.payoff, abs=1e-12)
        assert eq1.x_low == pytest.approx(eq0.x_low + 7.0, abs=1e-12)
        with pytest.raises(PreconditionError):
            pc.compare_spread_payoffs(base, moved, nu_quadratic, unit_shock)

    def test_random_outward_spreads(self, nu_quadratic):
        rng = np.random.default_rng(28)
        for _ in range(10):
            base = random_diverse_instance(rng, dim=1)
            cand = outward_spread(base, float(rng.uniform(0.05, 0.4)))
            shock = shock_for(cand)
            if not pc.is_spread(base, cand):
                continue
            cmp = pc.compare_spread_payoffs(base, cand, nu_quadratic, shock)
            assert cmp.candidate_payoff > cmp.base_payoff
            assert cmp.candidate_distance > cmp.base_distance
