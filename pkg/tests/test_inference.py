"""Tests for the variance-stabilized transform, intervals, and tests.

Covers the transform's defining unit-derivative property across the whole
model catalogue, exact hyperbolic round-trips of interval endpoints, the
first-order width expansion, test/interval duality, and the sampling
distribution of the standardized statistic under the null.
"""

import math

import numpy as np
import pytest

from qshape.distributions import Normal, LogNormal, Affine, catalogue, open_uniform
from qshape.estimation import (VstConstants, kurtosis_estimate,
                               vst_constants_estimated, vst_constants_theoretical)
from qshape import inference
from qshape.inference import (ConfidenceInterval, confidence_interval,
                              key_function, kurtosis_test, peakedness_test,
                              vst_transform, width_expansion)
from qshape.measures import kurtosis_ratio, matched_p
from qshape.simulation import replicate_stream

# Accessed through the module: bare imports of these two names would make
# pytest try to collect them.
statistic = inference.test_statistic

R_THIRD = 1.0 / 3.0
P_THIRD = matched_p(R_THIRD)
Z_975 = 1.959963984540054
Z_95 = 1.6448536269514722


def normal_constants() -> VstConstants:
    return vst_constants_theoretical(Normal(), P_THIRD, R_THIRD)


def sorted_lognormal(n: int, key: int = 0) -> np.ndarray:
    rng = replicate_stream(3, key)
    return np.sort(LogNormal().quantile(open_uniform(rng, n)))


class TestTransform:
    def test_quadratic_value_at_normal_kurtosis(self):
        c = normal_constants()
        assert np.isclose(c.quadratic(3.0), 19.074491474179066, rtol=1e-12)

    def test_transform_values(self):
        c = normal_constants()
        assert np.isclose(vst_transform(c, 400, 3.0), 15.400639717167444, rtol=1e-12)
        assert np.isclose(vst_transform(c, 400, 3.4), 17.134495254997436, rtol=1e-12)

    def test_scalar_in_scalar_out(self):
        c = normal_constants()
        assert isinstance(vst_transform(c, 400, 3.0), float)
        assert isinstance(key_function(c, 3.0, 3.4), float)
        assert isinstance(statistic(c, 400, 3.0, 3.4), float)

    def test_array_argument_keeps_shape(self):
        c = normal_constants()
        xs = np.array([[2.5, 3.0], [3.5, 4.0]])
        out = vst_transform(c, 400, xs)
        assert out.shape == xs.shape
        assert np.isclose(out[0, 1], vst_transform(c, 400, 3.0), rtol=1e-15)

    def test_monotone_increasing(self):
        c = normal_constants()
        xs = np.linspace(1.2, 9.0, 200)
        hs = vst_transform(c, 400, xs)
        assert np.all(np.diff(hs) > 0.0)

    def test_statistic_is_root_n_times_key(self):
        c = normal_constants()
        for n in (25, 400, 4000):
            k = key_function(c, 3.0, 3.4)
            assert np.isclose(statistic(c, n, 3.0, 3.4), math.sqrt(n) * k,
                              rtol=1e-14)

    def test_statistic_is_transform_difference(self):
        c = normal_constants()
        t = statistic(c, 400, 3.0, 3.4)
        diff = vst_transform(c, 400, 3.4) - vst_transform(c, 400, 3.0)
        assert np.isclose(t, diff, rtol=1e-12)

    def test_key_zero_at_null_and_signed(self):
        c = normal_constants()
        assert key_function(c, 3.0, 3.0) == 0.0
        assert key_function(c, 3.0, 3.5) > 0.0
        assert key_function(c, 3.0, 2.5) < 0.0


class TestUnitDerivative:
    """h_n'(x) * sqrt(q(x)/n) = 1 is the property that defines the transform."""

    def test_across_catalogue(self):
        n = 400
        for spec, model in catalogue():
            c = vst_constants_theoretical(model, P_THIRD, R_THIRD)
            kappa = kurtosis_ratio(model, P_THIRD, R_THIRD)
            eps = 1e-4 * max(1.0, kappa)
            slope = (vst_transform(c, n, kappa + eps)
                     - vst_transform(c, n, kappa - eps)) / (2.0 * eps)
            product = slope * math.sqrt(c.quadratic(kappa) / n)
            assert np.isclose(product, 1.0, atol=1e-6), spec

    def test_independent_of_sample_size(self):
        c = normal_constants()
        eps = 1e-4
        for n in (50, 400, 10000):
            slope = (vst_transform(c, n, 3.0 + eps)
                     - vst_transform(c, n, 3.0 - eps)) / (2.0 * eps)
            assert np.isclose(slope * math.sqrt(c.quadratic(3.0) / n), 1.0,
                              atol=1e-8)


class TestConfidenceInterval:
    def test_normal_interval_pins(self):
        ci = confidence_interval(normal_constants(), 400, 3.0, 0.05)
        assert np.isclose(ci.lower, 2.596395514289221, rtol=1e-12)
        assert np.isclose(ci.upper, 3.455503869388785, rtol=1e-12)
        assert np.isclose(ci.width, 0.859108355099564, rtol=1e-12)
        assert np.isclose(ci.relative_width, 0.28636945169985467, rtol=1e-12)
        assert ci.level == 0.95
        ci4000 = confidence_interval(normal_constants(), 4000, 3.0, 0.05)
        assert np.isclose(ci4000.width, 0.2707896211197163, rtol=1e-12)

    def test_endpoint_round_trip_exact_constants(self):
        c = normal_constants()
        ci = confidence_interval(c, 400, 3.0, 0.05)
        h_hat = vst_transform(c, 400, 3.0)
        assert np.isclose(vst_transform(c, 400, ci.lower), h_hat - Z_975, atol=1e-10)
        assert np.isclose(vst_transform(c, 400, ci.upper), h_hat + Z_975, atol=1e-10)

    def test_endpoint_round_trip_estimated_constants(self):
        x = sorted_lognormal(500)
        c = vst_constants_estimated(x, P_THIRD, R_THIRD)
        est = kurtosis_estimate(x, P_THIRD, R_THIRD)
        for alpha, z in ((0.05, Z_975), (0.10, Z_95)):
            ci = confidence_interval(c, 500, est, alpha)
            h_hat = vst_transform(c, 500, est)
            assert np.isclose(vst_transform(c, 500, ci.lower), h_hat - z, atol=1e-10)
            assert np.isclose(vst_transform(c, 500, ci.upper), h_hat + z, atol=1e-10)

    def test_degenerate_level_collapses_onto_estimate(self):
        ci = confidence_interval(normal_constants(), 400, 3.1, 1.0)
        assert abs(ci.lower - 3.1) < 1e-12
        assert abs(ci.upper - 3.1) < 1e-12
        assert ci.level == 0.0

    def test_nesting_in_alpha(self):
        c = normal_constants()
        wide = confidence_interval(c, 400, 3.0, 0.01)
        mid = confidence_interval(c, 400, 3.0, 0.05)
        narrow = confidence_interval(c, 400, 3.0, 0.2)
        assert wide.lower < mid.lower < narrow.lower < 3.0
        assert 3.0 < narrow.upper < mid.upper < wide.upper

    def test_duality_with_two_sided_test(self):
        c = normal_constants()
        ci = confidence_interval(c, 400, 3.0, 0.05)
        for null in np.linspace(1.5, 6.0, 40):
            res = kurtosis_test(c, 400, float(null), 3.0, level=0.05)
            assert res.reject == (not ci.contains(float(null))), null

    def test_contains_is_inclusive(self):
        ci = confidence_interval(normal_constants(), 400, 3.0, 0.05)
        assert ci.contains(ci.lower) and ci.contains(ci.upper)
        assert ci.contains(3.0) and not ci.contains(99.0)

    def test_estimate_outside_interval_rejected(self):
        with pytest.raises(ValueError, match="does not contain"):
            ConfidenceInterval(estimate=3.0, lower=3.5, upper=4.0, level=0.95)

    def test_containment_slack_near_degenerate(self):
        ci = ConfidenceInterval(estimate=1.0, lower=1.0 + 5e-10, upper=2.0,
                                level=0.95)
        assert ci.lower > ci.estimate
        with pytest.raises(ValueError, match="does not contain"):
            ConfidenceInterval(estimate=1.0, lower=1.0 + 5e-9, upper=2.0,
                               level=0.95)


class TestWidthExpansion:
    def test_first_order_width_pin(self):
        w = width_expansion(normal_constants(), 3.0, 400, 0.05)
        assert np.isclose(w, 0.8560015976839066, rtol=1e-12)

    def test_matches_two_z_root_q_over_n(self):
        c = normal_constants()
        w = width_expansion(c, 3.0, 400, 0.05)
        assert np.isclose(w, 2.0 * Z_975 * math.sqrt(c.quadratic(3.0) / 400),
                          rtol=1e-12)

    def test_constant_quadratic(self):
        w = width_expansion(VstConstants(4.0, 0.0, 0.0), 3.0, 400, 0.05)
        assert np.isclose(w, 0.3919927969080108, rtol=1e-12)

    def test_approximates_exact_interval_width(self):
        c = normal_constants()
        ratio_400 = (confidence_interval(c, 400, 3.0, 0.05).width
                     / width_expansion(c, 3.0, 400, 0.05))
        ratio_4000 = (confidence_interval(c, 4000, 3.0, 0.05).width
                      / width_expansion(c, 3.0, 4000, 0.05))
        assert 1.0 < ratio_400 < 1.05
        assert 1.0 < ratio_4000 < ratio_400

    def test_rate_in_n(self):
        c = normal_constants()
        w1 = width_expansion(c, 3.0, 400, 0.05)
        w2 = width_expansion(c, 3.0, 1600, 0.05)
        assert np.isclose(w1 / w2, 2.0, rtol=1e-12)

    def test_negative_quadratic_rejected(self):
        bad = VstConstants(1.0, -10.0, 1.0)
        with pytest.raises(ValueError, match="quadratic is negative"):
            width_expansion(bad, 5.0, 400, 0.05)


class TestValidation:
    def test_constants_construction_errors(self):
        with pytest.raises(ValueError, match="a0 must be positive"):
            VstConstants(-1.0, 0.0, 2.0)
        with pytest.raises(ValueError, match="a0 must be positive"):
            VstConstants(float("nan"), 0.0, 2.0)
        with pytest.raises(ValueError, match="a2 must be nonnegative"):
            VstConstants(1.0, 0.0, -2.0)
        with pytest.raises(ValueError, match="must be finite"):
            VstConstants(1.0, float("inf"), 2.0)

    def test_flat_quadratic_has_no_transform(self):
        flat = VstConstants(4.0, 0.0, 0.0)
        for call in (lambda: vst_transform(flat, 400, 3.0),
                     lambda: statistic(flat, 400, 3.0, 3.4),
                     lambda: confidence_interval(flat, 400, 3.0, 0.05)):
            with pytest.raises(ValueError, match="a2 must be positive"):
                call()

    def test_nonpositive_discriminant_rejected_at_use(self):
        thin = VstConstants(0.1, 1.0, 0.1)
        assert thin.d2 < 0.0
        with pytest.raises(ValueError, match="discriminant"):
            confidence_interval(thin, 400, 3.0, 0.05)
        with pytest.raises(ValueError, match="discriminant"):
            vst_transform(thin, 400, 3.0)

    def test_interval_argument_errors(self):
        c = normal_constants()
        with pytest.raises(ValueError, match="n must be positive"):
            confidence_interval(c, 0, 3.0, 0.05)
        with pytest.raises(ValueError, match="alpha"):
            confidence_interval(c, 400, 3.0, 0.0)
        with pytest.raises(ValueError, match="alpha"):
            confidence_interval(c, 400, 3.0, 1.5)


class TestKurtosisTest:
    def test_two_sided_result(self):
        res = kurtosis_test(normal_constants(), 400, 3.0, 3.4)
        assert isinstance(res, inference.TestResult)
        assert np.isclose(res.statistic, 1.7338555378299914, rtol=1e-12)
        assert np.isclose(res.z_critical, Z_975, rtol=1e-12)
        assert np.isclose(res.p_value, 0.08294371855190281, rtol=1e-12)
        assert not res.reject and not res.failed
        assert res.level == 0.05 and res.alternative == "two-sided"

    def test_one_sided_greater(self):
        two = kurtosis_test(normal_constants(), 400, 3.0, 3.4)
        one = kurtosis_test(normal_constants(), 400, 3.0, 3.4,
                            alternative="greater")
        assert np.isclose(one.z_critical, Z_95, rtol=1e-12)
        assert np.isclose(one.p_value, two.p_value / 2.0, rtol=1e-12)
        assert one.reject

    def test_greater_does_not_reject_low_estimates(self):
        res = kurtosis_test(normal_constants(), 400, 3.0, 2.0,
                            alternative="greater")
        assert res.statistic < 0.0 and not res.reject
        assert res.p_value > 0.5

    def test_null_estimate_gives_zero_statistic(self):
        res = kurtosis_test(normal_constants(), 400, 3.0, 3.0)
        assert res.statistic == 0.0
        assert np.isclose(res.p_value, 1.0, rtol=1e-12)
        assert not res.reject

    def test_level_controls_critical_value(self):
        tight = kurtosis_test(normal_constants(), 400, 3.0, 3.4, level=0.10)
        assert np.isclose(tight.z_critical, Z_95, rtol=1e-12)
        assert tight.reject

    def test_rejected_alternatives(self):
        with pytest.raises(ValueError, match="alternative"):
            kurtosis_test(normal_constants(), 400, 3.0, 3.4,
                          alternative="less")
        with pytest.raises(ValueError, match="level"):
            kurtosis_test(normal_constants(), 400, 3.0, 3.4, level=0.0)


class TestStatisticNormality:
    """Under the null the standardized statistic should be close to N(0, 1)
    even with every constant estimated from the data."""

    def test_null_distribution_moments(self):
        reps, n = 10000, 1000
        model = Normal()
        ts = np.empty(reps)
        for i in range(reps):
            rng = replicate_stream(11, i)
            x = np.sort(model.quantile(open_uniform(rng, n)))
            c = vst_constants_estimated(x, P_THIRD, R_THIRD)
            ts[i] = statistic(c, n, 3.0, kurtosis_estimate(x, P_THIRD, R_THIRD))
        mean, sd = ts.mean(), ts.std(ddof=1)
        assert np.isclose(mean, -0.06026030351627777, rtol=1e-10)
        assert np.isclose(sd, 0.9891936571641896, rtol=1e-10)
        assert abs(mean) < 0.1
        assert abs(sd - 1.0) < 0.05
        crosses = np.mean(np.abs(ts) >= Z_975)
        assert abs(crosses - 0.05) < 0.01


class TestPeakednessTest:
    def test_matches_manual_pipeline(self):
        x = sorted_lognormal(800, key=4)
        q, r = 0.25, 0.375
        res = peakedness_test(x, q, r, 1.7, level=0.05)
        c = vst_constants_estimated(x, q, r)
        manual = kurtosis_test(c, x.size, 1.7,
                               kurtosis_estimate(x, q, r), level=0.05)
        assert res == manual
        assert not res.failed

    def test_tied_sample_flags_failure(self):
        tied = np.full(100, 5.0)
        res = peakedness_test(tied, 0.25, R_THIRD, 2.0)
        assert res.failed and not res.reject
        assert math.isnan(res.statistic) and math.isnan(res.p_value)
        assert np.isclose(res.z_critical, Z_975, rtol=1e-12)
        assert res.level == 0.05 and res.alternative == "two-sided"

    def test_tied_sample_one_sided_keeps_critical_value(self):
        tied = np.full(100, 5.0)
        res = peakedness_test(tied, 0.25, R_THIRD, 2.0, alternative="greater")
        assert res.failed
        assert np.isclose(res.z_critical, Z_95, rtol=1e-12)

    def test_bad_alternative_raises_before_estimation(self):
        with pytest.raises(ValueError, match="alternative"):
            peakedness_test(np.full(100, 5.0), 0.25, R_THIRD, 2.0,
                            alternative="sideways")


class TestPipelineAffineInvariance:
    def test_interval_endpoints_unchanged_by_affine_map(self):
        x = sorted_lognormal(500)
        y = np.sort(2.9 * x + 3.7)
        cis = []
        stats = []
        for sample in (x, y):
            c = vst_constants_estimated(sample, P_THIRD, R_THIRD)
            est = kurtosis_estimate(sample, P_THIRD, R_THIRD)
            cis.append(confidence_interval(c, sample.size, est, 0.05))
            stats.append(statistic(c, sample.size, 3.0, est))
        assert np.isclose(cis[0].lower, cis[1].lower, rtol=1e-9)
        assert np.isclose(cis[0].upper, cis[1].upper, rtol=1e-9)
        assert np.isclose(stats[0], stats[1], rtol=1e-9)

    def test_theoretical_constants_affine_invariant(self):
        base = LogNormal()
        moved = Affine(base, scale=2.9, shift=3.7)
        cb = vst_constants_theoretical(base, P_THIRD, R_THIRD)
        cm = vst_constants_theoretical(moved, P_THIRD, R_THIRD)
        assert np.isclose(cb.a0, cm.a0, rtol=1e-10)
        assert np.isclose(cb.a1, cm.a1, rtol=1e-10)
        assert np.isclose(cb.a2, cm.a2, rtol=1e-10)
