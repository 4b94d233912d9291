"""Variance-stabilized inference for interquantile-range ratios.

Given the quadratic q(t) = a0 + a1 t + a2 t^2 describing the asymptotic
variance of the plug-in ratio, the transform

    h_n(x) = sqrt(n / a2) * asinh( q'(x) / D ),    D = sqrt(4 a0 a2 - a1^2),

has unit asymptotic derivative-variance product: h_n'(x) * sqrt(q(x)/n) = 1.
Confidence intervals invert the transform in closed form; tests compare the
stabilized distance between the estimate and a hypothesized value against
normal critical values.  All of it applies to the kurtosis, peakedness, or
tail-weight ratio alike — only the tail areas behind the constants differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import special
from .estimation import (DEFAULT_BANDWIDTH_A, EstimationFailure,
                         VstConstants, kurtosis_estimate,
                         vst_constants_estimated)

__all__ = [
    "vst_transform",
    "key_function",
    "test_statistic",
    "ConfidenceInterval",
    "confidence_interval",
    "width_expansion",
    "TestResult",
    "kurtosis_test",
    "peakedness_test",
]


def _require_stabilizable(constants: VstConstants):
    if not constants.a2 > 0.0:
        raise ValueError("transform undefined: a2 must be positive")
    d2 = constants.d2
    if not d2 > 0.0:
        raise ValueError(f"transform undefined: discriminant {d2:g} <= 0")
    return math.sqrt(d2)


def vst_transform(constants: VstConstants, n: int, x):
    """The variance-stabilizing transform h_n(x) (free constant chosen as 0)."""
    d = _require_stabilizable(constants)
    x = np.asarray(x, dtype=float)
    out = math.sqrt(n / constants.a2) * np.arcsinh(constants.quadratic_slope(x) / d)
    return out if out.ndim else float(out)


def key_function(constants: VstConstants, ratio_null: float, ratio):
    """Stabilized signed distance K(ratio) between ratio and ratio_null:

        K = [ asinh(q'(ratio)/D) - asinh(q'(ratio_null)/D) ] / sqrt(a2),

    so that sqrt(n) * K(estimate) is asymptotically standard normal under the
    null.  Increasing in ratio; zero at the null.
    """
    d = _require_stabilizable(constants)
    ratio = np.asarray(ratio, dtype=float)
    ref = math.asinh(constants.quadratic_slope(ratio_null) / d)
    out = (np.arcsinh(constants.quadratic_slope(ratio) / d) - ref) / math.sqrt(constants.a2)
    return out if out.ndim else float(out)


def test_statistic(constants: VstConstants, n: int, ratio_null: float, estimate):
    """T = sqrt(n) * K(estimate); asymptotically N(0,1) under the null."""
    out = math.sqrt(n) * np.asarray(key_function(constants, ratio_null, estimate))
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class ConfidenceInterval:
    """A two-sided interval for a ratio, with its nominal confidence level."""

    estimate: float
    lower: float
    upper: float
    level: float

    def __post_init__(self):
        # The estimate re-enters the interval through a hyperbolic round
        # trip, so allow rounding slack at the degenerate (zero-width) end.
        slack = 1e-9 * max(1.0, abs(self.estimate))
        if not self.lower - slack <= self.estimate <= self.upper + slack:
            raise ValueError(
                f"interval [{self.lower}, {self.upper}] does not contain "
                f"the estimate {self.estimate}")

    @property
    def width(self) -> float:
        return self.upper - self.lower

    @property
    def relative_width(self) -> float:
        return self.width / self.estimate

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper


def _interval_endpoints(a0, a1, a2, n: int, estimate, c_alpha: float):
    """Closed-form inversion of the stabilized pivot (array-friendly).

    endpoint = ( D * sinh( asinh(q'(est)/D) -/+ c_alpha * sqrt(a2/n) ) - a1 ) / (2 a2)
    """
    d = np.sqrt(4.0 * a0 * a2 - a1 * a1)
    centre = np.arcsinh((a1 + 2.0 * a2 * np.asarray(estimate, dtype=float)) / d)
    step = c_alpha * np.sqrt(a2 / n)
    lower = (d * np.sinh(centre - step) - a1) / (2.0 * a2)
    upper = (d * np.sinh(centre + step) - a1) / (2.0 * a2)
    return lower, upper


def confidence_interval(constants: VstConstants, n: int, estimate: float,
                        alpha: float = 0.05) -> ConfidenceInterval:
    """Two-sided interval for the ratio at nominal level 1 - alpha.

    Inverts the stabilized pivot exactly (hyperbolic closed form), so
    h_n(lower) = h_n(estimate) - z and h_n(upper) = h_n(estimate) + z with
    z = z_{1-alpha/2}.  alpha = 1 is allowed and collapses the interval onto
    the estimate.
    """
    _require_stabilizable(constants)
    if not n >= 1:
        raise ValueError(f"n must be positive, got n={n}")
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    c = 0.0 if alpha == 1.0 else float(special.std_normal_quantile(1.0 - alpha / 2.0))
    lower, upper = _interval_endpoints(constants.a0, constants.a1, constants.a2,
                                       n, estimate, c)
    return ConfidenceInterval(estimate=float(estimate), lower=float(lower),
                              upper=float(upper), level=1.0 - alpha)


def width_expansion(constants: VstConstants, ratio: float, n: int,
                    alpha: float = 0.05) -> float:
    """First-order expected full width of the two-sided interval:

        W ~ 2 sqrt(q(ratio)) * z_{1-alpha/2} / sqrt(n).
    """
    alpha = special.validate_probability(alpha, "alpha")
    if not n >= 1:
        raise ValueError(f"n must be positive, got n={n}")
    qval = float(constants.quadratic(ratio))
    if qval < 0.0:
        raise ValueError(f"quadratic is negative at ratio={ratio}")
    z = float(special.std_normal_quantile(1.0 - alpha / 2.0))
    return 2.0 * math.sqrt(qval) * z / math.sqrt(n)


@dataclass(frozen=True)
class TestResult:
    """Outcome of a stabilized ratio test.

    reject is |statistic| >= z_critical for the two-sided test and
    statistic >= z_critical for the one-sided ('greater') variant.  ``failed``
    marks results where estimation itself broke down (ties or a degenerate
    quadratic); those never reject and carry NaN statistics.
    """

    statistic: float
    z_critical: float
    reject: bool
    p_value: float
    level: float
    alternative: str = "two-sided"
    failed: bool = False


def kurtosis_test(constants: VstConstants, n: int, ratio_null: float,
                  estimate: float, level: float = 0.05,
                  alternative: str = "two-sided") -> TestResult:
    """Test H0: ratio = ratio_null using the stabilized statistic.

    alternative='two-sided' rejects for |T| >= z_{1-level/2};
    alternative='greater' rejects for T >= z_{1-level} (peaked/heavy side).
    """
    level = float(special.validate_probability(level, "level"))
    t = float(test_statistic(constants, n, ratio_null, estimate))
    if alternative == "two-sided":
        crit = float(special.std_normal_quantile(1.0 - level / 2.0))
        reject = abs(t) >= crit
        p = 2.0 * float(special.std_normal_cdf(-abs(t)))
    elif alternative == "greater":
        crit = float(special.std_normal_quantile(1.0 - level))
        reject = t >= crit
        p = float(special.std_normal_cdf(-t))
    else:
        raise ValueError(f"alternative must be 'two-sided' or 'greater', got {alternative!r}")
    return TestResult(statistic=t, z_critical=crit, reject=bool(reject),
                      p_value=p, level=level, alternative=alternative)


def _failed_test(level: float, alternative: str, critical: float) -> TestResult:
    return TestResult(statistic=float("nan"), z_critical=critical, reject=False,
                      p_value=float("nan"), level=level,
                      alternative=alternative, failed=True)


def peakedness_test(values, q: float, r: float, pi0: float,
                    level: float = 0.05, alternative: str = "two-sided",
                    bandwidth_a: float = DEFAULT_BANDWIDTH_A
                    ) -> TestResult:
    """Distribution-free test of H0: pi_{q,r} = pi0 from a sorted
    sample, with all constants estimated from the data.

    Estimation failures (ties, degenerate quadratic) yield a non-rejecting
    result flagged ``failed=True`` instead of an exception.
    """
    level = float(special.validate_probability(level, "level"))
    if alternative == "two-sided":
        crit = float(special.std_normal_quantile(1.0 - level / 2.0))
    elif alternative == "greater":
        crit = float(special.std_normal_quantile(1.0 - level))
    else:
        raise ValueError(f"alternative must be 'two-sided' or 'greater', got {alternative!r}")
    try:
        constants = vst_constants_estimated(values, q, r, bandwidth_a=bandwidth_a)
        estimate = kurtosis_estimate(values, q, r)
    except EstimationFailure:
        return _failed_test(level, alternative, crit)
    return kurtosis_test(constants, np.asarray(values).size, pi0,
                         estimate, level=level, alternative=alternative)
