"""Distribution-free estimation from a single sample.

Order-statistic plug-ins for the interquantile ranges and their ratio, a
difference-quotient sparsity estimator, and the three quadratic coefficients
(a0, a1, a2) that drive the variance-stabilizing transformation.  All public
entry points take a sorted 1-D sample; ``numpy.sort`` the data first.

Estimation can fail on pathological samples (massive ties, or an estimated
quadratic with nonpositive discriminant).  Failures are first-class: they
raise typed exceptions that simulation code catches and counts rather than
aborting a study.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EstimationFailure",
    "DegenerateTies",
    "NegativeDiscriminant",
    "SingularModelError",
    "VstConstants",
    "MIN_SAMPLE",
    "DEFAULT_BANDWIDTH_A",
    "bandwidth",
    "sample_interquantile_range",
    "kurtosis_estimate",
    "sparsity_estimate",
    "vst_constants_theoretical",
    "vst_constants_estimated",
]

# Minimum data-file size for the CLI pipeline; the order-statistic
# operations themselves only need their index preconditions (n*t >= 1).
MIN_SAMPLE = 20

# Guard against floating error when n*t is mathematically an integer
# (e.g. n = 12, t = 1/3): nudge before taking floor/ceil.
_INDEX_FUZZ = 1e-9


class EstimationFailure(Exception):
    """Base class for data-driven estimation failures (counted, not fatal)."""


class DegenerateTies(EstimationFailure):
    """An order-statistic difference needed in a denominator was zero."""


class NegativeDiscriminant(EstimationFailure):
    """The estimated quadratic has 4*a0*a2 - a1^2 <= 0, so the transform
    is undefined for this sample."""


class SingularModelError(ValueError):
    """A population quantity needed for the asymptotics is degenerate
    (zero or infinite sparsity at a required quantile)."""


@dataclass(frozen=True)
class VstConstants:
    """Coefficients of the asymptotic variance quadratic q(t) = a0 + a1 t + a2 t^2.

    sqrt(n) * (ratio estimate - ratio) is asymptotically N(0, q(ratio)).
    a0 and a2 are positive whenever the defining sparsities are; a1 is
    typically negative.  Degenerate instances (a2 = 0) are representable —
    width summaries remain meaningful — but the transform itself additionally
    requires d2 > 0, which its consumers check at the call site.
    """

    a0: float
    a1: float
    a2: float

    def __post_init__(self):
        if not self.a0 > 0.0:
            raise ValueError(f"a0 must be positive, got {self.a0}")
        if self.a2 < 0.0:
            raise ValueError(f"a2 must be nonnegative, got {self.a2}")
        for name, v in (("a0", self.a0), ("a1", self.a1), ("a2", self.a2)):
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")

    def quadratic(self, t):
        """q(t) = a0 + a1 t + a2 t^2."""
        t = np.asarray(t, dtype=float)
        out = self.a0 + self.a1 * t + self.a2 * t * t
        return out if out.ndim else float(out)

    def quadratic_slope(self, t):
        """q'(t) = a1 + 2 a2 t."""
        t = np.asarray(t, dtype=float)
        out = self.a1 + 2.0 * self.a2 * t
        return out if out.ndim else float(out)

    @property
    def d2(self) -> float:
        """D^2 = 4 a0 a2 - a1^2; positive iff q has no real root."""
        return 4.0 * self.a0 * self.a2 - self.a1 * self.a1


# Default tuning constant for the sparsity bandwidth b = a * n^(-1/5).
# Calibrated against the desk-scale coverage studies: large windows reach
# into the extreme order statistics of heavy-tailed samples (at n = 400 and
# a = 0.5 the lower edge of the p-window is the sample minimum), which
# inflates the estimated constants and pushes coverage to 1.  a = 0.08 keeps
# every reference-model coverage band on target from n = 400 up.
DEFAULT_BANDWIDTH_A = 0.08


def bandwidth(n: int, a: float = DEFAULT_BANDWIDTH_A) -> float:
    """Sparsity bandwidth b = a * n^(-1/5); a is a tuning constant."""
    if not n >= 1:
        raise ValueError(f"n must be positive, got {n}")
    if not a > 0.0:
        raise ValueError(f"bandwidth constant must be positive, got {a}")
    return a * float(n) ** -0.2


def _validate_sorted(values) -> np.ndarray:
    v = np.asarray(values, dtype=float)
    if v.ndim != 1:
        raise ValueError(f"expected a 1-D sample, got shape {v.shape}")
    if v.size < 2:
        raise ValueError(f"need at least 2 observations, got {v.size}")
    if np.any(np.diff(v) < 0.0):
        raise ValueError("sample must be sorted ascending")
    if not np.all(np.isfinite(v)):
        raise ValueError("sample contains non-finite values")
    return v


def _floor_index(n: int, t: float) -> int:
    """1-based order-statistic index [n t] (floor), with float-fuzz guard."""
    return int(math.floor(n * t + _INDEX_FUZZ))


def _ceil_index(n: int, t: float) -> int:
    """1-based order-statistic index ceil(n t), clamped to [1, n]."""
    k = int(math.ceil(n * t - _INDEX_FUZZ))
    return min(max(k, 1), n)


def sample_interquantile_range(values, t: float) -> float:
    """Plug-in estimate of R_t from a sorted sample:

        X_(n - m + 1) - X_(m),   m = [n t]  (1-based, no interpolation).

    Requires n*t >= 1 so the index exists; t < 1/2.
    """
    v = _validate_sorted(values)
    n = v.size
    if not 0.0 < t < 0.5:
        raise ValueError(f"t must lie in (0, 1/2), got {t}")
    m = _floor_index(n, t)
    if m < 1:
        raise ValueError(f"n*t must be at least 1, got n={n}, t={t}")
    return float(v[n - m] - v[m - 1])


def kurtosis_estimate(values, p: float, r: float) -> float:
    """Plug-in interquantile-range ratio R_p-hat / R_r-hat.

    Raises DegenerateTies if the inner range is zero (the ratio is undefined).
    """
    if not p < r:
        raise ValueError(f"need p < r, got p={p}, r={r}")
    rp = sample_interquantile_range(values, p)
    rr = sample_interquantile_range(values, r)
    if rr == 0.0:
        raise DegenerateTies(f"inner interquantile range at r={r} is zero (tied sample)")
    return rp / rr


def sparsity_estimate(values, t: float, bandwidth: float) -> float:
    """Difference-quotient estimate of the sparsity g(t) = 1/f(Q(t)):

        ( X_(ceil(n(t+b))) - X_(ceil(n(t-b))) ) / (2 b),

    with indices clamped to [1, n].  Raises DegenerateTies when the order
    statistics tie (zero numerator), which would break downstream ratios.
    """
    v = _validate_sorted(values)
    n = v.size
    if not 0.0 < t < 1.0:
        raise ValueError(f"t must lie in (0, 1), got {t}")
    if not bandwidth > 0.0:
        raise ValueError(f"bandwidth must be positive, got {bandwidth}")
    hi = _ceil_index(n, t + bandwidth)
    lo = _ceil_index(n, t - bandwidth)
    diff = float(v[hi - 1] - v[lo - 1])
    if diff == 0.0:
        raise DegenerateTies(
            f"tied order statistics around t={t} (bandwidth {bandwidth:g})")
    return diff / (2.0 * bandwidth)


def _constants_kernel(rr, g_p, g_r, g_1r, g_1p, p: float, r: float):
    """Shared arithmetic for the quadratic coefficients, broadcasting over
    arrays of ranges/sparsities (used by both the exact and sample paths).

    With g_t the sparsity at tail area t and R_r the inner range,

      R_r^2 a0 = p (g_p^2 + g_1p^2) - p^2 (g_p + g_1p)^2
      R_r^2 a1 = 2 [ p r (g_r g_1p + g_p g_1r) - p (1-r) (g_p g_r + g_1p g_1r) ]
      R_r^2 a2 = r (g_r^2 + g_1r^2) - r^2 (g_r + g_1r)^2
    """
    rr2 = rr * rr
    a0 = (p * (g_p * g_p + g_1p * g_1p) - p * p * (g_p + g_1p) ** 2) / rr2
    a1 = 2.0 * (p * r * (g_r * g_1p + g_p * g_1r)
                - p * (1.0 - r) * (g_p * g_r + g_1p * g_1r)) / rr2
    a2 = (r * (g_r * g_r + g_1r * g_1r) - r * r * (g_r + g_1r) ** 2) / rr2
    return a0, a1, a2


def _check_tail_areas(p: float, r: float):
    if not 0.0 < p < r < 0.5:
        raise ValueError(f"tail areas must satisfy 0 < p < r < 1/2, got p={p}, r={r}")


def vst_constants_theoretical(model, p: float, r: float) -> VstConstants:
    """Exact quadratic coefficients for a model, from its population
    quantiles and sparsities at the four tail areas p, r, 1-r, 1-p."""
    _check_tail_areas(p, r)
    g = []
    for t in (p, r, 1.0 - r, 1.0 - p):
        gt = float(model.sparsity(t))
        if not (math.isfinite(gt) and gt > 0.0):
            raise SingularModelError(
                f"sparsity at t={t} is degenerate for {model!r}: {gt}")
        g.append(gt)
    rr = float(model.quantile(1.0 - r)) - float(model.quantile(r))
    a0, a1, a2 = _constants_kernel(rr, *g, p=p, r=r)
    constants = VstConstants(float(a0), float(a1), float(a2))
    if not constants.d2 > 0.0:
        raise SingularModelError(
            f"nonpositive discriminant for {model!r} at (p={p}, r={r})")
    return constants


def vst_constants_estimated(values, p: float, r: float,
                            bandwidth_a: float = DEFAULT_BANDWIDTH_A
                            ) -> VstConstants:
    """Plug-in quadratic coefficients from a sorted sample.

    Sparsities use the difference quotient with b = bandwidth_a * n^(-1/5).
    Raises DegenerateTies on tied order statistics and NegativeDiscriminant
    when the estimated quadratic admits a real root.
    """
    _check_tail_areas(p, r)
    v = _validate_sorted(values)
    b = bandwidth(v.size, bandwidth_a)
    rr = sample_interquantile_range(v, r)
    if rr == 0.0:
        raise DegenerateTies(f"inner interquantile range at r={r} is zero")
    g = [sparsity_estimate(v, t, b) for t in (p, r, 1.0 - r, 1.0 - p)]
    a0, a1, a2 = _constants_kernel(rr, *g, p=p, r=r)
    if not (a0 > 0.0 and a2 > 0.0):
        # only reachable through ties that slipped past the per-point check
        raise DegenerateTies("estimated quadratic degenerated to a line")
    constants = VstConstants(float(a0), float(a1), float(a2))
    if not constants.d2 > 0.0:
        raise NegativeDiscriminant(
            f"estimated discriminant {constants.d2:g} <= 0")
    return constants


# ---------------------------------------------------------------------------
# Batch kernels over matrices of sorted replicate rows.  These mirror the
# scalar estimators exactly (same index conventions) but flag failures in
# masks instead of raising, so a Monte Carlo sweep never aborts.  A test
# pins the row-by-row equivalence of the two paths.

def _batch_range(rows: np.ndarray, t: float) -> np.ndarray:
    n = rows.shape[1]
    m = _floor_index(n, t)
    if m < 1:
        raise ValueError(f"n*t must be at least 1, got n={n}, t={t}")
    return rows[:, n - m] - rows[:, m - 1]


def _batch_sparsity(rows: np.ndarray, t: float, b: float) -> np.ndarray:
    n = rows.shape[1]
    hi = _ceil_index(n, t + b)
    lo = _ceil_index(n, t - b)
    return (rows[:, hi - 1] - rows[:, lo - 1]) / (2.0 * b)


def _batch_constants(rows: np.ndarray, p: float, r: float, bandwidth_a: float):
    """Vectorized (a0, a1, a2, failed) over sorted rows.

    ``failed`` marks rows with tied order statistics or a nonpositive
    discriminant; coefficient values in failed rows are meaningless.
    """
    n = rows.shape[1]
    b = bandwidth(n, bandwidth_a)
    rr = _batch_range(rows, r)
    g = [_batch_sparsity(rows, t, b) for t in (p, r, 1.0 - r, 1.0 - p)]
    ties = (rr <= 0.0)
    for gt in g:
        ties |= (gt <= 0.0)
    safe_rr = np.where(ties, 1.0, rr)
    a0, a1, a2 = _constants_kernel(safe_rr, *g, p=p, r=r)
    disc = 4.0 * a0 * a2 - a1 * a1
    failed = ties | ~(disc > 0.0) | ~(a0 > 0.0) | ~(a2 > 0.0)
    return a0, a1, a2, failed
