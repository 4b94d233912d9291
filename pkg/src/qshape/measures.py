"""Population (exact) quantile-based shape measures.

Everything here is evaluated from a model's quantile function, so values are
exact up to the root-finding tolerance of the quantile itself — no sampling
is involved.  The central object is the interquantile-range ratio

    kurtosis_ratio(model, p, r) = R_p / R_r,   R_t = Q(1-t) - Q(t),

for 0 < p < r < 1/2, together with its peakedness/tail-weight factorization
and a few companions: the extended mode-flatness index, practical tail
indices, and asymptotic interval-width summaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import special
from .distributions import Distribution

__all__ = [
    "interquantile_range",
    "matched_p",
    "kurtosis_ratio",
    "QuantileTriple",
    "ShapeSummary",
    "shape_summary",
    "horn_extended",
    "horn_approx",
    "practical_tail_index",
    "tau_from_indices",
    "asymptotic_width",
    "required_sample_size",
]


def _check_half_open(t: float, name: str) -> float:
    t = float(t)
    if not 0.0 < t < 0.5:
        raise ValueError(f"{name} must lie strictly in (0, 1/2), got {t}")
    return t


def interquantile_range(model: Distribution, t: float) -> float:
    """R_t = Q(1-t) - Q(t), the central interquantile range at tail area t."""
    t = _check_half_open(t, "t")
    return float(model.quantile(1.0 - t)) - float(model.quantile(t))


def matched_p(r: float) -> float:
    """The outer tail area p(r) = Phi(3 Phi^{-1}(r)) that calibrates the ratio
    R_p / R_r to exactly 3 for every normal distribution."""
    r = _check_half_open(r, "r")
    return float(special.std_normal_cdf(3.0 * special.std_normal_quantile(r)))


def kurtosis_ratio(model: Distribution, p: float, r: float) -> float:
    """Quantile kurtosis R_p / R_r for tail areas 0 < p < r < 1/2.

    Location/scale free; equals 3 at the normal when p = matched_p(r).
    """
    p = _check_half_open(p, "p")
    r = _check_half_open(r, "r")
    if not p < r:
        raise ValueError(f"need p < r, got p={p}, r={r}")
    return interquantile_range(model, p) / interquantile_range(model, r)


@dataclass(frozen=True)
class QuantileTriple:
    """Ordered tail areas 0 < p < q < r < 1/2 used by the factorization."""

    p: float
    q: float
    r: float

    def __post_init__(self):
        if not 0.0 < self.p < self.q < self.r < 0.5:
            raise ValueError(
                f"tail areas must satisfy 0 < p < q < r < 1/2, got "
                f"({self.p}, {self.q}, {self.r})")


@dataclass(frozen=True)
class ShapeSummary:
    """Kurtosis kappa = R_p/R_r with its exact factorization into peakedness
    pi = R_q/R_r and tail weight tau = R_p/R_q; all three are >= 1."""

    kappa: float
    pi: float
    tau: float


def shape_summary(model: Distribution, triple: QuantileTriple) -> ShapeSummary:
    """Evaluate the peakedness/tail-weight factorization at a quantile triple."""
    rp = interquantile_range(model, triple.p)
    rq = interquantile_range(model, triple.q)
    rr = interquantile_range(model, triple.r)
    pi = rq / rr
    tau = rp / rq
    return ShapeSummary(kappa=pi * tau, pi=pi, tau=tau)


def horn_extended(model: Distribution, q: float) -> float:
    """Extended mode-flatness peakedness index in [-1, 1].

    Compares the density at the median with the uniform density over the
    central interquantile range R_q: with A = f(median) * R_q and the
    reference mass 1 - 2q,

        A <= 1 - 2q:  A / (1 - 2q) - 1      (flat-topped, down to -1)
        A >  1 - 2q:  1 - (1 - 2q) / A      (peaked, up to +1)

    Returns exactly -1 when the density vanishes at the median and exactly
    +1 when it is unbounded there.
    """
    q = _check_half_open(q, "q")
    f_med = float(model.density(model.median()))
    if math.isinf(f_med):
        return 1.0
    if f_med < 0.0 or math.isnan(f_med):
        raise ValueError(f"model density at the median is invalid: {f_med}")
    area = f_med * interquantile_range(model, q)
    if area == 0.0:
        return -1.0
    flat = 1.0 - 2.0 * q
    if area <= flat:
        return area / flat - 1.0
    return 1.0 - flat / area


def horn_approx(model: Distribution, q: float, r: float) -> float:
    """Density-free approximation of horn_extended built from the peakedness
    ratio: substitutes (1-2r)/R_r for the median density, giving

        ratio = ((1-2r)/(1-2q)) * (R_q/R_r)

    folded into [-1, 1] exactly as in horn_extended.  Requires q < r.
    """
    q = _check_half_open(q, "q")
    r = _check_half_open(r, "r")
    if not q < r:
        raise ValueError(f"need q < r, got q={q}, r={r}")
    scale = (1.0 - 2.0 * r) / (1.0 - 2.0 * q)
    ratio = scale * interquantile_range(model, q) / interquantile_range(model, r)
    if ratio <= 1.0:
        return ratio - 1.0
    return 1.0 - 1.0 / ratio


def practical_tail_index(model: Distribution, p: float, q: float, side: str) -> float:
    """Finite-quantile tail index over the band between tail areas p < q.

    side='right' uses ln(q/p) / ln(Q(1-p)/Q(1-q)); side='left' uses
    ln(q/p) / ln(Q(p)/Q(q)).  For an exact power tail the index is recovered
    exactly, independent of the band.  Both band quantiles must lie strictly
    on one side of zero; the index comes out negative when the band hugs a
    finite support edge so the less extreme quantile sits farther from zero
    (e.g. the left tail of a distribution supported on [1, inf)).  Raises
    ValueError when the band quantiles straddle or touch zero.
    """
    p = _check_half_open(p, "p")
    q = _check_half_open(q, "q")
    if not p < q:
        raise ValueError(f"need p < q, got p={p}, q={q}")
    if side == "right":
        outer = float(model.quantile(1.0 - p))
        inner = float(model.quantile(1.0 - q))
    elif side == "left":
        outer = float(model.quantile(p))
        inner = float(model.quantile(q))
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if inner == 0.0 or outer == 0.0 or (inner < 0.0) != (outer < 0.0):
        raise ValueError(
            f"{side} tail index needs both band quantiles on one side of "
            f"zero, got {outer} and {inner}")
    return math.log(q / p) / math.log(outer / inner)


def tau_from_indices(xq: float, x1q: float, alphaL: float, alphaR: float,
                     p: float, q: float) -> float:
    """Reconstruct tail weight tau_{p,q} from the two practical tail indices:

        tau = [x1q (q/p)^{1/aR} - xq (q/p)^{1/aL}] / (x1q - xq).

    The indices must be finite and nonzero (a negative index is legal and
    arises when the less extreme quantile on a side sits farther from zero,
    e.g. the left tail of a distribution supported on [1, inf)); when the
    indices are jointly consistent with the quantiles the reconstruction is
    an exact identity.
    """
    p = _check_half_open(p, "p")
    q = _check_half_open(q, "q")
    if not p < q:
        raise ValueError(f"need p < q, got p={p}, q={q}")
    if not x1q > xq:
        raise ValueError(f"need x1q > xq, got xq={xq}, x1q={x1q}")
    for name, a in (("alphaL", alphaL), ("alphaR", alphaR)):
        if a == 0.0 or not math.isfinite(a):
            raise ValueError(f"{name} must be finite and nonzero, got {a}")
    ratio = q / p
    return (x1q * ratio ** (1.0 / alphaR)
            - xq * ratio ** (1.0 / alphaL)) / (x1q - xq)


def asymptotic_width(constants, kappa: float) -> tuple[float, float]:
    """(w, w/kappa): the asymptotic interval-width factor 2*sqrt(q(kappa)) of
    the variance-stabilized estimator and its relative version.

    ``constants`` is a VstConstants-like object exposing quadratic(); the full
    expected width of a two-sided interval is w * z_{1-alpha/2} / sqrt(n).
    """
    qval = float(constants.quadratic(kappa))
    if qval < 0.0:
        raise ValueError(f"quadratic is negative at kappa={kappa}: {qval}")
    w = 2.0 * math.sqrt(qval)
    return w, w / kappa


def required_sample_size(alpha: float, target_rw: float,
                         max_rw_asym: float) -> int:
    """Smallest n for which the worst-case asymptotic relative interval width
    at confidence 1-alpha is at most target_rw:

        n0 = ceil( (max_rw_asym * z_{1-alpha/2} / target_rw)^2 ).
    """
    alpha = special.validate_probability(alpha, "alpha")
    if not target_rw > 0.0:
        raise ValueError(f"target relative width must be positive, got {target_rw}")
    if not max_rw_asym > 0.0:
        raise ValueError(f"max relative width must be positive, got {max_rw_asym}")
    z = special.std_normal_quantile(1.0 - alpha / 2.0)
    root = max_rw_asym * z / target_rw
    return int(math.ceil(root * root))
