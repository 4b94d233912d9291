"""Seeded Monte Carlo studies: interval coverage and test power.

Determinism contract: every replicate i draws from its own child stream
``SeedSequence(master_seed, spawn_key=(i,))`` (grid point g of a power study
uses ``spawn_key=(g, i)``), and results are reduced in replicate order.
Hence a study's output — including its CSV rendering — is a pure function of
the configuration, bit-identical across chunk sizes and worker counts.

Replicates are processed in vectorized chunks: a chunk of sorted samples is a
(reps, n) matrix pushed through the batch estimation kernels, with failures
(ties, degenerate quadratics) collected in masks and counted, never raised.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from . import special
from .distributions import open_uniform, parse_model
from .estimation import (DEFAULT_BANDWIDTH_A, _batch_constants,
                         _batch_range)
from .measures import kurtosis_ratio, matched_p

__all__ = [
    "StudyConfig",
    "SimulationReport",
    "PowerPoint",
    "replicate_stream",
    "coverage_study",
    "power_study",
    "COVERAGE_CSV_HEADER",
    "POWER_CSV_HEADER",
    "coverage_csv",
    "power_csv",
]

_CHUNK = 512


@dataclass(frozen=True)
class StudyConfig:
    """Configuration of a coverage study; hashable and picklable.

    ``p`` defaults to matched_p(r) so the target ratio is the calibrated
    kurtosis.  ``alpha`` is the two-sided miss probability (0.05 for 95%).
    """

    model: str
    n: int
    reps: int
    r: float = 1.0 / 3.0
    p: float | None = None
    alpha: float = 0.05
    master_seed: int = 0
    bandwidth_a: float = DEFAULT_BANDWIDTH_A

    def __post_init__(self):
        if not self.n >= 20:
            raise ValueError(f"n must be at least 20, got {self.n}")
        if not self.reps >= 1:
            raise ValueError(f"reps must be positive, got {self.reps}")
        special.validate_probability(self.alpha, "alpha")
        if not 0.0 < self.r < 0.5:
            raise ValueError(f"r must lie in (0, 1/2), got {self.r}")
        if self.p is None:
            object.__setattr__(self, "p", matched_p(self.r))
        if not 0.0 < self.p < self.r:
            raise ValueError(f"need 0 < p < r, got p={self.p}, r={self.r}")
        if int(self.n * self.p) < 1:
            raise ValueError(f"n*p must be at least 1, got n={self.n}, p={self.p}")


@dataclass(frozen=True)
class SimulationReport:
    """Aggregates of a coverage study; failures + reps_effective = reps.

    coverage, mean_estimate and mean_rw_asym_hat are computed over the
    non-failed replicates.  mean_rw_asym_hat averages the per-replicate
    implied asymptotic relative width sqrt(n) * (upper-lower) / (estimate *
    z_{1-alpha/2}), which converges to the population rw_asym value.
    """

    model: str
    n: int
    level: float
    true_ratio: float
    mean_estimate: float
    coverage: float
    mean_rw_asym_hat: float
    failures: int
    reps_effective: int
    master_seed: int


@dataclass(frozen=True)
class PowerPoint:
    """Rejection rate of the peakedness test at one grid value."""

    parameter: float
    rejection_rate: float
    failures: int
    reps_effective: int


def replicate_stream(master_seed: int, *key: int) -> np.random.Generator:
    """The RNG for one replicate, independent of scheduling/chunking."""
    return np.random.default_rng(np.random.SeedSequence(master_seed, spawn_key=key))


def _sorted_samples(model, n: int, master_seed: int, indices, prefix=()) -> np.ndarray:
    u = np.empty((len(indices), n))
    for row, i in enumerate(indices):
        u[row] = open_uniform(replicate_stream(master_seed, *prefix, i), n)
    x = np.asarray(model.quantile(u), dtype=float)
    x.sort(axis=1)
    return x


def _chunks(reps: int, size: int):
    return [range(lo, min(lo + size, reps)) for lo in range(0, reps, size)]


def _coverage_chunk(cfg: StudyConfig, true_ratio: float, c_alpha: float, indices):
    model = parse_model(cfg.model)
    rows = _sorted_samples(model, cfg.n, cfg.master_seed, indices)
    rp = _batch_range(rows, cfg.p)
    rr = _batch_range(rows, cfg.r)
    a0, a1, a2, failed = _batch_constants(rows, cfg.p, cfg.r, cfg.bandwidth_a)
    failed = failed | (rr <= 0.0)
    ok = ~failed
    with np.errstate(all="ignore"):
        est = np.where(rr > 0.0, rp / np.where(rr > 0.0, rr, 1.0), np.nan)
        d = np.sqrt(np.abs(4.0 * a0 * a2 - a1 * a1))
        centre = np.arcsinh((a1 + 2.0 * a2 * est) / np.where(d > 0.0, d, 1.0))
        step = c_alpha * np.sqrt(np.abs(a2) / cfg.n)
        lower = (d * np.sinh(centre - step) - a1) / (2.0 * a2)
        upper = (d * np.sinh(centre + step) - a1) / (2.0 * a2)
        rw_hat = np.sqrt(cfg.n) * (upper - lower) / (est * c_alpha)
    covered = ok & (lower <= true_ratio) & (true_ratio <= upper)
    return (float(np.sum(np.where(ok, est, 0.0))),
            float(np.sum(np.where(ok, rw_hat, 0.0))),
            int(np.count_nonzero(covered)),
            int(np.count_nonzero(ok)),
            int(np.count_nonzero(failed)))


def coverage_study(cfg: StudyConfig, n_jobs: int = 1,
                   chunk_size: int = _CHUNK) -> SimulationReport:
    """Estimate the coverage of the stabilized interval under cfg.model.

    Each replicate draws n points, estimates the ratio and its interval, and
    checks whether the interval contains the exact population ratio.  Chunked
    and optionally process-parallel; results are identical either way.
    """
    model = parse_model(cfg.model)
    true_ratio = kurtosis_ratio(model, cfg.p, cfg.r)
    c_alpha = float(special.std_normal_quantile(1.0 - cfg.alpha / 2.0))
    work = partial(_coverage_chunk, cfg, true_ratio, c_alpha)
    parts = _map_chunks(work, _chunks(cfg.reps, chunk_size), n_jobs)

    sum_est = sum_rw = 0.0
    covered = effective = failures = 0
    for p_est, p_rw, p_cov, p_eff, p_fail in parts:
        sum_est += p_est
        sum_rw += p_rw
        covered += p_cov
        effective += p_eff
        failures += p_fail
    if effective == 0:
        raise RuntimeError("all replicates failed; nothing to report")
    return SimulationReport(
        model=cfg.model, n=cfg.n, level=1.0 - cfg.alpha, true_ratio=true_ratio,
        mean_estimate=sum_est / effective, coverage=covered / effective,
        mean_rw_asym_hat=sum_rw / effective, failures=failures,
        reps_effective=effective, master_seed=cfg.master_seed)


def _power_chunk(model, n: int, q: float, r: float, pi0: float,
                 crit: float, master_seed: int, bandwidth_a: float,
                 grid_index: int, indices):
    rows = _sorted_samples(model, n, master_seed, indices, prefix=(grid_index,))
    rq = _batch_range(rows, q)
    rr = _batch_range(rows, r)
    a0, a1, a2, failed = _batch_constants(rows, q, r, bandwidth_a)
    failed = failed | (rr <= 0.0)
    ok = ~failed
    with np.errstate(all="ignore"):
        est = rq / np.where(rr > 0.0, rr, 1.0)
        d = np.sqrt(np.abs(4.0 * a0 * a2 - a1 * a1))
        safe_d = np.where(d > 0.0, d, 1.0)
        key = (np.arcsinh((a1 + 2.0 * a2 * est) / safe_d)
               - np.arcsinh((a1 + 2.0 * a2 * pi0) / safe_d)) / np.sqrt(np.abs(a2))
        stat = np.sqrt(n) * key
    reject = ok & (np.abs(stat) >= crit)
    return (int(np.count_nonzero(reject)), int(np.count_nonzero(ok)),
            int(np.count_nonzero(failed)))


def power_study(family, grid, n: int, reps: int, q: float = 0.25,
                r: float = 0.375, pi0: float = 2.0, level: float = 0.05,
                master_seed: int = 0,
                bandwidth_a: float = DEFAULT_BANDWIDTH_A,
                n_jobs: int = 1, chunk_size: int = _CHUNK) -> list[PowerPoint]:
    """Rejection rate of the two-sided peakedness test along a parameter grid.

    ``family`` maps a grid value to a model (or to its textual spec).  The
    default tail areas (q, r) = (1/4, 3/8) with pi0 = 2 target the
    uniform-versus-bimodal peakedness regime.  Failures count separately and
    never reject.
    """
    if not reps >= 1:
        raise ValueError(f"reps must be positive, got {reps}")
    if not 0.0 < q < r < 0.5:
        raise ValueError(f"need 0 < q < r < 1/2, got q={q}, r={r}")
    level = float(special.validate_probability(level, "level"))
    crit = float(special.std_normal_quantile(1.0 - level / 2.0))
    points = []
    for g, param in enumerate(grid):
        made = family(param)
        model = parse_model(made) if isinstance(made, str) else made
        work = partial(_power_chunk, model, n, q, r, pi0, crit,
                       master_seed, bandwidth_a, g)
        parts = _map_chunks(work, _chunks(reps, chunk_size), n_jobs)
        rejects = effective = failures = 0
        for p_rej, p_eff, p_fail in parts:
            rejects += p_rej
            effective += p_eff
            failures += p_fail
        rate = rejects / effective if effective else float("nan")
        points.append(PowerPoint(parameter=float(param), rejection_rate=rate,
                                 failures=failures, reps_effective=effective))
    return points


def _map_chunks(work, chunks, n_jobs: int):
    if n_jobs <= 1 or len(chunks) <= 1:
        return [work(c) for c in chunks]
    with ProcessPoolExecutor(max_workers=n_jobs) as pool:
        return list(pool.map(work, chunks))


# ---------------------------------------------------------------------------
# CSV rendering (fixed headers; consumed by the command-line tool)

COVERAGE_CSV_HEADER = "model,n,level,mean_kappa,coverage,rw_hat,failures"
POWER_CSV_HEADER = "x,rejection_rate,failures"


def coverage_csv(reports) -> str:
    """One row per report under COVERAGE_CSV_HEADER; deterministic formatting."""
    lines = [COVERAGE_CSV_HEADER]
    for rep in reports:
        lines.append(f"{rep.model},{rep.n},{rep.level:.4f},"
                     f"{rep.mean_estimate:.6f},{rep.coverage:.6f},"
                     f"{rep.mean_rw_asym_hat:.6f},{rep.failures}")
    return "\n".join(lines) + "\n"


def power_csv(points, x_of_parameter=None) -> str:
    """One row per grid point under POWER_CSV_HEADER.

    ``x_of_parameter`` optionally re-expresses the grid parameter on the
    published x-axis (e.g. beta -> beta/(beta+1)); identity by default.
    """
    lines = [POWER_CSV_HEADER]
    for pt in points:
        x = pt.parameter if x_of_parameter is None else x_of_parameter(pt.parameter)
        lines.append(f"{x:.6f},{pt.rejection_rate:.6f},{pt.failures}")
    return "\n".join(lines) + "\n"
