"""Shared fixtures for the test suite.

The Monte Carlo studies used by both the module tests and the acceptance
gate are expensive (minutes in total), so they run once per session here
and are shared.  Every study is fully seeded, so the numbers they produce
are bit-reproducible and several tests pin them exactly.

The acceptance tests additionally register a one-line verdict per
criterion; ``pytest_terminal_summary`` prints the collected report after
the run.
"""

import time

import pytest

from qshape.distributions import CATALOGUE_SPECS, parse_model, shifted_t_mixture
from qshape.measures import horn_extended
from qshape.simulation import StudyConfig, coverage_study, power_study


def symmetric_beta(b):
    return parse_model(f"beta({b!r},{b!r})")


def t_half_mixture(delta):
    return shifted_t_mixture(0.5, delta)


def crossing_delta():
    """Mixture shift at which the extended Horn measure at q=1/4 crosses 0."""
    lo, hi = 1.0, 2.5
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if horn_extended(t_half_mixture(mid), 0.25) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.fixture(scope="session")
def coverage_reference():
    """Reduced-rep coverage studies at the four documented design points.

    Returns ({model: SimulationReport}, elapsed_seconds).
    """
    designs = (
        ("normal", 400, 0.05),
        ("uniform", 1000, 0.10),
        ("cauchy", 400, 0.05),
        ("lognormal", 1000, 0.10),
    )
    t0 = time.perf_counter()
    reports = {}
    for model, n, alpha in designs:
        cfg = StudyConfig(model=model, n=n, reps=2000, alpha=alpha,
                          master_seed=0)
        reports[model] = coverage_study(cfg, n_jobs=1)
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="session")
def uniform_large_sample_report():
    """Uniform n=4000 coverage study (90% intervals, 2000 reps, seed 1)."""
    cfg = StudyConfig(model="uniform", n=4000, reps=2000, alpha=0.10,
                      master_seed=1)
    return coverage_study(cfg, n_jobs=1)


@pytest.fixture(scope="session")
def power_reference():
    """Reduced-rep power studies for the two alternative families.

    Returns (dict, elapsed_seconds).  Rejection rates depend on the grid
    layout (replicate streams are keyed by grid position), so each entry
    documents its exact grid.
    """
    t0 = time.perf_counter()
    res = {}
    res["beta_flat_200"] = power_study(symmetric_beta, [1.0], n=200,
                                       reps=1000, master_seed=0, n_jobs=1)[0]
    res["beta_third_200"] = power_study(symmetric_beta, [1.0 / 3.0], n=200,
                                        reps=1000, master_seed=0, n_jobs=1)[0]
    res["beta_third_800"] = power_study(symmetric_beta, [1.0 / 3.0], n=800,
                                        reps=1000, master_seed=0, n_jobs=1)[0]
    res["tmix_grid"] = power_study(t_half_mixture, [0.0, 1.5, 3.0, 6.0],
                                   n=200, reps=1000, master_seed=0, n_jobs=1)
    dstar = crossing_delta()
    res["delta_star"] = dstar
    res["tmix_crossing"] = power_study(t_half_mixture, [dstar, 3.0], n=200,
                                       reps=1000, master_seed=0, n_jobs=1)
    return res, time.perf_counter() - t0


@pytest.fixture(scope="session")
def catalogue_reports():
    """Coverage studies for every catalogue model at n=100 and n=4000.

    Returns {spec: (report_n100, report_n4000)}.  This is the most
    expensive fixture in the suite (a few minutes on one core).
    """
    out = {}
    for spec in CATALOGUE_SPECS:
        small = coverage_study(StudyConfig(model=spec, n=100, reps=2000,
                                           alpha=0.05, master_seed=0),
                               n_jobs=1)
        big = coverage_study(StudyConfig(model=spec, n=4000, reps=2000,
                                         alpha=0.05, master_seed=0),
                             n_jobs=1)
        out[spec] = (small, big)
    return out


_ACCEPTANCE_REPORT = {}


@pytest.fixture(scope="session")
def acceptance_record():
    """Callable for acceptance tests to register their printed verdict."""

    def record(number, label, ok, detail):
        _ACCEPTANCE_REPORT[number] = (label, bool(ok), detail)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_REPORT:
        return
    terminalreporter.section("acceptance report")
    for number in sorted(_ACCEPTANCE_REPORT):
        label, ok, detail = _ACCEPTANCE_REPORT[number]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"acceptance {number} [{verdict}] {label}: {detail}")
