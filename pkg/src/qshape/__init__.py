"""qshape: quantile-based kurtosis, peakedness and tail weight.

Exact population values over a 20-model catalogue, distribution-free
estimation with variance-stabilized confidence intervals and tests, and a
seeded Monte Carlo harness for coverage and power studies.
"""

from .distributions import (Affine, Beta, Cauchy, ChiSquared, Distribution,
                            Laplace, Logistic, LogNormal, Mixture, Normal,
                            ParetoTwo, SkewT, StudentT, Uniform,
                            CATALOGUE_SPECS, catalogue, parse_model,
                            shifted_t_mixture)
from .estimation import (DegenerateTies, EstimationFailure,
                         NegativeDiscriminant, SingularModelError,
                         VstConstants, bandwidth, kurtosis_estimate,
                         sample_interquantile_range, sparsity_estimate,
                         vst_constants_estimated, vst_constants_theoretical)
from .inference import (ConfidenceInterval, TestResult, confidence_interval,
                        key_function, kurtosis_test, peakedness_test,
                        test_statistic, vst_transform, width_expansion)
from .measures import (QuantileTriple, ShapeSummary, asymptotic_width,
                       horn_approx, horn_extended, interquantile_range,
                       kurtosis_ratio, matched_p, practical_tail_index,
                       required_sample_size, shape_summary, tau_from_indices)
from .simulation import (PowerPoint, SimulationReport, StudyConfig,
                         coverage_csv, coverage_study, power_csv, power_study,
                         replicate_stream)

__version__ = "0.1.0"

__all__ = [
    "Affine", "Beta", "Cauchy", "ChiSquared", "Distribution", "Laplace",
    "Logistic", "LogNormal", "Mixture", "Normal", "ParetoTwo", "SkewT",
    "StudentT", "Uniform", "CATALOGUE_SPECS", "catalogue", "parse_model",
    "shifted_t_mixture",
    "DegenerateTies", "EstimationFailure", "NegativeDiscriminant",
    "SingularModelError", "VstConstants", "bandwidth", "kurtosis_estimate",
    "sample_interquantile_range", "sparsity_estimate",
    "vst_constants_estimated", "vst_constants_theoretical",
    "ConfidenceInterval", "TestResult", "confidence_interval", "key_function",
    "kurtosis_test", "peakedness_test", "test_statistic", "vst_transform",
    "width_expansion",
    "QuantileTriple", "ShapeSummary", "asymptotic_width", "horn_approx",
    "horn_extended", "interquantile_range", "kurtosis_ratio", "matched_p",
    "practical_tail_index", "required_sample_size", "shape_summary",
    "tau_from_indices",
    "PowerPoint", "SimulationReport", "StudyConfig", "coverage_csv",
    "coverage_study", "power_csv", "power_study", "replicate_stream",
    "__version__",
]
