"""Reference values for the twenty-model catalogue, shared across tests.

Three-decimal population values (kurtosis ratios, shape summaries,
stabilization constants and widths) cross-checked against closed forms
and independent quadrature before being frozen here.  Keys follow the
catalogue's canonical model-spec strings.
"""

# kurtosis_ratio(model, matched_p(r), r) for r = 0.3, 1/3, 0.35, 0.4.
KURTOSIS_RS = (0.3, 1.0 / 3.0, 0.35, 0.4)
KURTOSIS_REF = {
    "beta(0.5,0.5)": (1.673, 1.906, 2.038, 2.470),
    "uniform":       (2.211, 2.411, 2.508, 2.764),
    "beta(2,2)":     (2.588, 2.709, 2.762, 2.892),
    "normal":        (3.000, 3.000, 3.000, 3.000),
    "logistic":      (3.294, 3.200, 3.160, 3.070),
    "t(5)":          (3.399, 3.260, 3.205, 3.086),
    "t(4)":          (3.523, 3.337, 3.265, 3.110),
    "t(2)":          (4.340, 3.820, 3.631, 3.250),
    "laplace":       (4.223, 4.016, 3.913, 3.606),
    "cauchy":        (7.492, 5.438, 4.787, 3.635),
    "beta(2,1)":     (2.527, 2.661, 2.722, 2.872),
    "chisq(5)":      (3.088, 3.060, 3.048, 3.021),
    "chisq(3)":      (3.167, 3.113, 3.091, 3.039),
    "chisq(2)":      (3.293, 3.200, 3.161, 3.070),
    "chisq(1)":      (3.881, 3.625, 3.511, 3.232),
    "lognormal":     (4.205, 3.789, 3.624, 3.262),
    "skewt(2,2)":    (4.340, 3.820, 3.631, 3.250),
    "pareto2":       (4.961, 4.216, 3.941, 3.377),
    "skewt(2,1)":    (7.492, 5.438, 4.787, 3.635),
    "skewt(2,0.5)":  (30.452, 14.033, 10.189, 4.984),
}

# (pi, tau, kappa) for the triple (1/8, 1/4, 3/8), then for the
# normal-matched triple (0.09815, 0.1586553, 1/3).
SHAPE_TRIPLE_A = (0.125, 0.25, 0.375)
SHAPE_TRIPLE_B = (0.09815, 0.1586553, 1.0 / 3.0)
SHAPE_REF = {
    "beta(0.5,0.5)": (1.848, 1.307, 2.414,   1.757, 1.085, 1.906),
    "uniform":       (2.000, 1.500, 3.000,   2.048, 1.177, 2.411),
    "beta(2,2)":     (2.064, 1.606, 3.316,   2.193, 1.235, 2.709),
    "normal":        (2.117, 1.706, 3.610,   2.322, 1.292, 3.000),
    "logistic":      (2.151, 1.771, 3.809,   2.407, 1.330, 3.200),
    "t(5)":          (2.158, 1.790, 3.864,   2.429, 1.342, 3.260),
    "t(4)":          (2.170, 1.815, 3.938,   2.460, 1.357, 3.337),
    "t(2)":          (2.236, 1.964, 4.392,   2.643, 1.446, 3.820),
    "laplace":       (2.409, 2.000, 4.819,   2.831, 1.418, 4.015),
    "cauchy":        (2.414, 2.414, 5.828,   3.182, 1.709, 5.438),
    "beta(2,1)":     (2.054, 1.590, 3.265,   2.170, 1.226, 2.661),
    "chisq(5)":      (2.127, 1.725, 3.669,   2.347, 1.304, 3.060),
    "chisq(3)":      (2.136, 1.743, 3.722,   2.370, 1.314, 3.113),
    "chisq(2)":      (2.151, 1.771, 3.809,   2.407, 1.330, 3.200),
    "chisq(1)":      (2.229, 1.906, 4.249,   2.595, 1.397, 3.625),
    "lognormal":     (2.243, 1.956, 4.386,   2.646, 1.432, 3.789),
    "skewt(2,2)":    (2.236, 1.964, 4.392,   2.643, 1.446, 3.820),
    "pareto2":       (2.296, 2.081, 4.780,   2.800, 1.506, 4.216),
    "skewt(2,1)":    (2.414, 2.414, 5.828,   3.182, 1.709, 5.438),
    "skewt(2,0.5)":  (2.996, 4.222, 12.649,  5.329, 2.633, 14.033),
}

# (kappa, a0, a1, a2, w_asym, rw_asym) at r = 1/3, p = matched_p(1/3).
# The laplace row is internally inconsistent with the kurtosis reference
# above (it corresponds to kappa = 3.200, not the laplace value 4.016) and
# is excluded from golden comparisons; the library's own laplace values are
# pinned against the closed form in test_measures instead.
VST_REF = {
    "beta(0.5,0.5)": (1.906, 0.143, -0.339, 1.645, 4.678, 2.455),
    "uniform":       (2.411, 1.420, -1.178, 2.000, 6.390, 2.650),
    "beta(2,2)":     (2.709, 3.512, -1.919, 2.146, 7.499, 2.770),
    "normal":        (3.000, 7.094, -2.802, 2.265, 8.735, 2.912),
    "logistic":      (3.200, 10.478, -3.462, 2.342, 9.670, 3.022),
    "t(5)":          (3.260, 11.882, -3.699, 2.358, 9.975, 3.060),
    "t(4)":          (3.337, 13.646, -3.986, 2.384, 10.371, 3.108),
    "t(2)":          (3.820, 28.436, -5.930, 2.531, 13.073, 3.422),
    "laplace":       (3.200, 20.049, -5.772, 3.752, 12.648, 3.953),
    "cauchy":        (5.438, 137.680, -14.024, 2.924, 24.323, 4.473),
    "beta(2,1)":     (2.661, 4.088, -2.261, 2.311, 7.599, 2.856),
    "chisq(5)":      (3.060, 10.939, -3.931, 2.543, 9.532, 3.115),
    "chisq(3)":      (3.113, 14.104, -4.857, 2.773, 10.171, 3.267),
    "chisq(2)":      (3.200, 18.899, -6.244, 3.122, 11.115, 3.474),
    "chisq(1)":      (3.625, 41.492, -12.353, 4.660, 15.226, 4.200),
    "lognormal":     (3.789, 49.077, -11.552, 3.811, 15.495, 4.089),
    "skewt(2,2)":    (3.820, 54.245, -12.480, 3.943, 16.014, 4.192),
    "pareto2":       (4.216, 90.352, -17.572, 4.496, 19.616, 4.652),
    "skewt(2,1)":    (5.438, 282.221, -32.651, 4.963, 31.712, 5.831),
    "skewt(2,0.5)":  (14.033, 6958.645, -218.133, 8.456, 149.167, 10.630),
}

# Full-precision normal-matched outer tail area for r = 1/3.
MATCHED_P_THIRD = 0.09814707954362317


def check_kurtosis_cell(got: float, want: float) -> bool:
    """Tolerance rule for the kurtosis reference: +/-0.002 absolute up to
    10, 0.1% relative above (the 3-decimal print loses absolute accuracy
    there)."""
    if want <= 10.0:
        return abs(got - want) <= 0.002
    return abs(got - want) <= 0.001 * want


def check_shape_cell(got: float, want: float) -> bool:
    """Shape-summary cells: +/-0.002 (relative above 10)."""
    if want <= 10.0:
        return abs(got - want) <= 0.002
    return abs(got - want) <= 0.0002 * want


def check_vst_cell(got: float, want: float) -> bool:
    """Constant/width cells: 0.5% relative."""
    return abs(got - want) <= 0.005 * abs(want)
