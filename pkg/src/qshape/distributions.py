"""Continuous distribution zoo: quantile, CDF, density, sparsity, sampling.

Every model exposes the same closed-form-or-root-found surface; methods
accept scalars or numpy arrays of any shape.  Sampling is always by the
inverse-transform method from a caller-supplied numpy Generator, so a seeded
stream fully determines the draw regardless of the model.

Models are treated as immutable after construction.
"""

from __future__ import annotations

import math
import re

import numpy as np

from . import special

__all__ = [
    "Distribution",
    "Beta",
    "Uniform",
    "Normal",
    "Logistic",
    "Laplace",
    "Cauchy",
    "StudentT",
    "ChiSquared",
    "LogNormal",
    "ParetoTwo",
    "SkewT",
    "Affine",
    "Mixture",
    "shifted_t_mixture",
    "parse_model",
    "catalogue",
    "open_uniform",
    "CATALOGUE_SPECS",
]


def open_uniform(rng: np.random.Generator, n: int):
    """Draw n uniforms strictly inside (0, 1).

    Uses 53-bit integers mapped to (k + 0.5) * 2^-53 so that 0.0 and 1.0 are
    unreachable and every model quantile is finite.
    """
    return (rng.integers(0, 1 << 53, size=n) + 0.5) * 2.0 ** -53


def _fmt(v: float) -> str:
    return f"{v:g}"


class Distribution:
    """Base class; subclasses implement cdf, quantile and density."""

    label: str | None = None

    def cdf(self, x):
        raise NotImplementedError

    def quantile(self, t):
        raise NotImplementedError

    def density(self, x):
        raise NotImplementedError

    def sparsity(self, t):
        """Quantile density g(t) = 1 / f(Q(t)) (the sparsity index)."""
        return 1.0 / self.density(self.quantile(t))

    def sample(self, rng: np.random.Generator, n: int):
        """Inverse-transform sample of size n from the given seeded stream."""
        return self.quantile(open_uniform(rng, n))

    def median(self) -> float:
        return float(self.quantile(0.5))

    def _default_label(self) -> str:
        return type(self).__name__.lower()

    def __repr__(self) -> str:
        return self.label if self.label is not None else self._default_label()


class Uniform(Distribution):
    """Uniform on (0, 1)."""

    def cdf(self, x):
        return np.clip(np.asarray(x, dtype=float), 0.0, 1.0)

    def quantile(self, t):
        t = special.validate_probability(t)
        out = np.array(t, dtype=float, copy=True)
        return out if out.ndim else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        out = np.where((x >= 0.0) & (x <= 1.0), 1.0, 0.0)
        return out if out.ndim else float(out)


class Beta(Distribution):
    """Beta(a, b) on (0, 1)."""

    def __init__(self, a: float, b: float):
        if not (a > 0.0 and b > 0.0):
            raise ValueError(f"beta shape parameters must be positive, got ({a}, {b})")
        self.a = float(a)
        self.b = float(b)
        self._lbeta = special.log_beta(self.a, self.b)

    def cdf(self, x):
        x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
        return special.incomplete_beta(self.a, self.b, x)

    def quantile(self, t):
        t = special.validate_probability(t)
        return special.incomplete_beta_inv(self.a, self.b, t)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        inside = (x > 0.0) & (x < 1.0)
        safe = np.where(inside, x, 0.5)
        vals = np.exp((self.a - 1.0) * np.log(safe)
                      + (self.b - 1.0) * np.log1p(-safe)
                      - self._lbeta)
        out = np.where(inside, vals, 0.0)
        # boundary behaviour depends on the shapes
        left = 0.0 if self.a > 1.0 else (self.b if self.a == 1.0 else np.inf)
        right = 0.0 if self.b > 1.0 else (self.a if self.b == 1.0 else np.inf)
        out = np.where(x == 0.0, left, out)
        out = np.where(x == 1.0, right, out)
        return out if out.ndim else float(out)

    def _default_label(self) -> str:
        return f"beta({_fmt(self.a)},{_fmt(self.b)})"


class Normal(Distribution):
    """Standard normal."""

    def cdf(self, x):
        return special.std_normal_cdf(x)

    def quantile(self, t):
        return special.std_normal_quantile(t)

    def density(self, x):
        return special.std_normal_density(x)


class Logistic(Distribution):
    """Standard logistic (scale 1)."""

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        z = np.exp(-np.abs(x))
        out = np.where(x >= 0.0, 1.0 / (1.0 + z), z / (1.0 + z))
        return out if out.ndim else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        out = np.log(t) - np.log1p(-t)
        return out if np.ndim(out) else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        z = np.exp(-np.abs(x))
        out = z / (1.0 + z) ** 2
        return out if out.ndim else float(out)


class Laplace(Distribution):
    """Standard Laplace (double exponential, scale 1)."""

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = np.where(x < 0.0, 0.5 * np.exp(x), 1.0 - 0.5 * np.exp(-np.abs(x)))
        return out if out.ndim else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        t = np.asarray(t, dtype=float)
        out = np.where(t < 0.5, np.log(2.0 * t), -np.log(2.0 * (1.0 - t)))
        out = np.where(t == 0.5, 0.0, out)
        return out if out.ndim else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        out = 0.5 * np.exp(-np.abs(x))
        return out if out.ndim else float(out)


class Cauchy(Distribution):
    """Standard Cauchy."""

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = 0.5 + np.arctan(x) / np.pi
        return out if out.ndim else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        out = np.tan(np.pi * (np.asarray(t, dtype=float) - 0.5))
        return out if np.ndim(out) else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        out = 1.0 / (np.pi * (1.0 + x * x))
        return out if out.ndim else float(out)


class StudentT(Distribution):
    """Student t with nu > 0 degrees of freedom (fractional nu allowed)."""

    def __init__(self, nu: float):
        if not nu > 0.0:
            raise ValueError(f"degrees of freedom must be positive, got {nu}")
        self.nu = float(nu)
        from scipy.special import gammaln
        self._lognorm = float(gammaln((self.nu + 1.0) / 2.0) - gammaln(self.nu / 2.0)
                              - 0.5 * math.log(self.nu * math.pi))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        z = self.nu / (self.nu + x * x)
        tail = 0.5 * special.incomplete_beta(self.nu / 2.0, 0.5, z)
        out = np.where(x >= 0.0, 1.0 - tail, tail)
        return out if out.ndim else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        t = np.asarray(t, dtype=float)
        upper = t >= 0.5
        u = np.where(upper, 2.0 * (1.0 - t), 2.0 * t)
        z = special.incomplete_beta_inv(self.nu / 2.0, 0.5, u)
        z = np.asarray(z, dtype=float)
        with np.errstate(divide="ignore"):
            mag = np.sqrt(self.nu * (1.0 - z) / z)
        out = np.where(upper, mag, -mag)
        out = np.where(t == 0.5, 0.0, out)
        return out if out.ndim else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        out = np.exp(self._lognorm - 0.5 * (self.nu + 1.0) * np.log1p(x * x / self.nu))
        return out if out.ndim else float(out)

    def _default_label(self) -> str:
        return f"t({_fmt(self.nu)})"


class ChiSquared(Distribution):
    """Chi-squared with nu > 0 degrees of freedom."""

    def __init__(self, nu: float):
        if not nu > 0.0:
            raise ValueError(f"degrees of freedom must be positive, got {nu}")
        self.nu = float(nu)
        from scipy.special import gammaln
        self._lognorm = float(-gammaln(self.nu / 2.0) - (self.nu / 2.0) * math.log(2.0))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = np.where(x > 0.0, special.incomplete_gamma(self.nu / 2.0,
                                                         np.maximum(x, 0.0) / 2.0), 0.0)
        return out if out.ndim else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        out = 2.0 * special.incomplete_gamma_inv(self.nu / 2.0, t)
        return out if np.ndim(out) else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        pos = x > 0.0
        with np.errstate(divide="ignore", invalid="ignore"):
            vals = np.exp(self._lognorm + (self.nu / 2.0 - 1.0) * np.log(np.where(pos, x, 1.0))
                          - np.where(pos, x, 1.0) / 2.0)
        out = np.where(pos, vals, 0.0)
        if self.nu < 2.0:
            out = np.where(x == 0.0, np.inf, out)
        elif self.nu == 2.0:
            out = np.where(x == 0.0, 0.5, out)
        return out if out.ndim else float(out)

    def _default_label(self) -> str:
        return f"chisq({_fmt(self.nu)})"


class LogNormal(Distribution):
    """Standard lognormal: exp(Z), Z standard normal."""

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        pos = x > 0.0
        out = np.where(pos, special.std_normal_cdf(np.log(np.where(pos, x, 1.0))), 0.0)
        return out if out.ndim else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        out = np.exp(special.std_normal_quantile(t))
        return out if np.ndim(out) else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        pos = x > 0.0
        safe = np.where(pos, x, 1.0)
        out = np.where(pos, special.std_normal_density(np.log(safe)) / safe, 0.0)
        return out if out.ndim else float(out)


class ParetoTwo(Distribution):
    """Pareto with tail index 2: F(x) = 1 - x^-2 on x >= 1."""

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        out = np.where(x >= 1.0, 1.0 - np.where(x >= 1.0, x, 1.0) ** -2.0, 0.0)
        return out if out.ndim else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        out = (1.0 - np.asarray(t, dtype=float)) ** -0.5
        return out if np.ndim(out) else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        out = np.where(x >= 1.0, 2.0 * np.where(x >= 1.0, x, 1.0) ** -3.0, 0.0)
        return out if out.ndim else float(out)

    def _default_label(self) -> str:
        return "pareto2"


class SkewT(Distribution):
    """Sinh-arcsinh skewed Student t: Y = sinh(arcsinh(X) + eps), X ~ t(nu).

    eps = 0 recovers t(nu); the transform is monotone, so quantiles map
    through it directly.  Hyperbolic identities are used instead of nested
    sinh/arcsinh calls to avoid spurious overflow deep in the tails.
    """

    def __init__(self, eps: float, nu: float):
        self.eps = float(eps)
        self.base = StudentT(nu)
        self._cosh = math.cosh(self.eps)
        self._sinh = math.sinh(self.eps)

    def _forward(self, x):
        # sinh(arcsinh(x) + eps) = x cosh(eps) + sqrt(1 + x^2) sinh(eps)
        x = np.asarray(x, dtype=float)
        return x * self._cosh + np.sqrt(1.0 + x * x) * self._sinh

    def _backward(self, y):
        y = np.asarray(y, dtype=float)
        return y * self._cosh - np.sqrt(1.0 + y * y) * self._sinh

    def cdf(self, x):
        return self.base.cdf(self._backward(x))

    def quantile(self, t):
        out = self._forward(self.base.quantile(t))
        return out if np.ndim(out) else float(out)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        inner = self._backward(x)
        # d inner / dx = cosh(arcsinh(x) - eps) / sqrt(1 + x^2)
        dcosh = np.sqrt(1.0 + x * x) * self._cosh - x * self._sinh
        out = self.base.density(inner) * dcosh / np.sqrt(1.0 + x * x)
        return out if out.ndim else float(out)

    def _default_label(self) -> str:
        return f"skewt({_fmt(self.eps)},{_fmt(self.base.nu)})"


class Affine(Distribution):
    """shift + scale * X for an inner model X; scale may be negative."""

    def __init__(self, inner: Distribution, shift: float = 0.0, scale: float = 1.0):
        if scale == 0.0:
            raise ValueError("scale must be nonzero")
        self.inner = inner
        self.shift = float(shift)
        self.scale = float(scale)

    def cdf(self, x):
        z = (np.asarray(x, dtype=float) - self.shift) / self.scale
        out = self.inner.cdf(z) if self.scale > 0.0 else 1.0 - self.inner.cdf(z)
        return out if np.ndim(out) else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        inner_t = t if self.scale > 0.0 else 1.0 - np.asarray(t, dtype=float)
        out = self.shift + self.scale * np.asarray(self.inner.quantile(inner_t), dtype=float)
        return out if np.ndim(out) else float(out)

    def density(self, x):
        z = (np.asarray(x, dtype=float) - self.shift) / self.scale
        out = np.asarray(self.inner.density(z), dtype=float) / abs(self.scale)
        return out if np.ndim(out) else float(out)

    def _default_label(self) -> str:
        return f"affine({self.inner!r},shift={_fmt(self.shift)},scale={_fmt(self.scale)})"


class Mixture(Distribution):
    """Two-component mixture; ``weight`` is the mass on the first component.

    CDF and density are the weighted combinations; the quantile is found by
    safeguarded root-finding on the CDF, bracketed by the componentwise
    quantiles (valid because the mixture CDF lies between the component CDFs).
    """

    def __init__(self, first: Distribution, second: Distribution, weight: float = 0.5):
        if not 0.0 < weight < 1.0:
            raise ValueError(f"mixture weight must be in (0, 1), got {weight}")
        self.first = first
        self.second = second
        self.weight = float(weight)

    def cdf(self, x):
        w = self.weight
        out = w * np.asarray(self.first.cdf(x), dtype=float) \
            + (1.0 - w) * np.asarray(self.second.cdf(x), dtype=float)
        return out if np.ndim(out) else float(out)

    def density(self, x):
        w = self.weight
        out = w * np.asarray(self.first.density(x), dtype=float) \
            + (1.0 - w) * np.asarray(self.second.density(x), dtype=float)
        return out if np.ndim(out) else float(out)

    def quantile(self, t):
        t = special.validate_probability(t)
        q1 = np.asarray(self.first.quantile(t), dtype=float)
        q2 = np.asarray(self.second.quantile(t), dtype=float)
        lo = np.minimum(q1, q2)
        hi = np.maximum(q1, q2)
        # Far in the tails the component quantiles carry enough inversion
        # error that the target can fall a hair outside [F(lo), F(hi)];
        # widen geometrically until the bracket is guaranteed.
        tt = np.asarray(t, dtype=float)
        step = np.maximum.reduce([hi - lo, np.ones_like(lo),
                                  0.5 * np.abs(lo), 0.5 * np.abs(hi)])
        for _ in range(120):
            bad_lo = np.asarray(self.cdf(lo), dtype=float) > tt
            bad_hi = np.asarray(self.cdf(hi), dtype=float) < tt
            if not (bad_lo.any() or bad_hi.any()):
                break
            lo = np.where(bad_lo, lo - step, lo)
            hi = np.where(bad_hi, hi + step, hi)
            step = step * 2.0
        return special.invert_monotone(self.cdf, t, lo, hi, derivative=self.density)

    def _default_label(self) -> str:
        return f"mixture({_fmt(self.weight)},{self.first!r},{self.second!r})"


def shifted_t_mixture(nu: float, delta: float) -> Mixture:
    """50:50 mixture of t(nu) and t(nu) shifted by delta (bimodal for large delta)."""
    base = StudentT(nu)
    model = Mixture(base, Affine(StudentT(nu), shift=delta), weight=0.5)
    model.label = f"mixt({_fmt(nu)},{_fmt(delta)})"
    return model


_NO_ARG_MODELS = {
    "uniform": Uniform,
    "normal": Normal,
    "logistic": Logistic,
    "laplace": Laplace,
    "cauchy": Cauchy,
    "lognormal": LogNormal,
    "pareto2": ParetoTwo,
}

_ARG_MODELS = {
    "beta": (2, Beta),
    "t": (1, StudentT),
    "chisq": (1, ChiSquared),
    "skewt": (2, SkewT),
    "mixt": (2, shifted_t_mixture),
}

_MODEL_RE = re.compile(r"^([a-z][a-z0-9]*)(?:\(([^()]*)\))?$")


def parse_model(text: str) -> Distribution:
    """Build a model from its textual spec, e.g. 'normal', 'beta(0.5,0.5)', 'mixt(0.5,3)'.

    Raises ValueError on unknown families, malformed syntax or wrong arity.
    """
    cleaned = text.strip().replace(" ", "")
    m = _MODEL_RE.match(cleaned)
    if m is None:
        raise ValueError(f"malformed model spec: {text!r}")
    name, argtext = m.group(1), m.group(2)
    if name in _NO_ARG_MODELS:
        if argtext is not None:
            raise ValueError(f"model {name!r} takes no parameters")
        model = _NO_ARG_MODELS[name]()
    elif name in _ARG_MODELS:
        arity, factory = _ARG_MODELS[name]
        if argtext is None:
            raise ValueError(f"model {name!r} requires {arity} parameter(s)")
        parts = argtext.split(",")
        if len(parts) != arity:
            raise ValueError(f"model {name!r} requires {arity} parameter(s), got {len(parts)}")
        try:
            args = [float(p) for p in parts]
        except ValueError as exc:
            raise ValueError(f"non-numeric parameter in model spec {text!r}") from exc
        model = factory(*args)
    else:
        raise ValueError(f"unknown model family: {name!r}")
    model.label = cleaned
    return model


# The twenty-model reference catalogue, in canonical order.
CATALOGUE_SPECS = (
    "beta(0.5,0.5)",
    "uniform",
    "beta(2,2)",
    "normal",
    "logistic",
    "t(5)",
    "t(4)",
    "t(2)",
    "laplace",
    "cauchy",
    "beta(2,1)",
    "chisq(5)",
    "chisq(3)",
    "chisq(2)",
    "chisq(1)",
    "lognormal",
    "skewt(2,2)",
    "pareto2",
    "skewt(2,1)",
    "skewt(2,0.5)",
)


def catalogue() -> list[tuple[str, Distribution]]:
    """(label, model) pairs for the reference catalogue, in canonical order."""
    return [(spec, parse_model(spec)) for spec in CATALOGUE_SPECS]
