"""Numerical backbone: special functions, adaptive and oscillatory quadrature,
a configurable Fourier-transform oracle, distribution pairing, and power-law fits.

Everything here is deliberately independent of the closed forms implemented in
the physics modules, so that tests comparing the two are genuine cross-checks.

Conventions used throughout the package:

* natural units, c = hbar = 1;
* step functions evaluated exactly on an edge return 1/2 (see :func:`step`);
* a forward Fourier transform is ``prefactor * integral dt exp(sign*i*omega*t) f(t)``,
  parameterised by :class:`FtConvention`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import integrate, special

__all__ = [
    "FtConvention",
    "QuadratureSpec",
    "PowerLawFit",
    "NonConvergenceError",
    "step",
    "erf_complex",
    "hyperbolic_integrals",
    "ft_numeric",
    "windowed_ft",
    "pair_with_test_function",
    "fit_power_law",
]

_ALLOWED_PREFACTORS = (1.0, 1.0 / (2.0 * math.pi), 1.0 / math.sqrt(2.0 * math.pi))


class NonConvergenceError(RuntimeError):
    """Raised when a quadrature fails to reach the requested tolerance."""


def step(x: float) -> float:
    """Unit step with the symmetric edge convention theta(0) = 1/2."""
    if x > 0.0:
        return 1.0
    return 0.5 if x == 0.0 else 0.0


@dataclass(frozen=True)
class FtConvention:
    """Fourier-transform convention: kernel sign and normalisation prefactor.

    ``sign`` is the sign of ``i*omega*t`` in the forward kernel; ``prefactor``
    must be one of 1, 1/2pi, 1/sqrt(2pi).
    """

    sign: int = -1
    prefactor: float = 1.0

    def __post_init__(self) -> None:
        if self.sign not in (-1, 1):
            raise ValueError("sign must be +1 or -1")
        if not any(math.isclose(self.prefactor, p, rel_tol=1e-12) for p in _ALLOWED_PREFACTORS):
            raise ValueError("prefactor must be 1, 1/(2*pi) or 1/sqrt(2*pi)")

    def inverse(self) -> "FtConvention":
        """Convention whose composition with this one is the identity."""
        if math.isclose(self.prefactor, 1.0):
            back = 1.0 / (2.0 * math.pi)
        elif math.isclose(self.prefactor, 1.0 / (2.0 * math.pi)):
            back = 1.0
        else:
            back = self.prefactor
        return FtConvention(sign=-self.sign, prefactor=back)


#: convention reproducing the mixed-representation propagator family
PROPAGATOR_FT = FtConvention(sign=-1, prefactor=1.0)
#: convention reproducing the switching-function frequency forms
SWITCHING_FT = FtConvention(sign=-1, prefactor=1.0 / (2.0 * math.pi))


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and budget for the adaptive quadratures in this module."""

    abs_tol: float = 1e-11
    rel_tol: float = 1e-9
    max_subdivisions: int = 400
    oscillation_frequency_hint: float | None = None

    def __post_init__(self) -> None:
        if self.abs_tol <= 0.0 or self.rel_tol <= 0.0:
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


@dataclass(frozen=True)
class PowerLawFit:
    slope: float
    intercept: float
    slope_stderr: float
    sample_count: int

    def __post_init__(self) -> None:
        if self.sample_count < 3:
            raise ValueError("a power-law fit needs at least 3 samples")
        if self.slope_stderr < 0.0:
            raise ValueError("slope_stderr must be non-negative")


# ---------------------------------------------------------------------------
# special functions
# ---------------------------------------------------------------------------

def erf_complex(z: complex) -> complex:
    """Error function for complex argument.

    Small arguments (|z| <= 3) use the Maclaurin series, which is free of
    cancellation on the imaginary axis where the package needs it most; larger
    arguments fall back to the Faddeeva function.  Raises ``OverflowError``
    when the exponential growth along the imaginary axis leaves the double
    range, and ``ValueError`` for |z| >= 30 where the result is meaningless in
    double precision anyway.
    """
    z = complex(z)
    if abs(z) >= 30.0:
        raise ValueError("erf_complex requires |z| < 30")
    if abs(z) <= 3.0:
        # erf(z) = 2/sqrt(pi) * sum (-1)^k z^(2k+1) / (k! (2k+1))
        term = z
        total = z
        zz = z * z
        for k in range(1, 120):
            term *= -zz / k
            contribution = term / (2 * k + 1)
            total += contribution
            if abs(contribution) < 1e-18 * max(abs(total), 1e-300):
                break
        return complex(2.0 / math.sqrt(math.pi)) * total
    if z.real < 0.0:
        return -erf_complex(-z)
    with np.errstate(over="ignore", invalid="ignore"):
        val = 1.0 - np.exp(-z * z) * special.wofz(1j * z)
    val = complex(val)
    if not (math.isfinite(val.real) and math.isfinite(val.imag)):
        raise OverflowError("erf_complex overflowed along the imaginary axis")
    return val


def hyperbolic_integrals(x: float) -> tuple[float, float]:
    """Hyperbolic sine and cosine integrals (shi(x), chi(x)).

    shi(x) = integral_0^x sinh(u)/u du;
    chi(x) = euler_gamma + ln|x| + integral_0^x (cosh(u)-1)/u du.
    """
    x = float(x)
    if x == 0.0:
        raise ValueError("chi has a logarithmic singularity at x = 0")
    if abs(x) >= 700.0:
        raise OverflowError("hyperbolic integrals overflow for |x| >= 700")
    shi, chi = special.shichi(x)
    return float(shi), float(chi)


# ---------------------------------------------------------------------------
# quadrature plumbing
# ---------------------------------------------------------------------------

def _quad(f: Callable[[float], float], a: float, b: float, spec: QuadratureSpec,
          weight: str | None = None, wvar: float | None = None,
          points: Sequence[float] | None = None) -> float:
    """scipy.integrate.quad with the spec's tolerances and an error check."""
    kwargs: dict = {
        "epsabs": spec.abs_tol,
        "epsrel": spec.rel_tol,
        "limit": max(50, 2 * spec.max_subdivisions),
        "full_output": 1,
    }
    if weight is not None:
        kwargs["weight"] = weight
        kwargs["wvar"] = wvar
        kwargs["limlst"] = max(50, spec.max_subdivisions)
        kwargs.pop("epsrel")  # the Fourier integrator is absolute-error driven
    elif points is not None and not (math.isinf(a) or math.isinf(b)):
        kwargs["points"] = list(points)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        out = integrate.quad(f, a, b, **kwargs)
    value, abserr = out[0], out[1]
    if not math.isfinite(value):
        raise NonConvergenceError("quadrature produced a non-finite value")
    tolerance = max(spec.abs_tol, spec.rel_tol * abs(value))
    if abserr > 50.0 * tolerance  and abserr > 1e-7 * max(1.0, abs(value)):
        raise NonConvergenceError(
            f"quadrature error estimate {abserr:.2e} exceeds tolerance for value {value:.6e}")
    return value


def _quad_complex(f: Callable[[float], complex], a: float, b: float, spec: QuadratureSpec,
                  points: Sequence[float] | None = None) -> complex:
    re = _quad(lambda t: f(t).real, a, b, spec, points=points)
    im = _quad(lambda t: f(t).imag, a, b, spec, points=points)
    return complex(re, im)


def _fourier_half_line(g: Callable[[float], float], omega: float, kind: str,
                       spec: QuadratureSpec) -> float:
    """integral_0^inf g(t) * {cos|sin}(omega t) dt for real-valued g."""
    if omega == 0.0:
        if kind == "sin":
            return 0.0
        return _quad(g, 0.0, np.inf, spec)
    return _quad(g, 0.0, np.inf, spec, weight=kind, wvar=abs(omega)) * (
        1.0 if kind == "cos" or omega > 0.0 else -1.0)


def ft_numeric(f: Callable[[float], complex], omega: float,
               conv: FtConvention = SWITCHING_FT,
               spec: QuadratureSpec | None = None) -> complex:
    """Numerical Fourier transform ``prefactor * int dt exp(sign*i*omega*t) f(t)``.

    The integrand is folded onto the half line and each even/odd component is
    handled by a dedicated Fourier quadrature (cycle summation with series
    acceleration), which copes with slowly decaying oscillatory tails.  The
    caller is responsible for windowing integrands that do not decay; see
    :func:`windowed_ft`.
    """
    spec = spec or QuadratureSpec()
    def even(t: float) -> complex:
        return (complex(f(t)) + complex(f(-t))) if t > 0.0 else 2.0 * complex(f(0.0))
    def odd(t: float) -> complex:
        return (complex(f(t)) - complex(f(-t))) if t > 0.0 else 0.0j

    cos_part = complex(
        _fourier_half_line(lambda t: even(t).real, omega, "cos", spec),
        _fourier_half_line(lambda t: even(t).imag, omega, "cos", spec))
    sin_part = complex(
        _fourier_half_line(lambda t: odd(t).real, omega, "sin", spec),
        _fourier_half_line(lambda t: odd(t).imag, omega, "sin", spec))
    # int_-inf^inf f e^{s i w t} dt = int_0^inf [even*cos + s*i*odd*sin] dt
    return conv.prefactor * (cos_part + conv.sign * 1j * sin_part)


_DEFAULT_WINDOWS = (1e-2, 5e-3, 2.5e-3)


def _extrapolate_to_zero(xs: Sequence[float], ys: Sequence[complex]) -> complex:
    """Lagrange polynomial through (xs, ys), evaluated at 0."""
    total = 0.0 + 0.0j
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        w = 1.0
        for j, xj in enumerate(xs):
            if j != i:
                w *= -xj / (xi - xj)
        total += w * yi
    return total


def windowed_ft(f: Callable[[float], complex], omega: float,
                conv: FtConvention = PROPAGATOR_FT,
                spec: QuadratureSpec | None = None,
                windows: Iterable[float] = _DEFAULT_WINDOWS) -> complex:
    """Fourier transform of a slowly decaying f via exponential windowing.

    Evaluates the transform of ``f(t)*exp(-eps|t|)`` at each window width and
    extrapolates eps -> 0 polynomially (Richardson).  This is the oracle used
    for distribution-valued transforms whose tails only oscillate.
    """
    eps_list = sorted(windows, reverse=True)
    if len(eps_list) < 2:
        raise ValueError("need at least two window widths to extrapolate")
    vals = [ft_numeric(lambda t, e=eps: f(t) * math.exp(-e * abs(t)), omega, conv, spec)
            for eps in eps_list]
    return _extrapolate_to_zero(eps_list, vals)


# ---------------------------------------------------------------------------
# distribution pairing
# ---------------------------------------------------------------------------

def _light_cone_profile(t: float, r: float) -> float:
    # canonical near-field profile used by the pairing oracle only
    return (abs(t - r) - abs(t + r)) / (8.0 * math.pi * r)


def pair_with_test_function(distribution_id: str, r: float,
                            phi: Callable[[float], float],
                            phi_prime: Callable[[float], float] | None = None,
                            spec: QuadratureSpec | None = None) -> float:
    """Pair a singular profile with a smooth, rapidly decaying test function.

    ``"d"``   -> (phi(r) - phi(-r)) / (4 pi r), the delta-shell pairing;
    ``"dn"``  -> int phi(t) * nearfield_profile(t, r) dt by quadrature;
    ``"ddt_dn"`` -> -int phi'(t) * nearfield_profile(t, r) dt (needs phi_prime).
    """
    if r <= 0.0:
        raise ValueError("pairing requires r > 0")
    spec = spec or QuadratureSpec()
    key = distribution_id.lower()
    if key == "d":
        return (phi(r) - phi(-r)) / (4.0 * math.pi * r)
    if key == "dn":
        g = lambda t: phi(t) * _light_cone_profile(t, r)
    elif key == "ddt_dn":
        if phi_prime is None:
            raise ValueError("ddt_dn pairing needs the analytic derivative phi_prime")
        g = lambda t: -phi_prime(t) * _light_cone_profile(t, r)
    else:
        raise ValueError(f"unknown distribution id {distribution_id!r}")
    # split at the cone where the profile has kinks
    inner = _quad(g, -r, r, spec)
    left = _quad(g, -np.inf, -r, spec)
    right = _quad(g, r, np.inf, spec)
    return inner + left + right


# ---------------------------------------------------------------------------
# power-law fitting
# ---------------------------------------------------------------------------

def fit_power_law(samples: Sequence[tuple[float, float]]) -> PowerLawFit:
    """Least-squares fit of ln y = slope * ln x + intercept."""
    if len(samples) < 3:
        raise ValueError("need at least 3 samples")
    xs = np.array([s[0] for s in samples], dtype=float)
    ys = np.array([s[1] for s in samples], dtype=float)
    if np.any(xs <= 0.0) or np.any(ys <= 0.0):
        raise ValueError("samples must be strictly positive")
    lx, ly = np.log(xs), np.log(ys)
    if np.ptp(lx) == 0.0:
        raise ValueError("degenerate input: all x values are equal")
    n = len(samples)
    mean_x = lx.mean()
    sxx = float(np.sum((lx - mean_x) ** 2))
    slope = float(np.sum((lx - mean_x) * (ly - ly.mean())) / sxx)
    intercept = float(ly.mean() - slope * mean_x)
    resid = ly - (slope * lx + intercept)
    sigma2 = float(np.sum(resid ** 2)) / (n - 2)
    stderr = math.sqrt(max(sigma2, 0.0) / sxx)
    return PowerLawFit(slope=slope, intercept=intercept, slope_stderr=stderr, sample_count=n)
