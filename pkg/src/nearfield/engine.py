"""Near-field response kernel, source convolution, and field commutator kernels.

The kernel is supported on negative frequencies only.  Its mixed form is

    K(omega, r) = theta(-omega) / (2 pi i omega) * d/dr [ sin(omega r) / r ].

Two momentum-space forms are provided.  ``form="as_printed"`` is the
conventional closed form with braces ``4/((k-i0)^2 - w^2) - ln|(k-w)/(k+w)|/(w k)``
(the -i0 prescription adds ``i pi/(|w| k)`` inside the cone).  It is *not* the
radial transform of the mixed kernel: that transform, obtained analytically and
confirmed by windowed quadrature, is ``form="transform_consistent"`` with braces
``2/(k^2 - w^2) + ln|(k-w)/(k+w)|/(w k)`` and no imaginary part off the cone.
Both are kept so the discrepancy stays measurable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal, Sequence

import numpy as np
from scipy import special

from .numerics import QuadratureSpec, step, _quad
from .propagators import SpacetimePoint, MixedPoint, traceless_projector

__all__ = [
    "GeneralizedCurrent",
    "point_current",
    "kernel_mixed",
    "kernel_momentum",
    "field_from_current",
    "charge_density_from_current",
    "commutator_kernel",
]


@dataclass(frozen=True)
class GeneralizedCurrent:
    """Source term for the near-field convolution.

    ``kind="point"``: delta-supported at the origin with a frequency-dependent
    amplitude.  ``kind="closed_form"``: callable profile (omega, r) -> complex.
    ``kind="radial_grid"``: sampled profile on strictly increasing radii,
    linearly interpolated, zero outside the grid, optionally scaled by an
    amplitude(omega) factor.
    """

    kind: Literal["point", "closed_form", "radial_grid"]
    amplitude: Callable[[float], complex] | None = None
    profile: Callable[[float, float], complex] | None = None
    radii: np.ndarray | None = None
    values: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.kind == "point":
            if self.amplitude is None:
                raise ValueError("point current needs an amplitude(omega) callable")
        elif self.kind == "closed_form":
            if self.profile is None:
                raise ValueError("closed_form current needs a profile(omega, r) callable")
        elif self.kind == "radial_grid":
            if self.radii is None or self.values is None:
                raise ValueError("radial_grid current needs radii and values")
            radii = np.asarray(self.radii, dtype=float)
            values = np.asarray(self.values, dtype=complex)
            if radii.ndim != 1 or radii.size < 2 or radii.shape != values.shape:
                raise ValueError("grid must hold >= 2 matching samples")
            if np.any(np.diff(radii) <= 0.0) or radii[0] < 0.0:
                raise ValueError("grid radii must be strictly increasing and non-negative")
            object.__setattr__(self, "radii", radii)
            object.__setattr__(self, "values", values)
        else:
            raise ValueError(f"unknown current kind {self.kind!r}")

    def __call__(self, omega: float, r: float) -> complex:
        if self.kind == "point":
            raise ValueError("a point current has no pointwise density")
        if self.kind == "closed_form":
            return complex(self.profile(omega, r))
        if r < self.radii[0] or r > self.radii[-1]:
            return 0.0 + 0.0j
        re = float(np.interp(r, self.radii, self.values.real))
        im = float(np.interp(r, self.radii, self.values.imag))
        amp = complex(self.amplitude(omega)) if self.amplitude is not None else 1.0 + 0.0j
        return amp * complex(re, im)


def point_current(amplitude: Callable[[float], complex]) -> GeneralizedCurrent:
    return GeneralizedCurrent(kind="point", amplitude=amplitude)


def kernel_mixed(omega: float, r: float) -> complex:
    """Mixed-representation near-field kernel; vanishes for omega > 0."""
    if r <= 0.0:
        raise ValueError("kernel_mixed needs r > 0")
    if omega == 0.0:
        raise ValueError("kernel has a pole at omega = 0")
    gate = step(-omega)
    if gate == 0.0:
        return 0.0 + 0.0j
    radial = omega * math.cos(omega * r) / r - math.sin(omega * r) / r ** 2
    return gate * radial / (2.0 * math.pi * 1j * omega)


def kernel_momentum(omega: float, k: float,
                    form: str = "as_printed") -> complex:
    """Momentum-representation near-field kernel; see the module docstring."""
    if k <= 0.0:
        raise ValueError("kernel_momentum needs k > 0")
    if omega == 0.0:
        raise ValueError("kernel has a pole at omega = 0")
    if abs(k) == abs(omega):
        raise ValueError("light-cone singularity at k = |omega|")
    gate = step(-omega)
    if gate == 0.0:
        return 0.0 + 0.0j
    log_term = math.log(abs((k - omega) / (k + omega)))
    if form == "as_printed":
        braces = 4.0 / (k * k - omega * omega) - log_term / (omega * k)
        if k < abs(omega):
            braces += 1j * math.pi / (abs(omega) * k)
    elif form == "transform_consistent":
        braces = 2.0 / (k * k - omega * omega) + log_term / (omega * k)
    else:
        raise ValueError(f"unknown form {form!r}")
    return gate * braces / ((2.0 * math.pi) ** 3 * 1j)


# ---------------------------------------------------------------------------
# radial convolution
# ---------------------------------------------------------------------------

def _kernel_shell_integral(omega: float, a: float, b: float) -> complex:
    # int_a^b s K(omega, s) ds = c(omega) [ sin(omega s) - Si(omega s) ]_a^b
    c = 1.0 / (2.0 * math.pi * 1j * omega)
    def anti(s: float) -> float:
        return math.sin(omega * s) - float(special.sici(omega * s)[0])
    return c * (anti(b) - anti(a))


def _density_shell_integral(omega: float, a: float, b: float) -> complex:
    # int_a^b s D(omega, s) ds with D = sin(omega s)/(2 pi i s)
    c = 1.0 / (2.0 * math.pi * 1j)
    return c * (math.cos(omega * a) - math.cos(omega * b)) / omega


def _radial_convolution(current: GeneralizedCurrent, omega: float, r: float,
                        shell: Callable[[float, float, float], complex],
                        spec: QuadratureSpec) -> complex:
    """(f (*) J)(r) for radial f, via the shell identity
    int dOmega' f(|r - r'|) = (2 pi/(r r')) int_{|r-r'|}^{r+r'} s f(s) ds."""
    if current.kind == "radial_grid":
        lo, hi = float(current.radii[0]), float(current.radii[-1])
        breakpoints = [float(x) for x in current.radii]
    else:
        lo, hi = 0.0, np.inf
        breakpoints = None
    def integrand_re(rp: float) -> float:
        return ((2.0 * math.pi / r) * rp * current(omega, rp)
                * shell(omega, abs(r - rp), r + rp)).real
    def integrand_im(rp: float) -> float:
        return ((2.0 * math.pi / r) * rp * current(omega, rp)
                * shell(omega, abs(r - rp), r + rp)).imag
    pts = breakpoints if breakpoints is not None else None
    re = _quad(integrand_re, lo, hi, spec, points=pts)
    im = _quad(integrand_im, lo, hi, spec, points=pts)
    return complex(re, im)


def field_from_current(current: GeneralizedCurrent, p: MixedPoint,
                       spec: QuadratureSpec | None = None) -> complex:
    """Radial near-field strength produced by a generalized current.

    For a point source the convolution collapses to kernel times amplitude;
    extended sources are convolved by adaptive quadrature.
    """
    if step(-p.omega) == 0.0:
        return 0.0 + 0.0j
    if current.kind == "point":
        return complex(current.amplitude(p.omega)) * kernel_mixed(p.omega, p.r)
    spec = spec or QuadratureSpec()
    return _radial_convolution(current, p.omega, p.r, _kernel_shell_integral, spec)


def charge_density_from_current(current: GeneralizedCurrent, p: MixedPoint,
                                spec: QuadratureSpec | None = None) -> complex:
    """Effective near-field charge density for a generalized current.

    The time derivative acts as multiplication by ``i omega`` under the
    package's forward transform, on the negative-frequency commutator kernel.
    """
    w = p.omega
    gate = step(-w)
    if gate == 0.0:
        return 0.0 + 0.0j
    pref = gate * 1j * w / (4.0 * math.pi)
    if current.kind == "point":
        base = math.sin(w * p.r) / (2.0 * math.pi * 1j * p.r)
        return pref * base * complex(current.amplitude(w))
    spec = spec or QuadratureSpec()
    return pref * _radial_convolution(current, w, p.r, _density_shell_integral, spec)


# ---------------------------------------------------------------------------
# commutator kernels
# ---------------------------------------------------------------------------

def commutator_kernel(pair: str, p: SpacetimePoint):
    """Equal-field (EE) or mixed (EH) commutator kernel in the cone exterior.

    Closed forms hold strictly inside the space-like region |t| < r, where the
    near-field profile is -t/(4 pi r); on or inside the cone the kernels only
    exist paired with test functions.  EE returns a traceless symmetric 3x3
    matrix, EH a 3-vector.
    """
    t, r = p.t, p.r
    if r <= 0.0 or abs(t) >= r:
        raise ValueError("closed-form commutator kernels require |t| < r")
    e = p.direction
    if pair == "EE":
        # (1/4 pi i)(d_i d_j - delta_ij d_t^2) applied to -t/(4 pi r):
        # the time term vanishes, d_i d_j (1/r) = (3 e_i e_j - delta_ij)/r^3
        return (-t / (16.0 * math.pi ** 2 * 1j * r ** 3)) * (-traceless_projector(e))
    if pair == "EH":
        # (1/4 pi i) d_t d_j applied: d_t(profile) = -1/(4 pi r), gradient e_j/(4 pi r^2)
        return (1.0 / (16.0 * math.pi ** 2 * 1j * r ** 2)) * e.astype(complex)
    raise ValueError(f"unknown commutator pair {pair!r}")
