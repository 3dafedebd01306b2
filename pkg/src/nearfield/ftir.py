"""Frustrated total internal reflection: transition layer, oscillating surface
dipole sheet, and the evanescent near field it radiates.

Geometry: light of frequency omega is incident from the dense medium (z < 0,
index n1) on the interface z = 0 with a rarer medium (index n2), above the
critical angle.  The idealized index step is smoothed into transition layers
whose widths follow from the photon momentum alteration; the induced dipole
sheet then drives the near field.

The driving wave oscillates at +omega while the near-field response kernel is
supported on negative frequencies, so the near-field factor is evaluated on
the negative-frequency branch (the evanescent component); only the phase
``exp(-i omega t)`` carries time dependence.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .numerics import QuadratureSpec, erf_complex, step, _quad
from .propagators import SpectralPoint, singular_momentum_nf
from .switching import momentum_alteration

__all__ = [
    "FtirConfig",
    "LayerGeometry",
    "refraction_profile",
    "layer_geometry",
    "current_factor",
    "braces",
    "field_k",
    "field_k_small_q",
    "resolution_scale",
    "field_real_space",
]


@dataclass(frozen=True)
class FtirConfig:
    """Total-internal-reflection scenario parameters."""

    n1: float
    n2: float
    phi: float
    omega: float
    alpha: float = 1.0
    e0: float = 1.0

    def __post_init__(self) -> None:
        if self.n1 < 1.0 or self.n2 < 1.0:
            raise ValueError("refractive indices must be >= 1")
        if self.n1 <= self.n2:
            raise ValueError("total reflection requires n1 > n2")
        if not (0.0 <= self.phi < math.pi / 2):
            raise ValueError("incidence angle must satisfy 0 <= phi < pi/2")
        if math.sin(self.phi) <= self.n2 / self.n1:
            raise ValueError("total reflection requires phi > arcsin(n2/n1)")
        if self.omega <= 0.0:
            raise ValueError("frequency must be positive")
        if self.alpha < 0.0:
            raise ValueError("polarizability must be >= 0")

    @property
    def n(self) -> float:
        """Relative index n1/n2."""
        return self.n1 / self.n2


@dataclass(frozen=True)
class LayerGeometry:
    """Transition-layer widths on the two sides and the delta-smoothing width."""

    dz1: float
    dz2: float
    xi: float

    def __post_init__(self) -> None:
        if min(self.dz1, self.dz2, self.xi) <= 0.0:
            raise ValueError("layer widths must be positive")


def refraction_profile(cfg: FtirConfig, z: float) -> float:
    """Index profile n(z): dense below, unity above, midpoint on the edge."""
    n = cfg.n
    return n * step(-z) + 1.0 * step(z)


def layer_geometry(cfg: FtirConfig) -> LayerGeometry:
    """Layer widths 1/(4 n(z) omega cos(phi)) on each side of the interface.

    Consistent with half the inverse momentum alteration of the reflected
    photon; the delta-smoothing width defaults to the dense-side value.
    """
    c = 4.0 * cfg.omega * math.cos(cfg.phi)
    dz1 = 1.0 / (c * cfg.n)
    dz2 = 1.0 / c
    return LayerGeometry(dz1=dz1, dz2=dz2, xi=dz1)


def current_factor(q: float, dz: float) -> complex:
    """Half-line transform of the layer profile:
    int_0^inf exp(i q s - 2 s^2/dz^2) ds in closed form."""
    if dz <= 0.0:
        raise ValueError("layer width must be positive")
    arg = -1j * q * dz / math.sqrt(8.0)
    return dz * math.sqrt(math.pi / 8.0) * math.exp(-q * q * dz * dz / 8.0) \
        * (1.0 - erf_complex(arg))


def braces(cfg: FtirConfig, q: float) -> complex:
    """Two-layer combination I(-q, dz) + n^-4 I(q, dz) entering the k-space field."""
    dz = layer_geometry(cfg).dz1
    return current_factor(-q, dz) + cfg.n ** -4 * current_factor(q, dz)


def field_k(cfg: FtirConfig, t: float, k: float, q: float) -> complex:
    """Near-field amplitude in k-space; |field_k| is independent of t."""
    if k <= 0.0:
        raise ValueError("k must be positive")
    w = cfg.omega
    if math.isclose(k, w, rel_tol=1e-12):
        warnings.warn("evaluation on the light cone k = |omega|", stacklevel=2)
    dz = layer_geometry(cfg).dz1
    nf = singular_momentum_nf(SpectralPoint(omega=-w, k=k))
    phase = complex(math.cos(w * t), -math.sin(w * t))
    return (2.0 / math.sqrt(math.pi)) * w * phase * cfg.alpha * abs(cfg.e0) \
        * dz ** -3 * k * braces(cfg, q) * nf


def field_k_small_q(cfg: FtirConfig, q: float) -> float:
    """Small-q replacement for the braces: only the normal momentum survives."""
    n = cfg.n
    dz = layer_geometry(cfg).dz1
    x = q * q * dz * dz / 8.0
    return math.sqrt(math.pi / 8.0) * dz ** -2 * (
        math.exp(-x) + n ** -3 * math.exp(-n * n * x))


def resolution_scale(k_z: float, q: float) -> float:
    """Interference fringe scale 1/|k_z - q| between incident and evanescent waves."""
    if k_z == q:
        raise ValueError("degenerate: incident and evanescent momenta coincide")
    return 1.0 / abs(k_z - q)


# ---------------------------------------------------------------------------
# real-space field
# ---------------------------------------------------------------------------

def _grad_z_nearfield(omega: float, x: float, y: float, dz_comp: float) -> complex:
    """z-component of the gradient of the negative-branch near-field function
    evaluated at displacement (x, y, dz_comp)."""
    rho = math.sqrt(x * x + y * y + dz_comp * dz_comp)
    if rho == 0.0:
        return 0.0 + 0.0j
    radial = omega * math.cos(omega * rho) / rho - math.sin(omega * rho) / rho ** 2
    d_rho = -1j * radial / (2.0 * math.pi * omega ** 2)
    return d_rho * (dz_comp / rho)


def _layer_term(cfg: FtirConfig, dz: float, x: float, y: float, z: float,
                spec: QuadratureSpec) -> complex:
    cutoff = 6.0 * dz
    def re(s: float) -> float:
        return (math.exp(-2.0 * s * s / (dz * dz))
                * _grad_z_nearfield(cfg.omega, x, y, z - s)).real
    def im(s: float) -> float:
        return (math.exp(-2.0 * s * s / (dz * dz))
                * _grad_z_nearfield(cfg.omega, x, y, z - s)).imag
    pts = [abs(z)] if 0.0 < abs(z) < cutoff else None
    return complex(_quad(re, 0.0, cutoff, spec, points=pts),
                   _quad(im, 0.0, cutoff, spec, points=pts)) / dz ** 3


def field_real_space(cfg: FtirConfig, t: float, x: float, y: float, z: float,
                     spec: QuadratureSpec | None = None) -> complex:
    """Evanescent near field at a point, as a Gaussian-weighted layer integral.

    Two terms: the dense-side layer (width dz1) and the mirrored rare-side
    layer (width dz2, z -> -z) suppressed by 1/n.  Linear in alpha*|E0|.
    """
    if cfg.alpha == 0.0 or cfg.e0 == 0.0:
        return 0.0 + 0.0j
    spec = spec or QuadratureSpec(abs_tol=1e-10, rel_tol=1e-8)
    geo = layer_geometry(cfg)
    term1 = _layer_term(cfg, geo.dz1, x, y, z, spec)
    term2 = _layer_term(cfg, geo.dz2, x, y, -z, spec)
    w = cfg.omega
    phase = complex(math.cos(w * t), -math.sin(w * t))
    return (2.0j / math.sqrt(math.pi)) * w * phase * cfg.alpha * abs(cfg.e0) \
        * (term1 + term2 / cfg.n)
