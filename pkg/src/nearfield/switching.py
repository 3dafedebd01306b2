"""Interaction-switching functions: temporal, spatial, and reflection-layer forms.

The temporal catalogue (exponential, Gaussian, and the two-level generalisation)
comes with closed-form frequency images normalised to unit integral, so each
family tends to a delta function as the switching rate goes to zero.  The
spatial forms model smooth transition layers at a refracting interface, with
the layer width tied to the photon momentum alteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

__all__ = [
    "SwitchingSpec",
    "SpatialSwitchingSpec",
    "MomentumAlteration",
    "fis_time",
    "fis_freq",
    "fis_spatial",
    "momentum_alteration",
    "fis_ftir",
    "FINE_STRUCTURE",
    "rate_from_classical_radius",
    "rate_from_compton",
]

_TIME_FORMS = ("g1", "g2", "g3", "g1_two_level")
_SPATIAL_FORMS = ("g1_spatial", "g2_spatial")

#: fine-structure constant (CODATA 2018), used only by the rate presets
FINE_STRUCTURE = 7.2973525693e-3


@dataclass(frozen=True)
class SwitchingSpec:
    """Temporal switching function: form, rate, optional transition frequency.

    ``g3`` is the invariant-interval Gaussian; it is exposed only in its r = 0
    reduction, where it coincides with ``g2``.
    """

    form: Literal["g1", "g2", "g3", "g1_two_level"]
    gamma: float
    omega0: float = 0.0

    def __post_init__(self) -> None:
        if self.form not in _TIME_FORMS:
            raise ValueError(f"unknown switching form {self.form!r}")
        if self.gamma <= 0.0:
            raise ValueError("switching rate gamma must be positive")
        if self.omega0 < 0.0:
            raise ValueError("transition frequency must be >= 0")


@dataclass(frozen=True)
class SpatialSwitchingSpec:
    form: Literal["g1_spatial", "g2_spatial"]
    kappa: float

    def __post_init__(self) -> None:
        if self.form not in _SPATIAL_FORMS:
            raise ValueError(f"unknown spatial switching form {self.form!r}")
        if self.kappa <= 0.0:
            raise ValueError("inverse layer width kappa must be positive")


@dataclass(frozen=True)
class MomentumAlteration:
    dkz: float
    dz: float
    regime: Literal["reflection", "refraction"]


def fis_time(spec: SwitchingSpec, t: float) -> float:
    """Temporal switching factor g(t); bounded by 1 and even in t."""
    g, t = spec.gamma, float(t)
    if spec.form == "g1":
        return math.exp(-g * abs(t))
    if spec.form in ("g2", "g3"):
        return math.exp(-(g * t) ** 2)
    return math.exp(-g * abs(t)) * math.cos(spec.omega0 * t)


def fis_freq(spec: SwitchingSpec, omega: float) -> float:
    """Frequency image of g under the (-1, 1/2pi) transform; integrates to 1."""
    g, w = spec.gamma, float(omega)
    if spec.form == "g1":
        return g / (math.pi * (w * w + g * g))
    if spec.form in ("g2", "g3"):
        return math.exp(-w * w / (4.0 * g * g)) / (2.0 * g * math.sqrt(math.pi))
    w0 = spec.omega0
    return (g / (2.0 * math.pi)) * (1.0 / ((w - w0) ** 2 + g * g)
                                    + 1.0 / ((w + w0) ** 2 + g * g))


def fis_spatial(spec: SpatialSwitchingSpec, z: float) -> float:
    """Spatial switching factor across a flat transition layer at z = 0."""
    k, z = spec.kappa, float(z)
    if spec.form == "g1_spatial":
        return math.exp(-k * abs(z))
    return math.exp(-(k * z) ** 2)


def momentum_alteration(n1: float, n2: float, omega: float, phi: float) -> MomentumAlteration:
    """Photon momentum change at a plane interface, and the layer width it implies.

    Above the critical angle (total reflection, needs n1 > n2) the reflected
    photon flips its normal momentum component: |dkz| = 2 omega n1 cos(phi).
    Otherwise the transmitted photon changes by
    |dkz| = omega |n1 cos(phi) - n2 cos(phi')| with phi' from Snell's law.
    The two regimes describe different photons; at the critical angle the
    reflection formula is exactly twice the refraction one.  The layer width
    is dz = 1 / (2 |dkz|).
    """
    if not (0.0 <= phi < math.pi / 2):
        raise ValueError("incidence angle must satisfy 0 <= phi < pi/2")
    if n1 < 1.0 or n2 < 1.0:
        raise ValueError("refractive indices must be >= 1")
    if omega <= 0.0:
        raise ValueError("frequency must be positive")
    total_reflection = n1 > n2 and math.sin(phi) > n2 / n1
    if total_reflection:
        dkz = 2.0 * omega * n1 * math.cos(phi)
        regime = "reflection"
    else:
        sin_ref = n1 * math.sin(phi) / n2
        cos_ref = math.sqrt(max(0.0, 1.0 - sin_ref * sin_ref))
        dkz = omega * abs(n1 * math.cos(phi) - n2 * cos_ref)
        regime = "refraction"
    if dkz == 0.0:
        raise ValueError("grazing incidence: momentum alteration vanishes")
    return MomentumAlteration(dkz=dkz, dz=1.0 / (2.0 * dkz), regime=regime)


def fis_ftir(z: float, omega: float, n: float, phi: float, form: str = "g1") -> float:
    """Spatial switching factor with the width set by the reflection-layer scale."""
    if not (0.0 <= phi < math.pi / 2):
        raise ValueError("incidence angle must satisfy 0 <= phi < pi/2")
    x = 4.0 * n * abs(omega) * abs(z) * math.cos(phi)
    if form == "g1":
        return math.exp(-x)
    if form == "g2":
        return math.exp(-(4.0 * n * omega * z * math.cos(phi)) ** 2)
    raise ValueError(f"unknown form {form!r}")


def rate_from_classical_radius(mass: float, alpha: float = FINE_STRUCTURE) -> float:
    """Switching rate 1/r0 for a free charge (vanishes with the coupling)."""
    if mass <= 0.0 or alpha <= 0.0:
        raise ValueError("mass and coupling must be positive")
    return mass / alpha


def rate_from_compton(mass: float) -> float:
    """Switching rate 1/lambda_C for a bound charge."""
    if mass <= 0.0:
        raise ValueError("mass must be positive")
    return mass
