"""Atom-atom interactions carried by the near field: the non-resonant
two-photon potential, the resonant second-order potential, excitation-transfer
rates, and the split of transfer probability across the light cone.

All distances are in the near zone, omega0 * R << 1.  The commutator-valued
near-field block is odd in frequency and cannot by itself produce a static
potential; the potentials below therefore use its causal (outgoing-wave)
completion, which carries the familiar near-zone scalings: R^-6 for the
non-resonant potential and the transfer rate, R^-3 for the resonant one.

Tensor contractions are reduced to the scalar S-state polarizability times the
Frobenius norm sqrt(6) of the traceless direction tensor; overall constants of
the transfer rate are fixed only through the radius convention W(R0)*lifetime = 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .numerics import QuadratureSpec, _quad
from .propagators import superluminal_fraction

__all__ = [
    "AtomModel",
    "polarizability",
    "polarizability_imag_axis",
    "nonresonant_potential",
    "resonant_potential",
    "scattering_duration",
    "transfer_probability",
    "transfer_split",
    "dipole_from_oscillator_strength",
]

_TENSOR_NORM = math.sqrt(6.0)  # Frobenius norm of delta_ij - 3 e_i e_j


@dataclass(frozen=True)
class AtomModel:
    """Two-level atom: transition frequency, linewidth, scalar dipole element."""

    omega0: float
    linewidth: float
    d: float

    def __post_init__(self) -> None:
        if self.omega0 <= 0.0 or self.linewidth <= 0.0:
            raise ValueError("omega0 and linewidth must be positive")
        if self.linewidth >= self.omega0 / 10.0:
            raise ValueError("the narrow-resonance treatment needs linewidth < omega0/10")


def polarizability(atom: AtomModel, omega: float) -> complex:
    """Two-level scalar polarizability with retarded pole prescription."""
    d2 = atom.d ** 2
    return d2 * (1.0 / (atom.omega0 - omega - 1j * atom.linewidth)
                 + 1.0 / (atom.omega0 + omega - 1j * atom.linewidth))


def polarizability_imag_axis(atom: AtomModel, u: float) -> float:
    """Ground-state polarizability on the imaginary frequency axis (real)."""
    return 2.0 * atom.d ** 2 * atom.omega0 / (atom.omega0 ** 2 + u * u)


def _warn_regime(omega0: float, R: float) -> None:
    if omega0 * R > 0.1:
        warnings.warn(f"omega0*R = {omega0 * R:.3g} is outside the near zone", stacklevel=3)


def nonresonant_potential(a1: AtomModel, a2: AtomModel, R: float,
                          include_all_regions: bool = False,
                          spec: QuadratureSpec | None = None) -> float:
    """Two-photon dispersion potential between ground-state atoms.

    The frequency integral is rotated to the imaginary axis, where the
    polarizabilities are real and the near-field exchange factor decays as
    exp(-2uR); the near-zone result scales as R^-6.  With
    ``include_all_regions`` the full retardation polynomial is kept (R^-7
    crossover at large separations; exploratory, not gated).
    """
    if R <= 0.0:
        raise ValueError("separation must be positive")
    _warn_regime(max(a1.omega0, a2.omega0), R)
    spec = spec or QuadratureSpec(abs_tol=1e-13, rel_tol=1e-10)
    if include_all_regions:
        def f(u: float) -> float:
            x = u * R
            poly = 3.0 + 6.0 * x + 5.0 * x * x + 2.0 * x ** 3 + x ** 4
            return (polarizability_imag_axis(a1, u) * polarizability_imag_axis(a2, u)
                    * math.exp(-2.0 * x) * poly / 3.0)
    else:
        def f(u: float) -> float:
            return (polarizability_imag_axis(a1, u) * polarizability_imag_axis(a2, u)
                    * math.exp(-2.0 * u * R))
    cut = max(a1.omega0, a2.omega0, 1.0 / R)
    body = _quad(f, 0.0, 10.0 * cut, spec, points=[a1.omega0, a2.omega0])
    tail = _quad(f, 10.0 * cut, np.inf, spec)
    return -(3.0 / (4.0 * math.pi ** 3 * R ** 6)) * (body + tail)


def resonant_potential(atom: AtomModel, R: float,
                       spec: QuadratureSpec | None = None) -> float:
    """Second-order potential for resonant excitation exchange, ~ R^-3.

    Frequency integral of the near-field kernel against the dispersive part of
    the co-rotating resonance; evaluates to
    -(sqrt(6) d^2 / (4 pi R^3)) cos(omega0 R) exp(-linewidth R).
    """
    if R <= 0.0:
        raise ValueError("separation must be positive")
    _warn_regime(atom.omega0, R)
    spec = spec or QuadratureSpec(abs_tol=1e-12, rel_tol=1e-9)
    # int_-inf^inf x sin(xR)/(x^2+G^2) dx, folded onto the half line
    G = atom.linewidth
    half = _quad(lambda x: x / (x * x + G * G), 0.0, np.inf, spec, weight="sin", wvar=R)
    J = -math.cos(atom.omega0 * R) * 2.0 * half
    return (_TENSOR_NORM * atom.d ** 2 / (4.0 * math.pi ** 2 * R ** 3)) * J


def scattering_duration(atom: AtomModel, omega: float) -> float:
    """Duration of the resonant scattering event; integrates to pi over omega."""
    G = atom.linewidth
    return (G / 2.0) / ((atom.omega0 - omega) ** 2 + G * G / 4.0)


def _causal_nf_squared(omega: float, R: float) -> float:
    # squared magnitude of the causal near-field exchange kernel, tensor-summed
    return 6.0 / (4.0 * math.pi ** 2 * omega ** 4 * R ** 6)


def transfer_probability(a1: AtomModel, a2: AtomModel, R: float,
                         integration: str = "collapsed",
                         spec: QuadratureSpec | None = None) -> tuple[float, float]:
    """Excitation-transfer rate between identical atoms and the radius where
    W times the lifetime reaches one.

    ``collapsed`` exploits the delta-like duration factor and evaluates the
    exchange kernel at resonance; ``lorentzian`` integrates the full duration
    profile over the resonance neighbourhood (fixed window omega0 +- omega0/4).
    W is defined up to normalisation; R0 makes it absolute via W(R0)/Gamma...
    specifically W * Gamma = (R0 / R)^6.
    """
    if R <= 0.0:
        raise ValueError("separation must be positive")
    if not math.isclose(a1.omega0, a2.omega0, rel_tol=1e-12):
        raise ValueError("transfer requires identical transition frequencies")
    _warn_regime(a1.omega0, R)
    w0, G = a1.omega0, a1.linewidth
    d2 = a1.d ** 2 * a2.d ** 2
    if integration == "collapsed":
        integral = math.pi * _causal_nf_squared(w0, R)
    elif integration == "lorentzian":
        spec = spec or QuadratureSpec(abs_tol=1e-14, rel_tol=1e-11)
        tau = lambda w: (G / 2.0) / ((w0 - w) ** 2 + G * G / 4.0)
        integral = _quad(lambda w: _causal_nf_squared(w, R) * tau(w),
                         0.75 * w0, 1.25 * w0, spec, points=[w0])
    else:
        raise ValueError(f"unknown integration {integration!r}")
    W = d2 * integral / G
    r0 = (W * G * R ** 6) ** (1.0 / 6.0)
    return W, r0


def transfer_split(R: float, T: float) -> tuple[float, float]:
    """(subluminal, superluminal) weights of transfer within a window |t| < T."""
    f = superluminal_fraction(R, T)
    return 1.0 - f, f


def dipole_from_oscillator_strength(f: float, omega: float) -> float:
    """|d| from the oscillator strength, |d|^2 = f/(2 omega), natural units."""
    if f <= 0.0 or omega <= 0.0:
        raise ValueError("oscillator strength and frequency must be positive")
    return math.sqrt(f / (2.0 * omega))
