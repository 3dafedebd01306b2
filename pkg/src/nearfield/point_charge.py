"""Near field of a fixed point charge under exponential interaction switching.

The generalized current is the switching derivative of a static charge at the
origin; its field is evaluated in the mixed (omega, r), momentum (omega, k),
and time (t, r) representations, together with regime asymptotics, the stored
field energy, and the effective charge density.

Representation notes (shared with :mod:`nearfield.engine`): the momentum form
carries an ``as_printed`` variant and a ``transform_consistent`` variant; the
time-domain field defaults to the exact inverse transform of the mixed form
(``transform_consistent``), with the conventional closed form available as
``as_printed`` -- the two differ by an overall factor -4 and a conjugation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import special

from .numerics import QuadratureSpec, step, _quad

__all__ = [
    "ChargeConfig",
    "current_time",
    "current_freq",
    "field_mixed",
    "field_momentum",
    "field_time",
    "field_asymptotic",
    "self_energy",
    "self_energy_diagnostic",
    "charge_density_mixed",
    "charge_density_farfield_ratio",
]


@dataclass(frozen=True)
class ChargeConfig:
    """Charge magnitude and switching rate (natural units)."""

    Q: float = 1.0
    gamma: float = 1.0

    def __post_init__(self) -> None:
        if self.gamma <= 0.0:
            raise ValueError("switching rate gamma must be positive")


def current_time(cfg: ChargeConfig, t: float) -> float:
    """Generalized-current amplitude in time (the point support is implicit)."""
    if t == 0.0:
        return 0.0
    return -cfg.gamma * cfg.Q * math.copysign(1.0, t) * math.exp(-cfg.gamma * abs(t))


def current_freq(cfg: ChargeConfig, omega: float) -> complex:
    """Frequency amplitude of the generalized current."""
    g = cfg.gamma
    return 1j * g * cfg.Q * omega / (math.pi * (omega * omega + g * g))


def field_mixed(cfg: ChargeConfig, omega: float, r: float) -> complex:
    """Radial field in (omega, r); supported on omega <= 0, finite at omega = 0."""
    if r <= 0.0:
        raise ValueError("r must be positive")
    gate = step(-omega)
    if gate == 0.0:
        return 0.0 + 0.0j
    g = cfg.gamma
    radial = omega * math.cos(omega * r) / r - math.sin(omega * r) / r ** 2
    return complex(gate * g * cfg.Q * radial / (2.0 * math.pi ** 2 * (omega ** 2 + g ** 2)))


def field_momentum(cfg: ChargeConfig, omega: float, k: float,
                   form: str = "as_printed") -> complex:
    """Radial field in (omega, k); see the module docstring for the two forms."""
    if k <= 0.0:
        raise ValueError("k must be positive")
    if k == abs(omega):
        raise ValueError("light-cone singularity at k = |omega|")
    gate = step(-omega)
    if gate == 0.0:
        return 0.0 + 0.0j
    g = cfg.gamma
    log_term = math.log(abs((k - omega) / (k + omega)))
    if form == "as_printed":
        braces = 4.0 * omega / (k * k - omega * omega) - log_term
        if k < abs(omega):
            braces -= 1j * math.pi
        pref = gate * g * cfg.Q / (4.0 * math.pi ** 3 * (omega ** 2 + g ** 2))
    elif form == "transform_consistent":
        braces = 2.0 * omega / (k * k - omega * omega) + log_term / k
        pref = gate * g * cfg.Q / (8.0 * math.pi ** 4 * (omega ** 2 + g ** 2))
    else:
        raise ValueError(f"unknown form {form!r}")
    return pref * braces


# ---------------------------------------------------------------------------
# the half-line Lorentzian sine transform and its derivative
# ---------------------------------------------------------------------------

def _lorentz_sine_pair(x: float) -> tuple[float, float]:
    """(F(x), F'(x)) with F(x) = int_0^inf sin(u x)/(u^2+1) du, x > 0.

    For x <= 8 the hyperbolic-integral form shi*cosh - chi*sinh is stable;
    beyond that it cancels catastrophically (terms grow like e^{2x}) and the
    exponentially scaled forms e^{-x}Ei(x), e^{x}E1(x) are used instead.
    """
    if x <= 0.0:
        raise ValueError("internal: x must be positive")
    if x <= 8.0:
        shi, chi = special.shichi(x)
        return (float(shi * math.cosh(x) - chi * math.sinh(x)),
                float(shi * math.sinh(x) - chi * math.cosh(x)))
    a = math.exp(-x) * float(special.expi(x))
    b = math.exp(x) * float(special.exp1(x))
    return (0.5 * (a + b), 0.5 * (b - a))


def _switch_bracket(beta: float) -> tuple[complex, complex]:
    """(G(beta), G'(beta)) with G = i pi e^{-|b|} - 2 F(b), F odd, F' even."""
    if beta == 0.0:
        raise ValueError("light-cone singularity: argument vanishes")
    f, fp = _lorentz_sine_pair(abs(beta))
    sgn = math.copysign(1.0, beta)
    g = 1j * math.pi * math.exp(-abs(beta)) - 2.0 * sgn * f
    gp = -1j * math.pi * sgn * math.exp(-abs(beta)) - 2.0 * fp
    return g, gp


def field_time(cfg: ChargeConfig, t: float, r: float,
               form: str = "transform_consistent") -> complex:
    """Radial field in (t, r), expressed through hyperbolic integrals.

    The radial derivative is evaluated symbolically on the bracketed
    combination of the advanced and retarded arguments ``gamma*(t -+ r)``.
    The default form is the exact inverse transform of :func:`field_mixed`;
    ``as_printed`` returns the conventional closed form, equal to -4 times the
    conjugate of the default.
    """
    if r <= 0.0:
        raise ValueError("r must be positive")
    if abs(abs(t) - r) < 1e-13 * max(1.0, r):
        raise ValueError("light-cone singularity at |t| = r")
    g = cfg.gamma
    beta, beta_bar = g * (t - r), g * (t + r)
    gb, gpb = _switch_bracket(beta)
    gbb, gpbb = _switch_bracket(beta_bar)
    # as-printed field: (2Q/(2 pi)^3) d/dr [ (G(beta) - G(beta_bar)) / r ]
    printed = (cfg.Q / (4.0 * math.pi ** 3)) * (
        -g * (gpb + gpbb) / r - (gb - gbb) / r ** 2)
    if form == "as_printed":
        return printed
    if form == "transform_consistent":
        return -0.25 * printed.conjugate()
    raise ValueError(f"unknown form {form!r}")


def field_asymptotic(cfg: ChargeConfig, regime: str, r: float) -> float:
    """Rough regime estimates of the t = 0 field."""
    if r <= 0.0:
        raise ValueError("r must be positive")
    if regime == "low_freq":
        return -cfg.Q / (math.pi ** 2 * cfg.gamma * r ** 3)
    if regime == "high_freq":
        return -cfg.Q * cfg.gamma / (2.0 * math.pi ** 2 * r)
    raise ValueError(f"unknown regime {regime!r}")


_ASYMPTOTIC_COEFF = 7.0 / (24.0 * math.pi ** 4)


@lru_cache(maxsize=1)
def _unit_full_numeric() -> float:
    """W(Q=1, gamma=1) from the exact t = 0 field, by adaptive quadrature."""
    def r_times_field(x: float) -> float:
        f, fp = _lorentz_sine_pair(x)
        return -(1.0 / (4.0 * math.pi ** 3)) * (fp - f / x)
    spec = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-12, max_subdivisions=800)
    body = _quad(lambda x: 0.5 * r_times_field(x) ** 2, 0.0, 60.0, spec,
                 points=[1e-3, 0.1, 1.0, 5.0, 20.0])
    # beyond the cutoff x*E -> (1/4 pi^3)(2/x^2 + 8/x^4)
    tail = _quad(lambda x: 0.5 * ((2.0 / x ** 2 + 8.0 / x ** 4) / (4.0 * math.pi ** 3)) ** 2,
                 60.0, np.inf, spec)
    return body + tail


def self_energy(cfg: ChargeConfig, method: str = "asymptotic_piecewise") -> float:
    """Stored near-field energy at the switching moment.

    ``asymptotic_piecewise`` integrates the two regime estimates over their
    stated ranges, which evaluates in closed form to ``7 Q^2 gamma / (24 pi^4)``.
    ``full_numeric`` uses the exact t = 0 field; in natural units
    ``W(Q, gamma) = Q^2 gamma W(1, 1)`` by the substitution x = gamma*r, so the
    unit integral is computed once and scaled.
    """
    if method == "asymptotic_piecewise":
        return _ASYMPTOTIC_COEFF * cfg.Q ** 2 * cfg.gamma
    if method == "full_numeric":
        return cfg.Q ** 2 * cfg.gamma * _unit_full_numeric()
    raise ValueError(f"unknown method {method!r}")


def self_energy_diagnostic(cfg: ChargeConfig) -> dict[str, float]:
    """Both self-energy estimates and their ratio (the regime estimates are rough)."""
    w_asym = self_energy(cfg, "asymptotic_piecewise")
    w_full = self_energy(cfg, "full_numeric")
    return {"asymptotic_piecewise": w_asym, "full_numeric": w_full,
            "ratio_full_to_asymptotic": w_full / w_asym}


def charge_density_mixed(cfg: ChargeConfig, omega: float, r: float) -> complex:
    """Effective charge density of the near field in (omega, r)."""
    if r <= 0.0:
        raise ValueError("r must be positive")
    gate = step(-omega)
    if gate == 0.0:
        return 0.0 + 0.0j
    g = cfg.gamma
    return (gate * 1j * cfg.Q / (2.0 * math.pi) ** 3
            * g * omega ** 2 / (omega ** 2 + g ** 2) * math.sin(omega * r) / r)


def charge_density_farfield_ratio(cfg: ChargeConfig, omega: float, r: float) -> complex:
    """Diagnostic: density over Q*gamma times the negative-frequency commutator.

    Reported, not asserted; the high-frequency limit approaches a constant of
    order 1/(4 pi^2) rather than unity.
    """
    rho = charge_density_mixed(cfg, omega, r)
    gate = step(-omega)
    if gate == 0.0 or math.sin(omega * r) == 0.0:
        raise ValueError("ratio undefined where the reference vanishes")
    reference = cfg.Q * cfg.gamma * gate * math.sin(omega * r) / (2.0 * math.pi * 1j * r)
    return rho / reference
