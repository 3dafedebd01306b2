"""Light-cone singular functions and their near-field (time-smoothed) partners.

The base family is the commutator function of the free wave equation and its
relatives (labelled ``d``, ``d1``, ``d_plus``, ``d_minus``); the near-field
family (``dn``, ``dn1``, ``dn_plus``, ``dn_minus``) is obtained from it by
double time smoothing and is supported off the light cone as well.

Sign convention: the canonical near-field function is the smoothing-integral
form ``dn(t, r) = (|t-r| - |t+r|) / (8 pi r)``, the unique sign for which
``d/dt dn = -theta(r^2-t^2)/(4 pi r)`` and ``d^2/dt^2 dn`` reproduces the
delta-shell commutator exactly.  The opposite (piecewise-printed) sign is
available through ``sign_convention="as_printed"``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .numerics import step

__all__ = [
    "SpacetimePoint",
    "MixedPoint",
    "SpectralPoint",
    "LogScale",
    "TensorBlock",
    "OnShellSupport",
    "OnConeSupport",
    "CoulombGaugeBlocks",
    "traceless_projector",
    "radiation_weight",
    "singular_time",
    "singular_mixed",
    "singular_momentum_nf",
    "tensor_decompose",
    "tensor_momentum",
    "coulomb_gauge_momentum",
    "nf_squared",
    "superluminal_fraction",
]

Region = Literal["FF", "IF", "NF"]

_TIME_KINDS = ("dn", "dn1", "dn_plus", "dn_minus")
_MIXED_KINDS = ("d", "d1", "d_plus", "d_minus") + _TIME_KINDS


def _as_unit(e) -> np.ndarray:
    e = np.asarray(e, dtype=float)
    if e.shape != (3,):
        raise ValueError("direction must be a 3-vector")
    n = float(np.linalg.norm(e))
    if abs(n - 1.0) > 1e-12:
        raise ValueError("direction must have unit norm to 1e-12")
    return e


@dataclass(frozen=True)
class SpacetimePoint:
    """(t, r) evaluation point; supply r_vec when tensor structure is needed."""

    t: float
    r: float | None = None
    r_vec: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.r is None and self.r_vec is None:
            raise ValueError("need r or r_vec")
        if self.r_vec is not None:
            vec = np.asarray(self.r_vec, dtype=float)
            if vec.shape != (3,):
                raise ValueError("r_vec must be a 3-vector")
            object.__setattr__(self, "r_vec", vec)
            norm = float(np.linalg.norm(vec))
            if self.r is None:
                object.__setattr__(self, "r", norm)
            elif abs(norm - self.r) > 1e-12 * max(1.0, self.r):
                raise ValueError("r and |r_vec| disagree")
        if self.r < 0.0:
            raise ValueError("r must be >= 0")

    @property
    def direction(self) -> np.ndarray:
        if self.r_vec is None or self.r == 0.0:
            raise ValueError("point carries no direction")
        return self.r_vec / self.r


@dataclass(frozen=True)
class MixedPoint:
    """(omega, r) evaluation point; the mixed forms carry explicit 1/r factors."""

    omega: float
    r: float

    def __post_init__(self) -> None:
        if self.r <= 0.0:
            raise ValueError("mixed representation requires r > 0")


@dataclass(frozen=True)
class SpectralPoint:
    """(omega, k) evaluation point."""

    omega: float
    k: float | None = None
    k_vec: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.k is None and self.k_vec is None:
            raise ValueError("need k or k_vec")
        if self.k_vec is not None:
            vec = np.asarray(self.k_vec, dtype=float)
            if vec.shape != (3,):
                raise ValueError("k_vec must be a 3-vector")
            object.__setattr__(self, "k_vec", vec)
            norm = float(np.linalg.norm(vec))
            if self.k is None:
                object.__setattr__(self, "k", norm)
            elif abs(norm - self.k) > 1e-12 * max(1.0, self.k):
                raise ValueError("k and |k_vec| disagree")
        if self.k <= 0.0:
            raise ValueError("k must be > 0")

    @property
    def direction(self) -> np.ndarray:
        return self.k_vec / self.k if self.k_vec is not None else None


@dataclass(frozen=True)
class LogScale:
    """Reference length balancing the arguments of logarithms."""

    mu: float = 1.0

    def __post_init__(self) -> None:
        if self.mu <= 0.0:
            raise ValueError("mu must be positive")


@dataclass(frozen=True)
class OnShellSupport:
    """Distributional far-field block in (omega, k): support omega^2 = k^2."""

    weight: complex          # scalar multiplying the delta, including epsilon(omega)
    residue: float           # 1/(2k), the weight per one-sided frequency root
    tensor: np.ndarray       # (delta_ij + e_i e_j) direction weight


@dataclass(frozen=True)
class OnConeSupport:
    """Distributional far-field block in (t, r): delta shells at t = +-r."""

    coeff_outgoing: float    # coefficient of delta(t - r)
    coeff_incoming: float    # coefficient of delta(t + r)
    tensor: np.ndarray


@dataclass(frozen=True)
class TensorBlock:
    values: np.ndarray
    region: Region
    e: np.ndarray
    support: OnShellSupport | OnConeSupport | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", np.asarray(self.values, dtype=complex))
        object.__setattr__(self, "e", _as_unit(self.e))
        if self.values.shape != (3, 3):
            raise ValueError("values must be 3x3")


@dataclass(frozen=True)
class CoulombGaugeBlocks:
    projector: np.ndarray    # transverse projector delta_ij - k_i k_j / k^2
    d00: float               # -1/k^2
    di0: float               # 0 identically
    scalar: OnShellSupport   # the on-shell scalar multiplying the projector


def traceless_projector(e) -> np.ndarray:
    """P_ij = delta_ij - 3 e_i e_j (traceless, symmetric)."""
    e = _as_unit(e)
    return np.eye(3) - 3.0 * np.outer(e, e)


def radiation_weight(e) -> np.ndarray:
    """delta_ij + e_i e_j, the far-field direction weight."""
    e = _as_unit(e)
    return np.eye(3) + np.outer(e, e)


# ---------------------------------------------------------------------------
# scalar singular functions
# ---------------------------------------------------------------------------

def _dn_time(t: float, r: float) -> float:
    return (abs(t - r) - abs(t + r)) / (8.0 * math.pi * r)


def _dn1_time(t: float, r: float, mu: float) -> float:
    # real principal branch; arguments divided by mu to balance dimensions
    a, b = t + r, t - r
    return ((a * math.log(abs(a) / mu)) - (b * math.log(abs(b) / mu))) / (4.0 * math.pi ** 2 * r)


def singular_time(kind: str, p: SpacetimePoint, scale: LogScale | None = None,
                  sign_convention: str = "canonical") -> complex:
    """Near-field singular functions in the (t, r) representation."""
    if kind not in _TIME_KINDS:
        raise ValueError(f"unknown time-domain kind {kind!r}")
    if p.r == 0.0:
        raise ValueError("time-domain singular functions need r > 0")
    if sign_convention not in ("canonical", "as_printed"):
        raise ValueError("sign_convention must be 'canonical' or 'as_printed'")
    mu = (scale or LogScale()).mu
    flip = -1.0 if sign_convention == "as_printed" else 1.0
    if kind == "dn":
        return complex(flip * _dn_time(p.t, p.r))
    if abs(abs(p.t) - p.r) < 1e-14 * max(1.0, p.r):
        raise ValueError("logarithmic singularity on the light cone |t| = r")
    if kind == "dn1":
        return complex(_dn1_time(p.t, p.r, mu))
    dn = flip * _dn_time(p.t, p.r)
    dn1 = _dn1_time(p.t, p.r, mu)
    sign = -1.0 if kind == "dn_plus" else 1.0
    return 0.5 * (dn + sign * 1j * dn1)


def singular_mixed(kind: str, p: MixedPoint) -> complex:
    """Singular functions in the (omega, r) representation.

    Base family: ``d(omega, r) = sin(omega r) / (2 pi i r)``, with
    ``d1 = sgn(omega) d`` and ``d_plus/minus = theta(+-omega) d``; the
    near-field family divides by ``-omega^2`` and is singular at omega = 0.
    """
    if kind not in _MIXED_KINDS:
        raise ValueError(f"unknown mixed-representation kind {kind!r}")
    w, r = p.omega, p.r
    base = math.sin(w * r) / (2.0 * math.pi * 1j * r)
    if kind.startswith("dn"):
        if w == 0.0:
            raise ValueError("near-field mixed forms have a pole at omega = 0")
        base = -base / w ** 2
        suffix = kind[2:]
    else:
        suffix = kind[1:]
    if suffix == "":
        return base
    if suffix == "1":
        return math.copysign(1.0, w) * base if w != 0.0 else 0.0 * base
    if suffix == "_plus":
        return step(w) * base
    return step(-w) * base


def singular_momentum_nf(p: SpectralPoint) -> complex:
    """Near-field scalar in (omega, k): off-shell support on both sides of the cone."""
    w, k = p.omega, p.k
    if w == 0.0:
        raise ValueError("near-field momentum scalar has a pole at omega = 0")
    braces = abs(w) * step(w * w - k * k) + k * step(k * k - w * w)
    return braces / (8.0 * math.pi ** 2 * 1j * w * w * k)


# ---------------------------------------------------------------------------
# tensor decomposition
# ---------------------------------------------------------------------------

def _resolve_direction(p, e) -> np.ndarray:
    if e is not None:
        return _as_unit(e)
    d = getattr(p, "r_vec", None)
    if d is None:
        d = getattr(p, "k_vec", None)
    if d is None:
        raise ValueError("tensor blocks need a direction: pass e or a vector-valued point")
    return _as_unit(np.asarray(d, dtype=float) / np.linalg.norm(d))


def tensor_decompose(p: SpacetimePoint | MixedPoint, which: str = "all",
                     e=None) -> TensorBlock | dict[str, TensorBlock]:
    """Far/intermediate/near tensor blocks in the (t, r) or (omega, r) domain.

    Time domain: the far-field block lives on the light cone and is returned
    as a delta-shell descriptor (zero matrix off the cone); the intermediate
    and near blocks are ordinary matrices.  Mixed domain: the three terms of
    the cotangent decomposition, taken verbatim (the intermediate block has
    poles at omega*r = n*pi).
    """
    direction = _resolve_direction(p, e)
    P = traceless_projector(direction)
    W = radiation_weight(direction)
    blocks: dict[str, TensorBlock] = {}
    wanted = ("FF", "IF", "NF") if which == "all" else (which,)
    for region in wanted:
        if region not in ("FF", "IF", "NF"):
            raise ValueError(f"unknown region {region!r}")
    if isinstance(p, SpacetimePoint):
        t, r = p.t, p.r
        if r <= 0.0:
            raise ValueError("tensor blocks need r > 0")
        if "FF" in wanted:
            c = 1.0 / (4.0 * math.pi * r)
            support = OnConeSupport(coeff_outgoing=c, coeff_incoming=-c, tensor=W)
            blocks["FF"] = TensorBlock(np.zeros((3, 3)), "FF", direction, support=support)
        if "IF" in wanted:
            blocks["IF"] = TensorBlock(
                (step(r * r - t * t) / (4.0 * math.pi * r)) * P, "IF", direction)
        if "NF" in wanted:
            blocks["NF"] = TensorBlock((_dn_time(t, r) / r ** 2) * P, "NF", direction)
    elif isinstance(p, MixedPoint):
        w, r = p.omega, p.r
        d_scalar = math.sin(w * r) / (2.0 * math.pi * 1j * r)
        if "FF" in wanted:
            blocks["FF"] = TensorBlock(d_scalar * W, "FF", direction)
        if "IF" in wanted:
            x = w * r
            if abs(math.sin(x)) < 1e-12:
                raise ValueError("cotangent pole: omega*r is a multiple of pi")
            blocks["IF"] = TensorBlock(
                (-1j / x) * (math.cos(x) / math.sin(x)) * d_scalar * P, "IF", direction)
        if "NF" in wanted:
            blocks["NF"] = TensorBlock((d_scalar / (w * r) ** 2) * P, "NF", direction)
    else:
        raise TypeError("p must be a SpacetimePoint or MixedPoint")
    return blocks if which == "all" else blocks[wanted[0]]


def tensor_momentum(p: SpectralPoint, which: str, e=None) -> TensorBlock:
    """Far/intermediate/near tensor blocks in the (omega, k) domain."""
    direction = _resolve_direction(p, e)
    P = traceless_projector(direction)
    W = radiation_weight(direction)
    w, k = p.omega, p.k
    if which == "FF":
        scalar = 2.0 / ((2.0 * math.pi) ** 3 * 1j) * math.copysign(1.0, w) if w != 0.0 else 0.0
        on_shell = math.isclose(w * w, k * k, rel_tol=1e-14, abs_tol=0.0)
        support = OnShellSupport(weight=scalar, residue=1.0 / (2.0 * k), tensor=W) if on_shell else None
        return TensorBlock(np.zeros((3, 3)), "FF", direction, support=support)
    if w == 0.0:
        raise ValueError("IF and NF momentum blocks have a pole at omega = 0")
    if which == "IF":
        return TensorBlock(
            (step(k * k - w * w) / (8.0 * math.pi * 1j * w * k)) * P, "IF", direction)
    if which == "NF":
        return TensorBlock(singular_momentum_nf(p) * P, "NF", direction)
    raise ValueError(f"unknown region {which!r}")


def coulomb_gauge_momentum(p: SpectralPoint) -> CoulombGaugeBlocks:
    """Transverse-projector form of the momentum-space blocks.

    The spatial block is the transverse projector times the on-shell scalar;
    the time-time component is the instantaneous Coulomb kernel -1/k^2 and the
    mixed components vanish.
    """
    if p.k_vec is None:
        raise ValueError("coulomb gauge blocks need k_vec")
    k = p.k
    kk = np.outer(p.k_vec, p.k_vec) / k ** 2
    projector = np.eye(3) - kk
    scalar = OnShellSupport(
        weight=2.0 / ((2.0 * math.pi) ** 3 * 1j) * (math.copysign(1.0, p.omega) if p.omega else 0.0),
        residue=1.0 / (2.0 * k),
        tensor=projector)
    return CoulombGaugeBlocks(projector=projector, d00=-1.0 / k ** 2, di0=0.0, scalar=scalar)


# ---------------------------------------------------------------------------
# squared near-field block and excitation-transfer weights
# ---------------------------------------------------------------------------

def nf_squared(p: SpacetimePoint) -> float:
    """Squared magnitude of the near-field block in the time domain."""
    t, r = p.t, p.r
    if r <= 0.0:
        raise ValueError("r must be positive")
    pref = 1.0 / (4.0 * math.pi * r * r) ** 2
    return pref * (step(t * t - r * r) + (t / r) ** 2 * step(r * r - t * t))


def superluminal_fraction(r: float, T: float) -> float:
    """Weight of the space-like (|t| < r) part of the squared near field.

    Ratio of the integral of :func:`nf_squared` over |t| < r to the integral
    over |t| < T, with T > r.  Closed form: r / (3T - 2r).
    """
    if r <= 0.0:
        raise ValueError("r must be positive")
    if T <= r:
        raise ValueError("the observation window must satisfy T > r")
    return r / (3.0 * T - 2.0 * r)
