"""Amplification factor and stability characterization.

On the scalar test system xdot = lambda*x a coefficient set reduces to the
one-step map x_new = g * x_old with

    g(lambda) = (1 + b_prev*lambda + c_prev*lambda^2)
                / (1 - b_now*lambda - c_now*lambda^2)

|g| <= 1 is the stability condition.  Kind A keeps |g| < 1 on the whole open
left half-plane for any admissible step; kind B guarantees it only inside the
wedge |Re| > |Im|, Re < 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GridError, SingularDenominatorError
from .integrators import CoefficientSet, IntegratorKind

__all__ = [
    "StabilityMap",
    "LStabilityReport",
    "amplification",
    "stability_map",
    "wedge_contains",
    "check_l_stability",
    "DEFAULT_L_PROBES",
]


def amplification(coeffs: CoefficientSet, lam: complex) -> complex:
    """Amplification factor g at eigenvalue ``lam`` (rad/s, complex allowed)."""
    lam = complex(lam)
    num = 1.0 + coeffs.b_prev * lam + coeffs.c_prev * lam * lam
    den = 1.0 - coeffs.b_now * lam - coeffs.c_now * lam * lam
    if den == 0:
        raise SingularDenominatorError(
            f"amplification denominator vanishes at lambda={lam!r} for kind {coeffs.kind}"
        )
    return num / den


@dataclass(frozen=True)
class StabilityMap:
    """|g| sampled over a rectangle of the dimensionless plane mu = lambda*h.

    ``magnitude[i, j]`` corresponds to mu = re_axis[i] + 1j*im_axis[j].
    Cells where the denominator vanishes hold +inf.
    """

    kind: IntegratorKind
    theta: float
    re_axis: np.ndarray
    im_axis: np.ndarray
    magnitude: np.ndarray


def stability_map(
    coeffs: CoefficientSet,
    re_range: tuple[float, float] = (-50.0, 0.0),
    im_range: tuple[float, float] = (-50.0, 50.0),
    n: int | tuple[int, int] = 201,
) -> StabilityMap:
    """Sample |g| over a grid of mu = lambda*h.

    ``n`` is points per axis, or a (n_re, n_im) pair.  Ranges are inclusive
    and must be strictly increasing with at least 2 points per axis.
    """
    n_re, n_im = (n, n) if isinstance(n, int) else n
    if n_re < 2 or n_im < 2:
        raise GridError(f"stability map needs at least 2 points per axis, got {n!r}")
    re_min, re_max = re_range
    im_min, im_max = im_range
    if not (re_min < re_max) or not (im_min < im_max):
        raise GridError(
            f"inverted or empty map ranges: re {re_range!r}, im {im_range!r}"
        )
    re_axis = np.linspace(re_min, re_max, n_re)
    im_axis = np.linspace(im_min, im_max, n_im)
    lam = (re_axis[:, None] + 1j * im_axis[None, :]) / coeffs.h
    num = 1.0 + coeffs.b_prev * lam + coeffs.c_prev * lam * lam
    den = 1.0 - coeffs.b_now * lam - coeffs.c_now * lam * lam
    with np.errstate(divide="ignore", invalid="ignore"):
        mag = np.abs(num) / np.abs(den)
    # 0/0 cells are poles hit dead on by a designed zero; report them singular too
    mag[np.isnan(mag)] = np.inf
    return StabilityMap(coeffs.kind, coeffs.theta, re_axis, im_axis, mag)


def wedge_contains(lam: complex) -> bool:
    """True when lam lies strictly inside the wedge Re < 0, |Re| > |Im|."""
    lam = complex(lam)
    return lam.real < 0.0 and abs(lam.real) > abs(lam.imag)


DEFAULT_L_PROBES: tuple[float, ...] = (1e1, 1e2, 1e3, 1e4, 1e5, 1e6)

# |g| at the largest probe must have collapsed at least this far for a pass.
_L_DECAY_CEILING = 1e-3


@dataclass(frozen=True)
class LStabilityReport:
    """|g| probed along the negative real axis at growing |lambda*h|."""

    probe_magnitudes: tuple[float, ...]
    gain_magnitudes: tuple[float, ...]
    decreasing: bool
    final_below_ceiling: bool
    passed: bool


def check_l_stability(
    coeffs: CoefficientSet,
    probe_magnitudes: tuple[float, ...] = DEFAULT_L_PROBES,
) -> LStabilityReport:
    """Probe |g| at lambda*h = -m for each magnitude m, largest last.

    Passes when the magnitudes decrease strictly toward zero, i.e. the
    integrator actually flattens stiff transients instead of merely not
    amplifying them.
    """
    probes = tuple(float(m) for m in probe_magnitudes)
    if len(probes) < 2 or any(m <= 0 for m in probes):
        raise ValueError(f"need at least two positive probe magnitudes, got {probe_magnitudes!r}")
    if any(b <= a for a, b in zip(probes, probes[1:])):
        raise ValueError("probe magnitudes must increase strictly")
    gains = tuple(abs(amplification(coeffs, -m / coeffs.h)) for m in probes)
    decreasing = all(b < a for a, b in zip(gains, gains[1:]))
    final_ok = gains[-1] < _L_DECAY_CEILING
    return LStabilityReport(probes, gains, decreasing, final_ok, decreasing and final_ok)
