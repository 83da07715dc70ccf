"""Coefficient catalogs for implicit one-step integrators using second derivatives.

Every integrator here advances a state through

    x(t) = a_prev*x(t-h) + b_now*xdot(t) + b_prev*xdot(t-h)
           + c_now*xddot(t) + c_prev*xddot(t-h)

and is fully described by the five coefficients.  Kinds A and B are tuned to
a selected angular frequency so that sinusoids at that frequency are
reconstructed without error; kinds C and D are their frequency-independent
limits.  TR (trapezoidal) and BE (backward Euler) are the classical baselines
with the second-derivative terms switched off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import StepSizeError

__all__ = [
    "IntegratorKind",
    "CoefficientSet",
    "build_coefficients",
    "validate_step_size",
    "step_size_bound",
]


class IntegratorKind(Enum):
    """Catalog of supported integrators."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"
    TR = "TR"
    BE = "BE"

    @property
    def needs_omega(self) -> bool:
        """True for kinds whose coefficients depend on the selected frequency."""
        return self in (IntegratorKind.A, IntegratorKind.B)

    @property
    def history_free(self) -> bool:
        """True when b_prev = c_prev = 0, so no derivative history is consumed."""
        return self in (IntegratorKind.B, IntegratorKind.D, IntegratorKind.BE)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class CoefficientSet:
    """One integrator recipe: kind, step size, tuning frequency, coefficients.

    Units: ``h`` in seconds, ``omega_select`` in rad/s (0 when the kind does
    not use it), ``b_*`` in seconds, ``c_*`` in seconds squared.
    """

    kind: IntegratorKind
    h: float
    omega_select: float
    a_prev: float
    b_now: float
    b_prev: float
    c_now: float
    c_prev: float

    @property
    def theta(self) -> float:
        """Dimensionless tuning angle omega_select * h."""
        return self.omega_select * self.h

    @property
    def history_free(self) -> bool:
        return self.b_prev == 0.0 and self.c_prev == 0.0


def step_size_bound(kind: IntegratorKind, omega_select: float = 0.0) -> float:
    """Exclusive upper bound on h for the given kind (inf when unconstrained)."""
    kind = IntegratorKind(kind)
    if not kind.needs_omega:
        return math.inf
    if omega_select <= 0.0:
        raise ValueError(f"kind {kind} requires omega_select > 0 rad/s")
    if kind is IntegratorKind.A:
        return 2.0 * math.pi / omega_select
    return math.pi / omega_select


def validate_step_size(kind: IntegratorKind, h: float, omega_select: float = 0.0) -> float:
    """Check 0 < h < bound for the kind; return the bound.

    Raises :class:`StepSizeError` on violation.  The bound is exclusive on
    both ends: the tuned kinds degenerate at h = bound exactly.
    """
    kind = IntegratorKind(kind)
    bound = step_size_bound(kind, omega_select)
    if not (0.0 < h < bound) or not math.isfinite(h):
        raise StepSizeError(kind, h, bound)
    return bound


# Direct evaluation of 1 - x*cot(x) loses all significant digits as x -> 0,
# so switch to the series below this half-angle.
_SERIES_X_MAX = 0.05


def _one_minus_x_cot_x(x: float) -> float:
    """1 - x*cot(x) for x in (0, pi), safe against cancellation near 0."""
    if x < _SERIES_X_MAX:
        x2 = x * x
        return x2 * (
            1.0 / 3.0
            + x2 * (1.0 / 45.0 + x2 * (2.0 / 945.0 + x2 * (1.0 / 4725.0 + x2 * (2.0 / 93555.0))))
        )
    return 1.0 - x / math.tan(x)


def _cos_minus_one(theta: float) -> float:
    """cos(theta) - 1 without cancellation, via the half-angle identity."""
    s = math.sin(0.5 * theta)
    return -2.0 * s * s


def build_coefficients(
    kind: IntegratorKind, h: float, omega_select: float = 0.0
) -> CoefficientSet:
    """Build the coefficient set for ``kind`` at step size ``h`` seconds.

    Parameters
    ----------
    kind : IntegratorKind or str
        Which recipe to build.
    h : float
        Step size in seconds.  Must satisfy ``validate_step_size``.
    omega_select : float
        Tuning frequency in rad/s.  Required (> 0) for kinds A and B,
        ignored and stored as 0 otherwise.

    Returns
    -------
    CoefficientSet
    """
    kind = IntegratorKind(kind)
    if not kind.needs_omega:
        validate_step_size(kind, h)
        if kind is IntegratorKind.C:
            cc = h * h / 12.0
            return CoefficientSet(kind, h, 0.0, 1.0, 0.5 * h, 0.5 * h, -cc, cc)
        if kind is IntegratorKind.D:
            return CoefficientSet(kind, h, 0.0, 1.0, h, 0.0, -0.5 * h * h, 0.0)
        if kind is IntegratorKind.TR:
            return CoefficientSet(kind, h, 0.0, 1.0, 0.5 * h, 0.5 * h, 0.0, 0.0)
        return CoefficientSet(kind, h, 0.0, 1.0, h, 0.0, 0.0, 0.0)

    validate_step_size(kind, h, omega_select)
    w = float(omega_select)
    theta = w * h
    if kind is IntegratorKind.A:
        c_prev = _one_minus_x_cot_x(0.5 * theta) / (w * w)
        return CoefficientSet(kind, h, w, 1.0, 0.5 * h, 0.5 * h, -c_prev, c_prev)
    # kind B
    b_now = math.sin(theta) / w
    c_now = _cos_minus_one(theta) / (w * w)
    return CoefficientSet(kind, h, w, 1.0, b_now, 0.0, c_now, 0.0)
