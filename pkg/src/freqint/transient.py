"""Transient behaviour of the one-step map on fast real modes.

For a real eigenvalue lambda < 0 the per-step gain g(lambda) is real.  A
negative gain alternates sign every step (numerical oscillation); a gain that
stays close to 1 freezes the transient instead of decaying it (sluggish).
Only gains well inside (0, 1) track a fast decay credibly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .integrators import CoefficientSet, IntegratorKind, build_coefficients

__all__ = [
    "TransientLabel",
    "TransientClass",
    "PositivityReport",
    "transient_gain",
    "gain_threshold",
    "classify_transient",
    "positivity_certificate",
    "transient_gain_table",
]


class TransientLabel(Enum):
    OSCILLATORY = "oscillatory"
    SLUGGISH = "sluggish"
    FAST_DECAY = "fast_decay"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TransientClass:
    """Classification of one (gain, lambda, h) combination."""

    label: TransientLabel
    gain: float
    exact_gain: float
    threshold: float


def transient_gain(coeffs: CoefficientSet, lam: float) -> float:
    """Real per-step gain at a real eigenvalue lam < 0."""
    lam = float(lam)
    if not lam < 0.0:
        raise ValueError(f"transient gain is defined for real lambda < 0, got {lam}")
    num = 1.0 + coeffs.b_prev * lam + coeffs.c_prev * lam * lam
    den = 1.0 - coeffs.b_now * lam - coeffs.c_now * lam * lam
    return num / den


# A decay is called sluggish when one step retains an order of magnitude more
# of the transient than the exact propagator, or more than a tenth outright.
_SLUGGISH_FLOOR = 0.1


def gain_threshold(lam: float, h: float) -> float:
    """Gain at or above which a decaying mode is classified as sluggish."""
    return max(10.0 * math.exp(lam * h), _SLUGGISH_FLOOR)


def classify_transient(gain: float, lam: float, h: float) -> TransientClass:
    """Label a per-step gain as oscillatory, sluggish, or fast_decay."""
    exact = math.exp(lam * h)
    threshold = gain_threshold(lam, h)
    if gain < 0.0:
        label = TransientLabel.OSCILLATORY
    elif gain >= threshold:
        label = TransientLabel.SLUGGISH
    else:
        label = TransientLabel.FAST_DECAY
    return TransientClass(label, gain, exact, threshold)


@dataclass(frozen=True)
class PositivityReport:
    """Whether the gain provably stays positive for every real lambda < 0.

    The numerator 1 + b_prev*lam + c_prev*lam^2 is the only sign risk once
    b_now > 0 and c_now <= 0 hold, so a negative discriminant (or a constant
    numerator) certifies positivity.  ``sign_change_lambda_h`` locates the
    first numerator root when certification fails.
    """

    kind: IntegratorKind
    applicable: bool
    numerator_constant: bool
    discriminant: float | None
    denominator_positive: bool
    sign_change_lambda_h: float | None
    sampled_min: float
    sampled_max: float
    passed: bool


def positivity_certificate(coeffs: CoefficientSet, n_samples: int = 400) -> PositivityReport:
    """Certify gain positivity on lambda < 0, with a sampled sanity sweep.

    Samples are taken log-uniformly over lambda*h in [-1e6, -1e-3] and are
    reported alongside the algebraic verdict.
    """
    h = coeffs.h
    numerator_constant = coeffs.b_prev == 0.0 and coeffs.c_prev == 0.0
    discriminant = None
    sign_change = None
    if not numerator_constant:
        discriminant = coeffs.b_prev * coeffs.b_prev - 4.0 * coeffs.c_prev
        if discriminant >= 0.0 and coeffs.c_prev != 0.0:
            root = (-coeffs.b_prev - math.sqrt(discriminant)) / (2.0 * coeffs.c_prev)
            sign_change = root * h
        elif discriminant >= 0.0 and coeffs.b_prev != 0.0:
            sign_change = -h / coeffs.b_prev
    denominator_positive = coeffs.b_now > 0.0 and coeffs.c_now <= 0.0
    applicable = denominator_positive and (
        numerator_constant or (discriminant is not None and discriminant < 0.0)
    )

    lo, hi = 1e-3, 1e6
    ratio = hi / lo
    gains = [
        transient_gain(coeffs, -(lo * ratio ** (k / (n_samples - 1))) / h)
        for k in range(n_samples)
    ]
    sampled_min = min(gains)
    sampled_max = max(gains)
    passed = applicable and sampled_min > 0.0
    return PositivityReport(
        coeffs.kind,
        applicable,
        numerator_constant,
        discriminant,
        denominator_positive,
        sign_change,
        sampled_min,
        sampled_max,
        passed,
    )


_TABLE_KINDS = (
    IntegratorKind.A,
    IntegratorKind.B,
    IntegratorKind.C,
    IntegratorKind.D,
    IntegratorKind.TR,
    IntegratorKind.BE,
)


def transient_gain_table(
    h: float,
    omega_select: float,
    lambda_h_magnitudes: list[float],
) -> list[tuple[float, ...]]:
    """Rows of (lambda_h, gain per kind in A..BE order, exact gain).

    ``lambda_h_magnitudes`` are positive |lambda*h| probe values; each row is
    evaluated at lambda = -m / h.
    """
    catalog = [build_coefficients(k, h, omega_select if k.needs_omega else 0.0) for k in _TABLE_KINDS]
    rows = []
    for m in lambda_h_magnitudes:
        m = float(m)
        if m <= 0.0:
            raise ValueError(f"lambda*h magnitudes must be positive, got {m}")
        lam = -m / h
        gains = tuple(transient_gain(cs, lam) for cs in catalog)
        rows.append((-m, *gains, math.exp(-m)))
    return rows
