"""Frequency-domain error of a coefficient set.

The reconstruction error at complex frequency s is

    E(s) = 1 - (a_prev*e^{-sh} + b_now*s + b_prev*s*e^{-sh}
                + c_now*s^2 + c_prev*s^2*e^{-sh})

i.e. the relative residual left when the recipe is applied to e^{st}.
Roots of E and their multiplicities are the design signature of each kind:
the tuned kinds place simple roots at +/- j*omega_select, and the root
multiplicity at 0 matches the order of the local truncation error.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import GridError
from .integrators import CoefficientSet, IntegratorKind

__all__ = [
    "ErrorSample",
    "RootCheck",
    "RootReport",
    "MAX_DERIVATIVE_ORDER",
    "relative_error_at",
    "error_derivative_at",
    "magnitude_sweep",
    "default_sweep_grid",
    "expected_roots",
    "verify_root_design",
]

# Orders 1..4 cover every multiplicity claim below except the quintuple root,
# whose first nonvanishing derivative is the fifth.
MAX_DERIVATIVE_ORDER = 5


@dataclass(frozen=True)
class ErrorSample:
    """E evaluated at one angular frequency (s = j*omega)."""

    omega: float
    error: complex
    magnitude: float


def relative_error_at(coeffs: CoefficientSet, s: complex) -> complex:
    """Reconstruction error E(s) of the coefficient set at complex frequency s."""
    s = complex(s)
    em = cmath.exp(-s * coeffs.h)
    recon = (
        coeffs.a_prev * em
        + coeffs.b_now * s
        + coeffs.b_prev * s * em
        + (coeffs.c_now + coeffs.c_prev * em) * s * s
    )
    return 1.0 - recon


def error_derivative_at(coeffs: CoefficientSet, s: complex, order: int) -> complex:
    """Closed-form d^n E / ds^n at s, for n = 1..MAX_DERIVATIVE_ORDER.

    Each history term carries e^{-sh}, so the derivatives follow from the
    product rule:

        d^n/ds^n [e^{-sh}]      = (-h)^n e^{-sh}
        d^n/ds^n [s e^{-sh}]    = (-h)^(n-1) e^{-sh} (n - h s)
        d^n/ds^n [s^2 e^{-sh}]  = (-h)^(n-2) e^{-sh} ((h s)^2 - 2 n h s + n(n-1))
    """
    n = int(order)
    if not 1 <= n <= MAX_DERIVATIVE_ORDER:
        raise ValueError(f"unsupported derivative order {order}; expected 1..{MAX_DERIVATIVE_ORDER}")
    s = complex(s)
    h = coeffs.h
    em = cmath.exp(-s * h)
    hs = h * s
    total = coeffs.a_prev * (-h) ** n * em
    if n == 1:
        total += coeffs.b_now + 2.0 * coeffs.c_now * s
    elif n == 2:
        total += 2.0 * coeffs.c_now
    total += coeffs.b_prev * (-h) ** (n - 1) * em * (n - hs)
    total += coeffs.c_prev * (-h) ** (n - 2) * em * (hs * hs - 2.0 * n * hs + n * (n - 1))
    return -total


def default_sweep_grid(coeffs: CoefficientSet) -> tuple[float, float, int]:
    """Default magnitude-sweep grid: 2001 linear points covering the tuned band."""
    if coeffs.omega_select > 0.0:
        return 0.0, 2.0 * coeffs.omega_select, 2001
    return 0.0, 2.0 * cmath.pi / coeffs.h, 2001


def magnitude_sweep(
    coeffs: CoefficientSet,
    omega_min: float,
    omega_max: float,
    n_points: int,
    spacing: str = "linear",
) -> list[ErrorSample]:
    """Sample |E(j*omega)| over an angular-frequency grid.

    ``spacing`` is "linear" or "log"; log spacing requires omega_min > 0.
    Returns one :class:`ErrorSample` per grid point, in ascending omega.
    """
    if n_points < 2:
        raise GridError(f"sweep needs at least 2 points, got {n_points}")
    if not 0.0 <= omega_min < omega_max:
        raise GridError(
            f"invalid sweep range [{omega_min}, {omega_max}]: need 0 <= omega_min < omega_max"
        )
    if spacing == "linear":
        span = omega_max - omega_min
        grid = [omega_min + span * k / (n_points - 1) for k in range(n_points)]
    elif spacing == "log":
        if omega_min <= 0.0:
            raise GridError("log spacing requires omega_min > 0")
        ratio = omega_max / omega_min
        grid = [omega_min * ratio ** (k / (n_points - 1)) for k in range(n_points)]
    else:
        raise GridError(f"unknown spacing {spacing!r}; expected 'linear' or 'log'")
    out = []
    for w in grid:
        e = relative_error_at(coeffs, 1j * w)
        out.append(ErrorSample(w, e, abs(e)))
    return out


def expected_roots(coeffs: CoefficientSet) -> tuple[tuple[complex, int], ...]:
    """Designed roots of E with multiplicities for the coefficient set's kind."""
    w = coeffs.omega_select
    kind = coeffs.kind
    if kind is IntegratorKind.A:
        return ((0j, 3), (1j * w, 1), (-1j * w, 1))
    if kind is IntegratorKind.B:
        return ((0j, 1), (1j * w, 1), (-1j * w, 1))
    if kind is IntegratorKind.C:
        return ((0j, 5),)
    if kind is IntegratorKind.BE:
        return ((0j, 2),)
    # D and TR both cancel E through the second derivative at the origin
    return ((0j, 3),)


@dataclass(frozen=True)
class RootCheck:
    """One derivative order examined at one claimed root."""

    order: int
    magnitude: float
    threshold: float
    requirement: str  # "below" for orders < multiplicity, "above" at multiplicity
    passed: bool


@dataclass(frozen=True)
class RootReport:
    """Outcome of checking one claimed root of E.

    ``derivative_magnitudes`` holds |E^(k)| for k = 0..multiplicity-1; the
    entry at the claimed multiplicity itself must sit above threshold to
    prove the root is not of higher order.
    """

    location: complex
    claimed_multiplicity: int
    checks: tuple[RootCheck, ...]
    passed: bool

    @property
    def derivative_magnitudes(self) -> tuple[float, ...]:
        return tuple(c.magnitude for c in self.checks[:-1])

    @property
    def next_derivative_magnitude(self) -> float:
        return self.checks[-1].magnitude


def _coefficient_scale(coeffs: CoefficientSet) -> float:
    """Dimensionless size of the recipe, used to normalize root tolerances."""
    h = coeffs.h
    return (
        1.0
        + abs(coeffs.a_prev)
        + (abs(coeffs.b_now) + abs(coeffs.b_prev)) / h
        + (abs(coeffs.c_now) + abs(coeffs.c_prev)) / (h * h)
    )


def verify_root_design(coeffs: CoefficientSet, tolerance: float = 1e-9) -> list[RootReport]:
    """Check that E has exactly the designed roots and multiplicities.

    For a root claimed with multiplicity m, derivative orders 0..m-1 must fall
    below ``tolerance`` and order m must rise above it.  Magnitudes at order k
    are compared against ``tolerance * h^k * scale`` so the verdict does not
    depend on the units of h.
    """
    if tolerance <= 0.0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")
    scale = _coefficient_scale(coeffs)
    reports = []
    for location, mult in expected_roots(coeffs):
        checks = []
        ok = True
        for k in range(mult + 1):
            if k == 0:
                mag = abs(relative_error_at(coeffs, location))
            else:
                mag = abs(error_derivative_at(coeffs, location, k))
            threshold = tolerance * coeffs.h**k * scale
            if k < mult:
                passed = mag < threshold
                requirement = "below"
            else:
                passed = mag > threshold
                requirement = "above"
            ok = ok and passed
            checks.append(RootCheck(k, mag, threshold, requirement, passed))
        reports.append(RootReport(location, mult, tuple(checks), ok))
    return reports
