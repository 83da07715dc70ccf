"""Coefficient catalog: exact values, tuned anchors, bounds, series guard."""

import math

import pytest

from freqint.errors import StepSizeError
from freqint.integrators import (
    CoefficientSet,
    IntegratorKind,
    _one_minus_x_cot_x,
    build_coefficients,
    step_size_bound,
    validate_step_size,
)

OMEGA = 120.0 * math.pi


def test_kind_enum_properties():
    assert IntegratorKind.A.needs_omega
    assert IntegratorKind.B.needs_omega
    for k in (IntegratorKind.C, IntegratorKind.D, IntegratorKind.TR, IntegratorKind.BE):
        assert not k.needs_omega
    for k in (IntegratorKind.B, IntegratorKind.D, IntegratorKind.BE):
        assert k.history_free
    for k in (IntegratorKind.A, IntegratorKind.C, IntegratorKind.TR):
        assert not k.history_free
    assert str(IntegratorKind.TR) == "TR"
    assert IntegratorKind("BE") is IntegratorKind.BE


@pytest.mark.parametrize("h", [125e-6, 1e-3, 2e-3, 0.05])
def test_untuned_catalog_exact(h):
    c = build_coefficients(IntegratorKind.C, h)
    assert (c.a_prev, c.b_now, c.b_prev) == (1.0, 0.5 * h, 0.5 * h)
    assert c.c_now == -h * h / 12.0
    assert c.c_prev == h * h / 12.0

    d = build_coefficients(IntegratorKind.D, h)
    assert (d.a_prev, d.b_now, d.b_prev) == (1.0, h, 0.0)
    assert (d.c_now, d.c_prev) == (-0.5 * h * h, 0.0)

    tr = build_coefficients(IntegratorKind.TR, h)
    assert (tr.b_now, tr.b_prev, tr.c_now, tr.c_prev) == (0.5 * h, 0.5 * h, 0.0, 0.0)

    be = build_coefficients(IntegratorKind.BE, h)
    assert (be.b_now, be.b_prev, be.c_now, be.c_prev) == (h, 0.0, 0.0, 0.0)

    for cs in (c, d, tr, be):
        assert cs.omega_select == 0.0
        assert cs.theta == 0.0


def test_kind_a_structure():
    """b weights split evenly and the curvature weights are opposed."""
    cs = build_coefficients(IntegratorKind.A, 1e-3, OMEGA)
    assert cs.a_prev == 1.0
    assert cs.b_now == cs.b_prev == 0.5e-3
    assert cs.c_now == -cs.c_prev
    assert cs.c_prev > 0.0
    assert math.isclose(cs.theta, OMEGA * 1e-3, rel_tol=1e-15)


def test_kind_a_frozen_anchor():
    # independently computed with 50-digit arithmetic
    cs = build_coefficients(IntegratorKind.A, 2e-3, OMEGA)
    assert math.isclose(cs.c_prev, 3.3653497182033438e-07, rel_tol=1e-12)


def test_kind_b_frozen_anchor():
    # independently computed with 50-digit arithmetic
    cs = build_coefficients(IntegratorKind.B, 2e-3, OMEGA)
    assert math.isclose(cs.b_now, 0.0018158175947967016, rel_tol=1e-13)
    assert math.isclose(cs.c_now, -1.9070291301298634e-06, rel_tol=1e-13)
    assert cs.b_prev == 0.0
    assert cs.c_prev == 0.0
    assert cs.history_free


@pytest.mark.parametrize("kind", ["A", "B"])
def test_tuned_kinds_require_positive_omega(kind):
    with pytest.raises(ValueError):
        build_coefficients(IntegratorKind(kind), 1e-3, 0.0)
    with pytest.raises(ValueError):
        build_coefficients(IntegratorKind(kind), 1e-3, -10.0)


def test_step_size_bounds():
    assert math.isclose(step_size_bound(IntegratorKind.A, OMEGA), 2.0 * math.pi / OMEGA)
    assert math.isclose(step_size_bound(IntegratorKind.B, OMEGA), math.pi / OMEGA)
    assert step_size_bound(IntegratorKind.C) == math.inf
    assert step_size_bound(IntegratorKind.BE) == math.inf


@pytest.mark.parametrize(
    "kind,bound",
    [(IntegratorKind.A, 2.0 * math.pi / OMEGA), (IntegratorKind.B, math.pi / OMEGA)],
)
def test_validate_step_size_is_exclusive(kind, bound):
    assert validate_step_size(kind, 0.999 * bound, OMEGA) == bound
    for bad in (bound, 1.001 * bound, 0.0, -1e-3, math.inf):
        with pytest.raises(StepSizeError) as info:
            validate_step_size(kind, bad, OMEGA)
        assert info.value.bound == bound


def test_validate_step_size_untuned():
    assert validate_step_size(IntegratorKind.TR, 100.0) == math.inf
    with pytest.raises(StepSizeError):
        validate_step_size(IntegratorKind.TR, 0.0)
    with pytest.raises(StepSizeError):
        validate_step_size(IntegratorKind.D, -1.0)


def test_series_guard_agrees_with_direct_form():
    # both branches of 1 - x*cot(x) must agree where the direct form is
    # still accurate; x = 0.01 loses only ~4 digits to cancellation
    for x in (0.01, 0.02, 0.03, 0.045, 0.0499):
        series = _one_minus_x_cot_x(x)
        direct = 1.0 - x / math.tan(x)
        assert math.isclose(series, direct, rel_tol=1e-9)
    # above the cutoff the direct branch is in force
    assert _one_minus_x_cot_x(0.06) == 1.0 - 0.06 / math.tan(0.06)


def test_tiny_angle_limits():
    """As the tuning angle vanishes, A degenerates to C and B to D."""
    h = 1e-3
    omega = 2e-5 / h  # theta = 2e-5
    a = build_coefficients(IntegratorKind.A, h, omega)
    c = build_coefficients(IntegratorKind.C, h)
    assert math.isclose(a.c_prev, c.c_prev, rel_tol=1e-9)

    b = build_coefficients(IntegratorKind.B, h, omega)
    d = build_coefficients(IntegratorKind.D, h)
    assert math.isclose(b.b_now, d.b_now, rel_tol=1e-9)
    assert math.isclose(b.c_now, d.c_now, rel_tol=1e-9)


def test_curvature_weight_exceeds_untuned_limit():
    """A's curvature weight is h^2/12 scaled up by the tuning angle."""
    h = 1e-3
    for theta in (1e-4, 1e-3, 1e-2, 0.1, 0.5, 1.0, 3.0):
        cs = build_coefficients(IntegratorKind.A, h, theta / h)
        assert cs.c_prev > h * h / 12.0


def test_coefficient_set_is_frozen():
    cs = build_coefficients(IntegratorKind.D, 1e-3)
    with pytest.raises(AttributeError):
        cs.b_now = 0.0
    assert isinstance(cs, CoefficientSet)


def test_build_accepts_kind_names():
    cs = build_coefficients("TR", 5e-4)
    assert cs.kind is IntegratorKind.TR
