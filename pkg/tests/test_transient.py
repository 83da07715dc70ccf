"""Per-step gain on fast real modes: values, labels, positivity, tables."""

import math
from fractions import Fraction

import numpy as np
import pytest

from freqint.integrators import IntegratorKind, build_coefficients
from freqint.stability import amplification
from freqint.transient import (
    TransientLabel,
    classify_transient,
    gain_threshold,
    positivity_certificate,
    transient_gain,
    transient_gain_table,
)

OMEGA = 120.0 * math.pi


def make(kind, h):
    omega = OMEGA if IntegratorKind(kind).needs_omega else 0.0
    return build_coefficients(kind, h, omega)


def test_gain_matches_amplification_on_real_axis():
    rng = np.random.default_rng(551)
    kinds = list(IntegratorKind)
    for _ in range(300):
        kind = kinds[rng.integers(len(kinds))]
        h = 10.0 ** rng.uniform(-4, -2.5)
        lam = -(10.0 ** rng.uniform(-1, 6))
        cs = make(kind, h)
        g = transient_gain(cs, lam)
        g_complex = amplification(cs, lam)
        assert g_complex.imag == 0.0
        assert math.isclose(g, g_complex.real, rel_tol=1e-13, abs_tol=1e-300)


def test_gain_requires_negative_lambda():
    cs = make(IntegratorKind.TR, 1e-3)
    with pytest.raises(ValueError):
        transient_gain(cs, 0.0)
    with pytest.raises(ValueError):
        transient_gain(cs, 5.0)


def test_frozen_gains_at_lambda_h_minus_ten():
    h = 2e-3
    lam = -10.0 / h
    # tuned kinds, frozen from a 50-digit evaluation
    assert math.isclose(transient_gain(make("A", h), lam), 0.306199936602, rel_tol=1e-9)
    assert math.isclose(transient_gain(make("B", h), lam), 0.0173145733174, rel_tol=1e-9)
    # untuned kinds reduce to exact rationals
    assert math.isclose(transient_gain(make("C", h), lam), float(Fraction(13, 43)), rel_tol=1e-13)
    assert math.isclose(transient_gain(make("D", h), lam), float(Fraction(1, 61)), rel_tol=1e-13)
    assert math.isclose(transient_gain(make("TR", h), lam), float(Fraction(-2, 3)), rel_tol=1e-13)
    assert math.isclose(transient_gain(make("BE", h), lam), float(Fraction(1, 11)), rel_tol=1e-13)


def test_threshold_tracks_exact_decay_until_floor():
    assert math.isclose(gain_threshold(-100.0, 1e-3), 10.0 * math.exp(-0.1), rel_tol=1e-12)
    # deep decay: the exact propagator is tiny, the floor takes over
    assert gain_threshold(-1e4, 1e-3) == 0.1


def test_classification_labels_at_lambda_h_minus_ten():
    h = 2e-3
    lam = -10.0 / h
    expected = {
        "A": TransientLabel.SLUGGISH,
        "B": TransientLabel.FAST_DECAY,
        "C": TransientLabel.SLUGGISH,
        "D": TransientLabel.FAST_DECAY,
        "TR": TransientLabel.OSCILLATORY,
        "BE": TransientLabel.FAST_DECAY,
    }
    for name, label in expected.items():
        gain = transient_gain(make(name, h), lam)
        result = classify_transient(gain, lam, h)
        assert result.label is label, name
        assert math.isclose(result.exact_gain, math.exp(-10.0), rel_tol=1e-12)
        assert result.threshold == 0.1


def test_classification_of_mild_decay():
    # at lambda*h = -0.1 every kind tracks the decay well
    h = 1e-3
    lam = -100.0
    for kind in IntegratorKind:
        gain = transient_gain(make(kind, h), lam)
        result = classify_transient(gain, lam, h)
        assert result.label is TransientLabel.FAST_DECAY
        assert math.isclose(gain, math.exp(-0.1), rel_tol=0.06)


def test_gain_stays_in_unit_interval_for_second_derivative_kinds():
    rng = np.random.default_rng(1213)
    for name in ("A", "B", "C", "D"):
        cs = make(name, 2e-3)
        for _ in range(500):
            lam = -(10.0 ** rng.uniform(-3, 6)) / cs.h
            g = transient_gain(cs, lam)
            assert 0.0 < g < 1.0, (name, lam, g)


def test_stiff_limit_gains():
    h = 1e-3
    lam = -1e6 / h
    # history-free kinds collapse the transient, symmetric ones freeze it
    assert transient_gain(make("B", h), lam) < 1e-3
    assert transient_gain(make("D", h), lam) < 1e-3
    assert transient_gain(make("A", h), lam) > 0.99
    assert transient_gain(make("C", h), lam) > 0.99
    assert transient_gain(make("TR", h), lam) < 0.0


@pytest.mark.parametrize("name", ["A", "C"])
def test_positivity_certified_by_negative_discriminant(name):
    report = positivity_certificate(make(name, 2e-3))
    assert report.applicable
    assert report.passed
    assert not report.numerator_constant
    assert report.discriminant is not None and report.discriminant < 0.0
    assert report.denominator_positive
    assert report.sampled_min > 0.0


@pytest.mark.parametrize("name", ["B", "D", "BE"])
def test_positivity_certified_by_constant_numerator(name):
    report = positivity_certificate(make(name, 2e-3))
    assert report.applicable
    assert report.passed
    assert report.numerator_constant
    assert report.sampled_min > 0.0


def test_trapezoidal_positivity_fails_with_located_sign_change():
    report = positivity_certificate(make("TR", 2e-3))
    assert not report.applicable
    assert not report.passed
    assert report.sign_change_lambda_h is not None
    assert math.isclose(report.sign_change_lambda_h, -2.0, rel_tol=1e-12)
    assert report.sampled_min < 0.0 < report.sampled_max


def test_gain_table_layout():
    h = 1e-3
    mags = [1.0, 10.0, 100.0]
    rows = transient_gain_table(h, OMEGA, mags)
    assert len(rows) == 3
    for m, row in zip(mags, rows):
        assert len(row) == 8
        assert row[0] == -m
        assert math.isclose(row[-1], math.exp(-m), rel_tol=1e-12)
    # columns follow the A..BE catalog order
    names = ("A", "B", "C", "D", "TR", "BE")
    for j, name in enumerate(names):
        direct = transient_gain(make(name, h), -10.0 / h)
        assert math.isclose(rows[1][1 + j], direct, rel_tol=1e-13)


def test_gain_table_rejects_bad_magnitudes():
    with pytest.raises(ValueError):
        transient_gain_table(1e-3, OMEGA, [1.0, -2.0])
    with pytest.raises(ValueError):
        transient_gain_table(1e-3, OMEGA, [0.0])
