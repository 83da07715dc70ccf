"""Fixed-step simulation of linear systems xdot = A x + B u(t).

The implicit step solves

    (I - b_now*A - c_now*A^2) x_t = a_prev*x_p + b_prev*(A x_p + B u_p)
        + c_prev*(A^2 x_p + A B u_p + B udot_p)
        + b_now*B u_t + c_now*(A B u_t + B udot_t)

where subscript p marks the previous instant.  The left-hand matrix depends
only on the system and the coefficient set, so it is LU-factored once and
reused for every step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from .errors import FreqintError, SingularStepMatrixError
from .integrators import CoefficientSet, IntegratorKind, build_coefficients

__all__ = [
    "LinearSystem",
    "Trace",
    "SwitchPolicy",
    "TestCaseParams",
    "BENCH_STEP_SIZES_US",
    "BENCH_KINDS",
    "step",
    "simulate",
    "case_params",
    "case_system",
    "analytic_case_solution",
    "analytic_case_trace",
    "error_percent",
    "run_case",
    "run_case_table",
    "finite_diff_input_derivative",
]


@dataclass
class LinearSystem:
    """State matrices plus input signal and its time derivative.

    ``u`` and ``u_dot`` take a time in seconds and return a scalar (single
    input) or an array of shape (m,).
    """

    a_matrix: np.ndarray
    b_matrix: np.ndarray
    u: Callable[[float], object]
    u_dot: Callable[[float], object]

    def __post_init__(self):
        a = np.atleast_2d(np.asarray(self.a_matrix))
        if a.shape[0] != a.shape[1]:
            raise FreqintError(f"state matrix must be square, got shape {a.shape}")
        b = np.asarray(self.b_matrix)
        if b.ndim == 1:
            b = b[:, None]
        if b.ndim != 2 or b.shape[0] != a.shape[0]:
            raise FreqintError(
                f"input matrix shape {b.shape} does not match {a.shape[0]} states"
            )
        self.a_matrix = a.astype(np.result_type(a, 1.0), copy=False)
        self.b_matrix = b.astype(np.result_type(b, 1.0), copy=False)

    @property
    def n_states(self) -> int:
        return self.a_matrix.shape[0]

    @property
    def n_inputs(self) -> int:
        return self.b_matrix.shape[1]

    def input_at(self, t: float) -> np.ndarray:
        return np.atleast_1d(np.asarray(self.u(t)))

    def input_derivative_at(self, t: float) -> np.ndarray:
        return np.atleast_1d(np.asarray(self.u_dot(t)))


@dataclass(frozen=True)
class Trace:
    """Uniformly sampled state history starting at t0 with spacing h."""

    t0: float
    h: float
    values: np.ndarray  # shape (n_samples, n_states)

    def __post_init__(self):
        vals = np.asarray(self.values)
        if vals.ndim == 1:
            vals = vals[:, None]
        if vals.ndim != 2 or vals.shape[0] < 1:
            raise FreqintError(f"trace values must be (n_samples, n_states), got {vals.shape}")
        object.__setattr__(self, "values", vals)

    @property
    def times(self) -> np.ndarray:
        return self.t0 + self.h * np.arange(self.values.shape[0])

    def __len__(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class SwitchPolicy:
    """Run a history-free kind for the first steps, then the main kind.

    The startup kind must not consume derivative history (b_prev = c_prev = 0)
    so the march never reads derivatives of a state predating the start.
    """

    startup_kind: IntegratorKind
    main_kind: IntegratorKind
    startup_steps: int = 5

    def __post_init__(self):
        object.__setattr__(self, "startup_kind", IntegratorKind(self.startup_kind))
        object.__setattr__(self, "main_kind", IntegratorKind(self.main_kind))
        if self.startup_steps < 0:
            raise FreqintError(f"startup_steps must be >= 0, got {self.startup_steps}")
        if not self.startup_kind.history_free:
            raise FreqintError(
                f"startup kind {self.startup_kind} consumes derivative history; "
                "use one with b_prev = c_prev = 0"
            )


class _StepOperator:
    """One-step advance for a fixed (system, coefficient set) pair."""

    def __init__(self, system: LinearSystem, coeffs: CoefficientSet):
        a = system.a_matrix
        b = system.b_matrix
        a2 = a @ a
        eye = np.eye(system.n_states, dtype=a.dtype)
        lhs = eye - coeffs.b_now * a - coeffs.c_now * a2
        lu, piv = lu_factor(lhs)
        if not np.all(np.isfinite(lu)) or np.any(np.diagonal(lu) == 0):
            raise SingularStepMatrixError(
                f"left-hand step matrix is singular for kind {coeffs.kind} at h={coeffs.h}"
            )
        self._lu = (lu, piv)
        self._propagate = coeffs.a_prev * eye + coeffs.b_prev * a + coeffs.c_prev * a2
        self._b = b
        self._ab = a @ b
        self._coeffs = coeffs
        self.system = system

    @property
    def coeffs(self) -> CoefficientSet:
        return self._coeffs

    def advance(self, x_prev, u_prev, ud_prev, u_now, ud_now):
        cs = self._coeffs
        direct = cs.b_prev * u_prev + cs.c_prev * ud_prev + cs.b_now * u_now + cs.c_now * ud_now
        chained = cs.c_prev * u_prev + cs.c_now * u_now
        rhs = self._propagate @ x_prev + self._b @ direct + self._ab @ chained
        return lu_solve(self._lu, rhs)


def step(
    system: LinearSystem,
    coeffs: CoefficientSet,
    x_prev: np.ndarray,
    t_prev: float,
) -> np.ndarray:
    """Advance the system one step from (t_prev, x_prev) to t_prev + h."""
    op = _StepOperator(system, coeffs)
    t_now = t_prev + coeffs.h
    return op.advance(
        np.atleast_1d(np.asarray(x_prev)),
        system.input_at(t_prev),
        system.input_derivative_at(t_prev),
        system.input_at(t_now),
        system.input_derivative_at(t_now),
    )


def simulate(
    system: LinearSystem,
    h: float,
    t_end: float,
    x0,
    kind: IntegratorKind | None = None,
    omega_select: float = 0.0,
    policy: SwitchPolicy | None = None,
    t0: float = 0.0,
) -> Trace:
    """Fixed-step march from t0 to the largest t0 + k*h <= t_end.

    Exactly one of ``kind`` and ``policy`` selects the integrator.  With a
    policy the startup kind covers the first ``startup_steps`` steps and the
    main kind the rest; both are built at the same h and omega_select.
    """
    if (kind is None) == (policy is None):
        raise FreqintError("pass exactly one of kind or policy")
    if t_end <= t0:
        raise FreqintError(f"t_end={t_end} must exceed t0={t0}")
    n_steps = int(math.floor((t_end - t0) / h + 1e-9))
    if n_steps < 1:
        raise FreqintError(f"no step fits between t0={t0} and t_end={t_end} at h={h}")

    if policy is None:
        main_op = _StepOperator(system, build_coefficients(kind, h, omega_select))
        startup_op = main_op
        startup_steps = 0
    else:
        main_op = _StepOperator(
            system, build_coefficients(policy.main_kind, h, omega_select)
        )
        startup_op = _StepOperator(
            system, build_coefficients(policy.startup_kind, h, omega_select)
        )
        startup_steps = policy.startup_steps

    x = np.atleast_1d(np.asarray(x0))
    if x.shape != (system.n_states,):
        raise FreqintError(f"x0 shape {x.shape} does not match {system.n_states} states")
    u_prev = system.input_at(t0)
    ud_prev = system.input_derivative_at(t0)
    if u_prev.shape != (system.n_inputs,) or ud_prev.shape != (system.n_inputs,):
        raise FreqintError(
            f"input signals must return {system.n_inputs} values, got shapes "
            f"{u_prev.shape} and {ud_prev.shape}"
        )
    dtype = np.result_type(x, system.a_matrix, system.b_matrix, u_prev, 1.0)
    out = np.empty((n_steps + 1, system.n_states), dtype=dtype)
    out[0] = x
    for k in range(n_steps):
        op = startup_op if k < startup_steps else main_op
        t_now = t0 + (k + 1) * h
        u_now = system.input_at(t_now)
        ud_now = system.input_derivative_at(t_now)
        x = op.advance(x, u_prev, ud_prev, u_now, ud_now)
        out[k + 1] = x
        u_prev, ud_prev = u_now, ud_now
    return Trace(t0, h, out)


# ---------------------------------------------------------------------------
# benchmark problem: first-order circuit driven by a 60 Hz cosine
# ---------------------------------------------------------------------------

_OMEGA_SYN = 120.0 * math.pi

BENCH_STEP_SIZES_US: tuple[float, ...] = (125.0, 250.0, 500.0, 1000.0, 2000.0, 4000.0)
BENCH_KINDS: tuple[IntegratorKind, ...] = (
    IntegratorKind.A,
    IntegratorKind.B,
    IntegratorKind.C,
    IntegratorKind.D,
    IntegratorKind.TR,
    IntegratorKind.BE,
)


@dataclass(frozen=True)
class TestCaseParams:
    """Scalar benchmark xdot = a x + b cos(omega_syn t) with start value x0."""

    a: float = -5.0
    b: float = 300.0
    omega_syn: float = _OMEGA_SYN
    x0: float = 0.0


def case_params(case_id: int) -> TestCaseParams:
    """Benchmark cases: 1 starts on the periodic orbit, 2 starts offset at 2."""
    if case_id == 1:
        a, b = -5.0, 300.0
        x0 = -a * b / (_OMEGA_SYN * _OMEGA_SYN + a * a)
        return TestCaseParams(a, b, _OMEGA_SYN, x0)
    if case_id == 2:
        return TestCaseParams(-5.0, 300.0, _OMEGA_SYN, 2.0)
    raise FreqintError(f"unknown case id {case_id}; expected 1 or 2")


def case_system(params: TestCaseParams) -> LinearSystem:
    """LinearSystem for the scalar benchmark with exact input derivative."""
    w = params.omega_syn
    return LinearSystem(
        a_matrix=np.array([[params.a]]),
        b_matrix=np.array([[params.b]]),
        u=lambda t: math.cos(w * t),
        u_dot=lambda t: -w * math.sin(w * t),
    )


def analytic_case_solution(params: TestCaseParams, t: float) -> float:
    """Closed-form solution of the benchmark at time t."""
    a, b, w = params.a, params.b, params.omega_syn
    den = w * w + a * a
    transient = (params.x0 + a * b / den) * math.exp(a * t)
    forced = b * (w / den * math.sin(w * t) - a / den * math.cos(w * t))
    return transient + forced


def analytic_case_trace(params: TestCaseParams, h: float, t_end: float) -> Trace:
    """Closed-form solution sampled on the same grid a simulation would use."""
    n_steps = int(math.floor(t_end / h + 1e-9))
    vals = np.array([analytic_case_solution(params, k * h) for k in range(n_steps + 1)])
    return Trace(0.0, h, vals)


def error_percent(numerical: Trace, reference: Trace) -> float:
    """Percent 2-norm error between traces on a shared grid, t0 included."""
    if len(numerical) != len(reference):
        raise FreqintError(
            f"traces differ in length: {len(numerical)} vs {len(reference)}"
        )
    scale = max(1.0, abs(reference.h))
    if abs(numerical.t0 - reference.t0) > 1e-12 * scale or abs(
        numerical.h - reference.h
    ) > 1e-12 * scale:
        raise FreqintError("traces do not share a sampling grid")
    diff = numerical.values - reference.values
    ref_norm = np.linalg.norm(reference.values)
    if ref_norm == 0.0:
        raise FreqintError("reference trace is identically zero")
    return 100.0 * np.linalg.norm(diff) / ref_norm


def run_case(
    case_id: int,
    kind: IntegratorKind,
    h: float,
    t_end: float = 1.0,
) -> float:
    """Percent error of one integrator on one benchmark case.

    Tuned kinds are selected at the source frequency of the benchmark.
    """
    params = case_params(case_id)
    kind = IntegratorKind(kind)
    omega = params.omega_syn if kind.needs_omega else 0.0
    trace = simulate(case_system(params), h, t_end, [params.x0], kind=kind, omega_select=omega)
    return error_percent(trace, analytic_case_trace(params, h, t_end))


def run_case_table(
    case_id: int,
    step_sizes_us: tuple[float, ...] = BENCH_STEP_SIZES_US,
    kinds: tuple[IntegratorKind, ...] = BENCH_KINDS,
    t_end: float = 1.0,
) -> np.ndarray:
    """Percent-error table, one row per step size and one column per kind."""
    params = case_params(case_id)
    system = case_system(params)
    table = np.empty((len(step_sizes_us), len(kinds)))
    for i, us in enumerate(step_sizes_us):
        h = us * 1e-6
        reference = analytic_case_trace(params, h, t_end)
        for j, kind in enumerate(kinds):
            kind = IntegratorKind(kind)
            omega = params.omega_syn if kind.needs_omega else 0.0
            trace = simulate(
                system, h, t_end, [params.x0], kind=kind, omega_select=omega
            )
            table[i, j] = error_percent(trace, reference)
    return table


def finite_diff_input_derivative(
    u: Callable[[float], object],
    h_fd: float,
    scheme: str = "central",
) -> Callable[[float], np.ndarray]:
    """Derivative of an input signal by finite differences.

    Useful when only samples of u are available.  ``scheme`` is "central"
    (second order) or "backward" (first order, causal).
    """
    if h_fd <= 0.0:
        raise FreqintError(f"finite-difference spacing must be positive, got {h_fd}")
    if scheme == "central":

        def derivative(t: float) -> np.ndarray:
            lo = np.atleast_1d(np.asarray(u(t - h_fd)))
            hi = np.atleast_1d(np.asarray(u(t + h_fd)))
            return (hi - lo) / (2.0 * h_fd)

    elif scheme == "backward":

        def derivative(t: float) -> np.ndarray:
            now = np.atleast_1d(np.asarray(u(t)))
            before = np.atleast_1d(np.asarray(u(t - h_fd)))
            return (now - before) / h_fd

    else:
        raise FreqintError(f"unknown finite-difference scheme {scheme!r}")
    return derivative
