"""Frequency-tuned implicit integrators and their analysis tools.

The core modules are plain functions over small dataclasses:

- :mod:`freqint.integrators` builds per-step coefficient sets,
- :mod:`freqint.freq_analysis` evaluates the frequency-domain error factor,
- :mod:`freqint.stability` maps amplification over the complex plane,
- :mod:`freqint.transient` classifies decay behaviour on the real axis,
- :mod:`freqint.simulate` advances linear systems and scores benchmark cases.

The HTTP layer lives in :mod:`freqint.service`; the CLI in :mod:`freqint.cli`.
"""

__version__ = "0.1.0"

from .errors import (
    FreqintError,
    GridError,
    SingularDenominatorError,
    SingularStepMatrixError,
    StepSizeError,
)
from .freq_analysis import (
    ErrorSample,
    RootCheck,
    RootReport,
    default_sweep_grid,
    error_derivative_at,
    expected_roots,
    magnitude_sweep,
    relative_error_at,
    verify_root_design,
)
from .integrators import (
    CoefficientSet,
    IntegratorKind,
    build_coefficients,
    step_size_bound,
    validate_step_size,
)
from .simulate import (
    BENCH_KINDS,
    BENCH_STEP_SIZES_US,
    LinearSystem,
    SwitchPolicy,
    Trace,
    analytic_case_trace,
    case_params,
    case_system,
    error_percent,
    finite_diff_input_derivative,
    run_case,
    run_case_table,
    simulate,
    step,
)
from .stability import (
    LStabilityReport,
    StabilityMap,
    amplification,
    check_l_stability,
    stability_map,
    wedge_contains,
)
from .transient import (
    PositivityReport,
    TransientClass,
    TransientLabel,
    classify_transient,
    gain_threshold,
    positivity_certificate,
    transient_gain,
    transient_gain_table,
)

__all__ = [
    "__version__",
    "FreqintError",
    "GridError",
    "SingularDenominatorError",
    "SingularStepMatrixError",
    "StepSizeError",
    "ErrorSample",
    "RootCheck",
    "RootReport",
    "default_sweep_grid",
    "error_derivative_at",
    "expected_roots",
    "magnitude_sweep",
    "relative_error_at",
    "verify_root_design",
    "CoefficientSet",
    "IntegratorKind",
    "build_coefficients",
    "step_size_bound",
    "validate_step_size",
    "BENCH_KINDS",
    "BENCH_STEP_SIZES_US",
    "LinearSystem",
    "SwitchPolicy",
    "Trace",
    "analytic_case_trace",
    "case_params",
    "case_system",
    "error_percent",
    "finite_diff_input_derivative",
    "run_case",
    "run_case_table",
    "simulate",
    "step",
    "LStabilityReport",
    "StabilityMap",
    "amplification",
    "check_l_stability",
    "stability_map",
    "wedge_contains",
    "PositivityReport",
    "TransientClass",
    "TransientLabel",
    "classify_transient",
    "gain_threshold",
    "positivity_certificate",
    "transient_gain",
    "transient_gain_table",
]
