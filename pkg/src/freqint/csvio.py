"""Deterministic CSV and JSON rendering for analysis results.

All emitters take plain sequences so both the in-process objects and JSON
payloads received over the wire can be rendered identically.  Floats are
written with repr (shortest round-trip form, '.' decimal separator), rows end
with a single LF, and identical inputs yield byte-identical text.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Sequence

__all__ = [
    "format_value",
    "coeffs_csv",
    "sweep_csv",
    "stability_map_csv",
    "stability_sidecar_json",
    "transient_gains_csv",
    "root_checks_csv",
    "case_table_csv",
    "transient_demo_csv",
]


def format_value(x) -> str:
    """Canonical cell text: shortest round-trip repr for floats."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return repr(x)
    return str(x)


def _render(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def coeffs_csv(row: Sequence) -> str:
    """One coefficient set: kind, h, omega_select, then the five coefficients."""
    header = (
        "kind",
        "h_s",
        "omega_select_rad_s",
        "a_prev",
        "b_now_s",
        "b_prev_s",
        "c_now_s2",
        "c_prev_s2",
    )
    return _render(header, [row])


def sweep_csv(rows: Iterable[Sequence]) -> str:
    """Frequency sweep rows: (omega, Re E, Im E, |E|)."""
    return _render(("omega_rad_s", "err_re", "err_im", "err_mag"), rows)


def stability_map_csv(re_axis: Sequence[float], im_axis: Sequence[float], magnitude) -> str:
    """Grid of |g|: header row of Im(lambda*h), one row per Re(lambda*h)."""
    header = ["re_lh"] + [format_value(float(v)) for v in im_axis]
    rows = []
    for re_val, mag_row in zip(re_axis, magnitude):
        rows.append([float(re_val)] + [float(v) for v in mag_row])
    return _render(header, rows)


def stability_sidecar_json(
    kind: str,
    theta: float,
    re_range: Sequence[float],
    im_range: Sequence[float],
    n_re: int,
    n_im: int,
) -> str:
    """Metadata companion for a stability-map CSV."""
    payload = {
        "kind": kind,
        "theta": theta,
        "re_range": [float(re_range[0]), float(re_range[-1])],
        "im_range": [float(im_range[0]), float(im_range[-1])],
        "n_re": int(n_re),
        "n_im": int(n_im),
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def transient_gains_csv(rows: Iterable[Sequence]) -> str:
    """Gain rows: (lambda_h, gain per kind A..BE, exact gain)."""
    header = (
        "lambda_h",
        "gain_A",
        "gain_B",
        "gain_C",
        "gain_D",
        "gain_TR",
        "gain_BE",
        "exact",
    )
    return _render(header, rows)


def root_checks_csv(rows: Iterable[Sequence]) -> str:
    """Root verification rows, one per (root, derivative order)."""
    header = (
        "root_re",
        "root_im",
        "claimed_multiplicity",
        "order",
        "derivative_magnitude",
        "threshold",
        "requirement",
        "passed",
    )
    return _render(header, rows)


def _format_step_size(us: float) -> str:
    if float(us).is_integer():
        return str(int(us))
    return repr(float(us))


def case_table_csv(
    step_sizes_us: Sequence[float],
    kinds: Sequence[str],
    errors_percent,
) -> str:
    """Benchmark error table: rows are step sizes in us, cells percent to 4 dp."""
    header = ["step_size_us"] + [str(k) for k in kinds]
    rows = []
    for us, err_row in zip(step_sizes_us, errors_percent):
        rows.append([_format_step_size(us)] + [f"{float(e):.4f}" for e in err_row])
    return _render(header, rows)


def transient_demo_csv(times: Sequence[float], kinds: Sequence[str], states, exact) -> str:
    """Side-by-side traces: t, one column per kind, exact solution last."""
    header = ["t_s"] + [f"x_{k}" for k in kinds] + ["x_exact"]
    rows = []
    for i, t in enumerate(times):
        rows.append([float(t)] + [float(col[i]) for col in states] + [float(exact[i])])
    return _render(header, rows)
