"""Command-line client for the analysis service.

Each subcommand assembles a request, sends it to the service (in process by
default, remote with --server), and renders the JSON reply as CSV.  Identical
flags always produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import csvio
from .errors import FreqintError
from .service.client import ServiceClient, ServiceError

__all__ = ["main", "run", "build_parser"]

_INTEGRATORS = ("A", "B", "C", "D", "TR", "BE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freqint",
        description="Frequency-tuned integrator analysis: coefficients, error "
        "sweeps, stability maps, transient gains, and benchmark tables.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default runs the service in process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, integrator=True):
        if integrator:
            p.add_argument("--integrator", choices=_INTEGRATORS, default=None)
        p.add_argument("--h", type=float, default=None, help="step size in seconds")
        p.add_argument(
            "--fselect",
            type=float,
            default=None,
            help="tuning frequency in Hz (default 60)",
        )
        p.add_argument("--out", default=None, help="output file (default stdout)")
        p.add_argument(
            "--config",
            default=None,
            help="JSON file whose keys mirror the flags; explicit flags win",
        )

    p = sub.add_parser("coeffs", help="print one coefficient set as CSV")
    common(p)

    p = sub.add_parser("freq-sweep", help="sample |E(j*omega)| over a frequency grid")
    common(p)
    p.add_argument("--omega-min", type=float, default=None, help="rad/s")
    p.add_argument("--omega-max", type=float, default=None, help="rad/s")
    p.add_argument("--n-points", type=int, default=None)
    p.add_argument("--spacing", choices=("linear", "log"), default=None)

    p = sub.add_parser("stability-map", help="grid of |g| over lambda*h (CSV + JSON sidecar)")
    common(p)
    p.add_argument("--re-min", type=float, default=None)
    p.add_argument("--re-max", type=float, default=None)
    p.add_argument("--im-min", type=float, default=None)
    p.add_argument("--im-max", type=float, default=None)
    p.add_argument("--n", type=int, default=None, help="points per axis")

    p = sub.add_parser("transient-gains", help="per-step gains on the negative real axis")
    common(p, integrator=False)
    p.add_argument("--lh-min", type=float, default=None, help="smallest |lambda*h|")
    p.add_argument("--lh-max", type=float, default=None, help="largest |lambda*h|")
    p.add_argument("--n-points", type=int, default=None)

    p = sub.add_parser("verify-roots", help="check designed roots of E and multiplicities")
    common(p)
    p.add_argument("--tolerance", type=float, default=None)

    p = sub.add_parser("case", help="benchmark error table across step sizes")
    common(p, integrator=False)
    p.add_argument("--id", type=int, choices=(1, 2), required=True, dest="case_id")
    p.add_argument("--tend", type=float, default=None, help="end time in seconds")

    p = sub.add_parser("demo-transient", help="fast-transient traces for all kinds")
    common(p, integrator=False)
    p.add_argument("--tend", type=float, default=None, help="end time in seconds")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _load_config(args: argparse.Namespace) -> dict:
    path = getattr(args, "config", None)
    if not path:
        return {}
    try:
        config = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FreqintError(f"cannot read config {path}: {exc}") from exc
    if not isinstance(config, dict):
        raise FreqintError(f"config {path} must hold a JSON object")
    return config


def _get(args: argparse.Namespace, config: dict, name: str, default=None):
    """Flag value if given, else config value, else default."""
    value = getattr(args, name, None)
    if value is not None:
        return value
    if name in config:
        return config[name]
    return default


def _require(args, config, name: str):
    value = _get(args, config, name)
    if value is None:
        raise FreqintError(f"missing required value --{name.replace('_', '-')}")
    return value


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, newline="")


def _base_payload(args, config, integrator=True) -> dict:
    payload = {"h": float(_require(args, config, "h"))}
    if integrator:
        payload["integrator"] = str(_require(args, config, "integrator"))
    f_select = _get(args, config, "fselect")
    if f_select is not None:
        payload["f_select"] = float(f_select)
    return payload


def _cmd_coeffs(args, config, client) -> int:
    data = client.coeffs(_base_payload(args, config))
    row = [
        data["integrator"],
        data["h"],
        data["omega_select"],
        data["a_prev"],
        data["b_now"],
        data["b_prev"],
        data["c_now"],
        data["c_prev"],
    ]
    _emit(csvio.coeffs_csv(row), _get(args, config, "out"))
    return 0


def _cmd_freq_sweep(args, config, client) -> int:
    payload = _base_payload(args, config)
    for flag, key in (
        ("omega_min", "omega_min"),
        ("omega_max", "omega_max"),
        ("n_points", "n_points"),
        ("spacing", "spacing"),
    ):
        value = _get(args, config, flag)
        if value is not None:
            payload[key] = value
    data = client.freq_sweep(payload)
    rows = [(p["omega"], p["err_re"], p["err_im"], p["err_mag"]) for p in data["points"]]
    _emit(csvio.sweep_csv(rows), _get(args, config, "out"))
    return 0


def _cmd_stability_map(args, config, client) -> int:
    out = _get(args, config, "out")
    if out is None:
        raise FreqintError("stability-map writes a CSV plus a JSON sidecar; pass --out")
    payload = _base_payload(args, config)
    for name in ("re_min", "re_max", "im_min", "im_max", "n"):
        value = _get(args, config, name)
        if value is not None:
            payload[name] = value
    data = client.stability_map(payload)
    _emit(csvio.stability_map_csv(data["re_axis"], data["im_axis"], data["magnitude"]), out)
    sidecar = csvio.stability_sidecar_json(
        data["integrator"],
        data["theta"],
        data["re_axis"],
        data["im_axis"],
        len(data["re_axis"]),
        len(data["im_axis"]),
    )
    _emit(sidecar, str(Path(out).with_suffix(".json")))
    return 0


def _cmd_transient_gains(args, config, client) -> int:
    payload = {"h": float(_require(args, config, "h"))}
    f_select = _get(args, config, "fselect")
    if f_select is not None:
        payload["f_select"] = float(f_select)
    for flag, key in (
        ("lh_min", "lh_mag_min"),
        ("lh_max", "lh_mag_max"),
        ("n_points", "n_points"),
    ):
        value = _get(args, config, flag)
        if value is not None:
            payload[key] = value
    data = client.transient_gains(payload)
    rows = [
        (
            r["lambda_h"],
            r["gain_A"],
            r["gain_B"],
            r["gain_C"],
            r["gain_D"],
            r["gain_TR"],
            r["gain_BE"],
            r["exact"],
        )
        for r in data["rows"]
    ]
    _emit(csvio.transient_gains_csv(rows), _get(args, config, "out"))
    return 0


def _cmd_verify_roots(args, config, client) -> int:
    payload = _base_payload(args, config)
    tolerance = _get(args, config, "tolerance")
    if tolerance is not None:
        payload["tolerance"] = float(tolerance)
    data = client.verify_roots(payload)
    rows = [
        (
            r["root_re"],
            r["root_im"],
            r["claimed_multiplicity"],
            r["order"],
            r["derivative_magnitude"],
            r["threshold"],
            r["requirement"],
            r["passed"],
        )
        for r in data["rows"]
    ]
    _emit(csvio.root_checks_csv(rows), _get(args, config, "out"))
    return 0 if data["passed"] else 1


def _cmd_case(args, config, client) -> int:
    payload = {"case_id": int(_require(args, config, "case_id"))}
    tend = _get(args, config, "tend")
    if tend is not None:
        payload["t_end"] = float(tend)
    if "step_sizes_us" in config:
        payload["step_sizes_us"] = config["step_sizes_us"]
    data = client.case(payload)
    text = csvio.case_table_csv(
        data["step_sizes_us"], data["integrators"], data["errors_percent"]
    )
    _emit(text, _get(args, config, "out"))
    return 0


def _cmd_demo_transient(args, config, client) -> int:
    payload = {}
    h = _get(args, config, "h")
    if h is not None:
        payload["h"] = float(h)
    tend = _get(args, config, "tend")
    if tend is not None:
        payload["t_end"] = float(tend)
    f_select = _get(args, config, "fselect")
    if f_select is not None:
        payload["f_select"] = float(f_select)
    data = client.demo_transient(payload)
    text = csvio.transient_demo_csv(
        data["times"], data["integrators"], data["states"], data["exact"]
    )
    _emit(text, _get(args, config, "out"))
    return 0


def _cmd_serve(args, _config, _client) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "coeffs": _cmd_coeffs,
    "freq-sweep": _cmd_freq_sweep,
    "stability-map": _cmd_stability_map,
    "transient-gains": _cmd_transient_gains,
    "verify-roots": _cmd_verify_roots,
    "case": _cmd_case,
    "demo-transient": _cmd_demo_transient,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args)
        client = ServiceClient(server=args.server)
        return _COMMANDS[args.command](args, config, client)
    except (FreqintError, ServiceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
