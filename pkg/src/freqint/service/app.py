"""HTTP interface around the analysis library.

Every endpoint is a stateless computation: the request carries the full
problem description and the response the full result, so any number of
clients can share one instance.
"""

from __future__ import annotations

import math

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import FreqintError
from ..freq_analysis import default_sweep_grid, magnitude_sweep, verify_root_design
from ..integrators import IntegratorKind, build_coefficients
from ..simulate import (
    LinearSystem,
    TestCaseParams,
    analytic_case_solution,
    run_case_table,
    simulate,
)
from ..stability import stability_map
from ..transient import transient_gain_table
from . import schemas

__all__ = ["create_app"]


def _coeffs_out(cs) -> schemas.CoefficientSetOut:
    return schemas.CoefficientSetOut(
        integrator=cs.kind.value,
        h=cs.h,
        omega_select=cs.omega_select,
        a_prev=cs.a_prev,
        b_now=cs.b_now,
        b_prev=cs.b_prev,
        c_now=cs.c_now,
        c_prev=cs.c_prev,
    )


def _build_from_request(req: schemas.CoeffsRequest):
    kind = IntegratorKind(req.integrator)
    omega = schemas.omega_from_hz(req.f_select) if kind.needs_omega else 0.0
    return build_coefficients(kind, req.h, omega)


def create_app() -> FastAPI:
    app = FastAPI(
        title="freqint service",
        version=__version__,
        description="Frequency-tuned integrator analysis: coefficients, error "
        "spectra, stability maps, transient gains, benchmark tables.",
    )

    @app.exception_handler(FreqintError)
    async def _domain_error(_request: Request, exc: FreqintError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/coeffs", response_model=schemas.CoefficientSetOut)
    def coeffs(req: schemas.CoeffsRequest) -> schemas.CoefficientSetOut:
        return _coeffs_out(_build_from_request(req))

    @app.post("/freq-sweep", response_model=schemas.SweepResponse)
    def freq_sweep(req: schemas.SweepRequest) -> schemas.SweepResponse:
        cs = _build_from_request(req)
        lo, hi, n_default = default_sweep_grid(cs)
        omega_min = req.omega_min if req.omega_min is not None else lo
        omega_max = req.omega_max if req.omega_max is not None else hi
        samples = magnitude_sweep(cs, omega_min, omega_max, req.n_points, req.spacing)
        points = [
            schemas.SweepPoint(
                omega=s.omega,
                err_re=s.error.real,
                err_im=s.error.imag,
                err_mag=s.magnitude,
            )
            for s in samples
        ]
        return schemas.SweepResponse(integrator=req.integrator, h=req.h, points=points)

    @app.post("/stability-map", response_model=schemas.StabilityMapResponse)
    def stability(req: schemas.StabilityMapRequest) -> schemas.StabilityMapResponse:
        cs = _build_from_request(req)
        smap = stability_map(
            cs, (req.re_min, req.re_max), (req.im_min, req.im_max), req.n
        )
        return schemas.StabilityMapResponse(
            integrator=req.integrator,
            theta=smap.theta,
            re_axis=smap.re_axis.tolist(),
            im_axis=smap.im_axis.tolist(),
            magnitude=smap.magnitude.tolist(),
        )

    @app.post("/transient-gains", response_model=schemas.TransientGainsResponse)
    def transient_gains(req: schemas.TransientGainsRequest) -> schemas.TransientGainsResponse:
        if req.lh_mag_min >= req.lh_mag_max:
            raise FreqintError(
                f"need lh_mag_min < lh_mag_max, got {req.lh_mag_min} and {req.lh_mag_max}"
            )
        omega = schemas.omega_from_hz(req.f_select)
        ratio = req.lh_mag_max / req.lh_mag_min
        mags = [
            req.lh_mag_min * ratio ** (k / (req.n_points - 1))
            for k in range(req.n_points)
        ]
        rows = transient_gain_table(req.h, omega, mags)
        out = [
            schemas.TransientGainRow(
                lambda_h=r[0],
                gain_A=r[1],
                gain_B=r[2],
                gain_C=r[3],
                gain_D=r[4],
                gain_TR=r[5],
                gain_BE=r[6],
                exact=r[7],
            )
            for r in rows
        ]
        return schemas.TransientGainsResponse(h=req.h, theta=omega * req.h, rows=out)

    @app.post("/verify-roots", response_model=schemas.VerifyRootsResponse)
    def verify_roots(req: schemas.VerifyRootsRequest) -> schemas.VerifyRootsResponse:
        cs = _build_from_request(req)
        reports = verify_root_design(cs, req.tolerance)
        rows = []
        for report in reports:
            for check in report.checks:
                rows.append(
                    schemas.RootCheckRow(
                        root_re=report.location.real,
                        root_im=report.location.imag,
                        claimed_multiplicity=report.claimed_multiplicity,
                        order=check.order,
                        derivative_magnitude=check.magnitude,
                        threshold=check.threshold,
                        requirement=check.requirement,
                        passed=check.passed,
                    )
                )
        return schemas.VerifyRootsResponse(
            integrator=req.integrator,
            h=req.h,
            passed=all(r.passed for r in reports),
            rows=rows,
        )

    @app.post("/case", response_model=schemas.CaseResponse)
    def case(req: schemas.CaseRequest) -> schemas.CaseResponse:
        table = run_case_table(
            req.case_id, tuple(req.step_sizes_us), t_end=req.t_end
        )
        return schemas.CaseResponse(
            case_id=req.case_id,
            t_end=req.t_end,
            step_sizes_us=list(req.step_sizes_us),
            integrators=list(schemas.KIND_ORDER),
            errors_percent=table.tolist(),
        )

    @app.post("/demo-transient", response_model=schemas.TransientDemoResponse)
    def demo_transient(req: schemas.TransientDemoRequest) -> schemas.TransientDemoResponse:
        omega_syn = 120.0 * math.pi
        params = TestCaseParams(a=req.a, b=req.b, omega_syn=omega_syn, x0=req.x0)
        system = LinearSystem(
            a_matrix=[[req.a]],
            b_matrix=[[req.b]],
            u=lambda t: math.cos(omega_syn * t),
            u_dot=lambda t: -omega_syn * math.sin(omega_syn * t),
        )
        omega_sel = schemas.omega_from_hz(req.f_select)
        states = []
        times = None
        for name in schemas.KIND_ORDER:
            kind = IntegratorKind(name)
            omega = omega_sel if kind.needs_omega else 0.0
            trace = simulate(
                system, req.h, req.t_end, [req.x0], kind=kind, omega_select=omega
            )
            if times is None:
                times = trace.times.tolist()
            states.append(trace.values[:, 0].tolist())
        exact = [analytic_case_solution(params, t) for t in times]
        return schemas.TransientDemoResponse(
            h=req.h,
            times=times,
            integrators=list(schemas.KIND_ORDER),
            states=states,
            exact=exact,
        )

    return app
