"""Request and response models for the analysis service."""

from __future__ import annotations

import math
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

KindName = Literal["A", "B", "C", "D", "TR", "BE"]

KIND_ORDER: tuple[str, ...] = ("A", "B", "C", "D", "TR", "BE")


def omega_from_hz(f_select: float) -> float:
    return 2.0 * math.pi * f_select


class CoeffsRequest(BaseModel):
    integrator: KindName
    h: float = Field(gt=0, description="step size in seconds")
    f_select: float = Field(default=60.0, ge=0, description="tuning frequency in Hz")


class CoefficientSetOut(BaseModel):
    integrator: KindName
    h: float
    omega_select: float
    a_prev: float
    b_now: float
    b_prev: float
    c_now: float
    c_prev: float


class SweepRequest(CoeffsRequest):
    omega_min: Optional[float] = Field(default=None, ge=0)
    omega_max: Optional[float] = Field(default=None, gt=0)
    n_points: int = Field(default=2001, ge=2, le=200001)
    spacing: Literal["linear", "log"] = "linear"


class SweepPoint(BaseModel):
    omega: float
    err_re: float
    err_im: float
    err_mag: float


class SweepResponse(BaseModel):
    integrator: KindName
    h: float
    points: list[SweepPoint]


class StabilityMapRequest(CoeffsRequest):
    re_min: float = -50.0
    re_max: float = 0.0
    im_min: float = -50.0
    im_max: float = 50.0
    n: int = Field(default=201, ge=2, le=2001)


class StabilityMapResponse(BaseModel):
    # poles map to +inf; keep them as JSON Infinity constants on the wire
    model_config = ConfigDict(ser_json_inf_nan="constants")

    integrator: KindName
    theta: float
    re_axis: list[float]
    im_axis: list[float]
    magnitude: list[list[float]]


class TransientGainsRequest(BaseModel):
    h: float = Field(gt=0)
    f_select: float = Field(default=60.0, ge=0)
    lh_mag_min: float = Field(default=1e-3, gt=0)
    lh_mag_max: float = Field(default=1e6, gt=0)
    n_points: int = Field(default=121, ge=2, le=100001)


class TransientGainRow(BaseModel):
    lambda_h: float
    gain_A: float
    gain_B: float
    gain_C: float
    gain_D: float
    gain_TR: float
    gain_BE: float
    exact: float


class TransientGainsResponse(BaseModel):
    h: float
    theta: float
    rows: list[TransientGainRow]


class VerifyRootsRequest(CoeffsRequest):
    tolerance: float = Field(default=1e-9, gt=0)


class RootCheckRow(BaseModel):
    root_re: float
    root_im: float
    claimed_multiplicity: int
    order: int
    derivative_magnitude: float
    threshold: float
    requirement: Literal["below", "above"]
    passed: bool


class VerifyRootsResponse(BaseModel):
    integrator: KindName
    h: float
    passed: bool
    rows: list[RootCheckRow]


class CaseRequest(BaseModel):
    case_id: Literal[1, 2]
    t_end: float = Field(default=1.0, gt=0)
    step_sizes_us: list[float] = Field(
        default=[125.0, 250.0, 500.0, 1000.0, 2000.0, 4000.0], min_length=1
    )


class CaseResponse(BaseModel):
    case_id: int
    t_end: float
    step_sizes_us: list[float]
    integrators: list[str]
    errors_percent: list[list[float]]


class TransientDemoRequest(BaseModel):
    h: float = Field(default=2e-3, gt=0)
    t_end: float = Field(default=0.1, gt=0)
    f_select: float = Field(default=60.0, ge=0)
    a: float = -5000.0
    b: float = 300.0
    x0: float = 2.0


class TransientDemoResponse(BaseModel):
    h: float
    times: list[float]
    integrators: list[str]
    states: list[list[float]]
    exact: list[float]
