"""HTTP service exposing the measures, baselines, and verification suites.

The core package stays a pure library; this module is the one place that
knows about transport concerns. Distributions travel as raw CSV or JSON
file content and are parsed server-side, so every client sees identical
parsing, alignment, and smoothing behavior.

Run with ``uvicorn dlite.service:app`` or ``dlite serve``.
"""

from __future__ import annotations

from typing import Any, Literal

import numpy as np
from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field, field_validator

from .baselines import jsd as jsd_measure
from .baselines import kl as kl_measure
from .baselines import tv as tv_measure
from .distributions import Distribution, align_many, parse_distributions, smooth
from .errors import DliteError, KlUndefined
from .measures import MeasureKind, delta_h, distance_matrix, dlite, lit
from .verification import run_all_checks


class DistributionsIn(BaseModel):
    """Raw distribution file content plus its format."""

    content: str
    format: Literal["csv", "json"]


class MatrixRequest(BaseModel):
    data: DistributionsIn
    measure: MeasureKind = MeasureKind.DLITE_CBRT
    smooth_epsilon: float | None = Field(default=None, gt=0)


class MatrixResponse(BaseModel):
    measure: MeasureKind
    names: list[str]
    values: list[list[float]]


class PairRequest(BaseModel):
    data: DistributionsIn
    name_a: str
    name_b: str
    smooth_epsilon: float | None = Field(default=None, gt=0)


class OutcomeTerms(BaseModel):
    g: float
    delta: float
    dl: float


class PairResponse(BaseModel):
    lit: float
    delta_h: float
    dlite: float
    dlite_cbrt: float
    kl: float | None
    jsd: float
    tv: float
    per_outcome: dict[str, OutcomeTerms]


class VerifyRequest(BaseModel):
    seed: int = 42
    samples: int = Field(default=10000, gt=0)
    dims: list[int] = Field(default=[2, 3, 4, 8])
    quadrature_samples: int = Field(default=2000, gt=100)
    grid_n: int = Field(default=100, ge=10)
    tolerances: dict[str, float] = Field(default_factory=dict)

    @field_validator("dims")
    @classmethod
    def _dims_in_range(cls, dims: list[int]) -> list[int]:
        if not dims:
            raise ValueError("dims must not be empty")
        for d in dims:
            if not 2 <= d <= 16:
                raise ValueError(f"dimension {d} outside [2, 16]")
        return dims


class ReportModel(BaseModel):
    property_name: str
    samples: int
    worst_violation: float
    worst_case_inputs: dict[str, Any]
    passed: bool
    seed: int


class VerifyResponse(BaseModel):
    all_passed: bool
    reports: list[ReportModel]


def _load(data: DistributionsIn) -> tuple[list[str], list[Distribution]]:
    named = parse_distributions(data.content, data.format)
    return [n for n, _ in named], [d for _, d in named]


def _prepare(
    dists: list[Distribution], smooth_epsilon: float | None
) -> list[Distribution]:
    """Align everything onto the common support, then optionally smooth.

    Smoothing comes after alignment so zero-filled outcomes get lifted too;
    with it applied, every measure (including KL) sees the same inputs.
    """
    aligned = align_many(dists)
    if smooth_epsilon is not None:
        aligned = [smooth(d, smooth_epsilon) for d in aligned]
    return aligned


def create_app() -> FastAPI:
    app = FastAPI(
        title="dlite",
        description="Bounded entropic-difference measures between probability distributions",
        version="0.1.0",
    )

    @app.exception_handler(DliteError)
    async def _dlite_error(request: Request, exc: DliteError) -> JSONResponse:
        status = 409 if isinstance(exc, KlUndefined) else 400
        return JSONResponse(
            status_code=status,
            content={"detail": {"error": type(exc).__name__, "message": str(exc)}},
        )

    @app.get("/health")
    def health() -> dict[str, Any]:
        return {"status": "ok", "measures": [k.value for k in MeasureKind]}

    @app.post("/matrix", response_model=MatrixResponse)
    def matrix(req: MatrixRequest) -> MatrixResponse:
        names, dists = _load(req.data)
        prepared = _prepare(dists, req.smooth_epsilon)
        result = distance_matrix(prepared, req.measure, names)
        return MatrixResponse(
            measure=result.kind,
            names=list(result.names),
            values=[[float(v) for v in row] for row in result.values],
        )

    @app.post("/pair", response_model=PairResponse)
    def pair(req: PairRequest) -> PairResponse:
        names, dists = _load(req.data)
        try:
            p = dists[names.index(req.name_a)]
            q = dists[names.index(req.name_b)]
        except ValueError:
            missing = req.name_a if req.name_a not in names else req.name_b
            raise HTTPException(
                status_code=404,
                detail={"error": "UnknownName",
                        "message": f"no distribution named {missing!r} in input"},
            ) from None
        p, q = _prepare([p, q], req.smooth_epsilon)
        dl_res = dlite(p, q)
        try:
            kl_value: float | None = kl_measure(p, q)
        except KlUndefined:
            kl_value = None
        return PairResponse(
            lit=lit(p, q).total,
            delta_h=delta_h(p, q).total,
            dlite=dl_res.total,
            dlite_cbrt=float(np.cbrt(dl_res.total)),
            kl=kl_value,
            jsd=jsd_measure(p, q),
            tv=tv_measure(p, q),
            per_outcome={
                lab: OutcomeTerms(g=tb.g, delta=tb.delta, dl=tb.dl)
                for lab, tb in dl_res.per_outcome.items()
            },
        )

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        try:
            reports = run_all_checks(
                samples=req.samples,
                dims=req.dims,
                seed=req.seed,
                quadrature_samples=req.quadrature_samples,
                grid_n=req.grid_n,
                tolerances=req.tolerances or None,
            )
        except ValueError as exc:
            raise HTTPException(
                status_code=400,
                detail={"error": "BadRequest", "message": str(exc)},
            ) from None
        return VerifyResponse(
            all_passed=all(r.passed for r in reports),
            reports=[ReportModel(**r.as_dict()) for r in reports],
        )

    return app


app = create_app()
