"""HTTP service exposing the library operations.

Thin glue only: each endpoint converts the request model to grid types,
calls the library, and wraps the result. Domain errors map to stable
status codes and machine-readable error codes so clients (including the
bundled CLI) can translate them without parsing messages:

    400 usage    malformed request body
    409 no_path  the requested path/cycle does not exist (names the
                 forbidden condition)
    422 invalid  shape or endpoint violates the domain constraints
    422 budget   instance exceeds the oracle search budget
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

import lpath
from . import grid, longest, lshape, oracle, rect, render, selftest, traceplan
from .errors import InvalidInstance, NoPathExists, OracleBudgetExceeded
from .grid import LShape, Rect
from .schemas import (
    ClassifyResponse,
    CycleResponse,
    HealthResponse,
    InstanceRequest,
    LongestResponse,
    OracleRequest,
    OracleResponse,
    PathResponse,
    RenderRequest,
    RenderResponse,
    SelftestRequest,
    SelftestResponse,
    ShapeModel,
    ShapeRequest,
    TracePlanRequest,
    TracePlanResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="lpath",
    version=lpath.__version__,
    description="Hamiltonian and longest (s,t)-paths in rectangular and "
                "L-shaped supergrid graphs",
)


def _error(status: int, code: str, message: str, condition: str | None = None):
    body: dict = {"code": code, "message": message}
    if condition is not None:
        body["condition"] = condition
    return JSONResponse(status_code=status, content={"error": body})


@app.exception_handler(RequestValidationError)
async def _usage_error(request: Request, exc: RequestValidationError):
    return _error(400, "usage", str(exc.errors()))


@app.exception_handler(InvalidInstance)
async def _invalid_error(request: Request, exc: InvalidInstance):
    return _error(422, "invalid", str(exc))


@app.exception_handler(OracleBudgetExceeded)
async def _budget_error(request: Request, exc: OracleBudgetExceeded):
    return _error(422, "budget", str(exc))


@app.exception_handler(NoPathExists)
async def _no_path_error(request: Request, exc: NoPathExists):
    return _error(409, "no_path", str(exc), condition=exc.condition)


@app.get("/healthz", response_model=HealthResponse)
def healthz():
    return HealthResponse(status="ok", version=lpath.__version__)


@app.post("/classify", response_model=ClassifyResponse,
          response_model_exclude_none=True)
def classify(req: InstanceRequest):
    shape = req.shape.to_shape()
    if isinstance(shape, Rect):
        f1 = rect.satisfies_f1_rect(shape, req.s, req.t)
        return ClassifyResponse(
            f1=f1,
            f2=rect.satisfies_f2_rect(shape, req.s, req.t),
            f3=False, f4=False, f5=False,
            label="F1" if f1 else "L0",
            bound=rect.longest_len_rect(shape, req.s, req.t),
        )
    plan = longest.classify(shape, req.s, req.t)
    return ClassifyResponse(
        f1=lshape.satisfies_f1_lshape(shape, req.s, req.t),
        f3=lshape.satisfies_f3(shape),
        f4=lshape.satisfies_f4(shape, req.s, req.t),
        f5=lshape.satisfies_f5(shape, req.s, req.t),
        label=plan.label,
        bound=plan.bound,
    )


@app.post("/hc", response_model=CycleResponse)
def hamiltonian_cycle(req: ShapeRequest):
    shape = req.shape.to_shape()
    if isinstance(shape, Rect):
        sides = rect.legal_concave_sides(shape)
        if not sides:
            raise NoPathExists(f"{shape} has no Hamiltonian cycle",
                               condition="HC")
        cycle = rect.canonical_hc(shape, sides[0])
    else:
        cycle = lshape.hc_lshape(shape)
    return CycleResponse(shape=req.shape, cycle=cycle, length=len(cycle))


@app.post("/hp", response_model=PathResponse)
def hamiltonian_path(req: InstanceRequest):
    shape = req.shape.to_shape()
    path = (rect.hp_rect(shape, req.s, req.t) if isinstance(shape, Rect)
            else lshape.hp_lshape(shape, req.s, req.t))
    return PathResponse(shape=req.shape, path=path, s=req.s, t=req.t,
                        length=len(path))


@app.post("/longest", response_model=LongestResponse)
def longest_path(req: InstanceRequest):
    shape = req.shape.to_shape()
    if isinstance(shape, Rect):
        path = rect.longest_path_rect(shape, req.s, req.t)
        f1 = rect.satisfies_f1_rect(shape, req.s, req.t)
        bound, label = len(path), ("F1" if f1 else "L0")
    else:
        plan = longest.classify(shape, req.s, req.t)
        path = longest.longest_path_lshape(shape, req.s, req.t)
        bound, label = plan.bound, plan.label
    return LongestResponse(shape=req.shape, path=path, s=req.s, t=req.t,
                           length=len(path), bound=bound, label=label)


@app.post("/verify", response_model=VerifyResponse,
          response_model_exclude_none=True)
def verify(req: VerifyRequest):
    shape = req.shape.to_shape()
    if (req.path is None) == (req.cycle is None):
        raise InvalidInstance("give exactly one of 'path' or 'cycle'")
    if req.cycle is not None:
        seq = [tuple(p) for p in req.cycle]
        error = grid.check_cycle(shape, seq, hamiltonian=req.hamiltonian)
        kind = "cycle"
    else:
        seq = [tuple(p) for p in req.path]
        error = grid.check_path(shape, seq, s=req.s, t=req.t,
                                hamiltonian=req.hamiltonian)
        kind = "path"
    return VerifyResponse(
        valid=error is None,
        kind=kind,
        length=len(seq),
        hamiltonian=len(seq) == grid.vertex_count(shape) and error is None,
        error=error,
    )


@app.post("/render", response_model=RenderResponse)
def render_drawing(req: RenderRequest):
    shape = req.shape.to_shape()
    if req.path is not None and req.cycle is not None:
        raise InvalidInstance("give at most one of 'path' or 'cycle'")
    seq = [tuple(p) for p in (req.path or req.cycle or [])]
    draw = render.render_svg if req.format == "svg" else render.render_ascii
    content = draw(shape, seq or None, cyclic=req.cycle is not None)
    return RenderResponse(format=req.format, content=content)


@app.post("/oracle", response_model=OracleResponse)
def oracle_longest(req: OracleRequest):
    shape = req.shape.to_shape()
    path = oracle.longest_path(shape, req.s, req.t, budget=req.budget)
    return OracleResponse(length=len(path), path=path)


@app.post("/selftest", response_model=SelftestResponse)
def run_selftest(req: SelftestRequest):
    return SelftestResponse(**selftest.run_selftest(req.max_vertices))


@app.post("/trace-plan", response_model=TracePlanResponse)
def trace_plan(req: TracePlanRequest):
    items = [(item.shape.to_shape(), item.offset) for item in req.items]
    plan = traceplan.plan_trace(items)
    return TracePlanResponse(**plan)
