"""HTTP front end: exact evaluation, comparison, and the law suite as a
small FastAPI service. The CLI is a thin client of these endpoints."""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .evaluator import (
    ApartnessFuelError,
    EvalConfig,
    compare_reals,
    eval_expr,
    print_decimal,
)
from .expressions import ParseError, parse
from .laws import run_law_suite
from .oracle import IndeterminateDivisionError
from .rationals import DomainError, ensure_positive, parse_rational
from .schemas import (
    CompareRequest,
    CompareResponse,
    EvalRequest,
    EvalResponse,
    LawsRequest,
    LawsResponse,
    ViolationModel,
)


def create_app() -> FastAPI:
    app = FastAPI(title="exactreal", version="0.1.0")

    @app.exception_handler(ParseError)
    async def _parse_error(request, exc: ParseError):
        return JSONResponse(
            status_code=400, content={"detail": {"kind": "parse", "message": str(exc)}}
        )

    @app.exception_handler(DomainError)
    async def _domain_error(request, exc: DomainError):
        return JSONResponse(
            status_code=400, content={"detail": {"kind": "domain", "message": str(exc)}}
        )

    @app.exception_handler(ApartnessFuelError)
    async def _apartness_error(request, exc: ApartnessFuelError):
        return JSONResponse(
            status_code=422,
            content={"detail": {"kind": "apartness", "message": str(exc)}},
        )

    @app.exception_handler(IndeterminateDivisionError)
    async def _indeterminate_error(request, exc: IndeterminateDivisionError):
        return JSONResponse(
            status_code=422,
            content={"detail": {"kind": "indeterminate", "message": str(exc)}},
        )

    @app.post("/eval", response_model=EvalResponse)
    def evaluate(req: EvalRequest) -> EvalResponse:
        cfg = EvalConfig(digits=req.digits, fuel=req.fuel)
        value = eval_expr(parse(req.expr), cfg)
        return EvalResponse(
            expr=req.expr, digits=req.digits, value=print_decimal(value, req.digits)
        )

    @app.post("/compare", response_model=CompareResponse)
    def compare(req: CompareRequest) -> CompareResponse:
        cfg = EvalConfig(fuel=req.fuel)
        u = eval_expr(parse(req.left), cfg)
        v = eval_expr(parse(req.right), cfg)
        outcome = compare_reals(u, v, req.fuel)
        return CompareResponse(result=outcome.result, last_probe=str(outcome.last_probe))

    @app.post("/laws", response_model=LawsResponse)
    def laws(req: LawsRequest) -> LawsResponse:
        epsilon = ensure_positive(parse_rational(req.epsilon), "epsilon")
        report = run_law_suite(
            samples=req.samples, epsilon=epsilon, seed=req.seed, fuel=req.fuel
        )
        return LawsResponse(
            checked=report.checked,
            violations=[
                ViolationModel(law=v.law, detail=v.detail) for v in report.violations
            ],
        )

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    return app


app = create_app()
