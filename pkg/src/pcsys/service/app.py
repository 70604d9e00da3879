"""FastAPI service exposing the analysis pipeline.

Endpoints mirror the CLI subcommands: /analyze, /simulate, /export-dot,
/petri, plus fixture listing and retrieval.  Domain errors surface as
HTTP 422 with a payload carrying the error kind and the process exit code
a CLI front end should use.
"""

from __future__ import annotations

import json

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import fixtures as fx
from ..chain import markov_chain, null_nodes
from ..dcs import dominant_valuation
from ..dotexport import export_dot
from ..errors import PcsError, SchemaError
from ..jsonio import (
    SCHEMA_VERSION,
    dump_system,
    load_petri,
    load_system,
    load_valuation,
)
from ..measure import uniform_measure
from ..petri import from_petri
from ..policy import DEFAULT_POLICY, NumericPolicy
from ..report import analysis_report
from ..system import ConcurrentSystem, build_system
from .schemas import (
    AnalyzeRequest,
    ErrorPayload,
    ExportDotRequest,
    PetriRequest,
    SimulateRequest,
    SystemSource,
)

app = FastAPI(title="pcsys", version="0.1.0")


@app.exception_handler(PcsError)
async def _pcs_error_handler(request, exc: PcsError):
    payload = ErrorPayload(
        error=str(exc),
        kind=type(exc).__name__,
        exit_code=exc.exit_code,
        witness=getattr(exc, "witness", None),
    )
    return JSONResponse(status_code=422, content=json.loads(payload.model_dump_json()))


def _resolve_system(req: SystemSource) -> ConcurrentSystem:
    if req.fixture is not None:
        try:
            return fx.get_system(req.fixture)
        except KeyError as exc:
            raise SchemaError(str(exc)) from None
    doc = req.system
    if isinstance(doc, dict) and set(doc) <= {"alphabet", "independence", "schema_version"}:
        # a bare monoid document builds the single-state system
        from ..jsonio import load_monoid

        return build_system(load_monoid(doc))
    return load_system(doc)


def _resolve_valuation(system: ConcurrentSystem, spec, policy: NumericPolicy):
    if spec == "uniform":
        return uniform_measure(system, policy).valuation
    if spec == "dominant":
        return dominant_valuation(system)
    if isinstance(spec, dict):
        return load_valuation(system, spec)
    raise SchemaError(f"bad valuation specifier {spec!r}")


def _policy(tol: float | None) -> NumericPolicy:
    if tol is None:
        return DEFAULT_POLICY
    return NumericPolicy(kernel_tol=tol, prob_tol=tol)


@app.get("/health")
async def health():
    return {"status": "ok", "schema_version": SCHEMA_VERSION}


@app.get("/fixtures")
async def list_fixtures():
    return {"fixtures": fx.fixture_names()}


@app.get("/fixtures/{name}")
async def get_fixture(name: str):
    from ..jsonio import dump_monoid

    if name in fx.MONOID_NAMES:
        return dump_monoid(fx.get_monoid(name))
    if name in fx.SYSTEM_NAMES:
        return dump_system(fx.get_system(name))
    raise SchemaError(f"unknown fixture {name!r}")


@app.post("/analyze")
async def analyze(req: AnalyzeRequest):
    system = _resolve_system(req)
    return analysis_report(
        system,
        uniform=req.uniform,
        dcs=req.dcs,
        spectral=req.spectral,
        order=req.order,
        policy=_policy(req.tol),
    )


@app.post("/simulate")
async def simulate(req: SimulateRequest):
    system = _resolve_system(req)
    valuation = _resolve_valuation(system, req.valuation, DEFAULT_POLICY)
    chain = markov_chain(system, valuation)
    trajectory = chain.sample(req.state, req.steps, req.seed)
    layers = [list(c) for _, c in trajectory]
    return {
        "schema_version": SCHEMA_VERSION,
        "state": req.state,
        "seed": req.seed,
        "trajectory": [[alpha, list(c)] for alpha, c in trajectory],
        "execution": {"layers": layers},
        "terminated_early": len(trajectory) < req.steps,
    }


@app.post("/export-dot")
async def export_dot_endpoint(req: ExportDotRequest):
    system = _resolve_system(req)
    nulls = ()
    if req.mark_null is not None:
        valuation = _resolve_valuation(system, req.mark_null, DEFAULT_POLICY)
        nulls = null_nodes(system, valuation)
    return {"schema_version": SCHEMA_VERSION, "dot": export_dot(system, req.graph, nulls)}


@app.post("/petri")
async def petri(req: PetriRequest):
    net = load_petri(req.net)
    system = from_petri(net)
    return {
        "schema_version": SCHEMA_VERSION,
        "marking_count": len(system.states),
        "markings": getattr(system, "marking_of_state", {}),
        "independence": [list(p) for p in system.monoid.independence],
        "system": dump_system(system),
    }
