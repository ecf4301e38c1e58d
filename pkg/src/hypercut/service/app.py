"""FastAPI application wrapping the core library.

Error mapping: malformed program text or hypergraph payloads are 422,
violated preconditions (width < 2, size limits, unknown names) are 400.
"""

from __future__ import annotations

import io
import json

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..analysis import (
    SweepConfig,
    coupling_ratio,
    full_circuit_closed_forms,
    rows_to_csv,
    run_sweep,
    summarize,
    summary_lines,
)
from ..circuits import Circuit, depth, size, width
from ..generators import build_family
from ..hypergraph import (
    Hypergraph,
    dual,
    expand_bipartite,
    export_hmetis,
    from_json,
    primal_from_circuit,
    to_json,
)
from ..partition import (
    fm_bipartition,
    kl_bipartition,
    spatial_cut,
    temporal_cut,
    temporal_cut_hypergraph,
)
from ..qasm import QasmError, emit_qasm, parse_qasm
from .models import (
    CircuitStats,
    CircuitText,
    ClosedFormRow,
    CouplingResponse,
    CutReportModel,
    ExportRequest,
    ExportResponse,
    GenerateRequest,
    GenerateResponse,
    HealthResponse,
    ParseResponse,
    PartitionRequest,
    SweepRequest,
    SweepResponse,
    TemporalReportModel,
)

app = FastAPI(title="hypercut", version=__version__)


def _parse_or_422(qasm: str) -> Circuit:
    try:
        return parse_qasm(qasm)
    except QasmError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _hypergraph_or_422(payload: dict) -> Hypergraph:
    try:
        return from_json(json.dumps(payload))
    except (KeyError, TypeError, ValueError) as exc:
        raise HTTPException(
            status_code=422, detail=f"bad hypergraph payload: {exc}"
        ) from exc


def _stats(circuit: Circuit) -> CircuitStats:
    return CircuitStats(
        name=circuit.name,
        width=width(circuit),
        size=size(circuit),
        depth=depth(circuit),
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/circuits/parse", response_model=ParseResponse)
def circuits_parse(req: CircuitText) -> ParseResponse:
    circuit = _parse_or_422(req.qasm)
    return ParseResponse(stats=_stats(circuit), canonical_qasm=emit_qasm(circuit))


@app.post("/circuits/generate", response_model=GenerateResponse)
def circuits_generate(req: GenerateRequest) -> GenerateResponse:
    try:
        tag, circuit = build_family(
            req.family,
            req.n,
            gateset=req.gateset,
            seed=req.seed,
            depth_factor=req.depth_factor,
            phase_index=req.phase_index,
            iterations=req.iterations,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return GenerateResponse(tag=tag, qasm=emit_qasm(circuit), stats=_stats(circuit))


def _partition_input(req: PartitionRequest) -> tuple[str, object]:
    if (req.qasm is None) == (req.hypergraph is None):
        raise HTTPException(
            status_code=422, detail="provide exactly one of qasm or hypergraph"
        )
    if req.qasm is not None:
        return "circuit", _parse_or_422(req.qasm)
    return "hypergraph", _hypergraph_or_422(req.hypergraph)


@app.post("/partition/spatial", response_model=CutReportModel)
def partition_spatial(req: PartitionRequest) -> CutReportModel:
    kind, obj = _partition_input(req)
    try:
        if kind == "circuit":
            report = spatial_cut(
                obj, req.heuristic, req.seed, req.restarts, req.include_midcut_start
            )
        elif req.heuristic == "fm":
            _, report = fm_bipartition(
                obj, req.seed, req.restarts, req.include_midcut_start
            )
        elif req.heuristic == "kl":
            _, report = kl_bipartition(
                expand_bipartite(obj), req.seed, req.restarts, req.include_midcut_start
            )
        else:
            raise ValueError(f"unknown heuristic: {req.heuristic!r}")
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return CutReportModel(**report.to_dict())


@app.post("/partition/temporal", response_model=TemporalReportModel)
def partition_temporal(req: PartitionRequest) -> TemporalReportModel:
    kind, obj = _partition_input(req)
    try:
        if kind == "circuit":
            report = temporal_cut(obj, req.seed, req.restarts, req.include_midcut_start)
        else:
            report = temporal_cut_hypergraph(
                obj, req.seed, req.restarts, req.include_midcut_start
            )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return TemporalReportModel(**report.to_dict())


@app.post("/hypergraph/export", response_model=ExportResponse)
def hypergraph_export(req: ExportRequest) -> ExportResponse:
    if (req.qasm is None) == (req.hypergraph is None):
        raise HTTPException(
            status_code=422, detail="provide exactly one of qasm or hypergraph"
        )
    if req.qasm is not None:
        h = primal_from_circuit(_parse_or_422(req.qasm))
    else:
        h = _hypergraph_or_422(req.hypergraph)
    try:
        if not h.vertices:
            raise ValueError("nothing to export: the hypergraph is empty")
        if req.dual:
            h = dual(h)
        if req.format == "json":
            content = to_json(h)
        elif req.format == "hmetis":
            sink = io.BytesIO()
            export_hmetis(h, sink)
            content = sink.getvalue().decode("ascii")
        else:
            raise ValueError(f"unknown export format: {req.format!r}")
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return ExportResponse(format=req.format, content=content)


@app.post("/analysis/coupling", response_model=CouplingResponse)
def analysis_coupling(req: CircuitText) -> CouplingResponse:
    circuit = _parse_or_422(req.qasm)
    try:
        metrics = coupling_ratio(circuit)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return CouplingResponse(**metrics.to_dict())


@app.get("/analysis/closed-forms", response_model=list[ClosedFormRow])
def analysis_closed_forms(n_max: int = 12) -> list[ClosedFormRow]:
    try:
        rows = full_circuit_closed_forms(n_max)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return [ClosedFormRow(n=n, cb=cb, mincut=mincut) for n, cb, mincut in rows]


@app.post("/sweep", response_model=SweepResponse)
def sweep(req: SweepRequest) -> SweepResponse:
    try:
        config = SweepConfig.from_dict(req.config)
    except (TypeError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=f"bad sweep config: {exc}") from exc
    rows = run_sweep(config)
    return SweepResponse(
        csv=rows_to_csv(rows), summary=summary_lines(summarize(rows))
    )
