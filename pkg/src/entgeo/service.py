"""FastAPI service exposing the geometry, audit and synthesis operations.

The ``run_*`` handlers hold the actual request handling and are plain
functions over the schema models; the routes and the command-line client both
delegate to them, so HTTP and CLI cannot drift apart.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import geometry
from .circuit import export_qasm
from .errors import (
    CapacityError,
    EntgeoError,
    SynthesisError,
)
from .reference_circuits import (
    VerificationReport,
    audit_reference_circuits,
    format_reports,
    verify_preparation,
)
from .schemas import (
    Area2DRequest,
    Cross3DRequest,
    DetRequest,
    DetResponse,
    ErrorResponse,
    HealthResponse,
    ReportModel,
    SupportEntry,
    SynthRequest,
    SynthResponse,
    ValueResponse,
    VectorResponse,
    VerifyResponse,
    VolumeRequest,
)
from .states import SparseState
from .synthesis import synth_sparse_state


def run_area2d(req: Area2DRequest) -> ValueResponse:
    mode = geometry.AreaMode.PAPER_LITERAL if req.paper_literal else geometry.AreaMode.DETERMINANT
    return ValueResponse(value=geometry.area2d(req.v1, req.v2, mode))


def run_cross3d(req: Cross3DRequest) -> VectorResponse:
    x, y, z = geometry.cross3d(req.v1, req.v2)
    return VectorResponse(value=(x, y, z))


def run_volume(req: VolumeRequest) -> ValueResponse:
    return ValueResponse(value=geometry.volume(req.v1, req.v2, req.v3))


def run_det(req: DetRequest) -> DetResponse:
    quantum = classical = difference = None
    if req.method in ("quantum", "both"):
        quantum = geometry.det_quantum(req.matrix)
    if req.method in ("classical", "both"):
        classical = geometry.det_classical(req.matrix)
    if req.method == "both":
        difference = abs(quantum - classical)
    return DetResponse(quantum=quantum, classical=classical, difference=difference)


def _report_model(report: VerificationReport) -> ReportModel:
    phase = report.global_phase
    return ReportModel(
        target=report.target_name,
        qubits=report.num_qubits,
        fidelity=report.fidelity,
        global_phase=None if phase is None else (phase.real, phase.imag),
        passed=report.passed,
        prepared_support=[
            SupportEntry(label=label, amplitude=(amp.real, amp.imag))
            for label, amp in report.prepared_support
        ],
    )


def run_verify_paper() -> VerifyResponse:
    reports = audit_reference_circuits()
    return VerifyResponse(
        reports=[_report_model(r) for r in reports],
        text=format_reports(reports),
    )


def parse_term_key(key: str, num_qubits: int) -> int:
    """Resolve a JSON term key: a full-width bitstring label, else a decimal index."""
    if len(key) == num_qubits and all(ch in "01" for ch in key):
        return int(key, 2)
    try:
        return int(key, 10)
    except ValueError:
        raise ValueError(
            f"term key {key!r} is neither a {num_qubits}-bit label nor a decimal index"
        ) from None


def target_from_request(req: SynthRequest) -> SparseState:
    coeffs = {
        parse_term_key(key, req.num_qubits): complex(re, im)
        for key, (re, im) in req.terms.items()
    }
    return SparseState.from_terms(req.num_qubits, coeffs)


def run_synth(req: SynthRequest) -> SynthResponse:
    target = target_from_request(req)
    circuit = synth_sparse_state(target)
    report = verify_preparation(circuit, target, "synth-target")
    if not report.passed:
        raise SynthesisError(
            f"synthesized circuit missed its target: fidelity {report.fidelity:.12f}"
        )
    return SynthResponse(
        qasm=export_qasm(circuit).text,
        fidelity=report.fidelity,
        num_gates=circuit.num_ops(),
    )


_ERROR_RESPONSES = {
    400: {"model": ErrorResponse, "description": "Invalid input"},
    413: {"model": ErrorResponse, "description": "Register capacity exceeded"},
    500: {"model": ErrorResponse, "description": "Internal self-check failure"},
}

app = FastAPI(
    title="entgeo",
    description="Areas, cross products and determinants as detector-state inner products",
    version="0.1.0",
)


@app.exception_handler(EntgeoError)
async def _entgeo_error_handler(request: Request, exc: EntgeoError) -> JSONResponse:
    if isinstance(exc, SynthesisError):
        status = 500
    elif isinstance(exc, CapacityError):
        status = 413
    else:
        status = 400
    return JSONResponse(status_code=status, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error_handler(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
async def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/area2d", response_model=ValueResponse, responses=_ERROR_RESPONSES)
async def area2d_endpoint(req: Area2DRequest) -> ValueResponse:
    return run_area2d(req)


@app.post("/cross3d", response_model=VectorResponse, responses=_ERROR_RESPONSES)
async def cross3d_endpoint(req: Cross3DRequest) -> VectorResponse:
    return run_cross3d(req)


@app.post("/volume", response_model=ValueResponse, responses=_ERROR_RESPONSES)
async def volume_endpoint(req: VolumeRequest) -> ValueResponse:
    return run_volume(req)


@app.post("/det", response_model=DetResponse, responses=_ERROR_RESPONSES)
async def det_endpoint(req: DetRequest) -> DetResponse:
    return run_det(req)


@app.get("/verify-paper", response_model=VerifyResponse)
async def verify_paper_endpoint() -> VerifyResponse:
    return run_verify_paper()


@app.post("/synth", response_model=SynthResponse, responses=_ERROR_RESPONSES)
async def synth_endpoint(req: SynthRequest) -> SynthResponse:
    return run_synth(req)
