"""Request and response models shared by the HTTP service and the CLI."""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class Area2DRequest(BaseModel):
    v1: tuple[float, float]
    v2: tuple[float, float]
    paper_literal: bool = False


class ValueResponse(BaseModel):
    value: float


class Cross3DRequest(BaseModel):
    v1: tuple[float, float, float]
    v2: tuple[float, float, float]


class VectorResponse(BaseModel):
    value: tuple[float, float, float]


class VolumeRequest(BaseModel):
    v1: tuple[float, float, float]
    v2: tuple[float, float, float]
    v3: tuple[float, float, float]


class DetRequest(BaseModel):
    matrix: list[list[float]]
    method: Literal["quantum", "classical", "both"] = "both"


class DetResponse(BaseModel):
    quantum: float | None = None
    classical: float | None = None
    difference: float | None = None


class SynthRequest(BaseModel):
    """Sparse target: term keys are ket labels or decimal basis indices."""

    num_qubits: int = Field(ge=1)
    terms: dict[str, tuple[float, float]]


class SynthResponse(BaseModel):
    qasm: str
    fidelity: float
    num_gates: int


class SupportEntry(BaseModel):
    label: str
    amplitude: tuple[float, float]


class ReportModel(BaseModel):
    target: str
    qubits: int
    fidelity: float
    global_phase: tuple[float, float] | None
    passed: bool
    prepared_support: list[SupportEntry]


class VerifyResponse(BaseModel):
    reports: list[ReportModel]
    text: str


class HealthResponse(BaseModel):
    status: str


class ErrorResponse(BaseModel):
    detail: str
