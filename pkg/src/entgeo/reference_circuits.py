"""Bundled reference preparation circuits and differential verification.

The three listing builders transcribe the published preparation circuits for
the area, cross-product and volume detector states gate for gate, including
their apparent mistakes; nothing here is corrected or optimized.
``verify_preparation`` then reports what a circuit actually prepares against
the state it is meant to prepare.  Verification only ever reports; it never
asserts, because a faithful transcription is allowed to fail its target.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .circuit import Circuit
from .errors import MappingError
from .geometry import area2d_detector, cross3d_detectors, det_detector, AreaMode
from .simulator import run
from .states import SparseState, basis_label, inner_product, normalize

FIDELITY_PASS_THRESHOLD = 1.0 - 1e-10

_SUPPORT_TOL = 1e-12

LISTING2_BLOCK_OFFSETS = (0, 6, 12)


def listing1_circuit() -> Circuit:
    """4-qubit circuit for the planar area detector: GHZ ladder, then X/X/Z."""
    qc = Circuit(4)
    qc.h(0)
    qc.barrier()
    qc.cx(0, 1)
    qc.cx(0, 2)
    qc.cx(0, 3)
    qc.barrier()
    qc.x(1)
    qc.x(3)
    qc.z(0)
    return qc


def listing2_circuit() -> Circuit:
    """18-qubit circuit meant to prepare all three cross-product detectors.

    Blocks start at qubits 0, 6 and 12; qubits 8, 9 and 15 are never touched
    by a gate.  The second and third blocks apply CX gates whose controls are
    still |0>, exactly as published.
    """
    qc = Circuit(18)
    qc.h(0)
    qc.barrier()
    qc.cx(0, 1)
    qc.cx(0, 2)
    qc.cx(0, 3)
    qc.cx(0, 4)
    qc.cx(0, 5)
    qc.barrier()
    qc.x(1)
    qc.x(4)
    qc.z(0)
    qc.barrier()
    qc.h(6)
    qc.barrier()
    qc.cx(6, 11)
    qc.cx(7, 10)
    qc.barrier()
    qc.x(6)
    qc.x(11)
    qc.z(6)
    qc.barrier()
    qc.h(12)
    qc.barrier()
    qc.cx(13, 17)
    qc.cx(14, 16)
    qc.barrier()
    qc.x(13)
    qc.x(16)
    qc.z(13)
    qc.barrier()
    return qc


def listing3_circuit() -> Circuit:
    """9-qubit circuit meant to prepare the volume detector.

    Three Hadamards fan out an 8-branch superposition; X-conjugated Toffolis
    write the row patterns.  Grouped X calls are kept as single multi-target
    ops to mirror the published call structure.
    """
    qc = Circuit(9)
    qc.h(0)
    qc.h(1)
    qc.h(2)
    qc.x(1, 2)
    qc.ccx(0, 1, 3)
    qc.ccx(0, 2, 7)
    qc.x(1, 2)
    qc.x(0, 2)
    qc.ccx(1, 0, 4)
    qc.ccx(1, 2, 6)
    qc.z(1)
    qc.x(0, 2)
    qc.x(0, 1)
    qc.ccx(2, 0, 5)
    qc.ccx(2, 1, 6)
    qc.cx(2, 8)
    qc.x(0, 1)
    return qc


@dataclass(frozen=True)
class QubitMapping:
    """Injective map from 1-based target variables to circuit qubits."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        variables = [v for v, _ in self.pairs]
        qubits = [q for _, q in self.pairs]
        if sorted(variables) != list(range(1, len(variables) + 1)):
            raise MappingError(
                f"variables must be exactly 1..{len(variables)}, got {sorted(variables)}"
            )
        if len(set(qubits)) != len(qubits):
            raise MappingError(f"mapping reuses a circuit qubit: {qubits}")
        if any(q < 0 for q in qubits):
            raise MappingError(f"negative circuit qubit in mapping: {qubits}")

    @classmethod
    def identity(cls, num_vars: int) -> QubitMapping:
        return cls(tuple((v, v - 1) for v in range(1, num_vars + 1)))

    @classmethod
    def block(cls, num_vars: int, offset: int) -> QubitMapping:
        """Variables 1..num_vars onto the contiguous qubits offset..offset+num_vars-1."""
        return cls(tuple((v, offset + v - 1) for v in range(1, num_vars + 1)))

    def qubit_for(self, variable: int) -> int:
        for v, q in self.pairs:
            if v == variable:
                return q
        raise MappingError(f"variable {variable} is not mapped")

    def max_qubit(self) -> int:
        return max(q for _, q in self.pairs)


@dataclass(frozen=True)
class VerificationReport:
    """What a circuit actually prepared, measured against its intended target.

    ``global_phase`` is only meaningful (non-None) when the preparation
    passed; ``prepared_support`` lists the nonzero amplitudes of the state the
    circuit produced, as (ket label, amplitude) sorted by basis index.
    """

    target_name: str
    num_qubits: int
    fidelity: float
    global_phase: complex | None
    passed: bool
    prepared_support: tuple[tuple[str, complex], ...]


def _embed_target(target: SparseState, mapping: QubitMapping, width: int) -> SparseState:
    if len(mapping.pairs) != target.num_qubits:
        raise MappingError(
            f"mapping covers {len(mapping.pairs)} variables, target has {target.num_qubits}"
        )
    if mapping.max_qubit() >= width:
        raise MappingError(
            f"mapping reaches qubit {mapping.max_qubit()}, circuit has {width} qubits"
        )
    qubit_of = {v - 1: mapping.qubit_for(v) for v in range(1, target.num_qubits + 1)}
    embedded: dict[int, complex] = {}
    for index, coeff in target.terms:
        image = 0
        for bit, qubit in qubit_of.items():
            if index & (1 << bit):
                image |= 1 << qubit
        embedded[image] = coeff
    return SparseState.from_terms(width, embedded)


def verify_preparation(
    circuit: Circuit,
    target: SparseState,
    target_name: str,
    mapping: QubitMapping | None = None,
) -> VerificationReport:
    """Simulate the circuit from |0...0> and compare against the target.

    The target is embedded into the circuit register through the mapping
    (identity when omitted); circuit qubits outside the mapping are required
    to be |0> in the embedded target.  The fidelity |<target|prepared>|**2 is
    reported as computed, pass or fail.
    """
    if mapping is None:
        mapping = QubitMapping.identity(target.num_qubits)
    embedded = _embed_target(target, mapping, circuit.num_qubits)
    target_hat, _ = normalize(embedded)

    prepared, _ = normalize(run(circuit))
    overlap = inner_product(target_hat, prepared)
    fidelity = float(abs(overlap) ** 2)
    passed = fidelity >= FIDELITY_PASS_THRESHOLD
    phase = complex(overlap / abs(overlap)) if passed else None

    amps = prepared.amplitudes
    support = tuple(
        (basis_label(i, circuit.num_qubits), complex(amps[i]))
        for i in np.flatnonzero(np.abs(amps) > _SUPPORT_TOL)
    )
    return VerificationReport(
        target_name=target_name,
        num_qubits=circuit.num_qubits,
        fidelity=fidelity,
        global_phase=phase,
        passed=passed,
        prepared_support=support,
    )


def audit_reference_circuits() -> list[VerificationReport]:
    """Verify every bundled listing against the detector it claims to prepare.

    Five reports: the area detector (published two-term pairing) from the
    4-qubit listing, the three cross-product detectors from the 18-qubit
    listing at block offsets 0/6/12, and the volume detector from the 9-qubit
    listing.
    """
    reports = [
        verify_preparation(
            listing1_circuit(), area2d_detector(AreaMode.PAPER_LITERAL), "A"
        )
    ]
    listing2 = listing2_circuit()
    for name, detector, offset in zip(
        ("A1", "A2", "A3"), cross3d_detectors(), LISTING2_BLOCK_OFFSETS
    ):
        reports.append(
            verify_preparation(
                listing2, detector, name, QubitMapping.block(6, offset)
            )
        )
    reports.append(verify_preparation(listing3_circuit(), det_detector(3), "V"))
    return reports


def _format_complex(value: complex) -> str:
    # Adding 0.0 folds negative zero so the frozen layout never shows "-0.000...".
    return f"{value.real + 0.0:+.12f}{value.imag + 0.0:+.12f}i"


def format_reports(reports: list[VerificationReport]) -> str:
    """Fixed-layout text rendering of verification reports.

    The layout is frozen (covered by a golden fixture): per target one block
    with fidelity to 12 decimals, the global phase or n/a, a yes/no pass
    flag, and the prepared support sorted by basis index.
    """
    blocks = []
    for report in reports:
        lines = [
            f"target: {report.target_name}",
            f"qubits: {report.num_qubits}",
            f"fidelity: {report.fidelity:.12f}",
            f"global_phase: {_format_complex(report.global_phase) if report.global_phase is not None else 'n/a'}",
            f"passed: {'yes' if report.passed else 'no'}",
            "prepared_support:",
        ]
        for label, amplitude in report.prepared_support:
            lines.append(f"  |{label}> {_format_complex(amplitude)}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
