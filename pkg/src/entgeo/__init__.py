"""Geometric quantities as inner products with entangled detector states."""
from __future__ import annotations

from .circuit import Circuit, Gate, GateKind, QasmDocument, decompose, export_qasm
from .errors import (
    CapacityError,
    DegenerateStateError,
    DimensionError,
    EntgeoError,
    LabelError,
    MappingError,
    SynthesisError,
    UnsupportedTargetError,
)
from .geometry import (
    AreaMode,
    area2d,
    area2d_detector,
    cross3d,
    cross3d_classical,
    cross3d_detectors,
    det_classical,
    det_detector,
    det_quantum,
    volume,
)
from .poly import (
    MultilinearPoly,
    eval_direct,
    eval_via_inner,
    poly_to_state,
    product_state,
    state_to_poly,
)
from .reference_circuits import (
    QubitMapping,
    VerificationReport,
    audit_reference_circuits,
    format_reports,
    listing1_circuit,
    listing2_circuit,
    listing3_circuit,
    verify_preparation,
)
from .simulator import gate_unitary, run
from .states import (
    MAX_QUBITS,
    DensityMatrix,
    SparseState,
    Statevector,
    basis_label,
    equal_up_to_global_phase,
    inner_product,
    ket_from_label,
    normalize,
    reduced_density_matrix,
)
from .synthesis import synth_sparse_state

__version__ = "0.1.0"

__all__ = [
    "AreaMode",
    "CapacityError",
    "Circuit",
    "DegenerateStateError",
    "DensityMatrix",
    "DimensionError",
    "EntgeoError",
    "Gate",
    "GateKind",
    "LabelError",
    "MAX_QUBITS",
    "MappingError",
    "MultilinearPoly",
    "QasmDocument",
    "QubitMapping",
    "SparseState",
    "Statevector",
    "SynthesisError",
    "UnsupportedTargetError",
    "VerificationReport",
    "area2d",
    "area2d_detector",
    "audit_reference_circuits",
    "basis_label",
    "cross3d",
    "cross3d_classical",
    "cross3d_detectors",
    "decompose",
    "det_classical",
    "det_detector",
    "det_quantum",
    "equal_up_to_global_phase",
    "eval_direct",
    "eval_via_inner",
    "export_qasm",
    "format_reports",
    "gate_unitary",
    "inner_product",
    "ket_from_label",
    "listing1_circuit",
    "listing2_circuit",
    "listing3_circuit",
    "normalize",
    "poly_to_state",
    "product_state",
    "reduced_density_matrix",
    "run",
    "state_to_poly",
    "synth_sparse_state",
    "verify_preparation",
    "volume",
]
