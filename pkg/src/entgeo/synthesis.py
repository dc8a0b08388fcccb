"""Exact preparation circuits for sparse real-amplitude states.

The algorithm disentangles the target two terms at a time: CNOT conjugation
routes one support state next to another (differing in a single bit), a fully
controlled RY merges the pair into one amplitude, and once a single term is
left, X gates park it on |0...0>.  Inverting that sequence yields the
preparation circuit.  Every rotation is real, so the construction is exact up
to floating-point rounding for any target whose coefficients share one global
phase; genuinely complex targets are rejected because the available gate set
(X/CX/MCX/RY/MCRY/Z) maps real vectors to real vectors.
"""
from __future__ import annotations

import math

from .circuit import Circuit, Gate, GateKind
from .errors import CapacityError, DegenerateStateError, UnsupportedTargetError
from .states import MAX_QUBITS, SparseState

_IMAG_TOL = 1e-12


def _real_coefficients(target: SparseState) -> dict[int, float]:
    """Divide out the shared phase and return real coefficients, or reject."""
    anchor = max(target.terms, key=lambda t: abs(t[1]))[1]
    phase = anchor / abs(anchor)
    scale = max(abs(c) for _, c in target.terms)
    coeffs: dict[int, float] = {}
    for index, coeff in target.terms:
        rotated = coeff / phase
        if abs(rotated.imag) > _IMAG_TOL * scale:
            raise UnsupportedTargetError(
                "target coefficients do not share a global phase; the RY-based "
                "gate set can only prepare states that are real up to one phase"
            )
        coeffs[index] = rotated.real
    return coeffs


def _apply_x_track(coeffs: dict[int, float], qubit: int) -> dict[int, float]:
    mask = 1 << qubit
    return {index ^ mask: value for index, value in coeffs.items()}


def _apply_cx_track(coeffs: dict[int, float], control: int, target: int) -> dict[int, float]:
    cbit, tbit = 1 << control, 1 << target
    return {
        (index ^ tbit if index & cbit else index): value
        for index, value in coeffs.items()
    }


def synth_sparse_state(target: SparseState) -> Circuit:
    """Circuit over the IR gate set mapping |0...0> to the normalized target.

    The output state matches the target up to global phase with fidelity
    limited only by floating-point rounding; gate count is O(k*n) controlled
    operations for k support terms on n qubits.
    """
    n = target.num_qubits
    if n > MAX_QUBITS:
        raise CapacityError(f"synthesis is capped at {MAX_QUBITS} qubits, got {n}")
    if not target.terms:
        raise DegenerateStateError("cannot synthesize the zero state")
    coeffs = _real_coefficients(target)

    # Gates that map the target onto |0...0>, recorded in application order.
    unwind: list[Gate] = []

    def emit_x(qubit: int) -> None:
        nonlocal coeffs
        unwind.append(Gate(GateKind.X, (qubit,)))
        coeffs = _apply_x_track(coeffs, qubit)

    def emit_cx(control: int, targ: int) -> None:
        nonlocal coeffs
        unwind.append(Gate(GateKind.CX, (targ,), (control,)))
        coeffs = _apply_cx_track(coeffs, control, targ)

    while len(coeffs) > 1:
        support = sorted(coeffs)
        keep, merge = support[0], support[-1]
        diff = keep ^ merge
        # The pivot is the highest differing bit: set in `merge`, clear in `keep`.
        pivot = diff.bit_length() - 1
        for bit in range(diff.bit_length() - 1):
            if diff & (1 << bit):
                emit_cx(pivot, bit)
        merged_index = keep | (1 << pivot)
        # Make every non-pivot qubit of `keep` read 1 so a fully controlled
        # rotation touches exactly this pair of basis states.
        flipped = [q for q in range(n) if q != pivot and not keep & (1 << q)]
        for q in flipped:
            emit_x(q)
        src = ((1 << n) - 1) ^ (1 << pivot)
        dst = (1 << n) - 1
        amp0 = coeffs[src]
        amp1 = coeffs[dst]
        theta = -2.0 * math.atan2(amp1, amp0)
        controls = tuple(q for q in range(n) if q != pivot)
        unwind.append(Gate(GateKind.MCRY, (pivot,), controls, theta))
        del coeffs[dst]
        coeffs[src] = math.hypot(amp0, amp1)
        for q in flipped:
            emit_x(q)

    (last_index,) = coeffs
    for q in range(n):
        if last_index & (1 << q):
            emit_x(q)

    prep = Circuit(n)
    for gate in reversed(unwind):
        if gate.kind is GateKind.MCRY:
            prep.append(Gate(gate.kind, gate.targets, gate.controls, -gate.angle))
        else:
            prep.append(gate)
    return prep
