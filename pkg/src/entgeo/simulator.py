"""Statevector simulation of circuits.

Single-qubit gates update amplitude pairs through a bit-stride reshape (the
middle axis of ``psi.reshape(-1, 2, 2**q)`` is exactly bit q); controlled
gates select their amplitude pairs with masked index tests.  No gate is ever
materialized as a full 2**n matrix during simulation.
"""
from __future__ import annotations

import math

import numpy as np

from .circuit import Circuit, Gate, GateKind
from .errors import CapacityError, DimensionError
from .states import Statevector

_SQRT_HALF = 1.0 / math.sqrt(2.0)

GATE_UNITARY_MAX_QUBITS = 10


def _apply_single(psi: np.ndarray, q: int, m00: complex, m01: complex,
                  m10: complex, m11: complex) -> None:
    view = psi.reshape(-1, 2, 1 << q)
    a0 = view[:, 0, :].copy()
    a1 = view[:, 1, :]
    view[:, 0, :] = m00 * a0 + m01 * a1
    view[:, 1, :] = m10 * a0 + m11 * a1


def _apply_x(psi: np.ndarray, q: int) -> None:
    view = psi.reshape(-1, 2, 1 << q)
    tmp = view[:, 0, :].copy()
    view[:, 0, :] = view[:, 1, :]
    view[:, 1, :] = tmp


def _apply_z(psi: np.ndarray, q: int) -> None:
    view = psi.reshape(-1, 2, 1 << q)
    view[:, 1, :] *= -1.0


def _controlled_pair_indices(dim: int, controls: tuple[int, ...], target: int) -> np.ndarray:
    """Indices with every control bit set and the target bit clear."""
    idx = np.arange(dim)
    cmask = 0
    for c in controls:
        cmask |= 1 << c
    probe = cmask | (1 << target)
    return idx[(idx & probe) == cmask]


def _apply_controlled_x(psi: np.ndarray, controls: tuple[int, ...], target: int) -> None:
    src = _controlled_pair_indices(psi.shape[0], controls, target)
    dst = src | (1 << target)
    tmp = psi[src].copy()
    psi[src] = psi[dst]
    psi[dst] = tmp


def _apply_controlled_ry(psi: np.ndarray, controls: tuple[int, ...], target: int,
                         angle: float) -> None:
    src = _controlled_pair_indices(psi.shape[0], controls, target)
    dst = src | (1 << target)
    c, s = math.cos(angle / 2.0), math.sin(angle / 2.0)
    a0 = psi[src].copy()
    a1 = psi[dst]
    psi[src] = c * a0 - s * a1
    psi[dst] = s * a0 + c * a1


def _apply_gate(psi: np.ndarray, gate: Gate) -> None:
    kind = gate.kind
    if kind is GateKind.BARRIER:
        return
    if kind is GateKind.H:
        for q in gate.targets:
            _apply_single(psi, q, _SQRT_HALF, _SQRT_HALF, _SQRT_HALF, -_SQRT_HALF)
    elif kind is GateKind.X:
        for q in gate.targets:
            _apply_x(psi, q)
    elif kind is GateKind.Z:
        for q in gate.targets:
            _apply_z(psi, q)
    elif kind is GateKind.RY:
        c, s = math.cos(gate.angle / 2.0), math.sin(gate.angle / 2.0)
        _apply_single(psi, gate.targets[0], c, -s, s, c)
    elif kind in (GateKind.CX, GateKind.CCX, GateKind.MCX):
        _apply_controlled_x(psi, gate.controls, gate.targets[0])
    elif kind is GateKind.MCRY:
        _apply_controlled_ry(psi, gate.controls, gate.targets[0], gate.angle)
    else:  # pragma: no cover - the enum is closed
        raise DimensionError(f"unknown gate kind {kind!r}")


def run(circuit: Circuit, initial: Statevector | None = None) -> Statevector:
    """Apply every gate in order to |0...0> or to a caller-supplied state.

    The caller's array is never mutated; all updates happen on a private
    working buffer of 2**n amplitudes.
    """
    n = circuit.num_qubits
    if initial is None:
        psi = np.zeros(1 << n, dtype=np.complex128)
        psi[0] = 1.0
    else:
        if initial.num_qubits != n:
            raise DimensionError(
                f"initial state has {initial.num_qubits} qubits, circuit has {n}"
            )
        psi = np.array(initial.amplitudes, dtype=np.complex128, copy=True)
    for gate in circuit.ops:
        _apply_gate(psi, gate)
    return Statevector(n, psi)


def _embed_single(matrix2: np.ndarray, target: int, num_qubits: int) -> np.ndarray:
    dim = 1 << num_qubits
    full = np.zeros((dim, dim), dtype=np.complex128)
    tbit = 1 << target
    for col in range(dim):
        b = (col >> target) & 1
        base = col & ~tbit
        full[base, col] += matrix2[0, b]
        full[base | tbit, col] += matrix2[1, b]
    return full


def gate_unitary(gate: Gate, num_qubits: int) -> np.ndarray:
    """Dense 2**n x 2**n matrix of one gate embedded in the full register.

    Built by explicit per-column index arithmetic, deliberately sharing no
    code with the simulation kernels, so the two can check each other.
    Capped at 10 qubits.
    """
    if num_qubits > GATE_UNITARY_MAX_QUBITS:
        raise CapacityError(
            f"gate_unitary is capped at {GATE_UNITARY_MAX_QUBITS} qubits, got {num_qubits}"
        )
    for q in gate.qubits():
        if q >= num_qubits:
            raise DimensionError(f"qubit {q} out of range for {num_qubits} qubits")
    dim = 1 << num_qubits
    kind = gate.kind

    if kind is GateKind.BARRIER:
        return np.eye(dim, dtype=np.complex128)
    if kind in (GateKind.X, GateKind.CX, GateKind.CCX, GateKind.MCX):
        if kind is GateKind.X:
            tmask = 0
            for q in gate.targets:
                tmask |= 1 << q
            cmask = 0
        else:
            tmask = 1 << gate.targets[0]
            cmask = 0
            for c in gate.controls:
                cmask |= 1 << c
        full = np.zeros((dim, dim), dtype=np.complex128)
        for col in range(dim):
            row = col ^ tmask if (col & cmask) == cmask else col
            full[row, col] = 1.0
        return full
    if kind is GateKind.Z:
        diag = np.ones(dim, dtype=np.complex128)
        for col in range(dim):
            bits = 0
            for q in gate.targets:
                bits += (col >> q) & 1
            if bits % 2:
                diag[col] = -1.0
        return np.diag(diag)
    if kind is GateKind.H:
        h2 = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) * _SQRT_HALF
        full = np.eye(dim, dtype=np.complex128)
        for q in gate.targets:
            full = _embed_single(h2, q, num_qubits) @ full
        return full
    c, s = math.cos(gate.angle / 2.0), math.sin(gate.angle / 2.0)
    ry2 = np.array([[c, -s], [s, c]], dtype=np.complex128)
    if kind is GateKind.RY:
        return _embed_single(ry2, gate.targets[0], num_qubits)
    if kind is GateKind.MCRY:
        cmask = 0
        for q in gate.controls:
            cmask |= 1 << q
        target = gate.targets[0]
        tbit = 1 << target
        full = np.zeros((dim, dim), dtype=np.complex128)
        for col in range(dim):
            if (col & cmask) == cmask:
                b = (col >> target) & 1
                base = col & ~tbit
                full[base, col] = ry2[0, b]
                full[base | tbit, col] = ry2[1, b]
            else:
                full[col, col] = 1.0
        return full
    raise DimensionError(f"unknown gate kind {kind!r}")  # pragma: no cover
