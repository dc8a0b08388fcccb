"""Gate-list circuit representation and OpenQASM 2.0 export.

The gate vocabulary is deliberately small: H, X, Z, CX, CCX, RY plus
multi-controlled X/RY and barriers.  Multi-controlled gates are simulated
natively and only decomposed (to ccx/cx/ry) when exporting, favouring an
obviously-correct recursive construction over gate-count optimality.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import CapacityError, DimensionError
from .states import MAX_QUBITS


class GateKind(enum.Enum):
    H = "h"
    X = "x"
    Z = "z"
    CX = "cx"
    CCX = "ccx"
    RY = "ry"
    MCX = "mcx"
    MCRY = "mcry"
    BARRIER = "barrier"


_SINGLE_QUBIT = (GateKind.H, GateKind.X, GateKind.Z)
_ROTATIONS = (GateKind.RY, GateKind.MCRY)


@dataclass(frozen=True)
class Gate:
    """One operation: a kind, target qubits, optional controls and angle.

    H/X/Z may carry several targets (the same single-qubit action applied to
    each); CX/CCX/MCX/RY/MCRY have exactly one target.  BARRIER is a no-op
    that survives into the exported text.
    """

    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    angle: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(int(q) for q in self.targets))
        object.__setattr__(self, "controls", tuple(int(q) for q in self.controls))
        touched = self.targets + self.controls
        if not self.targets:
            raise DimensionError(f"{self.kind.value} gate needs at least one target")
        if any(q < 0 for q in touched):
            raise DimensionError(f"negative qubit index in {touched}")
        if len(set(touched)) != len(touched):
            raise DimensionError(f"qubit indices must be distinct within a gate, got {touched}")
        kind = self.kind
        if kind in _SINGLE_QUBIT or kind is GateKind.BARRIER:
            if self.controls:
                raise DimensionError(f"{kind.value} takes no controls")
        elif kind is GateKind.CX:
            if len(self.controls) != 1 or len(self.targets) != 1:
                raise DimensionError("cx takes one control and one target")
        elif kind is GateKind.CCX:
            if len(self.controls) != 2 or len(self.targets) != 1:
                raise DimensionError("ccx takes two controls and one target")
        elif kind in (GateKind.MCX, GateKind.MCRY):
            if len(self.targets) != 1:
                raise DimensionError(f"{kind.value} takes exactly one target")
        elif kind is GateKind.RY:
            if self.controls or len(self.targets) != 1:
                raise DimensionError("ry takes one target and no controls")
        if kind in _ROTATIONS:
            if self.angle is None or not math.isfinite(self.angle):
                raise DimensionError(f"{kind.value} needs a finite angle")
        elif self.angle is not None:
            raise DimensionError(f"{kind.value} takes no angle")

    def qubits(self) -> tuple[int, ...]:
        return self.controls + self.targets


class Circuit:
    """Ordered gate list over a fixed-width register."""

    def __init__(self, num_qubits: int):
        if not isinstance(num_qubits, int) or num_qubits < 1:
            raise DimensionError(f"num_qubits must be a positive integer, got {num_qubits!r}")
        if num_qubits > MAX_QUBITS:
            raise CapacityError(
                f"{num_qubits} qubits exceeds the simulable capacity of {MAX_QUBITS}"
            )
        self.num_qubits = num_qubits
        self.ops: list[Gate] = []

    def append(self, gate: Gate) -> None:
        for q in gate.qubits():
            if q >= self.num_qubits:
                raise DimensionError(
                    f"qubit {q} out of range for a {self.num_qubits}-qubit circuit"
                )
        self.ops.append(gate)

    # Builder helpers; controlled gates take controls first, target last.

    def h(self, *targets: int) -> None:
        self.append(Gate(GateKind.H, targets))

    def x(self, *targets: int) -> None:
        self.append(Gate(GateKind.X, targets))

    def z(self, *targets: int) -> None:
        self.append(Gate(GateKind.Z, targets))

    def cx(self, control: int, target: int) -> None:
        self.append(Gate(GateKind.CX, (target,), (control,)))

    def ccx(self, control1: int, control2: int, target: int) -> None:
        self.append(Gate(GateKind.CCX, (target,), (control1, control2)))

    def ry(self, angle: float, target: int) -> None:
        self.append(Gate(GateKind.RY, (target,), angle=angle))

    def mcx(self, controls: tuple[int, ...] | list[int], target: int) -> None:
        self.append(Gate(GateKind.MCX, (target,), tuple(controls)))

    def mcry(self, controls: tuple[int, ...] | list[int], target: int, angle: float) -> None:
        self.append(Gate(GateKind.MCRY, (target,), tuple(controls), angle))

    def barrier(self, *targets: int) -> None:
        if not targets:
            targets = tuple(range(self.num_qubits))
        self.append(Gate(GateKind.BARRIER, targets))

    def num_ops(self, include_barriers: bool = False) -> int:
        if include_barriers:
            return len(self.ops)
        return sum(1 for g in self.ops if g.kind is not GateKind.BARRIER)

    def inverse(self) -> Circuit:
        """Reversed gate order with each rotation angle negated.

        Every non-rotation gate in the vocabulary is self-inverse.
        """
        inv = Circuit(self.num_qubits)
        for gate in reversed(self.ops):
            if gate.kind in _ROTATIONS:
                inv.append(Gate(gate.kind, gate.targets, gate.controls, -gate.angle))
            else:
                inv.append(gate)
        return inv


def _gray(i: int) -> int:
    return i ^ (i >> 1)


def _multiplexed_ry(controls: tuple[int, ...], target: int, angle: float) -> list[Gate]:
    """Exact RY applied iff all controls are 1, using only ry and cx.

    Standard Gray-code multiplexed-rotation construction with the angle vector
    concentrated on the all-ones control pattern; 2**k rotations and 2**k
    CNOTs for k controls.
    """
    k = len(controls)
    if k == 0:
        return [Gate(GateKind.RY, (target,), angle=angle)]
    ops: list[Gate] = []
    steps = 1 << k
    for i in range(steps):
        theta = angle / steps * (-1) ** (bin(_gray(i)).count("1") % 2)
        ops.append(Gate(GateKind.RY, (target,), angle=theta))
        changed = _gray(i) ^ _gray((i + 1) % steps)
        ops.append(Gate(GateKind.CX, (target,), (controls[changed.bit_length() - 1],)))
    return ops


def _mcx_ops(controls: tuple[int, ...], target: int, spares: tuple[int, ...]) -> list[Gate]:
    """Recursive multi-controlled X over ccx/cx/x, borrowing dirty spare wires.

    Splitting the controls in half and toggling through a borrowed wire twice
    cancels whatever state that wire carries, so any unused circuit qubit
    works as the ancilla.
    """
    k = len(controls)
    if k == 0:
        return [Gate(GateKind.X, (target,))]
    if k == 1:
        return [Gate(GateKind.CX, (target,), controls)]
    if k == 2:
        return [Gate(GateKind.CCX, (target,), controls)]
    if not spares:
        raise CapacityError(
            f"cannot decompose an X with {k} controls without a spare wire: "
            f"the register has no unused qubit to borrow"
        )
    borrow = spares[0]
    half = (k + 1) // 2
    upper, lower = controls[:half], controls[half:]
    first = _mcx_ops(upper, borrow, lower + (target,) + spares[1:])
    second = _mcx_ops(lower + (borrow,), target, upper + spares[1:])
    return second + first + second + first


def decompose(circuit: Circuit) -> Circuit:
    """Rewrite to the exported vocabulary: h/x/z/cx/ccx/ry/barrier, one target each."""
    out = Circuit(circuit.num_qubits)
    everything = set(range(circuit.num_qubits))
    for gate in circuit.ops:
        if gate.kind in _SINGLE_QUBIT and len(gate.targets) > 1:
            for q in gate.targets:
                out.append(Gate(gate.kind, (q,)))
        elif gate.kind is GateKind.MCX:
            spares = tuple(sorted(everything - set(gate.qubits())))
            for op in _mcx_ops(gate.controls, gate.targets[0], spares):
                out.append(op)
        elif gate.kind is GateKind.MCRY:
            for op in _multiplexed_ry(gate.controls, gate.targets[0], gate.angle):
                out.append(op)
        else:
            out.append(gate)
    return out


@dataclass(frozen=True)
class QasmDocument:
    """Exported OpenQASM 2.0 text."""

    text: str

    def __post_init__(self) -> None:
        if not self.text.startswith("OPENQASM 2.0;"):
            raise ValueError("QASM document must start with the version header")


def _format_angle(angle: float) -> str:
    return f"{angle:.12g}"


def export_qasm(circuit: Circuit) -> QasmDocument:
    """Serialize to OpenQASM 2.0.

    Emission is byte-deterministic: fixed header, one statement per line,
    angles at 12 significant digits.  Multi-controlled gates are decomposed
    first; barriers are kept.  No classical registers or measurements are
    written, since verification reads amplitudes directly.
    """
    lines = [
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        f"qreg q[{circuit.num_qubits}];",
    ]
    for gate in decompose(circuit).ops:
        kind = gate.kind
        if kind is GateKind.BARRIER:
            operands = ",".join(f"q[{q}]" for q in gate.targets)
            lines.append(f"barrier {operands};")
        elif kind in _SINGLE_QUBIT:
            for q in gate.targets:
                lines.append(f"{kind.value} q[{q}];")
        elif kind is GateKind.RY:
            lines.append(f"ry({_format_angle(gate.angle)}) q[{gate.targets[0]}];")
        elif kind is GateKind.CX:
            lines.append(f"cx q[{gate.controls[0]}],q[{gate.targets[0]}];")
        elif kind is GateKind.CCX:
            c1, c2 = gate.controls
            lines.append(f"ccx q[{c1}],q[{c2}],q[{gate.targets[0]}];")
        else:  # pragma: no cover - decompose() leaves no other kinds
            raise DimensionError(f"cannot export gate kind {kind.value}")
    return QasmDocument("\n".join(lines) + "\n")
