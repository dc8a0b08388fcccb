"""Dense and sparse n-qubit states and the operations the rest of the library builds on.

Conventions used everywhere:
  * qubit b corresponds to bit b of the basis-state index (least significant bit
    is qubit 0), so the integer value of a ket label read as binary is its index;
  * the leftmost character of a ket label is the highest qubit.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, DegenerateStateError, DimensionError, LabelError

MAX_QUBITS = 26

ATOL_AMPLITUDE = 1e-10
ATOL_NORM = 1e-12


def _check_num_qubits(num_qubits: int, *, dense: bool) -> None:
    if not isinstance(num_qubits, int) or num_qubits < 1:
        raise DimensionError(f"num_qubits must be a positive integer, got {num_qubits!r}")
    if dense and num_qubits > MAX_QUBITS:
        raise CapacityError(
            f"{num_qubits} qubits exceeds the dense-state capacity of {MAX_QUBITS} "
            f"(2**{num_qubits} amplitudes * 16 bytes)"
        )


@dataclass(frozen=True)
class Statevector:
    """Dense state: 2**num_qubits complex amplitudes indexed by basis state."""

    num_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        _check_num_qubits(self.num_qubits, dense=True)
        amps = np.asarray(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 1 << self.num_qubits:
            raise DimensionError(
                f"expected {1 << self.num_qubits} amplitudes for {self.num_qubits} "
                f"qubits, got {amps.shape[0]}"
            )
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.num_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @property
    def is_normalized(self) -> bool:
        return abs(self.norm() ** 2 - 1.0) <= ATOL_NORM


@dataclass(frozen=True)
class SparseState:
    """Unnormalized superposition stored as sorted (basis index, coefficient) terms.

    Terms must have distinct in-range indices and nonzero coefficients; use
    :meth:`from_terms` to build one from a mapping with automatic zero dropping.
    """

    num_qubits: int
    terms: tuple[tuple[int, complex], ...]

    def __post_init__(self) -> None:
        _check_num_qubits(self.num_qubits, dense=False)
        seen: set[int] = set()
        cleaned = []
        for index, coeff in self.terms:
            if not isinstance(index, (int, np.integer)):
                raise DimensionError(f"basis index must be an integer, got {index!r}")
            index = int(index)
            if index < 0 or index >= 1 << self.num_qubits:
                raise DimensionError(
                    f"basis index {index} out of range for {self.num_qubits} qubits"
                )
            if index in seen:
                raise DimensionError(f"duplicate basis index {index}")
            if coeff == 0:
                raise DegenerateStateError(f"zero coefficient at basis index {index}")
            seen.add(index)
            cleaned.append((index, complex(coeff)))
        cleaned.sort(key=lambda t: t[0])
        object.__setattr__(self, "terms", tuple(cleaned))

    @classmethod
    def from_terms(cls, num_qubits: int, coeffs: dict[int, complex]) -> SparseState:
        """Build from a mapping, silently dropping exactly-zero coefficients."""
        kept = tuple((i, complex(c)) for i, c in coeffs.items() if c != 0)
        if not kept:
            raise DegenerateStateError("state has no nonzero coefficients")
        return cls(num_qubits, kept)

    def to_dict(self) -> dict[int, complex]:
        return dict(self.terms)

    def to_statevector(self) -> Statevector:
        _check_num_qubits(self.num_qubits, dense=True)
        amps = np.zeros(1 << self.num_qubits, dtype=np.complex128)
        for index, coeff in self.terms:
            amps[index] = coeff
        return Statevector(self.num_qubits, amps)

    def norm(self) -> float:
        return float(np.sqrt(sum(abs(c) ** 2 for _, c in self.terms)))


@dataclass(frozen=True)
class DensityMatrix:
    """Reduced density matrix over an ordered subset of kept qubits."""

    num_qubits: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        _check_num_qubits(self.num_qubits, dense=True)
        mat = np.asarray(self.entries, dtype=np.complex128)
        dim = 1 << self.num_qubits
        if mat.shape != (dim, dim):
            raise DimensionError(f"expected a {dim}x{dim} matrix, got shape {mat.shape}")
        object.__setattr__(self, "entries", mat)


State = Statevector | SparseState


def ket_from_label(label: str) -> SparseState:
    """Single computational basis state from a bitstring label such as "0101".

    The label read as a binary number is the basis index; its length sets the
    qubit count.
    """
    if not isinstance(label, str) or not label:
        raise LabelError(f"ket label must be a non-empty bitstring, got {label!r}")
    if any(ch not in "01" for ch in label):
        raise LabelError(f"ket label may contain only 0 and 1, got {label!r}")
    return SparseState(len(label), ((int(label, 2), 1.0 + 0.0j),))


def basis_label(index: int, num_qubits: int) -> str:
    """Bitstring label of a basis index, highest qubit leftmost."""
    if index < 0 or index >= 1 << num_qubits:
        raise DimensionError(f"basis index {index} out of range for {num_qubits} qubits")
    return format(index, f"0{num_qubits}b")


def _require_same_width(a: State, b: State) -> None:
    if a.num_qubits != b.num_qubits:
        raise DimensionError(
            f"qubit counts differ: {a.num_qubits} vs {b.num_qubits}"
        )


def inner_product(bra: State, ket: State) -> complex:
    """<bra|ket>, conjugate-linear in the bra argument.

    Sparse arguments are contracted without densifying, so detector states on
    wide registers stay cheap.
    """
    _require_same_width(bra, ket)
    if isinstance(bra, SparseState) and isinstance(ket, SparseState):
        kd = ket.to_dict()
        return complex(sum(coeff.conjugate() * kd.get(i, 0.0) for i, coeff in bra.terms))
    if isinstance(bra, SparseState):
        amps = ket.amplitudes
        return complex(sum(coeff.conjugate() * amps[i] for i, coeff in bra.terms))
    if isinstance(ket, SparseState):
        amps = bra.amplitudes
        return complex(sum(amps[i].conjugate() * coeff for i, coeff in ket.terms))
    return complex(np.vdot(bra.amplitudes, ket.amplitudes))


def normalize(state: State) -> tuple[State, float]:
    """Return (unit-norm state of the same kind, original norm)."""
    scale = state.norm()
    if scale <= 0.0 or not np.isfinite(scale):
        raise DegenerateStateError("cannot normalize a zero or non-finite state")
    if isinstance(state, SparseState):
        scaled = tuple((i, c / scale) for i, c in state.terms)
        return SparseState(state.num_qubits, scaled), scale
    return Statevector(state.num_qubits, state.amplitudes / scale), scale


def _as_dense_array(state: State) -> np.ndarray:
    if isinstance(state, SparseState):
        return state.to_statevector().amplitudes
    return state.amplitudes


def equal_up_to_global_phase(
    a: State, b: State, tol: float = ATOL_AMPLITUDE
) -> tuple[bool, complex | None]:
    """Whether two normalized states coincide up to a global unit phase.

    On success the second element is the phase chosen from the
    largest-magnitude amplitude pair, i.e. a ~= phase * b.
    """
    _require_same_width(a, b)
    for state, name in ((a, "first"), (b, "second")):
        if abs(state.norm() - 1.0) > 1e-9:
            raise ValueError(f"{name} argument must be normalized, norm = {state.norm()}")
    va = _as_dense_array(a)
    vb = _as_dense_array(b)
    weight = np.abs(va) * np.abs(vb)
    k = int(np.argmax(weight))
    if weight[k] <= tol:
        return False, None
    phase = va[k] / vb[k]
    phase /= abs(phase)
    if np.max(np.abs(va - phase * vb)) <= tol:
        return True, complex(phase)
    return False, None


def reduced_density_matrix(state: Statevector, keep: list[int] | tuple[int, ...]) -> DensityMatrix:
    """Partial trace of a pure state down to the qubits in ``keep``.

    Bit j of the reduced index corresponds to keep[j], so the kept qubits are
    relabelled in the order given.
    """
    if not isinstance(state, Statevector):
        raise DimensionError("reduced_density_matrix expects a dense Statevector")
    keep = list(keep)
    n = state.num_qubits
    if not keep:
        raise DimensionError("keep must name at least one qubit")
    if len(set(keep)) != len(keep):
        raise DimensionError(f"keep has repeated qubits: {keep}")
    for q in keep:
        if not isinstance(q, int) or q < 0 or q >= n:
            raise DimensionError(f"qubit {q!r} out of range for {n} qubits")

    # Tensor axis i of the reshaped state corresponds to qubit n-1-i.
    tensor = state.amplitudes.reshape([2] * n)
    kept_axes = [n - 1 - q for q in reversed(keep)]
    traced_axes = [ax for ax in range(n) if ax not in kept_axes]
    mat = tensor.transpose(kept_axes + traced_axes).reshape(1 << len(keep), -1)
    rho = mat @ mat.conj().T
    return DensityMatrix(len(keep), rho)
