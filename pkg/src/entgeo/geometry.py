"""Areas, cross products and determinants evaluated through detector states.

Each quantity is the inner product between a fixed entangled "detector" state
and the product state encoding the input coordinates.  Every quantum path has
a classical twin here so the two can be compared term for term.
"""
from __future__ import annotations

import enum
import itertools
from typing import Sequence

import numpy as np

from .errors import CapacityError, DimensionError
from .poly import eval_via_inner
from .states import SparseState

DET_MAX_QUANTUM = 4

_LEIBNIZ_MAX = 5


class AreaMode(enum.Enum):
    """Which 2D area polynomial the detector encodes.

    The published formula pairs x1 with x3 and x2 with x4; the determinant of
    the column matrix pairs x1 with x4 and x2 with x3.  Both are available so
    either convention can be reproduced; the geometric API defaults to the
    determinant.
    """

    PAPER_LITERAL = "paper-literal"
    DETERMINANT = "determinant"


def _check_vector(name: str, v: Sequence[float], arity: int) -> list[float]:
    values = [float(c) for c in v]
    if len(values) != arity:
        raise DimensionError(f"{name} must have {arity} components, got {len(values)}")
    for c in values:
        if not np.isfinite(c):
            raise ValueError(f"{name} components must be finite, got {c}")
    return values


def _real_result(value: complex) -> float:
    if abs(value.imag) > 1e-12:
        raise ValueError(f"expected a real result, got imaginary part {value.imag}")
    return float(value.real)


def area2d_detector(mode: AreaMode = AreaMode.DETERMINANT) -> SparseState:
    """4-qubit two-term detector for the signed parallelogram area."""
    if mode is AreaMode.PAPER_LITERAL:
        return SparseState.from_terms(4, {0b0101: 1.0, 0b1010: -1.0})  # x1x3 - x2x4
    return SparseState.from_terms(4, {0b1001: 1.0, 0b0110: -1.0})  # x1x4 - x2x3


def area2d(v1: Sequence[float], v2: Sequence[float],
           mode: AreaMode = AreaMode.DETERMINANT) -> float:
    """Signed area spanned by two plane vectors, via the detector inner product."""
    a = _check_vector("v1", v1, 2)
    b = _check_vector("v2", v2, 2)
    detector = area2d_detector(mode)
    return _real_result(eval_via_inner(detector, (a[0], a[1], b[0], b[1])))


def cross3d_detectors() -> tuple[SparseState, SparseState, SparseState]:
    """6-qubit detectors for the three cross-product components.

    Variables 1..3 are the first vector, 4..6 the second; each component is a
    two-term difference of coordinate products.
    """
    a1 = SparseState.from_terms(6, {0b100010: 1.0, 0b010100: -1.0})  # x2x6 - x3x5
    a2 = SparseState.from_terms(6, {0b001100: 1.0, 0b100001: -1.0})  # x3x4 - x1x6
    a3 = SparseState.from_terms(6, {0b010001: 1.0, 0b001010: -1.0})  # x1x5 - x2x4
    return a1, a2, a3


def cross3d(v1: Sequence[float], v2: Sequence[float]) -> np.ndarray:
    a = _check_vector("v1", v1, 3)
    b = _check_vector("v2", v2, 3)
    assignment = tuple(a) + tuple(b)
    return np.array(
        [_real_result(eval_via_inner(d, assignment)) for d in cross3d_detectors()]
    )


def cross3d_classical(v1: Sequence[float], v2: Sequence[float]) -> np.ndarray:
    a = _check_vector("v1", v1, 3)
    b = _check_vector("v2", v2, 3)
    return np.array([
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ])


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def det_detector(n: int) -> SparseState:
    """n*n-qubit determinant detector: one signed term per permutation.

    Row r of the matrix occupies variables (r-1)*n+1 .. r*n; the term for a
    permutation s sets the bit of variable (r-1)*n + s(r) in every row, with
    coefficient sign(s).  n! terms over n*n qubits, capped at n = 4.
    """
    if not isinstance(n, int) or n < 1:
        raise DimensionError(f"matrix order must be a positive integer, got {n!r}")
    if n > DET_MAX_QUANTUM:
        raise CapacityError(
            f"the determinant detector is capped at order {DET_MAX_QUANTUM} "
            f"({DET_MAX_QUANTUM ** 2} qubits); got order {n}"
        )
    coeffs: dict[int, float] = {}
    for perm in itertools.permutations(range(n)):
        index = 0
        for row, col in enumerate(perm):
            index |= 1 << (row * n + col)
        coeffs[index] = float(_permutation_sign(perm))
    return SparseState.from_terms(n * n, coeffs)


def _check_square(matrix: Sequence[Sequence[float]]) -> np.ndarray:
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def det_quantum(matrix: Sequence[Sequence[float]]) -> float:
    """Determinant as a detector inner product; exact for small integer inputs."""
    m = _check_square(matrix)
    n = m.shape[0]
    detector = det_detector(n)
    return _real_result(eval_via_inner(detector, tuple(m.reshape(-1))))


def det_classical(matrix: Sequence[Sequence[float]]) -> float:
    """Reference determinant: Leibniz sum up to order 5, pivoted elimination above.

    The Leibniz branch is exact for integer entries; numpy's LU-based det
    (partial pivoting) takes over where the factorial sum gets expensive.
    """
    m = _check_square(matrix)
    n = m.shape[0]
    if n <= _LEIBNIZ_MAX:
        total = 0.0
        for perm in itertools.permutations(range(n)):
            term = float(_permutation_sign(perm))
            for row, col in enumerate(perm):
                term *= m[row, col]
            total += term
        return total
    return float(np.linalg.det(m))


def volume(v1: Sequence[float], v2: Sequence[float], v3: Sequence[float]) -> float:
    """Signed parallelepiped volume: the order-3 determinant of the three rows."""
    rows = [
        _check_vector("v1", v1, 3),
        _check_vector("v2", v2, 3),
        _check_vector("v3", v3, 3),
    ]
    return det_quantum(rows)
