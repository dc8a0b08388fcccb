"""Multilinear polynomials encoded as n-qubit states.

A polynomial in variables x_1..x_m with one coefficient per monomial maps to
an m-qubit state: the monomial containing exactly the variables {x_i : i in S}
lands on the basis index whose bit i-1 is set for each i in S.  Evaluating the
polynomial is then an inner product against the product state
(|0> + x_1|1>) tensor ... tensor (|0> + x_m|1>).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import CapacityError, DegenerateStateError, DimensionError
from .states import MAX_QUBITS, SparseState, Statevector, inner_product


@dataclass(frozen=True)
class MultilinearPoly:
    """Coefficients keyed by monomial subset index (bit i-1 set <=> x_i present).

    Index 0 is the constant term.  The zero polynomial is the empty mapping.
    """

    num_vars: int
    coeffs: dict[int, complex] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.num_vars, int) or self.num_vars < 1:
            raise DimensionError(f"num_vars must be a positive integer, got {self.num_vars!r}")
        cleaned: dict[int, complex] = {}
        for key, value in self.coeffs.items():
            key = int(key)
            if key < 0 or key >= 1 << self.num_vars:
                raise DimensionError(
                    f"monomial index {key} out of range for {self.num_vars} variables"
                )
            value = complex(value)
            if value != 0:
                cleaned[key] = value
        object.__setattr__(self, "coeffs", cleaned)

    def monomials(self) -> list[tuple[int, complex]]:
        return sorted(self.coeffs.items())


def poly_to_state(poly: MultilinearPoly) -> SparseState:
    """Coefficient state of a polynomial; the zero polynomial has no state."""
    if not poly.coeffs:
        raise DegenerateStateError("the zero polynomial does not define a state")
    return SparseState.from_terms(poly.num_vars, poly.coeffs)


def state_to_poly(state: SparseState) -> MultilinearPoly:
    return MultilinearPoly(state.num_qubits, state.to_dict())


def _check_assignment(num_vars: int, values: Sequence[complex]) -> list[complex]:
    values = [complex(v) for v in values]
    if len(values) != num_vars:
        raise DimensionError(f"expected {num_vars} variable values, got {len(values)}")
    for v in values:
        if not (np.isfinite(v.real) and np.isfinite(v.imag)):
            raise ValueError(f"variable values must be finite, got {v}")
    return values


def product_state(values: Sequence[complex]) -> Statevector:
    """Dense tensor product (|0> + x_1|1>) ... (|0> + x_m|1>).

    The amplitude at basis index S is the product of x_i over the set bits of
    S, which is exactly the monomial value the coefficient at S multiplies.
    """
    values = [complex(v) for v in values]
    m = len(values)
    if m < 1:
        raise DimensionError("product_state needs at least one variable value")
    if m > MAX_QUBITS:
        raise CapacityError(f"{m} variables exceeds the dense capacity of {MAX_QUBITS}")
    amps = np.ones(1, dtype=np.complex128)
    for x in values:
        amps = np.concatenate([amps, x * amps])
    return Statevector(m, amps)


def eval_direct(poly: MultilinearPoly, values: Sequence[complex]) -> complex:
    """Sum the monomials term by term; the classical reference path."""
    values = _check_assignment(poly.num_vars, values)
    total = 0.0 + 0.0j
    for index, coeff in poly.coeffs.items():
        term = coeff
        i = 0
        while index:
            if index & 1:
                term *= values[i]
            index >>= 1
            i += 1
        total += term
    return total


def eval_via_inner(p_state: SparseState, values: Sequence[complex]) -> complex:
    """Evaluate the encoded polynomial as <p_state|product_state(values)>.

    The detector coefficients enter conjugated (bra semantics); for the real
    detectors used by the geometry layer that changes nothing.
    """
    _check_assignment(p_state.num_qubits, values)
    return inner_product(p_state, product_state(values))
