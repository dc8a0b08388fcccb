"""Exception types shared across the library.

Most subclasses also inherit ValueError so callers that only care about
"bad input" can catch that; the distinct classes exist because the CLI
and HTTP layers map them to different exit codes / status codes.
"""
from __future__ import annotations


class EntgeoError(Exception):
    """Base class for all library-specific errors."""


class LabelError(EntgeoError, ValueError):
    """A ket label is empty or contains characters other than 0/1."""


class DimensionError(EntgeoError, ValueError):
    """Mismatched sizes: qubit counts, vector arity, non-square matrix."""


class CapacityError(EntgeoError):
    """A dense operation would exceed the supported register size."""


class DegenerateStateError(EntgeoError, ValueError):
    """An operation that needs a nonzero state received the zero state."""


class MappingError(EntgeoError, ValueError):
    """A variable-to-qubit mapping is incomplete, colliding, or out of range."""


class UnsupportedTargetError(EntgeoError, ValueError):
    """A synthesis target lies outside the representable (real) domain."""


class SynthesisError(EntgeoError, RuntimeError):
    """Internal failure: a synthesized circuit did not verify against its target."""
