"""Exact arithmetic for Verma modules over generalized Heisenberg-Virasoro algebras."""

from __future__ import annotations

__version__ = "0.1.0"

from .algebra import (
    C,
    CI,
    CLI,
    AlgebraElement,
    Generator,
    HighestWeight,
    I,
    L,
    bracket,
    theta,
    theta_inverse,
    transport_highest_weight,
)
from .decide import ClaimedReducibleNoWitness, Irreducible, Reducible, UnknownUpToLevel, decide
from .engine import (
    ReductionTrace,
    max_monomial,
    reduce_dense,
    reduce_dense_case1,
    reduce_dense_case2,
    reduce_discrete,
    strip_L_part,
)
from .errors import (
    ContextError,
    FieldMismatchError,
    HVError,
    ParseError,
    PreconditionError,
    ProofViolationError,
    SearchExhaustedError,
    StripExhaustedError,
)
from .groups import INT, ZSQRT2_LEX, ZSQRT2_REAL, GroupElement, OrderedGroup, preset
from .linalg import exact_kernel
from .scalars import FieldScalar, format_scalar, parse_scalar
from .singular import is_singular, singular_search
from .textio import format_vector, parse_algebra_element, parse_vector
from .verma import VH, Monomial, ModuleVector, VermaModule, integer_partitions

__all__ = [name for name in dir() if not name.startswith("_")]
