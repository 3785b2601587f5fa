"""Toolkit for +1/-1 matrices: orthogonal numbers, Hadamard constructions,
exact Gram verification, exhaustive search at small orders and a census of
row-selection counts."""
from hadamard_kit._backend import BACKEND
from hadamard_kit.errors import (
    CapacityError,
    DimensionError,
    DomainError,
    HadamardKitError,
    HmatParseError,
    PreconditionError,
    ShapeError,
)
from hadamard_kit.matrix_core import (
    SignMatrix,
    SignVector,
    VerificationReport,
    gram,
    inner_product,
    is_balanced,
    normalize,
    overlap,
    verify_hadamard,
)

__version__ = "0.1.0"
