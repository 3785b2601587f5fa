"""Closed-form orthogonal numbers and classification of orders by n mod 4.

For two balanced rows of even length ``n`` sharing ``k`` positions of +1,
the inner product is ``4k - n``. When ``n = 2(2l + 1)`` this becomes
``4k - 4l - 2``, which is 2 mod 4 and never zero, so orders 2 mod 4 (other
than 2) admit no Hadamard matrix. Odd orders fail on parity.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from hadamard_kit.errors import DomainError, PreconditionError
from hadamard_kit.matrix_core import SignVector, inner_product, is_balanced, overlap


class OrderKind(enum.Enum):
    ODD = "Odd"
    TWICE_ODD = "TwiceOdd"
    DIVISIBLE_BY_FOUR = "DivisibleByFour"


class Verdict(enum.Enum):
    IMPOSSIBLE = "Impossible"
    POSSIBLE_CANDIDATE = "PossibleCandidate"
    EXISTS_TRIVIALLY = "ExistsTrivially"


# Reason codes for classify_order.
REASON_TRIVIAL_ONE = "trivial-order-1"
REASON_TRIVIAL_TWO = "trivial-order-2"
REASON_ODD = "odd-parity-obstruction"
REASON_TWICE_ODD = "two-mod-four-obstruction"
REASON_CANDIDATE = "multiple-of-four-candidate"


@dataclass(frozen=True)
class OrderClass:
    order: int
    kind: OrderKind
    verdict: Verdict
    reason: str

    def __str__(self):
        return f"{self.kind.value} / {self.verdict.value}"


@dataclass(frozen=True)
class BalancedHalfModel:
    """Two balanced rows of order ``n`` whose +1 sets share ``k`` positions."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise DomainError(f"order must be even and positive, got {self.n}")
        if not 0 <= self.k <= self.n // 2:
            raise DomainError(f"overlap k={self.k} outside [0, {self.n // 2}]")

    @property
    def half(self) -> int:
        """Odd half-length ``n1`` when n = 2 mod 4, otherwise ``n // 2``."""
        return self.n // 2

    @property
    def ell(self) -> Optional[int]:
        """``l`` with ``n // 2 = 2l + 1``; None unless n = 2 mod 4."""
        if self.n % 4 != 2:
            return None
        return (self.n // 2 - 1) // 2

    @property
    def orthogonal_number(self) -> int:
        return predicted_orthogonal_number(self.n, self.k)


def predicted_orthogonal_number(n: int, k: int) -> int:
    """Inner product ``4k - n`` of balanced rows with overlap ``k``."""
    if n < 2 or n % 2:
        raise DomainError(f"order must be even and positive, got {n}")
    if not 0 <= k <= n // 2:
        raise DomainError(f"overlap k={k} outside [0, {n // 2}]")
    return 4 * k - n


def twice_odd_orthogonal_number(ell: int, k: int) -> int:
    """Inner product ``4k - 4l - 2`` for order ``2(2l + 1)``; always 2 mod 4."""
    if ell < 0:
        raise DomainError(f"l must be non-negative, got {ell}")
    if not 0 <= k <= 2 * ell + 1:
        raise DomainError(f"overlap k={k} outside [0, {2 * ell + 1}]")
    return 4 * k - 4 * ell - 2


def classify_order(n: int) -> OrderClass:
    if n < 1:
        raise DomainError(f"order must be positive, got {n}")
    if n % 2:
        if n == 1:
            return OrderClass(n, OrderKind.ODD, Verdict.EXISTS_TRIVIALLY, REASON_TRIVIAL_ONE)
        return OrderClass(n, OrderKind.ODD, Verdict.IMPOSSIBLE, REASON_ODD)
    if n % 4 == 2:
        if n == 2:
            return OrderClass(n, OrderKind.TWICE_ODD, Verdict.EXISTS_TRIVIALLY, REASON_TRIVIAL_TWO)
        return OrderClass(n, OrderKind.TWICE_ODD, Verdict.IMPOSSIBLE, REASON_TWICE_ODD)
    return OrderClass(n, OrderKind.DIVISIBLE_BY_FOUR, Verdict.POSSIBLE_CANDIDATE, REASON_CANDIDATE)


@dataclass(frozen=True)
class OverlapCheck:
    g_actual: int
    k: int
    g_predicted: int
    agrees: bool


def check_overlap_formula(u: SignVector, v: SignVector) -> OverlapCheck:
    """Compare the measured inner product of two balanced rows with ``4k - n``.

    Raises PreconditionError naming the offending row if either input is
    unbalanced (which includes every odd length).
    """
    for name, row in (("first", u), ("second", v)):
        if not is_balanced(row):
            raise PreconditionError(
                f"{name} row is not balanced (length {row.length}, {row.plus_count} entries +1)"
            )
    g = inner_product(u, v)
    k = overlap(u, v)
    predicted = predicted_orthogonal_number(u.length, k)
    return OverlapCheck(g_actual=g, k=k, g_predicted=predicted, agrees=g == predicted)
