"""Row-selection counts for order 4k, as printed and as counted.

The printed row-count formula is ``(4k-1)! - (2k-1)! - (2k)! + 2``. The true
number of distinct length-(4k-1) rows with 2k-1 entries +1 is the binomial
``C(4k-1, 2k-1)``. Both are reported; nothing is silently corrected. All
arithmetic uses Python's exact integers.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb, factorial

import numpy as np

from hadamard_kit._backend import kernels
from hadamard_kit.errors import CapacityError, DomainError

MAX_FORMULA_K = 8
MAX_SELECTION_K = 4
MAX_ENUMERATION_K = 4
MAX_HISTOGRAM_ORDER = 12

#: Worked values stated alongside the formula, keyed by k.
PRINTED_P = {1: 5, 2: 5032}


def _check_k(k: int, limit: int, what: str):
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if k > limit:
        raise CapacityError(f"{what} supports 1 <= k <= {limit}, got {k}")


def formula_row_count(k: int) -> int:
    """``(4k-1)! - (2k-1)! - (2k)! + 2``, evaluated exactly as printed."""
    _check_k(k, MAX_FORMULA_K, "formula_row_count")
    return factorial(4 * k - 1) - factorial(2 * k - 1) - factorial(2 * k) + 2


def selection_count(k: int) -> int:
    """Ways to choose the 4k - 2 remaining rows from the formula's row pool."""
    _check_k(k, MAX_SELECTION_K, "selection_count")
    return comb(formula_row_count(k), 4 * k - 2)


def oracle_row_count(k: int) -> int:
    """Distinct rows of length 4k - 1 with exactly 2k - 1 entries +1.

    For k <= 4 all 2**(4k-1) sign rows are enumerated and the tally is checked
    against the binomial; larger k use the binomial alone.
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    length, plus = 4 * k - 1, 2 * k - 1
    expected = comb(length, plus)
    if k > MAX_ENUMERATION_K:
        return expected
    counted = sum(1 for x in range(1 << length) if x.bit_count() == plus)
    if counted != expected:
        raise RuntimeError(f"enumeration gave {counted}, binomial gives {expected}")
    return counted


def orthogonal_pair_histogram(n: int) -> dict[int, int]:
    """Tally inner products over all ordered pairs of balanced length-n rows.

    Includes pairs (u, u). Keys are the attained inner products, ascending.
    """
    if n < 2 or n % 2:
        raise DomainError(f"histogram needs an even positive order, got {n}")
    if n > MAX_HISTOGRAM_ORDER:
        raise CapacityError(f"histogram supports n <= {MAX_HISTOGRAM_ORDER}, got {n}")
    top = n - 1
    values = np.asarray(
        [sum(1 << (top - i) for i in c) for c in itertools.combinations(range(n), n // 2)],
        dtype=np.uint64,
    )
    by_distance = kernels.pair_histogram(values, n)
    tally = Counter()
    for d, count in enumerate(by_distance.tolist()):
        if count:
            tally[n - 2 * d] += count
    return dict(sorted(tally.items()))


@dataclass(frozen=True)
class CensusReport:
    k: int
    formula_p: int
    oracle_row_count: int
    selection_count: int | None
    notes: tuple[str, ...] = field(default_factory=tuple)

    def lines(self) -> list[str]:
        sel = "n/a (k > %d)" % MAX_SELECTION_K if self.selection_count is None else str(self.selection_count)
        out = [
            f"k = {self.k} (order {4 * self.k})",
            f"formula p = (4k-1)! - (2k-1)! - (2k)! + 2 = {self.formula_p}",
            f"distinct rows C({4 * self.k - 1}, {2 * self.k - 1}) = {self.oracle_row_count}",
            f"selection count C(p, {4 * self.k - 2}) = {sel}",
        ]
        out += [f"note: {note}" for note in self.notes]
        return out


def census(k: int) -> CensusReport:
    p = formula_row_count(k)
    rows = oracle_row_count(k)
    sel = selection_count(k) if k <= MAX_SELECTION_K else None
    notes = []
    printed = PRINTED_P.get(k)
    if printed is not None and printed != p:
        notes.append(f"printed worked value p = {printed} differs from the formula value {p}")
    if p != rows:
        notes.append(
            f"formula subtracts factorials where a multinomial count divides: "
            f"formula gives {p}, distinct rows number {rows}"
        )
    return CensusReport(k, p, rows, sel, tuple(notes))
