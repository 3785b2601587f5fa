"""Backtracking search over normalized candidate rows.

Row 0 is fixed to all +1. Every other row of a normalized Hadamard matrix
(and, after column and row negations, of any matrix with pairwise orthogonal
rows) is balanced with a leading +1, so the search picks rows from
:func:`enumerate_balanced_rows` in lexicographic order (+ before -), keeping
only those orthogonal to every row already chosen. Chosen rows have
strictly increasing candidate index; this does not change which completion
is lexicographically first.
"""
from __future__ import annotations

import enum
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from hadamard_kit._backend import kernels
from hadamard_kit.errors import CapacityError, DomainError
from hadamard_kit.matrix_core import SignMatrix, SignVector, verify_hadamard

#: Largest order whose balanced rows are enumerated (one 64-bit word, bounded memory).
MAX_ENUM_ORDER = 28
#: Largest order accepted by :func:`exhaustive_nonexistence`.
MAX_EXHAUSTIVE_ORDER = 14


class Mode(enum.Enum):
    FIRST_SOLUTION = "first"
    EXHAUSTIVE_NONEXISTENCE = "exhaustive"
    PARTIAL_RANK = "partial"


class Status(enum.Enum):
    FOUND = "Found"
    PROVEN_NONE = "ProvenNone"
    BUDGET_EXHAUSTED = "BudgetExhausted"
    PARTIAL_RANK = "PartialRank"


@dataclass(frozen=True)
class SearchConfig:
    order: int
    mode: Mode = Mode.FIRST_SOLUTION
    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    parallel: bool = False

    def __post_init__(self):
        if self.order < 1:
            raise DomainError(f"order must be positive, got {self.order}")
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise DomainError("max_nodes must be positive when given")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise DomainError("max_seconds must be positive when given")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a search.

    ``matrix`` holds the Hadamard matrix (FOUND) or the rank witness
    (PARTIAL_RANK). ``depth`` is the number of rows in the deepest partial
    matrix seen, row 0 included. ``exact`` tells whether a PARTIAL_RANK value
    is proven maximal or only a lower bound. ``elapsed`` is excluded from
    equality so repeated runs compare equal.
    """

    status: Status
    order: int
    nodes_visited: int
    matrix: Optional[SignMatrix] = None
    rank: Optional[int] = None
    exact: bool = True
    depth: int = 0
    elapsed: float = field(default=0.0, compare=False)


def enumerate_balanced_rows(n: int, leading_plus: bool = False) -> list[SignVector]:
    """All length-n vectors with n/2 entries +1, lexicographic with + before -."""
    if n < 2 or n % 2:
        raise DomainError(f"balanced rows need an even positive length, got {n}")
    if n > MAX_ENUM_ORDER:
        raise CapacityError(f"balanced-row enumeration supports n <= {MAX_ENUM_ORDER}, got {n}")
    return [SignVector(n, b) for b in _balanced_bits(n, leading_plus)]


def _balanced_bits(n: int, leading_plus: bool) -> list[int]:
    # combinations() yields +1 position sets in the same order as the vectors.
    half = n // 2
    top = n - 1
    if leading_plus:
        combos = ((0,) + c for c in itertools.combinations(range(1, n), half - 1))
    else:
        combos = itertools.combinations(range(n), half)
    return [sum(1 << (top - i) for i in c) for c in combos]


def _candidates(n: int) -> np.ndarray:
    return np.asarray(_balanced_bits(n, True), dtype=np.uint64)


def _rows_to_matrix(n: int, values: np.ndarray, chosen: list[int]) -> SignMatrix:
    rows = [SignVector.ones(n)] + [SignVector(n, int(values[c])) for c in chosen]
    return SignMatrix(tuple(rows))


def _run_first(n, values, max_nodes, max_seconds, root_lo=0, root_hi=-1):
    return kernels.clique_search(
        values, n // 2, n - 1, kernels.MODE_FIRST, root_lo, root_hi,
        int(max_nodes or 0), float(max_seconds or 0.0),
    )


def _subtree(args):
    n, lo, max_nodes, max_seconds = args
    return _run_first(n, _candidates(n), max_nodes, max_seconds, lo, lo + 1)


def _first_parallel(n, values, max_nodes, max_seconds):
    """One task per first chosen row; the lowest-index success wins."""
    nodes = 0
    best: list[int] = []
    tasks = [(n, lo, max_nodes, max_seconds) for lo in range(len(values))]
    with ProcessPoolExecutor() as pool:
        for complete, chain, used in pool.map(_subtree, tasks, chunksize=8):
            nodes += used
            if len(chain) > len(best):
                best = chain
            if not complete:
                pool.shutdown(wait=False, cancel_futures=True)
                return False, best, nodes
            if len(chain) == n - 1:
                pool.shutdown(wait=False, cancel_futures=True)
                return True, chain, nodes
    return True, best, nodes


def _finish_found(n, matrix, nodes, start):
    report = verify_hadamard(matrix)
    if not report.is_hadamard:
        raise RuntimeError(f"search produced a non-Hadamard matrix: {report.describe()}")
    return SearchOutcome(Status.FOUND, n, nodes, matrix=matrix, rank=n, depth=n,
                         elapsed=time.perf_counter() - start)


def find_hadamard(config: SearchConfig) -> SearchOutcome:
    """Depth-first search for the lexicographically first normalized Hadamard matrix."""
    start = time.perf_counter()
    n = config.order
    if n == 1:
        return _finish_found(n, SignMatrix((SignVector.ones(1),)), 0, start)
    if n % 2:
        # No balanced rows exist, so the tree below row 0 is empty.
        return SearchOutcome(Status.PROVEN_NONE, n, 0, depth=1,
                             elapsed=time.perf_counter() - start)
    values = _candidates(n) if n <= MAX_ENUM_ORDER else None
    if values is None:
        raise CapacityError(f"search supports n <= {MAX_ENUM_ORDER}, got {n}")
    if config.parallel:
        complete, chain, nodes = _first_parallel(n, values, config.max_nodes, config.max_seconds)
    else:
        complete, chain, nodes = _run_first(n, values, config.max_nodes, config.max_seconds)
    if len(chain) == n - 1:
        return _finish_found(n, _rows_to_matrix(n, values, chain), nodes, start)
    status = Status.PROVEN_NONE if complete else Status.BUDGET_EXHAUSTED
    return SearchOutcome(status, n, nodes, depth=1 + len(chain),
                         elapsed=time.perf_counter() - start)


def exhaustive_nonexistence(n: int) -> SearchOutcome:
    """Unbudgeted search for small ``n``: FOUND or a proof of nonexistence."""
    if n > MAX_EXHAUSTIVE_ORDER:
        raise CapacityError(
            f"exhaustive search is limited to n <= {MAX_EXHAUSTIVE_ORDER}; "
            "use first-solution mode with a budget for larger orders"
        )
    return find_hadamard(SearchConfig(n, Mode.EXHAUSTIVE_NONEXISTENCE))


def max_partial_rows(n: int, max_nodes: Optional[int] = None,
                     max_seconds: Optional[float] = None) -> SearchOutcome:
    """Largest r with an r x n sign matrix whose rows are pairwise orthogonal.

    ``exact`` is True when the search finished or hit the trivial bound
    r = n; otherwise ``rank`` is a lower bound certified by the witness.
    """
    start = time.perf_counter()
    ones = SignVector.ones(n)
    if n % 2:
        # Two rows of odd length always have an odd inner product.
        return SearchOutcome(Status.PARTIAL_RANK, n, 0, matrix=SignMatrix((ones,)), rank=1,
                             exact=True, depth=1, elapsed=time.perf_counter() - start)
    if n > MAX_ENUM_ORDER:
        return _partial_beyond_enum(n, start)
    values = _candidates(n)
    complete, chain, nodes = kernels.clique_search(
        values, n // 2, n - 1, kernels.MODE_MAX, 0, -1,
        int(max_nodes or 0), float(max_seconds or 0.0),
    )
    witness = _rows_to_matrix(n, values, chain)
    r = witness.n_rows
    _check_witness(witness)
    return SearchOutcome(Status.PARTIAL_RANK, n, nodes, matrix=witness, rank=r,
                         exact=complete or r == n, depth=r,
                         elapsed=time.perf_counter() - start)


def _partial_beyond_enum(n, start):
    from hadamard_kit.constructions import construct, plan_order

    if plan_order(n) is not None:
        witness = construct(n)
        exact = True
    else:
        half = n // 2
        witness = SignMatrix((SignVector.ones(n), SignVector(n, ((1 << half) - 1) << half)))
        exact = n % 4 == 2
    _check_witness(witness)
    return SearchOutcome(Status.PARTIAL_RANK, n, 0, matrix=witness, rank=witness.n_rows,
                         exact=exact, depth=witness.n_rows,
                         elapsed=time.perf_counter() - start)


def _check_witness(m: SignMatrix):
    report = verify_hadamard(m)
    if report.first_violation is not None:
        raise RuntimeError(f"rank witness is not row-orthogonal: {report.describe()}")
    if m.is_square and not report.is_hadamard:
        raise RuntimeError("square rank witness failed the Hadamard check")


def run(config: SearchConfig) -> SearchOutcome:
    """Dispatch a :class:`SearchConfig` to the matching search."""
    if config.mode is Mode.PARTIAL_RANK:
        return max_partial_rows(config.order, config.max_nodes, config.max_seconds)
    if config.mode is Mode.EXHAUSTIVE_NONEXISTENCE and config.max_nodes is None \
            and config.max_seconds is None:
        return exhaustive_nonexistence(config.order)
    return find_hadamard(config)
