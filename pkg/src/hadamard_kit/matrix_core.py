"""Sign vectors and sign matrices with exact, bit-parallel inner products.

A :class:`SignVector` of length ``n`` is stored as a Python int whose bit
``n - 1 - i`` is set exactly when entry ``i`` is +1. Two rows then disagree in
``popcount(a ^ b)`` places and their inner product is ``n - 2 * popcount(a ^ b)``.

Row and column indices are 0-based throughout.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from hadamard_kit._backend import kernels
from hadamard_kit.errors import CapacityError, DimensionError, ShapeError

#: Largest order accepted by :func:`gram` and :func:`verify_hadamard`.
MAX_ORDER = 1024

_CHARS = {"+": 1, "-": -1}


@dataclass(frozen=True)
class SignVector:
    """Immutable vector of +1/-1 entries."""

    length: int
    bits: int

    def __post_init__(self):
        if not isinstance(self.length, int) or self.length < 1:
            raise ValueError(f"length must be a positive integer, got {self.length!r}")
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError(f"bits {self.bits:#x} do not fit in {self.length} entries")

    @classmethod
    def from_entries(cls, entries: Iterable[int]) -> SignVector:
        entries = list(entries)
        bits = 0
        for pos, e in enumerate(entries):
            if e == 1:
                bits = (bits << 1) | 1
            elif e == -1:
                bits <<= 1
            else:
                raise ValueError(f"entry {pos} is {e!r}; sign entries must be +1 or -1")
        return cls(len(entries), bits)

    @classmethod
    def from_string(cls, text: str) -> SignVector:
        """Parse a string such as ``"++-+"``."""
        try:
            return cls.from_entries(_CHARS[ch] for ch in text)
        except KeyError as err:
            raise ValueError(f"invalid sign character {err.args[0]!r}") from None

    @classmethod
    def ones(cls, n: int) -> SignVector:
        return cls(n, (1 << n) - 1)

    @property
    def entries(self) -> tuple[int, ...]:
        n = self.length
        return tuple(1 if (self.bits >> (n - 1 - i)) & 1 else -1 for i in range(n))

    @property
    def plus_count(self) -> int:
        return self.bits.bit_count()

    def __len__(self):
        return self.length

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        if not -self.length <= i < self.length:
            raise IndexError(i)
        i %= self.length
        return 1 if (self.bits >> (self.length - 1 - i)) & 1 else -1

    def __neg__(self):
        return SignVector(self.length, self.bits ^ ((1 << self.length) - 1))

    def __str__(self):
        return format(self.bits, f"0{self.length}b").replace("1", "+").replace("0", "-")


@dataclass(frozen=True)
class SignMatrix:
    """Immutable r x n matrix of sign entries, stored as a tuple of rows."""

    rows: tuple[SignVector, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ShapeError("a sign matrix needs at least one row")
        n = rows[0].length
        for i, row in enumerate(rows):
            if not isinstance(row, SignVector):
                raise TypeError(f"row {i} is not a SignVector")
            if row.length != n:
                raise ShapeError(f"row {i} has length {row.length}, expected {n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int] | str | SignVector]) -> SignMatrix:
        out = []
        for row in rows:
            if isinstance(row, SignVector):
                out.append(row)
            elif isinstance(row, str):
                out.append(SignVector.from_string(row))
            else:
                out.append(SignVector.from_entries(row))
        return cls(tuple(out))

    @classmethod
    def from_array(cls, array) -> SignMatrix:
        a = np.asarray(array)
        if a.ndim != 2:
            raise ShapeError(f"expected a 2-D array, got {a.ndim}-D")
        return cls.from_rows(a.tolist())

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return self.rows[0].length

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def to_array(self) -> np.ndarray:
        return np.array([row.entries for row in self.rows], dtype=np.int64)

    def words(self) -> np.ndarray:
        """Rows packed little-endian into uint64 words, shape (rows, ceil(n / 64))."""
        nw = (self.n_cols + 63) // 64
        mask = (1 << 64) - 1
        out = np.empty((self.n_rows, nw), dtype=np.uint64)
        for i, row in enumerate(self.rows):
            b = row.bits
            for w in range(nw):
                out[i, w] = (b >> (64 * w)) & mask
        return out

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def __str__(self):
        return "\n".join(str(row) for row in self.rows)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking ``M M^T == n I``.

    ``first_violation`` is the lexicographically smallest ``(i, j, g)`` with
    ``i <= j`` whose Gram entry ``g`` is wrong. ``square`` is False for
    non-square input, which is never Hadamard.
    """

    is_hadamard: bool
    order: int
    first_violation: Optional[tuple[int, int, int]]
    diagonal_ok: bool
    square: bool = True

    def describe(self) -> str:
        if self.is_hadamard:
            return f"Hadamard: yes (order {self.order})"
        parts = [f"Hadamard: no (order {self.order})"]
        if not self.square:
            parts.append("matrix is not square")
        if self.first_violation is not None:
            i, j, g = self.first_violation
            parts.append(f"first violation: rows {i},{j} have inner product {g}")
        return "; ".join(parts)


def _check_lengths(u: SignVector, v: SignVector):
    if u.length != v.length:
        raise DimensionError(f"vector lengths differ: {u.length} vs {v.length}")


def disagreements(u: SignVector, v: SignVector) -> int:
    """Number of positions where ``u`` and ``v`` differ (Hamming distance)."""
    _check_lengths(u, v)
    return (u.bits ^ v.bits).bit_count()


def inner_product(u: SignVector, v: SignVector) -> int:
    """Exact sum of ``u[i] * v[i]``, computed as ``n - 2 * disagreements``."""
    return u.length - 2 * disagreements(u, v)


def overlap(u: SignVector, v: SignVector) -> int:
    """Number of positions where both vectors are +1."""
    _check_lengths(u, v)
    return (u.bits & v.bits).bit_count()


def is_balanced(u: SignVector) -> bool:
    return u.length % 2 == 0 and 2 * u.plus_count == u.length


def normalize(m: SignMatrix) -> SignMatrix:
    """Negate columns, then rows, so the first row and column are all +1.

    Column negation is applied first, keyed on the first row; row negation
    then keys on the (updated) first column. The result is idempotent.
    """
    if not m.is_square:
        raise ShapeError(f"normalize needs a square matrix, got {m.n_rows}x{m.n_cols}")
    n = m.n_cols
    full = (1 << n) - 1
    flip_cols = m.rows[0].bits ^ full
    lead = 1 << (n - 1)
    rows = []
    for row in m.rows:
        b = row.bits ^ flip_cols
        if not b & lead:
            b ^= full
        rows.append(SignVector(n, b))
    return SignMatrix(tuple(rows))


def _check_capacity(m: SignMatrix):
    if m.n_cols > MAX_ORDER or m.n_rows > MAX_ORDER:
        raise CapacityError(
            f"matrix {m.n_rows}x{m.n_cols} exceeds the supported size {MAX_ORDER}"
        )


def gram(m: SignMatrix) -> np.ndarray:
    """Integer matrix of all pairwise row inner products (int64, shape r x r)."""
    _check_capacity(m)
    return kernels.gram(m.words(), m.n_cols)


def verify_hadamard(m: SignMatrix) -> VerificationReport:
    """Check the Gram identity exactly. Never raises for shape problems."""
    _check_capacity(m)
    n = m.n_cols
    g = gram(m)
    diagonal_ok = bool(np.all(np.diag(g) == n))
    expected = n * np.eye(m.n_rows, dtype=np.int64)
    bad = np.argwhere(np.triu(g != expected))
    violation = None
    if len(bad):
        i, j = (int(x) for x in bad[0])
        violation = (i, j, int(g[i, j]))
    square = m.is_square
    return VerificationReport(
        is_hadamard=square and violation is None and diagonal_ok,
        order=n,
        first_violation=violation,
        diagonal_ok=diagonal_ok,
        square=square,
    )


def is_hadamard(m: SignMatrix) -> bool:
    return verify_hadamard(m).is_hadamard
