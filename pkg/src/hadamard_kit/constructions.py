"""Hadamard matrices by Sylvester doubling, Paley type I and Kronecker products.

Every builder returns a matrix that has passed :func:`verify_hadamard`; a
failed Gram check raises rather than returning a bad matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from hadamard_kit.errors import DomainError, ShapeError
from hadamard_kit.matrix_core import SignMatrix, SignVector, verify_hadamard

#: Trial division is used for primality; inputs are bounded to keep it cheap.
MAX_PRIME = 10_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _require_odd_prime(p: int):
    if p > MAX_PRIME:
        raise DomainError(f"prime {p} exceeds supported bound {MAX_PRIME}")
    if p < 3 or not is_prime(p):
        raise DomainError(f"{p} is not an odd prime")


def _checked(m: SignMatrix, what: str) -> SignMatrix:
    report = verify_hadamard(m)
    if not report.is_hadamard:
        raise RuntimeError(f"{what} failed the Gram check: {report.describe()}")
    return m


def sylvester(order: int) -> SignMatrix:
    """Sylvester matrix of a power-of-two order: H(2m) = [[H, H], [H, -H]]."""
    if not isinstance(order, int) or not is_power_of_two(order):
        raise DomainError(f"Sylvester order must be a power of two, got {order!r}")
    rows = [1]
    m = 1
    while m < order:
        full = (1 << m) - 1
        rows = [(b << m) | b for b in rows] + [(b << m) | (b ^ full) for b in rows]
        m *= 2
    return _checked(SignMatrix(tuple(SignVector(order, b) for b in rows)), f"sylvester({order})")


def legendre_symbol(a: int, p: int) -> int:
    """Quadratic character of ``a`` modulo the odd prime ``p``: -1, 0 or +1."""
    _require_odd_prime(p)
    if not 0 <= a < p:
        raise DomainError(f"residue {a} outside [0, {p})")
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def paley_one(p: int) -> SignMatrix:
    """Paley type I matrix of order p + 1 for a prime p = 3 (mod 4).

    With the skew quadratic-character matrix ``Q[i][j] = chi(i - j)`` the
    result is ``I + [[0, 1^T], [-1, Q]]``.
    """
    _require_odd_prime(p)
    if p % 4 != 3:
        raise DomainError(f"Paley type I needs p = 3 (mod 4), got p = {p}")
    chi = [legendre_symbol(a, p) for a in range(p)]
    n = p + 1
    rows = [[1] * n]
    for i in range(p):
        row = [-1] + [chi[(i - j) % p] for j in range(p)]
        row[i + 1] = 1
        rows.append(row)
    return _checked(SignMatrix.from_rows(rows), f"paley_one({p})")


def kronecker(a: SignMatrix, b: SignMatrix) -> SignMatrix:
    """Kronecker product; entry (i1*nb + i2, j1*nb + j2) is a[i1, j1] * b[i2, j2]."""
    for name, m in (("left", a), ("right", b)):
        if not m.is_square:
            raise ShapeError(f"{name} factor is {m.n_rows}x{m.n_cols}, expected square")
    na, nb = a.n_cols, b.n_cols
    full = (1 << nb) - 1
    rows = []
    for ra in a.rows:
        signs = ra.entries
        for rb in b.rows:
            bits = 0
            for s in signs:
                bits = (bits << nb) | (rb.bits if s == 1 else rb.bits ^ full)
            rows.append(SignVector(na * nb, bits))
    return SignMatrix(tuple(rows))


@dataclass(frozen=True)
class Sylvester:
    order: int

    def __post_init__(self):
        if not is_power_of_two(self.order):
            raise DomainError(f"Sylvester order must be a power of two, got {self.order}")

    def build(self) -> SignMatrix:
        return sylvester(self.order)

    def __str__(self):
        return f"sylvester({self.order})"


@dataclass(frozen=True)
class PaleyOne:
    prime: int

    def __post_init__(self):
        if not is_prime(self.prime) or self.prime % 4 != 3:
            raise DomainError(f"Paley type I needs a prime p = 3 (mod 4), got {self.prime}")

    @property
    def order(self) -> int:
        return self.prime + 1

    def build(self) -> SignMatrix:
        return paley_one(self.prime)

    def __str__(self):
        return f"paley({self.prime})"


@dataclass(frozen=True)
class Kronecker:
    left: "ConstructionMethod"
    right: "ConstructionMethod"

    @property
    def order(self) -> int:
        return self.left.order * self.right.order

    def build(self) -> SignMatrix:
        return _checked(kronecker(self.left.build(), self.right.build()), str(self))

    def __str__(self):
        return f"kron({self.left}, {self.right})"


ConstructionMethod = Union[Sylvester, PaleyOne, Kronecker]


def _generators(limit: int) -> list[int]:
    gens = [2] if limit >= 2 else []
    gens += [p + 1 for p in range(3, limit, 4) if is_prime(p)]
    return sorted(g for g in gens if g <= limit)


def reachable_orders(limit: int) -> list[int]:
    """Orders up to ``limit`` reachable from {1, 2} and Paley orders by products."""
    if limit < 1:
        raise DomainError(f"limit must be positive, got {limit}")
    gens = _generators(limit)
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = s * g
                if t <= limit and t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen)


def plan_order(n: int) -> ConstructionMethod | None:
    """A construction recipe for order ``n``, or None if ``n`` is not reachable.

    Prefers Sylvester, then Paley type I, then the Kronecker split with the
    smallest left factor.
    """
    if n < 1:
        raise DomainError(f"order must be positive, got {n}")
    if is_power_of_two(n):
        return Sylvester(n)
    if n % 4 == 0 and n - 1 <= MAX_PRIME and is_prime(n - 1):
        return PaleyOne(n - 1)
    for g in _generators(n):
        if g < n and n % g == 0:
            rest = plan_order(n // g)
            if rest is not None:
                return Kronecker(plan_order(g), rest)
    return None


def construct(n: int) -> SignMatrix:
    """Build and verify a Hadamard matrix of order ``n`` from :func:`plan_order`."""
    plan = plan_order(n)
    if plan is None:
        raise DomainError(f"order {n} is not reachable by Sylvester, Paley I and Kronecker products")
    return plan.build()
