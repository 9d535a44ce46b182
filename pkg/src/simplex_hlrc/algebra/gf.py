"""Exact arithmetic over the small finite fields GF(q).

Elements are plain integers in ``[0, q)``. For prime q the value is the residue;
for q = p^e with e > 1 the value packs the coefficients of the polynomial
representative in base p, constant term least significant (in GF(4), ``x`` is 2
and ``x + 1`` is 3).

All arithmetic goes through precomputed ``q x q`` lookup tables, so every
operation accepts numpy arrays as well as scalars.
"""

import logging
from functools import lru_cache
from typing import Any

import numpy as np

from simplex_hlrc.errors import (
    DivisionByZero,
    EntryOutOfRange,
    FieldAxiomViolation,
    InvalidArgs,
    UnsupportedOrder,
)

logger = logging.getLogger(__name__)

FieldElement = int

SUPPORTED_ORDERS = (2, 3, 4, 5, 7, 8, 9)

# q -> (p, e)
_PRIME_POWERS = {
    2: (2, 1),
    3: (3, 1),
    4: (2, 2),
    5: (5, 1),
    7: (7, 1),
    8: (2, 3),
    9: (3, 2),
}

# Monic irreducible moduli, coefficients from constant term upwards
IRREDUCIBLE_POLYNOMIALS = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
}


def _digits(value: int, p: int, e: int) -> list[int]:
    return [(value // p**i) % p for i in range(e)]


def _pack(digits: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(digits))


def _poly_mulmod(
    a: list[int], b: list[int], modulus: tuple[int, ...], p: int
) -> list[int]:
    e = len(modulus) - 1
    product = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            product[i + j] = (product[i + j] + ai * bj) % p
    for deg in range(len(product) - 1, e - 1, -1):
        coef = product[deg]
        if coef:
            for t, mt in enumerate(modulus):
                product[deg - e + t] = (product[deg - e + t] - coef * mt) % p
    return product[:e]


def _frozen(table: np.ndarray) -> np.ndarray:
    table.setflags(write=False)
    return table


class FiniteField:
    """Arithmetic context for GF(q).

    The instance is immutable after construction and is shared through
    :func:`make_field`.
    """

    def __init__(self, q: int):
        if q not in _PRIME_POWERS:
            raise UnsupportedOrder(
                f"GF({q}) is not supported; choose one of {SUPPORTED_ORDERS}"
            )
        self.q = q
        self.p, self.e = _PRIME_POWERS[q]
        self.modulus = IRREDUCIBLE_POLYNOMIALS.get(q)

        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        if self.e == 1:
            grid = np.arange(q)
            add[:] = (grid[:, None] + grid[None, :]) % q
            mul[:] = (grid[:, None] * grid[None, :]) % q
        else:
            assert self.modulus is not None
            digits = [_digits(v, self.p, self.e) for v in range(q)]
            for a in range(q):
                for b in range(q):
                    add[a, b] = _pack(
                        [(x + y) % self.p for x, y in zip(digits[a], digits[b])],
                        self.p,
                    )
                    mul[a, b] = _pack(
                        _poly_mulmod(digits[a], digits[b], self.modulus, self.p),
                        self.p,
                    )

        neg = np.argmin(add, axis=1).astype(np.uint8)
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(mul[a] == 1)[0])

        self.add_table = _frozen(add)
        self.mul_table = _frozen(mul)
        self.neg_table = _frozen(neg)
        self.inv_table = _frozen(inv)
        self.sub_table = _frozen(add[:, neg])

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("GF", self.q))

    @property
    def is_prime(self) -> bool:
        return self.e == 1

    def elements(self) -> range:
        return range(self.q)

    def add(self, a: Any, b: Any) -> Any:
        return _scalar(self.add_table[a, b])

    def sub(self, a: Any, b: Any) -> Any:
        return _scalar(self.sub_table[a, b])

    def mul(self, a: Any, b: Any) -> Any:
        return _scalar(self.mul_table[a, b])

    def neg(self, a: Any) -> Any:
        return _scalar(self.neg_table[a])

    def inv(self, a: Any) -> Any:
        if np.any(np.asarray(a) == 0):
            raise DivisionByZero(f"inverse of 0 in GF({self.q})")
        return _scalar(self.inv_table[a])

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def power(self, a: FieldElement, exponent: int) -> FieldElement:
        """Raise ``a`` to a non-negative integer power by square-and-multiply."""
        if exponent < 0:
            return self.power(self.inv(a), -exponent)
        result, base = 1, a
        while exponent:
            if exponent & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            exponent >>= 1
        return result

    def asarray(self, values: Any) -> np.ndarray:
        """Convert to a uint8 array, rejecting entries outside [0, q)."""
        arr = np.asarray(values, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise EntryOutOfRange(f"entries must lie in [0, {self.q})")
        return arr.astype(np.uint8)

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Matrix product over GF(q)."""
        left = np.asarray(left, dtype=np.uint8)
        right = np.asarray(right, dtype=np.uint8)
        if self.is_prime:
            product = left.astype(np.int64) @ right.astype(np.int64)
            return (product % self.q).astype(np.uint8)
        rows = left.shape[0]
        cols = right.shape[1]
        result = np.zeros((rows, cols), dtype=np.uint8)
        for t in range(left.shape[1]):
            result = self.add_table[
                result, self.mul_table[left[:, t, None], right[None, t, :]]
            ]
        return result

    def dot(self, u: np.ndarray, v: np.ndarray) -> FieldElement:
        return int(self.matmul(np.asarray(u)[None, :], np.asarray(v)[:, None])[0, 0])

    def verify_axioms(self) -> None:
        """Check every field axiom exhaustively over all pairs and triples.

        Raises:
            FieldAxiomViolation: If any axiom fails
        """
        add, mul = self.add_table, self.mul_table
        a, b, c = np.meshgrid(*(np.arange(self.q),) * 3, indexing="ij")
        checks = {
            "additive commutativity": np.array_equal(add, add.T),
            "multiplicative commutativity": np.array_equal(mul, mul.T),
            "additive associativity": np.array_equal(
                add[add[a, b], c], add[a, add[b, c]]
            ),
            "multiplicative associativity": np.array_equal(
                mul[mul[a, b], c], mul[a, mul[b, c]]
            ),
            "distributivity": np.array_equal(
                mul[a, add[b, c]], add[mul[a, b], mul[a, c]]
            ),
            "additive identity": np.array_equal(add[0], np.arange(self.q)),
            "multiplicative identity": np.array_equal(mul[1], np.arange(self.q)),
            "additive inverse": bool(
                np.all(add[np.arange(self.q), self.neg_table] == 0)
            ),
            "multiplicative inverse": bool(
                np.all(mul[np.arange(1, self.q), self.inv_table[1:]] == 1)
            ),
        }
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            raise FieldAxiomViolation(f"GF({self.q}) fails: {', '.join(failed)}")
        logger.debug(f"GF({self.q}) passed the exhaustive axiom check")


def _scalar(value: Any) -> Any:
    if np.ndim(value) == 0:
        return int(value)
    return value


@lru_cache(maxsize=None)
def make_field(q: int) -> FiniteField:
    """Build (once) the verified arithmetic context for GF(q).

    Args:
        q: Field order

    Returns:
        Shared FiniteField instance

    Raises:
        UnsupportedOrder: If q is not one of 2, 3, 4, 5, 7, 8, 9
    """
    field = FiniteField(q)
    field.verify_axioms()
    return field


_UNARY_OPS = {"neg", "inv"}
_BINARY_OPS = {"add", "sub", "mul", "div"}


def arith(
    field: FiniteField, op: str, a: FieldElement, b: FieldElement | None = None
) -> FieldElement:
    """Apply a named field operation to canonical element values.

    Args:
        field: Arithmetic context
        op: One of add, sub, mul, div, neg, inv
        a: First operand
        b: Second operand for binary operations

    Returns:
        Result in canonical encoding

    Raises:
        InvalidArgs: Unknown operation or missing operand
        EntryOutOfRange: Operand outside [0, q)
        DivisionByZero: inv(0) or division by 0
    """
    operands = [a] if b is None else [a, b]
    field.asarray(operands)
    if op in _UNARY_OPS:
        return getattr(field, op)(a)
    if op in _BINARY_OPS:
        if b is None:
            raise InvalidArgs(f"operation {op!r} needs two operands")
        return getattr(field, op)(a, b)
    raise InvalidArgs(f"unknown field operation {op!r}")
