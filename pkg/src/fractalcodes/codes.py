"""Binary linear codes: canonical generator, exact parameters, constructors.

The distance oracle enumerates all nonzero codewords in Gray-code order
over the message space, so each step costs one row XOR and a popcount.
The zero code has distance INFINITE; it never enters min-folds.
"""

from __future__ import annotations

import math

from .errors import BudgetExceededError, DimensionMismatchError, ParseError
from .gf2 import BitMatrix, BitVector, kron_matrix, member, rref, subspace_intersection, subspace_sum

INFINITE = math.inf

DEFAULT_BUDGET = 1 << 24

__all__ = [
    "INFINITE",
    "DEFAULT_BUDGET",
    "LinearCode",
    "code_from_rows",
    "code_sum",
    "code_intersection",
    "tensor_product",
    "puncture",
    "universe",
    "even_weight",
    "repetition",
    "zero_code",
    "from_text",
]


class LinearCode:
    """A binary linear code given by a canonical (RREF) generator basis."""

    def __init__(self, generator: BitMatrix):
        if not generator.canonical:
            generator, _, _ = rref(generator)
        if generator.col_count < 1:
            raise ValueError("code length must be positive")
        self.generator = generator
        self._distance: int | float | None = None
        self._min_word: BitVector | None = None

    @property
    def n(self) -> int:
        return self.generator.col_count

    @property
    def k(self) -> int:
        return self.generator.row_count

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.n == other.n
            and self.generator.rows == other.generator.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.generator.rows))

    def __repr__(self) -> str:
        d = self._distance if self._distance is not None else "?"
        return f"LinearCode(n={self.n}, k={self.k}, d={d})"

    def contains(self, v: BitVector) -> bool:
        return member(v, self.generator)

    def is_subcode_of(self, other: "LinearCode") -> bool:
        if self.n != other.n:
            raise DimensionMismatchError("subcode test across different lengths")
        return all(other.contains(r) for r in self.generator.rows)

    def codewords(self):
        """Yield all 2^k codewords, zero first."""
        yield BitVector.zero(self.n)
        rows = self.generator.row_ints()
        cw = 0
        for m in range(1, 1 << self.k):
            cw ^= rows[(m & -m).bit_length() - 1]
            yield BitVector(self.n, cw)

    def _enumerate(self, budget: int) -> None:
        count = 1 << self.k
        if count > budget:
            raise BudgetExceededError(count, budget)
        rows = self.generator.row_ints()
        best = -1
        best_word = 0
        cw = 0
        for m in range(1, count):
            cw ^= rows[(m & -m).bit_length() - 1]
            w = cw.bit_count()
            if w < best or best < 0:
                best = w
                best_word = cw
        self._distance = best
        self._min_word = BitVector(self.n, best_word)

    def min_distance(self, budget: int = DEFAULT_BUDGET) -> int | float:
        """Exact minimum distance; INFINITE for the zero code."""
        if self.k == 0:
            return INFINITE
        if self._distance is None:
            self._enumerate(budget)
        return self._distance

    def min_weight_word(self, budget: int = DEFAULT_BUDGET) -> BitVector:
        """A codeword attaining the minimum distance (k >= 1)."""
        if self.k == 0:
            raise ValueError("the zero code has no nonzero codeword")
        if self._min_word is None:
            self._enumerate(budget)
        return self._min_word

    @property
    def d(self) -> int | float:
        return self.min_distance()

    @property
    def params(self) -> tuple[int, int, int | float]:
        return (self.n, self.k, self.d)

    def weight_distribution(self, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
        """Counts A_0..A_n of codewords by weight."""
        count = 1 << self.k
        if count > budget:
            raise BudgetExceededError(count, budget)
        dist = [0] * (self.n + 1)
        dist[0] = 1
        rows = self.generator.row_ints()
        cw = 0
        for m in range(1, count):
            cw ^= rows[(m & -m).bit_length() - 1]
            dist[cw.bit_count()] += 1
        return tuple(dist)


def code_from_rows(rows: BitMatrix) -> LinearCode:
    return LinearCode(rows)


def from_text(lines) -> LinearCode:
    """Build a code from textual generator rows ('1', '0', '.' as 0)."""
    lines = [line for line in lines if line.strip()]
    if not lines:
        raise ParseError("no generator rows")
    rows = [BitVector.from_text(line.strip()) for line in lines]
    if len({r.length for r in rows}) > 1:
        raise ParseError("ragged generator rows")
    return LinearCode(BitMatrix.from_rows(rows))


def code_sum(a: LinearCode, b: LinearCode) -> LinearCode:
    if a.n != b.n:
        raise DimensionMismatchError("sum of codes of different length")
    return LinearCode(subspace_sum(a.generator, b.generator))


def code_intersection(a: LinearCode, b: LinearCode) -> LinearCode:
    if a.n != b.n:
        raise DimensionMismatchError("intersection of codes of different length")
    return LinearCode(subspace_intersection(a.generator, b.generator))


def tensor_product(c: LinearCode, d: LinearCode) -> LinearCode:
    """The tensor-product code, generated by all pairwise row products."""
    rows = kron_matrix(c.generator, d.generator)
    if rows.row_count == 0:
        return zero_code(c.n * d.n)
    return LinearCode(rows)


def puncture(c: LinearCode, column: int) -> LinearCode:
    """Delete one coordinate from every generator row and re-canonicalize."""
    if c.n < 2:
        raise ValueError("cannot puncture a length-1 code")
    if not 0 <= column < c.n:
        raise IndexError(f"column {column} out of range for length {c.n}")
    low_mask = (1 << column) - 1
    rows = []
    for r in c.generator.row_ints():
        rows.append((r & low_mask) | ((r >> (column + 1)) << column))
    mat = BitMatrix.from_rows(
        (BitVector(c.n - 1, r) for r in rows), col_count=c.n - 1
    )
    if mat.row_count == 0:
        return zero_code(c.n - 1)
    return LinearCode(mat)


def universe(n: int) -> LinearCode:
    """The (n, n, 1) code of all vectors."""
    rows = tuple(BitVector(n, 1 << i) for i in range(n))
    return LinearCode(BitMatrix(n, rows, canonical=True))


def even_weight(n: int) -> LinearCode:
    """The (n, n-1, 2) code of all even-weight vectors (n >= 2)."""
    if n < 2:
        raise ValueError("even-weight code needs length >= 2")
    rows = tuple(BitVector(n, (1 << i) | (1 << (n - 1))) for i in range(n - 1))
    return LinearCode(BitMatrix(n, rows, canonical=True))


def repetition(n: int) -> LinearCode:
    """The (n, 1, n) repetition code."""
    return LinearCode(BitMatrix(n, (BitVector(n, (1 << n) - 1),), canonical=True))


def zero_code(n: int) -> LinearCode:
    return LinearCode(BitMatrix.empty(n))
