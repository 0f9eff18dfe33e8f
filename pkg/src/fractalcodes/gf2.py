"""Bit-packed linear algebra over GF(2).

Vectors are Python ints used as bitsets.  Bit 0 of a vector corresponds to
the leftmost character of its textual form, so the Kronecker product of an
n-bit vector ``a`` with an m-bit vector ``b`` places ``a_i AND b_j`` at bit
``i*m + j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatchError, ParseError

__all__ = [
    "BitVector",
    "BitMatrix",
    "rref",
    "member",
    "subspace_sum",
    "subspace_intersection",
    "kron",
    "kron_matrix",
]


@dataclass(frozen=True, order=True)
class BitVector:
    """An immutable GF(2) vector of fixed length, packed into one int."""

    length: int
    bits: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("vector length must be positive")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside the declared length")

    @classmethod
    def from_text(cls, text: str) -> "BitVector":
        """Parse '0'/'1' with '.' accepted as 0, leftmost char first."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch not in "0.":
                raise ParseError(f"illegal character {ch!r} in vector text")
        if not text:
            raise ParseError("empty vector text")
        return cls(len(text), bits)

    @classmethod
    def zero(cls, length: int) -> "BitVector":
        return cls(length, 0)

    def get(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise DimensionMismatchError("xor of vectors of different length")
        return BitVector(self.length, self.bits ^ other.bits)

    def to_text(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class BitMatrix:
    """A row matrix over GF(2); ``canonical`` marks RREF with no zero rows."""

    col_count: int
    rows: tuple[BitVector, ...]
    canonical: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.col_count < 0:
            raise ValueError("negative column count")
        for r in self.rows:
            if r.length != self.col_count:
                raise DimensionMismatchError(
                    f"row of length {r.length} in a {self.col_count}-column matrix"
                )

    @classmethod
    def from_rows(cls, rows, col_count: int | None = None) -> "BitMatrix":
        rows = tuple(rows)
        if col_count is None:
            if not rows:
                raise ValueError("column count required for an empty matrix")
            col_count = rows[0].length
        return cls(col_count, rows)

    @classmethod
    def from_text(cls, lines) -> "BitMatrix":
        return cls.from_rows(BitVector.from_text(line) for line in lines)

    @classmethod
    def empty(cls, col_count: int) -> "BitMatrix":
        """The zero subspace of the given ambient length."""
        return cls(col_count, (), canonical=True)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def row_ints(self) -> list[int]:
        return [r.bits for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(r.to_text() for r in self.rows)


def _rref_ints(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """In-place style RREF on int rows; returns (nonzero rows, pivot columns)."""
    work = [r for r in rows if r]
    out: list[int] = []
    pivots: list[int] = []
    for col in range(ncols):
        mask = 1 << col
        pivot_row = None
        for i, r in enumerate(work):
            if r & mask:
                pivot_row = work.pop(i)
                break
        if pivot_row is None:
            continue
        out = [r ^ pivot_row if r & mask else r for r in out]
        work = [r ^ pivot_row if r & mask else r for r in work]
        work = [r for r in work if r]
        out.append(pivot_row)
        pivots.append(col)
        if not work:
            break
    return out, pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, int, tuple[int, ...]]:
    """Reduced row-echelon form; returns (canonical matrix, rank, pivot columns)."""
    if m.canonical:
        return m, m.row_count, tuple(_lowest_bit(r.bits) for r in m.rows)
    out, pivots = _rref_ints(m.row_ints(), m.col_count)
    canon = BitMatrix(
        m.col_count, tuple(BitVector(m.col_count, r) for r in out), canonical=True
    )
    return canon, len(out), tuple(pivots)


def _lowest_bit(x: int) -> int:
    return (x & -x).bit_length() - 1


def member(v: BitVector, basis: BitMatrix) -> bool:
    """Whether v lies in the row space of basis (canonicalized if needed)."""
    if v.length != basis.col_count:
        raise DimensionMismatchError(
            f"vector of length {v.length} vs {basis.col_count}-column basis"
        )
    if not basis.canonical:
        basis, _, _ = rref(basis)
    x = v.bits
    for row in basis.row_ints():
        if x & (row & -row):
            x ^= row
    return x == 0


def subspace_sum(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Canonical basis of the sum of two row spaces."""
    if a.col_count != b.col_count:
        raise DimensionMismatchError("sum of subspaces of different ambient length")
    out, _ = _rref_ints(a.row_ints() + b.row_ints(), a.col_count)
    return BitMatrix(
        a.col_count, tuple(BitVector(a.col_count, r) for r in out), canonical=True
    )


def subspace_intersection(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Canonical basis of the intersection, via Zassenhaus stacked blocks.

    One elimination over 2n columns: rows [x | x] for x in a and [y | 0]
    for y in b; reduced rows with zero left block carry the intersection
    in their right block.
    """
    if a.col_count != b.col_count:
        raise DimensionMismatchError(
            "intersection of subspaces of different ambient length"
        )
    n = a.col_count
    stacked = [x | (x << n) for x in a.row_ints()] + b.row_ints()
    reduced, _ = _rref_ints(stacked, 2 * n)
    left_mask = (1 << n) - 1
    inter = [r >> n for r in reduced if not (r & left_mask)]
    out, _ = _rref_ints(inter, n)
    return BitMatrix(n, tuple(BitVector(n, r) for r in out), canonical=True)


def kron(a: BitVector, b: BitVector) -> BitVector:
    """Kronecker product: bit (i*b.length + j) = a_i AND b_j."""
    bits = 0
    x = a.bits
    while x:
        i = _lowest_bit(x)
        x &= x - 1
        bits |= b.bits << (i * b.length)
    return BitVector(a.length * b.length, bits)


def kron_matrix(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """All pairwise row products kron(r, r'), row-major in (r, r') order."""
    cols = a.col_count * b.col_count
    rows = tuple(kron(r, rp) for r in a.rows for rp in b.rows)
    return BitMatrix(cols, rows)
