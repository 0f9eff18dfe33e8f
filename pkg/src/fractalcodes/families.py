"""Multi-index lattice machinery over a family of same-length codes.

A family C_1..C_s induces, for every nonempty subset alpha of {1..s}, a
sum code (span of the union) and an intersection code.  Family bases tag
each basis vector with the maximal multi-index whose intersection code
contains it; the tag sets drive the combinatorial lower distance bound.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from .codes import LinearCode, code_intersection, code_sum
from .errors import DimensionMismatchError, NotInUnionError
from .gf2 import BitMatrix, BitVector, member, rref, subspace_sum

logger = logging.getLogger(__name__)

__all__ = [
    "MultiIndex",
    "FamilyBasis",
    "CodeFamily",
    "new_family",
    "transversals",
    "minimal_elements",
]


@dataclass(frozen=True, order=True)
class MultiIndex:
    """A nonempty sorted subset of {1..s}, stored canonically as a tuple."""

    members: tuple[int, ...]

    def __post_init__(self):
        if not self.members:
            raise ValueError("multi-index must be nonempty")
        if tuple(sorted(set(self.members))) != self.members:
            raise ValueError("multi-index members must be sorted and distinct")

    @classmethod
    def of(cls, *members: int) -> "MultiIndex":
        return cls(tuple(sorted(set(members))))

    @classmethod
    def from_iterable(cls, members) -> "MultiIndex":
        return cls(tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def issubset(self, other: "MultiIndex") -> bool:
        return set(self.members) <= set(other.members)

    def union(self, other: "MultiIndex") -> "MultiIndex":
        return MultiIndex.from_iterable(self.members + other.members)

    def compact(self) -> str:
        """Digit-run rendering, e.g. {1,2} -> '12' (for tables, s <= 9)."""
        if max(self.members) <= 9:
            return "".join(str(i) for i in self.members)
        return ",".join(str(i) for i in self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.members) + "}"


def all_multi_indexes(s: int):
    """All nonempty subsets of {1..s}, by increasing cardinality then lex."""
    for r in range(1, s + 1):
        for combo in itertools.combinations(range(1, s + 1), r):
            yield MultiIndex(combo)


def transversals(psi0) -> set[MultiIndex]:
    """All multi-indexes formed by uniting one pick from each member of psi0."""
    psi0 = list(psi0)
    if not psi0:
        raise ValueError("transversals of an empty set of multi-indexes")
    out = set()
    for picks in itertools.product(*(m.members for m in psi0)):
        out.add(MultiIndex.from_iterable(picks))
    return out


def minimal_elements(indexes) -> set[MultiIndex]:
    """The antichain of inclusion-minimal members."""
    indexes = set(indexes)
    return {
        a
        for a in indexes
        if not any(b != a and b.issubset(a) for b in indexes)
    }


@dataclass(frozen=True)
class FamilyBasis:
    """Tagged vectors spanning every intersection code of the family."""

    elements: tuple[tuple[BitVector, MultiIndex], ...]
    independent: bool

    def tag_set(self) -> set[MultiIndex]:
        """The deduplicated set of tags (the Psi set of the basis)."""
        return {tag for _, tag in self.elements}


class CodeFamily:
    """An ordered family of nonzero same-length codes with a lazy lattice."""

    def __init__(self, codes):
        codes = tuple(codes)
        if not codes:
            raise ValueError("a family needs at least one code")
        n = codes[0].n
        for c in codes:
            if c.n != n:
                raise DimensionMismatchError("family members differ in length")
            if c.k == 0:
                raise ValueError("zero member codes are not allowed in a family")
        self.codes = codes
        self.n = n
        self.s = len(codes)
        self._sums: dict[MultiIndex, LinearCode] = {}
        self._intersections: dict[MultiIndex, LinearCode] = {}
        self._basis: FamilyBasis | None = None

    def __len__(self) -> int:
        return self.s

    def _check(self, alpha: MultiIndex) -> None:
        if alpha.members[-1] > self.s:
            raise IndexError(f"multi-index {alpha} out of range for s={self.s}")

    def indexes(self):
        return all_multi_indexes(self.s)

    def sum_code(self, alpha: MultiIndex) -> LinearCode:
        """C^alpha, the span of the member codes indexed by alpha."""
        self._check(alpha)
        cached = self._sums.get(alpha)
        if cached is None:
            if len(alpha) == 1:
                cached = self.codes[alpha.members[0] - 1]
            else:
                cached = self.codes[alpha.members[0] - 1]
                for i in alpha.members[1:]:
                    cached = code_sum(cached, self.codes[i - 1])
            self._sums[alpha] = cached
        return cached

    def intersection_code(self, alpha: MultiIndex) -> LinearCode:
        """C_alpha, the intersection of the member codes indexed by alpha."""
        self._check(alpha)
        cached = self._intersections.get(alpha)
        if cached is None:
            if len(alpha) == 1:
                cached = self.codes[alpha.members[0] - 1]
            else:
                cached = self.codes[alpha.members[0] - 1]
                for i in alpha.members[1:]:
                    cached = code_intersection(cached, self.codes[i - 1])
            self._intersections[alpha] = cached
        return cached

    def full_sum(self) -> LinearCode:
        return self.sum_code(MultiIndex.from_iterable(range(1, self.s + 1)))

    def alpha_of(self, v: BitVector) -> MultiIndex:
        """The maximal multi-index alpha with v in C_alpha: {i : v in C_i}."""
        if v.is_zero:
            raise NotInUnionError("the zero vector has no maximal tag")
        hits = [i for i, c in enumerate(self.codes, start=1) if c.contains(v)]
        if not hits:
            raise NotInUnionError("vector lies in no member code")
        return MultiIndex.from_iterable(hits)

    def family_basis(self) -> FamilyBasis:
        """Greedy deepest-first basis, pruned to inclusion-minimality.

        Multi-indexes are visited by strictly decreasing cardinality with
        lexicographic tie-break; for each alpha the vectors already chosen
        inside C_alpha are extended to a spanning set by generator rows of
        C_alpha not yet in their span.
        """
        if self._basis is None:
            order = sorted(
                self.indexes(), key=lambda a: (-len(a), a.members)
            )
            selected: list[tuple[BitVector, MultiIndex]] = []
            for alpha in order:
                c_alpha = self.intersection_code(alpha)
                if c_alpha.k == 0:
                    continue
                span = BitMatrix.empty(self.n)
                for v, tag in selected:
                    if alpha.issubset(tag):
                        span = subspace_sum(span, BitMatrix.from_rows([v]))
                for row in c_alpha.generator.rows:
                    if not member(row, span):
                        selected.append((row, self.alpha_of(row)))
                        span = subspace_sum(span, BitMatrix.from_rows([row]))
            pruned = list(selected)
            i = 0
            while i < len(pruned):
                trial = pruned[:i] + pruned[i + 1:]
                if self._spans_all_intersections(trial):
                    pruned = trial
                else:
                    i += 1
            vectors = BitMatrix.from_rows(
                (v for v, _ in pruned), col_count=self.n
            )
            _, rank, _ = rref(vectors)
            self._basis = FamilyBasis(tuple(pruned), rank == len(pruned))
        return self._basis

    def _spans_all_intersections(self, elements) -> bool:
        for alpha in self.indexes():
            c_alpha = self.intersection_code(alpha)
            if c_alpha.k == 0:
                continue
            inside = [v for v, tag in elements if alpha.issubset(tag)]
            mat = BitMatrix.from_rows(inside, col_count=self.n)
            _, rank, _ = rref(mat)
            if rank < c_alpha.k:
                return False
        return True

    def is_acyclic(self) -> bool:
        """Whether the greedy family basis is linearly independent.

        Cross-checked against the inclusion-exclusion dimension identity
        for the sum of the family; a disagreement is logged, not resolved.
        """
        basis = self.family_basis()
        incl_excl = sum(
            (-1) ** (len(alpha) + 1) * self.intersection_code(alpha).k
            for alpha in self.indexes()
        )
        agrees = (incl_excl == self.full_sum().k) == basis.independent
        if not agrees:
            logger.warning(
                "acyclicity tests disagree: basis independent=%s, "
                "inclusion-exclusion gives %s vs rank %s",
                basis.independent, incl_excl, self.full_sum().k,
            )
        return basis.independent

    def is_embedded(self) -> bool:
        """Whether C_i is contained in C_{i+1} in the declared order."""
        return all(
            self.codes[i].is_subcode_of(self.codes[i + 1])
            for i in range(self.s - 1)
        )

    def reversed(self) -> "CodeFamily":
        return CodeFamily(self.codes[::-1])

    def reordered_by_dimension(self) -> "CodeFamily":
        """Convenience reorder into nondecreasing dimension; never implicit."""
        return CodeFamily(sorted(self.codes, key=lambda c: c.k))


def new_family(codes) -> CodeFamily:
    return CodeFamily(codes)
