"""Built-in example constructions with their expected parameters.

Each fixture builds a pair of code families whose Kronecker-product-sum
is a classical code (Golay, Reed-Muller, |u|u+v|, Turyn's three-block
construction) or a small optimal code, together with the values its
analysis report is expected to show.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .codes import LinearCode, even_weight, from_text, puncture, repetition, universe
from .families import CodeFamily

__all__ = ["ExampleFixture", "FIXTURES", "get_fixture"]

# (8,4,4) component codes of the Golay construction.
GOLAY_C1_ROWS = ["...11.11", "..11.1.1", ".11.1..1", "11.1...1"]
GOLAY_C2_ROWS = ["1.11...1", ".1.11..1", "..1.11.1", "...1.111"]
# (3,1,3) and (3,2,2) second-factor codes.
GOLAY_D1_ROWS = ["111"]
GOLAY_D2_ROWS = [".11", "11."]

# The classical 12-row (24,12,8) Golay generator, written with the
# length-3 factor outermost (blocks of 8); coordinate (j, i) there maps
# to position i*3 + j in this package's product convention.
GOLAY_PRINTED_ROWS = [
    "...11.11...11.11...11.11",
    "..11.1.1..11.1.1..11.1.1",
    ".11.1..1.11.1..1.11.1..1",
    "11.1...111.1...111.1...1",
    "........1.11...11.11...1",
    ".........1.11..1.1.11..1",
    "..........1.11.1..1.11.1",
    "...........1.111...1.111",
    "1.11...11.11...1........",
    ".1.11..1.1.11..1........",
    "..1.11.1..1.11.1........",
    "...1.111...1.111........",
]


def _golay_c_codes() -> tuple[LinearCode, LinearCode]:
    return from_text(GOLAY_C1_ROWS), from_text(GOLAY_C2_ROWS)


def _golay_d_family() -> CodeFamily:
    return CodeFamily([from_text(GOLAY_D1_ROWS), from_text(GOLAY_D2_ROWS)])


def build_golay24() -> tuple[CodeFamily, CodeFamily]:
    c1, c2 = _golay_c_codes()
    return CodeFamily([c1, c2]), _golay_d_family()


def build_p21_12_5() -> tuple[CodeFamily, CodeFamily]:
    # Dropping the last coordinate of both first-factor codes gives
    # (7,4,3)-codes meeting in the all-ones vector.
    c1, c2 = _golay_c_codes()
    return (
        CodeFamily([puncture(c1, 7), puncture(c2, 7)]),
        _golay_d_family(),
    )


def build_p21_x3() -> tuple[CodeFamily, CodeFamily]:
    # (7,3,4)-codes with zero intersection: drop the first row and the
    # next-to-last column from one factor, the last row and the same
    # column from the other.
    c1 = puncture(from_text(GOLAY_C1_ROWS[1:]), 6)
    c2 = puncture(from_text(GOLAY_C2_ROWS[:3]), 6)
    return CodeFamily([c1, c2]), _golay_d_family()


def build_p28_22_4() -> tuple[CodeFamily, CodeFamily]:
    # Embedded chain (7,3,4) < (7,6,2) < (7,7,1) against the decreasing
    # chain (4,4,1) > (4,3,2) > (4,1,4).
    c1 = puncture(from_text(GOLAY_C2_ROWS[:3]), 6)
    c_family = CodeFamily([c1, even_weight(7), universe(7)])
    d_family = CodeFamily([universe(4), even_weight(4), repetition(4)])
    return c_family, d_family


# First-order Reed-Muller code of length 8: the (8,4,4) extended Hamming
# code, nested between the repetition and even-weight codes.
RM_1_3_ROWS = ["11111111", ".1.1.1.1", "..11..11", "....1111"]


def rm32_chains() -> tuple[CodeFamily, CodeFamily]:
    """Both chains in increasing order, as the closed forms expect."""
    c_family = CodeFamily([repetition(4), even_weight(4), universe(4)])
    d_family = CodeFamily([repetition(8), from_text(RM_1_3_ROWS), even_weight(8)])
    return c_family, d_family


def build_rm32_16_8() -> tuple[CodeFamily, CodeFamily]:
    # The construct pairing wants the second chain reversed.
    c_family, d_family = rm32_chains()
    return c_family, d_family.reversed()


def build_u_uplusv() -> tuple[CodeFamily, CodeFamily]:
    # |u|u+v| shape: second factors span{11} and span{01}.
    c1 = from_text(["11..", "..11"])  # (4,2,2)
    c2 = even_weight(4)  # (4,3,2)
    d_family = CodeFamily([from_text(["11"]), from_text([".1"])])
    return CodeFamily([c1, c2]), d_family


def u_uplusv_pair(c1: LinearCode, c2: LinearCode) -> tuple[CodeFamily, CodeFamily]:
    """The |u|u+v| families for arbitrary equal-length first factors."""
    d_family = CodeFamily([from_text(["11"]), from_text([".1"])])
    return CodeFamily([c1, c2]), d_family


def build_turyn_axbx() -> tuple[CodeFamily, CodeFamily]:
    # |a+x|b+x|a+b+x| shape: second factors (3,1,3) and (3,2,2); the
    # first factors here are small even-weight codes.
    c1 = from_text(["11..", "..11"])  # (4,2,2)
    c2 = even_weight(4)  # (4,3,2)
    return CodeFamily([c1, c2]), _golay_d_family()


@dataclass(frozen=True)
class ExampleFixture:
    name: str
    title: str
    build: Callable[[], tuple[CodeFamily, CodeFamily]]
    expected: dict = field(default_factory=dict)


FIXTURES: dict[str, ExampleFixture] = {
    f.name: f
    for f in [
        ExampleFixture(
            "golay24",
            "(24,12,8) Golay code from two (8,4,4)-codes",
            build_golay24,
            expected={
                "rank": 12,
                "kappa_formula": 12,
                "upper_bound": 8,
                "lower_bound": 4,
                "exact_distance": 8,
                "theorem_b_applies": False,
            },
        ),
        ExampleFixture(
            "p21_12_5",
            "(21,12,5) optimal code; upper bound 6 not attained",
            build_p21_12_5,
            # The subset minimum evaluates to 3: the pair {1,2} yields
            # max(d^1, d^2) * d'(D1+D2) = 3 * 1.  The often-quoted 4 for
            # this construction uses the unpunctured factor distance 4.
            expected={
                "rank": 12,
                "kappa_formula": 12,
                "upper_bound": 6,
                "lower_bound": 3,
                "exact_distance": 5,
            },
        ),
        ExampleFixture(
            "p21_x3",
            "(21,9,8) optimal code from two (7,3,4)-codes with zero intersection",
            build_p21_x3,
            # Dimension 9 by the alternating sum 3*1 + 3*2 - 0; the
            # distance equals the attained upper bound 8.
            expected={
                "rank": 9,
                "kappa_formula": 9,
                "upper_bound": 8,
                "lower_bound": 6,
                "exact_distance": 8,
            },
        ),
        ExampleFixture(
            "p28_22_4",
            "(28,22,4) optimal code; embedded chain, bounds coincide",
            build_p28_22_4,
            expected={
                "rank": 22,
                "kappa_formula": 22,
                "upper_bound": 4,
                "lower_bound": 4,
                "exact_distance": 4,
                "theorem_b_applies": True,
            },
        ),
        ExampleFixture(
            "rm32_16_8",
            "(32,16,8) code, same weight distribution as second-order Reed-Muller",
            build_rm32_16_8,
            expected={
                "rank": 16,
                "kappa_formula": 16,
                "upper_bound": 8,
                "lower_bound": 8,
                "exact_distance": 8,
                "theorem_b_applies": True,
            },
        ),
        ExampleFixture(
            "u_uplusv",
            "|u|u+v| construction; distance min(2*d1, d2)",
            build_u_uplusv,
            expected={
                "rank": 5,
                "upper_bound": 2,
                "lower_bound": 2,
                "exact_distance": 2,
            },
        ),
        ExampleFixture(
            "turyn_axbx",
            "|a+x|b+x|a+b+x| construction on small even-weight factors",
            build_turyn_axbx,
            # Rank 2*1 + 3*2 - 2*0 = 8; the chain C1 < C2 makes the
            # bounds coincide at 2 = d(C1) * d(D1 + D2).
            expected={
                "rank": 8,
                "kappa_formula": 8,
                "upper_bound": 2,
                "lower_bound": 2,
                "exact_distance": 2,
                "theorem_b_applies": True,
            },
        ),
    ]
}


def get_fixture(name: str) -> ExampleFixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(
            f"unknown example {name!r}; available: {', '.join(sorted(FIXTURES))}"
        ) from None
