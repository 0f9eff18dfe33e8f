"""Fractal code construction, dimension formula, and distance bounds.

The constructed code is C_1 (x) D_1 + ... + C_s (x) D_s.  For acyclic
families its dimension is an alternating sum over the intersection
lattice; its distance is sandwiched between a product bound over lattice
codes and a combinatorial bound over subsets of the basis tag sets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .codes import DEFAULT_BUDGET, INFINITE, LinearCode, zero_code
from .errors import BudgetExceededError, HypothesisViolatedError, NotEmbeddedError
from .families import CodeFamily, MultiIndex, minimal_elements, transversals
from .gf2 import BitMatrix, BitVector, kron, kron_matrix

__all__ = [
    "AnalysisReport",
    "construct",
    "dimension_formula",
    "upper_bound",
    "upper_bound_witness",
    "lower_bound",
    "psi_tables",
    "embedded_params",
    "analyze",
    "verify",
]


def _check_sizes(c_family: CodeFamily, d_family: CodeFamily) -> None:
    if c_family.s != d_family.s:
        raise HypothesisViolatedError(
            f"family size mismatch: {c_family.s} vs {d_family.s}"
        )


def construct(c_family: CodeFamily, d_family: CodeFamily) -> LinearCode:
    """The Kronecker-product-sum code of two equal-size families.

    Position (i-1)*n' + j of a product row carries coordinate i of the
    first factor and coordinate j of the second.
    """
    _check_sizes(c_family, d_family)
    rows = []
    for c, d in zip(c_family.codes, d_family.codes):
        rows.extend(kron_matrix(c.generator, d.generator).rows)
    n = c_family.n * d_family.n
    if not rows:
        return zero_code(n)
    return LinearCode(BitMatrix.from_rows(rows, col_count=n))


def dimension_formula(c_family: CodeFamily, d_family: CodeFamily) -> int:
    """Alternating sum of k_alpha * k'_alpha over all nonempty alpha."""
    _check_sizes(c_family, d_family)
    if not (c_family.is_acyclic() and d_family.is_acyclic()):
        raise HypothesisViolatedError(
            "dimension formula requires both families acyclic"
        )
    return sum(
        (-1) ** (len(alpha) + 1)
        * c_family.intersection_code(alpha).k
        * d_family.intersection_code(alpha).k
        for alpha in c_family.indexes()
    )


def _attaining_upper(c_family, d_family, budget):
    """Scan both product-bound forms; return (value, side, alpha)."""
    best = None
    for alpha in c_family.indexes():
        c_inter = c_family.intersection_code(alpha)
        if c_inter.k:
            value = c_inter.min_distance(budget) * d_family.sum_code(alpha).min_distance(budget)
            if best is None or value < best[0]:
                best = (value, "c", alpha)
        d_inter = d_family.intersection_code(alpha)
        if d_inter.k:
            value = c_family.sum_code(alpha).min_distance(budget) * d_inter.min_distance(budget)
            if best is None or value < best[0]:
                best = (value, "d", alpha)
    return best


def upper_bound(
    c_family: CodeFamily, d_family: CodeFamily, budget: int = DEFAULT_BUDGET
) -> int:
    """Product bound: min of d_alpha*d'^alpha and d^beta*d'_beta over the lattice."""
    _check_sizes(c_family, d_family)
    return _attaining_upper(c_family, d_family, budget)[0]


def upper_bound_witness(
    c_family: CodeFamily, d_family: CodeFamily, budget: int = DEFAULT_BUDGET
) -> tuple[BitVector, int]:
    """An explicit product codeword x (x) y of weight equal to the bound."""
    value, side, alpha = _attaining_upper(c_family, d_family, budget)
    if side == "c":
        x = c_family.intersection_code(alpha).min_weight_word(budget)
        y = d_family.sum_code(alpha).min_weight_word(budget)
    else:
        x = c_family.sum_code(alpha).min_weight_word(budget)
        y = d_family.intersection_code(alpha).min_weight_word(budget)
    return kron(x, y), value


@dataclass(frozen=True)
class PsiTableRow:
    psi0: tuple[MultiIndex, ...]
    psi0_star: tuple[MultiIndex, ...]
    value: int


def _half_bound(tag_set, outer_distance, transversal_distance, prune, budget):
    """min over nonempty Psi0 of (max outer over Psi0) * (max over Psi0*)."""
    tags = sorted(tag_set, key=lambda a: (len(a), a.members))
    best = None
    rows = []
    for r in range(1, len(tags) + 1):
        for psi0 in itertools.combinations(tags, r):
            star = transversals(psi0)
            considered = minimal_elements(star) if prune else star
            value = max(outer_distance(a, budget) for a in psi0) * max(
                transversal_distance(b, budget) for b in considered
            )
            rows.append(
                PsiTableRow(
                    psi0,
                    tuple(sorted(star, key=lambda a: (len(a), a.members))),
                    value,
                )
            )
            if best is None or value < best:
                best = value
    return best, rows


def _require_acyclic(c_family: CodeFamily, d_family: CodeFamily) -> None:
    if not c_family.is_acyclic():
        raise HypothesisViolatedError("first family is not acyclic")
    if not d_family.is_acyclic():
        raise HypothesisViolatedError("second family is not acyclic")


def lower_bound(
    c_family: CodeFamily,
    d_family: CodeFamily,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
) -> int:
    """Combinatorial bound over subsets of the two basis tag sets."""
    _check_sizes(c_family, d_family)
    _require_acyclic(c_family, d_family)
    (m1, _), (m2, _) = psi_tables(c_family, d_family, budget=budget, prune=prune)
    return max(m1, m2)


def psi_tables(
    c_family: CodeFamily,
    d_family: CodeFamily,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
):
    """Both halves of the combinatorial bound with their full subset tables.

    Returns ((m1, rows1), (m2, rows2)) where m1 ranges over subsets of the
    first family's tag set and m2 over the second's.
    """
    psi_e = c_family.family_basis().tag_set()
    psi_g = d_family.family_basis().tag_set()

    def d_sum(family):
        return lambda a, b: family.sum_code(a).min_distance(b)

    m1, rows1 = _half_bound(psi_e, d_sum(d_family), d_sum(c_family), prune, budget)
    m2, rows2 = _half_bound(psi_g, d_sum(c_family), d_sum(d_family), prune, budget)
    return (m1, rows1), (m2, rows2)


def embedded_params(
    c_family: CodeFamily, d_family: CodeFamily, budget: int = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Closed-form (dimension, distance) for two embedded families.

    Both families must be declared in increasing order; the closed form
    pairs C_i with D_{s-i+1}, so combining with construct() requires the
    second family reversed.
    """
    _check_sizes(c_family, d_family)
    if not c_family.is_embedded():
        raise NotEmbeddedError("first family is not an increasing chain")
    if not d_family.is_embedded():
        raise NotEmbeddedError("second family is not an increasing chain")
    s = c_family.s
    ks = [c.k for c in c_family.codes]
    kps = [d.k for d in d_family.codes]
    kappa = ks[0] * kps[s - 1]
    for i in range(1, s):
        kappa += (ks[i] - ks[i - 1]) * kps[s - i - 1]
    delta = min(
        c_family.codes[i].min_distance(budget)
        * d_family.codes[s - i - 1].min_distance(budget)
        for i in range(s)
    )
    return kappa, delta


@dataclass
class AlphaRow:
    """Lattice parameters (k_inter, k_sum, d_inter, d_sum) for both families."""

    alpha: MultiIndex
    c_k_inter: int
    c_k_sum: int
    c_d_inter: int | float
    c_d_sum: int
    d_k_inter: int
    d_k_sum: int
    d_d_inter: int | float
    d_d_sum: int


@dataclass
class AnalysisReport:
    """All computed quantities for one pair of families."""

    n: int
    n_prime: int
    s: int
    kappa_formula: int | None
    rank: int
    upper_bound: int
    lower_bound: int | None
    exact_distance: int | None
    c_acyclic: bool
    d_acyclic: bool
    c_embedded: bool
    d_embedded: bool
    theorem_b_applies: bool
    bounds_coincide: bool
    per_alpha_table: list[AlphaRow]
    notes: list[str] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        def num(x):
            if x is None or x is INFINITE or (isinstance(x, float) and math.isinf(x)):
                return None
            return int(x)

        return {
            "n": self.n,
            "n_prime": self.n_prime,
            "s": self.s,
            "kappa_formula": num(self.kappa_formula),
            "rank": self.rank,
            "upper_bound": self.upper_bound,
            "lower_bound": num(self.lower_bound),
            "exact_distance": num(self.exact_distance),
            "c_acyclic": self.c_acyclic,
            "d_acyclic": self.d_acyclic,
            "c_embedded": self.c_embedded,
            "d_embedded": self.d_embedded,
            "theorem_b_applies": self.theorem_b_applies,
            "bounds_coincide": self.bounds_coincide,
            "per_alpha_table": [
                {
                    "alpha": list(row.alpha.members),
                    "c": {
                        "k_inter": row.c_k_inter,
                        "k_sum": row.c_k_sum,
                        "d_inter": num(row.c_d_inter),
                        "d_sum": row.c_d_sum,
                    },
                    "d": {
                        "k_inter": row.d_k_inter,
                        "k_sum": row.d_k_sum,
                        "d_inter": num(row.d_d_inter),
                        "d_sum": row.d_d_sum,
                    },
                }
                for row in self.per_alpha_table
            ],
            "notes": list(self.notes),
        }

    def to_text(self) -> str:
        def show(x):
            if x is None:
                return "n/a"
            if x is INFINITE or (isinstance(x, float) and math.isinf(x)):
                return "inf"
            return str(int(x))

        lines = [
            f"fractal code: n={self.n * self.n_prime} "
            f"(factors {self.n} x {self.n_prime}), s={self.s}",
            f"rank            : {self.rank}",
            f"kappa (formula) : {show(self.kappa_formula)}",
            f"upper bound     : {self.upper_bound}",
            f"lower bound     : {show(self.lower_bound)}",
            f"exact distance  : {show(self.exact_distance)}",
            f"first family    : acyclic={self.c_acyclic} embedded={self.c_embedded}",
            f"second family   : acyclic={self.d_acyclic} embedded={self.d_embedded}",
            f"theorem B       : applies={self.theorem_b_applies} "
            f"bounds_coincide={self.bounds_coincide}",
            "",
            "alpha    C: k_a k^a d_a d^a    D: k_a k^a d_a d^a",
        ]
        for row in self.per_alpha_table:
            lines.append(
                f"{row.alpha.compact():<8} "
                f"   {row.c_k_inter:>3} {row.c_k_sum:>3} "
                f"{show(row.c_d_inter):>3} {row.c_d_sum:>3} "
                f"      {row.d_k_inter:>3} {row.d_k_sum:>3} "
                f"{show(row.d_d_inter):>3} {row.d_d_sum:>3}"
            )
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def _alpha_table(c_family, d_family, budget) -> list[AlphaRow]:
    rows = []
    for alpha in c_family.indexes():
        ci = c_family.intersection_code(alpha)
        cs = c_family.sum_code(alpha)
        di = d_family.intersection_code(alpha)
        ds = d_family.sum_code(alpha)
        rows.append(
            AlphaRow(
                alpha,
                ci.k,
                cs.k,
                ci.min_distance(budget),
                cs.min_distance(budget),
                di.k,
                ds.k,
                di.min_distance(budget),
                ds.min_distance(budget),
            )
        )
    return rows


def analyze(
    c_family: CodeFamily,
    d_family: CodeFamily,
    compute_exact: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> AnalysisReport:
    """Run the full analysis and assemble a report."""
    _check_sizes(c_family, d_family)
    code = construct(c_family, d_family)
    c_acyclic = c_family.is_acyclic()
    d_acyclic = d_family.is_acyclic()
    c_embedded = c_family.is_embedded()
    d_embedded = d_family.is_embedded()
    both_acyclic = c_acyclic and d_acyclic
    notes: list[str] = []
    if c_embedded and any(
        c_family.codes[i].k == c_family.codes[i + 1].k for i in range(c_family.s - 1)
    ):
        notes.append("first family is a degenerate chain (repeated codes)")
    if d_embedded and any(
        d_family.codes[i].k == d_family.codes[i + 1].k for i in range(d_family.s - 1)
    ):
        notes.append("second family is a degenerate chain (repeated codes)")

    kappa = dimension_formula(c_family, d_family) if both_acyclic else None
    upper = upper_bound(c_family, d_family, budget)
    lower = lower_bound(c_family, d_family, budget) if both_acyclic else None
    theorem_b = (c_embedded and d_acyclic) or (d_embedded and c_acyclic)
    bounds_coincide = lower is not None and lower == upper

    exact: int | None = None
    if compute_exact:
        try:
            exact = code.min_distance(budget)
        except BudgetExceededError:
            if theorem_b and bounds_coincide:
                exact = upper
                notes.append(
                    "exact distance taken from the coinciding bounds "
                    "(enumeration over budget)"
                )
            else:
                notes.append("exact distance skipped: enumeration over budget")
    elif theorem_b and bounds_coincide:
        exact = upper
        notes.append("exact distance taken from the coinciding bounds")

    return AnalysisReport(
        n=c_family.n,
        n_prime=d_family.n,
        s=c_family.s,
        kappa_formula=kappa,
        rank=code.k,
        upper_bound=upper,
        lower_bound=lower,
        exact_distance=exact,
        c_acyclic=c_acyclic,
        d_acyclic=d_acyclic,
        c_embedded=c_embedded,
        d_embedded=d_embedded,
        theorem_b_applies=theorem_b,
        bounds_coincide=bounds_coincide,
        per_alpha_table=_alpha_table(c_family, d_family, budget),
        notes=notes,
    )


def verify(report: AnalysisReport, c_family: CodeFamily, d_family: CodeFamily):
    """Cross-check every claim in a report; returns a list of findings."""
    findings = []
    if report.kappa_formula is not None and report.kappa_formula != report.rank:
        findings.append(
            f"dimension formula {report.kappa_formula} != rank {report.rank}"
        )
    if report.exact_distance is not None:
        if report.exact_distance > report.upper_bound:
            findings.append(
                f"exact {report.exact_distance} exceeds upper bound "
                f"{report.upper_bound}"
            )
        if (
            report.lower_bound is not None
            and report.exact_distance < report.lower_bound
        ):
            findings.append(
                f"exact {report.exact_distance} below lower bound "
                f"{report.lower_bound}"
            )
    if report.theorem_b_applies:
        if report.lower_bound != report.upper_bound:
            findings.append(
                "coincidence theorem applies but bounds differ: "
                f"lower {report.lower_bound}, upper {report.upper_bound}"
            )
        elif (
            report.exact_distance is not None
            and report.exact_distance != report.upper_bound
        ):
            findings.append(
                f"coinciding bounds {report.upper_bound} != exact "
                f"{report.exact_distance}"
            )
    return findings
