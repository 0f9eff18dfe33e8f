import json
import random

import pytest

from fractalcodes import (
    BitVector,
    CodeFamily,
    HypothesisViolatedError,
    NotEmbeddedError,
    analyze,
    construct,
    dimension_formula,
    embedded_params,
    from_text,
    lower_bound,
    psi_tables,
    tensor_product,
    upper_bound,
    upper_bound_witness,
    verify,
)
from fractalcodes.gf2 import BitMatrix, rref
from fractalcodes.fixtures import (
    GOLAY_PRINTED_ROWS,
    build_golay24,
    build_p21_12_5,
    build_p21_x3,
    build_p28_22_4,
    build_rm32_16_8,
    build_u_uplusv,
    rm32_chains,
    u_uplusv_pair,
)

from oracles import random_acyclic_family, random_code, random_embedded_chain


def transpose_product_rows(rows, n, n_prime):
    """Reindex rows written with the second factor outermost."""
    out = []
    for line in rows:
        v = BitVector.from_text(line)
        bits = 0
        for j in range(n_prime):
            for i in range(n):
                if v.get(j * n + i):
                    bits |= 1 << (i * n_prime + j)
        out.append(BitVector(n * n_prime, bits))
    return out


class TestConstruct:
    def test_golay_row_space_matches_classic_generator(self):
        c_family, d_family = build_golay24()
        code = construct(c_family, d_family)
        assert code.params == (24, 12, 8)
        classic = transpose_product_rows(GOLAY_PRINTED_ROWS, 8, 3)
        canon, rank, _ = rref(BitMatrix.from_rows(classic, col_count=24))
        assert rank == 12
        assert canon.rows == code.generator.rows

    def test_single_summand_is_tensor_product(self):
        c = from_text(["...11.11", "..11.1.1", ".11.1..1", "11.1...1"])
        d = from_text(["111"])
        code = construct(CodeFamily([c]), CodeFamily([d]))
        assert code == tensor_product(c, d)
        assert code.params == (24, 4, 12)

    def test_u_uplusv_shape(self):
        c_family, d_family = build_u_uplusv()
        code = construct(c_family, d_family)
        c1, c2 = c_family.codes
        # codewords are u at even positions, u+v at odd positions
        for word in code.codewords():
            u = BitVector(c1.n, sum(word.get(2 * i) << i for i in range(c1.n)))
            upv = BitVector(c1.n, sum(word.get(2 * i + 1) << i for i in range(c1.n)))
            assert c1.contains(u)
            assert c2.contains(u ^ upv)

    def test_size_mismatch(self):
        c_family, _ = build_golay24()
        with pytest.raises(HypothesisViolatedError):
            construct(c_family, CodeFamily([from_text(["111"])]))


class TestDimensionFormula:
    def test_examples(self):
        assert dimension_formula(*build_golay24()) == 12
        assert dimension_formula(*build_p21_12_5()) == 12
        assert dimension_formula(*build_p21_x3()) == 9
        assert dimension_formula(*build_p28_22_4()) == 22

    def test_single_code(self):
        c = from_text(["1100", "0011"])
        d = from_text(["101"])
        assert dimension_formula(CodeFamily([c]), CodeFamily([d])) == c.k * d.k

    def test_non_acyclic_rejected(self):
        lines = CodeFamily([from_text(["10"]), from_text(["01"]), from_text(["11"])])
        other = CodeFamily([from_text(["1"])] * 3)
        with pytest.raises(HypothesisViolatedError):
            dimension_formula(lines, other)

    def test_matches_rank_on_random_acyclic(self):
        rng = random.Random(101)
        for _ in range(40):
            s = rng.randint(1, 3)
            c_family = random_acyclic_family(rng, rng.randint(2, 6), s, 2)
            d_family = random_acyclic_family(rng, rng.randint(2, 6), s, 2)
            assert dimension_formula(c_family, d_family) == construct(
                c_family, d_family
            ).k


class TestBounds:
    def test_upper_examples(self):
        assert upper_bound(*build_golay24()) == 8
        assert upper_bound(*build_p21_12_5()) == 6
        assert upper_bound(*build_p21_x3()) == 8
        assert upper_bound(*build_p28_22_4()) == 4

    def test_lower_examples(self):
        assert lower_bound(*build_golay24()) == 4
        assert lower_bound(*build_p21_x3()) == 6
        assert lower_bound(*build_p28_22_4()) == 4

    def test_lower_21_12_5_direct_evaluation(self):
        # the subset {1,2} forces max(d^1,d^2)*d'(D1+D2) = 3*1 = 3 in both
        # halves; 3 is the exact value of the subset minimum here
        c_family, d_family = build_p21_12_5()
        assert lower_bound(c_family, d_family) == 3
        (m1, _), (m2, _) = psi_tables(c_family, d_family)
        assert (m1, m2) == (3, 3)

    def test_golay_psi_tables_match_hand_calculation(self):
        c_family, d_family = build_golay24()
        (m1, rows1), (m2, rows2) = psi_tables(c_family, d_family)
        assert (m1, m2) == (4, 4)
        values1 = {
            tuple(a.compact() for a in row.psi0): row.value for row in rows1
        }
        assert values1[("1",)] == 12
        assert values1[("2",)] == 8
        assert values1[("12",)] == 4
        assert values1[("1", "12")] == 12
        assert values1[("2", "12")] == 8
        assert values1[("1", "2")] == 6
        assert values1[("1", "2", "12")] == 6
        values2 = {
            tuple(a.compact() for a in row.psi0): row.value for row in rows2
        }
        assert values2 == {("1",): 12, ("2",): 8, ("1", "2"): 4}

    def test_all_m1_rows_equal_4_for_28_22_4(self):
        c_family, d_family = build_p28_22_4()
        (m1, rows1), _ = psi_tables(c_family, d_family)
        assert m1 == 4
        assert len(rows1) == 7
        assert all(row.value == 4 for row in rows1)

    def test_pruning_never_changes_result(self):
        for build in (build_golay24, build_p21_12_5, build_p21_x3,
                      build_p28_22_4, build_rm32_16_8, build_u_uplusv):
            c_family, d_family = build()
            assert lower_bound(c_family, d_family, prune=True) == lower_bound(
                c_family, d_family, prune=False
            )

    def test_lower_requires_acyclic(self):
        lines = CodeFamily([from_text(["10"]), from_text(["01"]), from_text(["11"])])
        other = CodeFamily([from_text(["1"])] * 3)
        with pytest.raises(HypothesisViolatedError):
            lower_bound(lines, other)

    def test_witness_certifies_upper_bound(self):
        for build in (build_golay24, build_p21_12_5, build_p21_x3,
                      build_p28_22_4):
            c_family, d_family = build()
            witness, claimed = upper_bound_witness(c_family, d_family)
            assert claimed == upper_bound(c_family, d_family)
            assert witness.weight == claimed
            assert construct(c_family, d_family).contains(witness)


class TestEmbeddedParams:
    def test_rm32(self):
        assert embedded_params(*rm32_chains()) == (16, 8)

    def test_28_22_4(self):
        c_family, d_family = build_p28_22_4()
        assert embedded_params(c_family, d_family.reversed()) == (22, 4)

    def test_single_code(self):
        c = from_text(["1100", "0011"])
        d = from_text(["110", "011"])
        assert embedded_params(CodeFamily([c]), CodeFamily([d])) == (
            c.k * d.k,
            c.min_distance() * d.min_distance(),
        )

    def test_not_embedded_rejected(self):
        c_family, d_family = build_golay24()
        with pytest.raises(NotEmbeddedError):
            embedded_params(c_family, d_family)

    def test_agrees_with_construct_on_random_chains(self):
        rng = random.Random(103)
        for _ in range(25):
            s = rng.randint(1, 3)
            c_family = random_embedded_chain(rng, rng.randint(2, 5), s)
            d_family = random_embedded_chain(rng, rng.randint(2, 5), s)
            kappa, delta = embedded_params(c_family, d_family)
            code = construct(c_family, d_family.reversed())
            assert code.k == kappa
            assert code.min_distance() == delta


class TestAnalyzeVerify:
    def test_report_28_22_4(self):
        c_family, d_family = build_p28_22_4()
        report = analyze(c_family, d_family)
        assert report.theorem_b_applies
        assert report.upper_bound == report.lower_bound == 4
        assert report.rank == 22
        assert verify(report, c_family, d_family) == []

    def test_report_golay(self):
        c_family, d_family = build_golay24()
        report = analyze(c_family, d_family)
        assert not report.theorem_b_applies
        assert (report.upper_bound, report.lower_bound) == (8, 4)
        assert report.exact_distance == 8
        assert verify(report, c_family, d_family) == []

    def test_report_21_12_5(self):
        c_family, d_family = build_p21_12_5()
        report = analyze(c_family, d_family)
        assert report.upper_bound == 6
        assert report.exact_distance == 5
        assert not report.bounds_coincide

    def test_non_acyclic_still_analyzed(self):
        lines = CodeFamily([from_text(["10"]), from_text(["01"]), from_text(["11"])])
        other = CodeFamily([from_text(["11"]), from_text(["11"]), from_text(["11"])])
        report = analyze(lines, other)
        assert report.kappa_formula is None
        assert report.lower_bound is None
        assert report.rank == construct(lines, other).k
        assert report.exact_distance is not None

    def test_budget_skip_downgrades_exact(self):
        c_family, d_family = build_golay24()
        # enough for every component enumeration but not the 2^12 full code
        report = analyze(c_family, d_family, budget=1 << 10)
        assert report.exact_distance is None
        assert any("budget" in note for note in report.notes)

    def test_theorem_b_fast_path_over_budget(self):
        c_family, d_family = build_p28_22_4()
        report = analyze(c_family, d_family, budget=1 << 10)
        assert report.exact_distance == 4
        assert any("coinciding" in note for note in report.notes)

    def test_corrupted_report_yields_finding(self):
        c_family, d_family = build_golay24()
        report = analyze(c_family, d_family)
        report.upper_bound = 7
        findings = verify(report, c_family, d_family)
        assert any("exceeds upper" in f for f in findings)

    def test_embedded_times_embedded_fuzz(self):
        rng = random.Random(107)
        for _ in range(20):
            s = rng.randint(1, 3)
            c_family = random_embedded_chain(rng, rng.randint(2, 6), s)
            d_family = random_embedded_chain(rng, rng.randint(2, 6), s)
            report = analyze(c_family, d_family)
            assert verify(report, c_family, d_family) == []

    def test_json_dict_roundtrip(self):
        c_family, d_family = build_golay24()
        report = analyze(c_family, d_family)
        blob = json.dumps(report.to_json_dict())
        parsed = json.loads(blob)
        assert parsed["rank"] == 12
        assert parsed["kappa_formula"] == 12
        assert parsed["upper_bound"] == 8
        assert parsed["exact_distance"] == 8
        # the zero intersection of the second family serializes as null
        row12 = next(r for r in parsed["per_alpha_table"] if r["alpha"] == [1, 2])
        assert row12["d"]["d_inter"] is None

    def test_text_report_carries_same_numbers(self):
        c_family, d_family = build_golay24()
        report = analyze(c_family, d_family)
        text = report.to_text()
        assert "rank            : 12" in text
        assert "upper bound     : 8" in text
        assert "lower bound     : 4" in text
        assert "exact distance  : 8" in text


class TestUUplusV:
    def test_distance_formula_over_random_pairs(self):
        rng = random.Random(109)
        for _ in range(20):
            n = rng.randint(2, 8)
            c1 = random_code(rng, n, 4)
            c2 = random_code(rng, n, 4)
            c_family, d_family = u_uplusv_pair(c1, c2)
            expected = min(2 * c1.min_distance(), c2.min_distance())
            assert construct(c_family, d_family).min_distance() == expected
            assert upper_bound(c_family, d_family) == expected
            assert lower_bound(c_family, d_family) == expected
