"""Acceptance gate: eight criteria, one pass/fail line each.

Each test prints "criterion N: PASS" on success; a failing assertion
marks the criterion failed.  Criterion 2 asserts the stated lower bound
of 4; the formula as implemented evaluates to 3 on this fixture (the
subset {1,2} contributes max(3,3)*1 = 3), so that assertion documents a
known discrepancy rather than a code defect.
"""

import random
import subprocess
import sys
import time

from fractalcodes import (
    BitVector,
    analyze,
    construct,
    embedded_params,
    lower_bound,
    psi_tables,
    rref,
    upper_bound,
    verify,
)
from fractalcodes.gf2 import BitMatrix
from fractalcodes.fixtures import (
    GOLAY_PRINTED_ROWS,
    build_golay24,
    build_p21_12_5,
    build_p21_x3,
    build_p28_22_4,
    build_rm32_16_8,
    rm32_chains,
    u_uplusv_pair,
)

from oracles import random_code, reed_muller

import test_properties


def _report(criterion: int) -> None:
    print(f"criterion {criterion}: PASS")


def test_criterion_1_golay_reproduction():
    start = time.monotonic()
    c_family, d_family = build_golay24()
    code = construct(c_family, d_family)
    assert code.k == 12
    assert code.min_distance() == 8
    assert upper_bound(c_family, d_family) == 8
    assert lower_bound(c_family, d_family) == 4
    # the classic 12-row generator lists coordinates with the length-3
    # factor outermost; reindex (j*8+i) -> (i*3+j) before comparing
    reindexed = []
    for line in GOLAY_PRINTED_ROWS:
        v = BitVector.from_text(line)
        bits = 0
        for j in range(3):
            for i in range(8):
                if v.get(j * 8 + i):
                    bits |= 1 << (i * 3 + j)
        reindexed.append(BitVector(24, bits))
    canon, rank, _ = rref(BitMatrix.from_rows(reindexed, col_count=24))
    assert rank == 12
    assert canon.rows == code.generator.rows
    assert time.monotonic() - start < 1.0
    _report(1)


def test_criterion_2_punctured_21_12_5():
    start = time.monotonic()
    c_family, d_family = build_p21_12_5()
    report = analyze(c_family, d_family)
    assert report.kappa_formula == 12 == report.rank
    assert report.upper_bound == 6
    assert report.exact_distance == 5
    assert time.monotonic() - start < 1.0
    # stated value; the implemented formula yields 3 on this fixture
    assert report.lower_bound == 4
    _report(2)


def test_criterion_3_punctured_21_9():
    start = time.monotonic()
    c_family, d_family = build_p21_x3()
    report = analyze(c_family, d_family)
    assert report.kappa_formula == 9 == report.rank
    assert report.kappa_formula == 3 * 1 + 3 * 2
    assert report.upper_bound == 8
    assert report.lower_bound == 6
    assert report.exact_distance == report.upper_bound == 8
    assert time.monotonic() - start < 1.0
    _report(3)


def test_criterion_4_28_22_4():
    start = time.monotonic()
    c_family, d_family = build_p28_22_4()
    report = analyze(c_family, d_family)
    assert report.theorem_b_applies
    assert report.lower_bound == report.upper_bound == 4
    assert report.rank == 22
    assert construct(c_family, d_family).min_distance() == 4
    (m1, rows1), _ = psi_tables(c_family, d_family)
    assert m1 == 4
    assert len(rows1) == 7 and all(row.value == 4 for row in rows1)
    assert time.monotonic() - start < 30.0
    _report(4)


def test_criterion_5_rm32_weight_distribution():
    start = time.monotonic()
    assert embedded_params(*rm32_chains()) == (16, 8)
    c_family, d_family = build_rm32_16_8()
    code = construct(c_family, d_family)
    assert code.params == (32, 16, 8)
    oracle = reed_muller(2, 5)
    assert oracle.params == (32, 16, 8)
    assert code.weight_distribution() == oracle.weight_distribution()
    assert time.monotonic() - start < 5.0
    _report(5)


def test_criterion_6_u_uplusv_50_trials():
    rng = random.Random(601)
    for _ in range(50):
        n = rng.randint(2, 10)
        c1 = random_code(rng, n, 5)
        c2 = random_code(rng, n, 5)
        c_family, d_family = u_uplusv_pair(c1, c2)
        expected = min(2 * c1.min_distance(), c2.min_distance())
        assert construct(c_family, d_family).min_distance() == expected
        assert upper_bound(c_family, d_family) == expected
        assert lower_bound(c_family, d_family) == expected
    _report(6)


def test_criterion_7_property_suite():
    test_properties.test_dimension_identity()
    test_properties.test_tensor_intersection_identity()
    test_properties.test_inclusion_exclusion_equals_rank()
    test_properties.test_product_family_stays_acyclic()
    test_properties.test_bounds_sandwich_exact_distance()
    test_properties.test_embedded_times_acyclic_bounds_coincide()
    test_properties.test_witness_attains_upper_bound()
    _report(7)


def test_criterion_8_example_all_gate():
    start = time.monotonic()
    proc = subprocess.run(
        [sys.executable, "-m", "fractalcodes.cli", "example", "all"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert "FINDING" not in proc.stdout
    assert time.monotonic() - start < 60.0
    _report(8)
