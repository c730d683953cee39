"""Verification harness tests.

The generator is pinned to the published splitmix64 test vectors so that a
counterexample reported here can be reproduced by an independent
implementation.  Negative controls check that the harness fails when it
should: a corrupted composition rule and two subspaces that are not closed.
"""

import pytest

from quatype.blades import Signature
from quatype.multivector import Field, Multivector
from quatype.qtype import OpKind, QType, SubspacePattern, main_compose
from quatype.verify import (
    CheckConfig,
    CheckStatus,
    SplitMix64,
    Strategy,
    UnknownCheck,
    WC_PATTERN,
    check_grade_pattern,
    check_pattern_closure,
    check_quaternion_axioms,
    check_rank_coincidence,
    check_subalgebra_theorems,
    check_theorem5,
    check_theorem6,
    check_theorem6_7,
    check_theorem7,
    check_type_table,
    check_wc_membership,
    closure_catalog,
    derive_subseed,
    fnv1a64,
    is_in_wc,
    is_pseudo_unitary,
    resolve_suite,
    run_suite,
    sample_pattern_mv,
)

S22 = Signature(2, 2)


def cfg_for(sig: Signature, **kw) -> CheckConfig:
    defaults = dict(seed=0, samples=25, tol=0.0)
    defaults.update(kw)
    return CheckConfig(sig=sig, **defaults)


# ----------------------------------------------------------------------
# generator pinning

def test_splitmix64_reference_vectors():
    g = SplitMix64(0)
    assert [g.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]
    g = SplitMix64(0x123456789ABCDEF)
    assert g.next_u64() == 0x157A3807A48FAA9D


def test_fnv1a64_reference_vectors():
    assert fnv1a64("") == 0xCBF29CE484222325
    assert fnv1a64("a") == 0xAF63DC4C8601EC8C


def test_subseed_depends_on_name_and_seed():
    assert derive_subseed(0, "grades") != derive_subseed(0, "wc")
    assert derive_subseed(0, "grades") != derive_subseed(1, "grades")
    assert derive_subseed(5, "rank") == derive_subseed(5, "rank")


def test_next_int_range():
    g = SplitMix64(99)
    draws = [g.next_int(-3, 3) for _ in range(500)]
    assert min(draws) == -3
    assert max(draws) == 3


def test_sample_pattern_respects_pattern():
    g = SplitMix64(3)
    p = SubspacePattern.from_parts(real="02", imag="1")
    for _ in range(20):
        u = sample_pattern_mv(S22, p, g, Field.COMPLEX)
        assert p.matches(u, 0.0)


# ----------------------------------------------------------------------
# config plumbing

def test_config_auto_strategy():
    assert CheckConfig(sig=Signature(3, 3)).strategy is Strategy.EXHAUSTIVE
    assert CheckConfig(sig=Signature(4, 3)).strategy is Strategy.RANDOM
    explicit = CheckConfig(sig=Signature(2, 2), strategy=Strategy.RANDOM)
    assert explicit.strategy is Strategy.RANDOM


def test_config_validation():
    with pytest.raises(ValueError):
        CheckConfig(sig=S22, samples=0)
    with pytest.raises(ValueError):
        CheckConfig(sig=S22, tol=-1.0)
    with pytest.raises(TypeError):
        CheckConfig(sig="Cl(2,2)")
    with pytest.raises(ValueError):
        CheckConfig(sig=S22, exp_max_terms=0)


# ----------------------------------------------------------------------
# positive checks

def test_axioms_exhaustive_pass_and_case_count():
    report = check_quaternion_axioms(OpKind.ANTICOMMUTATOR, cfg_for(S22))
    assert report.status is CheckStatus.PASS
    assert report.cases_run == 256  # all 16x16 blade pairs
    assert report.counterexample is None
    report = check_quaternion_axioms(OpKind.COMMUTATOR, cfg_for(S22))
    assert report.status is CheckStatus.PASS


def test_axioms_random_mode_passes():
    cfg = cfg_for(S22, strategy=Strategy.RANDOM, samples=64)
    for op in (OpKind.COMMUTATOR, OpKind.ANTICOMMUTATOR):
        report = check_quaternion_axioms(op, cfg)
        assert report.status is CheckStatus.PASS
        assert report.cases_run >= 64


def test_axioms_reject_geometric_op():
    with pytest.raises(ValueError):
        check_quaternion_axioms(OpKind.GEOMETRIC, cfg_for(S22))


def test_axioms_trivial_at_n1():
    report = check_quaternion_axioms(OpKind.COMMUTATOR, cfg_for(Signature(1, 0)))
    assert report.status is CheckStatus.PASS


def test_grade_pattern_passes_both_modes():
    assert check_grade_pattern(cfg_for(S22)).status is CheckStatus.PASS
    random_cfg = cfg_for(Signature(4, 3), strategy=Strategy.RANDOM, samples=100)
    assert check_grade_pattern(random_cfg).status is CheckStatus.PASS


def test_type_table_sound_all_ops():
    for op in OpKind:
        report = check_type_table(op, cfg_for(S22, samples=50))
        assert report.status is CheckStatus.PASS
        assert "coverage" in report.notes


def test_closure_catalog_counts():
    entries = closure_catalog()
    assert len(entries) == 43
    by_op = {}
    for op, field, _ in entries:
        by_op[(op, field)] = by_op.get((op, field), 0) + 1
    assert by_op[(OpKind.GEOMETRIC, Field.REAL)] == 1
    assert by_op[(OpKind.GEOMETRIC, Field.COMPLEX)] == 4
    assert by_op[(OpKind.COMMUTATOR, Field.REAL)] == 4
    assert by_op[(OpKind.COMMUTATOR, Field.COMPLEX)] == 15
    assert by_op[(OpKind.ANTICOMMUTATOR, Field.REAL)] == 4
    assert by_op[(OpKind.ANTICOMMUTATOR, Field.COMPLEX)] == 15


def test_all_closures_pass_at_several_signatures():
    for sig in (Signature(4, 0), Signature(2, 2), Signature(1, 3)):
        for report in check_subalgebra_theorems(cfg_for(sig, samples=20)):
            assert report.status is CheckStatus.PASS, report.name


def test_theorem5_passes():
    for sig in (S22, Signature(4, 1)):
        report = check_theorem5(cfg_for(sig, samples=30))
        assert report.status is CheckStatus.PASS
        assert report.cases_run == 10 * (30 + 1)


def test_theorem6_and_7_pass():
    reports = check_theorem6_7(cfg_for(S22, samples=15))
    assert len(reports) == 8
    for report in reports:
        assert report.status is CheckStatus.PASS, report.name


def test_theorem7_exp_respects_config_budget():
    cfg = cfg_for(S22, samples=5, exp_max_terms=1)
    from quatype.multivector import ConvergenceFailure
    with pytest.raises(ConvergenceFailure):
        check_theorem7(cfg)


def test_wc_membership_check_passes():
    assert check_wc_membership(cfg_for(S22, samples=50)).status is CheckStatus.PASS


def test_rank_coincidence_small_and_skip():
    for n, expected in ((1, CheckStatus.PASS), (3, CheckStatus.PASS),
                        (4, CheckStatus.SKIPPED)):
        report = check_rank_coincidence(cfg_for(Signature(n, 0), samples=20))
        assert report.status is expected


# ----------------------------------------------------------------------
# membership predicates

def test_is_pseudo_unitary_examples():
    e = Multivector.scalar(S22, 1)
    assert is_pseudo_unitary(e, 0.0)
    assert not is_pseudo_unitary(e.scale(2), 1e-9)
    import math
    sig = Signature(2, 0)
    rot = Multivector(sig, Field.REAL,
                      {0: math.cos(0.7), 0b11: math.sin(0.7)})
    assert is_pseudo_unitary(rot, 1e-15)


def test_is_in_wc_examples():
    assert is_in_wc(Multivector.scalar(S22, 1j), 0.0)
    assert is_in_wc(Multivector.basis_blade(S22, 0b11, 1), 0.0)
    assert not is_in_wc(Multivector.basis_blade(S22, 0b1, 1), 1e-9)
    assert WC_PATTERN.matches(Multivector.scalar(S22, 1j), 0.0)


# ----------------------------------------------------------------------
# negative controls

def test_corrupted_rule_fails():
    def bad_rule(op, a, b):
        value = main_compose(op, a, b)
        return (value + 1) & 3 if (a, b) == (1, 1) else value

    report = check_quaternion_axioms(OpKind.COMMUTATOR, cfg_for(S22),
                                     rule=bad_rule)
    assert report.status is CheckStatus.FAIL
    assert report.counterexample is not None
    assert report.counterexample.magnitude > 0


def test_non_closed_patterns_fail():
    bad1 = SubspacePattern.from_parts(real="1")
    report = check_pattern_closure(OpKind.COMMUTATOR, bad1, cfg_for(S22))
    assert report.status is CheckStatus.FAIL
    bad2 = SubspacePattern.from_parts(real="12")
    report = check_pattern_closure(OpKind.ANTICOMMUTATOR, bad2, cfg_for(S22))
    assert report.status is CheckStatus.FAIL


def test_fail_report_magnitude_exceeds_tol():
    bad = SubspacePattern.from_parts(real="1")
    report = check_pattern_closure(OpKind.COMMUTATOR, bad, cfg_for(S22, tol=0.5))
    if report.counterexample is not None:
        assert report.counterexample.magnitude > 0.5


# ----------------------------------------------------------------------
# suite plumbing

def test_resolve_suite_expansion():
    assert resolve_suite(["axioms"]) == ["axioms:anticomm", "axioms:comm"]
    assert resolve_suite(["tables"]) == \
        ["tables:product", "tables:comm", "tables:anticomm"]
    assert resolve_suite(["grades", "grades"]) == ["grades"]
    all_leaves = resolve_suite(["all"])
    assert all_leaves[0] == "axioms:anticomm"
    assert "rank" in all_leaves
    assert len(all_leaves) == len(set(all_leaves))
    assert resolve_suite(["theorems"]) == \
        ["closures", "theorem5", "theorem6", "theorem7", "wc"]


def test_run_suite_unknown_check():
    with pytest.raises(UnknownCheck):
        run_suite(["bogus"], cfg_for(S22))


def test_run_suite_deterministic():
    cfg = cfg_for(S22, seed=42, samples=10)
    first = run_suite(["axioms", "grades"], cfg)
    second = run_suite(["axioms", "grades"], cfg)
    assert [r.to_dict() for r in first] == [r.to_dict() for r in second]
    assert all(r.status is CheckStatus.PASS for r in first)


def test_reports_independent_of_suite_composition():
    cfg = cfg_for(S22, seed=7, samples=10)
    alone = run_suite(["wc"], cfg)[0]
    with_others = [r for r in run_suite(["theorems"], cfg) if r.name == "wc"][0]
    assert alone.to_dict() == with_others.to_dict()


def test_report_serialization_shape():
    report = run_suite(["rank"], cfg_for(Signature(2, 1), samples=5))[0]
    d = report.to_dict()
    assert set(d) == {"name", "status", "cases_run", "counterexample", "notes"}
    assert d["status"] == "pass"

    failing = check_pattern_closure(OpKind.COMMUTATOR,
                                    SubspacePattern.from_parts(real="1"),
                                    cfg_for(S22))
    d = failing.to_dict()
    assert d["status"] == "fail"
    assert set(d["counterexample"]) == \
        {"lhs", "rhs", "operation", "component", "magnitude"}
