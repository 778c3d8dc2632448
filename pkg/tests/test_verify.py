import pytest

from nafaba.aba import AbaFramework, AbaRule, stable_extensions
from nafaba.errors import EnumerationLimitError, FragmentError
from nafaba.formats import parse_lp
from nafaba.lp import LogicProgram, LpRule, Literal
from nafaba.verify import (
    TheoremId,
    VerificationReport,
    check_constraint_reading,
    check_lp_aba_fragment,
    check_lp_aba_set_stable,
    check_lp_aba_stable,
    check_projection,
    check_round_trips,
    check_stable_in_set_stable,
    fuzz,
    instance_hash,
    run_check,
    shrink,
    verify_instance,
)


def test_report_contract():
    with pytest.raises(ValueError):
        VerificationReport(TheoremId.PROJECTION, "x", "h", False)
    r = VerificationReport(TheoremId.PROJECTION, "x", "abc", False, "w\tx\ny")
    assert r.to_record() == "projection\tfail\tabc\tw x y"
    ok = VerificationReport(TheoremId.PROJECTION, "x", "abc", True)
    assert ok.to_record() == "projection\tpass\tabc\t-"


def test_lp_to_aba_stable(golden):
    r = check_lp_aba_stable(golden("run.lp"))
    assert r.passed
    assert r.matched == ("{p, s} <-> {not q}",)
    assert check_lp_aba_stable(LogicProgram()).passed


def test_lp_to_aba_set_stable(golden):
    r = check_lp_aba_set_stable(golden("p1.lp"))
    assert r.passed and r.matched == ("{p, q} <-> {}",)
    r = check_lp_aba_set_stable(golden("p2.lp"))
    assert r.passed and r.matched == ()
    r = check_lp_aba_set_stable(golden("bipolar.lp"))
    assert r.passed and r.matched == ("{p, q} <-> {not s}",)


def test_round_trips(golden):
    assert check_round_trips(golden("run.lp")).passed
    assert check_round_trips(golden("lpaba.aba")).passed
    assert check_round_trips(LogicProgram()).passed
    assert check_round_trips(AbaFramework()).passed
    with pytest.raises(FragmentError):
        check_round_trips(golden("normalise.aba"))


def test_lp_aba_fragment_stable_example(golden):
    r = check_lp_aba_fragment(golden("lpaba.aba"))
    assert r.passed
    assert "stable: {q} <-> {cp, cs}" in r.matched
    assert check_lp_aba_fragment(AbaFramework()).passed


def test_lp_aba_fragment_set_stable_counterexample(golden):
    # {c} is set-stable in this framework, but its image Th({c}) minus A is
    # not a set-stable model of the associated program; the check must say so.
    r = check_lp_aba_fragment(golden("example2.aba"))
    assert not r.passed
    assert r.witness.startswith("S={c} is set-stable in D but Th(S)\\A={contrary_b}")


def test_projection(golden):
    r = check_projection(golden("normalise.aba"))
    assert r.passed
    assert "stable: {a_q, c} -> {c}" in r.matched
    assert check_projection(AbaFramework([AbaRule("p")], {"a"}, {"a": "p"})).passed


def test_constraint_reading(golden):
    d = golden("constraint.aba")
    r3 = AbaRule("a", {"d"})
    base = d.with_rules([r for r in d.rules if r != r3])
    assert stable_extensions(base) == [frozenset("abd"), frozenset("bcd")]
    r = check_constraint_reading(base, r3)
    assert r.passed and r.matched == ("{a, b, d}",)
    # a <- with an empty body, a already in every stable extension
    r = check_constraint_reading(base, AbaRule("b"))
    assert r.passed and r.matched == ("{a, b, d}", "{b, c, d}")
    with pytest.raises(FragmentError):
        check_constraint_reading(base, AbaRule("contrary_a", {"d"}))


def test_inclusion_checks(golden):
    assert check_stable_in_set_stable(golden("bipolar.lp")).passed
    assert check_stable_in_set_stable(golden("example2.aba")).passed


def test_bound_is_enforced():
    p = LogicProgram(LpRule(Literal(f"x{i}")) for i in range(6))
    with pytest.raises(EnumerationLimitError):
        check_lp_aba_stable(p, bound=5)


def test_instance_hash_is_stable(golden):
    assert instance_hash(golden("run.lp")) == instance_hash(parse_lp("s.\nq :- not p.\np :- not q.\nnot s :- s, not p."))
    assert len(instance_hash(golden("run.lp"))) == 12


def test_shrink_is_greedy_and_keeps_failure():
    p = parse_lp("a.\nb.\nc :- a.\nd :- b.\ne.")
    small = shrink(p, lambda x: any(r.head.atom == "d" for r in x.rules))
    assert small == parse_lp("d.")


def test_run_check_appends_shrunk_instance(golden):
    r = run_check(check_lp_aba_fragment, golden("example2.aba"), "example2")
    assert not r.passed and "; shrunk instance: " in r.witness
    assert "contrary_c <- a, b." not in r.witness.split("shrunk instance:")[1]


def test_verify_instance_covers_applicable_checks(golden):
    kinds = {r.theorem for r in verify_instance(golden("run.lp"))}
    assert kinds == {TheoremId.LP_TO_ABA_STABLE, TheoremId.LP_TO_ABA_SET_STABLE,
                     TheoremId.ROUND_TRIP_LP, TheoremId.STABLE_IN_SET_STABLE}
    kinds = {r.theorem for r in verify_instance(golden("constraint.aba"))}
    assert TheoremId.CONSTRAINT_READING in kinds
    kinds = {r.theorem for r in verify_instance(golden("normalise.aba"))}
    assert TheoremId.LP_ABA_FRAGMENT not in kinds and TheoremId.PROJECTION in kinds


@pytest.mark.parametrize("fragment", ["lp", "bipolar-aba"])
def test_fuzz_reproducible_and_order_independent(fragment):
    a = [r.to_record() for r in fuzz(fragment, 9, 20)]
    b = [r.to_record() for r in fuzz(fragment, 9, 20, jobs=2)]
    assert a == b
    assert fuzz(fragment, 9, 0) == []
