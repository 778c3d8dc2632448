import pytest
from hypothesis import given, strategies as st

from nafaba.errors import DomainError, EnumerationLimitError
from nafaba.formats import parse_lp
from nafaba.lp import (
    Literal,
    LogicProgram,
    LpRule,
    ReductRule,
    closure_lp,
    closure_rounds,
    contraposition_rules,
    herbrand_base,
    is_bipolar_lp,
    is_set_stable_model,
    is_stable_model,
    least_model,
    naf,
    pos,
    reduct,
    set_stable_models,
    set_stable_reduct,
    stable_models,
    supp,
)

from oracles import oracle_closure, oracle_least_model, oracle_reduct, oracle_stable_models, oracle_supp, powerset
from strategies import interpretations, programs

RUN = "p :- not q.\nq :- not p.\ns.\nnot s :- s, not p."
BIPOLAR = "p :- not p.\nnot q :- not p.\nq :- not s."
P1 = "q.\nnot q :- not p."
P2 = "q.\nnot q :- not p, not s."


def rr(text):
    """Reduct rule from ``"h :- b1, b2"`` / ``":- b"`` / ``"h"``."""
    head, _, body = text.partition(":-")
    head = head.strip() or None
    return ReductRule(head, frozenset(b.strip() for b in body.split(",") if b.strip()))


def lits(*texts):
    return frozenset(Literal.parse(t) for t in texts)


# -- data types -----------------------------------------------------------------

def test_literal_round_trips_through_text():
    assert str(naf("p")) == "not p"
    assert Literal.parse("not p") == naf("p")
    assert Literal.parse("p") == pos("p")
    for bad in ("not not p", "not", "Not p", "not  p", "1p"):
        with pytest.raises(ValueError):
            Literal.parse(bad)


def test_rule_views():
    r = LpRule(naf("s"), lits("s", "not p"))
    assert r.head_neg == {"s"} and r.head_pos == set()
    assert r.body_pos == {"s"} and r.body_neg == {"p"}
    assert str(r) == "not s :- not p, s."


def test_program_is_a_set_of_rules():
    a = LpRule(pos("p"), lits("not q"))
    b = LpRule(pos("q"))
    assert LogicProgram([a, b, a]) == LogicProgram([b, a])
    assert len(LogicProgram([a, b, a])) == 2


# -- Herbrand base ------------------------------------------------------------

def test_herbrand_base_examples():
    assert herbrand_base(parse_lp(RUN)) == {"p", "q", "s"}
    assert herbrand_base(LogicProgram()) == frozenset()
    assert herbrand_base(parse_lp("not a :- not a.")) == {"a"}


# -- reduct and least model ---------------------------------------------------

def test_reduct_running_example():
    p = parse_lp(RUN)
    assert reduct(p, {"p", "s"}) == {rr("p"), rr("s")}
    assert reduct(p, {"q", "s"}) == {rr("q"), rr("s"), rr(":- s")}


def test_reduct_empty_interpretation_drops_naf_heads_only():
    p = parse_lp(RUN)
    assert reduct(p, set()) == {rr("p"), rr("q"), rr("s")}


def test_reduct_rejects_foreign_atoms():
    with pytest.raises(DomainError):
        reduct(parse_lp(RUN), {"z"})


def test_least_model_examples():
    assert least_model({rr("p"), rr("s")}) == {"p", "s"}
    assert least_model({rr("q"), rr("s"), rr(":- s")}) is None
    assert least_model(set()) == frozenset()


# -- stable models ---------------------------------------------------------------

def test_stable_running_example():
    p = parse_lp(RUN)
    assert is_stable_model(p, {"p", "s"})
    assert not is_stable_model(p, {"q", "s"})
    assert stable_models(p) == [frozenset({"p", "s"})]


def test_p1_has_no_stable_model():
    p = parse_lp(P1)
    assert not any(is_stable_model(p, i) for i in powerset({"p", "q"}))


def test_stable_models_small_cases():
    assert stable_models(parse_lp("s.")) == [frozenset({"s"})]
    assert stable_models(parse_lp(P2)) == []
    assert stable_models(LogicProgram()) == [frozenset()]


def test_enumeration_bound(monkeypatch):
    p = LogicProgram(LpRule(pos(f"x{i}")) for i in range(5))
    with pytest.raises(EnumerationLimitError, match="bound 4"):
        stable_models(p, bound=4)
    monkeypatch.setenv("NAFABA_BOUND", "3")
    with pytest.raises(EnumerationLimitError):
        set_stable_models(p)
    monkeypatch.setenv("NAFABA_BOUND", "5")
    assert stable_models(p) == [frozenset(f"x{i}" for i in range(5))]


def test_canonical_order():
    p = parse_lp("p :- not q.\nq :- not p.\nr :- not s.\ns :- not r.")
    assert [sorted(i) for i in stable_models(p)] == [["p", "r"], ["p", "s"], ["q", "r"], ["q", "s"]]


# -- supp and closure ---------------------------------------------------------------

def test_supp_examples():
    p = parse_lp(BIPOLAR)
    assert supp(p, lits("not p")) == lits("not p", "p", "not q")
    assert supp(p, lits("not q")) == lits("not q")
    assert supp(parse_lp(RUN), set()) == lits("s")


def test_closure_examples():
    p = parse_lp(BIPOLAR)
    assert closure_lp(p, lits("not p")) == lits("p", "not q", "not p")
    assert closure_lp(p, lits("not q")) == lits("not q")
    assert closure_lp(p, lits("not s")) == lits("q", "not s")
    # the fact q has an empty body, so supp adds it to any set
    assert closure_lp(parse_lp(P2), lits("not p")) == lits("not p", "q")
    assert oracle_closure(parse_lp(P2), lits("not p"))[0] == lits("not p", "q")


def test_closure_rejects_foreign_literals():
    with pytest.raises(DomainError):
        closure_lp(parse_lp(BIPOLAR), lits("not z"))


# -- set-stable ----------------------------------------------------------------------

def test_contrapositions_bipolar():
    assert contraposition_rules(parse_lp(BIPOLAR)) == {rr("p :- q")}


def test_set_stable_reducts_bipolar():
    p = parse_lp(BIPOLAR)
    assert set_stable_reduct(p, {"p", "q"}) == {rr("q"), rr("p :- q")}
    assert set_stable_reduct(p, {"q"}) == {rr("p"), rr(":-"), rr("q"), rr("p :- q")}


def test_no_contrapositions_without_naf_reach():
    p = parse_lp("p :- not q.\nq :- not p.")
    assert contraposition_rules(p) == frozenset()
    assert set_stable_reduct(p, {"p"}) == reduct(p, {"p"})


def test_set_stable_examples():
    b = parse_lp(BIPOLAR)
    assert is_set_stable_model(b, {"p", "q"})
    assert not is_set_stable_model(b, {"q"})
    assert stable_models(b) == []
    assert set_stable_models(b) == [frozenset({"p", "q"})]
    assert is_set_stable_model(parse_lp(P1), {"p", "q"})
    assert set_stable_models(parse_lp(P1)) == [frozenset({"p", "q"})]
    assert set_stable_models(parse_lp(P2)) == []


def test_bipolar_predicate():
    assert is_bipolar_lp(parse_lp(BIPOLAR))
    assert not is_bipolar_lp(parse_lp(RUN))


# -- properties ------------------------------------------------------------------------

@given(programs(max_atoms=8, max_rules=12), st.data())
def test_reduct_is_positive(p, data):
    i = data.draw(interpretations(p))
    red = reduct(p, i)
    assert {(r.head, r.body) for r in red} == oracle_reduct(p, i)
    for r in red:
        assert all(isinstance(a, str) for a in r.body)


@given(programs(max_atoms=6, max_rules=8, positive=True), st.data())
def test_least_model_is_least(p, data):
    rules = reduct(p, frozenset())
    lm = least_model(rules)
    assert lm == oracle_least_model({(r.head, r.body) for r in rules})
    for m in powerset(p.herbrand_base):
        if all(r.head is None or not r.body <= m or r.head in m for r in rules):
            assert lm <= m


@given(programs(max_atoms=5, max_rules=8))
def test_stable_agrees_with_definition_oracle(p):
    assert set(stable_models(p)) == oracle_stable_models(p)


@given(programs(max_atoms=6, max_rules=10), st.data())
def test_closure_properties(p, data):
    universe = sorted({Literal(a, n) for a in p.herbrand_base for n in (False, True)})
    s = frozenset(data.draw(st.sets(st.sampled_from(universe)))) if universe else frozenset()
    t = frozenset(data.draw(st.sets(st.sampled_from(universe)))) if universe else frozenset()
    cl, rounds = closure_rounds(p, s)
    ref, ref_rounds = oracle_closure(p, s)
    assert (cl, rounds) == (ref, ref_rounds)
    assert rounds <= 2 * len(p.herbrand_base)
    assert s <= cl
    assert closure_lp(p, cl) == cl
    assert closure_lp(p, s) <= closure_lp(p, s | t)
    assert supp(p, s) == oracle_supp(p, s)


@given(programs(max_atoms=5, max_rules=8), st.data())
def test_contrapositions_do_not_depend_on_interpretation(p, data):
    i = data.draw(interpretations(p))
    j = data.draw(interpretations(p))
    assert set_stable_reduct(p, i) - reduct(p, i) <= contraposition_rules(p)
    assert (set_stable_reduct(p, i) - reduct(p, i)) | (reduct(p, i) & contraposition_rules(p)) \
        == (set_stable_reduct(p, j) - reduct(p, j)) | (reduct(p, j) & contraposition_rules(p))
    assert all(r.head is not None and len(r.body) == 1 and r.head not in r.body for r in contraposition_rules(p))


@given(programs(max_atoms=6, max_rules=10))
def test_stable_models_are_set_stable(p):
    assert set(stable_models(p)) <= set(set_stable_models(p))
