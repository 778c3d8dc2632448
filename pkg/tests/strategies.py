"""Hypothesis strategies for small programs and frameworks."""

from hypothesis import strategies as st

from nafaba.aba import AbaFramework, AbaRule
from nafaba.lp import Literal, LogicProgram, LpRule

ATOMS = ["p", "q", "r", "s", "t", "u", "v", "w"]


def literals(atoms):
    return st.builds(Literal, st.sampled_from(atoms), st.booleans())


@st.composite
def programs(draw, max_atoms=5, max_rules=8, max_body=3, positive=False):
    n = draw(st.integers(1, max_atoms))
    atoms = ATOMS[:n]
    lit = st.builds(Literal, st.sampled_from(atoms), st.just(False)) if positive else literals(atoms)
    rules = draw(st.lists(
        st.builds(LpRule, lit, st.frozensets(lit, max_size=max_body)),
        max_size=max_rules,
    ))
    return LogicProgram(rules)


@st.composite
def interpretations(draw, program):
    hb = sorted(program.herbrand_base)
    return frozenset(draw(st.sets(st.sampled_from(hb)))) if hb else frozenset()


@st.composite
def frameworks(draw, max_assumptions=5, max_others=3, max_rules=8, max_body=3, flat=False):
    k = draw(st.integers(0, max_assumptions))
    assumptions = ["a", "b", "c", "d", "e", "f", "g"][:k]
    others = ["p", "q", "r", "s"][: draw(st.integers(0 if k else 1, max_others))]
    language = assumptions + others
    contrary = {a: draw(st.sampled_from(language)) for a in assumptions}
    heads = others if flat else language
    rules = []
    if heads:
        rules = draw(st.lists(
            st.builds(AbaRule, st.sampled_from(heads),
                      st.frozensets(st.sampled_from(language), max_size=max_body)),
            max_size=max_rules,
        ))
    return AbaFramework(rules, assumptions, contrary, language)


@st.composite
def lp_aba_frameworks(draw, max_assumptions=5, max_rules=8):
    k = draw(st.integers(0, max_assumptions))
    assumptions = ["a", "b", "c", "d", "e", "f"][:k]
    contrary = {a: "c" + a for a in assumptions}
    language = assumptions + list(contrary.values())
    rules = []
    if language:
        rules = draw(st.lists(
            st.builds(AbaRule, st.sampled_from(language),
                      st.frozensets(st.sampled_from(language), max_size=3)),
            max_size=max_rules,
        ))
    return AbaFramework(rules, assumptions, contrary, language)
