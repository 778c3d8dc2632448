"""Translations between naf-head logic programs and ABA frameworks.

* ``lp_to_aba``: every naf literal becomes an assumption whose contrary is
  its atom; rules are kept verbatim.
* ``lp_aba_to_lp``: for frameworks in the LP-ABA fragment, each assumption
  ``a`` is rewritten as ``not c`` where ``c`` is the contrary of ``a``.
* ``aba_to_lp_aba``: normalises an arbitrary framework (over atoms and naf
  atoms) into the LP-ABA fragment; extensions agree after intersecting with
  the original assumptions.
* ``aba_to_lp``: the composition of the last two.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .aba import AbaFramework, AbaRule, lp_aba_violation, theory
from .errors import DomainError, FragmentError, RestrictionError
from .lp import Literal, LogicProgram, LpRule, is_atom_name, naf, pos


@dataclass(frozen=True)
class TranslationRecord:
    """Where the symbols a translation invented came from.

    ``provenance`` maps each generated symbol to one of
    ``contrary-of(a)``, ``fresh-assumption-for(p)`` or ``rep-image-of(x)``.
    ``projection`` holds the source assumptions that target extensions are
    intersected with.
    """

    source_kind: str
    target_kind: str
    provenance: Mapping[str, str] = field(default_factory=dict)
    projection: frozenset[str] = frozenset()

    def lines(self) -> list[str]:
        return [f"{k}\t{v}" for k, v in sorted(self.provenance.items())]


def is_literal_sentence(sentence: str) -> bool:
    try:
        Literal.parse(sentence)
    except ValueError:
        return False
    return True


def check_literal_language(framework: AbaFramework) -> None:
    bad = sorted(s for s in framework.language if not is_literal_sentence(s))
    if bad:
        raise RestrictionError(
            "translation needs every sentence to be an atom or a naf-negated atom; "
            f"offending: {', '.join(repr(s) for s in bad)}"
        )


def lp_to_aba(program: LogicProgram) -> AbaFramework:
    hb = program.herbrand_base
    language = {str(pos(a)) for a in hb} | {str(naf(a)) for a in hb}
    rules = [AbaRule(str(r.head), {str(l) for l in r.body}) for r in program.rules]
    contrary = {str(naf(a)): a for a in hb}
    return AbaFramework(rules, contrary.keys(), contrary, language)


def delta(program: LogicProgram, interpretation: Iterable[str]) -> frozenset[str]:
    """Assumptions ``not p`` for the atoms ``p`` outside ``interpretation``."""
    interp = frozenset(interpretation)
    extra = interp - program.herbrand_base
    if extra:
        raise DomainError(f"atoms outside the Herbrand base: {', '.join(sorted(extra))}")
    return frozenset(str(naf(a)) for a in program.herbrand_base - interp)


def delta_inverse(program: LogicProgram, assumptions: Iterable[str]) -> frozenset[str]:
    s = frozenset(assumptions)
    allowed = {str(naf(a)) for a in program.herbrand_base}
    if not s <= allowed:
        raise DomainError(f"not assumptions of D_P: {', '.join(sorted(s - allowed))}")
    return frozenset(a for a in program.herbrand_base if str(naf(a)) not in s)


def _require_lp_aba(framework: AbaFramework) -> None:
    violation = lp_aba_violation(framework)
    if violation is not None:
        clause, why = violation
        raise FragmentError(f"framework is not in the LP-ABA fragment: {why}", clause)


def _rep_map(framework: AbaFramework) -> dict[str, Literal]:
    _require_lp_aba(framework)
    out = {}
    for c in framework.contraries:
        if not is_atom_name(c):
            raise RestrictionError(f"contrary {c!r} cannot become an LP atom")
        out[c] = Literal(c)
    for a in framework.assumptions:
        out[a] = Literal(framework.contrary_of(a), True)
    return out


def rep_sentence(framework: AbaFramework, sentence: str) -> Literal:
    """``not c`` for an assumption with contrary ``c``; a contrary maps to itself."""
    mapping = _rep_map(framework)
    if sentence not in mapping:
        raise DomainError(f"{sentence!r} is not a sentence of the framework")
    return mapping[sentence]


def lp_aba_to_lp(framework: AbaFramework) -> tuple[LogicProgram, TranslationRecord]:
    mapping = _rep_map(framework)
    program = LogicProgram(
        LpRule(mapping[r.head], {mapping[b] for b in r.body}) for r in framework.rules
    )
    provenance = {str(mapping[a]): f"rep-image-of({a})" for a in framework.assumptions}
    return program, TranslationRecord("lp-aba", "lp", provenance, framework.assumptions)


def rep_framework(framework: AbaFramework) -> AbaFramework:
    """The framework with every sentence renamed by ``rep``."""
    mapping = {s: str(l) for s, l in _rep_map(framework).items()}
    rules = [AbaRule(mapping[r.head], {mapping[b] for b in r.body}) for r in framework.rules]
    contrary = {mapping[a]: framework.contrary_of(a) for a in framework.assumptions}
    return AbaFramework(rules, contrary.keys(), contrary, {mapping[s] for s in framework.language})


def _slug(sentence: str) -> str:
    return re.sub(r"[^A-Za-z0-9_]", "_", sentence)


def aba_to_lp_aba(framework: AbaFramework) -> tuple[AbaFramework, TranslationRecord]:
    """Normalise into the LP-ABA fragment.

    Each assumption ``a`` gets a fresh contrary ``c_a`` derived from its old
    contrary by a bridge rule, and every original non-assumption sentence
    ``p`` becomes the contrary of a fresh, rule-free assumption ``a_p``.
    Fresh names take a numeric suffix when they would clash.
    """
    check_literal_language(framework)
    taken = set(framework.language)

    def fresh(prefix: str, base: str) -> str:
        name = prefix + _slug(base)
        candidate, k = name, 1
        while candidate in taken:
            candidate = f"{name}_{k}"
            k += 1
        taken.add(candidate)
        return candidate

    rules = list(framework.rules)
    contrary: dict[str, str] = {}
    provenance: dict[str, str] = {}
    for a in sorted(framework.assumptions):
        c = fresh("c_", a)
        contrary[a] = c
        rules.append(AbaRule(c, {framework.contrary_of(a)}))
        provenance[c] = f"contrary-of({a})"
    for p in sorted(framework.language - framework.assumptions):
        a_p = fresh("a_", p)
        contrary[a_p] = p
        provenance[a_p] = f"fresh-assumption-for({p})"

    language = framework.language | set(provenance)
    target = AbaFramework(rules, contrary.keys(), contrary, language)
    return target, TranslationRecord("aba", "lp-aba", provenance, framework.assumptions)


def aba_to_lp(framework: AbaFramework) -> tuple[LogicProgram, TranslationRecord]:
    normalised, first = aba_to_lp_aba(framework)
    program, second = lp_aba_to_lp(normalised)
    provenance = dict(first.provenance)
    provenance.update(second.provenance)
    return program, TranslationRecord("aba", "lp", provenance, framework.assumptions)


def extension_to_model(framework: AbaFramework, assumptions: Iterable[str]) -> frozenset[str]:
    """Derived non-assumption sentences, read as atoms of the associated program."""
    return theory(framework, assumptions) - framework.assumptions


def model_to_extension(framework: AbaFramework, interpretation: Iterable[str]) -> frozenset[str]:
    """Assumptions whose contrary is false in ``interpretation`` (LP-ABA only)."""
    _require_lp_aba(framework)
    interp = frozenset(interpretation)
    return frozenset(a for a in framework.assumptions if framework.contrary_of(a) not in interp)
