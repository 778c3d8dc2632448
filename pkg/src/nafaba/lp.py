"""Logic programs with negation as failure in rule heads.

A program is a set of rules ``h :- b1, ..., bk`` where the head and every
body element is an atom or a naf-negated atom.  Stable models follow the
usual reduct construction, with rules whose naf head is triggered turning
into headless constraints.  Set-stable models additionally close the reduct
under contrapositions read off the naf closure of each atom.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from ._enum import canonical_key, subsets
from .errors import DomainError

ATOM_PATTERN = r"[a-z][A-Za-z0-9_]*"
_ATOM_RE = re.compile(ATOM_PATTERN + r"\Z")
NAF = "not"


def is_atom_name(name: str) -> bool:
    return bool(_ATOM_RE.match(name)) and name != NAF


@dataclass(frozen=True, order=True)
class Literal:
    """An atom, or its naf negation when ``negated`` is set."""

    atom: str
    negated: bool = False

    def __post_init__(self):
        if not isinstance(self.atom, str) or not is_atom_name(self.atom):
            raise ValueError(f"invalid atom name: {self.atom!r}")

    def __str__(self) -> str:
        return f"{NAF} {self.atom}" if self.negated else self.atom

    @classmethod
    def parse(cls, text: str) -> Literal:
        """Read ``"p"`` or ``"not p"`` (the ABA sentence spelling of a literal)."""
        parts = text.split()
        if len(parts) == 2 and parts[0] == NAF and text == f"{NAF} {parts[1]}":
            return cls(parts[1], True)
        if len(parts) == 1 and parts[0] == text:
            return cls(text)
        raise ValueError(f"not a literal: {text!r}")


def pos(atom: str) -> Literal:
    return Literal(atom)


def naf(atom: str) -> Literal:
    return Literal(atom, True)


@dataclass(frozen=True)
class LpRule:
    head: Literal
    body: frozenset[Literal] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "body", frozenset(self.body))

    @property
    def head_pos(self) -> frozenset[str]:
        return frozenset() if self.head.negated else frozenset((self.head.atom,))

    @property
    def head_neg(self) -> frozenset[str]:
        return frozenset((self.head.atom,)) if self.head.negated else frozenset()

    @property
    def body_pos(self) -> frozenset[str]:
        return frozenset(l.atom for l in self.body if not l.negated)

    @property
    def body_neg(self) -> frozenset[str]:
        return frozenset(l.atom for l in self.body if l.negated)

    @property
    def atoms(self) -> frozenset[str]:
        return frozenset(l.atom for l in self.body) | {self.head.atom}

    def sorted_body(self) -> list[Literal]:
        return sorted(self.body, key=str)

    def __str__(self) -> str:
        if not self.body:
            return f"{self.head}."
        return f"{self.head} :- {', '.join(map(str, self.sorted_body()))}."


@dataclass(frozen=True)
class ReductRule:
    """A positive rule; ``head is None`` marks a denial constraint."""

    head: str | None
    body: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "body", frozenset(self.body))

    def __str__(self) -> str:
        body = ", ".join(sorted(self.body))
        if self.head is None:
            return f":- {body}." if body else ":- ."
        return f"{self.head} :- {body}." if body else f"{self.head}."


class LogicProgram:
    """An immutable set of rules.

    Rules keep their input order for display, but equality and hashing
    treat the program as a set.  Duplicates are dropped on construction.
    """

    def __init__(self, rules: Iterable[LpRule] = ()):
        seen: dict[LpRule, None] = {}
        for r in rules:
            if not isinstance(r, LpRule):
                raise TypeError(f"expected LpRule, got {type(r).__name__}")
            seen.setdefault(r, None)
        self._rules = tuple(seen)
        self._set = frozenset(self._rules)

    @property
    def rules(self) -> tuple[LpRule, ...]:
        return self._rules

    def __iter__(self) -> Iterator[LpRule]:
        return iter(self._rules)

    def __len__(self) -> int:
        return len(self._rules)

    def __contains__(self, rule) -> bool:
        return rule in self._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogicProgram):
            return NotImplemented
        return self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        return f"LogicProgram([{'; '.join(str(r)[:-1] for r in self._rules)}])"

    @cached_property
    def herbrand_base(self) -> frozenset[str]:
        return frozenset(a for r in self._rules for a in r.atoms)

    @cached_property
    def _watchers(self) -> dict[Literal, list[int]]:
        index: dict[Literal, list[int]] = defaultdict(list)
        for i, r in enumerate(self._rules):
            for lit in r.body:
                index[lit].append(i)
        return dict(index)

    @cached_property
    def contrapositions(self) -> frozenset[ReductRule]:
        out = set()
        for a in self.herbrand_base:
            for lit in closure_lp(self, {naf(a)}):
                if lit.negated and lit.atom != a:
                    out.add(ReductRule(a, frozenset((lit.atom,))))
        return frozenset(out)


def herbrand_base(program: LogicProgram) -> frozenset[str]:
    return program.herbrand_base


def _interpretation(program: LogicProgram, interpretation: Iterable[str]) -> frozenset[str]:
    interp = frozenset(interpretation)
    extra = interp - program.herbrand_base
    if extra:
        raise DomainError(f"atoms outside the Herbrand base: {', '.join(sorted(extra))}")
    return interp


def reduct(program: LogicProgram, interpretation: Iterable[str]) -> frozenset[ReductRule]:
    """Positive program kept by ``interpretation``.

    A rule survives iff none of its naf body atoms is true and its naf head
    atom (if any) is true; the survivor keeps only its positive parts, so a
    surviving naf-head rule becomes a constraint.
    """
    interp = _interpretation(program, interpretation)
    out = set()
    for r in program.rules:
        if r.body_neg & interp or not r.head_neg <= interp:
            continue
        head = None if r.head.negated else r.head.atom
        out.add(ReductRule(head, r.body_pos))
    return frozenset(out)


def least_model(rules: Iterable[ReductRule]) -> frozenset[str] | None:
    """Least model of a positive program, or ``None`` if a constraint fires.

    Linear-time forward chaining: each rule keeps a count of body atoms not
    yet derived and fires when the count reaches zero.
    """
    rules = list(rules)
    remaining = [len(r.body) for r in rules]
    watchers: dict[str, list[int]] = defaultdict(list)
    for i, r in enumerate(rules):
        for atom in r.body:
            watchers[atom].append(i)

    model: set[str] = set()
    agenda = [i for i, n in enumerate(remaining) if n == 0]
    while agenda:
        head = rules[agenda.pop()].head
        if head is None or head in model:
            continue
        model.add(head)
        for j in watchers.get(head, ()):
            remaining[j] -= 1
            if remaining[j] == 0:
                agenda.append(j)

    for r in rules:
        if r.head is None and r.body <= model:
            return None
    return frozenset(model)


def is_stable_model(program: LogicProgram, interpretation: Iterable[str]) -> bool:
    interp = _interpretation(program, interpretation)
    return least_model(reduct(program, interp)) == interp


def stable_models(program: LogicProgram, bound: int | None = None) -> list[frozenset[str]]:
    return [i for i in subsets(program.herbrand_base, bound) if is_stable_model(program, i)]


def _literals(program: LogicProgram, literals: Iterable[Literal]) -> frozenset[Literal]:
    lits = frozenset(literals)
    extra = {l for l in lits if l.atom not in program.herbrand_base}
    if extra:
        raise DomainError(f"literals outside HB and its negation: {', '.join(sorted(map(str, extra)))}")
    return lits


def supp(program: LogicProgram, literals: Iterable[Literal]) -> frozenset[Literal]:
    """One expansion step: add the head of every rule whose whole body is in the set."""
    lits = _literals(program, literals)
    return lits | {r.head for r in program.rules if r.body <= lits}


def closure_rounds(program: LogicProgram, literals: Iterable[Literal]) -> tuple[frozenset[Literal], int]:
    """Closure of ``literals`` under ``supp`` and the number of steps that grew it.

    The steps are simulated level by level with body counters, so the count
    matches naive iteration of ``supp`` while the total work stays linear in
    the size of the program.
    """
    known = set(_literals(program, literals))
    rules = program.rules
    watchers = program._watchers
    remaining = [len(r.body) for r in rules]
    for lit in known:
        for i in watchers.get(lit, ()):
            remaining[i] -= 1
    ready = [i for i, n in enumerate(remaining) if n == 0]

    rounds = 0
    while True:
        new = {rules[i].head for i in ready} - known
        if not new:
            break
        rounds += 1
        known |= new
        ready = []
        for lit in new:
            for i in watchers.get(lit, ()):
                remaining[i] -= 1
                if remaining[i] == 0:
                    ready.append(i)
    return frozenset(known), rounds


def closure_lp(program: LogicProgram, literals: Iterable[Literal]) -> frozenset[Literal]:
    return closure_rounds(program, literals)[0]


def contraposition_rules(program: LogicProgram) -> frozenset[ReductRule]:
    """Rules ``a :- b`` for distinct atoms with ``not b`` in the closure of ``not a``."""
    return program.contrapositions


def set_stable_reduct(program: LogicProgram, interpretation: Iterable[str]) -> frozenset[ReductRule]:
    return reduct(program, interpretation) | program.contrapositions


def is_set_stable_model(program: LogicProgram, interpretation: Iterable[str]) -> bool:
    interp = _interpretation(program, interpretation)
    return least_model(set_stable_reduct(program, interp)) == interp


def set_stable_models(program: LogicProgram, bound: int | None = None) -> list[frozenset[str]]:
    return [i for i in subsets(program.herbrand_base, bound) if is_set_stable_model(program, i)]


def is_bipolar_lp(program: LogicProgram) -> bool:
    return all(len(r.body) == 1 and next(iter(r.body)).negated for r in program.rules)


def sort_interpretations(interps: Iterable[frozenset[str]]) -> list[frozenset[str]]:
    return sorted(interps, key=canonical_key)
