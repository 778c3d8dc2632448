"""Assumption-based argumentation frameworks, flat or not.

Sentences are plain strings.  Derivability is computed by forward chaining
from the given assumptions, which is exact because a sentence is derivable
from some subset of ``S`` iff chaining from ``S`` reaches it.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from ._enum import subsets
from .errors import DomainError


@dataclass(frozen=True)
class AbaRule:
    head: str
    body: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "body", frozenset(self.body))

    @property
    def sentences(self) -> frozenset[str]:
        return self.body | {self.head}

    def __str__(self) -> str:
        return f"{self.head} <- {', '.join(sorted(self.body))}."


class AbaFramework:
    """The tuple (L, R, A, contrary).

    ``language`` defaults to every sentence mentioned by the rules, the
    assumptions and the contrary map; when given it must cover all of them.
    Rules keep input order (it fixes which rule explains a sentence first)
    but equality is set equality.
    """

    def __init__(
        self,
        rules: Iterable[AbaRule] = (),
        assumptions: Iterable[str] = (),
        contrary: Mapping[str, str] | None = None,
        language: Iterable[str] | None = None,
    ):
        seen: dict[AbaRule, None] = {}
        for r in rules:
            if not isinstance(r, AbaRule):
                raise TypeError(f"expected AbaRule, got {type(r).__name__}")
            seen.setdefault(r, None)
        self._rules = tuple(seen)
        self._assumptions = frozenset(assumptions)
        self._contrary = dict(contrary or {})

        missing = self._assumptions - self._contrary.keys()
        if missing:
            raise ValueError(f"contrary undefined for {', '.join(sorted(missing))}")
        stray = self._contrary.keys() - self._assumptions
        if stray:
            raise ValueError(f"contrary given for non-assumption {', '.join(sorted(stray))}")

        mentioned = set(self._assumptions) | set(self._contrary.values())
        for r in self._rules:
            mentioned |= r.sentences
        if language is None:
            self._language = frozenset(mentioned)
        else:
            self._language = frozenset(language)
            outside = mentioned - self._language
            if outside:
                raise ValueError(f"sentences missing from the language: {', '.join(sorted(outside))}")
        for s in self._language:
            if not isinstance(s, str) or not s:
                raise ValueError(f"invalid sentence: {s!r}")

    @property
    def language(self) -> frozenset[str]:
        return self._language

    @property
    def rules(self) -> tuple[AbaRule, ...]:
        return self._rules

    @property
    def assumptions(self) -> frozenset[str]:
        return self._assumptions

    @property
    def contrary(self) -> Mapping[str, str]:
        return dict(self._contrary)

    def contrary_of(self, assumption: str) -> str:
        return self._contrary[assumption]

    @cached_property
    def contraries(self) -> frozenset[str]:
        return frozenset(self._contrary.values())

    def _key(self):
        return (self._language, frozenset(self._rules), self._assumptions,
                frozenset(self._contrary.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbaFramework):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return (f"AbaFramework(assumptions={sorted(self._assumptions)}, "
                f"contrary={dict(sorted(self._contrary.items()))}, "
                f"rules=[{'; '.join(str(r)[:-1] for r in self._rules)}])")

    def with_rules(self, rules: Iterable[AbaRule]) -> AbaFramework:
        return AbaFramework(rules, self._assumptions, self._contrary, self._language)

    @cached_property
    def _watchers(self) -> dict[str, list[int]]:
        index: dict[str, list[int]] = defaultdict(list)
        for i, r in enumerate(self._rules):
            for s in r.body:
                index[s].append(i)
        return dict(index)

    @cached_property
    def singleton_closures(self) -> dict[str, frozenset[str]]:
        return {a: closure_aba(self, {a}) for a in self._assumptions}


def _assumption_set(framework: AbaFramework, members: Iterable[str]) -> frozenset[str]:
    s = frozenset(members)
    extra = s - framework.assumptions
    if extra:
        raise DomainError(f"not assumptions: {', '.join(sorted(extra))}")
    return s


def _chain(framework: AbaFramework, start: frozenset[str]) -> tuple[dict[str, int | None], int]:
    """Forward chaining from ``start``.

    Returns the derived sentences mapped to the index of the first rule that
    derived them (``None`` for members of ``start``), plus the number of
    chaining rounds that produced something new.  Within a round rules fire
    in input order, so the provenance is deterministic.
    """
    rules = framework.rules
    watchers = framework._watchers
    derived: dict[str, int | None] = {s: None for s in start}
    remaining = [len(r.body) for r in rules]
    for s in start:
        for i in watchers.get(s, ()):
            remaining[i] -= 1
    ready = [i for i, n in enumerate(remaining) if n == 0]

    rounds = 0
    while ready:
        new = []
        for i in sorted(ready):
            head = rules[i].head
            if head not in derived:
                derived[head] = i
                new.append(head)
        if not new:
            break
        rounds += 1
        ready = []
        for s in new:
            for i in watchers.get(s, ()):
                remaining[i] -= 1
                if remaining[i] == 0:
                    ready.append(i)
    return derived, rounds


def theory(framework: AbaFramework, assumptions: Iterable[str]) -> frozenset[str]:
    """All sentences derivable from subsets of ``assumptions``."""
    return frozenset(_chain(framework, _assumption_set(framework, assumptions))[0])


def theory_rounds(framework: AbaFramework, assumptions: Iterable[str]) -> tuple[frozenset[str], int]:
    derived, rounds = _chain(framework, _assumption_set(framework, assumptions))
    return frozenset(derived), rounds


def closure_aba(framework: AbaFramework, assumptions: Iterable[str]) -> frozenset[str]:
    return theory(framework, assumptions) & framework.assumptions


def _attacks_given_theory(framework: AbaFramework, th: frozenset[str], targets: Iterable[str]) -> bool:
    return any(framework.contrary_of(t) in th for t in targets)


def attacks(framework: AbaFramework, attackers: Iterable[str], targets: Iterable[str]) -> bool:
    targets = _assumption_set(framework, targets)
    return _attacks_given_theory(framework, theory(framework, attackers), targets)


def is_conflict_free(framework: AbaFramework, assumptions: Iterable[str]) -> bool:
    s = _assumption_set(framework, assumptions)
    return not attacks(framework, s, s)


def is_closed(framework: AbaFramework, assumptions: Iterable[str]) -> bool:
    s = _assumption_set(framework, assumptions)
    return closure_aba(framework, s) == s


def _admissible_base(framework: AbaFramework, s: frozenset[str], th: frozenset[str]) -> bool:
    # closed and conflict-free
    return th & framework.assumptions == s and not _attacks_given_theory(framework, th, s)


def _stable_given_theory(framework: AbaFramework, s: frozenset[str], th: frozenset[str]) -> bool:
    if not _admissible_base(framework, s, th):
        return False
    return all(framework.contrary_of(x) in th for x in framework.assumptions - s)


def _set_stable_given_theory(framework: AbaFramework, s: frozenset[str], th: frozenset[str]) -> bool:
    if not _admissible_base(framework, s, th):
        return False
    closures = framework.singleton_closures
    return all(_attacks_given_theory(framework, th, closures[x]) for x in framework.assumptions - s)


def is_stable_extension(framework: AbaFramework, assumptions: Iterable[str]) -> bool:
    s = _assumption_set(framework, assumptions)
    return _stable_given_theory(framework, s, theory(framework, s))


def is_set_stable_extension(framework: AbaFramework, assumptions: Iterable[str]) -> bool:
    s = _assumption_set(framework, assumptions)
    return _set_stable_given_theory(framework, s, theory(framework, s))


def stable_extensions(framework: AbaFramework, bound: int | None = None) -> list[frozenset[str]]:
    return [s for s in subsets(framework.assumptions, bound)
            if _stable_given_theory(framework, s, theory(framework, s))]


def set_stable_extensions(framework: AbaFramework, bound: int | None = None) -> list[frozenset[str]]:
    return [s for s in subsets(framework.assumptions, bound)
            if _set_stable_given_theory(framework, s, theory(framework, s))]


def is_flat(framework: AbaFramework) -> bool:
    return all(r.head not in framework.assumptions for r in framework.rules)


def is_bipolar_aba(framework: AbaFramework) -> bool:
    # Head may be an assumption or a contrary of one.
    allowed_heads = framework.assumptions | framework.contraries
    return all(
        len(r.body) == 1 and r.body <= framework.assumptions and r.head in allowed_heads
        for r in framework.rules
    )


def lp_aba_violation(framework: AbaFramework) -> tuple[str, str] | None:
    """First violated LP-ABA clause as ``(clause, explanation)``, or ``None``."""
    both = framework.assumptions & framework.contraries
    if both:
        return ("(1)", f"assumptions that are also contraries: {', '.join(sorted(both))}")
    by_contrary: dict[str, list[str]] = defaultdict(list)
    for a in sorted(framework.assumptions):
        by_contrary[framework.contrary_of(a)].append(a)
    for c, owners in sorted(by_contrary.items()):
        if len(owners) > 1:
            return ("(2)", f"contrary map not injective: {', '.join(owners)} share {c}")
    other = framework.language - framework.assumptions - framework.contraries
    if other:
        return ("(3)", f"sentences neither assumption nor contrary: {', '.join(sorted(other))}")
    return None


def is_lp_aba(framework: AbaFramework) -> bool:
    return lp_aba_violation(framework) is None


@dataclass(frozen=True)
class DerivationTree:
    """A tree-derivation.  ``label is None`` marks the top leaf of a fact."""

    label: str | None
    children: tuple[DerivationTree, ...] = ()
    rule: AbaRule | None = None

    @property
    def is_top(self) -> bool:
        return self.label is None

    def nodes(self) -> Iterator[DerivationTree]:
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    @property
    def assumptions(self) -> frozenset[str]:
        return frozenset(n.label for n in self.nodes() if not n.children and n.label is not None)

    @property
    def rules_used(self) -> frozenset[AbaRule]:
        return frozenset(n.rule for n in self.nodes() if n.rule is not None)

    @property
    def height(self) -> int:
        if not self.children:
            return 0
        return 1 + max(c.height for c in self.children)

    def pretty(self, indent: str = "") -> str:
        text = "T" if self.label is None else self.label
        lines = [indent + text]
        for c in self.children:
            lines.append(c.pretty(indent + "  "))
        return "\n".join(lines)


TOP = DerivationTree(None)


def derivation_tree(framework: AbaFramework, assumptions: Iterable[str], sentence: str) -> DerivationTree | None:
    s = _assumption_set(framework, assumptions)
    derived, _ = _chain(framework, s)
    if sentence not in derived:
        return None
    built: dict[str, DerivationTree] = {}

    # Provenance is acyclic (each sentence points at a rule whose body was
    # derived strictly earlier), so a post-order walk terminates.
    stack = [sentence]
    while stack:
        label = stack[-1]
        if label in built:
            stack.pop()
            continue
        idx = derived[label]
        if idx is None:
            built[label] = DerivationTree(label)
            stack.pop()
            continue
        rule = framework.rules[idx]
        pending = [b for b in sorted(rule.body) if b not in built]
        if pending:
            stack.extend(pending)
            continue
        kids = tuple(built[b] for b in sorted(rule.body)) or (TOP,)
        built[label] = DerivationTree(label, kids, rule)
        stack.pop()
    return built[sentence]


def tree_problems(framework: AbaFramework, tree: DerivationTree) -> list[str]:
    """Every way ``tree`` fails to be a tree-derivation in ``framework``."""
    problems = []
    rules = set(framework.rules)
    if tree.is_top:
        problems.append("root is the top marker")
    for node in tree.nodes():
        if node.is_top:
            if node.children:
                problems.append("top marker has children")
            continue
        if node.label not in framework.language:
            problems.append(f"label {node.label!r} not in the language")
        if not node.children:
            if node.label not in framework.assumptions:
                problems.append(f"leaf {node.label!r} is not an assumption")
            continue
        if node.rule is None or node.rule not in rules:
            problems.append(f"node {node.label!r} has no rule of the framework")
            continue
        if node.rule.head != node.label:
            problems.append(f"node {node.label!r} labelled differently from its rule head")
        if not node.rule.body:
            if node.children != (TOP,):
                problems.append(f"fact {node.label!r} must have a single top child")
        else:
            labels = [c.label for c in node.children]
            if len(labels) != len(set(labels)) or set(labels) != node.rule.body:
                problems.append(f"children of {node.label!r} do not match the rule body")
    return problems
