"""Executable correspondence checks between programs and frameworks.

Each ``check_*`` function enumerates both sides of a translation and
compares the solution sets, returning a :class:`VerificationReport`.  A
failing report always names a concrete witness.  :func:`fuzz` runs the
checks on seeded random instances and shrinks any failing instance before
reporting it.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Iterable

from ._enum import canonical_sort
from .aba import (
    AbaFramework,
    AbaRule,
    is_flat,
    is_lp_aba,
    set_stable_extensions,
    stable_extensions,
)
from .errors import FragmentError, NafabaError
from .formats import serialize
from .generate import (
    FUZZ_DEFAULTS,
    LP_FRAGMENTS,
    derive_seed,
    generate_constraint_pair,
    generate_instance,
    with_seed,
)
from .lp import LogicProgram, LpRule, set_stable_models, stable_models
from .translate import (
    aba_to_lp_aba,
    delta,
    delta_inverse,
    extension_to_model,
    is_literal_sentence,
    lp_aba_to_lp,
    lp_to_aba,
    rep_framework,
)


class TheoremId(str, Enum):
    LP_TO_ABA_STABLE = "lp-to-aba-stable"
    LP_TO_ABA_SET_STABLE = "lp-to-aba-set-stable"
    ROUND_TRIP_LP = "round-trip-lp"
    ROUND_TRIP_ABA = "round-trip-aba"
    LP_ABA_FRAGMENT = "lp-aba-fragment"
    PROJECTION = "projection"
    CONSTRAINT_READING = "constraint-reading"
    STABLE_IN_SET_STABLE = "stable-in-set-stable"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class VerificationReport:
    theorem: TheoremId
    instance: str
    instance_hash: str
    passed: bool
    witness: str | None = None
    matched: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.passed and not self.witness:
            raise ValueError("a failing report needs a witness")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_record(self) -> str:
        witness = _one_line(self.witness) if self.witness else "-"
        return f"{self.theorem}\t{self.status}\t{self.instance_hash}\t{witness}"


def _one_line(text: str) -> str:
    return " ".join(text.replace("\t", " ").split())


def fmt_set(members: Iterable[str]) -> str:
    return "{" + ", ".join(sorted(members)) + "}"


def instance_hash(instance) -> str:
    if isinstance(instance, tuple):
        framework, rule = instance
        text = serialize(framework) + "+" + str(rule)
    else:
        text = serialize(instance)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _report(theorem, instance, name, witness=None, matched=()):
    return VerificationReport(theorem, name, instance_hash(instance), witness is None, witness, tuple(matched))


def _compare(left, right, to_right, from_right, describe):
    """Match two solution sets through a pair of correspondence maps.

    Returns ``(witness, matched_pairs)`` where ``witness`` is ``None`` when
    ``to_right`` is a bijection from ``left`` onto ``right``.
    """
    right = set(right)
    images: dict[frozenset[str], frozenset[str]] = {}
    matched = []
    for x in canonical_sort(left):
        y = to_right(x)
        if y not in right:
            return describe("left", x, y), matched
        if y in images:
            return describe("collision", x, images[y]), matched
        images[y] = x
        matched.append(f"{fmt_set(x)} <-> {fmt_set(y)}")
    for y in canonical_sort(right):
        if y not in images:
            return describe("right", y, from_right(y) if from_right else None), matched
    return None, matched


def _lp_to_aba_check(program, bound, name, theorem, lp_sem, aba_sem, label):
    framework = lp_to_aba(program)

    def describe(side, x, y):
        if side == "left":
            return f"I={fmt_set(x)} is {label} in P but delta(I)={fmt_set(y)} is not {label} in D_P"
        if side == "right":
            return f"S={fmt_set(x)} is {label} in D_P but I={fmt_set(y)} is not {label} in P"
        return f"I={fmt_set(x)} and I={fmt_set(y)} share an image"

    witness, matched = _compare(
        lp_sem(program, bound),
        aba_sem(framework, bound),
        lambda i: delta(program, i),
        lambda s: delta_inverse(program, s),
        describe,
    )
    return _report(theorem, program, name, witness, matched)


def check_lp_aba_stable(program: LogicProgram, bound: int | None = None, name: str = "") -> VerificationReport:
    """I is stable in P iff delta(I) is a stable extension of D_P."""
    return _lp_to_aba_check(program, bound, name, TheoremId.LP_TO_ABA_STABLE,
                            stable_models, stable_extensions, "stable")


def check_lp_aba_set_stable(program: LogicProgram, bound: int | None = None, name: str = "") -> VerificationReport:
    return _lp_to_aba_check(program, bound, name, TheoremId.LP_TO_ABA_SET_STABLE,
                            set_stable_models, set_stable_extensions, "set-stable")


def _rule_diff(expected: Iterable, actual: Iterable) -> str | None:
    expected, actual = set(expected), set(actual)
    missing = sorted(map(str, expected - actual))
    added = sorted(map(str, actual - expected))
    if missing:
        return f"rule {missing[0]} lost in the round trip"
    if added:
        return f"rule {added[0]} introduced by the round trip"
    return None


def _pairs_in_rules(framework: AbaFramework) -> AbaFramework:
    """Drop assumption/contrary pairs that no rule mentions.

    A program only knows atoms that occur in its rules, so such pairs
    cannot survive the trip through a logic program.
    """
    used = set()
    for r in framework.rules:
        used |= r.sentences
    keep = {a for a in framework.assumptions if a in used or framework.contrary_of(a) in used}
    contrary = {a: framework.contrary_of(a) for a in keep}
    return AbaFramework(framework.rules, keep, contrary, keep | set(contrary.values()))


def check_round_trips(instance: LogicProgram | AbaFramework, name: str = "") -> VerificationReport:
    """P equals P_{D_P}; for LP-ABA input, D_{P_D} equals rep(D)."""
    if isinstance(instance, LogicProgram):
        back, _ = lp_aba_to_lp(lp_to_aba(instance))
        witness = _rule_diff(instance.rules, back.rules)
        return _report(TheoremId.ROUND_TRIP_LP, instance, name, witness)

    if not is_lp_aba(instance):
        raise FragmentError("round trip from ABA needs an LP-ABA framework")
    program, record = lp_aba_to_lp(instance)
    back = lp_to_aba(program)
    full = rep_framework(instance)
    expected = _pairs_in_rules(full)
    dropped = sorted(full.assumptions - expected.assumptions)

    witness = _rule_diff(expected.rules, back.rules)
    if witness is None and expected.language != back.language:
        diff = sorted(expected.language ^ back.language)
        witness = f"languages differ on {fmt_set(diff)}"
    if witness is None and expected.assumptions != back.assumptions:
        witness = f"assumptions differ on {fmt_set(expected.assumptions ^ back.assumptions)}"
    if witness is None:
        for a in sorted(back.assumptions):
            if back.contrary_of(a) != expected.contrary_of(a):
                witness = f"contrary of {a} is {back.contrary_of(a)}, expected {expected.contrary_of(a)}"
                break
    if witness is None:
        # The record must name, for every assumption of D_{P_D}, the
        # assumption of D it renames, with the same contrary.
        for a in sorted(instance.assumptions):
            image = f"not {instance.contrary_of(a)}"
            if record.provenance.get(image) != f"rep-image-of({a})":
                witness = f"provenance does not map {image} back to {a}"
                break
    matched = [f"isolated pair dropped: {a}" for a in dropped]
    return _report(TheoremId.ROUND_TRIP_ABA, instance, name, witness, matched)


def _fragment_check(framework, bound, name, theorem, to_model, map_label):
    if not is_lp_aba(framework):
        raise FragmentError("check needs an LP-ABA framework")
    program, _ = lp_aba_to_lp(framework)
    matched_all = []
    for label, aba_sem, lp_sem in (
        ("stable", stable_extensions, stable_models),
        ("set-stable", set_stable_extensions, set_stable_models),
    ):
        def describe(side, x, y, label=label):
            if side == "left":
                return f"S={fmt_set(x)} is {label} in D but {map_label}={fmt_set(y)} is not {label} in P_D"
            if side == "right":
                return f"I={fmt_set(x)} is {label} in P_D but is not {map_label} for any {label} S of D"
            return f"S={fmt_set(x)} and S={fmt_set(y)} map to the same model"

        witness, matched = _compare(
            aba_sem(framework, bound),
            lp_sem(program, bound),
            lambda s: to_model(framework, s),
            None,
            describe,
        )
        if witness is not None:
            return _report(theorem, framework, name, witness)
        matched_all += [f"{label}: {m}" for m in matched]
    return _report(theorem, framework, name, None, matched_all)


def check_lp_aba_fragment(framework: AbaFramework, bound: int | None = None, name: str = "") -> VerificationReport:
    """S in sem(D) iff Th_D(S) minus A is a sem-model of P_D, for stable and set-stable."""
    return _fragment_check(framework, bound, name, TheoremId.LP_ABA_FRAGMENT,
                           extension_to_model, "Th(S)\\A")


def check_projection(framework: AbaFramework, bound: int | None = None, name: str = "") -> VerificationReport:
    """Extensions of the LP-ABA normal form, cut down to the original assumptions, are exactly those of D."""
    normalised, record = aba_to_lp_aba(framework)
    original = record.projection
    matched = []
    for label, sem in (("stable", stable_extensions), ("set-stable", set_stable_extensions)):
        projected = {s & original for s in sem(normalised, bound)}
        target = set(sem(framework, bound))
        for s in canonical_sort(projected - target):
            return _report(TheoremId.PROJECTION, framework, name,
                           f"{fmt_set(s)} is the projection of a {label} extension of D' but not {label} in D")
        for s in canonical_sort(target - projected):
            return _report(TheoremId.PROJECTION, framework, name,
                           f"{fmt_set(s)} is {label} in D but no {label} extension of D' projects onto it")
        for s in canonical_sort(sem(normalised, bound)):
            matched.append(f"{label}: {fmt_set(s)} -> {fmt_set(s & original)}")
    return _report(TheoremId.PROJECTION, framework, name, None, matched)


def check_constraint_reading(
    framework: AbaFramework, rule: AbaRule, bound: int | None = None, name: str = ""
) -> VerificationReport:
    """Adding ``a <- M`` keeps exactly the stable S with M not inside S or a in S."""
    if rule.head not in framework.assumptions or not rule.body <= framework.assumptions:
        raise FragmentError(f"{rule} must have an assumption head and an assumption body")
    extended = framework.with_rules(framework.rules + (rule,))
    before = stable_extensions(framework, bound)
    expected = {s for s in before if not rule.body <= s or rule.head in s}
    after = set(stable_extensions(extended, bound))
    witness = None
    for s in canonical_sort(after ^ expected):
        side = "gained" if s in after else "lost"
        witness = f"adding {rule} {side} stable extension {fmt_set(s)}"
        break
    matched = [fmt_set(s) for s in canonical_sort(after)]
    return _report(TheoremId.CONSTRAINT_READING, (framework, rule), name, witness, matched)


def check_stable_in_set_stable(instance: LogicProgram | AbaFramework, bound: int | None = None,
                               name: str = "") -> VerificationReport:
    """Every stable model/extension is set-stable; flat frameworks have equal sets."""
    if isinstance(instance, LogicProgram):
        stable, set_stable = stable_models(instance, bound), set(set_stable_models(instance, bound))
    else:
        stable, set_stable = stable_extensions(instance, bound), set(set_stable_extensions(instance, bound))
    witness = None
    for s in stable:
        if s not in set_stable:
            witness = f"{fmt_set(s)} is stable but not set-stable"
            break
    if witness is None and isinstance(instance, AbaFramework) and is_flat(instance):
        extra = canonical_sort(set_stable - set(stable))
        if extra:
            witness = f"{fmt_set(extra[0])} is set-stable but not stable in a flat framework"
    return _report(TheoremId.STABLE_IN_SET_STABLE, instance, name, witness)


# -- shrinking ------------------------------------------------------------

def _smaller_programs(program: LogicProgram):
    rules = program.rules
    for i in range(len(rules)):
        yield LogicProgram(rules[:i] + rules[i + 1:])
    for atom in sorted(program.herbrand_base):
        kept = [LpRule(r.head, frozenset(l for l in r.body if l.atom != atom))
                for r in rules if r.head.atom != atom]
        yield LogicProgram(kept)


def _smaller_frameworks(framework: AbaFramework):
    rules = framework.rules
    for i in range(len(rules)):
        yield framework.with_rules(rules[:i] + rules[i + 1:])
    for a in sorted(framework.assumptions):
        contrary = {b: framework.contrary_of(b) for b in framework.assumptions if b != a}
        yield AbaFramework(rules, contrary.keys(), contrary, framework.language)
    mentioned = set(framework.assumptions) | set(framework.contraries)
    for r in rules:
        mentioned |= r.sentences
    for s in sorted(framework.language - mentioned):
        yield AbaFramework(rules, framework.assumptions, framework.contrary, framework.language - {s})


def _smaller(instance):
    if isinstance(instance, LogicProgram):
        yield from _smaller_programs(instance)
    elif isinstance(instance, AbaFramework):
        yield from _smaller_frameworks(instance)
    else:
        framework, rule = instance
        for smaller in _smaller_frameworks(framework):
            if rule.head in smaller.assumptions and rule.body <= smaller.assumptions:
                yield (smaller, rule)


def shrink(instance, fails: Callable[[object], bool]):
    """Greedily drop rules, assumptions and atoms while ``fails`` stays true."""
    current = instance
    progress = True
    while progress:
        progress = False
        for candidate in _smaller(current):
            try:
                still_failing = fails(candidate)
            except NafabaError:
                still_failing = False
            if still_failing:
                current = candidate
                progress = True
                break
    return current


def _describe_instance(instance) -> str:
    if isinstance(instance, tuple):
        framework, rule = instance
        return f"{serialize(framework)} + {rule}"
    return serialize(instance)


def run_check(check: Callable[..., VerificationReport], instance, name: str = "") -> VerificationReport:
    """Run ``check``; on failure, shrink the instance and report the small witness."""
    call = (lambda x: check(*x)) if isinstance(instance, tuple) else check
    report = call(instance)
    if report.passed:
        return replace(report, instance=name) if name else report
    small = shrink(instance, lambda x: not call(x).passed)
    small_report = call(small)
    witness = f"{small_report.witness}; shrunk instance: {_one_line(_describe_instance(small))}"
    return replace(report, instance=name or report.instance, witness=witness)


# -- batch drivers ----------------------------------------------------------

def checks_for(instance) -> list[Callable[..., VerificationReport]]:
    """The checks that apply to a single program or framework."""
    if isinstance(instance, LogicProgram):
        return [check_lp_aba_stable, check_lp_aba_set_stable, check_round_trips, check_stable_in_set_stable]
    checks: list[Callable[..., VerificationReport]] = []
    literal_language = all(is_literal_sentence(s) for s in instance.language)
    if is_lp_aba(instance) and literal_language:
        checks += [check_round_trips, check_lp_aba_fragment]
    if literal_language:
        checks.append(check_projection)
    checks.append(check_stable_in_set_stable)
    return checks


def constraint_pairs(framework: AbaFramework) -> list[tuple[AbaFramework, AbaRule]]:
    """Each rule built from assumptions only, split off from the rest of the framework."""
    pairs = []
    for i, r in enumerate(framework.rules):
        if r.head in framework.assumptions and r.body <= framework.assumptions:
            rest = framework.rules[:i] + framework.rules[i + 1:]
            pairs.append((framework.with_rules(rest), r))
    return pairs


def verify_instance(instance, name: str = "") -> list[VerificationReport]:
    reports = [run_check(c, instance, name) for c in checks_for(instance)]
    if isinstance(instance, AbaFramework):
        reports += [run_check(check_constraint_reading, pair, name) for pair in constraint_pairs(instance)]
    return reports


def _fuzz_one(args) -> list[VerificationReport]:
    fragment, seed, index = args
    cfg = with_seed(FUZZ_DEFAULTS[fragment], derive_seed(seed, index))
    name = f"{fragment}#{index}"
    instance = generate_instance(cfg)
    reports = [run_check(c, instance, name) for c in checks_for(instance)]
    if fragment not in LP_FRAGMENTS:
        reports.append(run_check(check_constraint_reading, generate_constraint_pair(cfg), name))
    return reports


def fuzz(fragment: str, seed: int, count: int, jobs: int = 1) -> list[VerificationReport]:
    """Check ``count`` seeded random instances; output order is by instance index."""
    if fragment not in FUZZ_DEFAULTS:
        raise ValueError(f"unknown fragment {fragment!r}")
    tasks = [(fragment, seed, i) for i in range(count)]
    if jobs > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_fuzz_one, tasks, chunksize=max(1, count // (4 * jobs))))
    else:
        batches = [_fuzz_one(t) for t in tasks]
    return [r for batch in batches for r in batch]
