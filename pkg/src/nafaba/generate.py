"""Seeded random programs and frameworks for fuzzing."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, replace

from ._enum import DEFAULT_BOUND
from .aba import AbaFramework, AbaRule
from .lp import Literal, LogicProgram, LpRule

FRAGMENTS = ("lp", "bipolar-lp", "aba", "lp-aba", "bipolar-aba")
LP_FRAGMENTS = ("lp", "bipolar-lp")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class InstanceGenConfig:
    """Shape of a random instance.

    ``atoms`` counts atoms for programs and assumptions for frameworks.
    ``naf_head_prob`` is the chance that a rule head is naf-negated (LP) or
    an assumption (ABA); zero yields normal programs and flat frameworks.
    ``sentences`` counts the extra non-assumption sentences of a general
    framework.
    """

    seed: int = 0
    fragment: str = "lp"
    atoms: tuple[int, int] = (1, 7)
    rules: tuple[int, int] = (0, 10)
    naf_head_prob: float = 0.3
    naf_body_prob: float = 0.5
    sentences: tuple[int, int] = (1, 4)
    max_body: int = 3

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must fit in 64 bits, got {self.seed}")
        if self.fragment not in FRAGMENTS:
            raise ConfigError(f"unknown fragment {self.fragment!r}; choose from {', '.join(FRAGMENTS)}")
        for name in ("atoms", "rules", "sentences"):
            lo, hi = getattr(self, name)
            if not 0 <= lo <= hi:
                raise ConfigError(f"bad {name} range {lo}..{hi}")
        for name in ("naf_head_prob", "naf_body_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ConfigError(f"{name} must lie in [0, 1], got {p}")
        if self.max_body < 0:
            raise ConfigError("max_body must be non-negative")
        if self.atoms[1] > DEFAULT_BOUND:
            raise ConfigError(f"at most {DEFAULT_BOUND} atoms can be enumerated, got {self.atoms[1]}")
        if self.rules[0] > 0 and self.atoms[0] == 0:
            raise ConfigError(f"{self.fragment} instances with rules need at least one atom")


def derive_seed(seed: int, index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _names(prefix_pool: str, count: int, fallback: str) -> list[str]:
    if count <= len(prefix_pool):
        return list(prefix_pool[:count])
    return [f"{fallback}{i}" for i in range(count)]


def _random_lp(cfg: InstanceGenConfig, rng: random.Random) -> LogicProgram:
    n = rng.randint(*cfg.atoms)
    atoms = _names("pqrstuvwxyz", n, "x")
    m = rng.randint(*cfg.rules) if n else 0
    rules = []
    for _ in range(m):
        head = Literal(rng.choice(atoms), rng.random() < cfg.naf_head_prob)
        if cfg.fragment == "bipolar-lp":
            body = {Literal(rng.choice(atoms), True)}
        else:
            k = rng.randint(0, min(cfg.max_body, n))
            body = {Literal(a, rng.random() < cfg.naf_body_prob) for a in rng.sample(atoms, k)}
        rules.append(LpRule(head, frozenset(body)))
    return LogicProgram(rules)


def _random_body(cfg: InstanceGenConfig, rng: random.Random, pool: list[str]) -> frozenset[str]:
    k = rng.randint(0, min(cfg.max_body, len(pool)))
    return frozenset(rng.sample(pool, k))


def _random_general_aba(cfg: InstanceGenConfig, rng: random.Random) -> AbaFramework:
    k = rng.randint(*cfg.atoms)
    assumptions = _names("abcdefgh", k, "a")
    others = _names("pqrstuvw", rng.randint(*cfg.sentences), "s")
    language = assumptions + others
    contrary = {a: rng.choice(others if others and rng.random() < 0.8 else language) for a in assumptions}
    rules = []
    for _ in range(rng.randint(*cfg.rules) if language else 0):
        use_assumption = rng.random() < cfg.naf_head_prob
        if not others:
            if not cfg.naf_head_prob:
                continue
            use_assumption = True
        head = rng.choice(assumptions if use_assumption and assumptions else others)
        rules.append(AbaRule(head, _random_body(cfg, rng, [s for s in language if s != head])))
    return AbaFramework(rules, assumptions, contrary, language)


def _random_lp_aba(cfg: InstanceGenConfig, rng: random.Random) -> AbaFramework:
    k = rng.randint(*cfg.atoms)
    assumptions = _names("abcdefgh", k, "a")
    contrary = {a: f"c{a}" for a in assumptions}
    contraries = list(contrary.values())
    language = assumptions + contraries
    rules = []
    for _ in range(rng.randint(*cfg.rules) if k else 0):
        head = rng.choice(assumptions if rng.random() < cfg.naf_head_prob else contraries)
        rules.append(AbaRule(head, _random_body(cfg, rng, [s for s in language if s != head])))
    return AbaFramework(rules, assumptions, contrary, language)


def _random_bipolar_aba(cfg: InstanceGenConfig, rng: random.Random) -> AbaFramework:
    k = rng.randint(*cfg.atoms)
    assumptions = _names("abcdefgh", k, "a")
    contrary: dict[str, str] = {}
    for a in assumptions:
        shared = list(contrary.values())
        contrary[a] = rng.choice(shared) if shared and rng.random() < 0.2 else f"c{a}"
    contraries = sorted(set(contrary.values()))
    rules = []
    for _ in range(rng.randint(*cfg.rules) if k else 0):
        body = rng.choice(assumptions)
        if rng.random() < cfg.naf_head_prob and k > 1:
            head = rng.choice([a for a in assumptions if a != body])
        else:
            head = rng.choice(contraries)
        rules.append(AbaRule(head, frozenset((body,))))
    return AbaFramework(rules, assumptions, contrary)


_GENERATORS = {
    "lp": _random_lp,
    "bipolar-lp": _random_lp,
    "aba": _random_general_aba,
    "lp-aba": _random_lp_aba,
    "bipolar-aba": _random_bipolar_aba,
}


def generate_instance(cfg: InstanceGenConfig) -> LogicProgram | AbaFramework:
    """Deterministic in ``cfg``: equal configs give equal instances."""
    rng = random.Random(cfg.seed)
    return _GENERATORS[cfg.fragment](cfg, rng)


def generate_constraint_pair(cfg: InstanceGenConfig) -> tuple[AbaFramework, AbaRule]:
    """A framework plus a rule ``a <- M`` built from its assumptions only."""
    if cfg.fragment in LP_FRAGMENTS:
        raise ConfigError("constraint pairs need an ABA fragment")
    if cfg.atoms[0] == 0:
        raise ConfigError("constraint pairs need at least one assumption")
    framework = generate_instance(cfg)
    rng = random.Random(derive_seed(cfg.seed, 0x5EED))
    assumptions = sorted(framework.assumptions)
    head = rng.choice(assumptions)
    body = rng.sample(assumptions, rng.randint(0, min(2, len(assumptions))))
    return framework, AbaRule(head, frozenset(body))


def with_seed(cfg: InstanceGenConfig, seed: int) -> InstanceGenConfig:
    return replace(cfg, seed=seed)


# Shapes used by the fuzz command and the acceptance suite.
FUZZ_DEFAULTS = {
    "lp": InstanceGenConfig(fragment="lp", atoms=(1, 7), rules=(0, 10)),
    "bipolar-lp": InstanceGenConfig(fragment="bipolar-lp", atoms=(1, 7), rules=(0, 10)),
    "aba": InstanceGenConfig(fragment="aba", atoms=(1, 6), rules=(0, 10), sentences=(1, 4)),
    "lp-aba": InstanceGenConfig(fragment="lp-aba", atoms=(1, 6), rules=(0, 10)),
    "bipolar-aba": InstanceGenConfig(fragment="bipolar-aba", atoms=(1, 6), rules=(0, 10)),
}

