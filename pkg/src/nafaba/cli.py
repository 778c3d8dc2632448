"""Command-line front end: ``nafaba solve|translate|check-fragment|verify|fuzz``.

Exit codes: 0 on success (at least one solution, or every check passed),
1 when there is no solution or a check failed, 2 on any error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ._enum import canonical_sort
from .aba import (
    AbaFramework,
    is_bipolar_aba,
    is_flat,
    is_lp_aba,
    lp_aba_violation,
    set_stable_extensions,
    stable_extensions,
)
from .errors import NafabaError, ParseError
from .formats import parse, serialize
from .generate import FRAGMENTS
from .lp import LogicProgram, is_bipolar_lp, set_stable_models, stable_models
from .translate import aba_to_lp, aba_to_lp_aba, lp_aba_to_lp, lp_to_aba
from .verify import fuzz, verify_instance

EXIT_OK, EXIT_NONE, EXIT_ERROR = 0, 1, 2
KINDS = ("lp", "aba")
DIRECTIONS = ("lp-to-aba", "aba-to-lp", "aba-to-lp-aba")
SEMANTICS = ("stable", "set-stable")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    inputs: list[str]
    semantics: str | None = None
    direction: str | None = None
    kind: str | None = None
    bound: int | None = None
    seed: int = 0
    count: int = 100
    fragment: str = "lp"
    output_format: str = "human"
    provenance: bool = False
    jobs: int = 1
    require: str | None = None
    verify_all: str | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "CliConfig":
        inputs = getattr(ns, "input", None)
        if isinstance(inputs, str):
            inputs = [inputs]
        return cls(
            command=ns.command,
            inputs=list(inputs or []),
            semantics=getattr(ns, "semantics", None),
            direction=getattr(ns, "direction", None),
            kind=getattr(ns, "kind", None),
            bound=getattr(ns, "bound", None),
            seed=getattr(ns, "seed", 0),
            count=getattr(ns, "count", 100),
            fragment=getattr(ns, "fragment", "lp"),
            output_format=getattr(ns, "format", "human"),
            provenance=getattr(ns, "provenance", False),
            jobs=getattr(ns, "jobs", 1),
            require=getattr(ns, "require", None),
            verify_all=getattr(ns, "all", None),
        )


def fmt_braces(members) -> str:
    return "{" + ", ".join(sorted(members)) + "}"


def infer_kind(path: str, override: str | None) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lstrip(".")
    if suffix in KINDS:
        return suffix
    raise UsageError(f"cannot infer the kind of {path!r}; pass --kind lp or --kind aba")


def load(path: str, kind: str | None = None) -> LogicProgram | AbaFramework:
    kind = infer_kind(path, kind)
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse(text, kind)


# -- subcommands ------------------------------------------------------------

def cmd_solve(cfg: CliConfig, out) -> int:
    instance = load(cfg.inputs[0], cfg.kind)
    if isinstance(instance, LogicProgram):
        solver = stable_models if cfg.semantics == "stable" else set_stable_models
    else:
        solver = stable_extensions if cfg.semantics == "stable" else set_stable_extensions
    solutions = canonical_sort(solver(instance, cfg.bound))
    for i, s in enumerate(solutions):
        if cfg.output_format == "tabular":
            out.write(f"{cfg.semantics}\t{i}\t{','.join(sorted(s))}\n")
        else:
            out.write(fmt_braces(s) + "\n")
    return EXIT_OK if solutions else EXIT_NONE


def cmd_translate(cfg: CliConfig, out) -> int:
    instance = load(cfg.inputs[0], cfg.kind)
    record = None
    if cfg.direction == "lp-to-aba":
        if not isinstance(instance, LogicProgram):
            raise UsageError("lp-to-aba needs a logic program as input")
        target = lp_to_aba(instance)
    else:
        if not isinstance(instance, AbaFramework):
            raise UsageError(f"{cfg.direction} needs a framework as input")
        if cfg.direction == "aba-to-lp-aba":
            target, record = aba_to_lp_aba(instance)
        elif is_lp_aba(instance):
            target, record = lp_aba_to_lp(instance)
        else:
            target, record = aba_to_lp(instance)
    out.write(serialize(target))
    if cfg.provenance and record is not None:
        for line in record.lines():
            out.write(line + "\n")
    return EXIT_OK


def fragment_table(instance) -> dict[str, tuple[bool, str]]:
    if isinstance(instance, LogicProgram):
        normal = all(not r.head.negated for r in instance.rules)
        return {
            "normal-lp": (normal, "" if normal else "some rule has a naf head"),
            "bipolar-lp": (is_bipolar_lp(instance), ""),
        }
    violation = lp_aba_violation(instance)
    lp_aba = (True, "") if violation is None else (False, f"clause {violation[0]}: {violation[1]}")
    return {
        "flat": (is_flat(instance), ""),
        "bipolar-aba": (is_bipolar_aba(instance), ""),
        "lp-aba": lp_aba,
    }


def cmd_check_fragment(cfg: CliConfig, out) -> int:
    instance = load(cfg.inputs[0], cfg.kind)
    table = fragment_table(instance)
    if cfg.require and cfg.require not in table:
        raise UsageError(f"unknown fragment {cfg.require!r} for this input; choose from {', '.join(table)}")
    for name, (holds, why) in table.items():
        status = "yes" if holds else "no"
        if cfg.output_format == "tabular":
            out.write(f"{name}\t{status}\t{why or '-'}\n")
        else:
            out.write(f"{name}: {status}" + (f" ({why})" if why else "") + "\n")
    if cfg.require:
        return EXIT_OK if table[cfg.require][0] else EXIT_NONE
    return EXIT_OK


def golden_dir() -> Path:
    return Path(str(resources.files("nafaba") / "golden"))


def _verify_paths(cfg: CliConfig) -> list[Path]:
    paths = [Path(p) for p in cfg.inputs]
    if cfg.verify_all is not None:
        root = Path(cfg.verify_all) if cfg.verify_all else golden_dir()
        if not root.is_dir():
            raise UsageError(f"{root} is not a directory")
        paths += sorted(p for p in root.iterdir() if p.suffix in (".lp", ".aba"))
    if not paths:
        raise UsageError("verify needs instance files or --all")
    return paths


def emit_reports(reports, cfg: CliConfig, out) -> int:
    failed = 0
    for r in reports:
        if cfg.output_format == "tabular":
            out.write(r.to_record() + "\n")
        else:
            line = f"{r.status.upper()} {r.theorem} {r.instance} [{r.instance_hash}]"
            if r.witness:
                line += f": {r.witness}"
            out.write(line + "\n")
        failed += not r.passed
    return EXIT_NONE if failed else EXIT_OK


def cmd_verify(cfg: CliConfig, out) -> int:
    reports = []
    for path in _verify_paths(cfg):
        instance = load(str(path), cfg.kind)
        reports += verify_instance(instance, path.name)
    return emit_reports(reports, cfg, out)


def cmd_fuzz(cfg: CliConfig, out) -> int:
    if cfg.count < 0:
        raise UsageError("--count must be non-negative")
    reports = fuzz(cfg.fragment, cfg.seed, cfg.count, cfg.jobs)
    return emit_reports(reports, cfg, out)


COMMANDS = {
    "solve": cmd_solve,
    "translate": cmd_translate,
    "check-fragment": cmd_check_fragment,
    "verify": cmd_verify,
    "fuzz": cmd_fuzz,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nafaba",
        description="Stable and set-stable semantics for naf-head logic programs and non-flat ABA.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, many=False):
        p.add_argument("input", nargs="*" if many else None, help="input file ('-' for stdin)")
        p.add_argument("--kind", choices=KINDS, help="input kind (default: from file extension)")
        p.add_argument("--format", choices=("human", "tabular"), default="human")

    p = sub.add_parser("solve", help="enumerate models or extensions")
    common(p)
    p.add_argument("--semantics", choices=SEMANTICS, required=True)
    p.add_argument("--bound", type=int, help="largest enumerable universe (default: $NAFABA_BOUND or 24)")

    p = sub.add_parser("translate", help="translate between programs and frameworks")
    common(p)
    p.add_argument("--direction", choices=DIRECTIONS, required=True)
    p.add_argument("--provenance", action="store_true", help="append 'generated<TAB>origin' lines")

    p = sub.add_parser("check-fragment", help="report which syntactic fragments an input belongs to")
    common(p)
    p.add_argument("--require", help="exit 1 unless the input lies in this fragment")

    p = sub.add_parser("verify", help="run the correspondence checks on instance files")
    common(p, many=True)
    p.add_argument("--all", nargs="?", const="", metavar="DIR",
                   help="check every .lp/.aba file in DIR (default: the bundled golden corpus)")

    p = sub.add_parser("fuzz", help="run the correspondence checks on seeded random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--fragment", choices=FRAGMENTS, default="lp")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--format", choices=("human", "tabular"), default="tabular")
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    cfg = CliConfig.from_args(ns)
    try:
        return COMMANDS[cfg.command](cfg, out)
    except (NafabaError, UsageError, ValueError, OSError) as exc:
        where = f"{cfg.inputs[0]}:" if cfg.inputs and isinstance(exc, ParseError) else ""
        print(f"nafaba: {where}{exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
