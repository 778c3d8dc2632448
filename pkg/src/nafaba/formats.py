"""Text formats for programs (``.lp``) and frameworks (``.aba``).

LP::

    % comment
    p :- not q.
    not s :- s, not p.
    s.

ABA::

    #assumption a.
    #contrary a = p.
    p <- a, b.
    q <- .
    #sentence r.      % only needed for sentences mentioned nowhere else

ABA sentences are identifiers, ``not`` followed by an identifier, or
double-quoted strings for anything else.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Iterator

from .aba import AbaFramework, AbaRule
from .errors import ParseError
from .lp import Literal, LogicProgram, LpRule, NAF, is_atom_name

log = logging.getLogger(__name__)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<word>[A-Za-z0-9_]+)
  | (?P<directive>\#[A-Za-z_]+)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<op>:-|<-|[,.=])
    """,
    re.VERBOSE,
)
_WORD_RE = re.compile(r"[A-Za-z0-9_]+\Z")


@dataclass(frozen=True)
class SourceLocation:
    line: int
    column: int


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int

    @property
    def location(self) -> SourceLocation:
        return SourceLocation(self.line, self.column)


def tokenize(text: str) -> Iterator[Token]:
    line, line_start, i = 1, 0, 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        col = i - line_start + 1
        if m is None:
            if text[i] == '"':
                raise ParseError("unterminated string", line, col)
            raise ParseError(f"unexpected character {text[i]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            yield Token(kind, value, line, col)
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = i + value.rindex("\n") + 1
        i = m.end()
    yield Token("eof", "", line, len(text) - line_start + 1)


class _Cursor:
    def __init__(self, text: str):
        self.tokens = list(tokenize(text))
        self.pos = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at(self, kind: str, value: str | None = None) -> bool:
        tok = self.peek
        return tok.kind == kind and (value is None or tok.value == value)

    def expect(self, kind: str, value: str, what: str) -> Token:
        if not self.at(kind, value):
            self.fail(f"expected {what}")
        return self.next()

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.peek
        found = "end of input" if tok.kind == "eof" else repr(tok.value)
        raise ParseError(f"{message}, found {found}", tok.line, tok.column)


# -- logic programs ---------------------------------------------------------

def _lp_atom(cur: _Cursor) -> str:
    tok = cur.peek
    if tok.kind != "word":
        cur.fail("expected an atom")
    if tok.value == NAF:
        cur.fail("expected an atom after 'not'")
    if not is_atom_name(tok.value):
        raise ParseError(f"invalid atom name {tok.value!r}", tok.line, tok.column)
    return cur.next().value


def _lp_literal(cur: _Cursor) -> Literal:
    if cur.at("word", NAF):
        cur.next()
        return Literal(_lp_atom(cur), True)
    return Literal(_lp_atom(cur))


def parse_lp(text: str) -> LogicProgram:
    cur = _Cursor(text)
    rules: list[LpRule] = []
    seen: set[LpRule] = set()
    while not cur.at("eof"):
        start = cur.peek
        if cur.at("op", ":-"):
            cur.fail("headless rules are not allowed in source programs")
        head = _lp_literal(cur)
        body: list[Literal] = []
        if cur.at("op", ":-"):
            cur.next()
            body.append(_lp_literal(cur))
            while cur.at("op", ","):
                cur.next()
                body.append(_lp_literal(cur))
        cur.expect("op", ".", "'.' at end of clause")
        rule = LpRule(head, frozenset(body))
        if rule in seen:
            log.warning("%d:%d: duplicate clause %s", start.line, start.column, rule)
        seen.add(rule)
        rules.append(rule)
    return LogicProgram(rules)


def serialize_lp(program: LogicProgram) -> str:
    lines = sorted(str(r) for r in program.rules)
    return "".join(line + "\n" for line in lines)


# -- ABA frameworks -------------------------------------------------------

def _unquote(token: Token) -> str:
    body = token.value[1:-1]
    return re.sub(r"\\(.)", r"\1", body)


def _aba_sentence(cur: _Cursor) -> str:
    tok = cur.peek
    if tok.kind == "string":
        cur.next()
        value = _unquote(tok)
        if not value:
            raise ParseError("empty sentence", tok.line, tok.column)
        return value
    if tok.kind != "word":
        cur.fail("expected a sentence")
    cur.next()
    if tok.value != NAF:
        return tok.value
    inner = cur.peek
    if inner.kind != "word" or inner.value == NAF:
        cur.fail("expected an identifier after 'not'")
    cur.next()
    return f"{NAF} {inner.value}"


def parse_aba(text: str) -> AbaFramework:
    cur = _Cursor(text)
    rules: list[AbaRule] = []
    assumptions: dict[str, Token] = {}
    contrary: dict[str, tuple[str, Token]] = {}
    extra: set[str] = set()
    while not cur.at("eof"):
        start = cur.peek
        if start.kind == "directive":
            cur.next()
            if start.value == "#assumption":
                assumptions.setdefault(_aba_sentence(cur), start)
            elif start.value == "#contrary":
                a = _aba_sentence(cur)
                cur.expect("op", "=", "'=' in contrary declaration")
                c = _aba_sentence(cur)
                if a in contrary:
                    raise ParseError(f"duplicate contrary declaration for {a}", start.line, start.column)
                contrary[a] = (c, start)
            elif start.value == "#sentence":
                extra.add(_aba_sentence(cur))
            else:
                raise ParseError(f"unknown directive {start.value}", start.line, start.column)
            cur.expect("op", ".", "'.' at end of statement")
            continue
        if cur.at("op", "<-"):
            cur.fail("rule without a head")
        head = _aba_sentence(cur)
        cur.expect("op", "<-", "'<-' after rule head")
        body: list[str] = []
        if not cur.at("op", "."):
            body.append(_aba_sentence(cur))
            while cur.at("op", ","):
                cur.next()
                body.append(_aba_sentence(cur))
        cur.expect("op", ".", "'.' at end of rule")
        rules.append(AbaRule(head, frozenset(body)))

    for a, (_, tok) in contrary.items():
        if a not in assumptions:
            raise ParseError(f"contrary declared for non-assumption {a}", tok.line, tok.column)
    for a, tok in assumptions.items():
        if a not in contrary:
            raise ParseError(f"contrary undefined for {a}", tok.line, tok.column)

    language = set(extra) | set(assumptions) | {c for c, _ in contrary.values()}
    for r in rules:
        language |= r.sentences
    return AbaFramework(rules, assumptions, {a: c for a, (c, _) in contrary.items()}, language)


def format_sentence(sentence: str) -> str:
    if _WORD_RE.match(sentence) and sentence != NAF:
        return sentence
    head, _, rest = sentence.partition(" ")
    if head == NAF and _WORD_RE.match(rest) and rest != NAF:
        return sentence
    escaped = sentence.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _format_aba_rule(rule: AbaRule) -> str:
    body = ", ".join(sorted(format_sentence(b) for b in rule.body))
    return f"{format_sentence(rule.head)} <- {body}." if body else f"{format_sentence(rule.head)} <- ."


def serialize_aba(framework: AbaFramework) -> str:
    lines = [f"#assumption {format_sentence(a)}." for a in sorted(framework.assumptions)]
    lines += [
        f"#contrary {format_sentence(a)} = {format_sentence(framework.contrary_of(a))}."
        for a in sorted(framework.assumptions)
    ]
    lines += sorted(_format_aba_rule(r) for r in framework.rules)
    mentioned = set(framework.assumptions) | set(framework.contraries)
    for r in framework.rules:
        mentioned |= r.sentences
    lines += [f"#sentence {format_sentence(s)}." for s in sorted(framework.language - mentioned)]
    return "".join(line + "\n" for line in lines)


def parse(text: str, kind: str):
    if kind == "lp":
        return parse_lp(text)
    if kind == "aba":
        return parse_aba(text)
    raise ValueError(f"unknown kind {kind!r}")


def serialize(value) -> str:
    if isinstance(value, LogicProgram):
        return serialize_lp(value)
    if isinstance(value, AbaFramework):
        return serialize_aba(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")
