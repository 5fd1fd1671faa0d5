"""Reading and writing rewrite problems in the WST (old TPDB) text format.

A problem file is a sequence of parenthesized sections::

    (VAR x y)
    (RULES
    f(x,y) -> f(y,x)
    a -> b
    )
    (STRATEGY INNERMOST)
    (COMMENT free text, parens balanced)

Identifiers are maximal runs of characters other than whitespace,
parentheses, comma and double quote; ``->`` and ``->=`` are reserved
arrow tokens, never identifiers.  Identifiers listed in ``VAR`` are
variables, every other identifier is a function symbol (so undeclared
nullary names are constants).  Rules are juxtaposed inside ``RULES`` and
disambiguated by the arrows; ``->=`` introduces a weak (relative) rule.
``STRATEGY`` admits FULL, INNERMOST or OUTERMOST.  ``THEORY`` and any
unknown section are preserved verbatim; a ``THEORY`` section additionally
sets a warning flag since its semantics are not interpreted here.

Function symbols must be used with one arity throughout; parsing fails
otherwise unless the check is explicitly disabled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from . import rule as _rule, term as _term
from .rewriting import Strategy
from .rule import Rule
from .term import Fun, Term, Var


class ParseError(Exception):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Problem:
    variables: tuple = ()
    strict_rules: tuple[Rule, ...] = ()
    weak_rules: tuple[Rule, ...] = ()
    strategy: Optional[Strategy] = None
    comment: Optional[str] = None
    preserved_sections: tuple[tuple[str, str], ...] = ()
    has_theory: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "strict_rules", tuple(self.strict_rules))
        object.__setattr__(self, "weak_rules", tuple(self.weak_rules))
        object.__setattr__(
            self, "preserved_sections", tuple((k, b) for k, b in self.preserved_sections)
        )


@dataclass(frozen=True)
class _Token:
    kind: str  # lparen rparen comma quote ident arrow
    text: str
    line: int
    col: int


_SPECIAL = {"(": "lparen", ")": "rparen", ",": "comma", '"': "quote"}

_STRATEGY_NAMES = {
    "FULL": Strategy.FULL,
    "INNERMOST": Strategy.INNERMOST,
    "OUTERMOST": Strategy.OUTERMOST,
}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.i = 0
        self.line = 1
        self.col = 1

    def at_eof(self) -> bool:
        return self.i >= len(self.text)

    def fail(self, message: str) -> None:
        raise ParseError(message, self.line, self.col)

    def _step(self) -> None:
        if self.text[self.i] == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        self.i += 1

    def skip_ws(self) -> None:
        while not self.at_eof() and self.text[self.i].isspace():
            self._step()

    def next_token(self) -> _Token:
        line, col = self.line, self.col
        c = self.text[self.i]
        if c in _SPECIAL:
            self._step()
            return _Token(_SPECIAL[c], c, line, col)
        start = self.i
        while not self.at_eof():
            c = self.text[self.i]
            if c.isspace() or c in _SPECIAL:
                break
            self._step()
        text = self.text[start : self.i]
        kind = "arrow" if text in ("->", "->=") else "ident"
        return _Token(kind, text, line, col)

    def capture_raw(self) -> str:
        """Consume verbatim text up to the matching ')' of the open section."""
        start = self.i
        depth = 0
        while not self.at_eof():
            c = self.text[self.i]
            if c == "(":
                depth += 1
            elif c == ")":
                if depth == 0:
                    raw = self.text[start : self.i]
                    self._step()
                    return raw
                depth -= 1
            self._step()
        self.fail("unbalanced parentheses")


def parse(text: str, *, check_arity: bool = True) -> Problem:
    """Parse a WST problem, or raise `ParseError` with a source position."""
    sc = _Scanner(text)
    variables: list = []
    var_set: set = set()
    seen: set = set()
    rule_tokens: list[_Token] = []
    rules_end: Optional[_Token] = None
    strategy: Optional[Strategy] = None
    comment: Optional[str] = None
    preserved: list[tuple[str, str]] = []
    has_theory = False

    while True:
        sc.skip_ws()
        if sc.at_eof():
            break
        tok = sc.next_token()
        if tok.kind == "rparen":
            raise ParseError("unbalanced parentheses", tok.line, tok.col)
        if tok.kind != "lparen":
            raise ParseError(f"expected '(', found {tok.text!r}", tok.line, tok.col)
        sc.skip_ws()
        if sc.at_eof():
            sc.fail("unbalanced parentheses")
        key = sc.next_token()
        if key.kind in ("lparen", "rparen", "comma", "quote"):
            raise ParseError("expected section key", key.line, key.col)
        name = key.text
        if name in ("VAR", "RULES", "STRATEGY"):
            if name in seen:
                raise ParseError(f"duplicate {name} section", key.line, key.col)
            seen.add(name)
        if name == "VAR":
            while True:
                sc.skip_ws()
                if sc.at_eof():
                    sc.fail("unbalanced parentheses")
                tok = sc.next_token()
                if tok.kind == "rparen":
                    break
                if tok.kind != "ident":
                    raise ParseError(
                        f"expected variable name, found {tok.text!r}", tok.line, tok.col
                    )
                if tok.text not in var_set:
                    var_set.add(tok.text)
                    variables.append(tok.text)
        elif name == "RULES":
            depth = 0
            while True:
                sc.skip_ws()
                if sc.at_eof():
                    sc.fail("unbalanced parentheses")
                tok = sc.next_token()
                if tok.kind == "lparen":
                    depth += 1
                elif tok.kind == "rparen":
                    if depth == 0:
                        rules_end = tok
                        break
                    depth -= 1
                rule_tokens.append(tok)
        elif name == "STRATEGY":
            sc.skip_ws()
            if sc.at_eof():
                sc.fail("unbalanced parentheses")
            tok = sc.next_token()
            if tok.kind != "ident" or tok.text not in _STRATEGY_NAMES:
                raise ParseError(
                    f"unknown STRATEGY keyword {tok.text!r}", tok.line, tok.col
                )
            strategy = _STRATEGY_NAMES[tok.text]
            sc.skip_ws()
            if sc.at_eof():
                sc.fail("unbalanced parentheses")
            tok = sc.next_token()
            if tok.kind != "rparen":
                raise ParseError(
                    f"expected ')' after strategy, found {tok.text!r}", tok.line, tok.col
                )
        elif name == "COMMENT":
            body = sc.capture_raw().strip()
            comment = body if comment is None else f"{comment}\n{body}"
        else:
            raw = sc.capture_raw()
            preserved.append((name, raw))
            if name == "THEORY":
                has_theory = True

    strict, weak = _parse_rules(rule_tokens, rules_end, var_set, check_arity)
    return Problem(
        variables=tuple(variables),
        strict_rules=tuple(strict),
        weak_rules=tuple(weak),
        strategy=strategy,
        comment=comment,
        preserved_sections=tuple(preserved),
        has_theory=has_theory,
    )


def parse_term(text: str, variables: Iterable, *, check_arity: bool = True) -> Term:
    """Parse one complete term; identifiers in ``variables`` become variables."""
    sc = _Scanner(text)
    tokens: list[_Token] = []
    while True:
        sc.skip_ws()
        if sc.at_eof():
            break
        tokens.append(sc.next_token())
    if not tokens:
        raise ParseError("expected a term", sc.line, sc.col)
    arity: dict = {}
    t, i = _parse_term_tokens(tokens, 0, set(variables), arity if check_arity else None, None)
    if i != len(tokens):
        tok = tokens[i]
        raise ParseError(f"trailing input {tok.text!r}", tok.line, tok.col)
    return t


def _parse_rules(
    tokens: list[_Token],
    end: Optional[_Token],
    variables: set,
    check_arity: bool,
) -> tuple[list[Rule], list[Rule]]:
    arity: Optional[dict] = {} if check_arity else None
    strict: list[Rule] = []
    weak: list[Rule] = []
    i = 0
    while i < len(tokens):
        lhs, i = _parse_term_tokens(tokens, i, variables, arity, end)
        if i >= len(tokens):
            at = end or tokens[-1]
            raise ParseError("missing arrow", at.line, at.col)
        arrow = tokens[i]
        if arrow.kind != "arrow":
            raise ParseError(
                f"expected '->' or '->=', found {arrow.text!r}", arrow.line, arrow.col
            )
        i += 1
        rhs, i = _parse_term_tokens(tokens, i, variables, arity, end)
        (weak if arrow.text == "->=" else strict).append(Rule(lhs, rhs))
    return strict, weak


def _parse_term_tokens(
    tokens: list[_Token],
    i: int,
    variables: set,
    arity: Optional[dict],
    end: Optional[_Token],
) -> tuple[Term, int]:
    def out_of_input(open_frames: bool) -> ParseError:
        at = end or tokens[-1]
        message = "unbalanced parentheses" if open_frames else "unexpected end of input"
        return ParseError(message, at.line, at.col)

    def check(tok: _Token, n: int) -> None:
        if arity is None:
            return
        prev = arity.setdefault(tok.text, n)
        if prev != n:
            raise ParseError(
                f"inconsistent arity for {tok.text!r}: {n} here, {prev} before",
                tok.line,
                tok.col,
            )

    stack: list[tuple[_Token, list[Term]]] = []
    while True:
        if i >= len(tokens):
            raise out_of_input(bool(stack))
        tok = tokens[i]
        if tok.kind != "ident":
            raise ParseError(f"expected a term, found {tok.text!r}", tok.line, tok.col)
        following = tokens[i + 1] if i + 1 < len(tokens) else None
        t: Term
        if following is not None and following.kind == "lparen":
            if tok.text in variables:
                raise ParseError("variable applied to arguments", tok.line, tok.col)
            after = tokens[i + 2] if i + 2 < len(tokens) else None
            if after is not None and after.kind == "rparen":
                check(tok, 0)
                t = Fun(tok.text)
                i += 3
            else:
                stack.append((tok, []))
                i += 2
                continue
        else:
            if tok.text in variables:
                t = Var(tok.text)
            else:
                check(tok, 0)
                t = Fun(tok.text)
            i += 1
        while True:
            if not stack:
                return t, i
            stack[-1][1].append(t)
            if i >= len(tokens):
                raise out_of_input(True)
            sep = tokens[i]
            if sep.kind == "comma":
                i += 1
                break
            if sep.kind == "rparen":
                sym, args = stack.pop()
                check(sym, len(args))
                t = Fun(sym.text, tuple(args))
                i += 1
                continue
            raise ParseError(
                f"expected ',' or ')', found {sep.text!r}", sep.line, sep.col
            )


def render(p: Problem) -> str:
    """Canonical text for a problem; `parse` of the result reproduces ``p``."""
    lines = []
    if p.variables:
        lines.append("(VAR " + " ".join(str(v) for v in p.variables) + ")")
    else:
        lines.append("(VAR)")
    lines.append("(RULES")
    for r in p.strict_rules:
        lines.append(_rule.render(r))
    for r in p.weak_rules:
        lines.append(f"{_term.render(r.lhs)} ->= {_term.render(r.rhs)}")
    lines.append(")")
    if p.strategy is not None:
        lines.append(f"(STRATEGY {p.strategy.name})")
    for key, raw in p.preserved_sections:
        lines.append(f"({key}{raw})")
    if p.comment is not None:
        lines.append(f"(COMMENT {p.comment})")
    return "\n".join(lines) + "\n"


def to_json(p: Problem) -> dict:
    return {
        "variables": [str(v) for v in p.variables],
        "strictRules": [_rule.to_json(r) for r in p.strict_rules],
        "weakRules": [_rule.to_json(r) for r in p.weak_rules],
        "strategy": p.strategy.name if p.strategy is not None else None,
        "comment": p.comment,
        "preservedSections": [{"key": k, "body": b} for k, b in p.preserved_sections],
        "hasTheory": p.has_theory,
    }
