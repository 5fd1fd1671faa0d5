"""One-step rewriting of a term by a list of rules, under position strategies.

Each rewrite step is reported as a `Reduct` carrying the resulting term
together with the redex position, the rule as listed (not renamed), its
index, and the matching substitution.  Strategies are position filters:
they select a subset of the full reduct list and never reorder it, so
reducts always come sorted by position (preorder) and then rule index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import position as _position, rule as _rule, substitution, term as _term
from .position import Position
from .rule import Rule
from .term import Fun, Term


class Strategy(enum.Enum):
    FULL = "full"
    ROOT = "root"
    OUTERMOST = "outermost"
    INNERMOST = "innermost"


@dataclass(frozen=True)
class Reduct:
    result: Term
    pos: Position
    rule: Rule
    rule_index: int
    subst: Mapping


@dataclass(frozen=True)
class ListProperties:
    valid: bool
    left_linear: bool
    right_linear: bool
    linear: bool
    duplicating: bool
    collapsing: bool
    erasing: bool
    ground: bool


def step(rules: Sequence[Rule], subject: Term, strategy: Strategy = Strategy.FULL) -> list[Reduct]:
    """All one-step reducts of ``subject`` admitted by ``strategy``.

    Rules must be valid.  Duplicate rules in the list yield one reduct per
    rule index.
    """
    _rule.check_valid(rules)
    reducts: list[Reduct] = []

    def visit(t: Term, at: Position) -> None:
        for i, r in enumerate(rules):
            sigma = substitution.match(r.lhs, t)
            if sigma is None:
                continue
            contractum = substitution.apply_generalized(sigma, r.rhs)
            reducts.append(Reduct(_term.replace_at(subject, at, contractum), at, r, i, sigma))
        if isinstance(t, Fun):
            for k, a in enumerate(t.args):
                visit(a, at + (k,))

    visit(subject, ())

    if strategy is Strategy.FULL:
        return reducts
    if strategy is Strategy.ROOT:
        return [r for r in reducts if r.pos == ()]
    redexes = {r.pos for r in reducts}
    if strategy is Strategy.OUTERMOST:
        return [
            r
            for r in reducts
            if not any(r.pos[:k] in redexes for k in range(len(r.pos)))
        ]
    return [
        r
        for r in reducts
        if not any(q != r.pos and q[: len(r.pos)] == r.pos for q in redexes)
    ]


def is_normal_form(rules: Sequence[Rule], t: Term) -> bool:
    return not step(rules, t, Strategy.FULL)


def list_properties(rules: Sequence[Rule]) -> ListProperties:
    """TRS-level aggregates: linearity-style flags hold for every rule,
    duplicating/collapsing/erasing as soon as some rule has them."""
    props = [_rule.properties(r) for r in rules]
    return ListProperties(
        valid=all(_rule.is_valid(r) for r in rules),
        left_linear=all(p.left_linear for p in props),
        right_linear=all(p.right_linear for p in props),
        linear=all(p.linear for p in props),
        duplicating=any(p.duplicating for p in props),
        collapsing=any(p.collapsing for p in props),
        erasing=any(p.erasing for p in props),
        ground=all(p.ground for p in props),
    )


def render(r: Reduct) -> str:
    return (
        f"{_term.render(r.result)} @ {_position.render(r.pos)} "
        f"by ({_rule.render(r.rule)}) with {substitution.render(r.subst)}"
    )


def to_json(r: Reduct) -> dict:
    return {
        "result": _term.to_json(r.result),
        "pos": list(r.pos),
        "ruleIndex": r.rule_index,
        "subst": substitution.to_json(r.subst),
    }
