"""Critical pairs: annotated overlaps between rules of a list.

For rules i (applied below, "left step") and j (applied at the root,
"right step"), an overlap is a non-variable position p of rule j's
left-hand side whose subterm unifies with rule i's left-hand side after
the two rules are renamed apart.  The root overlap of a rule with itself
(same index) is excluded; two identical rules at different indices do
overlap.  Mirror pairs from swapping the two rules at the root are kept,
as their annotations differ.

The peak and both reducts live in the tagged namespace produced by
`rule.rename_apart`; rendering and JSON output rename variables to
``x1, x2, ...`` by first occurrence in preorder over (top, left, right).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import position as _position, rule as _rule, substitution, term as _term
from .position import Position
from .rule import Rule, TaggedVar  # noqa: F401  (TaggedVar is part of this surface)
from .term import Term, Var


class Scope(enum.Enum):
    ALL = "all"
    INNER = "inner"
    OUTER = "outer"


@dataclass(frozen=True)
class CriticalPair:
    top: Term
    left: Term
    right: Term
    left_rule: Rule
    right_rule: Rule
    left_pos: Position
    left_rule_index: int
    right_rule_index: int


def critical_pairs(rules: Sequence[Rule], scope: Scope = Scope.ALL) -> list[CriticalPair]:
    """All critical pairs of ``rules``, in order of (outer rule, position, inner rule)."""
    _rule.check_valid(rules)
    out: list[CriticalPair] = []
    for j, outer in enumerate(rules):
        for p in _term.positions(outer.lhs):
            if isinstance(_term.subterm_at(outer.lhs, p), Var):
                continue
            if scope is Scope.INNER and p == ():
                continue
            if scope is Scope.OUTER and p != ():
                continue
            for i, inner in enumerate(rules):
                if p == () and i == j:
                    continue
                rho1, rho2 = _rule.rename_apart(inner, outer)
                sigma = substitution.unify(rho1.lhs, _term.subterm_at(rho2.lhs, p))
                if sigma is None:
                    continue
                top = substitution.apply(sigma, rho2.lhs)
                left = _term.replace_at(top, p, substitution.apply(sigma, rho1.rhs))
                right = substitution.apply(sigma, rho2.rhs)
                out.append(CriticalPair(top, left, right, inner, outer, p, i, j))
    return out


def canonical_renaming(cp: CriticalPair) -> dict:
    """Map the pair's tagged variables to ``x1, x2, ...`` in first-occurrence order."""
    mapping: dict = {}
    for t in (cp.top, cp.left, cp.right):
        for v in _term.vars(t):
            if v not in mapping:
                mapping[v] = f"x{len(mapping) + 1}"
    return mapping


def canonical_terms(cp: CriticalPair) -> tuple[Term, Term, Term]:
    mapping = canonical_renaming(cp)
    rename = lambda t: _term.map_symbols(t, lambda v: mapping[v], lambda f: f)
    return rename(cp.top), rename(cp.left), rename(cp.right)


def render(cp: CriticalPair) -> str:
    top, left, right = canonical_terms(cp)
    return "\n".join(
        [
            f"peak: {_term.render(top)}",
            f"left: {_term.render(left)}  (rule {cp.left_rule_index} at {_position.render(cp.left_pos)})",
            f"right: {_term.render(right)}  (rule {cp.right_rule_index} at root)",
        ]
    )


def to_json(cp: CriticalPair) -> dict:
    top, left, right = canonical_terms(cp)
    return {
        "top": _term.to_json(top),
        "left": _term.to_json(left),
        "right": _term.to_json(right),
        "leftRule": _rule.to_json(cp.left_rule),
        "rightRule": _rule.to_json(cp.right_rule),
        "leftPos": list(cp.left_pos),
        "leftRuleIndex": cp.left_rule_index,
        "rightRuleIndex": cp.right_rule_index,
    }
