"""A first-order term rewriting library.

Terms, positions, contexts, substitutions with matching and unification,
rewrite rules, strategy-parameterized one-step rewriting, critical pairs,
a WST (old TPDB) problem parser and printer, and a bounded local-confluence
check.  Operations live in one module per concept and are meant to be used
qualified, e.g. ``term.is_linear`` next to ``rule.is_linear``-style checks
via ``rule.properties``.
"""

from . import (  # noqa: F401
    analysis,
    context,
    criticalpairs,
    position,
    problem,
    rewriting,
    rule,
    substitution,
    term,
)
from .analysis import LocallyConfluent, NormalizationResult, NotConfluent, Unknown
from .context import CFun, Context, Hole, HOLE
from .criticalpairs import CriticalPair, Scope
from .position import Position, Relation
from .problem import ParseError, Problem
from .rewriting import ListProperties, Reduct, Strategy
from .rule import InvalidRuleError, Rule, RuleProperties, TaggedVar
from .term import Fun, InvalidPositionError, Term, Var

__version__ = "0.1.0"

__all__ = [
    "analysis",
    "context",
    "criticalpairs",
    "position",
    "problem",
    "rewriting",
    "rule",
    "substitution",
    "term",
    "CFun",
    "Context",
    "CriticalPair",
    "Fun",
    "HOLE",
    "Hole",
    "InvalidPositionError",
    "InvalidRuleError",
    "ListProperties",
    "LocallyConfluent",
    "NormalizationResult",
    "NotConfluent",
    "ParseError",
    "Position",
    "Problem",
    "Reduct",
    "Relation",
    "Rule",
    "RuleProperties",
    "Scope",
    "Strategy",
    "TaggedVar",
    "Term",
    "Unknown",
    "Var",
]
