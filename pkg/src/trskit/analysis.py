"""Bounded normalization and a Knuth-Bendix-style local-confluence check.

`nf` rewrites deterministically (first innermost reduct: smallest position
in preorder, then smallest rule index) and counts steps against a step
budget, so results are reproducible and termination is never assumed.

`check_local_confluence` normalizes both sides of every critical pair.
Two distinct normal forms reachable from one peak refute confluence
outright; pairs whose sides hit the step budget stay unresolved, and make
the verdict Unknown unless some other pair already yields a witness.
A terminating system that is locally confluent is confluent, but
termination itself is not checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import criticalpairs as _cp, rewriting
from .criticalpairs import CriticalPair
from .rule import Rule
from .rewriting import Strategy
from .term import Term


@dataclass(frozen=True)
class NormalizationResult:
    term: Term
    steps: int
    reached_normal_form: bool


@dataclass(frozen=True)
class LocallyConfluent:
    pass


@dataclass(frozen=True)
class NotConfluent:
    witness: CriticalPair
    nf_left: Term
    nf_right: Term


@dataclass(frozen=True)
class Unknown:
    unresolved: int


ConfluenceVerdict = LocallyConfluent | NotConfluent | Unknown


def nf(rules: Sequence[Rule], t: Term, max_steps: int) -> NormalizationResult:
    """Reduce ``t`` by the deterministic innermost strategy for at most
    ``max_steps`` rewrite steps."""
    current = t
    steps = 0
    while True:
        reducts = rewriting.step(rules, current, Strategy.INNERMOST)
        if not reducts:
            return NormalizationResult(current, steps, True)
        if steps >= max_steps:
            return NormalizationResult(current, steps, False)
        current = reducts[0].result
        steps += 1


def check_local_confluence(rules: Sequence[Rule], max_steps: int) -> ConfluenceVerdict:
    """Join every critical pair by normalization, within ``max_steps`` per side."""
    unresolved = 0
    for cp in _cp.critical_pairs(rules, _cp.Scope.ALL):
        left = nf(rules, cp.left, max_steps)
        right = nf(rules, cp.right, max_steps)
        if left.reached_normal_form and right.reached_normal_form:
            if left.term != right.term:
                return NotConfluent(cp, left.term, right.term)
        else:
            unresolved += 1
    if unresolved:
        return Unknown(unresolved)
    return LocallyConfluent()
