"""Contexts: terms with exactly one hole.

The hole count is guaranteed structurally: a ``CFun`` node has exactly one
context child, so every context contains exactly one ``Hole``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .position import Position
from .term import Fun, InvalidPositionError, Term, Var
from . import term as _term


@dataclass(frozen=True)
class Hole:
    def __str__(self) -> str:
        return "[]"


@dataclass(frozen=True)
class CFun:
    symbol: Hashable
    before: tuple[Term, ...]
    inner: "Context"
    after: tuple[Term, ...]

    def __str__(self) -> str:
        return render(self)


Context = Hole | CFun

HOLE = Hole()


def of_term(t: Term, p: Sequence[int]) -> Context:
    """The context obtained by cutting the subterm of ``t`` at ``p`` out."""
    if not p:
        return HOLE
    i = p[0]
    if isinstance(t, Var) or not 0 <= i < len(t.args):
        raise InvalidPositionError(f"no subterm at index {i}")
    return CFun(t.symbol, t.args[:i], of_term(t.args[i], p[1:]), t.args[i + 1 :])


def plug(c: Context, s: Term) -> Term:
    """Replace the hole with ``s``."""
    if isinstance(c, Hole):
        return s
    return Fun(c.symbol, c.before + (plug(c.inner, s),) + c.after)


def hole_position(c: Context) -> Position:
    if isinstance(c, Hole):
        return ()
    return (len(c.before),) + hole_position(c.inner)


def render(c: Context) -> str:
    """Rendered like a term with ``[]`` at the hole, e.g. ``f(a,[])``."""
    if isinstance(c, Hole):
        return "[]"
    parts = [_term.render(a) for a in c.before]
    parts.append(render(c.inner))
    parts.extend(_term.render(a) for a in c.after)
    return f"{c.symbol}({','.join(parts)})"
