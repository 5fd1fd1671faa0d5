"""Substitutions: finite maps from variable identifiers to terms.

Two application disciplines share the plain-dict representation:

* standard (`apply`): variables outside the domain are left untouched;
  the maps produced by `unify` and `compose` never store identity
  bindings, so their domain is exactly the set of variables moved.
* generalized (`apply_generalized`): the result term may live in a
  different variable namespace, so an unmapped variable is a failure and
  application returns ``None``.  Matching produces generalized
  substitutions whose domain is exactly the pattern's variables.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping, Optional

from . import term as _term
from .term import Fun, Term, Var

Substitution = dict

GeneralizedSubstitution = dict


def apply(sigma: Mapping, t: Term) -> Term:
    """Homomorphic extension of ``sigma``; unmapped variables map to themselves."""
    if isinstance(t, Var):
        return sigma.get(t.name, t)
    if not sigma:
        return t
    return Fun(t.symbol, tuple(apply(sigma, a) for a in t.args))


def apply_generalized(sigma: Mapping, t: Term) -> Optional[Term]:
    """Fully substitute ``t``, or return ``None`` if some variable is unmapped."""
    if isinstance(t, Var):
        return sigma.get(t.name)
    args = []
    for a in t.args:
        s = apply_generalized(sigma, a)
        if s is None:
            return None
        args.append(s)
    return Fun(t.symbol, tuple(args))


def compose(sigma: Mapping, tau: Mapping) -> Substitution:
    """The substitution applying ``sigma`` first, then ``tau``."""
    rho = {}
    for v, t in sigma.items():
        t = apply(tau, t)
        if isinstance(t, Var) and t.name == v:
            continue
        rho[v] = t
    for v, t in tau.items():
        if v not in sigma:
            rho[v] = t
    return rho


def match(pattern: Term, subject: Term) -> Optional[GeneralizedSubstitution]:
    """Find sigma with sigma(pattern) = subject, or ``None`` if there is none.

    The result is generalized: its domain is exactly the variables of the
    pattern, and the subject's variable namespace may differ from the
    pattern's.
    """
    sigma: dict = {}
    stack = [(pattern, subject)]
    while stack:
        p, s = stack.pop()
        if isinstance(p, Var):
            seen = sigma.get(p.name)
            if seen is None:
                sigma[p.name] = s
            elif seen != s:
                return None
        elif isinstance(s, Fun) and p.symbol == s.symbol and len(p.args) == len(s.args):
            stack.extend(zip(p.args, s.args))
        else:
            return None
    return sigma


def unify(s: Term, t: Term) -> Optional[Substitution]:
    """Most general unifier of ``s`` and ``t`` over a shared variable namespace.

    Returns an idempotent substitution with fully applied bindings (no
    bound variable occurs in any stored image), or ``None`` on a symbol
    clash or occurs-check violation.
    """
    sigma: dict = {}
    stack = [(s, t)]
    while stack:
        a, b = stack.pop()
        a, b = apply(sigma, a), apply(sigma, b)
        if a == b:
            continue
        if isinstance(b, Var):
            a, b = b, a
        if isinstance(a, Var):
            if _occurs(a.name, b):
                return None
            binding = {a.name: b}
            sigma = {v: apply(binding, u) for v, u in sigma.items()}
            sigma[a.name] = b
        elif a.symbol == b.symbol and len(a.args) == len(b.args):
            stack.extend(zip(a.args, b.args))
        else:
            return None
    return sigma


def _occurs(name: Hashable, t: Term) -> bool:
    if isinstance(t, Var):
        return t.name == name
    return any(_occurs(name, a) for a in t.args)


def to_generalized(sigma: Mapping, variables: Iterable[Hashable]) -> GeneralizedSubstitution:
    """Extend a standard substitution to total coverage of ``variables``."""
    out = dict(sigma)
    for v in variables:
        out.setdefault(v, Var(v))
    return out


def to_standard(sigma: Mapping) -> Substitution:
    """Drop identity bindings; only meaningful when both namespaces coincide."""
    return {
        v: t for v, t in sigma.items() if not (isinstance(t, Var) and t.name == v)
    }


def render(sigma: Mapping) -> str:
    """Render as ``{x -> f(a), y -> b}``, bindings sorted by variable."""
    items = sorted(sigma.items(), key=lambda kv: str(kv[0]))
    body = ", ".join(f"{v} -> {_term.render(t)}" for v, t in items)
    return "{" + body + "}"


def to_json(sigma: Mapping) -> dict:
    return {str(v): _term.to_json(t) for v, t in sorted(sigma.items(), key=lambda kv: str(kv[0]))}
