"""Command-line interface: parse, inspect, rewrite and analyze WST problem files.

Exit codes: 0 for success or an affirmative verdict, 1 for a negative
finding (invalid rules in `props`, NO from `check-lc`), 2 for MAYBE and
for input or usage errors (told apart by the stderr message and by the
``status`` field of ``--json`` output).
"""

from __future__ import annotations

import argparse
import json
import sys
import threading

from . import analysis, criticalpairs, problem, rewriting, term
from .criticalpairs import Scope
from .rewriting import Strategy
from .rule import InvalidRuleError

# Rewrite chains may nest terms thousands of levels deep; commands run on
# a worker thread with a large stack so recursive term traversals hold up.
_STACK_BYTES = 512 * 1024 * 1024
_RECURSION_LIMIT = 150_000

_STRATEGY_FLAGS = {
    "full": Strategy.FULL,
    "root": Strategy.ROOT,
    "outer": Strategy.OUTERMOST,
    "inner": Strategy.INNERMOST,
}

_SCOPE_FLAGS = {"all": Scope.ALL, "inner": Scope.INNER, "outer": Scope.OUTER}


def main(argv=None) -> int:
    args = _arg_parser().parse_args(argv)
    return _on_worker(lambda: _dispatch(args))


def _dispatch(args) -> int:
    try:
        return args.func(args)
    except (problem.ParseError, InvalidRuleError, OSError) as e:
        return _fail(args, str(e))


def _fail(args, message: str) -> int:
    print(f"trskit: error: {message}", file=sys.stderr)
    if args.json:
        _emit_json({"status": "error", "message": message})
    return 2


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load(args) -> problem.Problem:
    with open(args.file, encoding="latin-1") as handle:
        text = handle.read()
    p = problem.parse(text, check_arity=not args.no_arity_check)
    if p.has_theory:
        print("trskit: warning: THEORY section present; its semantics are ignored", file=sys.stderr)
    return p


def _warn_weak(p: problem.Problem) -> None:
    if p.weak_rules:
        print(f"trskit: warning: ignoring {len(p.weak_rules)} weak rule(s)", file=sys.stderr)


def cmd_parse(args) -> int:
    p = _load(args)
    if args.json:
        _emit_json(problem.to_json(p))
    else:
        print(problem.render(p), end="")
    return 0


def cmd_props(args) -> int:
    p = _load(args)
    rules = p.strict_rules + p.weak_rules
    props = rewriting.list_properties(rules)
    if args.json:
        _emit_json(
            {
                "strictRules": len(p.strict_rules),
                "weakRules": len(p.weak_rules),
                "valid": props.valid,
                "leftLinear": props.left_linear,
                "rightLinear": props.right_linear,
                "linear": props.linear,
                "duplicating": props.duplicating,
                "collapsing": props.collapsing,
                "erasing": props.erasing,
                "ground": props.ground,
            }
        )
    else:
        yn = lambda b: "yes" if b else "no"
        print(f"strict rules: {len(p.strict_rules)}")
        print(f"weak rules: {len(p.weak_rules)}")
        print(f"valid: {yn(props.valid)}")
        print(f"left-linear: {yn(props.left_linear)}")
        print(f"right-linear: {yn(props.right_linear)}")
        print(f"linear: {yn(props.linear)}")
        print(f"duplicating: {yn(props.duplicating)}")
        print(f"collapsing: {yn(props.collapsing)}")
        print(f"erasing: {yn(props.erasing)}")
        print(f"ground: {yn(props.ground)}")
    return 0 if props.valid else 1


def cmd_cps(args) -> int:
    p = _load(args)
    _warn_weak(p)
    pairs = criticalpairs.critical_pairs(p.strict_rules, _SCOPE_FLAGS[args.scope])
    if args.json:
        _emit_json({"criticalPairs": [criticalpairs.to_json(cp) for cp in pairs], "count": len(pairs)})
    else:
        for cp in pairs:
            print(criticalpairs.render(cp))
            print()
        print(f"critical pairs: {len(pairs)}")
    return 0


def cmd_rewrite(args) -> int:
    p = _load(args)
    _warn_weak(p)
    subject = problem.parse_term(args.term, p.variables, check_arity=not args.no_arity_check)
    reducts = rewriting.step(p.strict_rules, subject, _STRATEGY_FLAGS[args.strategy])
    if args.json:
        _emit_json({"reducts": [rewriting.to_json(r) for r in reducts], "count": len(reducts)})
    else:
        for r in reducts:
            print(rewriting.render(r))
        print(f"reducts: {len(reducts)}")
    return 0


def cmd_normalize(args) -> int:
    p = _load(args)
    _warn_weak(p)
    subject = problem.parse_term(args.term, p.variables, check_arity=not args.no_arity_check)
    result = analysis.nf(p.strict_rules, subject, args.max_steps)
    status = "NORMAL FORM" if result.reached_normal_form else "STEP LIMIT"
    if args.json:
        _emit_json({"term": term.to_json(result.term), "steps": result.steps, "status": status})
    else:
        print(term.render(result.term))
        print(f"steps: {result.steps}")
        print(status)
    return 0 if result.reached_normal_form else 2


def cmd_check_lc(args) -> int:
    p = _load(args)
    if p.weak_rules:
        return _fail(args, "weak rules present; the local-confluence check needs a strict TRS")
    verdict = analysis.check_local_confluence(p.strict_rules, args.max_steps)
    if isinstance(verdict, analysis.LocallyConfluent):
        if args.json:
            _emit_json({"status": "YES"})
        else:
            print("YES")
        return 0
    if isinstance(verdict, analysis.NotConfluent):
        mapping = criticalpairs.canonical_renaming(verdict.witness)
        rename = lambda t: term.map_symbols(t, lambda v: mapping[v], lambda f: f)
        nf_left, nf_right = rename(verdict.nf_left), rename(verdict.nf_right)
        if args.json:
            _emit_json(
                {
                    "status": "NO",
                    "witness": criticalpairs.to_json(verdict.witness),
                    "nfLeft": term.to_json(nf_left),
                    "nfRight": term.to_json(nf_right),
                }
            )
        else:
            print("NO")
            print(criticalpairs.render(verdict.witness))
            print(f"normal form of left: {term.render(nf_left)}")
            print(f"normal form of right: {term.render(nf_right)}")
        return 1
    if args.json:
        _emit_json({"status": "MAYBE", "unresolved": verdict.unresolved})
    else:
        print("MAYBE")
        print(f"unresolved critical pairs: {verdict.unresolved}")
    return 2


def _on_worker(fn):
    box: dict = {}

    def run() -> None:
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(_RECURSION_LIMIT)
        try:
            box["code"] = fn()
        except BaseException as e:
            box["error"] = e
        finally:
            sys.setrecursionlimit(limit)

    old = threading.stack_size(_STACK_BYTES)
    try:
        worker = threading.Thread(target=run, name="trskit-command")
        worker.start()
        worker.join()
    finally:
        threading.stack_size(old)
    if "error" in box:
        raise box["error"]
    return box["code"]


def _arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trskit",
        description="first-order term rewriting toolkit for WST (old TPDB) problem files",
    )
    sub = parser.add_subparsers(metavar="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="problem file in WST format")
    common.add_argument("--json", action="store_true", help="emit a JSON document instead of text")
    common.add_argument(
        "--no-arity-check",
        action="store_true",
        help="allow function symbols used with inconsistent arities",
    )

    p = sub.add_parser("parse", parents=[common], help="parse a problem and reprint it canonically")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("props", parents=[common], help="report syntactic properties of the rules")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("cps", parents=[common], help="list critical pairs")
    p.add_argument("--scope", choices=sorted(_SCOPE_FLAGS), default="all")
    p.set_defaults(func=cmd_cps)

    p = sub.add_parser("rewrite", parents=[common], help="apply one rewrite step to a term")
    p.add_argument("term", help="term to rewrite, e.g. 'f(a,x)'")
    p.add_argument("--strategy", choices=sorted(_STRATEGY_FLAGS), default="full")
    p.set_defaults(func=cmd_rewrite)

    p = sub.add_parser("normalize", parents=[common], help="reduce a term to normal form")
    p.add_argument("term", help="term to normalize")
    p.add_argument("--max-steps", type=int, default=1000, help="rewrite-step budget (default 1000)")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser(
        "check-lc",
        parents=[common],
        help="check local confluence by joining all critical pairs "
        "(for terminating systems this decides confluence)",
    )
    p.add_argument("--max-steps", type=int, default=1000, help="rewrite-step budget per side (default 1000)")
    p.set_defaults(func=cmd_check_lc)

    return parser


if __name__ == "__main__":
    sys.exit(main())
