"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain error, 3 unsupported.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from sympy import factorint

from .approximation import (
    ApproximationSpec,
    CongruenceSystem,
    approximate,
    approximate_exact,
    crt_system,
    two_generators,
)
from .classes import class_monoid, class_table
from .errors import DomainError, ParseError, UnsupportedError
from .expr import evaluate, evaluate_element
from .ideals import FractionalIdeal
from .primes import INF, PrimeIdealData, element_valuation, factor_ideal, ideal_valuation
from .quadratic import OrderSpec, format_element
from .singular import primary_decomposition, primes_over
from .verifier import SUITES, default_profile, load_profile, run_suite, DEFAULT_CASES


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ring(text: str) -> int:
    key, sep, val = text.partition("=")
    if key.strip() != "d" or not sep:
        raise argparse.ArgumentTypeError("expected d=<int>")
    try:
        return int(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer {val!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dedekind", description="Exact ideal arithmetic in Z and quadratic orders.")
    p.add_argument("--ring", type=_ring, required=True, metavar="d=<int>",
                   help="squarefree d of Q(sqrt d); d=1 means Z")
    p.add_argument("--conductor", type=int, default=1, help="index of the order in the maximal order")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0, help="seed for the verifier suites")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("eval", help="evaluate an ideal expression")
    s.add_argument("expr")
    s = sub.add_parser("factor", help="prime factorization of an ideal")
    s.add_argument("expr")
    s = sub.add_parser("valuation", help="valuation of an ideal or element at a prime")
    s.add_argument("prime")
    s.add_argument("target")
    s = sub.add_parser("crt", help="solve x = r mod I for pairs I r")
    s.add_argument("pairs", nargs="*", metavar="I r")
    s = sub.add_parser("approx", help="approximation: triples P target n (pairs P n with --exact)")
    s.add_argument("--exact", action="store_true")
    s.add_argument("items", nargs="*")
    s = sub.add_parser("two-gen", help="two generators of an integral ideal")
    s.add_argument("expr")
    s = sub.add_parser("primary", help="primary decomposition of an integral ideal")
    s.add_argument("expr")
    s = sub.add_parser("classes", help="ideal classes met up to a norm bound")
    s.add_argument("--bound", type=int, default=10)
    s = sub.add_parser("suite", help="run a property suite")
    s.add_argument("name", choices=sorted(SUITES))
    s.add_argument("--cases", type=int, default=None)
    s.add_argument("--config", default=None, help="key=value profile file")
    return p


def ideal_dict(I: FractionalIdeal) -> dict:
    return {"hnf": list(I.hnf), "den": I.den, "norm": str(I.norm()), "text": str(I)}


def _prime_of(I: FractionalIdeal) -> PrimeIdealData:
    if I.is_integral() and not I.is_unit():
        ps = factorint(I.lattice.norm())
        if len(ps) == 1:
            for P in primes_over(I.order, next(iter(ps))):
                if P.as_ideal() == I:
                    return P
    raise DomainError(f"{I} is not a nonzero prime ideal")


def _target(text: str, order: OrderSpec):
    """An ideal expression, or failing that an element."""
    try:
        return evaluate(text, order)
    except ParseError as first:
        try:
            return evaluate_element(text, order)
        except ParseError:
            raise first from None


def _gen(P: PrimeIdealData) -> str:
    if P.order.is_rational:
        return str(P.p)
    return f"{P.ideal.b}+{P.ideal.c}w"


def _valuation_text(v) -> str:
    return "inf" if v == INF else str(v)


def _run(args, order: OrderSpec, out) -> None:
    emit_json = args.json
    base = {"ring": order.as_dict(), "command": args.command}

    def emit(text: str, payload: dict):
        if emit_json:
            out.write(json.dumps({**base, **payload}, sort_keys=False) + "\n")
        else:
            out.write(text + "\n")

    cmd = args.command
    if cmd == "eval":
        I = evaluate(args.expr, order)
        emit(str(I), {"ideal": ideal_dict(I)})
    elif cmd == "factor":
        I = evaluate(args.expr, order)
        F = factor_ideal(I)
        emit(str(F), {"ideal": ideal_dict(I),
                      "factors": [{"p": P.p, "gen": _gen(P), "e": e} for P, e in F]})
    elif cmd == "valuation":
        P = _prime_of(evaluate(args.prime, order))
        target = _target(args.target, order)
        if isinstance(target, FractionalIdeal):
            v = ideal_valuation(target, P)
        else:
            v = element_valuation(target, P)
        emit(_valuation_text(v), {"prime": P.label(), "valuation": None if v == INF else v})
    elif cmd == "crt":
        if len(args.pairs) % 2:
            raise UsageError("crt expects pairs: I1 r1 I2 r2 ...")
        pairs = [(evaluate(args.pairs[i], order), evaluate_element(args.pairs[i + 1], order))
                 for i in range(0, len(args.pairs), 2)]
        sys_ = CongruenceSystem.of(order, pairs)
        x = crt_system(sys_)
        emit(format_element(x), {"solution": format_element(x), "modulus": ideal_dict(sys_.modulus())})
    elif cmd == "approx":
        items = args.items
        width = 2 if args.exact else 3
        if len(items) % width:
            shape = "P n" if args.exact else "P target n"
            raise UsageError(f"approx expects groups of {width}: {shape} ...")
        groups = [items[i:i + width] for i in range(0, len(items), width)]
        primes = [_prime_of(evaluate(g[0], order)) for g in groups]
        try:
            ns = [int(g[-1]) for g in groups]
        except ValueError as exc:
            raise UsageError(f"bad exponent: {exc}") from None
        if args.exact:
            x = approximate_exact(primes, ns, order)
        else:
            targets = [evaluate_element(g[1], order) for g in groups]
            x = approximate(ApproximationSpec.of(order, list(zip(primes, targets, ns))))
        emit(format_element(x), {"solution": format_element(x),
                                 "valuations": [element_valuation(x, P) if x else None
                                                for P in primes]})
    elif cmd == "two-gen":
        I = evaluate(args.expr, order)
        a, b = two_generators(I)
        emit(f"<{format_element(a)}, {format_element(b)}>",
             {"ideal": ideal_dict(I), "generators": [format_element(a), format_element(b)]})
    elif cmd == "primary":
        I = evaluate(args.expr, order)
        comps = primary_decomposition(I)
        text = "\n".join(str(c) for c in comps) if comps else "1"
        emit(text, {"ideal": ideal_dict(I),
                    "components": [{"prime": c.prime.label(), "singular": c.prime.singular,
                                    "component": ideal_dict(c.component)} for c in comps]})
    elif cmd == "classes":
        classes = class_monoid(order, args.bound)
        table = class_table(classes)
        lines = [f"{len(classes)} classes up to norm {args.bound}"]
        for k, C in enumerate(classes):
            kind = "invertible" if C.invertible else "not invertible"
            lines.append(f"  {k}: {C.representative}  ({kind}, {len(C.members)} ideals)")
        lines.append("products:")
        for row in table:
            lines.append("  " + " ".join("?" if k is None else str(k) for k in row))
        emit("\n".join(lines), {
            "bound": args.bound,
            "classes": [{"representative": ideal_dict(C.representative), "invertible": C.invertible,
                         "members": len(C.members)} for C in classes],
            "products": table,
        })
    elif cmd == "suite":
        if args.config:
            try:
                with open(args.config) as fh:
                    text = fh.read()
            except OSError as exc:
                raise DomainError(f"cannot read config: {exc.strerror}") from None
            profile, cases = load_profile(text)
        else:
            profile, cases = default_profile(order, seed=args.seed), DEFAULT_CASES
        if args.cases is not None:
            cases = args.cases
        rep = run_suite(args.name, profile, cases)
        emit("\n".join(rep.lines()), {"report": rep.as_dict()})


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        order = OrderSpec(args.ring, args.conductor)
        _run(args, order, out)
    except (UsageError, ParseError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except UnsupportedError as exc:
        err.write(f"unsupported: {exc}\n")
        return 3
    except DomainError as exc:
        err.write(f"domain error: {exc}\n")
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
