"""Command line interface.

Exit codes: 0 on success, 2 when an input violates a precondition or fails
to parse, 1 when an internal cross-check fails (a prediction disagreeing
with the oracle is a bug, not bad input).  The verify command exits 1 on a
MISMATCH for the same reason.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .construct import extend_by_primitive, iterate_f2
from .distribution import (
    additive_distribution,
    butler_distribution,
    ni_lower_bound,
)
from .errors import InternalCheckError, ParseError, PreconditionError
from .explicit import (
    closed_form_cubic_char2,
    closed_form_quadratic,
    factor_f_xq_minus_x,
)
from .ext import ExtField
from .field import parse_field_spec
from .linearized import compose_f_Lg, element_degree, fq_order
from .poly import Poly, factor, parse_poly


@dataclasses.dataclass
class CliConfig:
    field_spec: str
    command: str
    json: bool = False
    seed: int = 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linfactor",
        description=(
            "Predict and verify the irreducible-factor structure of "
            "polynomial compositions over finite fields."
        ),
    )
    parser.add_argument(
        "--seed", type=int, default=0,
        help="seed for the randomized factoring internals (default 0)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        s = sub.add_parser(name, help=help_text)
        s.add_argument(
            "--field", required=True,
            help="field spec, e.g. p=5 or p=2,k=2,mod=t^2+t+1",
        )
        s.add_argument("--json", action="store_true", help="machine readable output")
        return s

    c = command("compose", "compute f(L_g(x))")
    c.add_argument("--f", required=True)
    c.add_argument("--g", required=True)

    c = command("fq-order", "additive order of a root of f (or of --element)")
    c.add_argument("--f", required=True, help="monic irreducible context polynomial")
    c.add_argument("--element", help="element of F_q[z]/(f) as a z-polynomial")

    c = command("distribution", "predicted factor classes of the composition")
    c.add_argument("--f", required=True)
    c.add_argument("--g")
    c.add_argument(
        "--multiplicative-m", type=int, dest="multiplicative_m",
        help="predict f(x^m) instead of a linearized composition",
    )

    c = command("factor", "brute-force factorization oracle")
    c.add_argument("--f", required=True)

    c = command("construct", "chain irreducible constructions through primitives")
    c.add_argument("--f", required=True)
    c.add_argument("--chain", required=True, help="comma separated primitive polynomials")

    c = command("explicit", "explicit factorization of f(x^q - x)")
    c.add_argument("--f")
    c.add_argument("--closed-form", choices=["quadratic", "cubic2"], dest="closed_form")
    c.add_argument("--a", help="coefficient for the closed forms")
    c.add_argument("--b", help="second coefficient for the cubic closed form")

    c = command("verify", "compare the prediction with the oracle")
    c.add_argument("--f", required=True)
    c.add_argument("--g", required=True)

    return parser


def _element_from_text(field, text):
    poly = parse_poly(field, text)
    if not poly.is_zero and poly.degree >= 1:
        raise PreconditionError(f"{text!r} is not a field element")
    return poly.coeff(0)


def _emit(args, payload, lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _class_payload(dist):
    return [
        {
            "order": fc.order_label if isinstance(fc.order_label, int) else str(fc.order_label),
            "degree": fc.degree,
            "count": fc.count,
        }
        for fc in dist.classes
    ]


def _cmd_compose(args, field):
    f = parse_poly(field, args.f)
    g = parse_poly(field, args.g)
    comp = compose_f_Lg(f, g)
    payload = {
        "field": field.spec(),
        "f": str(f),
        "g": str(g),
        "composition": str(comp),
    }
    _emit(args, payload, [str(comp)])
    return 0


def _cmd_fq_order(args, field):
    f = parse_poly(field, args.f)
    ext = ExtField(f)
    if args.element is None:
        element = ext.generator
    else:
        element = ext.element(parse_poly(field, args.element, var="z"))
    order = fq_order(element)
    degree = element_degree(element)
    payload = {
        "field": field.spec(),
        "f": str(f),
        "element": str(element),
        "order": str(order),
        "degree": degree,
    }
    _emit(args, payload, [f"order: {order}", f"degree: {degree}"])
    return 0


def _cmd_distribution(args, field):
    f = parse_poly(field, args.f)
    if args.multiplicative_m is not None:
        dist = butler_distribution(f, args.multiplicative_m)
        g_text = None
        bound = None
    else:
        if args.g is None:
            raise PreconditionError("distribution needs --g or --multiplicative-m")
        g = parse_poly(field, args.g)
        dist = additive_distribution(f, g)
        g_text = str(g)
        try:
            bound = ni_lower_bound(f, g)
        except PreconditionError:
            bound = None
    payload = {
        "field": field.spec(),
        "f": str(f),
        "g": g_text,
        "frobenius_power": dist.frobenius_power,
        "classes": _class_payload(dist),
        "total_degree": dist.total_degree,
        "ni_lower_bound": bound,
    }
    lines = [
        f"field: {field.spec()}",
        f"f: {f}",
        f"g: {g_text}",
        f"frobenius_power: {dist.frobenius_power}",
        f"total_degree: {dist.total_degree}",
        f"classes ({len(dist.classes)}):",
    ]
    for fc in dist.classes:
        lines.append(f"  order={fc.order_label}  degree={fc.degree}  count={fc.count}")
    lines.append(f"ni_lower_bound: {bound}")
    _emit(args, payload, lines)
    return 0


def _cmd_factor(args, field, seed):
    f = parse_poly(field, args.f)
    fact = factor(f, seed=seed)
    payload = {
        "field": field.spec(),
        "f": str(f),
        "unit": str(fact.unit),
        "factors": [
            {"poly": str(poly), "multiplicity": mult} for poly, mult in fact.factors
        ],
    }
    lines = [f"unit: {fact.unit}"]
    for poly, mult in fact.factors:
        suffix = f"^{mult}" if mult > 1 else ""
        lines.append(f"({poly}){suffix}")
    _emit(args, payload, lines)
    return 0


def _cmd_construct(args, field):
    f = parse_poly(field, args.f)
    chain = [parse_poly(field, part) for part in args.chain.split(",")]
    if field.q == 2:
        steps = iterate_f2(f, chain)
    else:
        steps = []
        current = f
        for g in chain:
            step = extend_by_primitive(current, g)
            steps.append(step)
            current = step.g2
    payload = {
        "field": field.spec(),
        "f": str(f),
        "chain": [str(g) for g in chain],
        "steps": [
            {
                "f_in": str(s.f_in),
                "g": str(s.g),
                "g1": str(s.g1),
                "g2": str(s.g2),
                "degree": int(s.g2.degree),
            }
            for s in steps
        ],
    }
    lines = []
    for i, s in enumerate(steps, start=1):
        lines.append(f"step {i}: degree {s.g2.degree}")
        lines.append(f"  {s.g2}")
    _emit(args, payload, lines)
    return 0


def _cmd_explicit(args, field):
    if args.closed_form is not None:
        if args.a is None:
            raise PreconditionError("closed forms need --a")
        a = _element_from_text(field, args.a)
        if args.closed_form == "quadratic":
            result = closed_form_quadratic(a)
        else:
            if args.b is None:
                raise PreconditionError("the cubic closed form needs --b")
            b = _element_from_text(field, args.b)
            result = closed_form_cubic_char2(a, b)
        f_text = None
    else:
        if args.f is None:
            raise PreconditionError("explicit needs --f or --closed-form")
        f = parse_poly(field, args.f)
        result = factor_f_xq_minus_x(f)
        f_text = str(f)
    payload = {
        "field": field.spec(),
        "f": f_text,
        "g0": str(result.g0),
        "shifts": [str(s) for s in result.shifts],
    }
    lines = [f"g0: {result.g0}"]
    for s in result.shifts:
        lines.append(f"  {s}")
    _emit(args, payload, lines)
    return 0


def _cmd_verify(args, field, seed):
    f = parse_poly(field, args.f)
    g = parse_poly(field, args.g)
    dist = additive_distribution(f, g)
    composition = compose_f_Lg(f, g)
    fact = factor(composition, seed=seed)
    multiplier = field.q**dist.frobenius_power
    predicted = {deg: count * multiplier for deg, count in dist.histogram().items()}
    actual = fact.degree_histogram()
    match = predicted == actual
    payload = {
        "field": field.spec(),
        "f": str(f),
        "g": str(g),
        "frobenius_power": dist.frobenius_power,
        "predicted": sorted(predicted.items()),
        "actual": sorted(actual.items()),
        "match": match,
    }
    def histo_text(h):
        return ", ".join(f"deg {d} x{c}" for d, c in sorted(h.items())) or "(empty)"
    lines = [
        f"predicted: {histo_text(predicted)}",
        f"actual:    {histo_text(actual)}",
        "MATCH" if match else "MISMATCH",
    ]
    _emit(args, payload, lines)
    return 0 if match else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        field = parse_field_spec(args.field)
        if args.command == "compose":
            return _cmd_compose(args, field)
        if args.command == "fq-order":
            return _cmd_fq_order(args, field)
        if args.command == "distribution":
            return _cmd_distribution(args, field)
        if args.command == "factor":
            return _cmd_factor(args, field, args.seed)
        if args.command == "construct":
            return _cmd_construct(args, field)
        if args.command == "explicit":
            return _cmd_explicit(args, field)
        if args.command == "verify":
            return _cmd_verify(args, field, args.seed)
        raise PreconditionError(f"unknown command {args.command!r}")
    except ParseError as exc:
        print(f"error: {exc.caret_diagnostic()}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 1


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
