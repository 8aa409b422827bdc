"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 domain precondition violated.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable

from . import dirichlet, intervals, lie_cohomology, spectral, weights
from ._arith import fmt_rational, is_prime

TABLE_PRIMES = (2, 3, 5, 7, 11)

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN = 0, 2, 3


class InputError(Exception):
    pass


class PreconditionError(Exception):
    pass


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InputError(f"{what}: {text!r} is not an integer") from None


def parse_primes(values: list[str]) -> list[int]:
    primes = []
    for chunk in values:
        for item in chunk.split(","):
            if not item.strip():
                continue
            p = _int(item.strip(), "prime")
            if not is_prime(p):
                raise InputError(f"{p} is not prime")
            primes.append(p)
    return primes


def parse_weight(n: int, spec: str) -> weights.Weight:
    """``"b1,...,bn"`` in standard coordinates or ``"a=a1,...;d=..."``."""
    spec = spec.strip()
    try:
        if "=" in spec:
            fields = {}
            for part in spec.split(";"):
                key, _, value = part.partition("=")
                fields[key.strip()] = value.strip()
            if set(fields) != {"a", "d"}:
                raise InputError(f"fundamental weight needs exactly a= and d=, got {spec!r}")
            a = [x for x in fields["a"].split(",") if x.strip()] if fields["a"] else []
            return weights.from_fundamental(n, a, fields["d"])
        return weights.from_standard(n, spec.split(","))
    except weights.WeightError as exc:
        raise InputError(f"bad weight {spec!r}: {exc}") from None


def _rank(n: int, prime: bool = False) -> int:
    if n < 2:
        raise InputError(f"rank must be >= 2, got {n}")
    if prime and not is_prime(n):
        raise InputError(f"rank {n} is not prime")
    return n


def cmd_table(args) -> dict[str, Callable[[], str]]:
    primes = parse_primes(args.primes) if args.primes else list(TABLE_PRIMES)
    rows = [intervals.table_row(p) for p in primes]
    return {
        "md": lambda: intervals.render_markdown(rows),
        "csv": lambda: intervals.render_csv(rows),
        "json": lambda: intervals.render_json(rows),
    }


def cmd_classify(args):
    n = _rank(args.n, prime=True)
    w = parse_weight(n, args.weight)
    if not weights.is_integral(w):
        raise PreconditionError("integral: weight is not integral")
    if not weights.is_dominant(w):
        raise PreconditionError("dominant: weight is not dominant")
    if args.level < 1:
        raise InputError(f"level must be >= 1, got {args.level}")
    report = spectral.classify(n, w, args.level)
    return {
        "md": report.to_markdown,
        "json": lambda: _json(report.to_dict()),
        "csv": lambda: _csv(
            [["k", "verdict", "bound", "symbolic"]]
            + [
                [k, v.kind.value, "" if v.bound is None else v.bound, v.symbolic or ""]
                for k, v in enumerate(report.per_degree)
            ]
        ),
    }


def cmd_betti(args):
    n = _rank(args.n)
    poly = lie_cohomology.poincare_polynomial(n)
    gens = lie_cohomology.generator_degrees(n)
    return {
        "md": lambda: (
            f"S0 = {intervals.set_text(gens.degrees)}\n"
            f"P(t) = {poly}\n\n| k | b_k |\n|---|---|\n"
            + "".join(f"| {k} | {poly[k]} |\n" for k in poly.support())
        ),
        "json": lambda: _json(
            {"n": n, "S0": list(gens.degrees), "polynomial": str(poly), "betti": poly.to_dict()}
        ),
        "csv": lambda: _csv([["k", "b_k"]] + [[k, poly[k]] for k in poly.support()]),
    }


def cmd_intervals(args):
    n = _rank(args.n)
    prof = intervals.degree_profile(n)

    def md():
        lines = [
            f"n = {n}, dim X_Sym = {prof.dim_sym}, a(n) = {fmt_rational(prof.a)}, "
            f"b(n) = {fmt_rational(prof.b)}",
            "",
            "| window | bounds | degrees |",
            "|---|---|---|",
            f"| ends | {{0, dim}} | {{0,{prof.dim_sym}}} |",
            f"| I_inner | (0, {fmt_rational(prof.a)}) | {intervals.set_text(prof.I_inner)} |",
            f"| I_cusp | [{fmt_rational(prof.a)}, {fmt_rational(prof.b)}] "
            f"| {intervals.set_text(prof.I_cusp)} |",
            f"| I_irr | ({fmt_rational(prof.b)}, {prof.dim_sym}) "
            f"| {intervals.set_text(prof.I_irr)} |",
            f"| S0 | | {intervals.set_text(prof.s0.degrees)} |",
        ]
        return "\n".join(lines) + "\n"

    return {
        "md": md,
        "json": lambda: _json(prof.to_dict()),
        "csv": lambda: _csv(
            [["window", "degrees"]]
            + [
                ["I_inner", " ".join(map(str, prof.I_inner))],
                ["I_cusp", " ".join(map(str, prof.I_cusp))],
                ["I_irr", " ".join(map(str, prof.I_irr))],
                ["S0", " ".join(map(str, prof.s0.degrees))],
            ]
        ),
    }


def cmd_residual(args):
    n = _rank(args.n, prime=True)
    w = parse_weight(n, args.weight) if args.weight else weights.from_standard(n, [0] * n)
    if args.level < 1:
        raise InputError(f"level must be >= 1, got {args.level}")
    for name, pred in (
        ("integral", weights.is_integral),
        ("constant-coefficient", weights.is_constant_coefficient),
    ):
        if not pred(w):
            raise PreconditionError(f"{name}: weight fails the {name} test")
    if not weights.sheaf_is_nonzero(w):
        raise PreconditionError("sheaf: central exponent nd is odd, the sheaf vanishes")

    if args.omega_index is None:
        central = None
        descriptors = spectral.residual_spectrum(n, w, args.level)
    else:
        chars = dirichlet.enumerate_characters(args.level)
        if not 0 <= args.omega_index < len(chars):
            raise InputError(
                f"omega-index {args.omega_index} out of range [0, {len(chars)})"
            )
        central = chars[args.omega_index]
        descriptors = spectral.residual_fiber(n, w, args.level, central)

    def md():
        head = f"GL_{n}, weight {w}, level {args.level}"
        if central is not None:
            head += f", central finite part exponents {list(central.exponents)}"
        lines = [
            head,
            "",
            "| # | exponents | conductor | order | type exponent | multiplicity |",
            "|---|---|---|---|---|---|",
        ]
        for i, d in enumerate(descriptors):
            mu = d.finite_part
            lines.append(
                f"| {i} | {list(mu.exponents)} | {dirichlet.conductor(mu)} | {mu.order} "
                f"| {fmt_rational(d.type_exponent)} | {d.multiplicity} |"
            )
        return "\n".join(lines) + "\n"

    return {
        "md": md,
        "json": lambda: _json(
            {
                "n": n,
                "weight": w.to_dict(),
                "level": args.level,
                "central": None if central is None else central.to_dict(),
                "descriptors": [d.to_dict() for d in descriptors],
            }
        ),
        "csv": lambda: _csv(
            [["index", "exponents", "conductor", "order", "type_exponent", "multiplicity"]]
            + [
                [
                    i,
                    " ".join(map(str, d.finite_part.exponents)),
                    dirichlet.conductor(d.finite_part),
                    d.finite_part.order,
                    fmt_rational(d.type_exponent),
                    d.multiplicity,
                ]
                for i, d in enumerate(descriptors)
            ]
        ),
    }


def cmd_weight_check(args):
    n = _rank(args.n)
    w = parse_weight(n, args.weight)
    fv = weights.fundamental_view(w)
    integral = weights.is_integral(w)
    if integral:
        sheaf = "nonzero" if weights.sheaf_is_nonzero(w) else "zero (nd odd)"
    else:
        sheaf = "undefined (not integral)"
    info = {
        "n": n,
        "b": [fmt_rational(x) for x in w.b],
        "a": [fmt_rational(x) for x in fv.a],
        "d": fmt_rational(fv.d),
        "nd": fmt_rational(fv.nd),
        "integral": integral,
        "dominant": weights.is_dominant(w),
        "constant_coefficient": weights.is_constant_coefficient(w),
        "sheaf": sheaf,
        "congruence_residue": fmt_rational(fv.congruence_residue()),
        "shifted_congruence_residue": fmt_rational(fv.shifted_congruence_residue()),
    }

    def text(v):
        return str(v).lower() if isinstance(v, bool) else (
            "(" + ",".join(v) + ")" if isinstance(v, list) else str(v)
        )

    return {
        "md": lambda: "| field | value |\n|---|---|\n"
        + "".join(f"| {k} | {text(v)} |\n" for k, v in info.items()),
        "json": lambda: _json(info),
        "csv": lambda: _csv([["field", "value"]] + [[k, text(v)] for k, v in info.items()]),
    }


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["md", "json", "csv"], default=argparse.SUPPRESS,
                        help="output format (default: md on a terminal, json otherwise)")
    common.add_argument("--output", default=argparse.SUPPRESS, metavar="PATH",
                        help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="innercoh",
        description="Degree windows, Betti numbers, residual spectrum and "
        "H^k_{!/cusp} classification for GL_n at prime rank.",
    )
    parser.add_argument("--format", choices=["md", "json", "csv"], default=None)
    parser.add_argument("--output", default=None, metavar="PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="reproduce the degree table")
    p.add_argument("primes", nargs="*", help="primes (space or comma separated)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classify", parents=[common], help="per-degree classification")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True,
                   help='standard "b1,...,bn" or fundamental "a=a1,...;d=d"')
    p.add_argument("--level", type=int, default=1, help="level modulus N (default 1)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("betti", parents=[common], help="Poincare polynomial of H^*(g,K,C)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("intervals", parents=[common], help="degree profile")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_intervals)

    p = sub.add_parser("residual", parents=[common], help="residual finite parts at level N")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--level", type=int, default=1)
    p.add_argument("--omega-index", type=int, default=None,
                   help="restrict to the fiber over the i-th character mod N")
    p.add_argument("--weight", default=None, help="defaults to the zero weight")
    p.set_defaults(func=cmd_residual)

    p = sub.add_parser("weight-check", parents=[common], help="weight predicates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_weight_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        renderers = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PreconditionError, spectral.DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    fmt = args.format or ("md" if sys.stdout.isatty() and not args.output else "json")
    text = renderers[fmt]()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
