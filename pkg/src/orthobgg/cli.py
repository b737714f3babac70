"""
Command line interface.

    orthobgg hasse --algebra D --rank 4 --cross 1 --regular --format json
    orthobgg bgg --algebra D --rank 4 --cross 2 --lambda "-3/2,-3/2|1/2,1/2" --confirm-extremal
    orthobgg extremal --algebra D --rank 4 --cross 1 --lambda "-5/2|1/2,1/2,1/2" --mu "-7/2|1/2,1/2,-1/2"
    orthobgg complex --algebra D --rank 4 --cross 2 --chain W1 W2 W3 W4
    orthobgg dirac --n 4 --degree 4 --mode exhaustive

Exit codes: 0 success, 1 a checked property fails, 2 usage or input error,
3 a size guard was hit.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

from .dirac import Convention, DiracError, verify_complex
from .liealg import AlgebraError, AlgebraSpec
from .parabolic import ParabolicSpec, bgg_graph, regular_hasse_graph, singular_hasse_graph
from .serialize import format_weight, parse_weight, render_graph
from .weyl import GuardExceeded

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


# weight literals such as "-5/2|1/2" would otherwise be read as options
_WEIGHT_LITERAL = re.compile(r"^-[0-9][0-9/,| -]*$")


class UsageError(Exception):
    pass


def _parse_cross(text: str) -> int:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 1:
        raise UsageError("exactly one crossed node is supported (got %r)" % text)
    try:
        return int(parts[0])
    except ValueError:
        raise UsageError(f"--cross expects an integer, got {text!r}") from None


def _parabolic(args) -> ParabolicSpec:
    k = _parse_cross(args.cross)
    try:
        return ParabolicSpec(AlgebraSpec(args.algebra, args.rank), k)
    except AlgebraError as e:
        raise UsageError(str(e)) from None


def _weight(text: str, ps: ParabolicSpec):
    try:
        return parse_weight(text, ps)
    except AlgebraError as e:
        raise UsageError(str(e)) from None


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_hasse(args) -> int:
    ps = _parabolic(args)
    if args.regular:
        g = regular_hasse_graph(ps)
    else:
        if args.lam is None:
            raise UsageError("--singular needs --lambda")
        g = singular_hasse_graph(ps, _weight(args.lam, ps))
    _emit(args, render_graph(g, args.format))
    return EXIT_OK


def cmd_bgg(args) -> int:
    ps = _parabolic(args)
    g = bgg_graph(ps, _weight(args.lam, ps), confirm_with_extremal=args.confirm_extremal)
    _emit(args, render_graph(g, args.format))
    return EXIT_OK


def cmd_extremal(args) -> int:
    from .verma import extremal_vectors

    ps = _parabolic(args)
    lam, mu = _weight(args.lam, ps), _weight(args.mu, ps)
    sol = extremal_vectors(lam, mu, ps)
    if args.format == "json":
        doc = {
            "algebra": str(ps.algebra),
            "sigma": [ps.k],
            "lambda": format_weight(lam, ps),
            "mu": format_weight(mu, ps),
            "dim": sol.dim,
            "basis": [v.to_json() for v in sol.basis],
        }
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(args, "\n".join([f"dim {sol.dim}"] + [v.to_text() for v in sol.basis]) + "\n")
    return EXIT_OK


def cmd_complex(args) -> int:
    from .verma import compose_is_zero, extremal_vectors

    ps = _parabolic(args)
    chain = [_weight(w, ps) for w in args.chain]
    if not 2 <= len(chain) <= 4:
        raise UsageError("--chain takes 2 to 4 weights")
    lines: List[str] = []
    status = EXIT_OK
    homs = []
    for a, b in zip(chain, chain[1:]):
        sol = extremal_vectors(a, b, ps)
        lines.append(f"hom [{format_weight(a, ps)}] <- [{format_weight(b, ps)}]: dim {sol.dim}")
        for v in sol.basis:
            lines.append(f"  {v.to_text()}")
        if sol.dim != 1:
            status = EXIT_VIOLATION
        homs.append(sol.basis[0] if sol.basis else None)
    if len(homs) == 1:
        lines.append("no compositions to check")
    for t, (outer, inner) in enumerate(zip(homs, homs[1:]), start=1):
        label = f"composition {t}+{t + 1}"
        if outer is None or inner is None:
            lines.append(f"{label}: skipped (missing homomorphism)")
            continue
        zero, residual = compose_is_zero(outer, inner)
        if zero:
            lines.append(f"{label}: zero")
        else:
            lines.append(f"{label}: NONZERO ({len(residual.terms)} terms)")
            status = EXIT_VIOLATION
    _emit(args, "\n".join(lines) + "\n")
    return status


def cmd_dirac(args) -> int:
    conv = Convention(alternative=args.alternative, literal_third=args.literal_third, mutate=args.mutate_sign)
    try:
        report = verify_complex(
            args.n, args.degree, mode=args.mode, trials=args.trials, seed=args.seed,
            max_grade=args.max_grade, conv=conv,
        )
    except DiracError as e:
        if "must be in" in str(e):
            raise GuardExceeded(str(e)) from None
        raise UsageError(str(e)) from None
    doc = report.as_dict()
    if args.format == "json":
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        _emit(args, "".join(f"{k}: {v}\n" for k, v in doc.items() if k != "first_failures"))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _algebra_args(p: argparse.ArgumentParser):
    p.add_argument("--algebra", required=True, choices=["B", "D"])
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--cross", required=True, help="index k of the crossed simple root")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthobgg", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hasse", help="regular or singular Hasse graph")
    _algebra_args(p)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--regular", action="store_true")
    mode.add_argument("--singular", action="store_true")
    p.add_argument("--lambda", dest="lam", help='weight such as "-5/2|1/2,1/2,1/2"')
    p.add_argument("--format", choices=["dot", "json", "text"], default="text")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("bgg", help="BGG graph on the affine orbit of a weight")
    _algebra_args(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--confirm-extremal", action="store_true", help="decide candidate arrows with the solver")
    p.add_argument("--format", choices=["dot", "json", "text"], default="text")
    p.set_defaults(func=cmd_bgg)

    p = sub.add_parser("extremal", help="singular vectors of weight mu in M_p(lambda)")
    _algebra_args(p)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("complex", help="check that consecutive homomorphisms compose to zero")
    _algebra_args(p)
    p.add_argument("--chain", nargs="+", required=True, metavar="W")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("dirac", help="check the two-variable Dirac sequence on polynomial fields")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-grade", type=int, default=2)
    p.add_argument("--alternative", action="store_true", help="use the second sign convention")
    p.add_argument("--literal-third", action="store_true", help="with --alternative, use D1 h2 + D2 h1")
    p.add_argument("--mutate-sign", action="store_true", help="debug: break the second operator")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dirac)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    argv = [" " + a if _WEIGHT_LITERAL.match(a) else a for a in argv]
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as e:
        print(f"guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except AlgebraError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
