"""Command-line entry point ``stablecovers``.

Every subcommand prints one JSON document (keys sorted, tagged
``"schema": "hf-1"``) on stdout. Exit status: 0 on success, 1 for usage
or parse errors, 2 for well-formed input that violates a mathematical
precondition. Error messages go to stderr.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .errors import DomainError, ParityError, ParseError, StableCoversError, UsageError, WrongCharacteristic

SCHEMA_TAG = "hf-1"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit(doc, out):
    doc = dict(doc, schema=SCHEMA_TAG)
    out.write(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


# --- subcommands -------------------------------------------------------------

def _cmd_hurwitz(args, out):
    from .hurwitz import convolution_oracle, count_simple_monodromy
    from .stablemap import riemann_hurwitz_genus

    d, n = args.degree, args.branch_points
    raw = count_simple_monodromy(d, n, workers=args.workers)
    doc = {"d": d, "n": n, "h": 0}
    try:
        doc["genus"] = riemann_hurwitz_genus(d, 0, n)
    except ParityError:
        doc["genus"] = None
    if args.mode in (None, "raw"):
        doc["raw"] = raw
    if args.mode in (None, "normalized"):
        from fractions import Fraction
        doc["normalized"] = str(Fraction(raw, math.factorial(d)))
    if args.oracle_check:
        oracle = convolution_oracle(d, n)
        doc["oracle"] = oracle
        doc["oracle_agrees"] = oracle == raw
    _emit(doc, out)
    return 0


def _cmd_classify(args, out):
    from .classify import H24Point, classify
    from .dot import render_dot
    from .field import parse_field, parse_p1

    F = parse_field(args.field)
    point = H24Point(parse_p1(F, args.lam), parse_p1(F, args.j))
    res = classify(point)
    dot = render_dot(res)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    if args.format == "dot":
        out.write(dot)
        return 0
    doc = res.to_dict()
    doc["field"] = F.describe()
    _emit(doc, out)
    return 0


def _lits(elems):
    return [e.literal() for e in elems]


def _cmd_legendre(args, out):
    from .field import parse_field, parse_literal
    from .legendre import (
        LegendreCurve,
        Symmetry,
        blowup_branch_count,
        char2_singular_point,
        fixed_points,
        geometric_fixed_point_count,
        j_from_lambda,
        lambda_orbit,
        singularity_type,
        _singular_points_any_char,
    )

    F = parse_field(args.field)
    lam = parse_literal(F, args.lam)
    curve = LegendreCurve(lam)
    doc = {
        "field": F.describe(),
        "lambda": lam.literal(),
        "orbit": _lits(lambda_orbit(lam)),
        "j": None if F.p == 2 else j_from_lambda(lam).literal(),
    }
    if args.analyze:
        pts = _singular_points_any_char(curve)
        analysis = {
            "singular_points": [_lits(pt) for pt in pts],
            "fixed_points": {
                s.value: sorted(pt.literal() for pt in fixed_points(s, lam)) for s in Symmetry
            },
            "geometric_fixed_point_count": {
                s.value: geometric_fixed_point_count(s, lam) for s in Symmetry
            },
        }
        if pts:
            rep = singularity_type(curve)
            analysis["type"] = rep.kind.value
            analysis["tangent_cone"] = _lits(rep.tangent_form)
            analysis["branches"] = blowup_branch_count(curve)
        else:
            analysis["type"] = None
        if F.p == 2:
            cert = char2_singular_point(curve)
            analysis["certificate"] = {
                "point": _lits((cert.x, cert.y)),
                "on_curve": cert.on_curve,
                "dfdx_vanishes": cert.dfdx_vanishes,
                "dfdy_identically_zero": cert.dfdy_identically_zero,
                "smooth_at_infinity": cert.smooth_at_infinity,
                "unique": cert.unique,
                "ok": cert.ok(),
            }
        doc["analysis"] = analysis
    _emit(doc, out)
    return 0


def _cmd_curve(args, out):
    from .elliptic import (
        WeierstrassCurve,
        hasse_ok,
        is_supersingular,
        point_count,
        two_torsion_count,
        weierstrass_j,
    )
    from .field import parse_field, parse_literal

    F = parse_field(args.field)
    parts = args.coeffs.split(",")
    if len(parts) != 5:
        raise ParseError(f"--coeffs needs a1,a2,a3,a4,a6; got {len(parts)} values")
    E = WeierstrassCurve(*(parse_literal(F, c) for c in parts))
    doc = {
        "field": F.describe(),
        "coeffs": E.coeff_literals(),
        "discriminant": E.discriminant().literal(),
        "j": weierstrass_j(E).literal(),
    }
    if args.report:
        if F.p == 0:
            raise WrongCharacteristic("--report needs a finite field")
        N = point_count(E)
        doc["N"] = N
        doc["trace"] = F.order + 1 - N
        doc["hasse_ok"] = hasse_ok(E)
        doc["supersingular"] = is_supersingular(E)
        doc["two_torsion"] = two_torsion_count(E) if F.p == 2 else None
    _emit(doc, out)
    return 0


def _cmd_graph_check(args, out):
    from .graph import arithmetic_genus, graph_validate, graph_violations, pointed_stability
    from .stablemap import (
        degree_conservation,
        finiteness_attributes,
        map_stability,
        map_validate,
        map_violations,
    )

    if args.file in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"input is not JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("input must be a JSON object")
    if "map_type" in data:
        data = data["map_type"]
    kind = args.kind
    if kind == "auto":
        kind = "map" if "source" in data else "graph"
    violations = map_violations(data) if kind == "map" else graph_violations(data)
    doc = {
        "kind": kind,
        "valid": not violations,
        "violations": [v.to_dict() for v in violations],
    }
    if not violations:
        if kind == "map":
            M = map_validate(data)
            doc["summary"] = {
                "source_genus": arithmetic_genus(M.source),
                "target_genus": arithmetic_genus(M.target),
                "stable": bool(map_stability(M)),
                "degree_conserved": degree_conservation(M),
                "finiteness": finiteness_attributes(M).to_dict(),
            }
        else:
            G = graph_validate(data)
            doc["summary"] = {
                "arithmetic_genus": arithmetic_genus(G),
                "stable": bool(pointed_stability(G)),
            }
    _emit(doc, out)
    return 0 if not violations else 2


# --- wiring ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="stablecovers", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    h = sub.add_parser("hurwitz", help="count simply branched covers of P^1")
    h.add_argument("--degree", "-d", type=int, required=True)
    h.add_argument("--branch-points", "-n", type=int, required=True)
    mode = h.add_mutually_exclusive_group()
    mode.add_argument("--raw", dest="mode", action="store_const", const="raw")
    mode.add_argument("--normalized", dest="mode", action="store_const", const="normalized")
    h.add_argument("--oracle-check", action="store_true",
                   help="also run the independent convolution count")
    h.add_argument("--workers", type=int, default=1)
    h.set_defaults(func=_cmd_hurwitz)

    c = sub.add_parser("classify", help="classify a point of the characteristic-2 fiber")
    c.add_argument("--field", required=True, help='e.g. "2^2"')
    c.add_argument("--lambda", dest="lam", required=True, help='e.g. "t", "0", "inf"')
    c.add_argument("--j", required=True)
    c.add_argument("--dot", metavar="PATH", help="also write a DOT drawing to PATH")
    c.add_argument("--format", choices=("json", "dot"), default="json")
    c.set_defaults(func=_cmd_classify)

    lg = sub.add_parser("legendre", help="Legendre curve y^2 = x(x-1)(x-lambda)")
    lg.add_argument("--field", required=True)
    lg.add_argument("--lambda", dest="lam", required=True)
    lg.add_argument("--analyze", action="store_true",
                    help="singular points, tangent cone, symmetry fixed points")
    lg.set_defaults(func=_cmd_legendre)

    cv = sub.add_parser("curve", help="Weierstrass curve invariants and point count")
    cv.add_argument("--field", required=True)
    cv.add_argument("--coeffs", required=True, help="a1,a2,a3,a4,a6")
    cv.add_argument("--report", action="store_true")
    cv.set_defaults(func=_cmd_curve)

    g = sub.add_parser("graph-check", help="validate a dual graph or map type (JSON)")
    g.add_argument("file", nargs="?", help="JSON file; stdin if omitted or '-'")
    g.add_argument("--kind", choices=("auto", "graph", "map"), default="auto")
    g.set_defaults(func=_cmd_graph_check)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except DomainError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except StableCoversError as exc:  # pragma: no cover - every error has a family
        err.write(f"error: {exc}\n")
        return 2
    except (OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()


def load_schema(name: str) -> dict:
    """One of the shipped JSON schemas (``graph``, ``map``, ``classify``, ...)."""
    from importlib.resources import files

    return json.loads(files(__package__).joinpath("schemas", f"{name}.json").read_text("utf-8"))
