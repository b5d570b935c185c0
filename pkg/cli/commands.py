"""
Subcommands of `w3`. Each handler takes the parsed namespace and returns a Report.
"""
from __future__ import annotations

import argparse
import re
import sys
from typing import Callable

from config import FreeFieldConfig, SingularConfig, WinfConfig, ZhuConfig
from exact.poly import ALPHA, Poly, as_poly, parse_poly, poly_constant_value
from exact.rational import parse_rational
from freefield import highest_weight, verify_bosonization, verify_w3_relations
from singvec import find_singular, verify_not_verma_singular, w0_structure
from winf import canonical_label, check_bracket_axioms, classify, dsr_report
from zhu import (
    STRATEGIES,
    CurveIdeal,
    curve_poly,
    iso_partner,
    on_curve,
    quotient_normal_form,
    reduce_to_poly,
    reduce_via_zero_mode,
    weight_from_alpha,
    weights_coincide,
)
from zhu.curve import curve_value

from .expressions import parse_vector
from .reports import Report
from .verify_all import run_all

Handler = Callable[[argparse.Namespace], Report]

SYMBOLIC_NAMES = ("alpha", "sym")

# options that take no value
FLAG_OPTIONS = ("--json", "--w0", "--verma", "--bosonization", "--canonical", "--help")
# values that start with a single dash (-3/2, -L(-2)vac); -h stays an option
DASH_VALUE = re.compile(r"^-(?!-)(?!h$)\S")


def parse_alpha(text: str) -> Poly:
    """A rational, or `alpha`/`sym` for the symbolic parameter."""
    if text.strip() in SYMBOLIC_NAMES:
        return ALPHA
    return as_poly(parse_rational(text))


def _inputs(args: argparse.Namespace) -> dict:
    hidden = {"handler", "json", "output", "command", "action"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in hidden and v is not None}


# ============================================================================
# HANDLERS
# ============================================================================
def cmd_sing(args: argparse.Namespace) -> Report:
    report = find_singular(args.level)
    results = report.to_dict()
    passed = True
    if args.w0:
        structure = w0_structure()
        results["w0"] = structure.to_dict()
    if args.verma:
        witnesses = verify_not_verma_singular()
        results["vermaWitnesses"] = [w.to_dict() for w in witnesses]
        passed = all(w.passed for w in witnesses)
    return Report.build("sing", _inputs(args), results, passed)


def cmd_zhu_reduce(args: argparse.Namespace) -> Report:
    vector = parse_vector(args.vector)
    strategies = STRATEGIES + ("zero-mode",) if args.strategy == "all" else (args.strategy,)
    images = {}
    for strategy in strategies:
        if strategy == "zero-mode":
            images[strategy] = reduce_via_zero_mode(vector).value
        else:
            images[strategy] = reduce_to_poly(vector, strategy).value
    passed = len(set(images.values())) == 1
    return Report.build("zhu reduce", _inputs(args), {
        "vector": vector,
        "images": images,
        "normalForm": quotient_normal_form(next(iter(images.values()))).value,
    }, passed)


def cmd_zhu_curve(args: argparse.Namespace) -> Report:
    ideal, (image, image_prime) = curve_poly(args.strategy)
    passed = image.value == ideal.generator and not image_prime.value
    return Report.build("zhu curve", _inputs(args), {
        "curve": str(ideal),
        "images": [image.value, image_prime.value],
    }, passed)


def cmd_curve_weights(args: argparse.Namespace) -> Report:
    t, w = weight_from_alpha(args.alpha)
    results = {"t": t, "w": w}
    if t.is_ground and w.is_ground:
        t_value, w_value = poly_constant_value(t), poly_constant_value(w)
        results["onCurve"] = on_curve(t_value, w_value)
        results["curveValue"] = curve_value(t_value, w_value)
    return Report.build("curve weights", _inputs(args), results)


def cmd_curve_partner(args: argparse.Namespace) -> Report:
    alpha = args.alpha
    partner = iso_partner(alpha)
    return Report.build("curve partner", _inputs(args), {
        "partner": partner,
        "weights": weight_from_alpha(alpha),
        "partnerWeights": weight_from_alpha(partner),
        "coincide": weights_coincide(alpha, partner),
    })


def cmd_curve_normal_form(args: argparse.Namespace) -> Report:
    p = parse_poly(args.poly)
    return Report.build("curve normal-form", _inputs(args), {
        "normalForm": quotient_normal_form(p).value,
        "inIdeal": CurveIdeal().contains(p),
    })


def cmd_ff_weights(args: argparse.Namespace) -> Report:
    t, w = highest_weight(args.alpha)
    expected = weight_from_alpha(args.alpha)
    return Report.build("ff weights", _inputs(args), {"t": t, "w": w, "matchesCurve": (t, w) == expected},
                        (t, w) == expected)


def cmd_ff_verify(args: argparse.Namespace) -> Report:
    relations = verify_w3_relations(args.max_level, args.alpha, args.max_index)
    results = {"relations": relations.to_dict()}
    passed = relations.passed
    if args.bosonization:
        bosonization = verify_bosonization(args.max_level, min(args.max_index, FreeFieldConfig.BOSONIZATION_MAX_INDEX))
        results["bosonization"] = bosonization.to_dict()
        passed = passed and bosonization.passed
    return Report.build("ff verify", _inputs(args), results, passed)


def cmd_winf_jacobi(args: argparse.Namespace) -> Report:
    report = check_bracket_axioms(args.samples, args.seed, args.max_grade, args.max_deg)
    return Report.build("winf jacobi", _inputs(args), report.to_dict(), report.passed)


def cmd_winf_dsr(args: argparse.Namespace) -> Report:
    report = dsr_report(args.n, args.k)
    return Report.build("winf dsr", _inputs(args), report.to_dict(), report.universal)


def cmd_winf_classify(args: argparse.Namespace) -> Report:
    label = canonical_label(args.alpha, args.s) if args.canonical else classify(args.alpha, args.s)
    return Report.build("winf classify", _inputs(args), label.to_dict())


def cmd_verify_all(args: argparse.Namespace) -> Report:
    checks = run_all(args.seed)
    return Report.build("verify-all", _inputs(args), {
        "checks": [c.to_dict() for c in checks],
        "passedCount": sum(c.passed for c in checks),
        "total": len(checks),
    }, all(c.passed for c in checks))


# ============================================================================
# PARSER
# ============================================================================
def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the JSON report on stdout")
    common.add_argument("--output", type=str, help="Also write <command>.json into this directory")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="w3",
        description="Exact computations for W3 at c = -2 and W_{1+inf} at c = -1",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Singular vectors at level 6 with the Wt_0 structure
  w3 sing --level 6 --w0 --json

  # Images of the singular vectors in the Zhu algebra
  w3 zhu curve --json

  # Reduce a vector with every strategy
  w3 zhu reduce --vector "L(-3)vac" --strategy all

  # Highest weights of H^alpha, symbolic
  w3 ff weights --alpha alpha --json

  # Everything
  w3 verify-all --seed 0 --output reports
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sing = sub.add_parser("sing", parents=[common], help="Singular vectors of the vacuum module")
    sing.add_argument("--level", type=int, default=SingularConfig.MAX_LEVEL, help="Level to search")
    sing.add_argument("--w0", action="store_true", help="Report Wt_0 on the level-6 pair")
    sing.add_argument("--verma", action="store_true", help="Check the pair is not singular in M(0,0)")
    sing.set_defaults(handler=cmd_sing)

    zhu = sub.add_parser("zhu", help="Zhu algebra reductions").add_subparsers(dest="action", required=True)
    reduce = zhu.add_parser("reduce", parents=[common], help="[v] in C[t, w]")
    reduce.add_argument("--vector", type=str, required=True, help='Vector expression, e.g. "L(-2)vac"')
    reduce.add_argument("--strategy", choices=STRATEGIES + ("zero-mode", "all"),
                        default=ZhuConfig.DEFAULT_STRATEGY)
    reduce.set_defaults(handler=cmd_zhu_reduce)
    curve = zhu.add_parser("curve", parents=[common], help="Images of the singular vectors")
    curve.add_argument("--strategy", choices=STRATEGIES, default=ZhuConfig.DEFAULT_STRATEGY)
    curve.set_defaults(handler=cmd_zhu_curve)

    curves = sub.add_parser("curve", help="The weight curve").add_subparsers(dest="action", required=True)
    weights = curves.add_parser("weights", parents=[common], help="(t, w) from alpha")
    weights.add_argument("--alpha", type=parse_alpha, required=True, help="p/q or 'alpha'")
    weights.set_defaults(handler=cmd_curve_weights)
    partner = curves.add_parser("partner", parents=[common], help="alpha -> 1 - alpha")
    partner.add_argument("--alpha", type=parse_rational, required=True)
    partner.set_defaults(handler=cmd_curve_partner)
    normal = curves.add_parser("normal-form", parents=[common], help="Reduce modulo the curve")
    normal.add_argument("--poly", type=str, required=True, help='e.g. "w^3 + t"')
    normal.set_defaults(handler=cmd_curve_normal_form)

    ff = sub.add_parser("ff", help="Free-field realizations").add_subparsers(dest="action", required=True)
    ff_weights = ff.add_parser("weights", parents=[common], help="L_0, Wt_0 on |alpha>")
    ff_weights.add_argument("--alpha", type=parse_alpha, required=True, help="p/q or 'alpha'")
    ff_weights.set_defaults(handler=cmd_ff_weights)
    ff_verify = ff.add_parser("verify", parents=[common], help="W3 relations on H^alpha")
    ff_verify.add_argument("--max-level", type=int, default=FreeFieldConfig.MAX_LEVEL)
    ff_verify.add_argument("--max-index", type=int, default=FreeFieldConfig.MAX_INDEX)
    ff_verify.add_argument("--alpha", type=parse_alpha, default=as_poly(0))
    ff_verify.add_argument("--bosonization", action="store_true", help="Also check the bc side")
    ff_verify.set_defaults(handler=cmd_ff_verify)

    winf = sub.add_parser("winf", help="W_{1+inf} and HD").add_subparsers(dest="action", required=True)
    jacobi = winf.add_parser("jacobi", parents=[common], help="Bracket axioms on random elements")
    jacobi.add_argument("--samples", type=int, default=WinfConfig.SAMPLES)
    jacobi.add_argument("--seed", type=int, default=WinfConfig.SEED)
    jacobi.add_argument("--max-deg", type=int, default=WinfConfig.MAX_DEGREE)
    jacobi.add_argument("--max-grade", type=int, default=WinfConfig.MAX_GRADE)
    jacobi.set_defaults(handler=cmd_winf_jacobi)
    dsr = winf.add_parser("dsr", parents=[common], help="Drinfeld-Sokolov central charge")
    dsr.add_argument("--n", type=int, default=3)
    dsr.add_argument("--k", type=parse_rational, required=True)
    dsr.set_defaults(handler=cmd_winf_dsr)
    label = winf.add_parser("classify", parents=[common], help="Module label (alpha, s)")
    label.add_argument("--alpha", type=parse_rational, required=True)
    label.add_argument("--s", type=parse_rational, required=True)
    label.add_argument("--canonical", action="store_true", help="Map alpha = 1 to alpha = 0")
    label.set_defaults(handler=cmd_winf_classify)

    verify = sub.add_parser("verify-all", parents=[common], help="Run every acceptance check")
    verify.add_argument("--seed", type=int, default=WinfConfig.SEED)
    verify.set_defaults(handler=cmd_verify_all)
    return parser


def attach_dash_values(argv: list[str]) -> list[str]:
    """Rewrite `--flag -3/2` as `--flag=-3/2`.

    argparse only recognizes plain negative numbers as values; rationals such as
    -3/2 and expressions such as -L(-2)vac would be read as unknown options.
    """
    result: list[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        following = argv[i + 1] if i + 1 < len(argv) else None
        if (token.startswith("--") and "=" not in token and token not in FLAG_OPTIONS
                and following is not None and DASH_VALUE.match(following)):
            result.append(f"{token}={following}")
            i += 2
            continue
        result.append(token)
        i += 1
    return result


def run(argv: list[str] | None = None) -> tuple[Report, argparse.Namespace]:
    """Parse and execute; argparse exits with 2 on usage errors."""
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(attach_dash_values(argv))
    return args.handler(args), args
