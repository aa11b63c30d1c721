"""Command-line interface.

Subcommands: compute, verify, genfun, qcheck, dims, recur.  All output is
deterministic for a fixed invocation (including the seed); JSON keys are
sorted.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 pole/resonance.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from fractions import Fraction

from . import fixtures, genfun, qspace, recurrence, rootsystem, solver
from .errors import PoleAtKappa
from .zpoly import ZPolynomial

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_POLE = 3


def _parse_m(text: str):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad quantum numbers {text!r}")
    if len(parts) != 4 or any(c < 0 for c in parts):
        raise argparse.ArgumentTypeError(
            f"quantum numbers must be four nonnegative integers, got {text!r}"
        )
    return parts


def _parse_kappa(text: str):
    if text == "symbolic":
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad coupling value {text!r}")


def _emit(obj, as_json: bool, text_fallback=None):
    if as_json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(text_fallback if text_fallback is not None else obj)


def _sample_points(seed: int, count: int, margin: float = 0.2):
    """Deterministic generic torus points, clear of potential nodes."""
    rng = random.Random(seed)
    points = []
    while len(points) < count:
        q = tuple(rng.uniform(0.1, math.pi - 0.1) for _ in range(4))
        if qspace.min_sine(q) > margin:
            points.append(q)
    return points


# ----------------------------------------------------------------------
# subcommands


def cmd_compute(args) -> int:
    p = solver.solve(args.m)
    if args.kappa is None:
        obj = p.to_fixture_obj()
        obj["kappa"] = "symbolic"
        _emit(obj, args.format == "json", text_fallback=str(p.polynomial))
        return EXIT_OK
    poly = solver.specialize(p, args.kappa)
    obj = {
        "m": list(args.m),
        "kappa": str(args.kappa),
        "terms": poly.to_json_obj(),
    }
    _emit(obj, args.format == "json", text_fallback=str(poly))
    return EXIT_OK


def cmd_dims(args) -> int:
    dim = rootsystem.weyl_dimension(args.m)
    _emit({"m": list(args.m), "dim": dim}, args.format == "json", text_fallback=dim)
    return EXIT_OK


def cmd_recur(args) -> int:
    expansion = recurrence.expand_product(args.v, args.m)
    _emit(expansion.to_json_obj(), True)
    return EXIT_OK


def cmd_genfun(args) -> int:
    checks = []
    ok = True
    if args.check == "series":
        for m, good in genfun.series_check(args.label, args.order):
            checks.append({"coefficient": m, "ok": good})
            ok = ok and good
    elif args.check == "pde":
        if args.label not in ("F0", "F1"):
            print(f"pde check is defined for F0/F1 only, not {args.label}",
                  file=sys.stderr)
            return EXIT_USAGE
        residual = genfun.pde_residual(args.label, args.order)
        for m, coeff in enumerate(residual.coeffs):
            good = coeff.is_zero()
            checks.append({"coefficient": m, "ok": good})
            ok = ok and good
    else:
        series = genfun.expand(args.label, args.order)
        for m, coeff in enumerate(series.coeffs):
            checks.append({"coefficient": m, "terms": coeff.to_json_obj()})
    obj = {"label": args.label, "order": args.order, "mode": args.check or "expand"}
    obj["coefficients" if args.check is None else "checks"] = checks
    if args.check is not None:
        obj["ok"] = ok
    _emit(obj, True)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_qcheck(args) -> int:
    points = _sample_points(args.seed, args.samples)
    rows = []
    worst = 0.0
    signs = set()
    for q in points:
        r = qspace.hamiltonian_residual(args.m, args.kappa, q, args.step)
        rows.append({"q": list(q), "residual": r.residual, "sign": r.sign})
        worst = max(worst, r.residual)
        signs.add(r.sign)
    ok = worst < args.tolerance and len(signs) == 1
    obj = {
        "m": list(args.m),
        "kappa": str(args.kappa),
        "step": args.step,
        "seed": args.seed,
        "points": rows,
        "max_residual": worst,
        "consistent_sign": len(signs) == 1,
        "ok": ok,
    }
    _emit(obj, True)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# ----------------------------------------------------------------------
# verify suites


def _suite_golden() -> list:
    checks = []
    corpus = fixtures.load_golden()
    for entry in corpus["polynomials"]:
        want = solver.CSPolynomial.from_fixture_obj(entry)
        got = solver.solve(want.m)
        ok = (
            got.coefficients == want.coefficients
            and got.eigenvalue == want.eigenvalue
            and got.polynomial == want.polynomial
        )
        checks.append({"name": f"polynomial {list(want.m)}", "ok": ok})
    for key, kappa0 in (("characters", 1), ("monomials", 0)):
        for entry in corpus[key]:
            m = tuple(entry["m"])
            want = ZPolynomial.from_json_obj(entry["terms"])
            got = solver.specialize(solver.solve(m), kappa0)
            checks.append({"name": f"{key[:-1]} {list(m)}", "ok": got == want})
    return checks


def _dominant_weights(total: int):
    for m1 in range(total + 1):
        for m2 in range(total + 1 - m1):
            for m3 in range(total + 1 - m1 - m2):
                for m4 in range(total + 1 - m1 - m2 - m3):
                    yield (m1, m2, m3, m4)


def _suite_eigen(seed: int) -> list:
    checks = []
    for m in _dominant_weights(3):
        checks.append(
            {"name": f"eigen {list(m)}", "ok": solver.verify_eigen(solver.solve(m))}
        )
    rng = random.Random(seed)
    seen = set()
    while len(seen) < 10:
        m = tuple(rng.randint(0, 5) for _ in range(4))
        if sum(m) > 5 or m in seen:
            continue
        seen.add(m)
        checks.append(
            {
                "name": f"eigen random {list(m)}",
                "ok": solver.verify_eigen(solver.solve(m)),
            }
        )
    return checks


def _suite_recur(max_m: int) -> list:
    report = recurrence.verify_closed_forms(max_m)
    checks = [
        {
            "name": f"{rec.family} m={rec.m} slot={list(rec.slot)}",
            "ok": rec.ok,
        }
        for rec in report.records
    ]
    for sigma in rootsystem.TRIALITY_MAPS[1:]:
        for v, m in ((1, (2, 1, 1, 0)), (2, (1, 1, 0, 2))):
            rep = recurrence.triality_consistent(v, m, sigma)
            label = "".join(str(sigma[i]) for i in (1, 2, 3, 4))
            checks.append(
                {"name": f"triality z{v} m={list(m)} sigma={label}", "ok": rep.ok}
            )
    return checks


def _suite_ladder() -> list:
    checks = []
    for m in range(1, 6):
        got = recurrence.ladder_next(m)
        want = solver.solve((m + 1, 0, 0, 0))
        checks.append(
            {"name": f"ladder ({m + 1},0,0,0)", "ok": got.polynomial == want.polynomial}
        )
    for m in range(1, 4):
        got = recurrence.ladder_mixed(m)
        want = solver.solve((m, 1, 0, 0))
        checks.append(
            {"name": f"ladder mixed ({m},1,0,0)", "ok": got.polynomial == want.polynomial}
        )
    return checks


def _suite_genfun(order: int) -> list:
    checks = []
    for label in ("F0", "F1"):
        for m, good in genfun.series_check(label, max(order, 8)):
            checks.append({"name": f"{label} series t^{m}", "ok": good})
    for label in ("G0", "G1"):
        for m, good in genfun.series_check(label, min(order, 6)):
            checks.append({"name": f"{label} series t^{m}", "ok": good})
    for label in ("F0", "F1"):
        residual = genfun.pde_residual(label, min(order, 6))
        checks.append({"name": f"{label} pde residual", "ok": residual.is_zero()})
    return checks


def _suite_qcheck(seed: int, tolerance: float, step: float) -> list:
    checks = []
    points = _sample_points(seed, 5)
    signs = set()
    for m in ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)):
        for kappa in (Fraction(7, 10), Fraction(13, 10)):
            worst = 0.0
            for q in points:
                r = qspace.hamiltonian_residual(m, kappa, q, step)
                worst = max(worst, r.residual)
                signs.add(r.sign)
            checks.append(
                {
                    "name": f"residual m={list(m)} kappa={kappa}",
                    "ok": worst < tolerance,
                    "max_residual": worst,
                }
            )
    checks.append({"name": "consistent sign", "ok": len(signs) == 1})
    return checks


def _suite_special(seed: int) -> list:
    checks = []
    points = _sample_points(seed, 5)
    for n, tol in ((1, 1e-10), (2, 1e-8)):
        try:
            worst = max(qspace.special_kappa_identity(n, q) for q in points)
            checks.append(
                {
                    "name": f"special identity n={n}",
                    "ok": worst < tol,
                    "max_relative_error": worst,
                }
            )
        except PoleAtKappa as exc:
            checks.append(
                {"name": f"special identity n={n}", "ok": False, "pole": str(exc)}
            )
    return checks


_SUITES = ("golden", "eigen", "recur", "ladder", "genfun", "qcheck", "special", "all")


def cmd_verify(args) -> int:
    checks = []
    suite = args.suite
    if suite in ("golden", "all"):
        checks += _suite_golden()
    if suite in ("eigen", "all"):
        checks += _suite_eigen(args.seed)
    if suite in ("recur", "all"):
        checks += _suite_recur(args.max_m)
    if suite in ("ladder", "all"):
        checks += _suite_ladder()
    if suite in ("genfun", "all"):
        checks += _suite_genfun(args.order)
    if suite in ("qcheck", "all"):
        checks += _suite_qcheck(args.seed, args.tolerance, args.step)
    if suite in ("special", "all"):
        checks += _suite_special(args.seed)
    ok = all(c["ok"] for c in checks)
    passed = sum(1 for c in checks if c["ok"])
    obj = {
        "suite": suite,
        "checks": checks,
        "passed": passed,
        "total": len(checks),
        "ok": ok,
    }
    _emit(obj, True)
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="csd4",
        description=(
            "Exact eigenpolynomials of the trigonometric Calogero-Sutherland "
            "model for D4 in fundamental-character variables."
        ),
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "text"), default="json",
                       help="output format (default json)")

    p = sub.add_parser("compute", help="solve one eigenpolynomial")
    p.add_argument("--m", type=_parse_m, required=True,
                   help="quantum numbers, e.g. 2,0,0,0")
    p.add_argument("--kappa", type=_parse_kappa, default=None,
                   help='"symbolic" (default) or a rational like 1 or 7/10')
    add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("dims", help="Weyl dimension of an irreducible module")
    p.add_argument("--m", type=_parse_m, required=True)
    add_common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("recur", help="expand z_v * P_m in the eigenbasis")
    p.add_argument("--v", type=int, choices=(1, 2, 3, 4), required=True,
                   help="index of the multiplying character")
    p.add_argument("--m", type=_parse_m, required=True,
                   help="base quantum numbers, e.g. 1,0,0,0")
    p.set_defaults(func=cmd_recur)

    p = sub.add_parser("genfun", help="generating-function expansion and checks")
    p.add_argument("--label", choices=genfun.LABELS, required=True,
                   help="which generating function")
    p.add_argument("--order", type=int, default=6,
                   help="truncation order in t (default 6)")
    p.add_argument("--check", choices=("series", "pde"), default=None,
                   help="compare against the solver, or test the defining "
                        "differential equation; omit to print coefficients")
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("qcheck", help="finite-difference residuals on the torus")
    p.add_argument("--m", type=_parse_m, required=True,
                   help="quantum numbers of the eigenfunction")
    p.add_argument("--kappa", type=Fraction, default=Fraction(1),
                   help="rational coupling value (default 1)")
    p.add_argument("--samples", type=int, default=5,
                   help="number of generic torus points (default 5)")
    p.add_argument("--step", type=float, default=1e-4,
                   help="finite-difference step (default 1e-4)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the point sampler (default 0)")
    p.add_argument("--tolerance", type=float, default=1e-6,
                   help="pass threshold on the relative residual")
    p.set_defaults(func=cmd_qcheck)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=_SUITES, default="all",
                   help="which suite to run (default all)")
    p.add_argument("--max-m", type=int, default=3, dest="max_m",
                   help="largest row index for the recurrence families")
    p.add_argument("--order", type=int, default=6,
                   help="series truncation order for the genfun suite")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for sampled points and random weights")
    p.add_argument("--step", type=float, default=1e-4,
                   help="finite-difference step for the qcheck suite")
    p.add_argument("--tolerance", type=float, default=1e-6,
                   help="residual threshold for the qcheck suite")
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except PoleAtKappa as exc:
        print(f"pole/resonance: {exc}", file=sys.stderr)
        return EXIT_POLE


if __name__ == "__main__":
    sys.exit(main())
