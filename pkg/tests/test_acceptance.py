"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.

Criterion 7 carries a known discrepancy: the odd-power factorized identity
equates a Weyl-symmetric polynomial with a Weyl-antisymmetric product of
sines, so its n=1 half cannot hold at generic points and is expected to
fail; it is asserted as stated rather than weakened.  The even case (n=2)
passes far inside tolerance.
"""

import itertools
import math
import random
import time
from fractions import Fraction

from csd4 import fixtures, genfun, qspace, recurrence, rootsystem, solver
from csd4 import hamiltonian as ham
from csd4.zpoly import ZPolynomial


def _report(criterion, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {criterion}: {status}  {detail}")
    return ok


def dominant_weights(total):
    out = []
    for m in itertools.product(range(total + 1), repeat=4):
        if sum(m) <= total:
            out.append(m)
    return out


def generic_points(seed, count, margin=0.2):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = tuple(rng.uniform(0.1, math.pi - 0.1) for _ in range(4))
        if qspace.min_sine(q) > margin:
            out.append(q)
    return out


def test_criterion_1_golden_corpus():
    start = time.time()
    corpus = fixtures.load_golden()
    bad = []
    for entry in corpus["polynomials"]:
        want = solver.CSPolynomial.from_fixture_obj(entry)
        got = solver.solve(want.m)
        if not (
            got.coefficients == want.coefficients
            and got.eigenvalue == want.eigenvalue
            and got.polynomial == want.polynomial
        ):
            bad.append(("symbolic", want.m))
    for key, kappa0 in (("characters", 1), ("monomials", 0)):
        for entry in corpus[key]:
            m = tuple(entry["m"])
            want = ZPolynomial.from_json_obj(entry["terms"])
            if solver.specialize(solver.solve(m), kappa0) != want:
                bad.append((key, m))
    elapsed = time.time() - start
    ok = not bad and elapsed < 30.0
    assert _report(
        "1 golden corpus (36 entries, exact)",
        ok,
        f"mismatches={bad} elapsed={elapsed:.2f}s",
    )


def test_criterion_2_eigen_equation():
    checked = 0
    failures = []
    for m in dominant_weights(3):
        if not solver.verify_eigen(solver.solve(m)):
            failures.append(m)
        checked += 1
    rng = random.Random(42)
    seen = set()
    while len(seen) < 10:
        m = tuple(rng.randint(0, 5) for _ in range(4))
        if sum(m) > 5 or m in seen:
            continue
        seen.add(m)
        if not solver.verify_eigen(solver.solve(m)):
            failures.append(m)
        checked += 1
    ok = not failures
    assert _report(
        "2 eigen-equation (exact)", ok, f"checked={checked} failures={failures}"
    )


def test_criterion_3_operator_cross_check():
    failures = []
    count = 0
    for e in itertools.product(range(4), repeat=4):
        if ham.apply(ZPolynomial.monomial(e)) != ham.apply_to_monomial(e):
            failures.append(e)
        count += 1
    rng = random.Random(7)
    for _ in range(200):
        e = tuple(rng.randint(0, 9) for _ in range(4))
        if ham.apply(ZPolynomial.monomial(e)) != ham.apply_to_monomial(e):
            failures.append(e)
        count += 1
    ok = not failures
    assert _report(
        "3 operator cross-check (exact)", ok, f"cases={count} failures={failures}"
    )


def test_criterion_4_dimension_degeneration():
    failures = []
    for m in dominant_weights(3):
        value = solver.specialize(solver.solve(m), 1).eval_exact((8, 28, 8, 8))
        expected = rootsystem.weyl_dimension(m)
        if value != expected:
            failures.append((m, value, expected))
    ok = not failures
    assert _report(
        "4 dimension degeneration (exact)",
        ok,
        f"weights={len(dominant_weights(3))} failures={failures}",
    )


def test_criterion_5_recurrence_closed_forms():
    start = time.time()
    report = recurrence.verify_closed_forms(6)
    triality_ok = True
    for sigma in rootsystem.TRIALITY_MAPS[1:]:
        for v, m in ((1, (2, 1, 1, 0)), (2, (1, 1, 0, 2)), (4, (1, 0, 2, 1))):
            if not recurrence.triality_consistent(v, m, sigma).ok:
                triality_ok = False
    elapsed = time.time() - start
    ok = report.ok and triality_ok and elapsed < 300.0
    detail = (
        f"records={len(report.records)} failures={len(report.failures)} "
        f"triality_ok={triality_ok} elapsed={elapsed:.1f}s"
    )
    assert _report("5 recurrence closed forms m<=6 (exact)", ok, detail)


def test_criterion_6_generating_functions():
    bad = []
    for label, order in (("F0", 8), ("F1", 8), ("G0", 6), ("G1", 6)):
        for m, good in genfun.series_check(label, order):
            if not good:
                bad.append((label, m))
    pde_ok = all(genfun.pde_residual(label, 6).is_zero() for label in ("F0", "F1"))
    ok = not bad and pde_ok
    assert _report(
        "6 generating functions (exact)", ok, f"series_failures={bad} pde_ok={pde_ok}"
    )


def test_criterion_7_special_kappa_identity():
    points = generic_points(0, 5)
    worst = {}
    for n, tol in ((1, 1e-10), (2, 1e-8)):
        worst[n] = max(qspace.special_kappa_identity(n, q) for q in points)
    ok = worst[1] < 1e-10 and worst[2] < 1e-8
    detail = (
        f"n=1 max_rel_err={worst[1]:.3e} (tol 1e-10), "
        f"n=2 max_rel_err={worst[2]:.3e} (tol 1e-8); the n=1 half equates a "
        "Weyl-symmetric polynomial with an antisymmetric sine product and "
        "cannot pass at generic points"
    )
    assert _report("7 special-coupling identity (numeric)", ok, detail)


def test_criterion_8_qspace_residual():
    points = generic_points(0, 5)
    failures = []
    signs = set()
    for m in ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)):
        for kappa in (Fraction(7, 10), Fraction(13, 10)):
            for q in points:
                r = qspace.hamiltonian_residual(m, kappa, q, 1e-4)
                signs.add(r.sign)
                if r.residual >= 1e-6:
                    failures.append((m, float(kappa), r.residual))
    ok = not failures and len(signs) == 1
    assert _report(
        "8 torus finite-difference residual (numeric)",
        ok,
        f"failures={failures} signs={signs}",
    )


def test_criterion_9_ladder():
    failures = []
    for m in range(1, 6):
        if recurrence.ladder_next(m).polynomial != solver.solve((m + 1, 0, 0, 0)).polynomial:
            failures.append(("up", m))
    for m in range(1, 4):
        if recurrence.ladder_mixed(m).polynomial != solver.solve((m, 1, 0, 0)).polynomial:
            failures.append(("mixed", m))
    ok = not failures
    assert _report("9 ladder algorithm (exact)", ok, f"failures={failures}")
