"""Support cones, the coefficient recursion, specialization, verification."""

from fractions import Fraction

import pytest

from csd4 import hamiltonian as ham
from csd4 import rootsystem as rs
from csd4 import solver
from csd4.errors import PoleAtKappa
from csd4.kappa import KappaRational
from csd4.zpoly import Z1, Z2, Z3, Z4, ZPolynomial


def mus(cone):
    return [el.mu for el in cone.elements]


def test_support_cone_small():
    assert mus(solver.support_cone((0, 0, 0, 0))) == [(0, 0, 0, 0)]
    assert mus(solver.support_cone((1, 0, 0, 0))) == [(0, 0, 0, 0)]
    cone = solver.support_cone((2, 0, 0, 0))
    assert mus(cone) == [(0, 0, 0, 0), (1, 0, 0, 0), (2, 2, 1, 1)]
    assert [el.height for el in cone.elements] == [0, 1, 6]


def test_support_cone_rejects_non_dominant():
    with pytest.raises(ValueError):
        solver.support_cone((0, -1, 0, 0))
    with pytest.raises(ValueError):
        solver.solve((-1, 0, 0, 0))


def test_support_cone_complete_against_brute_force():
    # oracle: scan the whole box allowed by the Weyl-vector pairing bound
    for m in [(2, 0, 0, 0), (1, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 1), (3, 0, 0, 0)]:
        bound = 3 * m[0] + 5 * m[1] + 3 * m[2] + 3 * m[3]
        brute = set()
        for n1 in range(bound + 1):
            for n2 in range(bound + 1):
                for n3 in range(bound + 1):
                    for n4 in range(bound + 1):
                        if n1 + n2 + n3 + n4 > bound:
                            continue
                        w = rs.root_to_weight((n1, n2, n3, n4))
                        if all(m[i] - w[i] >= 0 for i in range(4)):
                            brute.add((n1, n2, n3, n4))
        assert {el.mu for el in solver.support_cone(m).elements} == brute, m


def test_support_cone_elements_valid():
    for m in [(2, 1, 0, 0), (0, 2, 0, 0), (1, 1, 1, 1)]:
        cone = solver.support_cone(m)
        assert cone.elements[0].mu == (0, 0, 0, 0)
        for el in cone.elements:
            assert all(c >= 0 for c in el.exponent)
            assert rs.root_to_weight(el.mu) == el.weight
            assert el.height == sum(el.mu)
        heights = [el.height for el in cone.elements]
        assert heights == sorted(heights)


def test_solve_known_entries():
    p = solver.solve((2, 0, 0, 0))
    expect = (
        Z1**2
        - Z2 * KappaRational((2,), (1, 1))
        - ZPolynomial.constant(KappaRational((0, 8), (1, 4, 3)))
    )
    assert p.polynomial == expect
    p = solver.solve((0, 1, 0, 0))
    assert p.polynomial == Z2 + ZPolynomial.constant(KappaRational((-4, 4), (1, 5)))
    p = solver.solve((1, 0, 1, 0))
    assert p.polynomial == Z1 * Z3 - Z4 * KappaRational((4,), (1, 3))
    assert solver.solve((0, 0, 0, 0)).polynomial == ZPolynomial.constant(1)


def test_normalization_and_leading_term():
    for m in [(1, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 1)]:
        p = solver.solve(m)
        assert p.coefficients[(0, 0, 0, 0)] == KappaRational(1)
        assert p.polynomial.coefficient(m) == KappaRational(1)


def test_specialize_examples():
    assert solver.specialize(solver.solve((1, 1, 0, 0)), 1) == Z1 * Z2 - Z3 * Z4
    assert solver.specialize(solver.solve((2, 0, 0, 0)), 0) == Z1**2 - Z2 * 2
    got = solver.specialize(solver.solve((1, 0, 1, 1)), 0)
    expect = (
        Z1 * Z3 * Z4 - (Z1**2 + Z3**2 + Z4**2) * 4 + Z2 * 12
        + ZPolynomial.constant(16)
    )
    assert got == expect


def test_specialize_pole_reports_mu():
    # the constant coefficient of the (2,0,0,0) polynomial has a pole at -1/3
    with pytest.raises(PoleAtKappa) as err:
        solver.specialize(solver.solve((2, 0, 0, 0)), Fraction(-1, 3))
    assert err.value.mu == (2, 2, 1, 1)
    assert err.value.kappa == Fraction(-1, 3)


def test_verify_eigen():
    assert solver.verify_eigen(solver.solve((1, 1, 0, 0)))
    assert solver.verify_eigen(solver.solve((0, 0, 0, 0)))
    p = solver.solve((2, 0, 0, 0))
    tampered = solver.CSPolynomial(
        p.m, p.eigenvalue, p.coefficients, p.polynomial + Z2
    )
    assert not solver.verify_eigen(tampered)


def test_solve_triality_covariance():
    for m in [(2, 1, 0, 0), (1, 0, 2, 1)]:
        base = solver.solve(m)
        for sigma in rs.TRIALITY_MAPS:
            image = solver.solve(rs.apply_triality(m, sigma))
            assert base.polynomial.permute_variables(sigma) == image.polynomial


def test_eigenvalue_matches_stored():
    for m in [(1, 0, 0, 0), (2, 1, 0, 0), (0, 0, 2, 1)]:
        assert solver.solve(m).eigenvalue == ham.eigenvalue(m)


def test_fixture_roundtrip():
    p = solver.solve((2, 1, 0, 0))
    obj = p.to_fixture_obj()
    back = solver.CSPolynomial.from_fixture_obj(obj)
    assert back.m == p.m
    assert back.eigenvalue == p.eigenvalue
    assert back.coefficients == p.coefficients
    assert back.polynomial == p.polynomial
