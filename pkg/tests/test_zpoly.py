"""Ring tests for the sparse character-variable polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csd4.errors import PoleAtKappa
from csd4.kappa import KappaRational
from csd4.zpoly import Z1, Z2, Z3, Z4, ZPolynomial


def test_basic_products():
    assert (Z1 * Z1 - Z2) * Z2 == Z1 * Z1 * Z2 - Z2 * Z2
    p = Z1 * Z3 + Z2 * 5 - 7
    assert p + p * (-1) == ZPolynomial.zero()
    assert (Z1 + Z3) * (Z1 - Z3) == Z1**2 - Z3**2


def test_derivative():
    p = Z1**2 * Z3
    assert p.derivative(1) == Z1 * Z3 * 2
    assert ZPolynomial.constant(9).derivative(2).is_zero()
    assert (Z2**3).derivative(2) == Z2**2 * 3
    assert (Z1**2 * Z3).derivative(4).is_zero()


def test_scalar_coercion():
    assert Z1 * Fraction(1, 2) + Z1 * Fraction(1, 2) == Z1
    assert (Z1 + 1) - 1 == Z1
    k = KappaRational((0, 1))
    assert (Z1 * k).coefficient((1, 0, 0, 0)) == k


def test_substitute_kappa():
    k = KappaRational((0, 1), (1, 1))  # k/(1+k)
    p = Z1 * k + Z2
    q = p.substitute_kappa(1)
    assert q == Z1 * Fraction(1, 2) + Z2
    with pytest.raises(PoleAtKappa):
        p.substitute_kappa(-1)


def test_eval_exact_and_complex():
    p = Z1**2 - Z2 * 2
    assert p.eval_exact((3, 4, 0, 0)) == 1
    assert abs(p.eval_complex((3 + 0j, 4 + 0j, 0j, 0j)) - 1) < 1e-12


def test_permute_variables():
    sigma = {1: 3, 2: 2, 3: 1, 4: 4}
    assert Z1.permute_variables(sigma) == Z3
    p = Z1**2 * Z4 + Z3
    assert p.permute_variables(sigma) == Z3**2 * Z4 + Z1


def test_monomial_validation():
    with pytest.raises(ValueError):
        ZPolynomial.monomial((1, 2, 3))
    with pytest.raises(ValueError):
        ZPolynomial.monomial((1, -1, 0, 0))


def test_json_roundtrip():
    p = Z1**2 * Z3 * KappaRational((1, 2), (3, 0, 1)) - Z4 * 7 + 2
    obj = p.to_json_obj()
    assert obj == sorted(obj, key=lambda t: t["exponents"])
    assert ZPolynomial.from_json_obj(obj) == p


small_ints = st.integers(min_value=-6, max_value=6)
coeffs = st.builds(
    KappaRational,
    st.lists(small_ints, min_size=0, max_size=2).map(tuple),
    st.lists(small_ints, min_size=1, max_size=2).map(tuple).filter(lambda p: any(p)),
)
exponents = st.tuples(*([st.integers(min_value=0, max_value=3)] * 4))
zpolys = st.dictionaries(exponents, coeffs, max_size=4).map(ZPolynomial)


@settings(max_examples=120, deadline=None)
@given(zpolys, zpolys, zpolys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert a * ZPolynomial.constant(1) == a


@settings(max_examples=60, deadline=None)
@given(zpolys, st.integers(min_value=1, max_value=4))
def test_derivative_leibniz(a, j):
    b = Z1 + Z3 * Z4
    lhs = (a * b).derivative(j)
    rhs = a.derivative(j) * b + a * b.derivative(j)
    assert lhs == rhs
