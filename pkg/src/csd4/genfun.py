"""Rational generating functions for the single-row eigenpolynomial families.

The four series collect, at coupling 0 or 1, the polynomials with quantum
numbers (m,0,0,0) or (m,1,0,0).  All four share one denominator D(t,z);
numerators and denominator are stored exactly as polynomial data in the
auxiliary variable t and expanded by truncated series division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import hamiltonian, solver
from .kappa import KappaRational
from .series import TauSeries
from .zpoly import ZPolynomial

LABELS = ("F0", "G0", "F1", "G1")


def _zp(*monomials) -> ZPolynomial:
    out = {}
    for coeff, exps in monomials:
        out[exps] = KappaRational(coeff)
    return ZPolynomial(out)


_Z1 = _zp((1, (1, 0, 0, 0)))
_Z2 = _zp((1, (0, 1, 0, 0)))
_Z34_MINUS_Z1 = _zp((1, (0, 0, 1, 1)), (-1, (1, 0, 0, 0)))
# z3^2 + z4^2 - 2 z2 - 2
_QUARTIC = _zp((1, (0, 0, 2, 0)), (1, (0, 0, 0, 2)), (-2, (0, 1, 0, 0)), (-2, (0, 0, 0, 0)))

DENOMINATOR = (
    _zp((1, (0, 0, 0, 0))),
    -_Z1,
    _Z2,
    -_Z34_MINUS_Z1,
    _QUARTIC,
    -_Z34_MINUS_Z1,
    _Z2,
    -_Z1,
    _zp((1, (0, 0, 0, 0))),
)

_NUM_F0 = (
    _zp((8, (0, 0, 0, 0))),
    _Z1 * (-7),
    _Z2 * 6,
    _Z34_MINUS_Z1 * (-5),
    _QUARTIC * 4,
    _Z34_MINUS_Z1 * (-3),
    _Z2 * 2,
    -_Z1,
)

_NUM_F1 = (
    _zp((1, (0, 0, 0, 0))),
    ZPolynomial.zero(),
    _zp((-1, (0, 0, 0, 0))),
)

_NUM_G0 = (
    _zp((1, (0, 1, 0, 0)), (-4, (0, 0, 0, 0))),
    _zp((6, (1, 0, 0, 0)), (-3, (0, 0, 1, 1))),
    _zp(
        (-8, (0, 0, 0, 0)),
        (-2, (2, 0, 0, 0)),
        (-10, (0, 1, 0, 0)),
        (-1, (0, 2, 0, 0)),
        (4, (0, 0, 2, 0)),
        (2, (1, 0, 1, 1)),
        (4, (0, 0, 0, 2)),
    ),
    _zp(
        (10, (1, 0, 0, 0)),
        (5, (1, 1, 0, 0)),
        (-3, (1, 0, 2, 0)),
        (-4, (0, 0, 1, 1)),
        (1, (0, 1, 1, 1)),
        (-3, (1, 0, 0, 2)),
    ),
    _zp(
        (8, (0, 1, 0, 0)),
        (-4, (2, 0, 0, 0)),
        (2, (0, 2, 0, 0)),
        (-1, (0, 1, 2, 0)),
        (4, (1, 0, 1, 1)),
        (-1, (0, 1, 0, 2)),
    ),
    _zp(
        (-6, (1, 0, 0, 0)),
        (-6, (1, 1, 0, 0)),
        (-1, (0, 0, 1, 1)),
        (1, (0, 1, 1, 1)),
    ),
    _zp((8, (0, 0, 0, 0)), (6, (2, 0, 0, 0)), (2, (0, 1, 0, 0)), (-1, (0, 2, 0, 0))),
    _zp((-10, (1, 0, 0, 0)), (1, (1, 1, 0, 0))),
    _zp((4, (0, 0, 0, 0)), (-1, (0, 1, 0, 0))),
)

_NUM_G1 = (
    _Z2,
    _zp((-1, (0, 0, 1, 1))),
    _zp((1, (0, 0, 2, 0)), (1, (0, 0, 0, 2)), (-2, (0, 1, 0, 0)), (-1, (0, 0, 0, 0))),
    -_Z34_MINUS_Z1,
    _Z2,
    -_Z1,
    _zp((1, (0, 0, 0, 0))),
)


@dataclass(frozen=True)
class RationalGF:
    label: str
    numerator: tuple
    denominator: tuple
    kappa: int  # coupling at which the series coefficients live
    row: int  # second quantum number of the generated family


_TABLE = {
    "F0": (_NUM_F0, 0, 0),
    "G0": (_NUM_G0, 0, 1),
    "F1": (_NUM_F1, 1, 0),
    "G1": (_NUM_G1, 1, 1),
}


def build(label: str) -> RationalGF:
    try:
        num, kappa, row = _TABLE[label]
    except KeyError:
        raise KeyError(f"unknown generating function {label!r}") from None
    return RationalGF(label, num, DENOMINATOR, kappa, row)


def expand(gf, order: int) -> TauSeries:
    """Truncated series of the rational function up to t^order."""
    if isinstance(gf, str):
        gf = build(gf)
    if order < 0:
        raise ValueError("order must be nonnegative")
    num = TauSeries(list(gf.numerator), order)
    den = TauSeries(list(gf.denominator), order)
    return num / den


def target_coefficient(gf, m: int) -> ZPolynomial:
    """The solver-side value the t^m series coefficient must reproduce."""
    if isinstance(gf, str):
        gf = build(gf)
    if gf.row == 0 and m == 0:
        return ZPolynomial.constant(8 if gf.kappa == 0 else 1)
    quantum = (m, gf.row, 0, 0)
    return solver.specialize(solver.solve(quantum), Fraction(gf.kappa))


def series_check(label: str, order: int) -> list:
    """Per-coefficient comparison against the solver; list of (m, ok)."""
    gf = build(label)
    series = expand(gf, order)
    out = []
    for m in range(order + 1):
        out.append((m, series.coeffs[m] == target_coefficient(gf, m)))
    return out


def pde_residual(label: str, order: int) -> TauSeries:
    """Residual of the defining differential equation, order by order.

    The series is annihilated by (half the character-variable operator at
    the relevant coupling) minus (t d/dt)^2, minus an extra 6 t d/dt drift
    for the unit-coupling family.
    """
    if label not in ("F0", "F1"):
        raise KeyError(f"no differential equation is checked for {label!r}")
    gf = build(label)
    series = expand(gf, order)
    half = KappaRational(1, 2)
    kappa0 = Fraction(gf.kappa)
    out = []
    for k, coeff in enumerate(series.coeffs):
        lhs = (hamiltonian.apply(coeff) * half).substitute_kappa(kappa0)
        drift = k * k + (6 * k if gf.kappa == 1 else 0)
        out.append(lhs - coeff * drift)
    return TauSeries(out, order)
