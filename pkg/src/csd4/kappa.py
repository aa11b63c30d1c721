"""Exact rational functions of the coupling constant.

The coupling enters every coefficient of the eigenpolynomials as a ratio of
integer-coefficient univariate polynomials.  ``KappaRational`` keeps such
ratios in a canonical form (coprime over Z[k], denominator with positive
leading coefficient) so that equality is plain structural comparison.

Polynomials are stored as tuples of integer coefficients, lowest degree
first, with no trailing zeros; the empty tuple is the zero polynomial.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import PoleAtKappa

IntPoly = tuple  # tuple[int, ...]

_ZERO: IntPoly = ()
_ONE: IntPoly = (1,)


def poly_trim(coeffs) -> IntPoly:
    """Drop trailing zero coefficients."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_degree(a: IntPoly) -> int:
    """Degree, with the zero polynomial mapped to -1."""
    return len(a) - 1


def poly_add(a: IntPoly, b: IntPoly) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly_trim(out)


def poly_neg(a: IntPoly) -> IntPoly:
    return tuple(-c for c in a)


def poly_sub(a: IntPoly, b: IntPoly) -> IntPoly:
    return poly_add(a, poly_neg(b))


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return _ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return poly_trim(out)


def poly_scale(a: IntPoly, s: int) -> IntPoly:
    if s == 0:
        return _ZERO
    return tuple(c * s for c in a)


def poly_eval(a: IntPoly, x: Fraction) -> Fraction:
    """Exact Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_content(a: IntPoly) -> int:
    """gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in a:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def poly_primitive(a: IntPoly) -> IntPoly:
    """Primitive part with positive leading coefficient."""
    if not a:
        return _ZERO
    c = poly_content(a)
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def poly_div_exact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact quotient a/b in Z[k]; raises if the division is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return _ZERO
    rem = list(a)
    lb = b[-1]
    dq = len(a) - len(b)
    if dq < 0:
        raise ArithmeticError("inexact polynomial division")
    q = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        head = rem[i + len(b) - 1]
        if head % lb:
            raise ArithmeticError("inexact polynomial division")
        q[i] = head // lb
        if q[i]:
            for j, cb in enumerate(b):
                rem[i + j] -= q[i] * cb
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return poly_trim(q)


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder of a by b (b nonzero, deg a >= deg b)."""
    rem = list(a)
    lb = b[-1]
    while len(rem) >= len(b):
        rem = poly_trim(rem)
        if len(rem) < len(b):
            break
        lead = rem[-1]
        shift = len(rem) - len(b)
        rem = [c * lb for c in rem]
        for j, cb in enumerate(b):
            rem[shift + j] -= lead * cb
        rem = list(poly_trim(rem))
    return poly_trim(rem)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """gcd in Z[k] (content included), positive leading coefficient."""
    if not a:
        return _abs_poly(b)
    if not b:
        return _abs_poly(a)
    c = math.gcd(poly_content(a), poly_content(b))
    if len(a) == 1 or len(b) == 1:
        return (c,)
    pa, pb = poly_primitive(a), poly_primitive(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        if pb == _ONE:
            pa = _ONE
            break
        r = _pseudo_rem(pa, pb)
        pa, pb = pb, poly_primitive(r)
    return poly_scale(pa, c)


def _abs_poly(a: IntPoly) -> IntPoly:
    return poly_neg(a) if a and a[-1] < 0 else a


def poly_to_str(a: IntPoly) -> str:
    """Canonical rendering, highest degree first, e.g. ``12*k^2 - k + 3``."""
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            var = "k" if d == 1 else f"k^{d}"
            body = var if mag == 1 else f"{mag}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(
    r"^(?P<coeff>\d+)?(?P<star>\*)?(?P<var>k)?(?:\^(?P<pow>\d+))?$"
)


def poly_from_str(text: str) -> IntPoly:
    """Parse the canonical rendering produced by :func:`poly_to_str`."""
    s = text.strip()
    if s == "0":
        return _ZERO
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for chunk in s.split("+"):
        chunk = chunk.replace(" ", "")
        if not chunk:
            continue
        neg = chunk.startswith("-")
        if neg:
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or (m.group("star") and not m.group("var")):
            raise ValueError(f"malformed polynomial term {chunk!r} in {text!r}")
        if m.group("pow") and not m.group("var"):
            raise ValueError(f"malformed polynomial term {chunk!r} in {text!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("var"):
            power = int(m.group("pow")) if m.group("pow") else 1
        else:
            power = 0
        if neg:
            coeff = -coeff
        coeffs[power] = coeffs.get(power, 0) + coeff
    if not coeffs:
        raise ValueError(f"empty polynomial string {text!r}")
    out = [0] * (max(coeffs) + 1)
    for power, coeff in coeffs.items():
        out[power] = coeff
    return poly_trim(out)


class KappaRational:
    """A canonical ratio of integer polynomials in the coupling.

    Instances are immutable and hashable; two instances compare equal iff
    they are the same rational function.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, *, _raw=False):
        if _raw:
            self.num = num
            self.den = den
            return
        num = self._coerce_poly(num)
        den = self._coerce_poly(den)
        num, den = _canonical(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _coerce_poly(p) -> IntPoly:
        if isinstance(p, tuple):
            return poly_trim(p)
        if isinstance(p, list):
            return poly_trim(tuple(p))
        if isinstance(p, int):
            return (p,) if p else _ZERO
        raise TypeError(f"cannot build a coupling polynomial from {p!r}")

    @classmethod
    def from_fraction(cls, q: Fraction) -> "KappaRational":
        q = Fraction(q)
        return cls(q.numerator, q.denominator)

    @classmethod
    def parse(cls, num_str: str, den_str: str = "1") -> "KappaRational":
        return cls(poly_from_str(num_str), poly_from_str(den_str))

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant in the coupling")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, KappaRational):
            return other
        if isinstance(other, int):
            return KappaRational(other)
        if isinstance(other, Fraction):
            return KappaRational.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        # Knuth's scheme: reduce by the common denominator factor first;
        # for canonical inputs the result below is already in lowest terms.
        g = poly_gcd(self.den, other.den)
        if g == _ONE:
            num = poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den))
            if not num:
                return _KR_ZERO
            return _make_raw(num, poly_mul(self.den, other.den))
        d1 = poly_div_exact(self.den, g)
        d2 = poly_div_exact(other.den, g)
        t = poly_add(poly_mul(self.num, d2), poly_mul(other.num, d1))
        if not t:
            return _KR_ZERO
        g2 = poly_gcd(t, g)
        if g2 != _ONE:
            t = poly_div_exact(t, g2)
            g = poly_div_exact(g, g2)
        return _make_raw(t, poly_mul(poly_mul(d1, g), d2))

    __radd__ = __add__

    def __neg__(self):
        return _make_raw(poly_neg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return _KR_ZERO
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = poly_mul(poly_div_exact(self.num, g1), poly_div_exact(other.num, g2))
        den = poly_mul(poly_div_exact(self.den, g2), poly_div_exact(other.den, g1))
        if den[-1] < 0:
            num, den = poly_neg(num), poly_neg(den)
        return _make_raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "KappaRational":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = poly_neg(num), poly_neg(den)
        return _make_raw(num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = _KR_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation ----------------------------------------------------

    def substitute(self, kappa0) -> Fraction:
        """Exact value at a rational coupling; raises :class:`PoleAtKappa`."""
        kappa0 = Fraction(kappa0)
        den = poly_eval(self.den, kappa0)
        if den == 0:
            raise PoleAtKappa(kappa0)
        return poly_eval(self.num, kappa0) / den

    # -- comparisons / hashing / display -------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def as_strings(self) -> tuple:
        return poly_to_str(self.num), poly_to_str(self.den)

    def __str__(self):
        ns, ds = self.as_strings()
        if ds == "1":
            return ns
        return f"({ns})/({ds})"

    def __repr__(self):
        return f"KappaRational({self.num!r}, {self.den!r})"


def _canonical(num: IntPoly, den: IntPoly) -> tuple:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return _ZERO, _ONE
    if den == _ONE:
        return num, den
    g = poly_gcd(num, den)
    if g != _ONE:
        num = poly_div_exact(num, g)
        den = poly_div_exact(den, g)
    if den[-1] < 0:
        num, den = poly_neg(num), poly_neg(den)
    return num, den


def _make_raw(num: IntPoly, den: IntPoly) -> KappaRational:
    return KappaRational(num, den, _raw=True)


_KR_ZERO = _make_raw(_ZERO, _ONE)
_KR_ONE = _make_raw(_ONE, _ONE)

ZERO = _KR_ZERO
ONE = _KR_ONE


def kappa_linear(const: int, slope: int) -> KappaRational:
    """The polynomial ``const + slope*k`` as a rational function."""
    return KappaRational(poly_trim((const, slope)))
