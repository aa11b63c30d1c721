"""Sparse polynomials in the four fundamental-character variables.

A ``ZPolynomial`` maps exponent 4-tuples (powers of z1..z4) to nonzero
:class:`~csd4.kappa.KappaRational` coefficients.  No monomial ordering is
stored; consumers impose their own.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import PoleAtKappa
from .kappa import KappaRational, poly_from_str

Exponents = tuple  # tuple[int, int, int, int]

_E0: Exponents = (0, 0, 0, 0)


def _coerce_scalar(c):
    if isinstance(c, KappaRational):
        return c
    if isinstance(c, int):
        return KappaRational(c)
    if isinstance(c, Fraction):
        return KappaRational.from_fraction(c)
    return None


class ZPolynomial:
    __slots__ = ("terms",)

    def __init__(self, terms=None, *, _raw=False):
        if _raw:
            self.terms = terms
            return
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = _coerce_scalar(coeff)
            if coeff is None:
                raise TypeError(f"bad coefficient for {exps}")
            if coeff:
                clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "ZPolynomial":
        return cls({}, _raw=True)

    @classmethod
    def constant(cls, c) -> "ZPolynomial":
        return cls.monomial(_E0, c)

    @classmethod
    def monomial(cls, exps, coeff=1) -> "ZPolynomial":
        coeff = _coerce_scalar(coeff)
        exps = tuple(exps)
        if len(exps) != 4 or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exps}")
        return cls({exps: coeff} if coeff else {}, _raw=True)

    @classmethod
    def variable(cls, j: int) -> "ZPolynomial":
        """The generator z_j, 1-based index."""
        exps = [0, 0, 0, 0]
        exps[j - 1] = 1
        return cls.monomial(tuple(exps))

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            if acc is None:
                out[exps] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[exps] = acc
                else:
                    del out[exps]
        return ZPolynomial(out, _raw=True)

    __radd__ = __add__

    def __neg__(self):
        return ZPolynomial({e: -c for e, c in self.terms.items()}, _raw=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        scalar = _coerce_scalar(other)
        if scalar is not None:
            if not scalar:
                return ZPolynomial.zero()
            return ZPolynomial(
                {e: c * scalar for e, c in self.terms.items()}, _raw=True
            )
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                c = c1 * c2
                acc = out.get(e)
                if acc is None:
                    if c:
                        out[e] = c
                else:
                    acc = acc + c
                    if acc:
                        out[e] = acc
                    else:
                        del out[e]
        return ZPolynomial(out, _raw=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = ZPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, ZPolynomial):
            return other
        scalar = _coerce_scalar(other)
        if scalar is None:
            return NotImplemented
        return ZPolynomial.constant(scalar)

    # -- calculus and evaluation ------------------------------------------

    def derivative(self, j: int) -> "ZPolynomial":
        """Formal partial derivative with respect to z_j (1-based)."""
        i = j - 1
        out = {}
        for exps, coeff in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            shifted = list(exps)
            shifted[i] = e - 1
            out[tuple(shifted)] = coeff * e
        return ZPolynomial(out, _raw=True)

    def substitute_kappa(self, kappa0) -> "ZPolynomial":
        """Exact coupling substitution; coefficients become constants."""
        kappa0 = Fraction(kappa0)
        out = {}
        for exps, coeff in self.terms.items():
            try:
                value = coeff.substitute(kappa0)
            except PoleAtKappa as exc:
                raise PoleAtKappa(kappa0, mu=exps) from exc
            if value:
                out[exps] = KappaRational.from_fraction(value)
        return ZPolynomial(out, _raw=True)

    def eval_complex(self, z) -> complex:
        """Numeric value at a point; requires constant coefficients."""
        z1, z2, z3, z4 = z
        total = 0j
        for exps, coeff in self.terms.items():
            c = complex(coeff.as_fraction())
            total += c * z1 ** exps[0] * z2 ** exps[1] * z3 ** exps[2] * z4 ** exps[3]
        return total

    def eval_exact(self, z) -> Fraction:
        """Exact rational value at a rational point (constant coefficients)."""
        z = [Fraction(v) for v in z]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff.as_fraction()
            for v, e in zip(z, exps):
                term *= v**e
            total += term
        return total

    def permute_variables(self, sigma) -> "ZPolynomial":
        """Relabel variables by a permutation of {1,2,3,4} (z_i -> z_sigma(i))."""
        out = {}
        for exps, coeff in self.terms.items():
            new = [0, 0, 0, 0]
            for i in range(4):
                new[sigma[i + 1] - 1] = exps[i]
            out[tuple(new)] = coeff
        return ZPolynomial(out, _raw=True)

    # -- structure ----------------------------------------------------------

    def coefficient(self, exps) -> KappaRational:
        return self.terms.get(tuple(exps), KappaRational(0))

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {_E0}

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"z{i + 1}")
                elif e > 1:
                    factors.append(f"z{i + 1}^{e}")
            mono = "*".join(factors) if factors else "1"
            parts.append(f"({self.terms[exps]})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ZPolynomial({self.terms!r})"

    # -- serialization -------------------------------------------------------

    def to_json_obj(self) -> list:
        out = []
        for exps in sorted(self.terms):
            num, den = self.terms[exps].as_strings()
            out.append({"exponents": list(exps), "num": num, "den": den})
        return out

    @classmethod
    def from_json_obj(cls, obj) -> "ZPolynomial":
        terms = {}
        for item in obj:
            coeff = KappaRational(
                poly_from_str(item["num"]), poly_from_str(item.get("den", "1"))
            )
            if coeff:
                terms[tuple(item["exponents"])] = coeff
        return cls(terms, _raw=True)


Z1 = ZPolynomial.variable(1)
Z2 = ZPolynomial.variable(2)
Z3 = ZPolynomial.variable(3)
Z4 = ZPolynomial.variable(4)
