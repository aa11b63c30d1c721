"""Products of a fundamental character with an eigenpolynomial.

Multiplying an eigenpolynomial by z_v expands again in the eigenbasis, with
quantum numbers shifted by the weights of the v-th fundamental
representation; at unit coupling the expansion degenerates to the ordinary
Clebsch-Gordan series.  Coefficients are extracted by peeling leading
monomials (the basis is unitriangular in the height order), which also
verifies that only the admissible shift slots appear.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ResidualNonzero
from .kappa import KappaRational, kappa_linear
from .rootsystem import apply_triality
from .solver import CSPolynomial, solve
from .zpoly import ZPolynomial
from . import hamiltonian

# Quantum-number displacements (weights of the multiplied representation).
# Vector-like characters carry eight shifts; z2 multiplies by the adjoint,
# whose four zero weights are folded into the single diagonal slot.
SHIFTS = {
    1: (
        (1, 0, 0, 0),
        (-1, 0, 0, 0),
        (1, -1, 0, 0),
        (-1, 1, 0, 0),
        (0, 1, -1, -1),
        (0, -1, 1, 1),
        (0, 0, 1, -1),
        (0, 0, -1, 1),
    ),
    2: (
        (0, 1, 0, 0),
        (0, -1, 0, 0),
        (2, -1, 0, 0),
        (-2, 1, 0, 0),
        (0, -1, 2, 0),
        (0, 1, -2, 0),
        (0, -1, 0, 2),
        (0, 1, 0, -2),
        (-1, 2, -1, -1),
        (1, -2, 1, 1),
        (1, 1, -1, -1),
        (-1, -1, 1, 1),
        (-1, 1, 1, -1),
        (1, -1, -1, 1),
        (-1, 1, -1, 1),
        (1, -1, 1, -1),
        (-1, 0, 1, 1),
        (1, 0, -1, -1),
        (1, 0, -1, 1),
        (-1, 0, 1, -1),
        (1, 0, 1, -1),
        (-1, 0, -1, 1),
        (1, -1, 1, 1),
        (-1, 1, -1, -1),
        (0, 0, 0, 0),
    ),
    3: (
        (0, 0, 1, 0),
        (0, 0, -1, 0),
        (0, -1, 1, 0),
        (0, 1, -1, 0),
        (-1, 1, 0, -1),
        (1, -1, 0, 1),
        (1, 0, 0, -1),
        (-1, 0, 0, 1),
    ),
    4: (
        (0, 0, 0, 1),
        (0, 0, 0, -1),
        (0, -1, 0, 1),
        (0, 1, 0, -1),
        (-1, 1, -1, 0),
        (1, -1, 1, 0),
        (-1, 0, 1, 0),
        (1, 0, -1, 0),
    ),
}


def _monomial_key(e):
    # Height order on shifts == descending Weyl-vector pairing on exponents.
    return (3 * e[0] + 5 * e[1] + 3 * e[2] + 3 * e[3], e)


@dataclass(frozen=True)
class RecurrenceExpansion:
    variable: int
    m: tuple
    terms: dict  # shifted quantum numbers -> nonzero KappaRational

    def coefficient(self, mp) -> KappaRational:
        return self.terms.get(tuple(mp), KappaRational(0))

    def to_json_obj(self) -> dict:
        items = []
        for mp in sorted(self.terms):
            num, den = self.terms[mp].as_strings()
            items.append({"mp": list(mp), "num": num, "den": den})
        return {"v": self.variable, "m": list(self.m), "terms": items}


def expand_product(v: int, m) -> RecurrenceExpansion:
    """Expand z_v times the eigenpolynomial of m in the eigenbasis."""
    base = solve(m)
    residual = ZPolynomial.variable(v) * base.polynomial
    candidates = set()
    for s in SHIFTS[v]:
        mp = tuple(m[i] + s[i] for i in range(4))
        if all(c >= 0 for c in mp):
            candidates.add(mp)
    terms = {}
    while residual.terms:
        lead = max(residual.terms, key=_monomial_key)
        if lead not in candidates:
            raise ResidualNonzero(
                f"z{v} * P_{m}: leading remainder {lead} is not an admissible shift"
            )
        coeff = residual.terms[lead]
        residual = residual - solve(lead).polynomial * coeff
        terms[lead] = coeff
        candidates.discard(lead)
    return RecurrenceExpansion(v, tuple(m), terms)


# ----------------------------------------------------------------------
# Closed forms for the one-nonzero-quantum-number families.


def _lin(c0: int, c1: int) -> KappaRational:
    return kappa_linear(c0, c1)


def _ratio(num_factors, den_factors) -> KappaRational:
    num = KappaRational(1)
    for f in num_factors:
        num = num * f
    den = KappaRational(1)
    for f in den_factors:
        den = den * f
    return num / den


def closed_form(name: str, m: int) -> KappaRational:
    """The closed-form coefficient of the named family at integer m >= 1."""
    if m < 1:
        raise ValueError("closed forms are stated for m >= 1")
    builder = _CLOSED_FORMS.get(name)
    if builder is None:
        raise KeyError(f"unknown coefficient family {name!r}")
    return builder(m)


def _cf_a(m):
    return _ratio(
        [_lin(m, 0), _lin(m, 2), _lin(m - 1, 4), _lin(m - 1, 6)],
        [_lin(m - 1, 1), _lin(m - 1, 3), _lin(m, 3), _lin(m, 5)],
    )


def _cf_c(m):
    return _ratio([_lin(m, 0), _lin(m - 1, 2)], [_lin(m, 1), _lin(m - 1, 1)])


def _cf_b(m):
    return _ratio([_lin(m, 0), _lin(m - 1, 4)], [_lin(m - 1, 1), _lin(m, 3)])


def _cf_d(m):
    return _ratio(
        [
            _lin(2 * m, 0),
            _lin(m, 1),
            _lin(m - 1, 3),
            _lin(m - 1, 4),
            _lin(2 * m - 1, 6),
        ],
        [
            _lin(m - 1, 1),
            _lin(m - 1, 2),
            _lin(m, 3),
            _lin(2 * m - 1, 5),
            _lin(2 * m, 5),
        ],
    )


def _cf_e(m):
    return _ratio([_lin(m, 0), _lin(m - 1, 3)], [_lin(m - 1, 1), _lin(m, 2)])


def _cf_f(m):
    return _ratio(
        [
            _lin(m * (m - 1), 0),
            _lin(m - 2, 2),
            _lin(m, 2),
            _lin(m - 1, 4),
            _lin(m - 1, 5),
        ],
        [
            _lin(m - 2, 1),
            _lin(m - 1, 1),
            _lin(m - 1, 1),
            _lin(m - 1, 3),
            _lin(m, 3),
            _lin(m, 4),
        ],
    )


def _cf_g(m):
    return _cf_e(m)


def _cf_h(m):
    num = KappaRational((4 * (m * m - 1), 4 * (6 * m - 1), 20, -12))
    return num / (_lin(m - 1, 1) * _lin(1, 3) * _lin(m + 1, 5))


def _cf_k(m):
    return _ratio(
        [
            _lin(4 * m, 0),
            _lin(m, 1),
            _lin(m, 1),
            _lin(m, 2),
            _lin(m - 1, 3),
            _lin(m - 1, 4),
            _lin(m - 1, 4),
            _lin(2 * m - 1, 4),
            _lin(m - 1, 5),
            _lin(2 * m - 1, 6),
        ],
        [
            _lin(m - 1, 1),
            _lin(m - 1, 2),
            _lin(m - 1, 2),
            _lin(m, 3),
            _lin(m, 3),
            _lin(m, 4),
            _lin(2 * m - 2, 5),
            _lin(2 * m - 1, 5),
            _lin(2 * m - 1, 5),
            _lin(2 * m, 5),
        ],
    )


def _cf_p(m):
    return _ratio([_lin(m, 0), _lin(m - 1, 2)], [_lin(m - 1, 1), _lin(m, 1)])


def _cf_q(m):
    return _ratio(
        [
            _lin(2 * m * (m - 1), 0),
            _lin(m, 1),
            _lin(m, 1),
            _lin(m - 2, 2),
            _lin(m - 1, 3),
            _lin(m - 1, 3),
            _lin(m - 1, 3),
            _lin(2 * m - 1, 6),
        ],
        [
            _lin(m - 2, 1),
            _lin(m - 1, 1),
            _lin(m - 1, 1),
            _lin(m - 1, 2),
            _lin(m - 1, 2),
            _lin(m, 2),
            _lin(m, 2),
            _lin(2 * m - 1, 5),
            _lin(2 * m, 5),
        ],
    )


def _cf_r(m):
    return _ratio(
        [_lin(m, 0), _lin(m, 1), _lin(m - 1, 3), _lin(m - 1, 4)],
        [_lin(m - 1, 1), _lin(m - 1, 2), _lin(m, 2), _lin(m, 3)],
    )


def quintic_s_numerator(m: int) -> KappaRational:
    """The degree-5 coupling polynomial entering the diagonal coefficient."""
    return KappaRational(
        (
            -1 + 5 * m * m - 4 * m**4,
            2 + 25 * m - 7 * m * m - 40 * m**3 + 2 * m**4,
            20 - 35 * m - 123 * m * m + 20 * m**3,
            -22 - 115 * m + 63 * m * m,
            -19 + 65 * m,
            20,
        )
    )


def _cf_s(m):
    num = KappaRational(-4) * quintic_s_numerator(m)
    den = (
        _lin(1, 1)
        * _lin(m - 1, 1)
        * _lin(m + 1, 4)
        * _lin(2 * m - 1, 5)
        * _lin(2 * m + 1, 5)
    )
    return num / den


_CLOSED_FORMS = {
    "a": _cf_a,
    "b": _cf_b,
    "c": _cf_c,
    "d": _cf_d,
    "e": _cf_e,
    "f": _cf_f,
    "g": _cf_g,
    "h": _cf_h,
    "k": _cf_k,
    "p": _cf_p,
    "q": _cf_q,
    "r": _cf_r,
    "s": _cf_s,
}

CLOSED_FORM_NAMES = tuple(sorted(_CLOSED_FORMS))


# Relation families: variable, base quantum numbers, and the expected
# coefficient name per shifted slot (None marks the unit leading slot).
def _relation_families(m: int):
    return (
        ("z1*P[m000]", 1, (m, 0, 0, 0), {
            (m + 1, 0, 0, 0): None,
            (m - 1, 0, 0, 0): "a",
            (m - 1, 1, 0, 0): "c",
        }),
        ("z3*P[00m0]", 3, (0, 0, m, 0), {
            (0, 0, m + 1, 0): None,
            (0, 0, m - 1, 0): "a",
            (0, 1, m - 1, 0): "c",
        }),
        ("z4*P[000m]", 4, (0, 0, 0, m), {
            (0, 0, 0, m + 1): None,
            (0, 0, 0, m - 1): "a",
            (0, 1, 0, m - 1): "c",
        }),
        ("z1*P[00m0]", 1, (0, 0, m, 0), {
            (1, 0, m, 0): None,
            (0, 0, m - 1, 1): "b",
        }),
        ("z1*P[000m]", 1, (0, 0, 0, m), {
            (1, 0, 0, m): None,
            (0, 0, 1, m - 1): "b",
        }),
        ("z3*P[m000]", 3, (m, 0, 0, 0), {
            (m, 0, 1, 0): None,
            (m - 1, 0, 0, 1): "b",
        }),
        ("z3*P[000m]", 3, (0, 0, 0, m), {
            (0, 0, 1, m): None,
            (1, 0, 0, m - 1): "b",
        }),
        ("z4*P[m000]", 4, (m, 0, 0, 0), {
            (m, 0, 0, 1): None,
            (m - 1, 0, 1, 0): "b",
        }),
        ("z4*P[00m0]", 4, (0, 0, m, 0), {
            (0, 0, m, 1): None,
            (1, 0, m - 1, 0): "b",
        }),
        ("z1*P[0m00]", 1, (0, m, 0, 0), {
            (1, m, 0, 0): None,
            (1, m - 1, 0, 0): "d",
            (0, m - 1, 1, 1): "e",
        }),
        ("z3*P[0m00]", 3, (0, m, 0, 0), {
            (0, m, 1, 0): None,
            (0, m - 1, 1, 0): "d",
            (1, m - 1, 0, 1): "e",
        }),
        ("z4*P[0m00]", 4, (0, m, 0, 0), {
            (0, m, 0, 1): None,
            (0, m - 1, 0, 1): "d",
            (1, m - 1, 1, 0): "e",
        }),
        ("z2*P[m000]", 2, (m, 0, 0, 0), {
            (m, 1, 0, 0): None,
            (m - 2, 1, 0, 0): "f",
            (m - 1, 0, 1, 1): "g",
            (m, 0, 0, 0): "h",
        }),
        ("z2*P[00m0]", 2, (0, 0, m, 0), {
            (0, 1, m, 0): None,
            (0, 1, m - 2, 0): "f",
            (1, 0, m - 1, 1): "g",
            (0, 0, m, 0): "h",
        }),
        ("z2*P[000m]", 2, (0, 0, 0, m), {
            (0, 1, 0, m): None,
            (0, 1, 0, m - 2): "f",
            (1, 0, 1, m - 1): "g",
            (0, 0, 0, m): "h",
        }),
        ("z2*P[0m00]", 2, (0, m, 0, 0), {
            (0, m + 1, 0, 0): None,
            (0, m - 1, 0, 0): "k",
            (1, m - 1, 1, 1): "p",
            (1, m - 2, 1, 1): "q",
            (2, m - 1, 0, 0): "r",
            (0, m - 1, 2, 0): "r",
            (0, m - 1, 0, 2): "r",
            (0, m, 0, 0): "s",
        }),
    )


@dataclass
class CheckRecord:
    family: str
    m: int
    slot: tuple
    expected: KappaRational
    actual: KappaRational

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass
class Report:
    records: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    @property
    def failures(self) -> list:
        return [r for r in self.records if not r.ok]

    def merge(self, other: "Report") -> None:
        self.records.extend(other.records)


def verify_closed_forms(max_m: int) -> Report:
    """Check the closed-form coefficients against extracted ones for m <= max_m.

    Also asserts that every closed form collapses to 1 at unit coupling
    (the undeformed Clebsch-Gordan limit).
    """
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    report = Report()
    one = KappaRational(1)
    for m in range(1, max_m + 1):
        for label, v, base, slots in _relation_families(m):
            expansion = expand_product(v, base)
            expected_slots = {}
            for slot, name in slots.items():
                if any(c < 0 for c in slot):
                    continue
                value = one if name is None else closed_form(name, m)
                if value:
                    expected_slots[slot] = value
            seen = set(expansion.terms)
            for slot, value in expected_slots.items():
                report.records.append(
                    CheckRecord(label, m, slot, value, expansion.coefficient(slot))
                )
            for slot in seen - set(expected_slots):
                report.records.append(
                    CheckRecord(label, m, slot, KappaRational(0),
                                expansion.coefficient(slot))
                )
        for name in CLOSED_FORM_NAMES:
            cf = closed_form(name, m)
            if not cf:
                continue  # identically-zero coefficient: its slot is absent
            report.records.append(
                CheckRecord(
                    f"{name}(k=1)", m, (), one,
                    KappaRational.from_fraction(cf.substitute(1)),
                )
            )
    return report


def triality_consistent(v: int, m, sigma) -> Report:
    """Coefficients of z_v * P_m map onto those of z_sigma(v) * P_sigma(m)."""
    report = Report()
    image_v = sigma[v]
    base = expand_product(v, tuple(m))
    image = expand_product(image_v, apply_triality(tuple(m), sigma))
    for mp, coeff in base.terms.items():
        slot = apply_triality(mp, sigma)
        report.records.append(
            CheckRecord(f"triality z{v}->z{image_v}", 0, slot, coeff,
                        image.coefficient(slot))
        )
    report.records.append(
        CheckRecord(
            f"triality z{v}->z{image_v} term count", 0, (),
            KappaRational(len(base.terms)), KappaRational(len(image.terms)),
        )
    )
    return report


# ----------------------------------------------------------------------
# Ladder construction along the first quantum number.


def _wrap(m, poly: ZPolynomial) -> CSPolynomial:
    from .rootsystem import weight_to_root

    coeffs = {}
    for exps, c in poly.terms.items():
        mu = weight_to_root(tuple(m[i] - exps[i] for i in range(4)))
        coeffs[mu] = c
    return CSPolynomial(tuple(m), hamiltonian.eigenvalue(m), coeffs, poly)


def ladder_next(m: int) -> CSPolynomial:
    """Climb from the polynomials at (m,0,0,0) and (m-1,0,0,0) to m+1.

    Multiplying the three-term relation by the operator shifted by the
    eigenvalue of the unwanted slot cancels that slot and leaves an
    explicit commutator formula for the next rung.
    """
    if m < 1:
        raise ValueError("the ladder starts at m = 1")
    p_m = solve((m, 0, 0, 0)).polynomial
    p_prev = solve((m - 1, 0, 0, 0)).polynomial
    comm = hamiltonian.commutator(1, p_m)
    c1 = KappaRational(1) / (KappaRational(4) * _lin(m, 1))
    c2 = _lin(1, 4) / (KappaRational(2) * _lin(m, 1))
    c3 = _ratio(
        [_lin(m, 0), _lin(m, 2), _lin(m - 1, 4), _lin(m - 1, 6)],
        [_lin(m - 1, 1), _lin(m - 1, 3), _lin(m, 1), _lin(m, 3)],
    )
    poly = (
        comm * c1
        - (ZPolynomial.variable(1) * p_m) * c2
        + p_prev * c3
    )
    return _wrap((m + 1, 0, 0, 0), poly)


def ladder_mixed(m: int) -> CSPolynomial:
    """Recover the (m,1,0,0) polynomial from the three-term relation."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    z1 = ZPolynomial.variable(1)
    poly = (
        z1 * solve((m + 1, 0, 0, 0)).polynomial
        - solve((m + 2, 0, 0, 0)).polynomial
        - solve((m, 0, 0, 0)).polynomial * _cf_a(m + 1)
    ) * _cf_c(m + 1).inverse()
    return _wrap((m, 1, 0, 0), poly)
