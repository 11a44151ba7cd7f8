"""Exact Laurent polynomials in one variable T over the integers or rationals.

A polynomial is stored sparsely as ``{exponent: coefficient}`` with no zero
coefficients.  Integer polynomials (``Ring.INT``) hold ``int`` coefficients,
rational ones (``Ring.RAT``) hold :class:`fractions.Fraction`.  Mixing the two
in arithmetic raises; promote explicitly with :meth:`LaurentPolynomial.to_rational`.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


class Ring(enum.Enum):
    INT = "INT"
    RAT = "RAT"


class LaurentPolynomial:
    __slots__ = ("_coeffs", "_ring", "_hash")

    def __init__(self, coeffs: Mapping[int, Number] | None = None, ring: Ring = Ring.INT):
        cast = int if ring is Ring.INT else Fraction
        clean = {}
        for e, c in (coeffs or {}).items():
            if ring is Ring.INT and isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integer coefficient {c} in an INT polynomial")
                c = c.numerator
            if c:
                clean[int(e)] = cast(c)
        self._coeffs = clean
        self._ring = ring
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring = Ring.INT) -> LaurentPolynomial:
        return cls({}, ring)

    @classmethod
    def one(cls, ring: Ring = Ring.INT) -> LaurentPolynomial:
        return cls({0: 1}, ring)

    @classmethod
    def monomial(cls, exponent: int, coeff: Number = 1, ring: Ring = Ring.INT) -> LaurentPolynomial:
        return cls({exponent: coeff}, ring)

    @classmethod
    def from_list(cls, coeffs: Iterable[Number], low: int = 0, ring: Ring = Ring.INT) -> LaurentPolynomial:
        """Build ``sum(c_k T^(low + k))`` from a dense coefficient list."""
        return cls({low + k: c for k, c in enumerate(coeffs)}, ring)

    # -- accessors ----------------------------------------------------

    @property
    def ring(self) -> Ring:
        return self._ring

    @property
    def coeffs(self) -> dict[int, Number]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    def valuation(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no valuation")
        return min(self._coeffs)

    def width(self) -> int:
        """Difference between top and bottom exponent; -1 for zero."""
        if not self._coeffs:
            return -1
        return self.degree() - self.valuation()

    def leading_coefficient(self) -> Number:
        return self._coeffs[self.degree()]

    def __getitem__(self, exponent: int) -> Number:
        zero = 0 if self._ring is Ring.INT else Fraction(0)
        return self._coeffs.get(exponent, zero)

    def terms(self) -> list[tuple[int, Number]]:
        return sorted(self._coeffs.items())

    def evaluate(self, value):
        """Evaluate at ``value`` (any object supporting ``**`` with negative ints)."""
        return sum((c * value**e for e, c in self._coeffs.items()), 0)

    # -- ring conversion ----------------------------------------------

    def to_rational(self) -> LaurentPolynomial:
        if self._ring is Ring.RAT:
            return self
        return LaurentPolynomial(self._coeffs, Ring.RAT)

    def to_integer(self) -> LaurentPolynomial:
        """Convert to ``Ring.INT``; raises if some coefficient is not integral."""
        if self._ring is Ring.INT:
            return self
        return LaurentPolynomial(self._coeffs, Ring.INT)

    # -- arithmetic ---------------------------------------------------

    def _check(self, other) -> LaurentPolynomial:
        if isinstance(other, (int, Fraction)):
            if self._ring is Ring.INT and isinstance(other, Fraction) and other.denominator != 1:
                raise TypeError("cannot combine an INT polynomial with a non-integer scalar")
            return LaurentPolynomial({0: other} if other else {}, self._ring)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if other._ring is not self._ring:
            raise TypeError(
                f"mixed ring tags {self._ring.value} and {other._ring.value}; promote with to_rational()"
            )
        return other

    def __add__(self, other) -> LaurentPolynomial:
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self._ring)

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()}, self._ring)

    def __sub__(self, other) -> LaurentPolynomial:
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPolynomial:
        return (-self) + other

    def __mul__(self, other) -> LaurentPolynomial:
        other = self._check(other)
        if other is NotImplemented:
            return other
        out: dict[int, Number] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out, self._ring)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPolynomial:
        if k < 0:
            unit = is_unit_rational(self) if self._ring is Ring.RAT else is_unit_integral(self)
            if not unit:
                raise ValueError("only units can be raised to negative powers")
            (e, c), = self._coeffs.items()
            c = Fraction(c) ** k
            return LaurentPolynomial({e * k: c}, self._ring)
        result = LaurentPolynomial.one(self._ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPolynomial:
        """Multiply by ``T^k``."""
        return LaurentPolynomial({e + k: c for e, c in self._coeffs.items()}, self._ring)

    def substitute_power(self, k: int) -> LaurentPolynomial:
        """Return ``p(T^k)``."""
        if k == 0:
            return LaurentPolynomial({0: sum(self._coeffs.values())}, self._ring)
        return LaurentPolynomial({e * k: c for e, c in self._coeffs.items()}, self._ring)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._coeffs == ({0: other} if other else {})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._ring is other._ring and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._ring, frozenset(self._coeffs.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPolynomial({format_laurent(self)!r}, {self._ring.value})"

    def __str__(self) -> str:
        return format_laurent(self)


T = LaurentPolynomial.monomial(1)


def arith(a: LaurentPolynomial, b: LaurentPolynomial, kind: str) -> LaurentPolynomial:
    """Dispatch ``ADD``, ``SUB`` or ``MUL`` by name."""
    ops = {"ADD": a.__add__, "SUB": a.__sub__, "MUL": a.__mul__}
    try:
        op = ops[kind.upper()]
    except KeyError:
        raise ValueError(f"unknown arithmetic kind {kind!r}") from None
    return op(b)


# -- units and normal forms ---------------------------------------------


def is_unit_integral(p: LaurentPolynomial) -> bool:
    """True iff ``p`` is ``±T^k``, a unit of Z[T, 1/T]."""
    return len(p._coeffs) == 1 and abs(next(iter(p._coeffs.values()))) == 1


def is_unit_rational(p: LaurentPolynomial) -> bool:
    """True iff ``p`` is a nonzero monomial, i.e. a unit of Q[T, 1/T]."""
    return len(p._coeffs) == 1


def content(p: LaurentPolynomial) -> Fraction:
    """Positive rational c with p/c having coprime integer coefficients (0 for p = 0)."""
    if p.is_zero():
        return Fraction(0)
    values = [Fraction(c) for c in p._coeffs.values()]
    num = reduce(gcd, (v.numerator for v in values))
    den = reduce(lcm, (v.denominator for v in values))
    return Fraction(num, den)


def normalize_up_to_units(p: LaurentPolynomial) -> LaurentPolynomial:
    """Canonical associate: lowest exponent 0 and positive leading coefficient.

    Over ``Ring.INT`` the integer content is kept (only ``±T^k`` are units);
    over ``Ring.RAT`` the result is rescaled to coprime integer coefficients.
    """
    if p.is_zero():
        return p
    q = p.shift(-p.valuation())
    if p.ring is Ring.RAT:
        c = content(q)
        q = LaurentPolynomial({e: v / c for e, v in q._coeffs.items()}, Ring.RAT)
    if q.leading_coefficient() < 0:
        q = -q
    return q


def equal_up_to_units(a: LaurentPolynomial, b: LaurentPolynomial) -> bool:
    """Associates in the ring named by the (common) ring tag."""
    if a.ring is not b.ring:
        raise TypeError("mixed ring tags; promote with to_rational()")
    return normalize_up_to_units(a) == normalize_up_to_units(b)


# -- division in Q[T] ----------------------------------------------------


def _dense(p: LaurentPolynomial) -> list[Fraction]:
    """Coefficients of p / T^valuation, low to high, as Fractions."""
    if p.is_zero():
        return []
    v = p.valuation()
    out = [Fraction(0)] * (p.degree() - v + 1)
    for e, c in p._coeffs.items():
        out[e - v] = Fraction(c)
    return out


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Euclidean division of dense polynomials (low to high) over Q."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim([Fraction(x) for x in a])
    if len(r) < len(b):
        return [], r
    q = [Fraction(0)] * (len(r) - len(b) + 1)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / lead
        q[shift] = f
        for k, bc in enumerate(b):
            r[shift + k] -= f * bc
        r.pop()
        _trim(r)
    return _trim(q), r


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def gcd_rational(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Normalized generator of the ideal (a, b) in Q[T, 1/T].

    Both inputs are promoted to ``Ring.RAT``.  Powers of T are units, so each
    argument is shifted into Q[T] and the monic Euclidean algorithm is run
    there.  ``gcd(0, 0)`` is zero.
    """
    g = _poly_gcd(_dense(a), _dense(b))
    return normalize_up_to_units(LaurentPolynomial.from_list(g, ring=Ring.RAT))


def divmod_rational(a: LaurentPolynomial, b: LaurentPolynomial) -> tuple[LaurentPolynomial, LaurentPolynomial]:
    """Division with remainder in Q[T, 1/T] after aligning valuations.

    Returns ``(q, r)`` with ``a == q*b + r`` and ``r`` of width smaller than ``b``.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        z = LaurentPolynomial.zero(Ring.RAT)
        return z, z
    qd, rd = poly_divmod(_dense(a), _dense(b))
    shift = a.valuation() - b.valuation()
    q = LaurentPolynomial.from_list(qd, low=shift, ring=Ring.RAT)
    r = LaurentPolynomial.from_list(rd, low=a.valuation(), ring=Ring.RAT)
    return q, r


def divides_rational(d: LaurentPolynomial, p: LaurentPolynomial) -> bool:
    """True iff d divides p in Q[T, 1/T] (0 divides only 0)."""
    if d.is_zero():
        return p.is_zero()
    return divmod_rational(p.to_rational(), d.to_rational())[1].is_zero()


def exact_quotient(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Exact quotient a / b; the result keeps a's ring tag when it fits.

    Raises ``ValueError`` if ``b`` does not divide ``a``.
    """
    q, r = divmod_rational(a.to_rational(), b.to_rational())
    if not r.is_zero():
        raise ValueError(f"{b} does not divide {a}")
    if a.ring is Ring.INT and b.ring is Ring.INT and all(
        Fraction(c).denominator == 1 for c in q._coeffs.values()
    ):
        return q.to_integer()
    return q


# -- roots of unity -------------------------------------------------------


def t_power_minus_one(m: int, ring: Ring = Ring.INT) -> LaurentPolynomial:
    """``T^m - 1``."""
    return LaurentPolynomial({m: 1, 0: -1}, ring)


def cyclotomic(d: int) -> LaurentPolynomial:
    """The d-th cyclotomic polynomial as an INT polynomial."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    num = t_power_minus_one(d)
    for e in range(1, d):
        if d % e == 0:
            num = exact_quotient(num, cyclotomic(e))
    return num


def vanishes_at_mth_roots(p: LaurentPolynomial, m: int) -> bool:
    """True iff p has a zero at some complex m-th root of unity."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if p.is_zero():
        return True
    return not is_unit_rational(gcd_rational(p, t_power_minus_one(m)))


# -- text form -----------------------------------------------------------


def _format_coeff(c: Number) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_laurent(p: LaurentPolynomial, var: str = "T") -> str:
    """Render as ``3*T^-2 + 1 - T^5`` (ascending exponents)."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.terms():
        neg = c < 0
        mag = -c if neg else c
        if e == 0:
            body = _format_coeff(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{_format_coeff(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?:(?P<var>[A-Za-z])(?:\s*(?:\^|\*\*)\s*(?P<exp>\(?\s*[+-]?\s*\d+\s*\)?))?)?
        \s*""",
    re.VERBOSE,
)


def parse_laurent(text: str, ring: Ring | None = None, var: str = "T") -> LaurentPolynomial:
    """Parse the text form produced by :func:`format_laurent`.

    The ring defaults to ``RAT`` if any coefficient is written as a fraction,
    otherwise ``INT``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    coeffs: dict[int, Fraction] = {}
    saw_fraction = False
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at column {pos + 1}: {text!r}")
        sign, coef, star, v, exp = m.group("sign", "coef", "star", "var", "exp")
        if coef is None and v is None:
            raise ValueError(f"missing term at column {m.start() + 1}: {text!r}")
        if sign is None and not first:
            raise ValueError(f"expected '+' or '-' at column {m.start() + 1}: {text!r}")
        if star and v is None:
            raise ValueError(f"dangling '*' at column {m.start() + 1}: {text!r}")
        if v is not None and v != var:
            raise ValueError(f"unknown variable {v!r} (expected {var!r})")
        if coef is not None and "/" in coef:
            saw_fraction = True
        c = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            c = -c
        if v is None:
            e = 0
        elif exp is None:
            e = 1
        else:
            e = int(exp.replace("(", "").replace(")", "").replace(" ", ""))
        coeffs[e] = coeffs.get(e, Fraction(0)) + c
        pos = m.end()
        first = False
    if ring is None:
        ring = Ring.RAT if saw_fraction else Ring.INT
    return LaurentPolynomial(coeffs, ring)
