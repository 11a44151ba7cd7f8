import itertools
from fractions import Fraction

import pytest
import sympy

from twistspin.knots import braid_to_presentation, parse_braid, parse_presentation
from twistspin.laurent import LaurentPolynomial, Ring, normalize_up_to_units

TREFOIL_TEXT = """\
# trefoil, Wirtinger, from the closed braid s1^3
gens: a b c
weights: a=1 b=1 c=1
rel: a b A C
rel: c a C B
longitude: b a c A A A
"""

BRAIDS = {
    "unknot": "B2: s1",
    "trefoil": "B2: s1 s1 s1",
    "figure8": "B3: s1 s2^-1 s1 s2^-1",
    "T25": "B2: s1^5",
    "T34": "B3: s1 s2 s1 s2 s1 s2 s1 s2",
}


def knot(name):
    return braid_to_presentation(parse_braid(BRAIDS[name]))


@pytest.fixture(scope="session")
def knots():
    return {name: knot(name) for name in BRAIDS}


def leibniz_det(rows):
    """Determinant by permutation expansion, independent of the Smith-form code."""
    n = len(rows)
    if n == 0:
        return LaurentPolynomial.one()
    total = LaurentPolynomial.zero()
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = LaurentPolynomial.one() * sign
        for i, j in enumerate(perm):
            term = term * rows[i][j]
        total = total + term
    return total


def minors_gcd_oracle(rows, ncols, k):
    """gcd of all k x k minors via sympy, normalized over Q."""
    if k == 0:
        return LaurentPolynomial.one(Ring.RAT)
    x = sympy.Symbol("x")
    g = sympy.Poly(0, x, domain="QQ")
    for rs in itertools.combinations(range(len(rows)), k):
        for cs in itertools.combinations(range(ncols), k):
            d = leibniz_det([[rows[r][c] for c in cs] for r in rs])
            if d.is_zero():
                continue
            d = d.shift(-d.valuation())
            g = sympy.gcd(g, sympy.Poly(sum(int(c) * x**e for e, c in d.coeffs.items()), x, domain="QQ"))
    if g.is_zero:
        return LaurentPolynomial.zero(Ring.RAT)
    out = {m[0]: Fraction(int(c.p), int(c.q)) for m, c in g.terms()}
    return normalize_up_to_units(LaurentPolynomial(out, Ring.RAT))
