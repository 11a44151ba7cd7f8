"""Invariant factors of matrices over Q[T] and determinantal ideals over Q[T, 1/T].

Polynomials here are dense coefficient lists (lowest degree first) of
``Fraction``; an empty list is zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import LaurentPolynomial, Ring, _dense, _trim, normalize_up_to_units, poly_divmod

Poly = list  # list[Fraction]


def _add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return _trim(out)


def _scale_sub(a: Poly, q: Poly, b: Poly) -> Poly:
    """a - q*b."""
    if not q or not b:
        return list(a)
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, qi in enumerate(q):
        if qi:
            for j, bj in enumerate(b):
                out[i + j] -= qi * bj
    return _trim(out)


def _mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _monic(a: Poly) -> Poly:
    lead = a[-1]
    return [c / lead for c in a]


def _min_entry(A, rows, cols):
    best = None
    for i in rows:
        for j in cols:
            e = A[i][j]
            if e and (best is None or len(e) < len(A[best[0]][best[1]])):
                best = (i, j)
                if len(e) == 1:
                    return best
    return best


def invariant_factors(matrix: Sequence[Sequence[Poly]]) -> list[Poly]:
    """Monic nonzero invariant factors ``d_1 | d_2 | ...`` of a matrix over Q[T]."""
    A = [[_trim([Fraction(c) for c in e]) for e in row] for row in matrix]
    nr = len(A)
    nc = len(A[0]) if nr else 0
    factors: list[Poly] = []
    t = 0
    while t < min(nr, nc):
        best = _min_entry(A, range(t, nr), range(t, nc))
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if A[i][t]:
                    q, r = poly_divmod(A[i][t], p)
                    A[i] = [_scale_sub(A[i][k], q, A[t][k]) for k in range(nc)]
                    dirty = dirty or bool(r)
            for j in range(t + 1, nc):
                if A[t][j]:
                    q, r = poly_divmod(A[t][j], p)
                    for row in A:
                        row[j] = _scale_sub(row[j], q, row[t])
                    dirty = dirty or bool(r)
            if dirty:
                cand = [(t, j) for j in range(t, nc) if A[t][j]] + [(i, t) for i in range(t + 1, nr) if A[i][t]]
                i, j = min(cand, key=lambda ij: len(A[ij[0]][ij[1]]))
                A[t], A[i] = A[i], A[t]
                for row in A:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if A[i][j] and poly_divmod(A[i][j], p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            A[t] = [_add(A[t][k], A[bad][k]) for k in range(nc)]
        factors.append(_monic(A[t][t]))
        t += 1
    return factors


def _to_polynomial_rows(rows: Sequence[Sequence[LaurentPolynomial]]) -> list[list[Poly]]:
    """Multiply each row by a power of T (a unit) so all entries lie in Q[T]."""
    out = []
    for row in rows:
        nonzero = [e for e in row if not e.is_zero()]
        low = min((e.valuation() for e in nonzero), default=0)
        dense_row = []
        for e in row:
            if e.is_zero():
                dense_row.append([])
            else:
                dense_row.append([Fraction(0)] * (e.valuation() - low) + _dense(e))
        out.append(dense_row)
    return out


def determinantal_ideal(rows: Sequence[Sequence[LaurentPolynomial]], ncols: int, k: int) -> LaurentPolynomial:
    """Normalized generator of the ideal of k x k minors over Q[T, 1/T].

    ``k = 0`` gives the unit ideal; too few nonzero invariant factors give zero.
    """
    if k < 0:
        raise ValueError("minor size must be nonnegative")
    if k == 0:
        return LaurentPolynomial.one(Ring.RAT)
    if k > min(len(rows), ncols):
        return LaurentPolynomial.zero(Ring.RAT)
    factors = invariant_factors(_to_polynomial_rows(rows))
    if len(factors) < k:
        return LaurentPolynomial.zero(Ring.RAT)
    prod: Poly = [Fraction(1)]
    for f in factors[:k]:
        prod = _mul(prod, f)
    return normalize_up_to_units(LaurentPolynomial.from_list(prod, ring=Ring.RAT))
