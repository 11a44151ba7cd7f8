from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistspin.degree import (
    DegreeReport,
    GradedEndomorphismPair,
    Method,
    Obstruction,
    TransferError,
    brieskorn_family_k,
    brieskorn_row,
    deg_brieskorn,
    deg_brieskorn_closed_form,
    deg_torus_knot,
    deg_twist_roll_spin,
    even_free_model,
    free_swap,
    induced_on_quotient,
    lefschetz_degree,
    lefschetz_number,
    lspace_obstruction,
    odd_quotient_model,
    summary_model,
)
from twistspin.floer import FloerSummary, brieskorn_summary


def test_identity_cobordism_gives_one():
    for grading in [(), (0,), (0, 1, 1), (1, 1, 0, 0)]:
        n = len(grading)
        J = np.eye(n, dtype=np.int64)
        assert lefschetz_degree(GradedEndomorphismPair(grading, J, J)).value == 1
    J = free_swap(4)
    assert lefschetz_degree(GradedEndomorphismPair((0,) * 4, np.eye(4), J)).value == 1


@pytest.mark.parametrize("k", range(1, 9))
def test_even_free_model(k):
    g = even_free_model(k)
    assert np.trace(g.J) == 0
    assert lefschetz_number(g) == 2 * k
    assert lefschetz_degree(g).value == 4 * k + 1


@pytest.mark.parametrize("k", range(1, 9))
def test_odd_quotient_model(k):
    g = odd_quotient_model(k)
    assert np.trace(g.J) == -1
    assert lefschetz_number(g) == -2 * k
    assert lefschetz_degree(g).value == 4 * k - 1


@settings(max_examples=100, deadline=None)
@given(st.permutations(range(6)))
def test_induced_quotient_action(perm):
    P = np.zeros((6, 6), dtype=np.int64)
    for i, j in enumerate(perm):
        P[j, i] = 1
    Q = induced_on_quotient(P)
    # the all-ones line is invariant, so the quotient trace drops by one
    assert np.trace(Q) == np.trace(P) - 1
    # it is a representation: compose with itself
    Q2 = induced_on_quotient(P @ P)
    assert np.array_equal(Q @ Q, Q2)


def test_pair_validation():
    with pytest.raises(ValueError, match="grading"):
        GradedEndomorphismPair((0, 1), np.eye(2), free_swap(2))
    with pytest.raises(ValueError, match="involution"):
        GradedEndomorphismPair((0, 0), np.eye(2), np.array([[1, 1], [0, 1]]))
    with pytest.raises(ValueError):
        GradedEndomorphismPair((0,), np.eye(2), np.eye(2))


@pytest.mark.parametrize("r,value", [(5, 1), (7, 3), (13, 5)])
def test_montesinos_examples(r, value):
    assert deg_brieskorn(2, 3, r).value == value
    assert deg_brieskorn(2, 3, r).method is Method.MONTESINOS_CHI


@pytest.mark.parametrize("r,value", [(1, 1), (19, 7), (25, 9), (5, 1), (7, 3), (11, 3), (13, 5)])
def test_closed_form(r, value):
    assert deg_brieskorn_closed_form(r).value == value


def test_family_k():
    assert brieskorn_family_k(25) == (2, 1)
    assert brieskorn_family_k(19) == (2, -1)
    assert brieskorn_family_k(11) == (1, -1)
    assert brieskorn_family_k(17) == (1, 1)
    with pytest.raises(ValueError):
        brieskorn_family_k(9)


@pytest.mark.parametrize("r", [r for r in range(5, 60) if gcd(r, 6) == 1])
def test_explicit_models_reproduce_chi(r):
    s = brieskorn_summary(2, 3, r)
    g = summary_model(s)
    assert len(g.grading) == s.total_rank
    assert lefschetz_degree(g).value == deg_brieskorn(2, 3, r).value == deg_brieskorn_closed_form(r).value


@pytest.mark.parametrize("p,q", [(3, 5), (3, 7), (5, 7), (3, 11), (7, 9)])
def test_torus_degree(p, q):
    d = deg_torus_knot(p, q)
    assert d.value == 1 and d.method is Method.TORUS_KNOT and d.rationale


def test_torus_rejects():
    for p, q in [(2, 3), (3, 9), (1, 3)]:
        with pytest.raises(ValueError):
            deg_torus_knot(p, q)


def test_transfer():
    base = deg_brieskorn(2, 3, 7)
    assert deg_twist_roll_spin(base, 2, 0).value == 3
    assert deg_twist_roll_spin(base, 6, 0).value == 3
    assert deg_twist_roll_spin(base, 0, 1).value == 3
    with pytest.raises(TransferError, match="inapplicable"):
        deg_twist_roll_spin(base, 4, 0)


@settings(max_examples=200)
@given(st.integers(-50, 50), st.integers(-50, 50))
def test_transfer_congruence(m, n):
    base = deg_brieskorn_closed_form(13)
    if (m + 2 * n) % 4 == 2:
        assert deg_twist_roll_spin(base, m, n).value == 5
    else:
        with pytest.raises(TransferError):
            deg_twist_roll_spin(base, m, n)


def test_obstruction():
    assert lspace_obstruction(deg_brieskorn(2, 3, 7)) is Obstruction.OBSTRUCTED
    assert lspace_obstruction(DegreeReport(1, Method.CLOSED_FORM)) is Obstruction.INCONCLUSIVE
    assert lspace_obstruction(deg_brieskorn_closed_form(25)) is Obstruction.OBSTRUCTED


def test_degree_is_odd_and_nonnegative():
    with pytest.raises(ValueError):
        DegreeReport(2, Method.CLOSED_FORM)
    with pytest.raises(ValueError):
        DegreeReport(-1, Method.CLOSED_FORM)


def test_report_json():
    data = deg_brieskorn(2, 3, 7).to_json()
    assert data == {
        "invariant": "deg",
        "value": 3,
        "method": "MONTESINOS_CHI",
        "inputs": {"p": 2, "q": 3, "r": 7},
        "obstruction": "OBSTRUCTED",
        "warnings": [],
    }


def test_family_rows():
    row = brieskorn_row(1)
    assert row["rank"] == 0 and row["deg_chi"] == 1 and row["agree"]
    assert brieskorn_row(23) == {
        "r": 23, "rank": 3, "grading": "odd", "chi_anti": -2, "deg_chi": 7, "deg_closed": 7, "agree": True,
    }


def test_summary_model_needs_a_known_shape():
    with pytest.raises(ValueError):
        summary_model(FloerSummary(3, "mixed", 0))
