import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistspin.fox import (
    FreeWord,
    GroupRingElement,
    abelianize,
    format_word,
    fox_derivative,
    parse_word,
    word_ops,
)
from twistspin.laurent import LaurentPolynomial, T, parse_laurent

x1, x2, x3 = FreeWord.gen(1), FreeWord.gen(2), FreeWord.gen(3)
M = 4

letters = st.lists(st.sampled_from([i for i in range(-M, M + 1) if i]), max_size=40)
words = letters.map(FreeWord)


def naive_reduce(seq):
    out = []
    for a in seq:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def test_word_op_examples():
    assert word_ops(x1, x1, "COMMUTATOR").is_identity()
    assert word_ops(x1, None, "POWER", 3).letters == (1, 1, 1)
    assert word_ops(x1 * x2, FreeWord([-2, -1]), "MUL").is_identity()
    assert word_ops(x1 * x2, None, "INV") == FreeWord([-2, -1])
    with pytest.raises(ValueError):
        word_ops(x1, x2, "DIV")


@given(letters)
def test_free_reduction_matches_stack_oracle(seq):
    w = FreeWord(seq)
    assert w.letters == naive_reduce(seq)
    assert all(a != -b for a, b in zip(w.letters, w.letters[1:]))


@given(words, words, words)
def test_group_laws(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert (u * u.inverse()).is_identity()
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert u**-2 == (u * u).inverse()


def test_fox_examples():
    assert fox_derivative(1, x1 * x2) == GroupRingElement.one()
    assert fox_derivative(2, x1 * x2 * x1.inverse()) == GroupRingElement.from_word(x1)
    assert fox_derivative(1, x1.inverse()) == GroupRingElement.from_word(x1.inverse()) * -1
    assert fox_derivative(3, x1 * x2).is_zero()


def _fundamental(w):
    total = GroupRingElement.zero()
    for i in range(1, M + 1):
        total = total + fox_derivative(i, w) * (GroupRingElement.from_word(FreeWord.gen(i)) - 1)
    return total == GroupRingElement.from_word(w) - 1


def _commutator_identity(w, i, j):
    xj = FreeWord.gen(j)
    c = w.commutator(xj)
    lhs = fox_derivative(i, c)
    rhs = (1 - GroupRingElement.from_word(w * xj * w.inverse())) * fox_derivative(i, w)
    if i == j:
        rhs = rhs + GroupRingElement.from_word(w) - GroupRingElement.from_word(c)
    return lhs == rhs


@settings(max_examples=300, deadline=None)
@given(words)
def test_fundamental_identity(w):
    assert _fundamental(w)


@settings(max_examples=300, deadline=None)
@given(words, st.integers(1, M), st.integers(1, M))
def test_commutator_derivative_identity(w, i, j):
    assert _commutator_identity(w, i, j)


@settings(max_examples=200, deadline=None)
@given(words, words, st.integers(1, M))
def test_product_rule(u, v, i):
    lhs = fox_derivative(i, u * v)
    assert lhs == fox_derivative(i, u) + GroupRingElement.from_word(u) * fox_derivative(i, v)


def test_derivative_of_group_ring_sums_is_linear():
    rng = random.Random(5)
    for _ in range(100):
        u = FreeWord([rng.choice([1, -1, 2, -2, 3]) for _ in range(rng.randint(0, 10))])
        v = FreeWord([rng.choice([1, -1, 2, -2, 3]) for _ in range(rng.randint(0, 10))])
        g = GroupRingElement.from_word(u, 3) - GroupRingElement.from_word(v)
        assert fox_derivative(2, g) == fox_derivative(2, u) * 3 - fox_derivative(2, v)


wts = st.lists(st.integers(-3, 3), min_size=M, max_size=M).map(lambda l: {i + 1: e for i, e in enumerate(l)})


@settings(max_examples=200, deadline=None)
@given(words, words, wts)
def test_abelianize_is_ring_homomorphism(u, v, weights):
    a = GroupRingElement.from_word(u, 2) + GroupRingElement.from_word(v)
    b = GroupRingElement.from_word(v) - 1
    assert abelianize(a * b, weights) == abelianize(a, weights) * abelianize(b, weights)
    assert abelianize(a + b, weights) == abelianize(a, weights) + abelianize(b, weights)
    # exponent-sum oracle for a single word
    expect = sum(weights[abs(c)] * (1 if c > 0 else -1) for c in u.letters)
    assert abelianize(u, weights) == LaurentPolynomial.monomial(expect)


def test_abelianize_examples():
    ones = {1: 1, 2: 1, 3: 1}
    assert abelianize(x1 * x2 * x1.inverse(), ones) == T
    with pytest.raises(KeyError):
        abelianize(FreeWord.gen(5), ones)


def _geom(m):
    return sum((T**k for k in range(m)), LaurentPolynomial.zero())


@pytest.mark.parametrize("m,n", [(1, 0), (2, 1), (3, 2), (6, 1), (4, 3)])
def test_abelianized_spin_word_derivatives(m, n):
    # a weight-0 word standing in for the longitude
    lam = FreeWord([3, 1, -2, 2, 1, -3, -1, -1])
    ones = {1: 1, 2: 1, 3: 1}
    assert abelianize(lam, ones) == LaurentPolynomial.one()
    w = x1**m * lam**n
    for i in (1, 2, 3):
        expect = (_geom(m) if i == 1 else LaurentPolynomial.zero()) + T**m * n * abelianize(fox_derivative(i, lam), ones)
        assert abelianize(fox_derivative(i, w), ones) == expect
    for j in (1, 2, 3):
        diff = GroupRingElement.from_word(w) - GroupRingElement.from_word(w.commutator(FreeWord.gen(j)))
        assert abelianize(diff, ones) == parse_laurent(f"T^{m} - 1")


def test_parse_and_format_words():
    names = ["a", "b", "c"]
    assert parse_word("a b A C", names).letters == (1, 2, -1, -3)
    assert parse_word("a^3 B^-2", names).letters == (1, 1, 1, 2, 2)
    assert parse_word("x1 x2^-1").letters == (1, -2)
    assert format_word(parse_word("a b A C", names), names) == "a b A C"
    assert format_word(FreeWord()) == "1"
    for bad in ("d", "a^", "a b 3", "2"):
        with pytest.raises(ValueError):
            parse_word(bad, names)


@given(words)
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w)) == w
    assert parse_word(format_word(w, "abcd"), "abcd") == w
