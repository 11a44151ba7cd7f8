"""Free groups, their integral group rings, and Fox free differential calculus.

Generators are positive integers ``1..M``.  A letter is a signed integer:
``+i`` stands for ``x_i`` and ``-i`` for ``x_i^{-1}``.  Printable names live
in presentations, not here.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .laurent import LaurentPolynomial, Ring


class FreeWord:
    """A freely reduced word in the generators ``x_1, x_2, ...``."""

    __slots__ = ("_letters",)

    def __init__(self, letters: Iterable[int] = ()):
        stack: list[int] = []
        for a in letters:
            a = int(a)
            if a == 0:
                raise ValueError("generator indices start at 1")
            if stack and stack[-1] == -a:
                stack.pop()
            else:
                stack.append(a)
        self._letters = tuple(stack)

    @classmethod
    def gen(cls, i: int, power: int = 1) -> FreeWord:
        if i < 1:
            raise ValueError("generator indices start at 1")
        return cls([i if power > 0 else -i] * abs(power))

    @classmethod
    def identity(cls) -> FreeWord:
        return cls()

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> FreeWord:
        """Build from ``(generator, sign)`` pairs."""
        return cls(i * s for i, s in pairs)

    @property
    def letters(self) -> tuple[int, ...]:
        return self._letters

    def pairs(self) -> list[tuple[int, int]]:
        return [(abs(a), 1 if a > 0 else -1) for a in self._letters]

    def generators(self) -> set[int]:
        return {abs(a) for a in self._letters}

    def exponent_sum(self, i: int) -> int:
        return sum(1 if a == i else -1 for a in self._letters if abs(a) == i)

    def is_identity(self) -> bool:
        return not self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self):
        return iter(self._letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return FreeWord(self._letters + other._letters)

    def inverse(self) -> FreeWord:
        return FreeWord(-a for a in reversed(self._letters))

    def __pow__(self, k: int) -> FreeWord:
        if k < 0:
            return self.inverse() ** (-k)
        return FreeWord(self._letters * k)

    def commutator(self, other: FreeWord) -> FreeWord:
        """``u v u^{-1} v^{-1}``."""
        return self * other * self.inverse() * other.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeWord) and self._letters == other._letters

    def __hash__(self) -> int:
        return hash(self._letters)

    def __lt__(self, other: FreeWord) -> bool:
        return (len(self), self._letters) < (len(other), other._letters)

    def __repr__(self) -> str:
        return f"FreeWord({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)


def word_ops(u: FreeWord, v: FreeWord | None, kind: str, k: int | None = None) -> FreeWord:
    """``MUL``, ``INV`` (of u), ``COMMUTATOR`` or ``POWER`` (u**k) by name."""
    kind = kind.upper()
    if kind == "MUL":
        return u * v
    if kind == "INV":
        return u.inverse()
    if kind == "COMMUTATOR":
        return u.commutator(v)
    if kind == "POWER":
        if k is None:
            raise ValueError("POWER needs an exponent")
        return u**k
    raise ValueError(f"unknown word operation {kind!r}")


class GroupRingElement:
    """A finite integer combination of free words, an element of Z[F]."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[FreeWord, int] | None = None):
        self._terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def from_word(cls, w: FreeWord, coeff: int = 1) -> GroupRingElement:
        return cls({w: coeff})

    @classmethod
    def one(cls) -> GroupRingElement:
        return cls({FreeWord(): 1})

    @classmethod
    def zero(cls) -> GroupRingElement:
        return cls()

    @property
    def terms(self) -> dict[FreeWord, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _coerce(self, other) -> GroupRingElement:
        if isinstance(other, GroupRingElement):
            return other
        if isinstance(other, FreeWord):
            return GroupRingElement.from_word(other)
        if isinstance(other, int):
            return GroupRingElement({FreeWord(): other})
        return NotImplemented

    def __add__(self, other) -> GroupRingElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    __radd__ = __add__

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> GroupRingElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> GroupRingElement:
        return (-self) + other

    def __mul__(self, other) -> GroupRingElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[FreeWord, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 * w2
                out[w] = out.get(w, 0) + c1 * c2
        return GroupRingElement(out)

    def __rmul__(self, other) -> GroupRingElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __eq__(self, other) -> bool:
        if isinstance(other, (FreeWord, int)):
            other = self._coerce(other)
        return isinstance(other, GroupRingElement) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "GroupRingElement(0)"
        body = " + ".join(f"{c}*[{w}]" for w, c in sorted(self._terms.items()))
        return f"GroupRingElement({body})"


# -- Fox derivatives ------------------------------------------------------


@lru_cache(maxsize=1 << 16)
def _fox_word(i: int, w: FreeWord) -> GroupRingElement:
    # d_i(a_1...a_n) = sum_k a_1...a_{k-1} d_i(a_k); d_i(x_i^-1) = -x_i^-1.
    out: dict[FreeWord, int] = {}
    letters = w.letters
    for k, a in enumerate(letters):
        if a == i:
            prefix = FreeWord(letters[:k])
            out[prefix] = out.get(prefix, 0) + 1
        elif a == -i:
            prefix = FreeWord(letters[: k + 1])
            out[prefix] = out.get(prefix, 0) - 1
    return GroupRingElement(out)


def fox_derivative(i: int, g: GroupRingElement | FreeWord) -> GroupRingElement:
    """The Fox derivative with respect to ``x_i``, extended linearly."""
    if i < 1:
        raise ValueError("generator indices start at 1")
    if isinstance(g, FreeWord):
        return _fox_word(i, g)
    out = GroupRingElement()
    for w, c in g.terms.items():
        out = out + _fox_word(i, w) * c
    return out


# -- abelianization -------------------------------------------------------


def word_weight(w: FreeWord, weights: Mapping[int, int]) -> int:
    """Exponent of T in the image of a word under ``x_i -> T^{weights[i]}``."""
    total = 0
    for a in w.letters:
        try:
            e = weights[abs(a)]
        except KeyError:
            raise KeyError(f"no abelianization weight for generator {abs(a)}") from None
        total += e if a > 0 else -e
    return total


def abelianize(g: GroupRingElement | FreeWord, weights: Mapping[int, int]) -> LaurentPolynomial:
    """Image in Z[T, 1/T] under the ring map induced by ``x_i -> T^{weights[i]}``."""
    if isinstance(g, FreeWord):
        g = GroupRingElement.from_word(g)
    out: dict[int, int] = {}
    for w, c in g.terms.items():
        e = word_weight(w, weights)
        out[e] = out.get(e, 0) + c
    return LaurentPolynomial(out, Ring.INT)


# -- text form ------------------------------------------------------------

_TOKEN = re.compile(r"^(?P<name>[A-Za-z][A-Za-z0-9_]*?)(?:\^(?P<exp>[+-]?\d+))?$")
_INDEXED = re.compile(r"^[xX](?P<idx>\d+)$")


def parse_word(text: str, names: Sequence[str] | None = None) -> FreeWord:
    """Parse ``a b A`` (uppercase = inverse) or ``x1 x2^-1`` into a word.

    ``names[k]`` is the name of generator ``k + 1``.  Tokens are separated by
    whitespace; ``^k`` raises a letter to an integer power and ``1`` is the
    empty word.  The indexed form ``x<i>`` is always accepted when no name
    table is given, and accepted for names not clashing with the table
    otherwise.
    """
    index = {name: k + 1 for k, name in enumerate(names or ())}
    letters: list[int] = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"malformed word token {tok!r}")
        name, exp = m.group("name"), int(m.group("exp") or 1)
        if name in index:
            gen, sign = index[name], 1
        elif name.lower() in index and name != name.lower():
            gen, sign = index[name.lower()], -1
        elif (mi := _INDEXED.match(name)) is not None and name not in index:
            gen, sign = int(mi.group("idx")), (1 if name[0] == "x" else -1)
            if gen < 1 or (names and gen > len(names)):
                raise ValueError(f"generator index out of range in {tok!r}")
        else:
            raise ValueError(f"unknown generator {name!r}")
        letters.extend([gen * sign if exp > 0 else -gen * sign] * abs(exp))
    return FreeWord(letters)


def format_word(w: FreeWord, names: Sequence[str] | None = None) -> str:
    """Inverse of :func:`parse_word`; uses ``x<i>^-1`` when no names are given."""
    if w.is_identity():
        return "1"
    out = []
    for a in w.letters:
        if names:
            name = names[abs(a) - 1]
            out.append(name if a > 0 else name.upper())
        else:
            out.append(f"x{a}" if a > 0 else f"x{-a}^-1")
    return " ".join(out)
