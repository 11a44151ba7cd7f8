"""Ways to obtain knot-group presentations: files, braid words, torus knots."""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .alexander import GroupPresentation, PresentationError
from .fox import FreeWord, parse_word
from .laurent import LaurentPolynomial, exact_quotient, t_power_minus_one


class PresentationSyntaxError(PresentationError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_NAME = re.compile(r"^[a-z][a-z0-9_]*$")


def parse_presentation(text: str) -> GroupPresentation:
    """Parse the line-oriented presentation format.

    ::

        gens: a b c
        weights: a=1 b=1 c=1
        rel: a b A C
        longitude: c a B A

    Blank lines and ``#`` comments are ignored.
    """
    names: list[str] | None = None
    weights: dict[str, int] = {}
    weights_line = None
    relators: list[tuple[int, int, str]] = []
    longitude: tuple[int, int, str] | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise PresentationSyntaxError("expected 'key: value'", lineno)
        key = key.strip()
        col = len(key) + 2 + (len(rest) - len(rest.lstrip())) + (len(line) - len(line.lstrip()))
        body = rest.strip()
        if key == "gens":
            if names is not None:
                raise PresentationSyntaxError("repeated 'gens' line", lineno)
            names = body.split()
            if not names:
                raise PresentationSyntaxError("no generators given", lineno, col)
            seen = set()
            for name in names:
                if not _NAME.match(name):
                    raise PresentationSyntaxError(
                        f"generator name {name!r} must be lowercase alphanumeric", lineno, col + body.find(name)
                    )
                if name in seen:
                    raise PresentationSyntaxError(f"duplicate generator {name!r}", lineno, col + body.rfind(name))
                seen.add(name)
        elif key == "weights":
            weights_line = lineno
            for tok in body.split():
                name, eq, value = tok.partition("=")
                if not eq:
                    raise PresentationSyntaxError(f"weight {tok!r} is not name=int", lineno, col + body.find(tok))
                try:
                    weights[name] = int(value)
                except ValueError:
                    raise PresentationSyntaxError(
                        f"weight {tok!r} is not an integer", lineno, col + body.find(tok)
                    ) from None
        elif key == "rel":
            if not body:
                raise PresentationSyntaxError("empty relator", lineno, col)
            relators.append((lineno, col, body))
        elif key == "longitude":
            if longitude is not None:
                raise PresentationSyntaxError("repeated 'longitude' line", lineno)
            if not body:
                raise PresentationSyntaxError("empty longitude", lineno, col)
            longitude = (lineno, col, body)
        else:
            raise PresentationSyntaxError(f"unknown key {key!r}", lineno)

    if names is None:
        raise PresentationSyntaxError("missing 'gens' line", 1)
    unknown = [n for n in weights if n not in names]
    if unknown:
        raise PresentationSyntaxError(f"weight for unknown generator {unknown[0]!r}", weights_line or 1)
    missing = [n for n in names if n not in weights]
    if missing:
        raise PresentationSyntaxError(f"missing weights for {', '.join(missing)}", weights_line or 1)

    def word(entry):
        lineno, col, body = entry
        try:
            return parse_word(body, names)
        except ValueError as exc:
            raise PresentationSyntaxError(str(exc), lineno, col) from None

    rels = tuple(word(e) for e in relators)
    lam = word(longitude) if longitude else None
    try:
        return GroupPresentation(tuple(names), rels, tuple(weights[n] for n in names), lam)
    except PresentationError as exc:
        line = longitude[0] if longitude and "longitude" in str(exc) else 1
        raise PresentationSyntaxError(str(exc), line) from None


# -- braids ---------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        if self.strand_count < 2:
            raise ValueError("a braid needs at least two strands")
        for a in self.letters:
            if a == 0 or abs(a) >= self.strand_count:
                raise ValueError(f"generator s{abs(a)} out of range for B{self.strand_count}")

    def permutation(self) -> list[int]:
        """perm[k] = bottom position of the strand starting at top position k."""
        pos = list(range(self.strand_count))  # pos[k] = strand currently at position k
        for a in self.letters:
            i = abs(a) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        perm = [0] * self.strand_count
        for bottom, strand in enumerate(pos):
            perm[strand] = bottom
        return perm

    def component_count(self) -> int:
        perm = self.permutation()
        seen, count = set(), 0
        for k in range(self.strand_count):
            if k not in seen:
                count += 1
                while k not in seen:
                    seen.add(k)
                    k = perm[k]
        return count

    def writhe(self) -> int:
        return sum(1 if a > 0 else -1 for a in self.letters)

    def __str__(self) -> str:
        body = " ".join(f"s{a}" if a > 0 else f"s{-a}^-1" for a in self.letters)
        return f"B{self.strand_count}: {body}".rstrip()


_BRAID_TOKEN = re.compile(r"^[sS](\d+)(?:\^([+-]?\d+))?$")


def parse_braid(text: str) -> BraidWord:
    """Parse ``B3: s1 s2^-1 s1 s2^-1``; the ``Bn:`` prefix is optional."""
    head, sep, body = text.partition(":")
    if sep:
        m = re.fullmatch(r"\s*[Bb](\d+)\s*", head)
        if m is None:
            raise ValueError(f"malformed braid header {head!r}")
        n = int(m.group(1))
    else:
        body, n = text, None
    letters: list[int] = []
    for tok in body.split():
        m = _BRAID_TOKEN.match(tok)
        if m is None:
            raise ValueError(f"malformed braid letter {tok!r}")
        i, e = int(m.group(1)), int(m.group(2) or 1)
        letters.extend([i if e > 0 else -i] * abs(e))
    if n is None:
        n = max((abs(a) for a in letters), default=1) + 1
    return BraidWord(n, tuple(letters))


class _UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def braid_to_presentation(b: BraidWord) -> GroupPresentation:
    """Wirtinger presentation of the braid closure, with a longitude.

    Strands run downward.  At ``s_i`` the strand in position i crosses over;
    the under-strand leaving at position i is the arc ``a y a^-1`` where ``a``
    is the over-arc and ``y`` the incoming under-arc.  At ``s_i^-1`` the strand
    in position i+1 is over and the new arc is ``a^-1 y a``.  The longitude is
    the product of over-arcs met while following the strand that starts at the
    top of position 1, times ``x_1^{-writhe}``.
    """
    if b.component_count() != 1:
        raise ValueError(f"closure of {b} is a {b.component_count()}-component link, not a knot")
    uf = _UnionFind()
    top = [uf.add() for _ in range(b.strand_count)]
    current = list(top)
    crossings = []  # (over_arc, under_in, under_out, sign)
    for a in b.letters:
        i = abs(a) - 1
        new = uf.add()
        if a > 0:
            over, under = current[i], current[i + 1]
            crossings.append((over, under, new, 1))
            current[i], current[i + 1] = new, over
        else:
            over, under = current[i + 1], current[i]
            crossings.append((over, under, new, -1))
            current[i], current[i + 1] = over, new
    for k in range(b.strand_count):
        uf.union(current[k], top[k])

    arcs = sorted({uf.find(a) for a in range(len(uf.parent))})
    # the top arc of position 1 becomes generator 1, so it is the spinning meridian
    start = uf.find(top[0])
    arcs.remove(start)
    arcs.insert(0, start)
    index = {a: k + 1 for k, a in enumerate(arcs)}

    def g(arc: int) -> int:
        return index[uf.find(arc)]

    relators = []
    for over, under_in, under_out, sign in crossings:
        a, y, z = g(over), g(under_in), g(under_out)
        # z = a^s y a^-s
        r = FreeWord.gen(a, sign) * FreeWord.gen(y) * FreeWord.gen(a, -sign) * FreeWord.gen(z, -1)
        if not r.is_identity():
            relators.append(r)

    # Follow the knot from the top of position 1, recording under-passes.
    under_at = {under_in: (over, sign) for over, under_in, _, sign in crossings}
    out_of = {under_in: under_out for _, under_in, under_out, _ in crossings}
    trail = FreeWord()
    arc = top[0]
    for _ in range(len(uf.parent) + 1):
        if arc in out_of:
            over, sign = under_at[arc]
            trail = FreeWord.gen(g(over), sign) * trail
            arc = out_of[arc]
        else:
            arc = top[current.index(arc)]
            if arc == top[0]:
                break
    else:
        raise RuntimeError("failed to trace the braid closure")
    longitude = trail * FreeWord.gen(1, -sum(1 if a > 0 else -1 for a in trail.letters))
    names = tuple(f"x{k}" for k in range(1, len(arcs) + 1))
    return GroupPresentation(names, tuple(relators), (1,) * len(arcs), longitude)


def torus_braid(p: int, q: int) -> BraidWord:
    """``(s_1 ... s_{p-1})^q``, whose closure is T(p, q)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return BraidWord(p, tuple(range(1, p)) * q)


def torus_alexander(p: int, q: int) -> LaurentPolynomial:
    """``(T^{pq} - 1)(T - 1) / ((T^p - 1)(T^q - 1))``, divided exactly."""
    num = t_power_minus_one(p * q) * t_power_minus_one(1)
    return exact_quotient(num, t_power_minus_one(p) * t_power_minus_one(q))


def torus_knot(p: int, q: int) -> tuple[GroupPresentation, LaurentPolynomial]:
    """``<u, v | u^p v^-q>`` with ``u -> T^q``, ``v -> T^p``, and the closed-form polynomial."""
    if p < 2 or q < 2:
        raise ValueError("torus knot parameters must be at least 2")
    if gcd(p, q) != 1:
        raise ValueError(f"T({p},{q}) is a link: gcd(p, q) = {gcd(p, q)}")
    rel = FreeWord.gen(1, p) * FreeWord.gen(2, -q)
    pres = GroupPresentation(("u", "v"), (rel,), (q, p))
    return pres, torus_alexander(p, q)
