"""Graded roots of Brieskorn spheres and the reflection involution on them.

For Sigma(p, q, r) put ``N0 = pqr - pq - qr - pr`` and let ``c(n)`` count the
ways of writing ``n = a*qr + b*pr + c*pq`` with ``a, b, c >= 0`` (zero for
n < 0).  With ``s(n) = c(n) - c(n - pqr)`` the tau function has increments

    tau(n + 1) - tau(n) = s(n) - s(N0 - n).

Adding ``pqr`` embeds the representations of n - pqr into those of n, so
``s >= 0``; hence tau is nondecreasing from ``N0 + 1`` on and symmetric on
``[0, N0 + 1]``.  Below pqr representations are unique, so there ``s`` is the
semigroup indicator.

Sublevel-set components of tau give the graded root; reflecting the
symmetric window gives its involution.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

log = logging.getLogger(__name__)

UNCALIBRATED = "uncalibrated involution: parity/involution model validated only for Sigma(2,3,r)"


def representation_counts(generators: Sequence[int], limit: int) -> list[int]:
    """``counts[n]`` = number of nonnegative solutions of ``sum x_i g_i = n``, n <= limit."""
    counts = [0] * (limit + 1)
    if limit < 0:
        return counts
    counts[0] = 1
    for g in generators:
        for n in range(g, limit + 1):
            counts[n] += counts[n - g]
    return counts


@dataclass(frozen=True)
class TauSequence:
    values: tuple[int, ...]
    stabilization_index: int
    brieskorn: tuple[int, int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values or self.values[0] != 0:
            raise ValueError("tau sequences start with tau(0) = 0")
        s = self.stabilization_index
        if s < 0:
            raise ValueError("stabilization index must be nonnegative")
        tail = self.values[s:]
        if any(b < a for a, b in zip(tail, tail[1:])):
            raise ValueError("tau decreases after the stabilization index")

    def increments(self) -> list[int]:
        v = self.values
        return [b - a for a, b in zip(v, v[1:])]

    def window(self) -> tuple[int, ...]:
        """Values on ``[0, stabilization_index]``, the part that shapes the root."""
        if self.stabilization_index >= len(self.values):
            raise ValueError("sequence not stabilized: stabilization index beyond the data")
        return self.values[: self.stabilization_index + 1]


def _check_triple(p: int, q: int, r: int) -> None:
    if min(p, q, r) < 2:
        raise ValueError("Brieskorn parameters must be at least 2")
    for a, b in ((p, q), (p, r), (q, r)):
        if gcd(a, b) != 1:
            raise ValueError(f"Brieskorn parameters must be pairwise coprime: gcd({a},{b}) = {gcd(a, b)}")


def tau_sequence_brieskorn(p: int, q: int, r: int, tail: int | None = None) -> TauSequence:
    """Tau function of Sigma(p, q, r) through ``N0 + 1`` plus ``tail`` more values.

    ``tail`` defaults to ``pqr`` so several periods of the increasing part are
    kept.
    """
    _check_triple(p, q, r)
    n0 = p * q * r - p * q - q * r - p * r
    if tail is None:
        tail = p * q * r
    stab = max(n0 + 1, 0)
    last = stab + tail
    counts = representation_counts((q * r, p * r, p * q), last)
    period = p * q * r

    def s(n: int) -> int:
        if n < 0:
            return 0
        return counts[n] - (counts[n - period] if n >= period else 0)

    values = [0]
    for n in range(last):
        values.append(values[-1] + s(n) - s(n0 - n))
    return TauSequence(tuple(values), stab, (p, q, r))


@dataclass(frozen=True)
class RootVertex:
    id: int
    level: int
    grading: int
    span: tuple[int, int]
    parent: int | None
    involution_image: int


@dataclass(frozen=True)
class GradedRoot:
    """Finite truncation of a graded root.

    Each vertex is a component ``span`` of ``{n : tau(n) <= level}`` inside the
    symmetric window; its grading is ``-2 * level``.  The root is the unique
    vertex at the top level and continues upward as the infinite stalk.
    """

    vertices: tuple[RootVertex, ...]
    root: int
    brieskorn: tuple[int, int, int] | None = None

    def children(self, v: int) -> list[int]:
        return [u.id for u in self.vertices if u.parent == v]

    def leaves(self) -> list[int]:
        parents = {u.parent for u in self.vertices}
        return [u.id for u in self.vertices if u.id not in parents]

    def levels(self) -> dict[int, list[RootVertex]]:
        out: dict[int, list[RootVertex]] = {}
        for u in self.vertices:
            out.setdefault(u.level, []).append(u)
        return out

    def is_automorphism(self) -> bool:
        """Does the involution square to 1 and preserve gradings and edges?"""
        vs = {u.id: u for u in self.vertices}
        for u in self.vertices:
            img = vs[u.involution_image]
            if vs[img.involution_image].id != u.id or img.grading != u.grading:
                return False
            if (u.parent is None) != (img.parent is None):
                return False
            if u.parent is not None and vs[u.parent].involution_image != img.parent:
                return False
        return vs[self.root].involution_image == self.root

    def to_json(self) -> list[dict]:
        return [
            {"id": u.id, "grading": u.grading, "parent": u.parent, "involution_image": u.involution_image}
            for u in self.vertices
        ]


def _components(values: Sequence[int], level: int) -> list[tuple[int, int]]:
    comps = []
    start = None
    for i, v in enumerate(values):
        if v <= level:
            if start is None:
                start = i
        elif start is not None:
            comps.append((start, i - 1))
            start = None
    if start is not None:
        comps.append((start, len(values) - 1))
    return comps


def graded_root(t: TauSequence) -> GradedRoot:
    """Graded root of a stabilized tau sequence with its reflection involution."""
    window = t.window()
    N = len(window) - 1
    if any(window[i] != window[N - i] for i in range(N + 1)):
        raise ValueError("tau window is not symmetric; no reflection involution")
    low, high = min(window), max(window)
    vertices: list[dict] = []
    by_span: dict[tuple[int, int, int], int] = {}
    for level in range(high, low - 1, -1):
        for span in _components(window, level):
            vid = len(vertices)
            by_span[(level, *span)] = vid
            vertices.append({"level": level, "span": span})
    for v in vertices:
        level, (a, b) = v["level"], v["span"]
        parent = None
        if level < high:
            for pa, pb in _components(window, level + 1):
                if pa <= a and b <= pb:
                    parent = by_span[(level + 1, pa, pb)]
                    break
        v["parent"] = parent
        v["image"] = by_span[(level, N - b, N - a)]
    verts = tuple(
        RootVertex(k, v["level"], -2 * v["level"], v["span"], v["parent"], v["image"]) for k, v in enumerate(vertices)
    )
    return GradedRoot(verts, 0, t.brieskorn)


@dataclass(frozen=True)
class FloerSummary:
    total_rank: int
    z2_grading: str
    anti_invariant_euler: int
    warnings: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if abs(self.anti_invariant_euler) > self.total_rank:
            raise ValueError("anti-invariant Euler characteristic exceeds the rank")


def level_modules(g: GradedRoot) -> list[tuple[int, int, int]]:
    """``(level, vertex count, fixed vertex count)`` for each level with reduced homology."""
    out = []
    for level, vs in sorted(g.levels().items()):
        if len(vs) > 1:
            fixed = sum(1 for u in vs if u.involution_image == u.id)
            out.append((level, len(vs), fixed))
    return out


def floer_summary(g: GradedRoot) -> FloerSummary:
    """Reduced rank, Z/2 grading and anti-invariant Euler characteristic.

    At a level with V vertices the reduced group is ``Z^V`` modulo the stalk
    class, of rank V - 1, and the reflection permutes the vertices.  With a
    fixed vertex the group is modelled as the free permutation module on the
    other vertices in even degree; with no fixed vertex it is
    ``Z^V / <(1, ..., 1)>`` in odd degree.  Either way the (-1)-eigenspace has
    dimension ``(V - fixed) / 2``.
    """
    rank = 0
    chi = 0
    parities = set()
    for _, count, fixed in level_modules(g):
        rank += count - 1
        anti = (count - fixed) // 2
        if fixed:
            parities.add("even")
            chi += anti
        else:
            parities.add("odd")
            chi -= anti
    if not parities:
        grading = "even"
    elif len(parities) == 1:
        grading = parities.pop()
    else:
        grading = "mixed"
    notes = []
    if g.brieskorn is None or sorted(g.brieskorn)[:2] != [2, 3]:
        notes.append(UNCALIBRATED)
        log.warning(UNCALIBRATED)
    return FloerSummary(rank, grading, chi, tuple(notes))


def brieskorn_summary(p: int, q: int, r: int) -> FloerSummary:
    return floer_summary(graded_root(tau_sequence_brieskorn(p, q, r)))
