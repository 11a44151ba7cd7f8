"""Alexander matrices, first elementary ideals, and twist-roll-spun presentations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .fox import FreeWord, abelianize, fox_derivative, format_word, word_weight
from .laurent import (
    LaurentPolynomial,
    Ring,
    divides_rational,
    gcd_rational,
    is_unit_rational,
    t_power_minus_one,
    vanishes_at_mth_roots,
)
from .smith import determinantal_ideal


class PresentationError(ValueError):
    """A presentation violates one of its structural constraints."""


@dataclass(frozen=True)
class GroupPresentation:
    """Finite presentation with an abelianization ``x_i -> T^{weights[i-1]}``.

    The optional longitude must map to ``T^0``.
    """

    names: tuple[str, ...]
    relators: tuple[FreeWord, ...]
    weights: tuple[int, ...]
    longitude: FreeWord | None = None

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "relators", tuple(self.relators))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        M = len(self.names)
        if len(set(self.names)) != M:
            raise PresentationError("duplicate generator names")
        if len(self.weights) != M:
            raise PresentationError(f"{M} generators but {len(self.weights)} weights")
        for k, r in enumerate(self.relators):
            bad = [g for g in r.generators() if g > M]
            if bad:
                raise PresentationError(f"relator {k + 1} references unknown generator x{max(bad)}")
        if self.longitude is not None:
            bad = [g for g in self.longitude.generators() if g > M]
            if bad:
                raise PresentationError(f"longitude references unknown generator x{max(bad)}")
            w = word_weight(self.longitude, self.weight_map())
            if w != 0:
                raise PresentationError(f"longitude has abelianized weight T^{w}, expected T^0")

    @property
    def generator_count(self) -> int:
        return len(self.names)

    def weight_map(self) -> dict[int, int]:
        return {i + 1: w for i, w in enumerate(self.weights)}

    def to_text(self) -> str:
        """Serialize in the line-oriented presentation file format."""
        lines = [
            "gens: " + " ".join(self.names),
            "weights: " + " ".join(f"{n}={w}" for n, w in zip(self.names, self.weights)),
        ]
        lines += ["rel: " + format_word(r, self.names) for r in self.relators]
        if self.longitude is not None:
            lines.append("longitude: " + format_word(self.longitude, self.names))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AlexanderMatrix:
    rows: tuple[tuple[LaurentPolynomial, ...], ...]
    ncols: int
    source: str = "BASE"

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPolynomial:
        i, j = ij
        return self.rows[i][j]


@dataclass(frozen=True)
class IdealGenerator:
    gen: LaurentPolynomial
    ideal_rank_note: str = ""

    def is_unit(self) -> bool:
        return is_unit_rational(self.gen)


def _build_matrix(rows, ncols, source) -> AlexanderMatrix:
    return AlexanderMatrix(tuple(tuple(r) for r in rows), ncols, source)


def alexander_matrix(p: GroupPresentation) -> AlexanderMatrix:
    """Abelianized Fox Jacobian: entry (j, i) is ``[d_i r_j]``."""
    wts = p.weight_map()
    M = p.generator_count
    rows = [[abelianize(fox_derivative(i, r), wts) for i in range(1, M + 1)] for r in p.relators]
    return _build_matrix(rows, M, "BASE")


def row_identity_residuals(mat: AlexanderMatrix, weights: Sequence[int]) -> list[LaurentPolynomial]:
    """``sum_i entry(r, i) * (T^{e_i} - 1)`` for each row; zero rows for valid matrices."""
    factors = [t_power_minus_one(e) for e in weights]
    out = []
    for row in mat.rows:
        acc = LaurentPolynomial.zero()
        for entry, f in zip(row, factors):
            acc = acc + entry * f
        out.append(acc)
    return out


# -- twist-roll-spins -----------------------------------------------------


def _spin_word(p: GroupPresentation, m: int, n: int) -> FreeWord:
    if p.longitude is None:
        raise PresentationError("twist-roll-spinning needs a longitude word")
    if p.weights[0] != 1:
        raise PresentationError("generator 1 must be a meridian (weight 1) to spin about it")
    return FreeWord.gen(1) ** m * p.longitude**n


def twist_roll_spin_presentation(p: GroupPresentation, m: int, n: int) -> GroupPresentation:
    """Append the relators ``[x_1^m lambda^n, x_j]`` for j = 1..M."""
    w = _spin_word(p, m, n)
    extra = tuple(w.commutator(FreeWord.gen(j)) for j in range(1, p.generator_count + 1))
    return GroupPresentation(p.names, p.relators + extra, p.weights, p.longitude)


def roll_spin_presentation(p: GroupPresentation, n: int) -> GroupPresentation:
    return twist_roll_spin_presentation(p, 0, n)


def _geometric_sum(m: int, e: int) -> LaurentPolynomial:
    """``(T^{me} - 1) / (T^e - 1)`` for any integer m."""
    if m >= 0:
        return LaurentPolynomial({e * k: 1 for k in range(m)})
    return LaurentPolynomial({e * k: -1 for k in range(m, 0)})


def twist_roll_spin_matrix(p: GroupPresentation, m: int, n: int) -> AlexanderMatrix:
    """Alexander matrix of the twist-roll-spin in closed form.

    The top block is the base Jacobian.  Commutator row j has column i equal to
    ``(1 - T^{e_j}) (delta_{i1} S + n T^{m e_1} [d_i lambda]) + delta_{ij} (T^{m e_1} - 1)``
    with ``S = (T^{m e_1} - 1)/(T^{e_1} - 1)``.  For Wirtinger weights this is
    ``(delta_ij - delta_i1)(T^m - 1) + n T^m (1 - T) [d_i lambda]``.
    """
    _spin_word(p, m, n)
    base = alexander_matrix(p)
    wts = p.weight_map()
    M = p.generator_count
    e1 = wts[1]
    tm = LaurentPolynomial.monomial(m * e1)
    dlam = [abelianize(fox_derivative(i, p.longitude), wts) for i in range(1, M + 1)]
    d_w = [dlam[i - 1] * tm * n + (_geometric_sum(m, e1) if i == 1 else 0) for i in range(1, M + 1)]
    rows = list(base.rows)
    for j in range(1, M + 1):
        left = 1 - LaurentPolynomial.monomial(wts[j])
        row = []
        for i in range(1, M + 1):
            entry = left * d_w[i - 1]
            if i == j:
                entry = entry + tm - 1
            row.append(entry)
        rows.append(row)
    return _build_matrix(rows, M, f"TWIST_ROLL({m},{n})")


def reduced_twist_roll_spin_matrix(p: GroupPresentation, m: int, n: int) -> AlexanderMatrix:
    """Subtract the first commutator row from the others.

    For Wirtinger weights the commutator rows j >= 2 become
    ``-(T^m - 1) e_1 + (T^m - 1) e_j``.
    """
    full = twist_roll_spin_matrix(p, m, n)
    N = len(p.relators)
    rows = [list(r) for r in full.rows]
    first = rows[N]
    for j in range(N + 1, len(rows)):
        rows[j] = [a - b for a, b in zip(rows[j], first)]
    return _build_matrix(rows, full.ncols, "REDUCED")


# -- elementary ideals and the criteria ----------------------------------


def first_elementary_ideal(mat: AlexanderMatrix) -> IdealGenerator:
    """gcd over Q[T, 1/T] of the (M-1) x (M-1) minors, normalized."""
    M = mat.ncols
    if M < 1:
        raise ValueError("matrix must have at least one column")
    gen = determinantal_ideal(mat.rows, M, M - 1)
    if M == 1:
        note = "one generator: empty minor, unit ideal"
    elif gen.is_zero():
        note = f"rank below {M - 1}: all {M - 1}-minors vanish"
    else:
        note = f"gcd of {M - 1}x{M - 1} minors over Q[T,1/T]"
    return IdealGenerator(gen, note)


def alexander_polynomial(p: GroupPresentation) -> LaurentPolynomial:
    """Normalized generator of the Alexander ideal of a knot presentation (over Q)."""
    return first_elementary_ideal(alexander_matrix(p)).gen


def bounds_rational_homology_ball(deltaK: LaurentPolynomial, m: int) -> bool:
    """Whether the twist-roll-spin with m twists (m != 0) bounds a rational homology ball."""
    if m == 0:
        raise ValueError("m = 0 is a pure roll-spin; use obstruct_roll_spin instead")
    return not vanishes_at_mth_roots(deltaK, abs(m))


def obstruct_roll_spin(p: GroupPresentation) -> bool:
    """True when no roll-spin of the knot bounds a rational homology ball."""
    return not first_elementary_ideal(alexander_matrix(p)).is_unit()


def inclusion_target(p: GroupPresentation, m: int) -> LaurentPolynomial:
    """Generator of the ideal ``(Delta_K, T^m - 1)`` over Q[T, 1/T]."""
    return gcd_rational(alexander_polynomial(p), t_power_minus_one(m, Ring.RAT))


def check_ideal_inclusion(p: GroupPresentation, m: int, n: int) -> bool:
    """Does the twist-roll-spin's Alexander ideal lie in ``(Delta_K, T^m - 1)``?"""
    spun = first_elementary_ideal(twist_roll_spin_matrix(p, m, n)).gen
    return divides_rational(inclusion_target(p, m), spun)


@dataclass(frozen=True)
class SpinReport:
    """Everything computed about one twist-roll-spin."""

    m: int
    n: int
    alexander: LaurentPolynomial
    spun_ideal: LaurentPolynomial | None
    inclusion_target: LaurentPolynomial
    inclusion_holds: bool | None
    fiber_is_qhb: bool | None
    roll_obstructed: bool | None
    notes: tuple[str, ...] = field(default_factory=tuple)


def analyze_spin(p: GroupPresentation, m: int, n: int) -> SpinReport:
    """Run the Alexander-ideal pipeline for the twist-roll-spin of p."""
    delta = alexander_polynomial(p)
    target = gcd_rational(delta, t_power_minus_one(m, Ring.RAT))
    notes = []
    spun = None
    inclusion = None
    if p.longitude is not None and p.weights[0] == 1:
        spun = first_elementary_ideal(twist_roll_spin_matrix(p, m, n)).gen
        inclusion = divides_rational(target, spun)
    else:
        notes.append("no meridian/longitude pair: spun matrix skipped")
    if m == 0:
        qhb, roll = None, not is_unit_rational(delta)
    else:
        qhb, roll = bounds_rational_homology_ball(delta, m), None
    return SpinReport(m, n, delta, spun, target, inclusion, qhb, roll, tuple(notes))

