"""Evaluation of |deg| as |1 + 2 L| with L a graded Lefschetz number.

``L`` is the alternating trace of ``J (W - 1)`` over a Z/2-graded free module,
where ``W`` is the cobordism map and ``J`` the conjugation involution.  The
specializations below cover the mapping tori of Brieskorn spheres.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Any, Sequence

import numpy as np

from .floer import FloerSummary, brieskorn_summary, graded_root, level_modules, tau_sequence_brieskorn


class Method(str, enum.Enum):
    LEFSCHETZ_GENERAL = "LEFSCHETZ_GENERAL"
    MONTESINOS_CHI = "MONTESINOS_CHI"
    CLOSED_FORM = "CLOSED_FORM"
    TORUS_KNOT = "TORUS_KNOT"
    TRANSFER = "TRANSFER"


class Obstruction(str, enum.Enum):
    OBSTRUCTED = "OBSTRUCTED"
    INCONCLUSIVE = "INCONCLUSIVE"


class TransferError(ValueError):
    """The twist-roll transfer rule does not apply to (m, n)."""


@dataclass(frozen=True)
class GradedEndomorphismPair:
    """``W`` and ``J`` on a free module whose basis vectors carry parities 0/1."""

    grading: tuple[int, ...]
    W: np.ndarray
    J: np.ndarray

    def __post_init__(self):
        grading = tuple(int(g) % 2 for g in self.grading)
        W = np.asarray(self.W, dtype=np.int64)
        J = np.asarray(self.J, dtype=np.int64)
        object.__setattr__(self, "grading", grading)
        object.__setattr__(self, "W", W)
        object.__setattr__(self, "J", J)
        n = len(grading)
        for name, A in (("W", W), ("J", J)):
            if A.shape != (n, n):
                raise ValueError(f"{name} must be {n}x{n}, got {A.shape}")
            g = np.array(grading)
            if np.any(A[g[:, None] != g[None, :]]):
                raise ValueError(f"{name} does not preserve the Z/2 grading")
        if not np.array_equal(J @ J, np.eye(n, dtype=np.int64)):
            raise ValueError("J is not an involution")


@dataclass(frozen=True)
class DegreeReport:
    value: int
    method: Method
    inputs: dict[str, Any] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()
    rationale: str = ""

    def __post_init__(self):
        if self.value < 0 or self.value % 2 != 1:
            raise ValueError(f"|deg| must be a nonnegative odd integer, got {self.value}")

    def to_json(self) -> dict[str, Any]:
        return {
            "invariant": "deg",
            "value": self.value,
            "method": self.method.value,
            "inputs": dict(self.inputs),
            "obstruction": lspace_obstruction(self).value,
            "warnings": list(self.warnings),
        }


def lefschetz_number(g: GradedEndomorphismPair) -> int:
    """Alternating trace of ``J (W - 1)``: even basis vectors count +, odd -."""
    n = len(g.grading)
    A = g.J @ (g.W - np.eye(n, dtype=np.int64))
    signs = np.array([-1 if p else 1 for p in g.grading], dtype=np.int64)
    return int(signs @ np.diag(A)) if n else 0


def lefschetz_degree(g: GradedEndomorphismPair) -> DegreeReport:
    L = lefschetz_number(g)
    return DegreeReport(abs(1 + 2 * L), Method.LEFSCHETZ_GENERAL, {"rank": len(g.grading), "lefschetz": L})


# -- explicit models ------------------------------------------------------


def free_swap(n: int) -> np.ndarray:
    """Permutation matrix swapping basis vectors 2i and 2i+1 (n even)."""
    if n % 2:
        raise ValueError("a free involution needs an even number of basis vectors")
    P = np.zeros((n, n), dtype=np.int64)
    for i in range(0, n, 2):
        P[i, i + 1] = P[i + 1, i] = 1
    return P


def induced_on_quotient(P: np.ndarray) -> np.ndarray:
    """Matrix of a permutation on ``Z^n / <(1, ..., 1)>`` in the basis ``e_i - e_n``.

    The image of ``e_i - e_n`` is ``e_{s(i)} - e_{s(n)}``, which is written back as
    ``(e_{s(i)} - e_n) - (e_{s(n)} - e_n)``.
    """
    n = P.shape[0]
    perm = [int(np.flatnonzero(P[:, i])[0]) for i in range(n)]
    Q = np.zeros((n - 1, n - 1), dtype=np.int64)
    last = perm[n - 1]
    for i in range(n - 1):
        if perm[i] != n - 1:
            Q[perm[i], i] += 1
        if last != n - 1:
            Q[last, i] -= 1
    return Q


def even_free_model(k: int) -> GradedEndomorphismPair:
    """Rank 2k in even degree, J a free basis permutation, W = J."""
    J = free_swap(2 * k)
    return GradedEndomorphismPair((0,) * (2 * k), J, J)


def odd_quotient_model(k: int) -> GradedEndomorphismPair:
    """``Z^{2k} / <(1, ..., 1)>`` in odd degree with the induced involution, W = J."""
    if k < 1:
        raise ValueError("the quotient model needs k >= 1")
    J = induced_on_quotient(free_swap(2 * k))
    return GradedEndomorphismPair((1,) * (2 * k - 1), J, J)


def summary_model(s: FloerSummary) -> GradedEndomorphismPair:
    """A graded module with involution realizing a summary, W = J (mapping torus)."""
    if s.z2_grading == "even":
        k = s.anti_invariant_euler
        J = np.eye(s.total_rank, dtype=np.int64)
        if k:
            J[: 2 * k, : 2 * k] = free_swap(2 * k)
        return GradedEndomorphismPair((0,) * s.total_rank, J, J)
    if s.z2_grading == "odd" and s.total_rank == 2 * (-s.anti_invariant_euler) - 1:
        return odd_quotient_model(-s.anti_invariant_euler)
    raise ValueError(f"no explicit matrix model for {s}")


# -- specializations ------------------------------------------------------


def deg_montesinos_mapping_torus(s: FloerSummary, inputs: dict[str, Any] | None = None) -> DegreeReport:
    """|1 + 4 chi| for the mapping torus of the Montesinos involution."""
    return DegreeReport(
        abs(1 + 4 * s.anti_invariant_euler),
        Method.MONTESINOS_CHI,
        dict(inputs or {}),
        tuple(s.warnings),
    )


def deg_brieskorn(p: int, q: int, r: int) -> DegreeReport:
    """Montesinos-chi value for Sigma(p, q, r) from its graded root."""
    s = brieskorn_summary(p, q, r)
    return deg_montesinos_mapping_torus(s, {"p": p, "q": q, "r": r})


def brieskorn_family_k(r: int) -> tuple[int, int]:
    """``(k, sign)`` with r = 12k + 1 or 12k + 5 (sign +1) or 12k - 1 or 12k - 5 (sign -1)."""
    if r < 1 or gcd(r, 6) != 1:
        raise ValueError("r must be a positive integer coprime to 6")
    rem = r % 12
    if rem in (1, 5):
        return (r - rem) // 12, 1
    return (r + 12 - rem) // 12, -1


def deg_brieskorn_closed_form(r: int) -> DegreeReport:
    k, sign = brieskorn_family_k(r)
    return DegreeReport(4 * k + sign, Method.CLOSED_FORM, {"p": 2, "q": 3, "r": r})


TORUS_RATIONALE = "the circle-action involution induces the identity on HM, so W_* = 1 and the trace vanishes"


def deg_torus_knot(p: int, q: int) -> DegreeReport:
    """|deg(T(p, q))| for odd coprime p, q, evaluated with W = J = 1 on HM(Sigma(2, p, q))."""
    if p % 2 == 0 or q % 2 == 0:
        raise ValueError("torus knot parameters must be odd")
    if p < 3 or q < 3 or gcd(p, q) != 1:
        raise ValueError("torus knot parameters must be coprime and at least 3")
    root = graded_root(tau_sequence_brieskorn(2, p, q))
    grading: list[int] = []
    for _, count, _fixed in level_modules(root):
        grading += [0] * (count - 1)
    ident = np.eye(len(grading), dtype=np.int64)
    report = lefschetz_degree(GradedEndomorphismPair(tuple(grading), ident, ident))
    return DegreeReport(
        report.value,
        Method.TORUS_KNOT,
        {"p": p, "q": q, "hm_rank": len(grading)},
        rationale=TORUS_RATIONALE,
    )


def deg_twist_roll_spin(base: DegreeReport, m: int, n: int) -> DegreeReport:
    """Carry |deg(K)| over to tau^m rho^n K when m + 2n = 2 (mod 4)."""
    if (m + 2 * n) % 4 != 2:
        raise TransferError(f"transfer rule inapplicable: m + 2n = {m + 2 * n} is not 2 mod 4")
    inputs = {"base": base.method.value, **base.inputs, "m": m, "n": n}
    return DegreeReport(base.value, Method.TRANSFER, inputs, base.warnings)


def lspace_obstruction(d: DegreeReport) -> Obstruction:
    """|deg| != 1 rules out a punctured L-space Seifert solid."""
    return Obstruction.INCONCLUSIVE if d.value == 1 else Obstruction.OBSTRUCTED


def brieskorn_row(r: int) -> dict[str, Any]:
    """One row of the Sigma(2, 3, r) family table."""
    # Sigma(2, 3, 1) is the 3-sphere: trivial root
    s = FloerSummary(0, "even", 0) if r == 1 else brieskorn_summary(2, 3, r)
    chi_value = deg_montesinos_mapping_torus(s).value
    closed = deg_brieskorn_closed_form(r).value
    return {
        "r": r,
        "rank": s.total_rank,
        "grading": s.z2_grading,
        "chi_anti": s.anti_invariant_euler,
        "deg_chi": chi_value,
        "deg_closed": closed,
        "agree": chi_value == closed,
    }


def family_rows(r_values: Sequence[int]) -> list[dict[str, Any]]:
    return [brieskorn_row(r) for r in r_values]
