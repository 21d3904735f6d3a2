"""Rank-2 lattice families and consistency checks for negative curves.

The K3 classifier only speaks about lattices: a valid ``(a, b)`` is a
candidate form, not a claim that some K3 surface realizes it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .engine import PreconditionError
from .lattice import SurfaceLattice, as_divisor, is_negative_definite, pair
from .linalg import bareiss_det, principal_submatrix


@dataclass(frozen=True)
class K3FormR2:
    """The form ``[[a, b], [b, -2]]`` with one verdict per constraint."""

    a: int
    b: int
    a_in_family: bool
    parity_positivity: bool
    hodge: bool
    divisibility: bool
    label: str = field(default="candidate form", compare=False)

    @property
    def valid(self) -> bool:
        return self.a_in_family and self.parity_positivity and self.hodge and self.divisibility

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.b, -2))

    def lattice(self) -> SurfaceLattice:
        return SurfaceLattice(self.gram, ("C1", "C2"), name=f"k3-a{self.a}-b{self.b}")


def classify_k3_rank2(a: int, b: int) -> K3FormR2:
    s = a + b
    # C1 only has to divide b when it is itself a negative curve
    negative_diagonal = [d for d in (a, -2) if d < 0]
    return K3FormR2(
        a=a,
        b=b,
        a_in_family=a in (0, -2),
        parity_positivity=s > 0 and s % 2 == 0,
        hodge=-2 * a - b * b < 0,
        divisibility=all(b % d == 0 for d in negative_diagonal),
    )


def enumerate_k3_rank2(B: int) -> list[K3FormR2]:
    """Valid forms with ``0 < b <= B``, ordered by ``a`` descending then ``b``."""
    if B < 2:
        raise PreconditionError("B must be >= 2")
    forms = (classify_k3_rank2(a, b) for a in range(B, -B - 1, -1) for b in range(1, B + 1))
    return [f for f in forms if f.valid]


def ruled_lattice(e: int) -> SurfaceLattice:
    """Section ``C0`` with ``C0^2 = -e`` and fibre ``f`` of a ruled surface with invariant ``e``."""
    if e < 1:
        raise PreconditionError("e must be >= 1")
    return SurfaceLattice(((-e, 1), (1, 0)), ("C0", "f"), name=f"ruled-e{e}")


def elliptic_section_lattice(chi: int) -> SurfaceLattice:
    """Section ``C`` with ``C^2 = -chi(O_X)`` and fibre ``f`` of an elliptic fibration."""
    if chi < 1:
        raise PreconditionError("chi must be >= 1")
    return SurfaceLattice(((-chi, 1), (1, 0)), ("C", "f"), name=f"elliptic-chi{chi}")


ELLIPTIC_NOTE = "chi(O_X) = 1 - q + p_g, so chi = 1 is the same as q = p_g"


@dataclass(frozen=True)
class ThirdCurveVerdict:
    kind: str  # existing | consistent | impossible | outside
    square: Fraction
    pairings: tuple[Fraction, Fraction]
    violated: tuple[tuple[int, Fraction], ...] = ()

    @property
    def message(self) -> str:
        return {
            "existing": "is an existing negative curve",
            "consistent": "not negative, consistent",
            "impossible": "cannot be an irreducible curve",
            "outside": "outside NE-bar, not effective in this model",
        }[self.kind]


def third_negative_curve_check(lat: SurfaceLattice, v3: Iterable[int]) -> ThirdCurveVerdict:
    """Can ``v3`` be a third negative curve next to the two basis curves?

    The basis curves span the closed cone of curves, so the coordinates of
    ``v3`` are its cone coefficients.  An interior class with negative square
    meets one of ``C1``, ``C2`` negatively, which two distinct irreducible
    curves never do.
    """
    if lat.rank != 2:
        raise PreconditionError("third-curve check needs rank 2")
    if len(lat.negative_curves) != 2:
        raise PreconditionError("both basis curves must be negative")
    v = as_divisor(v3)
    if len(v) != 2 or any(c.denominator != 1 for c in v):
        raise PreconditionError("v3 must be two integers")
    sq = pair(lat, v, v)
    dots = (pair(lat, lat.curve(0), v), pair(lat, lat.curve(1), v))
    a1, a2 = v
    if (a1 > 0 and a2 == 0) or (a1 == 0 and a2 > 0):
        return ThirdCurveVerdict("existing", sq, dots)
    if sq >= 0:
        return ThirdCurveVerdict("consistent", sq, dots)
    if a1 > 0 and a2 > 0:
        violated = tuple((i, d) for i, d in enumerate(dots) if d < 0)
        return ThirdCurveVerdict("impossible", sq, dots, violated)
    return ThirdCurveVerdict("outside", sq, dots)


def determinant_question_check(lat: SurfaceLattice, subset: Iterable[int]) -> tuple[int, bool]:
    """``(det, det == (-1)^k)`` for a negative definite set of ``k`` curves."""
    idx = sorted(set(subset))
    if not is_negative_definite(lat, idx):
        raise PreconditionError(f"curves {idx} are not negative definite")
    det = bareiss_det(principal_submatrix(lat.gram, idx))
    return det, det == (-1) ** len(idx)
