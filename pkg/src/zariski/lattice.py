"""Intersection lattices of surfaces and exact pairing arithmetic."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Iterable, Sequence

from .linalg import bareiss_det, congruence_diagonal, principal_submatrix

# A divisor is a tuple of exact rationals over the lattice's curve basis.
Divisor = tuple[Fraction, ...]


class DomainError(ValueError):
    """Base class for mathematically invalid input."""


class LatticeError(DomainError):
    """Input that cannot be an intersection lattice (or divisor on one)."""


def as_divisor(coeffs: Iterable[Fraction | int | str]) -> Divisor:
    return tuple(Fraction(c) for c in coeffs)


def denominator(d: Divisor) -> int:
    return lcm(*(c.denominator for c in d)) if d else 1


def is_effective(d: Divisor) -> bool:
    return all(c >= 0 for c in d)


@dataclass(frozen=True)
class Signature:
    n_pos: int
    n_neg: int
    n_zero: int

    def __iter__(self):
        return iter((self.n_pos, self.n_neg, self.n_zero))


@dataclass(frozen=True)
class SurfaceLattice:
    """Gram matrix of the declared irreducible curves ``C_i`` on a surface.

    ``rank`` is the Picard number of the modelled surface and ``k_dot``
    optionally records ``K_X . C_i``.
    """

    gram: tuple[tuple[int, ...], ...]
    curve_names: tuple[str, ...] = ()
    k_dot: tuple[int, ...] | None = None
    name: str = field(default="", compare=False)

    def __post_init__(self):
        gram = tuple(tuple(int(v) for v in row) for row in self.gram)
        n = len(gram)
        if n == 0:
            raise LatticeError("rank must be positive")
        if any(len(row) != n for row in gram):
            raise LatticeError("gram must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if gram[i][j] != gram[j][i]:
                    raise LatticeError(f"gram is not symmetric at ({i}, {j})")
        for i in range(n):
            for j in range(n):
                if i != j and gram[i][j] < 0:
                    raise LatticeError(f"off-diagonal must be ≥ 0, got {gram[i][j]} at ({i}, {j})")
        names = tuple(self.curve_names) or tuple(f"C{i + 1}" for i in range(n))
        if len(names) != n:
            raise LatticeError(f"expected {n} curve names, got {len(names)}")
        if any(not isinstance(s, str) or not s for s in names):
            raise LatticeError("curve names must be non-empty strings")
        if len(set(names)) != n:
            raise LatticeError("curve names must be distinct")
        k_dot = self.k_dot
        if k_dot is not None:
            k_dot = tuple(int(v) for v in k_dot)
            if len(k_dot) != n:
                raise LatticeError(f"k_dot must have length {n}")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "curve_names", names)
        object.__setattr__(self, "k_dot", k_dot)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def negative_curves(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.rank) if self.gram[i][i] < 0)

    @cached_property
    def hodge(self) -> "HodgeVerdict":
        return hodge_index_check(self)

    def curve(self, i: int) -> Divisor:
        return tuple(Fraction(int(j == i)) for j in range(self.rank))

    def dot_curves(self, d: Divisor) -> list[Fraction]:
        """``[d . C_j for every declared curve]``."""
        return [Fraction(sum(g * c for g, c in zip(row, d))) for row in self.gram]

    def permuted(self, perm: Sequence[int]) -> "SurfaceLattice":
        """Lattice with curve ``perm[i]`` moved to position ``i``."""
        return SurfaceLattice(
            gram=tuple(tuple(self.gram[p][q] for q in perm) for p in perm),
            curve_names=tuple(self.curve_names[p] for p in perm),
            k_dot=None if self.k_dot is None else tuple(self.k_dot[p] for p in perm),
            name=self.name,
        )


def pair(lat: SurfaceLattice, u: Sequence, v: Sequence) -> Fraction:
    """Intersection number ``u . v``."""
    n = lat.rank
    if len(u) != n or len(v) != n:
        raise LatticeError(f"divisor length mismatch: lattice rank {n}, got {len(u)} and {len(v)}")
    total = 0
    for ui, row in zip(u, lat.gram):
        if ui:
            total += ui * sum(g * vj for g, vj in zip(row, v))
    return Fraction(total)


def signature(lat: SurfaceLattice | Sequence[Sequence[int]]) -> Signature:
    gram = lat.gram if isinstance(lat, SurfaceLattice) else lat
    diag = congruence_diagonal(gram)
    return Signature(
        n_pos=sum(1 for d in diag if d > 0),
        n_neg=sum(1 for d in diag if d < 0),
        n_zero=sum(1 for d in diag if d == 0),
    )


def is_negative_definite(lat: SurfaceLattice, subset: Iterable[int]) -> bool:
    idx = sorted(set(subset))
    if not idx:
        return True
    if idx[0] < 0 or idx[-1] >= lat.rank:
        raise LatticeError(f"subset {idx} out of range for rank {lat.rank}")
    return _negative_definite_block(lat.gram, tuple(idx))


@lru_cache(maxsize=65536)
def _negative_definite_block(gram, idx) -> bool:
    return tuple(signature(principal_submatrix(gram, idx))) == (0, len(idx), 0)


@dataclass(frozen=True)
class HodgeVerdict:
    passes: bool
    det: int
    signature: Signature


def hodge_index_check(lat: SurfaceLattice) -> HodgeVerdict:
    """Does the form have the signature ``(1, rank - 1)`` of a surface?

    Lattices failing this are still valid input everywhere; results on
    them are flagged as not surface-realizable.
    """
    sig = signature(lat)
    return HodgeVerdict(
        passes=tuple(sig) == (1, lat.rank - 1, 0),
        det=bareiss_det(lat.gram),
        signature=sig,
    )


def genus_from_adjunction(c2: int, kc: int) -> int:
    """Arithmetic genus of an irreducible curve from ``C^2`` and ``K.C``."""
    s = c2 + kc
    if s % 2:
        raise LatticeError(f"C^2 + K.C = {s} is odd; parity violation, no such curve")
    g = 1 + s // 2
    if g < 0:
        raise LatticeError(f"C^2 + K.C = {s} gives negative genus {g}")
    return g


def negativity_bound_check(c2: int, g: int) -> bool:
    """``0 < -C^2 <= 2g - 2``, the bound for curves on a surface with ``c_2 = 0``."""
    return 0 < -c2 <= 2 * g - 2
