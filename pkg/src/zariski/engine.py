"""Zariski decompositions, their denominators, and integrality scans.

``zariski_decompose`` grows the support of the negative part one round at
a time; ``oracle_decompose`` checks the three defining conditions on every
subset of the support of ``D``.  The two share no solver code: the first
uses Bareiss elimination and the congruence signature, the second Cramer's
rule and Sylvester's criterion.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

from .lattice import (
    Divisor,
    DomainError,
    SurfaceLattice,
    as_divisor,
    denominator,
    is_effective,
    is_negative_definite,
    pair,
    signature,
)
from .linalg import bareiss_det, principal_submatrix, solve


class PreconditionError(DomainError):
    pass


class NotAFiberError(DomainError):
    pass


class InvariantBreach(RuntimeError):
    """An internal consistency check failed; the lattice or code is broken."""


@dataclass(frozen=True)
class ZariskiResult:
    P: Divisor
    N: Divisor
    support_N: tuple[int, ...]
    denominator: int
    iterations: int
    realizable: bool

    @property
    def integral(self) -> bool:
        return self.denominator == 1

    def same_decomposition(self, other: "ZariskiResult") -> bool:
        return (self.P, self.N, self.support_N, self.denominator) == (
            other.P,
            other.N,
            other.support_N,
            other.denominator,
        )


def _result(lat: SurfaceLattice, D: Divisor, N: Divisor, iterations: int) -> ZariskiResult:
    P = tuple(d - a for d, a in zip(D, N))
    return ZariskiResult(
        P=P,
        N=N,
        support_N=tuple(i for i, a in enumerate(N) if a > 0),
        denominator=denominator(N),
        iterations=iterations,
        realizable=lat.hodge.passes,
    )


def _checked_divisor(lat: SurfaceLattice, D) -> Divisor:
    D = as_divisor(D)
    if len(D) != lat.rank:
        raise DomainError(f"divisor has {len(D)} coefficients, lattice rank is {lat.rank}")
    if not is_effective(D):
        raise DomainError(f"divisor {tuple(map(str, D))} is not effective")
    return D


def _scaled(lat: SurfaceLattice, D: Divisor) -> tuple[int, list[int]]:
    """``(s, [s * (D . C_j)])`` with ``s`` the denominator of ``D``; keeps the hot loops integral."""
    s = denominator(D)
    Dz = [int(c * s) for c in D]
    return s, [sum(g * d for g, d in zip(row, Dz)) for row in lat.gram]


def zariski_decompose(lat: SurfaceLattice, D) -> ZariskiResult:
    """Zariski decomposition ``D = P + N`` of an effective divisor.

    Start from ``N = 0``; each round adds every curve meeting ``D - N``
    negatively to the support ``S`` and re-solves ``(D - N) . C_j = 0`` for
    ``j`` in ``S``.  Stops when ``D - N`` is nef on all declared curves.
    """
    D = _checked_divisor(lat, D)
    n = lat.rank
    gram = lat.gram
    s, D_dots = _scaled(lat, D)
    X: list = [0] * n  # s * N
    support: list[int] = []
    rounds = 0
    while True:
        new = [
            j
            for j in range(n)
            if j not in support and D_dots[j] - sum(gram[j][k] * X[k] for k in support) < 0
        ]
        if not new:
            break
        rounds += 1
        if rounds > n:
            raise InvariantBreach(f"support loop exceeded {n} rounds")
        support = sorted(support + new)
        if not is_negative_definite(lat, support):
            raise InvariantBreach(f"support {support} is not negative definite")
        x = solve(principal_submatrix(gram, support), [D_dots[j] for j in support])
        for j, v in zip(support, x):
            if v < 0:
                raise InvariantBreach(f"negative part has coefficient {v / s} on curve {j}")
            X[j] = v
    N = tuple(Fraction(v) / s for v in X)
    return _result(lat, D, N, rounds)


@lru_cache(maxsize=65536)
def _sylvester_negative_definite(block: tuple[tuple[int, ...], ...]) -> bool:
    # (-1)^k * (k-th leading minor) > 0 for all k
    return all(
        (-1) ** k * bareiss_det([row[:k] for row in block[:k]]) > 0
        for k in range(1, len(block) + 1)
    )


def _cramer(block, rhs: Sequence[int]) -> list[Fraction]:
    det = bareiss_det(block)
    return [
        Fraction(bareiss_det([row[:i] + (c,) + row[i + 1:] for row, c in zip(block, rhs)]), det)
        for i in range(len(block))
    ]


def oracle_decompose(lat: SurfaceLattice, D) -> ZariskiResult:
    """Brute-force Zariski decomposition over all subsets of ``supp(D)``.

    A subset ``S`` yields a candidate when its Gram block is negative
    definite, the solution of ``(D - N) . C_j = 0`` on ``S`` is strictly
    positive there and ``D - N`` meets every declared curve non-negatively.
    Exactly one candidate must survive.
    """
    D = _checked_divisor(lat, D)
    n = lat.rank
    gram = lat.gram
    s, D_dots = _scaled(lat, D)
    supp = [i for i in range(n) if D[i] > 0]
    candidates = []
    for k in range(len(supp) + 1):
        for S in itertools.combinations(supp, k):
            block = tuple(tuple(gram[i][j] for j in S) for i in S)
            if not _sylvester_negative_definite(block):
                continue
            x = _cramer(block, [D_dots[j] for j in S])  # s * N on S
            if any(v <= 0 for v in x):
                continue
            if all(D_dots[j] - sum(gram[j][i] * v for i, v in zip(S, x)) >= 0 for j in range(n)):
                N = [Fraction(0)] * n
                for j, v in zip(S, x):
                    N[j] = v / s
                candidates.append(tuple(N))
    if len(candidates) != 1:
        what = "no candidate" if not candidates else f"multiple candidates ({len(candidates)})"
        raise InvariantBreach(f"oracle found {what} for D={tuple(map(str, D))}")
    return _result(lat, D, candidates[0], 0)


def rank2_closed_form(lat: SurfaceLattice, m1: int, m2: int) -> ZariskiResult:
    """Decomposition of ``m1*C1 + m2*C2`` when it meets the negative ``C1`` negatively.

    ``P = m2 * ((C1.C2)/(-C1^2) * C1 + C2)`` and
    ``N = (m1 - m2 * (C1.C2)/(-C1^2)) * C1``.
    """
    if lat.rank != 2:
        raise PreconditionError("closed form needs rank 2")
    if m1 < 1 or m2 < 1:
        raise PreconditionError("m1 and m2 must be positive integers")
    (c11, c12), (_, c22) = lat.gram
    if c11 >= 0:
        raise PreconditionError(f"C1^2 = {c11} is not negative")
    if c11 * c22 - c12 * c12 > 0:
        raise PreconditionError("I(C1, C2) is negative definite")
    if c11 * m1 + c12 * m2 >= 0:
        raise PreconditionError(f"D({m1},{m2}) . C1 = {c11 * m1 + c12 * m2} is not negative")
    ratio = Fraction(c12, -c11)
    P = (m2 * ratio, Fraction(m2))
    N = (m1 - m2 * ratio, Fraction(0))
    return ZariskiResult(
        P=P,
        N=N,
        support_N=(0,),
        denominator=denominator(N),
        iterations=1,
        realizable=lat.hodge.passes,
    )


@dataclass(frozen=True)
class DivisibilityEntry:
    negative: int
    other: int
    self_intersection: int
    intersection: int
    divides: bool


@dataclass(frozen=True)
class DivisibilityReport:
    entries: tuple[DivisibilityEntry, ...]
    holds: bool
    # some non-negative-definite pair fails divisibility: on a blow-up of the
    # plane at very general points this contradicts the SHGH conjecture
    falsifies_shgh: bool


def divisibility_criterion(lat: SurfaceLattice) -> DivisibilityReport:
    """Check ``C^2 | C.D`` for every negative curve ``C`` and every other curve ``D``
    spanning a non-negative-definite pair with it (a necessary condition for
    all decompositions being integral)."""
    entries = []
    for i in lat.negative_curves:
        for j in range(lat.rank):
            if j == i or is_negative_definite(lat, (i, j)):
                continue
            c2, cd = lat.gram[i][i], lat.gram[i][j]
            entries.append(DivisibilityEntry(i, j, c2, cd, cd % c2 == 0))
    holds = all(e.divides for e in entries)
    return DivisibilityReport(tuple(entries), holds, not holds)


@dataclass(frozen=True)
class ScanReport:
    max_denominator: int
    witness: tuple[int, ...]
    d1_verdict: bool
    grid_bound: int
    b_observed: int


def _scan_chunk(lat: SurfaceLattice, M: int, firsts: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    best, witness = 0, None
    rest = [range(M + 1)] * (lat.rank - 1)
    for first in firsts:
        for tail in itertools.product(*rest):
            D = (first,) + tail
            den = zariski_decompose(lat, D).denominator
            if den > best:
                best, witness = den, D
    return best, witness


def d1_scan(lat: SurfaceLattice, M: int, workers: int = 1) -> ScanReport:
    """Largest Zariski denominator over all integer divisors in ``[0, M]^rank``.

    The grid is walked lexicographically, so the witness is the
    lexicographically smallest divisor attaining the maximum.  With
    ``workers > 1`` the first coordinate is split into contiguous blocks
    and the partial results are merged in the same order.
    """
    if M < 1:
        raise PreconditionError("grid bound must be >= 1")
    firsts = list(range(M + 1))
    if workers <= 1:
        parts = [_scan_chunk(lat, M, firsts)]
    else:
        size = -(-len(firsts) // workers)
        blocks = [firsts[i:i + size] for i in range(0, len(firsts), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, [lat] * len(blocks), [M] * len(blocks), blocks))
    best, witness = min(parts, key=lambda p: (-p[0], p[1]))
    return ScanReport(
        max_denominator=best,
        witness=witness,
        d1_verdict=best == 1,
        grid_bound=M,
        b_observed=max((-lat.gram[i][i] for i in lat.negative_curves), default=0),
    )


def single_negative_denominator_bound(lat: SurfaceLattice) -> int:
    """Supremum of Zariski denominators on a rank-2 lattice with one negative curve:
    ``-C^2 / gcd(-C^2, C.D)``."""
    if lat.rank != 2:
        raise PreconditionError("bound needs rank 2")
    neg = lat.negative_curves
    if len(neg) != 1:
        raise PreconditionError(f"need exactly one negative curve, found {len(neg)}")
    if is_negative_definite(lat, (0, 1)):
        raise PreconditionError("I(C1, C2) is negative definite")
    i = neg[0]
    p, q = -lat.gram[i][i], lat.gram[i][1 - i]
    return p // gcd(p, q)


@dataclass(frozen=True)
class FiberVerdict:
    fiber_square: Fraction
    semidefinite: bool
    radical_is_fiber: bool
    residual_square: Fraction | None
    first_component_square: int
    passes: bool


def fiber_semidefinite_check(lat: SurfaceLattice, mult: Sequence[int]) -> FiberVerdict:
    """Zariski's lemma for ``F = sum m_i C_i`` viewed as a fibre.

    ``F`` must satisfy ``F^2 = 0`` and ``F.C_i = 0``; the form must be
    negative semidefinite with a one-dimensional radical (spanned by ``F``);
    with two or more components ``(F - m_1 C_1)^2 < 0`` and ``C_1^2 < 0``.
    """
    mult = tuple(int(m) for m in mult)
    if len(mult) != lat.rank or any(m < 1 for m in mult):
        raise PreconditionError(f"need {lat.rank} positive multiplicities, got {mult}")
    F = as_divisor(mult)
    f2 = pair(lat, F, F)
    if f2 != 0:
        raise NotAFiberError(f"not a fiber configuration: F^2 = {f2}")
    for i, v in enumerate(lat.dot_curves(F)):
        if v != 0:
            raise NotAFiberError(f"not a fiber configuration: F.{lat.curve_names[i]} = {v}")
    sig = signature(lat)
    semidefinite = sig.n_pos == 0
    radical = sig.n_zero == 1
    residual = None
    c11 = lat.gram[0][0]
    ok = semidefinite and radical
    if lat.rank >= 2:
        R = (F[0] - mult[0],) + F[1:]
        residual = pair(lat, R, R)
        ok = ok and residual < 0 and c11 < 0
    return FiberVerdict(f2, semidefinite, radical, residual, c11, ok)
