from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import assume, given

from zariski.lattice import (
    LatticeError,
    SurfaceLattice,
    genus_from_adjunction,
    hodge_index_check,
    is_negative_definite,
    negativity_bound_check,
    pair,
    signature,
)

from oracles import descartes_signature, leibniz_det
from strategies import lattices

K3 = SurfaceLattice(((-2, 4), (4, -2)))


def test_pair_examples():
    assert pair(K3, (1, 0), (0, 1)) == 4
    assert pair(K3, (1, 1), (1, 1)) == 4
    assert pair(K3, (0, 0), (3, Fraction(1, 7))) == 0


def test_pair_dimension_mismatch():
    with pytest.raises(LatticeError, match="length"):
        pair(K3, (1, 0, 0), (1, 0))


@pytest.mark.parametrize(
    "gram, expected",
    [
        ([[-1, 0], [0, -1]], (0, 2, 0)),
        ([[-2, 4], [4, -2]], (1, 1, 0)),
        ([[0, 1], [1, 0]], (1, 1, 0)),
        ([[0, 0], [0, 0]], (0, 0, 2)),
        ([[-2, 2], [2, -2]], (0, 1, 1)),
    ],
)
def test_signature_examples(gram, expected):
    assert tuple(signature(SurfaceLattice(gram))) == expected
    assert tuple(signature(gram)) == descartes_signature(gram)


@pytest.mark.parametrize(
    "gram, subset, expected",
    [
        ([[-1]], [0], True),
        ([[-2, 1], [1, -2]], [0, 1], True),
        ([[-2, 4], [4, -2]], [0, 1], False),
        ([[-2, 4], [4, -2]], [1], True),
        ([[0, 4], [4, -2]], [], True),
    ],
)
def test_is_negative_definite_examples(gram, subset, expected):
    assert is_negative_definite(SurfaceLattice(gram), subset) is expected


@pytest.mark.parametrize(
    "gram, passes, det",
    [([[-2, 4], [4, -2]], True, -12), ([[-2, 1], [1, -2]], False, 3), ([[0, 2], [2, -2]], True, -4)],
)
def test_hodge_index_examples(gram, passes, det):
    v = hodge_index_check(SurfaceLattice(gram))
    assert (v.passes, v.det) == (passes, det)


def test_hodge_rank2_is_det_negative():
    for a in range(-4, 3):
        for b in range(0, 5):
            for c in range(-4, 3):
                lat = SurfaceLattice(((a, b), (b, c)))
                assert hodge_index_check(lat).passes == (a * c - b * b < 0)


@pytest.mark.parametrize(
    "gram, message",
    [
        ([[-2, -1], [-1, 0]], "off-diagonal must be ≥ 0"),
        ([[-2, 1], [2, 0]], "not symmetric"),
        ([[-2, 1]], "square"),
        ([], "rank"),
    ],
)
def test_lattice_validation(gram, message):
    with pytest.raises(LatticeError, match=message):
        SurfaceLattice(gram)


def test_duplicate_names_rejected():
    with pytest.raises(LatticeError, match="distinct"):
        SurfaceLattice(((-1, 0), (0, -1)), ("C", "C"))


def test_genus_examples():
    assert genus_from_adjunction(-2, 0) == 0
    assert genus_from_adjunction(-1, -1) == 0
    with pytest.raises(LatticeError, match="parity"):
        genus_from_adjunction(-2, 1)
    with pytest.raises(LatticeError, match="negative genus"):
        genus_from_adjunction(-4, 0)


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_genus_adjunction_identity(c2, kc):
    assume((c2 + kc) % 2 == 0 and c2 + kc >= -2)
    assert 2 * genus_from_adjunction(c2, kc) - 2 == c2 + kc


def test_negativity_bound_examples():
    assert negativity_bound_check(-2, 2)
    assert not negativity_bound_check(-2, 0)
    assert negativity_bound_check(-4, 3)
    assert not negativity_bound_check(0, 5)


vectors = st.lists(st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5)), min_size=4, max_size=4)


@given(lattices(), vectors, vectors, vectors, st.integers(-5, 5))
def test_pair_bilinear_symmetric(lat, u, v, w, t):
    n = lat.rank
    u, v, w = u[:n], v[:n], w[:n]
    assert pair(lat, u, v) == pair(lat, v, u)
    uw = [a + t * b for a, b in zip(u, w)]
    assert pair(lat, uw, v) == pair(lat, u, v) + t * pair(lat, w, v)


@given(lattices(), st.randoms(use_true_random=False))
def test_signature_invariant_under_permutation(lat, r):
    perm = list(range(lat.rank))
    r.shuffle(perm)
    assert signature(lat.permuted(perm)) == signature(lat)


@st.composite
def unimodular(draw, n):
    """Product of elementary integer matrices with entries kept in [-3, 3]."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, 6))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if i == j:
            U[i] = [-v for v in U[i]]
            continue
        c = draw(st.integers(-2, 2))
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
    assume(all(abs(v) <= 3 for row in U for v in row))
    return U


@given(st.data())
def test_signature_invariant_under_unimodular_congruence(data):
    lat = data.draw(lattices())
    n = lat.rank
    U = data.draw(unimodular(n))
    assert abs(leibniz_det(U)) == 1
    G = lat.gram
    UtGU = [[sum(U[k][i] * G[k][l] * U[l][j] for k in range(n) for l in range(n)) for j in range(n)] for i in range(n)]
    # congruent forms need not have non-negative off-diagonals, so go through raw matrices
    assert tuple(signature(UtGU)) == tuple(signature(lat))


@given(lattices(), st.data())
def test_negative_definite_matches_minors_and_signature(lat, data):
    subset = sorted(data.draw(st.sets(st.integers(0, lat.rank - 1), min_size=1)))
    block = [[lat.gram[i][j] for j in subset] for i in subset]
    nd = is_negative_definite(lat, subset)
    minors = [leibniz_det([r[:k] for r in block[:k]]) for k in range(1, len(block) + 1)]
    assert nd == all((-1) ** k * m > 0 for k, m in enumerate(minors, start=1))
    assert nd == (descartes_signature(block) == (0, len(subset), 0))
