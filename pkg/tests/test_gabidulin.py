import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import naive_tower, span_closure, vector_rank_oracle
from rankmetric.basis import find_almost_self_dual_basis, find_self_dual_basis
from rankmetric.errors import BadDimension, DependentGenerators, RankMetricError
from rankmetric.field import make_tower
from rankmetric.gabidulin import (
    VectorCode,
    cartesian_power,
    dual_code,
    gabidulin_code,
    gram_product,
    hull,
    hull_dimension,
    is_lcd_massey,
    is_mrd,
    min_rank_distance,
    moore_matrix,
    singleton_bound,
    vector_rank,
)

GF4, GF8, GF9 = make_tower(2, 1, 2), make_tower(2, 1, 3), make_tower(3, 1, 2)


def codeword_set(C: VectorCode) -> set:
    N = naive_tower(C.tower)
    if C.k == 0:
        return {tuple([0] * C.n)}
    return span_closure(N.add, N.mul, C.tower.order, C.generator)


def dual_by_search(C: VectorCode) -> set:
    N = naive_tower(C.tower)
    out = set()
    for v in itertools.product(range(C.tower.order), repeat=C.n):
        ok = True
        for g in C.generator:
            acc = 0
            for a, b in zip(g, v):
                acc = N.add(acc, N.mul(int(a), b))
            ok = ok and acc == 0
        if ok:
            out.add(v)
    return out


def test_moore_matrix_gf4():
    assert moore_matrix(GF4, [2, 3], 2).tolist() == [[2, 3], [3, 2]]


def test_gf4_code_profile():
    C = gabidulin_code(GF4, [2, 3], 1)
    prof = min_rank_distance(C)
    assert prof.counts == {0: 1, 2: 3}
    assert is_lcd_massey(C) and hull(C).k == 0 and is_mrd(C, profile=prof)


def test_gf9_almost_self_dual_counterexample():
    B = find_almost_self_dual_basis(GF9)
    C = gabidulin_code(GF9, B.codes, 1)
    assert gram_product(C).tolist() == [[0]]
    assert not is_lcd_massey(C)
    assert hull(C) == C
    # the dual of span{(alpha, 1)} is span{(1, -alpha)}
    assert dual_code(C) == VectorCode(GF9, [[1, 6]])
    assert dual_code(C) == C


@pytest.mark.parametrize("k", [1, 2, 3])
def test_gf8_self_dual_construction(k):
    B = find_self_dual_basis(GF8)
    C = gabidulin_code(GF8, B.codes, k)
    assert np.array_equal(gram_product(C), np.eye(k, dtype=np.int64))
    assert hull(C).k == 0
    assert min_rank_distance(C).min_rank == 3 - k + 1


CASES = [(GF4, [2, 3], 1), (GF4, [1, 2], 2), (GF8, [1, 2, 4], 1), (GF8, [3, 5, 7], 2), (GF8, [1, 2], 1),
         (GF9, [3, 1], 1), (GF9, [1, 3], 2)]


@pytest.mark.parametrize("tower,g,k", CASES)
def test_rank_profile_against_brute_force(tower, g, k):
    C = gabidulin_code(tower, g, k)
    N = naive_tower(tower)
    words = codeword_set(C)
    assert len(words) == tower.order ** k
    counts: dict[int, int] = {}
    for w in words:
        r = vector_rank_oracle(N, w)
        counts[r] = counts.get(r, 0) + 1
    assert min_rank_distance(C).counts == dict(sorted(counts.items()))


@pytest.mark.parametrize("tower,g,k", CASES)
def test_dual_and_hull_against_brute_force(tower, g, k):
    C = gabidulin_code(tower, g, k)
    D = dual_code(C)
    assert codeword_set(D) == dual_by_search(C)
    assert codeword_set(hull(C)) == codeword_set(C) & codeword_set(D)
    assert hull_dimension(C) == hull(C).k
    assert is_lcd_massey(C) == (hull(C).k == 0)


def test_full_space_dual_is_zero_code():
    C = gabidulin_code(GF8, [1, 2, 4], 3)
    D = dual_code(C)
    assert D.k == 0 and D.n == 3
    assert dual_code(D) == C


def test_moore_errors():
    with pytest.raises(DependentGenerators):
        moore_matrix(GF8, [1, 1], 1)
    with pytest.raises(BadDimension):
        moore_matrix(GF4, [1, 2], 3)
    with pytest.raises(BadDimension):
        moore_matrix(GF4, [1, 2, 3], 1)
    with pytest.raises(RankMetricError):
        VectorCode(GF4, [[1, 2], [1, 2]])


def test_singleton_bound():
    assert singleton_bound(3, 1, 3) == 3
    assert singleton_bound(2, 1, 2) == 2
    assert singleton_bound(6, 2, 3) == 3
    assert singleton_bound(6, 4, 3) == 2  # square of a [3, 2] code
    assert singleton_bound(4, 2, 2) == 2  # square of a [2, 1] code stays MRD


def test_cartesian_power_mrd_only_when_square():
    C = gabidulin_code(GF8, [1, 2, 4], 2)
    assert is_mrd(C) and is_mrd(cartesian_power(C, 2))
    short = gabidulin_code(GF8, [1, 2], 1)
    assert is_mrd(short) and not is_mrd(cartesian_power(short, 2))


def test_json_round_trip():
    C = gabidulin_code(make_tower(2, 2, 2), [4, 5], 1)
    assert VectorCode.from_json(C.to_json()) == C


towers = st.sampled_from([(2, 1, 2), (2, 1, 3), (3, 1, 2), (2, 2, 2), (5, 1, 2)])


@st.composite
def codes(draw):
    T = make_tower(*draw(towers))
    n = draw(st.integers(1, 4))
    k = draw(st.integers(0, n))
    while True:
        rows = draw(st.lists(st.lists(st.integers(0, T.order - 1), min_size=n, max_size=n),
                             min_size=k, max_size=k))
        C = VectorCode.from_rows(T, rows, n)
        if C.k == k:
            return C


@given(codes(), st.data())
def test_rank_invariant_under_nonzero_scalars(C, data):
    T = C.tower
    v = data.draw(st.lists(st.integers(0, T.order - 1), min_size=1, max_size=4))
    lam = data.draw(st.integers(1, T.order - 1))
    assert vector_rank(T, T.ext.mul[lam, np.array(v)]) == vector_rank(T, v)


@given(codes())
def test_dual_is_involutive_and_complementary(C):
    D = dual_code(C)
    assert C.k + D.k == C.n
    assert dual_code(D) == C


@given(codes(), st.integers(1, 3))
def test_cartesian_dual_and_hull(C, s):
    P = cartesian_power(C, s)
    assert dual_code(P) == cartesian_power(dual_code(C), s)
    assert hull(P).k == s * hull(C).k


@given(codes(), st.data())
def test_generator_rescaling_keeps_code(C, data):
    if C.k == 0:
        return
    lam = data.draw(st.integers(1, C.tower.order - 1))
    G = C.tower.ext.mul[lam, C.generator]
    assert VectorCode(C.tower, G, C.n) == C
    assert is_lcd_massey(VectorCode(C.tower, G, C.n)) == is_lcd_massey(C)
