import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcbounds.code import (
    ABSENT,
    BinaryMatrix,
    CodewordPoly,
    ExponentMatrix,
    WeightMatrix,
    avg_weight,
    codeword_weight,
    degree_distribution,
    design_rate,
    expand,
    random_exponent_matrix,
    sort_columns_ascending,
    syndrome,
    syndrome_consistency_check,
    weight_matrix_from_degrees,
    weight_of,
)
from qcbounds.ring import all_ones

from conftest import EXAMPLE1_EXPANDED, X, poly

LAMBDA_WEIGHTS = [2] * 12 + [3] * 24 + [4] * 12


def test_weight_of(example1):
    assert weight_of(example1).entries == ((0, 1, 1), (1, 0, 1))
    assert weight_of(ExponentMatrix(2, [[X, X], [X, X]])).entries == ((0, 0), (0, 0))
    assert weight_of(ExponentMatrix(1, [[0]])).entries == ((1,),)


def test_expand_golden(example1):
    H = expand(example1)
    assert (H.rows, H.cols) == (6, 9)
    assert H.to_lists() == EXAMPLE1_EXPANDED


def test_expand_small():
    assert expand(ExponentMatrix(3, [[0]])).to_lists() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert expand(ExponentMatrix(2, [[X]])).to_lists() == [[0, 0], [0, 0]]


def test_syndrome_examples(example1):
    word = CodewordPoly(3, [poly(3, 1), poly(3, 1), poly(3, 2)])
    assert all(p.is_zero() for p in syndrome(example1, word))
    assert all(p.is_zero() for p in syndrome(example1, CodewordPoly.zero(3, 3)))
    single = ExponentMatrix(2, [[0]])
    assert syndrome(single, CodewordPoly(2, [poly(2, 0)]))[0].support == {0}


def test_consistency_examples(example1):
    assert syndrome_consistency_check(example1, CodewordPoly(3, [poly(3, 1), poly(3, 1), poly(3, 2)]))
    assert not syndrome_consistency_check(example1, CodewordPoly(3, [poly(3, 0), poly(3), poly(3)]))
    assert syndrome_consistency_check(example1, CodewordPoly.zero(3, 3))


def test_syndrome_mismatch(example1):
    with pytest.raises(ValueError):
        syndrome(example1, CodewordPoly.zero(2, 3))
    with pytest.raises(ValueError):
        syndrome(example1, CodewordPoly.zero(3, 4))


def test_codeword_weight():
    assert codeword_weight(CodewordPoly(3, [poly(3, 1), poly(3, 1), poly(3, 2)])) == 3
    assert codeword_weight(CodewordPoly.zero(4, 3)) == 0
    f = all_ones(5)
    assert codeword_weight(CodewordPoly(5, [f, f, poly(5)])) == 10


def test_design_rate():
    assert design_rate(WeightMatrix([[0, 1, 1], [1, 0, 1]])) == Fraction(1, 3)
    assert design_rate(WeightMatrix([[1] * 3] * 3)) == 0
    assert design_rate(WeightMatrix([[1] * 4] * 2)) == Fraction(1, 2)


def test_sort_columns():
    wm, perm = sort_columns_ascending(WeightMatrix([[1, 0], [1, 1]]))
    assert wm.entries == ((0, 1), (1, 1)) and perm == (1, 0)
    wm, perm = sort_columns_ascending(WeightMatrix([[0, 1], [1, 1]]))
    assert perm == (0, 1)
    wm, perm = sort_columns_ascending(WeightMatrix([[1, 1], [1, 1]]))
    assert perm == (0, 1) and wm.entries == ((1, 1), (1, 1))


def test_degree_distribution():
    assert degree_distribution(WeightMatrix([[0, 1, 1], [1, 0, 1]])).counts == {1: 2, 2: 1}
    assert degree_distribution(WeightMatrix([[1] * 4] * 3)).counts == {3: 4}
    assert degree_distribution(WeightMatrix([[0, 0], [0, 0]])).counts == {0: 2}


def lambda_matrix():
    return weight_matrix_from_degrees({2: 12, 3: 24, 4: 12}, m=24)


def test_lambda_fixture_matches_generator():
    from qcbounds.formats import bundled, parse_weight_matrix

    with open(bundled("lambda_12_24_12.txt")) as fh:
        assert parse_weight_matrix(fh.read()) == lambda_matrix()
    dd = degree_distribution(lambda_matrix())
    assert dd.counts == {2: 12, 3: 24, 4: 12}
    assert dd.polynomial() == "12x^2+24x^3+12x^4"


def test_avg_weight_examples():
    wm, _ = sort_columns_ascending(lambda_matrix())
    # independent: mean over the explicit weight list
    expected = Fraction(sum(LAMBDA_WEIGHTS[1:48]), 47)
    assert expected == Fraction(142, 47)
    assert avg_weight(wm, 2, 48) == Fraction(142, 47)
    assert avg_weight(wm, 2, 12) == 2
    assert avg_weight(wm, 2, 3) == 2
    assert avg_weight(wm, 2, 2) == 2


def test_avg_weight_errors():
    wm, _ = sort_columns_ascending(lambda_matrix())
    with pytest.raises(ValueError):
        avg_weight(wm, 0, 3)
    with pytest.raises(ValueError):
        avg_weight(wm, 5, 3)
    with pytest.raises(ValueError):
        avg_weight(wm, 2, 49)
    with pytest.raises(ValueError):
        avg_weight(lambda_matrix(), 2, 3)  # not sorted


def test_validation():
    with pytest.raises(ValueError):
        WeightMatrix([[0, 2]])
    with pytest.raises(ValueError):
        WeightMatrix([[0, 1], [1]])
    with pytest.raises(ValueError):
        WeightMatrix([])
    with pytest.raises(ValueError):
        ExponentMatrix(3, [[3]])
    with pytest.raises(ValueError):
        ExponentMatrix(0, [[X]])


seeds = st.integers(0, 2**32 - 1)


def sample(seed, max_m=4, max_extra=4, max_s=12):
    rng = random.Random(seed)
    m = rng.randint(1, max_m)
    n = rng.randint(1, m + max_extra)
    s = rng.randint(1, max_s)
    return rng, random_exponent_matrix(rng, m, n, s, density=rng.random(), min_col_weight=0)


@given(seeds)
def test_expand_first_columns_round_trip(seed):
    _, em = sample(seed)
    H = expand(em)
    s = em.s
    for i in range(em.m):
        for j in range(em.n):
            col = [H[i * s + r, j * s] for r in range(s)]
            a = em.entries[i][j]
            assert col == [int(a is not ABSENT and r == a) for r in range(s)]


@given(seeds)
def test_polynomial_and_binary_syndromes_agree(seed):
    rng, em = sample(seed)
    word = CodewordPoly.from_bits(rng.getrandbits(em.n * em.s), em.n, em.s)
    poly_zero = all(p.is_zero() for p in syndrome(em, word))
    bin_zero = expand(em).mul_vector(word.to_bits()) == 0
    assert poly_zero == bin_zero == syndrome_consistency_check(em, word)


def brute_codewords(em):
    H = expand(em)
    N = H.cols
    return [v for v in range(1, 1 << N) if H.mul_vector(v) == 0]


@settings(max_examples=40)
@given(seeds, st.integers(0, 20))
def test_quasi_cyclic_shift(seed, t):
    rng = random.Random(seed)
    m = rng.randint(1, 2)
    em = random_exponent_matrix(rng, m, rng.randint(m + 1, 4), rng.randint(2, 4))
    for v in brute_codewords(em)[:20]:
        word = CodewordPoly.from_bits(v, em.n, em.s)
        assert syndrome_consistency_check(em, word.shifted(t))


@given(seeds)
def test_degree_sums(seed):
    _, em = sample(seed)
    wm = weight_of(em)
    dd = degree_distribution(wm)
    ones = sum(map(sum, wm.entries))
    assert dd.n == wm.n
    assert sum(i * c for i, c in dd.counts.items()) == ones
    assert sum(sum(row) for row in wm.entries) == ones


@given(seeds)
def test_avg_weight_is_bounded(seed):
    rng, em = sample(seed)
    wm, _ = sort_columns_ascending(weight_of(em))
    if wm.n < 2:
        return
    w = wm.column_weights()
    t1 = rng.randint(1, wm.n - 1)
    t2 = rng.randint(t1, wm.n)
    assert w[t1 - 1] <= avg_weight(wm, t1, t2) <= w[t2 - 1]


def test_binary_matrix_helpers():
    bm = BinaryMatrix.from_lists([[1, 0, 1], [0, 1, 1]])
    assert bm.transpose().to_lists() == [[1, 0], [0, 1], [1, 1]]
    assert bm.permute_columns([2, 0, 1]).to_lists() == [[1, 1, 0], [1, 0, 1]]
    assert bm.mul_vector(0b111) == 0
