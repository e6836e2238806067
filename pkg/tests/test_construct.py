import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from qcbounds.bounds import det_bound
from qcbounds.code import (
    CodewordPoly,
    ExponentMatrix,
    PolyMatrix,
    codeword_weight,
    random_exponent_matrix,
    sort_columns_ascending,
    syndrome,
    syndrome_consistency_check,
    weight_of,
)
from qcbounds.construct import (
    MAX_DET_ORDER,
    ConstructionError,
    MinorSelection,
    construct_nonzero_codeword,
    construct_with_trace,
    det,
    det_term_count,
    lemma_codeword,
    max_nonzero_minor,
)
from qcbounds.oracle import det_cofactor_oracle
from qcbounds.ring import CyclicPoly

from conftest import X, poly, random_poly_matrix


def pm(s, grid):
    return PolyMatrix(s, [[poly(s, *e) for e in row] for row in grid])


def test_det_examples():
    assert det(pm(3, [[(2,), (1,)], [(), (2,)]])).support == {1}
    assert det(pm(5, [[(0, 1), (3,)], [(0, 1), (3,)]])).is_zero()
    assert det(pm(4, [[(1, 3)]])).support == {1, 3}


def test_det_errors():
    with pytest.raises(ValueError):
        det(pm(3, [[(0,), (1,)]]))
    big = MAX_DET_ORDER + 1
    with pytest.raises(ValueError):
        det(PolyMatrix.from_masks(2, [[1] * big] * big))


def test_lemma_example(example1):
    c = lemma_codeword(example1, (0, 1, 2))
    assert c == CodewordPoly(3, [poly(3, 1), poly(3, 1), poly(3, 2)])
    assert syndrome_consistency_check(example1, c)


def test_lemma_errors(example1):
    with pytest.raises(ConstructionError):
        lemma_codeword(example1, (0, 1))
    with pytest.raises(ConstructionError):
        lemma_codeword(example1, (0, 1, 3))
    with pytest.raises(ConstructionError):
        lemma_codeword(example1, (0, 1, 1))


def test_lemma_with_identical_columns_and_rows():
    em = ExponentMatrix(5, [[1, 1, 2, 0], [3, 3, X, 4]])
    c = lemma_codeword(em, (0, 1, 2))
    assert c.blocks[2].is_zero()  # remaining columns 0 and 1 coincide
    assert syndrome_consistency_check(em, c)
    dup = ExponentMatrix(5, [[1, 2, 0, 4], [1, 2, 0, 4]])
    assert syndrome_consistency_check(dup, lemma_codeword(dup, (0, 1, 3)))


def test_max_nonzero_minor_example(example1):
    H = example1.poly_matrix()
    r, sel = max_nonzero_minor(H)
    # enumerate every 2x2 minor with the cofactor oracle; the first nonzero is the witness
    nonzero = [
        (rows, cols)
        for rows in combinations(range(2), 2)
        for cols in combinations(range(3), 2)
        if det_cofactor_oracle(H.submatrix(rows, cols))
    ]
    assert r == 2 and nonzero
    assert (sel.rows, sel.cols) == nonzero[0] == ((0, 1), (0, 1))


def test_max_nonzero_minor_trivial():
    assert max_nonzero_minor(PolyMatrix.from_masks(3, [[0, 0], [0, 0]])) is None
    r, sel = max_nonzero_minor(pm(3, [[(1,)]]))
    assert r == 1 and sel == MinorSelection((0,), (0,))


def test_minor_selection_validation():
    with pytest.raises(ValueError):
        MinorSelection((0, 1), (0,))


def test_construct_nondegenerate(example1):
    c = construct_with_trace(example1, (0, 1, 2))
    assert not c.fallback
    assert c.word == CodewordPoly(3, [poly(3, 1), poly(3, 1), poly(3, 2)])


def test_construct_rank_one_fallback():
    em = ExponentMatrix(4, [[1, X, X], [X, X, X]])
    c = construct_with_trace(em, (0, 1, 2))
    assert c.fallback and c.order == 1
    # hand expansion of the 1x2 block [x, 0]: deleting column 1 leaves 0, deleting column 2 leaves x
    assert c.word == CodewordPoly(4, [poly(4), poly(4, 1), poly(4)])
    assert syndrome_consistency_check(em, c.word)


def test_construct_zero_on_columns():
    em = ExponentMatrix(3, [[X, X, X, 1], [X, X, X, 2]])
    assert lemma_codeword(em, (0, 1, 2)).is_zero()
    with pytest.raises(ConstructionError):
        construct_nonzero_codeword(em, (0, 1, 2))


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=200, deadline=None)
@given(seeds)
def test_lemma_words_always_satisfy_checks(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 4)
    n = rng.randint(m + 1, m + 4)
    em = random_exponent_matrix(rng, m, n, rng.randint(2, 16), density=rng.random(), min_col_weight=0)
    J = rng.sample(range(n), m + 1)
    assert syndrome_consistency_check(em, lemma_codeword(em, J))


@settings(max_examples=300, deadline=None)
@given(seeds)
def test_det_matches_cofactor_oracle(seed):
    rng = random.Random(seed)
    H = random_poly_matrix(rng, rng.randint(1, 4), rng.randint(1, 16), density=rng.random())
    assert det(H) == det_cofactor_oracle(H)


@given(seeds)
def test_det_alternating(seed):
    rng = random.Random(seed)
    q = rng.randint(2, 4)
    H = random_poly_matrix(rng, q, rng.randint(1, 12))
    rows = list(H.entries)
    i, j = rng.sample(range(q), 2)
    rows[i], rows[j] = rows[j], rows[i]
    assert det(PolyMatrix(H.s, rows)) == det(H)
    rows[i] = rows[j]
    assert det(PolyMatrix(H.s, rows)).is_zero()


@given(seeds)
def test_det_weight_bounds(seed):
    rng = random.Random(seed)
    q = rng.randint(1, 4)
    H = random_poly_matrix(rng, q, rng.randint(1, 12))
    col_sums = [sum(H.entries[i][j].weight for i in range(q)) for j in range(q)]
    prod = 1
    for v in col_sums:
        prod *= v
    assert det(H).weight <= prod


@given(seeds)
def test_delta_weight_below_term_bound(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 4)
    em = random_exponent_matrix(rng, m, m + 1 + rng.randint(0, 3), rng.randint(2, 16))
    report = det_bound(weight_of(em))
    per_delta = report.bound // (m + 1)
    _, perm = sort_columns_ascending(weight_of(em))
    J = perm[: m + 1]
    H = em.poly_matrix()
    for j in J:
        rest = [c for c in J if c != j]
        sub = H.submatrix(range(m), rest)
        assert det(sub).weight <= det_term_count(sub) <= per_delta


def degenerate_instance(rng):
    m = rng.randint(2, 4)
    n = rng.randint(m + 1, m + 3)
    base = random_exponent_matrix(rng, m - 1, n, rng.randint(2, 12))
    rows = list(base.entries)
    rows.insert(rng.randint(0, m - 1), rows[rng.randrange(m - 1)])
    return ExponentMatrix(base.s, rows)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_fallback_on_duplicated_rows(seed):
    rng = random.Random(seed)
    em = degenerate_instance(rng)
    _, perm = sort_columns_ascending(weight_of(em))
    J = perm[: em.m + 1]
    assert lemma_codeword(em, J).is_zero()
    c = construct_with_trace(em, J)
    assert c.fallback
    assert not c.word.is_zero()
    assert syndrome_consistency_check(em, c.word)
    assert codeword_weight(c.word) <= det_bound(weight_of(em)).bound


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_fallback_laplace_consistency(seed):
    """Checking any host row against the fallback word evaluates an (r+1)-minor."""
    rng = random.Random(seed)
    em = degenerate_instance(rng)
    J = tuple(sorted(rng.sample(range(em.n), em.m + 1)))
    try:
        c = construct_with_trace(em, J)
    except ConstructionError:
        return
    if not c.fallback:
        return
    H = em.poly_matrix()
    S = c.support_columns
    for i in range(em.m):
        rows = (i,) + c.minor.rows
        if i in c.minor.rows:
            continue
        minor = det_cofactor_oracle(H.submatrix(rows, S))
        assert minor.is_zero()
        check = CyclicPoly.zero(em.s)
        for j in S:
            check = check + H.entries[i][j] * c.word.blocks[j]
        assert check == minor == syndrome(em, c.word)[i]
