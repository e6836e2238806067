"""Determinants over F2[x]/(x^s - 1) and determinant-built codewords.

For ``m + 1`` columns ``J`` of an ``m``-row polynomial parity-check matrix,
placing on column ``j`` the determinant of the other ``m`` columns gives a
codeword: each check row evaluates to the determinant of a matrix with a
repeated row. When all those determinants vanish, the same construction is
applied to a maximal nonzero minor extended by one column.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from qcbounds._core import cyclic_mul
from qcbounds.code import CodewordPoly, ExponentMatrix, PolyMatrix
from qcbounds.ring import CyclicPoly

#: Largest matrix order accepted by :func:`det`.
MAX_DET_ORDER = 12


class ConstructionError(ValueError):
    """The requested codeword construction has no valid input."""


@dataclass(frozen=True)
class MinorSelection:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise ValueError("a minor needs as many rows as columns")


@dataclass(frozen=True)
class Construction:
    """Result of :func:`construct_with_trace`."""

    word: CodewordPoly
    columns: tuple[int, ...]
    fallback: bool = False
    order: Optional[int] = None
    minor: Optional[MinorSelection] = None
    support_columns: Optional[tuple[int, ...]] = None


def _nonzero_pattern(pm: PolyMatrix) -> list[list[tuple[int, int]]]:
    return [[(j, p.mask) for j, p in enumerate(row) if p.mask] for row in pm.entries]


def det(pm: PolyMatrix) -> CyclicPoly:
    """Determinant by permutation expansion, skipping zero entries.

    Signs do not matter in characteristic 2, so the result is the ring sum of
    all products along permutations that avoid zero entries.
    """
    q = pm.rows
    if q != pm.cols:
        raise ValueError(f"determinant needs a square matrix, got {pm.rows}x{pm.cols}")
    if q > MAX_DET_ORDER:
        raise ValueError(f"matrix order {q} exceeds the cap of {MAX_DET_ORDER}")
    s = pm.s
    nz = _nonzero_pattern(pm)
    if not all(nz):
        return CyclicPoly.zero(s)
    # sparsest rows first prunes the search tree earliest
    order = sorted(range(q), key=lambda i: len(nz[i]))
    rows = [nz[i] for i in order]
    total = 0

    def walk(depth: int, used: int, prod: int) -> None:
        nonlocal total
        if depth == q:
            total ^= prod
            return
        for j, v in rows[depth]:
            if not (used >> j) & 1:
                walk(depth + 1, used | (1 << j), cyclic_mul(prod, v, s))

    walk(0, 0, 1)
    return CyclicPoly(s, total)


def det_term_count(pm: PolyMatrix) -> int:
    """Number of permutations whose product avoids every zero entry.

    Bounds the weight of :func:`det` for matrices of monomials.
    """
    q = pm.rows
    if q != pm.cols:
        raise ValueError("term count needs a square matrix")
    rows = [[j for j, _ in r] for r in _nonzero_pattern(pm)]
    memo: dict[tuple[int, int], int] = {}

    def count(depth: int, used: int) -> int:
        if depth == q:
            return 1
        key = (depth, used)
        if key not in memo:
            memo[key] = sum(
                count(depth + 1, used | (1 << j)) for j in rows[depth] if not (used >> j) & 1
            )
        return memo[key]

    return count(0, 0)


def _check_columns(em: ExponentMatrix, J: Sequence[int]) -> tuple[int, ...]:
    J = tuple(J)
    if len(J) != em.m + 1:
        raise ConstructionError(f"need {em.m + 1} columns, got {len(J)}")
    if len(set(J)) != len(J):
        raise ConstructionError(f"columns {J} contain duplicates")
    for j in J:
        if not 0 <= j < em.n:
            raise ConstructionError(f"column {j} out of range [0, {em.n})")
    return J


def _cofactor_word(pm: PolyMatrix) -> list[CyclicPoly]:
    """Determinants of a ``q x (q+1)`` matrix with each column deleted in turn."""
    rows = range(pm.rows)
    cols = list(range(pm.cols))
    return [det(pm.submatrix(rows, cols[:t] + cols[t + 1 :])) for t in cols]


def _embed(s: int, n: int, positions: Sequence[int], values: Sequence[CyclicPoly]) -> CodewordPoly:
    blocks = [CyclicPoly.zero(s)] * n
    for j, v in zip(positions, values):
        blocks[j] = v
    return CodewordPoly(s, blocks)


def lemma_codeword(em: ExponentMatrix, J: Sequence[int]) -> CodewordPoly:
    """Codeword with ``det(H_{J minus j}(x))`` on each column ``j`` of ``J``.

    The result always satisfies every check; it may be the zero word.
    """
    J = _check_columns(em, J)
    pm = em.poly_matrix().submatrix(range(em.m), J)
    return _embed(em.s, em.n, J, _cofactor_word(pm))


def max_nonzero_minor(pm: PolyMatrix) -> Optional[tuple[int, MinorSelection]]:
    """Largest order with a nonzero minor, plus the first witness found.

    Orders are tried from ``min(rows, cols)`` down; within an order, row sets
    and then column sets are scanned in lexicographic order. Returns ``None``
    for the zero matrix.
    """
    for q in range(min(pm.rows, pm.cols), 0, -1):
        for rows in combinations(range(pm.rows), q):
            for cols in combinations(range(pm.cols), q):
                if det(pm.submatrix(rows, cols)):
                    return q, MinorSelection(rows, cols)
    return None


def construct_with_trace(em: ExponentMatrix, J: Sequence[int]) -> Construction:
    """Nonzero codeword supported on ``J``, recording which path built it."""
    J = _check_columns(em, J)
    word = lemma_codeword(em, J)
    if not word.is_zero():
        return Construction(word, J)

    pm = em.poly_matrix()
    found = max_nonzero_minor(pm.submatrix(range(em.m), J))
    if found is None:
        raise ConstructionError(f"matrix is zero on columns {J}")
    r, sel = found
    S = sorted(J[t] for t in sel.cols)
    extra = min(j for j in J if j not in S)
    S_prime = tuple(sorted(S + [extra]))
    values = _cofactor_word(pm.submatrix(sel.rows, S_prime))
    word = _embed(em.s, em.n, S_prime, values)
    minor = MinorSelection(sel.rows, tuple(S))
    return Construction(word, J, fallback=True, order=r, minor=minor, support_columns=S_prime)


def construct_nonzero_codeword(em: ExponentMatrix, J: Sequence[int]) -> CodewordPoly:
    return construct_with_trace(em, J).word
