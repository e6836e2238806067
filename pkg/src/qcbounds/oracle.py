"""Brute-force reference computations.

Everything here is deliberately simple: F2 elimination, exhaustive codeword
enumeration, and a cofactor-expansion determinant that does its own ring
multiplication on exponent sets. Other modules are tested against these.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from qcbounds._core import gray_min_weight
from qcbounds.code import BinaryMatrix, PolyMatrix
from qcbounds.ring import CyclicPoly

DEFAULT_DIM_CAP = 20
HARD_DIM_CAP = 24
MAX_COFACTOR_ORDER = 6


class DistanceStatus(enum.Enum):
    INFEASIBLE = "INFEASIBLE"
    DISTANCE_UNDEFINED = "DISTANCE_UNDEFINED"

    def __str__(self) -> str:
        return self.value


INFEASIBLE = DistanceStatus.INFEASIBLE
DISTANCE_UNDEFINED = DistanceStatus.DISTANCE_UNDEFINED


@dataclass(frozen=True)
class NullspaceBasis:
    """Reduced basis of ``{v : H v^T = 0}``; vectors are column masks."""

    cols: int
    basis: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[list[int]]:
        return [[(v >> c) & 1 for c in range(self.cols)] for v in self.basis]


def rank_f2(bm: BinaryMatrix) -> int:
    leading: dict[int, int] = {}
    for r in bm.row_bits:
        while r:
            top = r.bit_length() - 1
            if top not in leading:
                leading[top] = r
                break
            r ^= leading[top]
    return len(leading)


def _rref(bm: BinaryMatrix) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (pivot rows, pivot columns)."""
    rows = list(bm.row_bits)
    pivot_cols = []
    r = 0
    for c in range(bm.cols):
        bit = 1 << c
        hit = next((i for i in range(r, len(rows)) if rows[i] & bit), None)
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivot_cols.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivot_cols


def nullspace(bm: BinaryMatrix) -> NullspaceBasis:
    rows, pivots = _rref(bm)
    pivot_set = set(pivots)
    basis = []
    for f in range(bm.cols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(rows, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        basis.append(v)
    return NullspaceBasis(bm.cols, tuple(basis))


MinWeightResult = Union[tuple[int, int], DistanceStatus]


def minimum_weight_word(bm: BinaryMatrix, dim_cap: int = DEFAULT_DIM_CAP) -> MinWeightResult:
    """Exhaustive search for a lightest nonzero codeword.

    Returns ``(weight, word_mask)``, ``DISTANCE_UNDEFINED`` for the zero code,
    or ``INFEASIBLE`` when the nullspace dimension exceeds ``dim_cap``.
    """
    if dim_cap > HARD_DIM_CAP:
        raise ValueError(f"dim_cap {dim_cap} exceeds the hard maximum {HARD_DIM_CAP}")
    ns = nullspace(bm)
    if ns.dim == 0:
        return DISTANCE_UNDEFINED
    if ns.dim > dim_cap:
        return INFEASIBLE
    weight, i = gray_min_weight(ns.basis, bm.cols)
    combo = i ^ (i >> 1)
    word = 0
    for b, v in enumerate(ns.basis):
        if (combo >> b) & 1:
            word ^= v
    return weight, word


def min_distance_exhaustive(
    bm: BinaryMatrix, dim_cap: int = DEFAULT_DIM_CAP
) -> Union[int, DistanceStatus]:
    res = minimum_weight_word(bm, dim_cap)
    return res if isinstance(res, DistanceStatus) else res[0]


def _support_mul(a: frozenset[int], b: frozenset[int], s: int) -> frozenset[int]:
    out: set[int] = set()
    for i in a:
        for j in b:
            out ^= {(i + j) % s}
    return frozenset(out)


def det_cofactor_oracle(pm: PolyMatrix) -> CyclicPoly:
    """Determinant by recursive first-row cofactor expansion."""
    if pm.rows != pm.cols:
        raise ValueError("determinant needs a square matrix")
    if pm.rows > MAX_COFACTOR_ORDER:
        raise ValueError(f"order {pm.rows} exceeds the oracle cap of {MAX_COFACTOR_ORDER}")
    s = pm.s
    grid = [[p.support for p in row] for row in pm.entries]

    def expand(rows: list[list[frozenset[int]]]) -> frozenset[int]:
        if len(rows) == 1:
            return rows[0][0]
        acc: frozenset[int] = frozenset()
        for j, head in enumerate(rows[0]):
            if not head:
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            acc = acc ^ _support_mul(head, expand(minor), s)
        return acc

    return CyclicPoly.from_support(s, expand(grid))
