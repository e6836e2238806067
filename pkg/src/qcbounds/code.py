"""Type-1 quasi-cyclic LDPC codes: weight matrices, exponent matrices and
their circulant expansion.

Index conventions: rows and columns are 0-based throughout the library. A
codeword is flattened block-major, so coefficient ``t`` of block ``j`` sits at
bit ``j * s + t``. The expanded parity-check matrix uses the same layout for
its rows (``i * s + r``).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from qcbounds.ring import CyclicPoly, _check_s, monomial, poly_add, poly_mul

#: Marks a zero circulant in an exponent matrix.
ABSENT = None


def _as_grid(entries: Iterable[Iterable]) -> tuple[tuple, ...]:
    return tuple(tuple(row) for row in entries)


def _check_rect(grid: tuple[tuple, ...], what: str) -> None:
    if not grid or not grid[0]:
        raise ValueError(f"{what} must have at least one row and one column")
    width = len(grid[0])
    for i, row in enumerate(grid):
        if len(row) != width:
            raise ValueError(f"{what}: row {i} has {len(row)} entries, expected {width}")


@dataclass(frozen=True)
class WeightMatrix:
    """Base matrix over {0, 1}."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = _as_grid(self.entries)
        object.__setattr__(self, "entries", grid)
        _check_rect(grid, "weight matrix")
        for row in grid:
            for v in row:
                if v not in (0, 1):
                    raise ValueError(f"weight matrix entries must be 0 or 1, got {v!r}")

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    def column_weights(self) -> tuple[int, ...]:
        return tuple(sum(row[j] for row in self.entries) for j in range(self.n))

    def select_columns(self, cols: Sequence[int]) -> WeightMatrix:
        return WeightMatrix([[row[j] for j in cols] for row in self.entries])

    def to_binary(self) -> BinaryMatrix:
        return BinaryMatrix.from_lists(self.entries)


@dataclass(frozen=True)
class ExponentMatrix:
    """Polynomial parity-check matrix of a type-1 code.

    Each entry is ``ABSENT`` (zero circulant) or an exponent ``a`` standing
    for the monomial ``x^a``.
    """

    s: int
    entries: tuple[tuple[Optional[int], ...], ...]

    def __post_init__(self):
        _check_s(self.s)
        grid = _as_grid(self.entries)
        object.__setattr__(self, "entries", grid)
        _check_rect(grid, "exponent matrix")
        for row in grid:
            for a in row:
                if a is ABSENT:
                    continue
                if isinstance(a, bool) or not isinstance(a, int) or not 0 <= a < self.s:
                    raise ValueError(f"exponent {a!r} out of range [0, {self.s})")

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries[0])

    def poly(self, i: int, j: int) -> CyclicPoly:
        a = self.entries[i][j]
        return CyclicPoly.zero(self.s) if a is ABSENT else monomial(self.s, a)

    def poly_matrix(self) -> PolyMatrix:
        return PolyMatrix(
            self.s, [[self.poly(i, j) for j in range(self.n)] for i in range(self.m)]
        )


@dataclass(frozen=True)
class PolyMatrix:
    """General matrix over F2[x]/(x^s - 1)."""

    s: int
    entries: tuple[tuple[CyclicPoly, ...], ...]

    def __post_init__(self):
        _check_s(self.s)
        grid = _as_grid(self.entries)
        object.__setattr__(self, "entries", grid)
        _check_rect(grid, "polynomial matrix")
        for row in grid:
            for p in row:
                if p.s != self.s:
                    raise ValueError(f"entry modulus {p.s} differs from matrix modulus {self.s}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> PolyMatrix:
        return PolyMatrix(self.s, [[self.entries[i][j] for j in cols] for i in rows])

    def is_zero(self) -> bool:
        return not any(p for row in self.entries for p in row)

    @classmethod
    def from_masks(cls, s: int, masks: Iterable[Iterable[int]]) -> PolyMatrix:
        return cls(s, [[CyclicPoly(s, v) for v in row] for row in masks])


@dataclass(frozen=True)
class BinaryMatrix:
    """Dense matrix over F2; each row is an integer mask (bit ``c`` = column ``c``)."""

    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row_bits", tuple(self.row_bits))
        if self.cols < 1 or not self.row_bits:
            raise ValueError("binary matrix dimensions must be positive")
        for r in self.row_bits:
            if r < 0 or r >> self.cols:
                raise ValueError("row mask wider than the column count")

    @property
    def rows(self) -> int:
        return len(self.row_bits)

    @classmethod
    def from_lists(cls, grid: Sequence[Sequence[int]]) -> BinaryMatrix:
        grid = _as_grid(grid)
        _check_rect(grid, "binary matrix")
        rows = []
        for row in grid:
            mask = 0
            for c, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"binary entries must be 0 or 1, got {v!r}")
                if v:
                    mask |= 1 << c
            rows.append(mask)
        return cls(len(grid[0]), rows)

    def to_lists(self) -> list[list[int]]:
        return [[(r >> c) & 1 for c in range(self.cols)] for r in self.row_bits]

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return (self.row_bits[r] >> c) & 1

    def mul_vector(self, v: int) -> int:
        """``H v^T`` over F2, returned as a mask over rows."""
        out = 0
        for i, r in enumerate(self.row_bits):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def transpose(self) -> BinaryMatrix:
        cols = []
        for c in range(self.cols):
            mask = 0
            for i, r in enumerate(self.row_bits):
                if (r >> c) & 1:
                    mask |= 1 << i
            cols.append(mask)
        return BinaryMatrix(self.rows, cols)

    def permute_columns(self, perm: Sequence[int]) -> BinaryMatrix:
        """New matrix whose column ``k`` is column ``perm[k]`` of this one."""
        rows = []
        for r in self.row_bits:
            mask = 0
            for k, c in enumerate(perm):
                if (r >> c) & 1:
                    mask |= 1 << k
            rows.append(mask)
        return BinaryMatrix(self.cols, rows)


@dataclass(frozen=True)
class CodewordPoly:
    """Word ``(c_1(x), ..., c_n(x))`` of polynomial blocks sharing one modulus."""

    s: int
    blocks: tuple[CyclicPoly, ...]

    def __post_init__(self):
        _check_s(self.s)
        object.__setattr__(self, "blocks", tuple(self.blocks))
        for b in self.blocks:
            if b.s != self.s:
                raise ValueError(f"block modulus {b.s} differs from word modulus {self.s}")

    @property
    def n(self) -> int:
        return len(self.blocks)

    @classmethod
    def zero(cls, n: int, s: int) -> CodewordPoly:
        return cls(s, [CyclicPoly.zero(s)] * n)

    @classmethod
    def from_exponents(cls, s: int, blocks: Iterable[Iterable[int]]) -> CodewordPoly:
        return cls(s, [CyclicPoly.from_support(s, b) for b in blocks])

    @classmethod
    def from_bits(cls, bits: int, n: int, s: int) -> CodewordPoly:
        full = (1 << s) - 1
        return cls(s, [CyclicPoly(s, (bits >> (j * s)) & full) for j in range(n)])

    def to_bits(self) -> int:
        out = 0
        for j, b in enumerate(self.blocks):
            out |= b.mask << (j * self.s)
        return out

    def is_zero(self) -> bool:
        return not any(self.blocks)

    def shifted(self, t: int) -> CodewordPoly:
        """Every block multiplied by ``x^t``."""
        x_t = monomial(self.s, t % self.s)
        return CodewordPoly(self.s, [poly_mul(x_t, b) for b in self.blocks])

    def __str__(self) -> str:
        return "(" + ", ".join(str(b) for b in self.blocks) + ")"


@dataclass(frozen=True)
class DegreeDistribution:
    """Column-weight distribution: ``counts[i]`` columns have weight ``i``."""

    counts: dict[int, int] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    def polynomial(self) -> str:
        terms = []
        for i in sorted(self.counts):
            c = self.counts[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


# -- operations ---------------------------------------------------------------


def weight_of(em: ExponentMatrix) -> WeightMatrix:
    return WeightMatrix([[0 if a is ABSENT else 1 for a in row] for row in em.entries])


def expand(em: ExponentMatrix) -> BinaryMatrix:
    """Binary ``ms x ns`` parity-check matrix.

    Block ``(i, j)`` holding exponent ``a`` has a one at ``(r, c)`` exactly
    when ``(r - c) mod s == a``, so its first column reads ``x^a``.
    """
    s = em.s
    rows = []
    for i in range(em.m):
        for r in range(s):
            mask = 0
            for j, a in enumerate(em.entries[i]):
                if a is not ABSENT:
                    mask |= 1 << (j * s + (r - a) % s)
            rows.append(mask)
    return BinaryMatrix(em.n * s, rows)


def _check_word(em: ExponentMatrix, c: CodewordPoly) -> None:
    if c.n != em.n:
        raise ValueError(f"codeword has {c.n} blocks, matrix has {em.n} columns")
    if c.s != em.s:
        raise ValueError(f"codeword modulus {c.s} differs from matrix modulus {em.s}")


def syndrome(em: ExponentMatrix, c: CodewordPoly) -> tuple[CyclicPoly, ...]:
    """``H(x) c(x)^T`` in the ring, one polynomial per row of ``em``."""
    _check_word(em, c)
    out = []
    for i in range(em.m):
        acc = CyclicPoly.zero(em.s)
        for j in range(em.n):
            if em.entries[i][j] is not ABSENT and c.blocks[j]:
                acc = poly_add(acc, poly_mul(em.poly(i, j), c.blocks[j]))
        out.append(acc)
    return tuple(out)


def binary_syndrome(em: ExponentMatrix, c: CodewordPoly) -> int:
    """``H c^T`` over F2 on the expanded matrix, as a mask over its ``ms`` rows."""
    _check_word(em, c)
    return expand(em).mul_vector(c.to_bits())


def failing_rows(em: ExponentMatrix, c: CodewordPoly) -> list[int]:
    """Rows of ``em`` whose check is violated, agreed on by both syndrome paths."""
    poly_rows = [i for i, p in enumerate(syndrome(em, c)) if p]
    bits = binary_syndrome(em, c)
    full = (1 << em.s) - 1
    bin_rows = [i for i in range(em.m) if (bits >> (i * em.s)) & full]
    if poly_rows != bin_rows:
        raise RuntimeError(
            f"polynomial and binary syndromes disagree: rows {poly_rows} vs {bin_rows}"
        )
    return poly_rows


def syndrome_consistency_check(em: ExponentMatrix, c: CodewordPoly) -> bool:
    """True iff ``c`` is a codeword, checked in the ring and on the expanded matrix."""
    return not failing_rows(em, c)


def codeword_weight(c: CodewordPoly) -> int:
    return sum(b.weight for b in c.blocks)


def design_rate(wm: WeightMatrix) -> Fraction:
    return 1 - Fraction(wm.m, wm.n)


def sort_columns_ascending(wm: WeightMatrix) -> tuple[WeightMatrix, tuple[int, ...]]:
    """Stable sort of columns by weight.

    Returns the sorted matrix and ``perm`` where sorted column ``k`` is
    original column ``perm[k]``.
    """
    weights = wm.column_weights()
    perm = tuple(sorted(range(wm.n), key=lambda j: (weights[j], j)))
    return wm.select_columns(perm), perm


def degree_distribution(wm: WeightMatrix) -> DegreeDistribution:
    return DegreeDistribution(dict(sorted(Counter(wm.column_weights()).items())))


def avg_weight(wm: WeightMatrix, t1: int, t2: int) -> Fraction:
    """Mean weight of sorted columns ``t1..t2`` (1-based, inclusive).

    ``t1 == t2`` is allowed and gives that column's weight.
    """
    weights = wm.column_weights()
    if any(a > b for a, b in zip(weights, weights[1:])):
        raise ValueError("columns must be sorted by ascending weight")
    if not 1 <= t1 <= t2 <= wm.n:
        raise ValueError(f"need 1 <= t1 <= t2 <= {wm.n}, got t1={t1}, t2={t2}")
    return Fraction(sum(weights[t1 - 1 : t2]), t2 - t1 + 1)


# -- construction helpers -----------------------------------------------------


def weight_matrix_from_degrees(counts: dict[int, int], m: int) -> WeightMatrix:
    """Deterministic base matrix with the given column-weight counts.

    Ones are laid down cyclically so row weights stay as even as possible, and
    the column order interleaves weights so the result is not pre-sorted.
    """
    weights = []
    pools = {w: c for w, c in sorted(counts.items()) if c}
    for w in pools:
        if not 0 <= w <= m:
            raise ValueError(f"column weight {w} impossible with {m} rows")
    while pools:
        for w in sorted(pools, reverse=True):
            weights.append(w)
            pools[w] -= 1
            if not pools[w]:
                del pools[w]
    grid = [[0] * len(weights) for _ in range(m)]
    cursor = 0
    for j, w in enumerate(weights):
        for t in range(w):
            grid[(cursor + t) % m][j] = 1
        cursor = (cursor + w) % m
    return WeightMatrix(grid)


def random_exponents(wm: WeightMatrix, s: int, rng: random.Random) -> ExponentMatrix:
    """Instantiate a type-1 code for ``wm`` with uniform random exponents."""
    return ExponentMatrix(
        s, [[rng.randrange(s) if v else ABSENT for v in row] for row in wm.entries]
    )


def random_exponent_matrix(
    rng: random.Random, m: int, n: int, s: int, density: float = 0.6, min_col_weight: int = 1
) -> ExponentMatrix:
    """Random type-1 code with every column weight at least ``min_col_weight``."""
    if min_col_weight > m:
        raise ValueError("min_col_weight cannot exceed the row count")
    grid = [[1 if rng.random() < density else 0 for _ in range(n)] for _ in range(m)]
    for j in range(n):
        empty = [i for i in range(m) if not grid[i][j]]
        short = min_col_weight - (m - len(empty))
        if short > 0:
            for i in rng.sample(empty, short):
                grid[i][j] = 1
    return random_exponents(WeightMatrix(grid), s, rng)
