"""Upper bounds on the minimum distance of type-1 QC LDPC codes.

Three numbers are produced for a code:

* ``d * s`` where ``d`` is the minimum distance of the base code: spreading
  the all-ones polynomial over the support of a base codeword gives a
  codeword of that weight.
* ``(m+1) * k! * prod(l_2 .. l_{m+1-k})`` from counting the monomial terms
  of the determinants used in the codeword construction; the looser
  ``(m+1) * k! * ell^(m-k)`` with ``ell`` the mean of those weights is also
  reported.
* the weight of an explicitly constructed codeword.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, islice
from typing import Optional, Sequence, Union

from qcbounds.code import (
    CodewordPoly,
    ExponentMatrix,
    WeightMatrix,
    avg_weight,
    codeword_weight,
    design_rate,
    sort_columns_ascending,
    syndrome_consistency_check,
    weight_of,
)
from qcbounds.construct import Construction, ConstructionError, construct_with_trace
from qcbounds.oracle import HARD_DIM_CAP, DistanceStatus, minimum_weight_word
from qcbounds.ring import CyclicPoly, all_ones

#: Base codes longer than this are not searched exhaustively.
MAX_BASE_LENGTH = 24
SCAN_CAP = 10_000


@dataclass(frozen=True)
class DetBoundReport:
    k: int
    ell: Optional[Fraction]  # None when the averaging range is empty (k == m)
    bound: int
    paper_bound: Fraction
    sorted_weights: tuple[int, ...]

    @property
    def paper_bound_ceiling(self) -> int:
        return math.ceil(self.paper_bound)


def simple_bound(wm: WeightMatrix, s: int, d: int) -> int:
    if d < 1:
        raise ValueError(f"base distance must be at least 1, got {d}")
    if s < 1:
        raise ValueError(f"circulant size must be at least 1, got {s}")
    return d * s


def choose_k(sorted_weights: Sequence[int], m: int) -> int:
    """Largest ``k`` in ``[1, m]`` with ``l_{m+2-k} >= k`` (1-based ``l``)."""
    best = 0
    for k in range(1, m + 1):
        if sorted_weights[m + 1 - k] >= k:
            best = k
    if best == 0:
        raise ValueError("no k in [1, m] satisfies the column-weight condition")
    return best


def det_bound(wm: WeightMatrix) -> DetBoundReport:
    m, n = wm.m, wm.n
    if n < m + 1:
        raise ValueError(f"need at least m+1 = {m + 1} columns, got {n}")
    sorted_wm, _ = sort_columns_ascending(wm)
    weights = sorted_wm.column_weights()
    if weights[0] == 0:
        raise ValueError("zero-weight column among the first m+1 sorted columns")
    k = choose_k(weights, m)
    head = math.factorial(k) * (m + 1)
    upper = m + 1 - k
    if upper >= 2:
        ell = avg_weight(sorted_wm, 2, upper)
        product = math.prod(weights[1:upper])
        paper = head * ell ** (m - k)
    else:
        ell, product, paper = None, 1, Fraction(head)
    return DetBoundReport(k, ell, head * product, Fraction(paper), weights)


def default_columns(em: ExponentMatrix) -> tuple[int, ...]:
    """The ``m+1`` lightest columns (stable order), as original indices."""
    _, perm = sort_columns_ascending(weight_of(em))
    return perm[: em.m + 1]


def verify_construction(em: ExponentMatrix, c: Construction) -> Construction:
    """Raise unless the constructed word is nonzero and passes both syndrome checks."""
    if c.word.is_zero() or not syndrome_consistency_check(em, c.word):
        raise RuntimeError(f"constructed word {c.word} failed verification")
    return c


def constructive_codeword(
    em: ExponentMatrix, J: Optional[Sequence[int]] = None
) -> Optional[Construction]:
    """Verified nonzero codeword on ``J`` (default: lightest columns) or None."""
    if em.n < em.m + 1:
        return None
    try:
        c = construct_with_trace(em, default_columns(em) if J is None else J)
    except ConstructionError:
        return None
    return verify_construction(em, c)


def constructive_bound(em: ExponentMatrix) -> Optional[int]:
    c = constructive_codeword(em)
    return None if c is None else codeword_weight(c.word)


def scan_column_sets(
    em: ExponentMatrix, cap: int = SCAN_CAP
) -> tuple[Optional[Construction], bool]:
    """Lightest verified construction over column sets of size ``m+1``.

    Tries at most ``cap`` sets in lexicographic order; the flag reports
    whether the enumeration was cut short.
    """
    if em.n < em.m + 1:
        return None, False
    total = math.comb(em.n, em.m + 1)
    best = None
    best_w = None
    for J in islice(combinations(range(em.n), em.m + 1), cap):
        try:
            c = construct_with_trace(em, J)
        except ConstructionError:
            continue
        w = codeword_weight(verify_construction(em, c).word)
        if best_w is None or w < best_w:
            best, best_w = c, w
    return best, total > cap


def theorem1_witness(wm: WeightMatrix, base_codeword: Sequence[int], s: int) -> CodewordPoly:
    """All-ones blocks on the support of a nonzero base codeword."""
    if len(base_codeword) != wm.n:
        raise ValueError(f"base codeword has length {len(base_codeword)}, expected {wm.n}")
    mask = sum(1 << j for j, v in enumerate(base_codeword) if v)
    if not mask:
        raise ValueError("base codeword must be nonzero")
    if wm.to_binary().mul_vector(mask):
        raise ValueError("vector is not a codeword of the base code")
    f = all_ones(s)
    zero = CyclicPoly.zero(s)
    return CodewordPoly(s, [f if v else zero for v in base_codeword])


def base_distance(wm: WeightMatrix) -> Optional[tuple[int, tuple[int, ...]]]:
    """Minimum distance and a minimizing word of the base code.

    None when the base code is trivial or longer than ``MAX_BASE_LENGTH``.
    """
    if wm.n > MAX_BASE_LENGTH:
        return None
    res = minimum_weight_word(wm.to_binary(), dim_cap=HARD_DIM_CAP)
    if isinstance(res, DistanceStatus):
        return None
    d, word = res
    return d, tuple((word >> j) & 1 for j in range(wm.n))


@dataclass(frozen=True)
class BoundSummary:
    m: int
    n: int
    s: int
    design_rate: Fraction
    d_base: Optional[int]
    simple_bound: Optional[int]
    det: Optional[DetBoundReport]
    constructive_bound: Optional[int]
    # the determinant bound is constant in s, so fixed (m, n) rules out linear growth
    linear_growth_possible: bool = False
    warnings: tuple[str, ...] = field(default=())

    @property
    def N(self) -> int:
        return self.n * self.s

    def to_json(self) -> dict:
        det = self.det
        return {
            "m": self.m,
            "n": self.n,
            "s": self.s,
            "N": self.N,
            "design_rate": str(self.design_rate),
            "d_base": self.d_base,
            "bound_simple": self.simple_bound,
            "bound_det_product": det.bound if det else None,
            "bound_det_paper": det.paper_bound_ceiling if det else None,
            "bound_det_paper_exact": str(det.paper_bound) if det else None,
            "bound_constructive": self.constructive_bound,
            "k": det.k if det else None,
            "ell_num": det.ell.numerator if det and det.ell is not None else None,
            "ell_den": det.ell.denominator if det and det.ell is not None else None,
            "linear_growth_possible": self.linear_growth_possible,
            "warnings": list(self.warnings),
        }


def summarize(code: Union[ExponentMatrix, WeightMatrix], s: Optional[int] = None) -> BoundSummary:
    """All bounds for a code.

    A bare weight matrix needs ``s`` and yields no constructive bound.
    """
    if isinstance(code, ExponentMatrix):
        em, wm, s = code, weight_of(code), code.s
    else:
        if s is None:
            raise ValueError("circulant size s is required for a weight matrix")
        em, wm = None, code
    warnings = []

    base = base_distance(wm)
    if base is None:
        d = simple = None
        reason = (
            f"base length {wm.n} exceeds {MAX_BASE_LENGTH}"
            if wm.n > MAX_BASE_LENGTH
            else "base code has no nonzero codeword"
        )
        warnings.append(f"bound_simple UNAVAILABLE: {reason}")
    else:
        d = base[0]
        simple = simple_bound(wm, s, d)

    det = None
    if wm.n < wm.m + 1:
        warnings.append(f"determinant bound needs n >= m+1 = {wm.m + 1} columns")
    else:
        try:
            det = det_bound(wm)
        except ValueError as exc:
            warnings.append(f"determinant bound unavailable: {exc}")

    constructive = constructive_bound(em) if em is not None else None
    if em is not None and constructive is None and wm.n >= wm.m + 1:
        warnings.append("no nonzero codeword on the default column set")

    return BoundSummary(
        m=wm.m,
        n=wm.n,
        s=s,
        design_rate=design_rate(wm),
        d_base=d,
        simple_bound=simple,
        det=det,
        constructive_bound=constructive,
        warnings=tuple(warnings),
    )
