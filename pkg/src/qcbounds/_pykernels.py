"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_kernels`` module; used when the
extension is not built or when ``QCBOUNDS_PURE_PYTHON`` is set.
"""

from __future__ import annotations

from typing import Sequence


def cyclic_mul(a: int, b: int, s: int) -> int:
    """Product of two bit masks in F2[x]/(x^s - 1)."""
    if a.bit_count() < b.bit_count():
        a, b = b, a
    full = (1 << s) - 1
    acc = 0
    while b:
        low = b & -b
        e = low.bit_length() - 1
        acc ^= ((a << e) | (a >> (s - e))) & full
        b ^= low
    return acc


def gray_min_weight(basis: Sequence[int], nbits: int) -> tuple[int, int]:
    """Minimum weight over all nonzero F2-combinations of ``basis``.

    Walks the reflected Gray code so each step XORs a single basis vector.
    Returns ``(weight, i)``; the minimizing combination is ``i ^ (i >> 1)``
    read as a bit mask over the basis. The walk stops early at weight 1.
    """
    dim = len(basis)
    if dim == 0:
        raise ValueError("empty basis has no nonzero combination")
    word = 0
    best = nbits + 1
    best_i = 0
    for i in range(1, 1 << dim):
        word ^= basis[(i & -i).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best, best_i = w, i
            if w == 1:
                break
    return best, best_i
