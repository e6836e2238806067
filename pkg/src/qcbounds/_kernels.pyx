# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. See ``_pykernels`` for the reference semantics."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

import sys

from qcbounds import _pykernels

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

cdef uint64_t MASK64 = 0xFFFFFFFFFFFFFFFF
cdef bint _LITTLE_ENDIAN = sys.byteorder == "little"


cdef void _xor_shl(const uint64_t* a, uint64_t* acc, Py_ssize_t nw, Py_ssize_t sh) noexcept nogil:
    # acc ^= a << sh, truncated to nw words
    cdef Py_ssize_t ws = sh >> 6, k
    cdef int bs = sh & 63
    cdef uint64_t v
    for k in range(nw - 1, ws - 1, -1):
        v = a[k - ws] << bs
        if bs and k - ws - 1 >= 0:
            v |= a[k - ws - 1] >> (64 - bs)
        acc[k] ^= v


cdef void _xor_shr(const uint64_t* a, uint64_t* acc, Py_ssize_t nw, Py_ssize_t sh) noexcept nogil:
    # acc ^= a >> sh
    cdef Py_ssize_t ws = sh >> 6, k
    cdef int bs = sh & 63
    cdef uint64_t v
    for k in range(0, nw - ws):
        v = a[k + ws] >> bs
        if bs and k + ws + 1 < nw:
            v |= a[k + ws + 1] << (64 - bs)
        acc[k] ^= v


cdef object _cyclic_mul_wide(object a, object b, Py_ssize_t s):
    cdef Py_ssize_t nw = (s + 63) >> 6, k, e
    cdef bytes abytes = a.to_bytes(nw * 8, "little")
    cdef bytes bbytes = b.to_bytes(nw * 8, "little")
    cdef uint64_t* x = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef uint64_t* y = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef uint64_t* acc = <uint64_t*>calloc(nw, sizeof(uint64_t))
    cdef uint64_t w
    if x == NULL or y == NULL or acc == NULL:
        free(x)
        free(y)
        free(acc)
        raise MemoryError()
    try:
        memcpy(x, <const char*>abytes, nw * 8)
        memcpy(y, <const char*>bbytes, nw * 8)
        with nogil:
            for k in range(nw):
                w = y[k]
                while w:
                    e = k * 64 + ctz64(w)
                    _xor_shl(x, acc, nw, e)
                    if e:
                        _xor_shr(x, acc, nw, s - e)
                    w &= w - 1
            if s & 63:
                acc[nw - 1] &= ((<uint64_t>1) << (s & 63)) - 1
        return int.from_bytes((<char*>acc)[:nw * 8], "little")
    finally:
        free(x)
        free(y)
        free(acc)


def cyclic_mul(a, b, int s):
    """Product of two bit masks in F2[x]/(x^s - 1)."""
    if s > 64:
        if not _LITTLE_ENDIAN:
            return _pykernels.cyclic_mul(a, b, s)
        if a.bit_count() < b.bit_count():
            a, b = b, a
        return _cyclic_mul_wide(a, b, s)
    cdef uint64_t x = a
    cdef uint64_t y = b
    cdef uint64_t acc = 0
    cdef uint64_t full = MASK64 if s == 64 else ((<uint64_t>1 << s) - 1)
    cdef int e
    if popcount64(x) < popcount64(y):
        x, y = y, x
    while y:
        e = ctz64(y)
        if e == 0:
            acc ^= x
        else:
            acc ^= ((x << e) | (x >> (s - e))) & full
        y &= y - 1
    return acc


cdef void _sweep(const uint64_t* B, Py_ssize_t dim, Py_ssize_t nwords,
                 uint64_t* word, int* best, uint64_t* best_i) noexcept nogil:
    cdef uint64_t i, top = (<uint64_t>1) << dim
    cdef Py_ssize_t k, row
    cdef int w
    for i in range(1, top):
        row = ctz64(i) * nwords
        w = 0
        for k in range(nwords):
            word[k] ^= B[row + k]
            w += popcount64(word[k])
        if w < best[0]:
            best[0] = w
            best_i[0] = i
            if w == 1:
                return


def gray_min_weight(basis, Py_ssize_t nbits):
    """Minimum weight over all nonzero F2-combinations of ``basis``.

    Returns ``(weight, i)``; the minimizing combination is ``i ^ (i >> 1)``.
    """
    cdef Py_ssize_t dim = len(basis)
    if dim == 0:
        raise ValueError("empty basis has no nonzero combination")
    if dim > 62:
        raise ValueError(f"basis of dimension {dim} is too large to enumerate")
    cdef Py_ssize_t nwords = (nbits + 63) // 64 if nbits > 0 else 1
    cdef uint64_t* B = <uint64_t*>malloc(dim * nwords * sizeof(uint64_t))
    cdef uint64_t* word = <uint64_t*>calloc(nwords, sizeof(uint64_t))
    cdef int best = nbits + 1
    cdef uint64_t best_i = 0
    cdef Py_ssize_t r, k
    if B == NULL or word == NULL:
        free(B)
        free(word)
        raise MemoryError()
    try:
        for r in range(dim):
            v = basis[r]
            for k in range(nwords):
                B[r * nwords + k] = (v >> (64 * k)) & MASK64
        with nogil:
            _sweep(B, dim, nwords, word, &best, &best_i)
    finally:
        free(B)
        free(word)
    return best, best_i
