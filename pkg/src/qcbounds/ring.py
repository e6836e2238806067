"""Arithmetic in the quotient ring F2[x]/(x^s - 1).

A ring element is stored as an integer bit mask: bit ``e`` is the coefficient
of ``x^e``. Multiplication by ``x^e`` is a cyclic rotation of the mask, so a
product is an XOR of rotated copies of one factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from qcbounds._core import cyclic_mul

#: Largest supported circulant size.
MAX_S = 512


def _check_s(s: int) -> None:
    if not isinstance(s, int) or s < 1:
        raise ValueError(f"modulus size must be a positive integer, got {s!r}")
    if s > MAX_S:
        raise ValueError(f"modulus size {s} exceeds the cap of {MAX_S}")


@dataclass(frozen=True)
class CyclicPoly:
    """Element of F2[x]/(x^s - 1)."""

    s: int
    mask: int = 0

    def __post_init__(self):
        _check_s(self.s)
        if self.mask < 0 or self.mask >> self.s:
            raise ValueError(f"mask {self.mask:#x} has bits outside [0, {self.s})")

    @classmethod
    def from_support(cls, s: int, support: Iterable[int]) -> CyclicPoly:
        """Build from exponents; repeated exponents cancel in pairs."""
        mask = 0
        for e in support:
            if not 0 <= e < s:
                raise ValueError(f"exponent {e} out of range [0, {s})")
            mask ^= 1 << e
        return cls(s, mask)

    @classmethod
    def zero(cls, s: int) -> CyclicPoly:
        return cls(s, 0)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.exponents())

    def exponents(self) -> list[int]:
        """Exponents with nonzero coefficient, ascending."""
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    @property
    def weight(self) -> int:
        return self.mask.bit_count()

    def is_zero(self) -> bool:
        return self.mask == 0

    def __bool__(self) -> bool:
        return self.mask != 0

    def __add__(self, other: CyclicPoly) -> CyclicPoly:
        return poly_add(self, other)

    def __mul__(self, other: CyclicPoly) -> CyclicPoly:
        return poly_mul(self, other)

    def __str__(self) -> str:
        return render(self)


def _same_ring(a: CyclicPoly, b: CyclicPoly) -> None:
    if a.s != b.s:
        raise ValueError(f"modulus mismatch: s={a.s} vs s={b.s}")


def poly_add(a: CyclicPoly, b: CyclicPoly) -> CyclicPoly:
    _same_ring(a, b)
    return CyclicPoly(a.s, a.mask ^ b.mask)


def poly_mul(a: CyclicPoly, b: CyclicPoly) -> CyclicPoly:
    _same_ring(a, b)
    return CyclicPoly(a.s, cyclic_mul(a.mask, b.mask, a.s))


def all_ones(s: int) -> CyclicPoly:
    """The polynomial 1 + x + ... + x^(s-1)."""
    _check_s(s)
    return CyclicPoly(s, (1 << s) - 1)


def monomial(s: int, a: int) -> CyclicPoly:
    _check_s(s)
    if not 0 <= a < s:
        raise ValueError(f"exponent {a} out of range [0, {s})")
    return CyclicPoly(s, 1 << a)


def poly_weight(a: CyclicPoly) -> int:
    """Number of nonzero coefficients."""
    return a.weight


def render(a: CyclicPoly) -> str:
    """Human-readable form, e.g. ``1+x+x^3``; ``0`` for the zero element."""
    if not a.mask:
        return "0"
    terms = []
    for e in a.exponents():
        if e == 0:
            terms.append("1")
        elif e == 1:
            terms.append("x")
        else:
            terms.append(f"x^{e}")
    return "+".join(terms)


def parse_poly(text: str, s: int) -> CyclicPoly:
    """Inverse of :func:`render`. Exponents are reduced modulo ``s``."""
    text = text.replace(" ", "")
    if text == "0":
        return CyclicPoly.zero(s)
    mask = 0
    for term in text.split("+"):
        if term == "1":
            e = 0
        elif term == "x":
            e = 1
        elif term.startswith("x^") and term[2:].isdigit():
            e = int(term[2:])
        else:
            raise ValueError(f"cannot parse term {term!r}")
        mask ^= 1 << (e % s)
    return CyclicPoly(s, mask)
