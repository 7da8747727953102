"""Arithmetic in R_p = F2[x]/(1+x^p) and its even-weight subring C_p.

An element is a Python int whose bit i is the coefficient of x^i, so whole
elements are added and shifted word-parallel.  The codec only ever multiplies
or divides by monomials x^i and binomials x^t + x^(t+b); no general product
is provided here.

Every element also carries a structural ``zeros`` mask: positions that are
known to be zero regardless of the data (e.g. the top coefficient of a
division result).  The mask is bookkeeping for :class:`XorCounter` and does
not take part in equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from operator import xor
from typing import Sequence

from .counter import XorCounter, tally


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _mask(p: int) -> int:
    return (1 << p) - 1


def rotate(bits: int, i: int, p: int) -> int:
    """Cyclic left rotation of a p-bit word, i.e. multiplication by x^i."""
    i %= p
    if i == 0:
        return bits
    return ((bits << i) | (bits >> (p - i))) & _mask(p)


@dataclass(frozen=True)
class BinomialExp:
    """The binomial x^t + x^(t+b)."""

    t: int
    b: int

    def __post_init__(self) -> None:
        if self.t < 0 or self.b < 1:
            raise ValueError(f"invalid binomial exponents t={self.t}, b={self.b}")

    @property
    def exponents(self) -> tuple[int, int]:
        return self.t, self.t + self.b

    def check(self, p: int) -> None:
        if self.t + self.b > p - 1:
            raise ValueError(f"binomial x^{self.t}+x^{self.t + self.b} out of range for p={p}")


def binomial(u: int, v: int) -> BinomialExp:
    """x^u + x^v as a :class:`BinomialExp`, for distinct u, v."""
    if u == v:
        raise ValueError(f"x^{u} + x^{v} is zero, not a binomial")
    lo, hi = min(u, v), max(u, v)
    return BinomialExp(lo, hi - lo)


@dataclass(frozen=True)
class RingElement:
    p: int
    bits: int
    zeros: int = field(default=0, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.p < 3:
            raise ValueError(f"modulus p must be an odd prime, got {self.p}")
        if self.bits < 0 or self.bits >> self.p:
            raise ValueError(f"coefficient word does not fit in {self.p} bits")
        if self.bits & self.zeros:
            raise ValueError("a coefficient marked known-zero is set")

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> RingElement:
        return cls(p, 0)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], p: int | None = None) -> RingElement:
        p = len(coeffs) if p is None else p
        if len(coeffs) > p:
            raise ValueError(f"{len(coeffs)} coefficients do not fit in R_{p}")
        bits = 0
        for i, c in enumerate(coeffs):
            if c not in (0, 1):
                raise ValueError(f"coefficient {i} is {c!r}, expected 0 or 1")
            bits |= int(c) << i
        return cls(p, bits)

    @classmethod
    def from_exponents(cls, exps: Sequence[int], p: int) -> RingElement:
        """Sum of x^e over ``exps``; repeated exponents cancel."""
        bits = 0
        for e in exps:
            bits ^= 1 << (e % p)
        return cls(p, bits)

    @classmethod
    def lift(cls, stored: int, p: int, ctr: XorCounter | None = None) -> RingElement:
        """Append the parity-check bit to p-1 stored bits, landing in C_p.

        Costs p-2 XORs.
        """
        if stored >> (p - 1):
            raise ValueError(f"stored column does not fit in {p - 1} bits")
        tally(ctr, p - 2)
        parity = stored.bit_count() & 1
        return cls(p, stored | (parity << (p - 1)))

    @classmethod
    def from_stored(cls, stored: int, p: int) -> RingElement:
        """Treat p-1 stored bits as an element whose top coefficient is zero."""
        if stored >> (p - 1):
            raise ValueError(f"stored column does not fit in {p - 1} bits")
        return cls(p, stored, 1 << (p - 1))

    # -- queries ------------------------------------------------------------

    @property
    def coeffs(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.p)]

    @property
    def stored(self) -> int:
        """Coefficients of degrees 0..p-2."""
        return self.bits & _mask(self.p - 1)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_even_weight(self) -> bool:
        return self.weight % 2 == 0

    def exponents(self) -> list[int]:
        return [i for i in range(self.p) if (self.bits >> i) & 1]

    def __str__(self) -> str:
        terms = ["1" if e == 0 else "x" if e == 1 else f"x^{e}" for e in self.exponents()]
        return "+".join(terms) or "0"

    # -- arithmetic (method forms used by the generic solvers) --------------

    def __add__(self, other: RingElement) -> RingElement:
        return add(self, other)

    def add(self, other: RingElement, ctr: XorCounter | None = None) -> RingElement:
        return add(self, other, ctr)

    def shift(self, i: int) -> RingElement:
        return mul_monomial(self, i)

    def mul_binomial(self, e: BinomialExp, ctr: XorCounter | None = None) -> RingElement:
        return mul_binomial(self, e, ctr)

    def div_binomial(self, e: BinomialExp, ctr: XorCounter | None = None) -> RingElement:
        return div_binomial(self, e, ctr)


def constants(p: int) -> tuple[RingElement, RingElement]:
    """Return (e(x), h(x)): the identity of C_p and the check polynomial."""
    h = RingElement(p, _mask(p))
    return RingElement(p, h.bits ^ 1), h


def _same_ring(u: RingElement, v: RingElement) -> None:
    if u.p != v.p:
        raise ValueError(f"modulus mismatch: R_{u.p} vs R_{v.p}")


def add(u: RingElement, v: RingElement, ctr: XorCounter | None = None) -> RingElement:
    _same_ring(u, v)
    live = _mask(u.p) & ~(u.zeros | v.zeros)
    tally(ctr, live.bit_count())
    return RingElement(u.p, u.bits ^ v.bits, u.zeros & v.zeros)


def mul_monomial(u: RingElement, i: int) -> RingElement:
    p = u.p
    return RingElement(p, rotate(u.bits, i, p), rotate(u.zeros, i, p))


def mul_binomial(u: RingElement, e: BinomialExp, ctr: XorCounter | None = None) -> RingElement:
    """(x^t + x^(t+b)) * u, as the XOR of two shifted copies of u."""
    e.check(u.p)
    lo, hi = mul_monomial(u, e.t), mul_monomial(u, e.t + e.b)
    return add(lo, hi, ctr)


def divide_coefficients(s: Sequence[int], t: int, b: int, p: int) -> list[int]:
    """Solve c * (x^t + x^(t+b)) = s coefficient-wise, with c_(p-1) = 0.

    The items of ``s`` only need to support XOR, so this serves both single
    bits and bit-sliced rows holding one coefficient of many stripes.  Each
    coefficient costs at most one XOR; p-3 XORs in total.
    """
    c = [0] * p
    prev = p - b - 1
    c[prev] = s[(t - 1) % p]
    c[b - 1] = s[(t + b - 1) % p]
    for i in range(2, p - 1):
        idx = (p - i * b - 1) % p
        c[idx] = s[(t - (i - 1) * b - 1) % p] ^ c[prev]
        prev = idx
    return c


def _div_words(bits: int, e: BinomialExp, p: int) -> int:
    # multiply by the inverse x^(p-t)(1 + x^(2b) + ... + x^((p-1)b)), then
    # pick the coset representative with a zero top coefficient
    u = rotate(bits, p - e.t, p)
    c = 0
    for m in range((p + 1) // 2):
        c ^= rotate(u, 2 * m * e.b, p)
    if (c >> (p - 1)) & 1:
        c ^= _mask(p)
    return c


def _require_even(s: RingElement) -> None:
    if not s.is_even_weight():
        raise ValueError(f"dividend {s} has odd weight; division is defined on C_p only")


def div_binomial(s: RingElement, e: BinomialExp, ctr: XorCounter | None = None) -> RingElement:
    """The quotient s / (x^t + x^(t+b)) with top coefficient zero.

    The result may have odd weight, in which case the even-weight quotient is
    the result plus h(x).  With a counter, the bit-serial recurrence runs and
    charges exactly p-3 XORs; without one, a word-parallel route is used.
    Both give the same coefficients.
    """
    p = s.p
    e.check(p)
    _require_even(s)
    if ctr is None:
        bits = _div_words(s.bits, e, p)
    else:
        c = divide_coefficients(s.coeffs, e.t, e.b, p)
        tally(ctr, p - 3)
        bits = sum(bit << i for i, bit in enumerate(c))
    return RingElement(p, bits, 1 << (p - 1))


def div_binomial_canonical(s: RingElement, e: BinomialExp) -> RingElement:
    """The unique even-weight quotient s / (x^t + x^(t+b)) in C_p."""
    p = s.p
    e.check(p)
    _require_even(s)
    c = divide_coefficients(s.coeffs, e.t, e.b, p)
    if sum(c) % 2:
        c = [bit ^ 1 for bit in c]
    return RingElement.from_coeffs(c, p)


def inverse_binomial(e: BinomialExp, p: int) -> RingElement:
    """1 / (x^t + x^(t+b)) in C_p."""
    return div_binomial_canonical(constants(p)[0], e)


def parity_of_rows(rows: Sequence[int]) -> int:
    return reduce(xor, rows, 0)
