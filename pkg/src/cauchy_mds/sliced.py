"""Bit-sliced polynomials: many stripes processed with one XOR per coefficient.

Row i of a :class:`SlicedPoly` is an int whose bit n is the coefficient of
x^i in stripe n.  Shifts permute rows and additions XOR them, so a batch of
stripes costs the same number of Python operations as a single one.  This is
the throughput path; XOR accounting lives on :class:`~cauchy_mds.ring.RingElement`.
"""

from __future__ import annotations

from operator import xor
from typing import Sequence

import numpy as np

from .ring import BinomialExp, divide_coefficients, parity_of_rows


class SlicedPoly:
    __slots__ = ("p", "rows")

    def __init__(self, p: int, rows: Sequence[int]):
        if len(rows) != p:
            raise ValueError(f"expected {p} rows, got {len(rows)}")
        self.p = p
        self.rows = tuple(rows)

    @classmethod
    def lift(cls, stored: Sequence[int], p: int, ctr=None) -> SlicedPoly:
        _no_counter(ctr)
        return cls(p, (*stored, parity_of_rows(stored)))

    @classmethod
    def from_stored(cls, stored: Sequence[int], p: int) -> SlicedPoly:
        return cls(p, (*stored, 0))

    @property
    def stored(self) -> tuple[int, ...]:
        return self.rows[:-1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SlicedPoly):
            return NotImplemented
        return self.p == other.p and self.rows == other.rows

    def __repr__(self) -> str:
        return f"SlicedPoly(p={self.p}, rows={self.rows})"

    def shift(self, i: int) -> SlicedPoly:
        i %= self.p
        if i == 0:
            return self
        r = self.rows
        return SlicedPoly(self.p, r[-i:] + r[:-i])

    def add(self, other: SlicedPoly, ctr=None) -> SlicedPoly:
        _no_counter(ctr)
        return SlicedPoly(self.p, tuple(map(xor, self.rows, other.rows)))

    __add__ = add

    def mul_binomial(self, e: BinomialExp, ctr=None) -> SlicedPoly:
        _no_counter(ctr)
        return self.shift(e.t).add(self.shift(e.t + e.b))

    def div_binomial(self, e: BinomialExp, ctr=None) -> SlicedPoly:
        _no_counter(ctr)
        e.check(self.p)
        if parity_of_rows(self.rows):
            raise ValueError("dividend has odd weight in some stripe")
        return SlicedPoly(self.p, divide_coefficients(self.rows, e.t, e.b, self.p))


def _no_counter(ctr) -> None:
    if ctr is not None:
        raise TypeError("bit-sliced batches do not support XOR counting")


def pack_rows(bits: np.ndarray) -> list[int]:
    """(rows, n) 0/1 array -> one int per row, bit j = column j."""
    bits = np.ascontiguousarray(bits, dtype=np.uint8)
    packed = np.packbits(bits, axis=-1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def unpack_rows(rows: Sequence[int], n: int) -> np.ndarray:
    """Inverse of :func:`pack_rows` for batches of ``n`` stripes."""
    nbytes = (n + 7) // 8
    buf = b"".join(r.to_bytes(nbytes, "little") for r in rows)
    packed = np.frombuffer(buf, dtype=np.uint8).reshape(len(rows), nbytes)
    return np.unpackbits(packed, axis=-1, count=n, bitorder="little")
