"""Brute-force ground truth for tests and MDS checks.

Nothing here is fast or instrumented.  The decoder solves the expanded binary
generator by Gaussian elimination; ring facts are checked through the
isomorphism C_p ~ F2[x]/(h(x)); determinants are cofactor expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from . import gf2x
from .cauchy import CauchySystem
from .codec import CodeParams, ErasurePattern, encode, plan_decode
from .ring import BinomialExp, RingElement, constants


@dataclass(frozen=True)
class BinaryMatrix:
    bits: np.ndarray

    def __post_init__(self) -> None:
        b = np.asarray(self.bits, dtype=np.uint8)
        if b.ndim != 2 or 0 in b.shape:
            raise ValueError(f"binary matrix must be 2-D and non-empty, got shape {b.shape}")
        object.__setattr__(self, "bits", b)

    @property
    def rows(self) -> int:
        return self.bits.shape[0]

    @property
    def cols(self) -> int:
        return self.bits.shape[1]

    def rank(self) -> int:
        return _rank([_row_int(r) for r in self.bits])


def _row_int(row) -> int:
    return int.from_bytes(np.packbits(np.asarray(row, dtype=np.uint8), bitorder="little").tobytes(), "little")


def _rank(rows: list[int]) -> int:
    rank = 0
    rows = [r for r in rows if r]
    while rows:
        pivot = rows.pop()
        low = pivot & -pivot
        rows = [r ^ pivot if r & low else r for r in rows]
        rows = [r for r in rows if r]
        rank += 1
    return rank


# -- R_p and its quotient -------------------------------------------------------


def rp_mul(u: RingElement, v: RingElement) -> RingElement:
    """General product in R_p: carry-less multiply, then fold x^p onto 1."""
    if u.p != v.p:
        raise ValueError("modulus mismatch")
    p = u.p
    prod = gf2x.clmul(u.bits, v.bits)
    return RingElement(p, (prod ^ (prod >> p)) & ((1 << p) - 1))


def rp_inverse_binomial(e: BinomialExp, p: int) -> RingElement:
    """Closed-form inverse of x^t + x^(t+b): x^(p-t)(1 + x^2b + ... + x^(p-1)b), moved into C_p."""
    exps = [(p - e.t + 2 * m * e.b) % p for m in range((p + 1) // 2)]
    inv = RingElement.from_exponents(exps, p)
    if not inv.is_even_weight():
        inv = RingElement(p, inv.bits ^ constants(p)[1].bits)
    return inv


@dataclass(frozen=True)
class QuotientElement:
    """Element of F2[x]/(h(x)), h = 1 + x + ... + x^(p-1)."""

    p: int
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> (self.p - 1):
            raise ValueError("quotient element must have degree < p-1")

    @property
    def modulus(self) -> int:
        return (1 << self.p) - 1

    def __add__(self, other: QuotientElement) -> QuotientElement:
        return QuotientElement(self.p, self.bits ^ other.bits)

    def __mul__(self, other: QuotientElement) -> QuotientElement:
        return QuotientElement(self.p, gf2x.mod(gf2x.clmul(self.bits, other.bits), self.modulus))

    def inverse(self) -> QuotientElement:
        return QuotientElement(self.p, gf2x.invmod(self.bits, self.modulus))

    def is_unit(self) -> bool:
        return gf2x.gcd(self.bits, self.modulus) == 1


def theta(f: RingElement) -> QuotientElement:
    return QuotientElement(f.p, gf2x.mod(f.bits, (1 << f.p) - 1))


def phi(g: QuotientElement) -> RingElement:
    return rp_mul(RingElement(g.p, g.bits), constants(g.p)[0])


def _binomial_q(u: int, v: int, p: int) -> QuotientElement:
    return theta(RingElement.from_exponents([u, v], p))


MAX_DET_SIZE = 5


def det_bruteforce(sys: CauchySystem) -> QuotientElement:
    """Determinant of the Cauchy matrix over F2[x]/(h(x)) by cofactor expansion."""
    if sys.ell > MAX_DET_SIZE:
        raise ValueError(f"cofactor expansion limited to size {MAX_DET_SIZE}")
    p = sys.p
    m = [[_binomial_q(a, b, p).inverse() for b in sys.b_exps] for a in sys.a_exps]
    return _cofactor(m, p)


def _cofactor(m: list[list[QuotientElement]], p: int) -> QuotientElement:
    if len(m) == 1:
        return m[0][0]
    total = QuotientElement(p, 0)
    for j, lead in enumerate(m[0]):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total = total + lead * _cofactor(minor, p)  # signs vanish in characteristic 2
    return total


def divide_bruteforce(s: RingElement, e: BinomialExp) -> RingElement:
    """The quotient with top coefficient zero, found by trying all 2^(p-1) candidates."""
    p = s.p
    binom = RingElement.from_exponents(e.exponents, p)
    hits = [c for c in range(1 << (p - 1)) if rp_mul(RingElement(p, c), binom) == s]
    if len(hits) != 1:
        raise ValueError(f"expected one quotient with zero top coefficient, found {len(hits)}")
    return RingElement(p, hits[0])


# -- expanded generator and GF(2) decoding ----------------------------------------


def _unit_columns(params: CodeParams, i: int) -> list[list[int]]:
    cols = [[0] * params.rows for _ in range(params.k)]
    cols[i // params.rows][i % params.rows] = 1
    return cols


def expanded_generator(params: CodeParams) -> BinaryMatrix:
    """k(p-1) x (k+r)(p-1) matrix; row i is the codeword of unit vector i.

    Bit t of column c sits at matrix column c*(p-1) + t.
    """
    rows = [encode(params, _unit_columns(params, i)).array.T.ravel() for i in range(params.k * params.rows)]
    return BinaryMatrix(np.array(rows))


@lru_cache(maxsize=64)
def closed_form_generator(params: CodeParams) -> BinaryMatrix:
    """The same matrix built from closed-form inverses and general products.

    Stored parity polynomials have a zero top coefficient, so the canonical
    C_p sum is shifted by h(x) whenever its top coefficient is set.
    """
    p, rows = params.p, params.rows
    h = constants(p)[1]
    inverses = [[rp_inverse_binomial(params.generator_entry(i, j), p) for j in range(params.r)] for i in range(params.k)]
    out = []
    for u in range(params.k * rows):
        col, t = divmod(u, rows)
        s = RingElement(p, (1 << t) | (1 << (p - 1)))
        line = np.zeros((params.n, rows), dtype=np.uint8)
        line[col, t] = 1
        for j in range(params.r):
            c = rp_mul(s, inverses[col][j])
            if (c.bits >> (p - 1)) & 1:
                c = RingElement(p, c.bits ^ h.bits)
            line[params.k + j] = c.coeffs[:rows]
        out.append(line.ravel())
    return BinaryMatrix(np.array(out))


def decode_gf2(
    params: CodeParams,
    available: Mapping[int, Sequence[int]],
    pattern: ErasurePattern,
    generator: BinaryMatrix | None = None,
) -> np.ndarray:
    """Information bits, shape (p-1, k), by elimination on the punctured generator."""
    plan_decode(params, pattern, available)
    g = closed_form_generator(params) if generator is None else generator
    rows, unknowns = params.rows, params.k * params.rows
    equations = []
    for c, col in available.items():
        col = np.asarray(col, dtype=np.uint8).ravel()
        for t in range(rows):
            coeffs = _row_int(g.bits[:, c * rows + t])
            equations.append(coeffs | (int(col[t]) << unknowns))
    solution = _solve(equations, unknowns)
    bits = np.array([(solution >> u) & 1 for u in range(unknowns)], dtype=np.uint8)
    return bits.reshape(params.k, rows).T


def _solve(equations: list[int], unknowns: int) -> int:
    # each equation packs coefficient bits 0..unknowns-1 and the rhs above them
    coeff_mask = (1 << unknowns) - 1
    pivots: dict[int, int] = {}
    for eq in equations:
        for bit, row in pivots.items():
            if eq >> bit & 1:
                eq ^= row
        coeffs = eq & coeff_mask
        if not coeffs:
            if eq:
                raise ValueError("inconsistent system: columns are not a codeword")
            continue
        bit = (coeffs & -coeffs).bit_length() - 1
        for b, row in pivots.items():
            if row >> bit & 1:
                pivots[b] = row ^ eq
        pivots[bit] = eq
    if len(pivots) != unknowns:
        raise ValueError(f"singular system: rank {len(pivots)} < {unknowns}")
    solution = 0
    for bit, row in pivots.items():
        solution |= (row >> unknowns & 1) << bit
    return solution


# -- Cauchy systems ---------------------------------------------------------------


def _canonical(c: RingElement) -> RingElement:
    return c if c.is_even_weight() else RingElement(c.p, c.bits ^ constants(c.p)[1].bits)


def solve_cauchy_gf2(sys: CauchySystem, c: Sequence[RingElement]) -> list[RingElement]:
    """Solve C(x^a, x^b) s = c over C_p by elimination on the binary expansion.

    Unknowns are the low p-1 coefficients of each s_j (the top one is their
    parity); ``c`` may carry h(x) offsets, which are removed first.
    """
    p, ell, rows = sys.p, sys.ell, sys.p - 1
    inverses = [[rp_inverse_binomial(sys.entry(i, j), p) for j in range(ell)] for i in range(ell)]
    basis = [RingElement(p, (1 << t) | (1 << (p - 1))) for t in range(rows)]
    # images[j*rows + t][i] = row i of C applied to basis vector t in slot j
    images = [[rp_mul(basis[t], inverses[i][j]).bits for i in range(ell)] for j in range(ell) for t in range(rows)]
    unknowns = ell * rows
    target = [_canonical(ci).bits for ci in c]
    equations = []
    for i in range(ell):
        for bit in range(p):
            coeffs = sum(((images[u][i] >> bit) & 1) << u for u in range(unknowns))
            equations.append(coeffs | (((target[i] >> bit) & 1) << unknowns))
    solution = _solve(equations, unknowns)
    mask = (1 << rows) - 1
    return [RingElement.lift((solution >> (j * rows)) & mask, p) for j in range(ell)]
