"""The C(k, r, p) array code: encoding, erasure decoding, MDS verification.

A codeword is a (p-1) x (k+r) bit array.  Information column i holds the low
p-1 coefficients of the data polynomial s_i, whose top coefficient is the
parity of the rest.  Parity column j holds the low p-1 coefficients of

    c_j = sum_i  s_i / (x^j + x^(r+i))

computed with the simplified division, so every stored parity polynomial
has a zero top coefficient and is only defined up to h(x).  The decoder
feeds stored parity columns to the Cauchy solver as they are; the h(x)
ambiguity cancels inside the solve.

Single stripes go through :func:`encode`/:func:`decode` with optional XOR
counting.  Batches of stripes go through :func:`encode_array` and
:func:`decode_array`, which run the same algorithms bit-sliced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from .cauchy import CauchySystem, is_invertible, lu_solve
from .counter import XorCounter
from .ring import RingElement, binomial, is_prime
from .sliced import SlicedPoly, pack_rows, unpack_rows


class ErasureError(ValueError):
    """Raised when the surviving columns cannot determine the codeword."""


@dataclass(frozen=True)
class CodeParams:
    p: int
    k: int
    r: int

    def __post_init__(self) -> None:
        if not (self.p > 2 and is_prime(self.p)):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.k < 1 or self.r < 1:
            raise ValueError(f"k and r must be positive, got k={self.k}, r={self.r}")
        if self.k + self.r > self.p:
            raise ValueError(f"k + r = {self.k + self.r} exceeds p = {self.p}")

    @property
    def n(self) -> int:
        return self.k + self.r

    @property
    def rows(self) -> int:
        return self.p - 1

    def generator_entry(self, info: int, parity: int):
        """Binomial whose inverse multiplies data column ``info`` into parity ``parity``."""
        return binomial(parity, self.r + info)


@dataclass(frozen=True)
class ErasurePattern:
    lost_info: tuple[int, ...] = ()
    lost_parity: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for name in ("lost_info", "lost_parity"):
            v = getattr(self, name)
            if len(set(v)) != len(v):
                raise ValueError(f"{name} has duplicates: {v}")
            object.__setattr__(self, name, tuple(sorted(v)))

    @classmethod
    def from_missing(cls, params: CodeParams, missing) -> ErasurePattern:
        """Build a pattern from global column indices (parity j is k+j)."""
        missing = set(missing)
        bad = [c for c in missing if not 0 <= c < params.n]
        if bad:
            raise ValueError(f"column indices out of range: {sorted(bad)}")
        return cls(
            tuple(c for c in missing if c < params.k),
            tuple(c - params.k for c in missing if c >= params.k),
        )

    @property
    def size(self) -> int:
        return len(self.lost_info) + len(self.lost_parity)

    def missing(self, params: CodeParams) -> set[int]:
        return set(self.lost_info) | {params.k + j for j in self.lost_parity}

    def check(self, params: CodeParams) -> None:
        if any(not 0 <= i < params.k for i in self.lost_info):
            raise ValueError(f"information index out of range: {self.lost_info}")
        if any(not 0 <= j < params.r for j in self.lost_parity):
            raise ValueError(f"parity index out of range: {self.lost_parity}")
        if self.size > params.r:
            raise ErasureError(f"{self.size} erasures exceed the r = {params.r} the code tolerates")


@dataclass(frozen=True)
class DecodePlan:
    survivor_info: tuple[int, ...]
    helper_parity: tuple[int, ...]
    lost_info: tuple[int, ...]
    lost_parity: tuple[int, ...]
    system: CauchySystem | None


def all_patterns(params: CodeParams, max_size: int | None = None):
    """Every erasure pattern with at most ``max_size`` (default r) lost columns."""
    max_size = params.r if max_size is None else max_size
    for size in range(max_size + 1):
        for missing in combinations(range(params.n), size):
            yield ErasurePattern.from_missing(params, missing)


def plan_decode(params: CodeParams, pattern: ErasurePattern, available=None) -> DecodePlan:
    """Read every surviving information column and the lowest-indexed parities."""
    pattern.check(params)
    expected = set(range(params.n)) - pattern.missing(params)
    if available is not None and set(available) != expected:
        raise ErasureError(
            f"available columns {sorted(available)} disagree with the pattern (expected {sorted(expected)})"
        )
    lost = set(pattern.lost_info)
    survivors = tuple(i for i in range(params.k) if i not in lost)
    spare = [j for j in range(params.r) if j not in set(pattern.lost_parity)]
    gamma = len(pattern.lost_info)
    if len(spare) < gamma:
        raise ErasureError("not enough surviving parity columns")
    helpers = tuple(spare[:gamma])
    system = None
    if gamma:
        system = CauchySystem(helpers, tuple(params.r + i for i in pattern.lost_info), params.p)
    return DecodePlan(survivors, helpers, pattern.lost_info, pattern.lost_parity, system)


# -- generic core, shared by RingElement and SlicedPoly -----------------------


def _parity_poly(params: CodeParams, data: Sequence, j: int, ctr):
    acc = None
    for i, s in enumerate(data):
        term = s.div_binomial(params.generator_entry(i, j), ctr)
        acc = term if acc is None else acc.add(term, ctr)
    return acc


def _decode_polys(params: CodeParams, plan: DecodePlan, info: Mapping, parity: Mapping, ctr, lift, stored):
    """Recover all data polynomials and the lost parity polynomials.

    ``info`` maps surviving information indices to stored columns, ``parity``
    maps helper parity indices to stored columns; ``lift`` and ``stored`` build
    polynomials from them.
    """
    p = params.p
    data = {i: lift(info[i], p, ctr) for i in plan.survivor_info}
    if plan.system is not None:
        syndromes = []
        for helper in plan.helper_parity:
            acc = stored(parity[helper], p)
            for i in plan.survivor_info:
                acc = acc.add(data[i].div_binomial(binomial(helper, params.r + i), ctr), ctr)
            syndromes.append(acc)
        for i, s in zip(plan.lost_info, lu_solve(plan.system, syndromes, ctr)):
            data[i] = s
    ordered = [data[i] for i in range(params.k)]
    parities = {j: _parity_poly(params, ordered, j, ctr) for j in plan.lost_parity}
    return ordered, parities


# -- single stripe ------------------------------------------------------------


@dataclass(frozen=True)
class Codeword:
    params: CodeParams
    array: np.ndarray  # (p-1, k+r) of 0/1

    def __post_init__(self) -> None:
        a = np.asarray(self.array, dtype=np.uint8)
        if a.shape != (self.params.rows, self.params.n):
            raise ValueError(f"codeword array has shape {a.shape}")
        a.flags.writeable = False
        object.__setattr__(self, "array", a)

    @property
    def columns(self) -> list[np.ndarray]:
        return [self.array[:, c] for c in range(self.params.n)]

    @property
    def info(self) -> np.ndarray:
        return self.array[:, : self.params.k]

    @property
    def parity(self) -> np.ndarray:
        return self.array[:, self.params.k :]

    def available(self, pattern: ErasurePattern) -> dict[int, np.ndarray]:
        """Surviving columns after the erasures in ``pattern``."""
        gone = pattern.missing(self.params)
        return {c: self.array[:, c] for c in range(self.params.n) if c not in gone}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Codeword):
            return NotImplemented
        return self.params == other.params and np.array_equal(self.array, other.array)

    __hash__ = None


def _bits_to_int(col, rows: int) -> int:
    col = np.asarray(col).ravel()
    if col.shape != (rows,):
        raise ValueError(f"column must have {rows} bits, got shape {col.shape}")
    if np.any((col != 0) & (col != 1)):
        raise ValueError("column entries must be 0 or 1")
    return int(sum(int(b) << i for i, b in enumerate(col)))


def _int_to_bits(v: int, rows: int) -> np.ndarray:
    return np.array([(v >> i) & 1 for i in range(rows)], dtype=np.uint8)


def encode(params: CodeParams, info_columns, ctr: XorCounter | None = None) -> Codeword:
    """Encode k information columns of p-1 bits into a full codeword."""
    cols = list(info_columns) if not isinstance(info_columns, np.ndarray) else list(info_columns.T)
    if len(cols) != params.k:
        raise ValueError(f"expected {params.k} information columns, got {len(cols)}")
    p, rows = params.p, params.rows
    data = [RingElement.lift(_bits_to_int(c, rows), p, ctr) for c in cols]
    out = np.zeros((rows, params.n), dtype=np.uint8)
    for i, s in enumerate(data):
        out[:, i] = _int_to_bits(s.stored, rows)
    for j in range(params.r):
        out[:, params.k + j] = _int_to_bits(_parity_poly(params, data, j, ctr).stored, rows)
    return Codeword(params, out)


def decode(
    params: CodeParams,
    available: Mapping[int, Sequence[int]],
    pattern: ErasurePattern,
    ctr: XorCounter | None = None,
) -> Codeword:
    """Rebuild the whole codeword from the columns that survived ``pattern``.

    ``available`` maps global column indices (parity j is k+j) to p-1 bits.
    """
    plan = plan_decode(params, pattern, available)
    rows = params.rows
    out = np.zeros((rows, params.n), dtype=np.uint8)
    for c, col in available.items():
        out[:, c] = _int_to_bits(_bits_to_int(col, rows), rows)
    if pattern.size == 0:
        return Codeword(params, out)
    info = {i: _bits_to_int(available[i], rows) for i in plan.survivor_info}
    parity = {j: _bits_to_int(available[params.k + j], rows) for j in plan.helper_parity}
    data, parities = _decode_polys(
        params, plan, info, parity, ctr, RingElement.lift, RingElement.from_stored
    )
    for i in plan.lost_info:
        out[:, i] = _int_to_bits(data[i].stored, rows)
    for j, c in parities.items():
        out[:, params.k + j] = _int_to_bits(c.stored, rows)
    return Codeword(params, out)


# -- batches of stripes -------------------------------------------------------


def _check_batch(params: CodeParams, a: np.ndarray, ncols: int, what: str) -> np.ndarray:
    a = np.asarray(a, dtype=np.uint8)
    if a.ndim != 3 or a.shape[1:] != (params.rows, ncols):
        raise ValueError(f"{what} must have shape (n, {params.rows}, {ncols}), got {a.shape}")
    return a


def _slice_column(a: np.ndarray) -> list[int]:
    # (n, p-1) -> p-1 row ints over the batch
    return pack_rows(a.T)


def encode_array(params: CodeParams, data: np.ndarray) -> np.ndarray:
    """Encode a batch: (n, p-1, k) information bits -> (n, p-1, k+r) codewords."""
    data = _check_batch(params, data, params.k, "data")
    n, p = data.shape[0], params.p
    polys = [SlicedPoly.lift(_slice_column(data[:, :, i]), p) for i in range(params.k)]
    out = np.empty((n, params.rows, params.n), dtype=np.uint8)
    out[:, :, : params.k] = data
    for j in range(params.r):
        out[:, :, params.k + j] = unpack_rows(_parity_poly(params, polys, j, None).stored, n).T
    return out


def decode_array(
    params: CodeParams,
    available: Mapping[int, np.ndarray],
    pattern: ErasurePattern,
) -> np.ndarray:
    """Decode a batch: column index -> (n, p-1) bits, returns (n, p-1, k+r)."""
    plan = plan_decode(params, pattern, available)
    cols = {c: np.asarray(v, dtype=np.uint8) for c, v in available.items()}
    shapes = {v.shape for v in cols.values()}
    if len(shapes) != 1 or len(next(iter(shapes))) != 2 or next(iter(shapes))[1] != params.rows:
        raise ValueError(f"available columns must share shape (n, {params.rows}), got {shapes}")
    n = next(iter(shapes))[0]
    out = np.empty((n, params.rows, params.n), dtype=np.uint8)
    for c, v in cols.items():
        out[:, :, c] = v
    if pattern.size == 0:
        return out
    info = {i: _slice_column(cols[i]) for i in plan.survivor_info}
    parity = {j: _slice_column(cols[params.k + j]) for j in plan.helper_parity}
    data, parities = _decode_polys(params, plan, info, parity, None, SlicedPoly.lift, SlicedPoly.from_stored)
    for i in plan.lost_info:
        out[:, :, i] = unpack_rows(data[i].stored, n).T
    for j, c in parities.items():
        out[:, :, params.k + j] = unpack_rows(c.stored, n).T
    return out


# -- MDS verification ---------------------------------------------------------

EXHAUSTIVE_LIMIT = 4096


def _unit_batch(params: CodeParams) -> np.ndarray:
    m = params.k * params.rows
    return np.eye(m, dtype=np.uint8).reshape(m, params.k, params.rows).transpose(0, 2, 1)


def mds_check(params: CodeParams, method: str = "auto") -> bool:
    """Verify that any k columns determine the codeword.

    ``"decode"`` decodes every unit-vector codeword under every pattern of at
    most r erasures; the decoder is GF(2)-linear, so this covers every
    codeword.  ``"cauchy"`` checks that every square submatrix of the
    parity block has a unit determinant.  ``"auto"`` picks ``"decode"`` when
    the pattern count is at most ``EXHAUSTIVE_LIMIT``.
    """
    if method == "auto":
        from math import comb

        count = sum(comb(params.n, q) for q in range(params.r + 1))
        method = "decode" if count <= EXHAUSTIVE_LIMIT else "cauchy"
    if method == "decode":
        codewords = encode_array(params, _unit_batch(params))
        for pattern in all_patterns(params):
            gone = pattern.missing(params)
            avail = {c: codewords[:, :, c] for c in range(params.n) if c not in gone}
            if not np.array_equal(decode_array(params, avail, pattern), codewords):
                return False
        return True
    if method == "cauchy":
        parity_exps = range(params.r)
        info_exps = range(params.r, params.n)
        for ell in range(1, min(params.k, params.r) + 1):
            for a in combinations(parity_exps, ell):
                for b in combinations(info_exps, ell):
                    if not is_invertible(CauchySystem(a, b, params.p)):
                        return False
        return True
    raise ValueError(f"unknown method {method!r}")
