"""XOR-complexity accounting: closed forms, instrumented measurements, CSV curves.

Normalized figures divide by the k(p-1) information bits of one stripe.  The
comparison baseline is the Circulant Cauchy code (whose encoding cost equals
that of Rabin-like codes), through its closed-form counts.
"""

from __future__ import annotations

import csv
from dataclasses import astuple, dataclass, fields
from typing import Iterable, TextIO

import numpy as np

from .codec import CodeParams, ErasurePattern, decode, encode
from .counter import XorCounter
from .ring import is_prime

__all__ = [
    "XorCounter",
    "ComplexityRow",
    "predict_encode_xors",
    "predict_decode_xors",
    "lu_solve_bound",
    "measure_encode",
    "measure_decode",
    "normalized_curves",
    "write_csv",
]


def predict_encode_xors(p: int, k: int, r: int) -> int:
    return k * (p - 2) + r * (2 * k * p - 4 * k - p + 1)


def lu_solve_bound(ell: int, p: int) -> int:
    """Upper bound on the XORs of one l x l Cauchy solve."""
    return 4 * ell * ell * p - 3 * ell * p - 5 * ell * ell + 3 * ell + 2


def predict_decode_xors(p: int, k: int, gamma: int, delta: int) -> int:
    """Upper bound for recovering ``gamma`` information and ``delta`` parity columns.

    With no information erasures there is no Cauchy solve, so its term is dropped.
    """
    if gamma > k or gamma < 0 or delta < 0:
        raise ValueError(f"invalid erasure counts gamma={gamma}, delta={delta} for k={k}")
    survivors = k - gamma
    return (
        survivors * (p - 2)
        + gamma * survivors * (2 * p - 4)
        + (lu_solve_bound(gamma, p) if gamma else 0)
        + delta * (k * (p - 3) + (k - 1) * (p - 1))
    )


def circulant_encode_normalized(p: int, r: int) -> float:
    k = p - r
    return 3 * r - 2 + (k - r) / (k * (p - 1))


def circulant_decode_normalized(p: int, r: int) -> float:
    return (3 * r * p * (p - r) + 6 * r * r * p) / ((p - r) * (p - 1))


def _random_info(params: CodeParams, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, 2, size=(params.rows, params.k), dtype=np.uint8)


def measure_encode(params: CodeParams, rng: np.random.Generator | None = None) -> int:
    rng = np.random.default_rng() if rng is None else rng
    ctr = XorCounter()
    encode(params, _random_info(params, rng), ctr)
    return ctr.count


def measure_decode(params: CodeParams, pattern: ErasurePattern, rng: np.random.Generator | None = None) -> int:
    rng = np.random.default_rng() if rng is None else rng
    cw = encode(params, _random_info(params, rng))
    ctr = XorCounter()
    decode(params, cw.available(pattern), pattern, ctr)
    return ctr.count


@dataclass(frozen=True)
class ComplexityRow:
    p: int
    k: int
    r: int
    mode: str
    proposed_formula: int
    proposed_measured: int
    circulant_formula: float
    normalized_proposed: float
    normalized_circulant: float
    reduction_pct: float
    dominates: bool


def _row(p: int, r: int, mode: str, formula: int, measured: int, circulant: float) -> ComplexityRow:
    k = p - r
    normalized = formula / (k * (p - 1))
    return ComplexityRow(
        p=p,
        k=k,
        r=r,
        mode=mode,
        proposed_formula=formula,
        proposed_measured=measured,
        circulant_formula=circulant * k * (p - 1),
        normalized_proposed=normalized,
        normalized_circulant=circulant,
        reduction_pct=100.0 * (circulant - normalized) / circulant,
        dominates=normalized < circulant,
    )


def normalized_curves(r: int, p_range: Iterable[int] | None = None, p_max: int = 101, seed: int = 0) -> list[ComplexityRow]:
    """Encode and decode rows for C(p-r, r, p) over ``p_range``.

    The default range is every prime 2r < p <= p_max.  Decode rows erase r
    information columns.
    """
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if p_range is None:
        p_range = [p for p in range(2 * r + 1, p_max + 1) if is_prime(p)]
    rng = np.random.default_rng(seed)
    rows = []
    for p in p_range:
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p <= 2 * r:
            raise ValueError(f"p = {p} must exceed 2r = {2 * r} so that k = p - r >= r")
        params = CodeParams(p, p - r, r)
        rows.append(
            _row(p, r, "encode", predict_encode_xors(p, p - r, r), measure_encode(params, rng), circulant_encode_normalized(p, r))
        )
        pattern = ErasurePattern(tuple(range(r)), ())
        rows.append(
            _row(p, r, "decode", predict_decode_xors(p, p - r, r, 0), measure_decode(params, pattern, rng), circulant_decode_normalized(p, r))
        )
    return rows


CSV_COLUMNS = [f.name for f in fields(ComplexityRow)]


def write_csv(rows: Iterable[ComplexityRow], fh: TextIO) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow(["true" if v is True else "false" if v is False else v for v in astuple(row)])
