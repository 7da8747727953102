import io

import numpy as np
import pytest

from cauchy_mds.codec import CodeParams, ErasurePattern
from cauchy_mds.metrics import (
    CSV_COLUMNS,
    circulant_decode_normalized,
    circulant_encode_normalized,
    lu_solve_bound,
    measure_decode,
    measure_encode,
    normalized_curves,
    predict_decode_xors,
    predict_encode_xors,
    write_csv,
)

FLATNESS_LIMIT = 0.15


def test_encode_formula_examples():
    assert predict_encode_xors(5, 2, 2) == 22
    assert predict_encode_xors(11, 3, 0) == 3 * 9


def test_decode_formula_examples():
    assert predict_decode_xors(5, 2, 2, 0) == 38
    # lifting the k survivors, then one parity re-encode
    assert predict_decode_xors(7, 3, 0, 1) == 3 * 5 + 3 * 4 + 2 * 6
    assert predict_decode_xors(7, 3, 0, 0) == 3 * 5
    assert lu_solve_bound(2, 5) == 38


def test_decode_formula_rejects_bad_counts():
    with pytest.raises(ValueError):
        predict_decode_xors(5, 2, 3, 0)


def test_measured_encode_matches(rng):
    assert measure_encode(CodeParams(7, 3, 4), rng) == predict_encode_xors(7, 3, 4)


def test_measured_decode_within_bound(rng):
    params = CodeParams(11, 6, 5)
    for pattern in [ErasurePattern((0, 1, 2), (0, 4)), ErasurePattern((5,), ()), ErasurePattern((), (1,))]:
        got = measure_decode(params, pattern, rng)
        assert got <= predict_decode_xors(11, 6, len(pattern.lost_info), len(pattern.lost_parity))


def test_circulant_forms():
    assert circulant_encode_normalized(11, 4) == pytest.approx(10 + 3 / 70)
    assert circulant_decode_normalized(11, 4) == pytest.approx((3 * 4 * 11 * 7 + 6 * 16 * 11) / 70)


@pytest.fixture(scope="module")
def curves():
    return {r: normalized_curves(r, p_max=101) for r in (4, 5)}


@pytest.mark.parametrize("r", [4, 5])
def test_curves_dominate_circulant(curves, r):
    rows = curves[r]
    assert {row.p for row in rows} == {p for p in range(2 * r + 1, 102) if all(p % d for d in range(2, p))}
    for row in rows:
        assert row.dominates and row.normalized_proposed < row.normalized_circulant
        if row.mode == "encode":
            assert row.proposed_measured == row.proposed_formula
        else:
            assert row.proposed_measured <= row.proposed_formula


def _spread(rows):
    values = np.array([row.normalized_proposed for row in rows if row.mode == "decode"])
    return (values.max() - values.min()) / values.mean()


def test_r4_decode_curve_spread(curves):
    # 10.70 at p=11 down to 9.08 at p=101
    assert _spread(curves[4]) == pytest.approx(0.174, abs=0.001)


@pytest.mark.xfail(strict=True, reason="closed form varies by about 17% over 11 <= p <= 101")
def test_r4_decode_curve_near_constant(curves):
    assert _spread(curves[4]) < FLATNESS_LIMIT


def test_csv_layout(curves):
    buf = io.StringIO(newline="")
    write_csv(curves[4][:2], buf)
    text = buf.getvalue()
    lines = text.split("\n")
    assert "\r" not in text
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert CSV_COLUMNS[:9] == [
        "p", "k", "r", "mode", "proposed_formula", "proposed_measured",
        "circulant_formula", "normalized_proposed", "normalized_circulant",
    ]
    assert lines[1].startswith("11,7,4,encode,") and lines[1].endswith(",true")
    assert lines[2].startswith("11,7,4,decode,")


@pytest.mark.parametrize("p_range", [[15], [7], [9, 11]])
def test_curves_reject_bad_primes(p_range):
    with pytest.raises(ValueError):
        normalized_curves(4, p_range)
