import itertools

import numpy as np
import pytest

from cauchy_mds.codec import CodeParams, ErasurePattern, decode, encode
from cauchy_mds.oracle import (
    BinaryMatrix,
    QuotientElement,
    closed_form_generator,
    decode_gf2,
    expanded_generator,
    phi,
    rp_inverse_binomial,
    rp_mul,
    theta,
)
from cauchy_mds.ring import BinomialExp, RingElement, constants, inverse_binomial

from conftest import PRIMES, poly, random_even, reference_table

GOLDEN_INFO = np.array([[1, 0], [1, 1], [0, 0], [0, 1]], dtype=np.uint8)


def test_theta_example():
    assert theta(poly(5, 0, 4)) == QuotientElement(5, 0b1110)


def test_phi_example():
    assert phi(QuotientElement(5, 0b1110)) == poly(5, 0, 4)


def test_zero_maps_to_zero():
    assert theta(RingElement.zero(5)).bits == 0
    assert phi(QuotientElement(5, 0)) == RingElement.zero(5)


def test_phi_theta_identity_exhaustive_p5():
    for bits in range(1 << 5):
        f = RingElement(5, bits)
        if f.is_even_weight():
            assert phi(theta(f)) == f


@pytest.mark.parametrize("p", [7, 11, 13])
def test_phi_theta_identity_random(rng, p):
    for _ in range(300):
        f = random_even(rng, p)
        assert phi(theta(f)) == f


@pytest.mark.parametrize("p", PRIMES)
def test_theta_is_a_homomorphism(rng, p):
    for _ in range(200):
        u, v = random_even(rng, p), random_even(rng, p)
        assert theta(u + v) == theta(u) + theta(v)
        assert theta(rp_mul(u, v)) == theta(u) * theta(v)


@pytest.mark.parametrize("p", PRIMES)
def test_closed_form_inverse(p):
    e = constants(p)[0]
    for t in range(p):
        for b in range(1, p - t):
            be = BinomialExp(t, b)
            inv = rp_inverse_binomial(be, p)
            assert rp_mul(inv, RingElement.from_exponents(be.exponents, p)) == e
            assert inv == inverse_binomial(be, p)


def test_quotient_inverse():
    q = QuotientElement(7, 0b101)
    assert (q * q.inverse()).bits == 1


def test_quotient_degree_checked():
    with pytest.raises(ValueError):
        QuotientElement(5, 0b10000)


def test_binary_matrix():
    m = BinaryMatrix(np.array([[1, 0, 1], [0, 1, 1], [1, 1, 0]]))
    assert (m.rows, m.cols, m.rank()) == (3, 3, 2)
    with pytest.raises(ValueError):
        BinaryMatrix(np.zeros((0, 3)))


def _parity_block():
    g = expanded_generator(CodeParams(5, 2, 2)).bits
    assert g.shape == (8, 16)
    return g[:, 8:].reshape(8, 2, 4).transpose(0, 2, 1)


def test_generator_matches_reference_table_except_one_block():
    parity, table = _parity_block(), reference_table()
    # disk 2 entirely, and the s_1 half of disk 3
    assert np.array_equal(parity[:, :, 0], table[:, :, 0])
    assert np.array_equal(parity[4:, :, 1], table[4:, :, 1])


def test_table_disk3_block_is_a_copy_of_disk2():
    # The s_0 half of disk 3 in the table equals the s_0 half of disk 2, i.e.
    # division by 1+x^2 rather than x+x^2, and it would give c_1 = 1+x+x^3 for
    # the worked example instead of the stated x+x^2+x^3.
    table = reference_table()
    assert np.array_equal(table[:4, :, 1], table[:4, :, 0])
    s = np.concatenate([GOLDEN_INFO[:, 0], GOLDEN_INFO[:, 1]])
    table_c1 = (s @ table[:, :, 1].reshape(8, 4)) % 2
    assert table_c1.tolist() == [1, 1, 0, 1]
    assert encode(CodeParams(5, 2, 2), GOLDEN_INFO).parity[:, 1].tolist() == [0, 1, 1, 1]


@pytest.mark.xfail(strict=True, reason="reference table's disk 3 s_0 block is a duplicate of disk 2's")
def test_generator_matches_reference_table_verbatim():
    assert np.array_equal(_parity_block(), reference_table())


@pytest.mark.parametrize("p,k,r", [(5, 2, 2), (7, 3, 4), (11, 4, 3), (13, 1, 5), (7, 6, 1)])
def test_generators_agree(p, k, r):
    params = CodeParams(p, k, r)
    g = expanded_generator(params)
    assert np.array_equal(g.bits, closed_form_generator(params).bits)
    m = k * (p - 1)
    assert np.array_equal(g.bits[:, :m], np.eye(m, dtype=np.uint8))


def test_k1_identity_block():
    g = expanded_generator(CodeParams(7, 1, 3)).bits
    assert np.array_equal(g[:, :6], np.eye(6, dtype=np.uint8))
    assert g.shape == (6, 24)


def test_decode_gf2_golden():
    params = CodeParams(5, 2, 2)
    cw = encode(params, GOLDEN_INFO)
    pattern = ErasurePattern((0, 1), ())
    assert np.array_equal(decode_gf2(params, cw.available(pattern), pattern), GOLDEN_INFO)


def test_decode_gf2_no_erasures():
    params = CodeParams(5, 2, 2)
    cw = encode(params, GOLDEN_INFO)
    assert np.array_equal(decode_gf2(params, cw.available(ErasurePattern()), ErasurePattern()), GOLDEN_INFO)


def test_decode_gf2_agrees_with_codec(rng):
    params = CodeParams(11, 3, 4)
    for _ in range(50):
        info = rng.integers(0, 2, size=(10, 3), dtype=np.uint8)
        cw = encode(params, info)
        missing = rng.choice(params.n, size=int(rng.integers(0, 5)), replace=False)
        pattern = ErasurePattern.from_missing(params, missing.tolist())
        avail = cw.available(pattern)
        assert np.array_equal(decode_gf2(params, avail, pattern), decode(params, avail, pattern).info)


def test_decode_gf2_rejects_non_codeword():
    params = CodeParams(5, 2, 2)
    cw = encode(params, GOLDEN_INFO)
    avail = {c: np.array(v) for c, v in cw.available(ErasurePattern()).items()}
    avail[3] = avail[3] ^ 1
    with pytest.raises(ValueError, match="inconsistent"):
        decode_gf2(params, avail, ErasurePattern())
