"""
Encoding and repairing a codeword
=================================

C(k, r, p) stores k information columns and r parity columns of p-1 bits
each.  Any r lost columns can be rebuilt.
"""

import numpy as np

from cauchy_mds import CodeParams, ErasurePattern, XorCounter, decode, encode, plan_decode
from cauchy_mds.codec import decode_array, encode_array

params = CodeParams(p=5, k=2, r=2)
info = np.array([[1, 0], [1, 1], [0, 0], [0, 1]])  # s0 = 1+x, s1 = x+x^3
ctr = XorCounter()
cw = encode(params, info, ctr)
print(cw.array)
print("encoding cost:", ctr.count, "XORs")

# lose both information columns
pattern = ErasurePattern(lost_info=(0, 1))
print(plan_decode(params, pattern))
ctr = XorCounter()
back = decode(params, cw.available(pattern), pattern, ctr)
print("recovered:", back == cw, "with", ctr.count, "XORs")

# Batches run bit-sliced: one Python int per row across all stripes.
params = CodeParams(13, 8, 5)
rng = np.random.default_rng(1)
data = rng.integers(0, 2, size=(10_000, 12, 8), dtype=np.uint8)
codewords = encode_array(params, data)
pattern = ErasurePattern.from_missing(params, [0, 3, 5, 9, 12])
avail = {c: codewords[:, :, c] for c in range(params.n) if c not in pattern.missing(params)}
print("10k stripes repaired:", np.array_equal(decode_array(params, avail, pattern), codewords))
