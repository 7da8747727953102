"""
Cross-checking against brute force
==================================

The oracle module does things the slow, obvious way: Gaussian elimination on
the expanded binary generator, and determinants over F2[x]/h(x).
"""

import numpy as np

from cauchy_mds import CauchySystem, CodeParams, ErasurePattern, decode, encode, mds_check
from cauchy_mds.cauchy import evaluate_determinant
from cauchy_mds.oracle import QuotientElement, decode_gf2, det_bruteforce, expanded_generator, phi, theta
from cauchy_mds.ring import RingElement

f = RingElement.from_exponents([0, 4], 5)
print("theta(1+x^4) =", bin(theta(f).bits), "  phi back:", phi(theta(f)))

g = expanded_generator(CodeParams(5, 2, 2))
print("generator", g.bits.shape, "rank", g.rank())
print(g.bits[:, 8:])

params = CodeParams(11, 3, 4)
rng = np.random.default_rng(7)
cw = encode(params, rng.integers(0, 2, size=(10, 3)))
pattern = ErasurePattern((0, 2), (1,))
avail = cw.available(pattern)
print("fast == elimination:", np.array_equal(decode(params, avail, pattern).info, decode_gf2(params, avail, pattern)))

sys = CauchySystem((0, 1, 2), (3, 4, 6), 7)
print("det:", theta(evaluate_determinant(sys)) == det_bruteforce(sys), det_bruteforce(sys).is_unit())
print("C(3,4,11) is MDS:", mds_check(params))
