"""
Arithmetic in the binary cyclic ring
====================================

Polynomials over F2 modulo 1 + x^p, stored as ints (bit i is the
coefficient of x^i).  Multiplying by x is a cyclic shift and adding is XOR.
"""

from cauchy_mds import BinomialExp, RingElement, XorCounter
from cauchy_mds.ring import constants, inverse_binomial

p = 5
s = RingElement.from_exponents([0, 1], p)  # 1 + x
print("s         =", s)
print("x^3 * s   =", s.shift(3))
print("s + x^2 s =", s + s.shift(2))

# h(x) is the all-ones polynomial; e(x) = h(x) + 1 acts as the identity on
# even-weight polynomials.
e, h = constants(p)
print("e =", e, "  h =", h)

# Dividing by a binomial x^t + x^(t+b) is a short XOR recurrence.  The
# counter shows it costs p - 3 XORs.
ctr = XorCounter()
q = s.div_binomial(BinomialExp(0, 2), ctr)
print("(1+x) / (1+x^2) =", q, f"({ctr.count} XORs)")
print("check:", q.mul_binomial(BinomialExp(0, 2)))

# The quotient may come back shifted by h(x); multiplying by any binomial
# wipes that out, so it never matters downstream.
print("1/(1+x^2) =", inverse_binomial(BinomialExp(0, 2), p))
