"""
Solving a Cauchy system with an LU factorization
================================================

The matrix has entries 1/(x^a_i + x^b_j).  Its inverse factors into
bidiagonal pieces, so solving needs only binomial multiplications and
divisions.
"""

from cauchy_mds import CauchySystem, RingElement, XorCounter, lu_solve
from cauchy_mds.cauchy import factorize, is_invertible
from cauchy_mds.oracle import solve_cauchy_gf2

sys = CauchySystem(a_exps=(0, 1), b_exps=(2, 3), p=5)
c = [RingElement.from_stored(0b0010, 5), RingElement.from_stored(0b1110, 5)]

for f in factorize(sys).factors:
    print(type(f).__name__, f)

ctr = XorCounter()
s = lu_solve(sys, c, ctr)
print("solution:", [str(v) for v in s], f"in {ctr.count} XORs")
# c was read with its top coefficient zeroed, so this may differ from it by h(x)
print("multiplying back:", [str(v) for v in sys.multiply(s)])

# Same answer by Gaussian elimination over the bits
print("by elimination:", [str(v) for v in solve_cauchy_gf2(sys, c)])
print("invertible:", is_invertible(sys))

# A bigger one
big = CauchySystem((0, 1, 2, 3), (5, 7, 9, 12), 13)
rhs = [RingElement.lift(v, 13) for v in (0x123, 0x456, 0x789, 0xABC)]
ctr = XorCounter()
lu_solve(big, rhs, ctr)
print("4x4 over p=13:", ctr.count, "XORs")
