"""Square Cauchy systems over C_p and their LU-factorized solver.

The matrix has entry (i, j) = 1 / (x^a_i + x^b_j).  Its inverse factors into
bidiagonal and diagonal matrices whose entries are binomials or inverses of
binomials, so a solve needs only shifts, XORs and binomial divisions:

    C^-1 = U^1 ... U^(l-1) D L^(l-1) ... L^1

Factors are kept as exponent data and applied to the right-hand side as
vector recurrences; no matrix of polynomials is ever built.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence, Union

from . import gf2x
from .counter import XorCounter
from .ring import (
    BinomialExp,
    RingElement,
    binomial,
    constants,
    div_binomial_canonical,
    is_prime,
    mul_binomial,
)


@dataclass(frozen=True)
class CauchySystem:
    a_exps: tuple[int, ...]
    b_exps: tuple[int, ...]
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_exps", tuple(self.a_exps))
        object.__setattr__(self, "b_exps", tuple(self.b_exps))
        if not (self.p > 2 and is_prime(self.p)):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if len(self.a_exps) != len(self.b_exps) or not self.a_exps:
            raise ValueError("a- and b-exponent lists must be non-empty and of equal length")
        exps = self.a_exps + self.b_exps
        if len(set(exps)) != len(exps):
            raise ValueError(f"exponents must be pairwise distinct: {exps}")
        if any(not 0 <= e < self.p for e in exps):
            raise ValueError(f"exponents must lie in [0, {self.p - 1}]: {exps}")

    @property
    def ell(self) -> int:
        return len(self.a_exps)

    def entry(self, i: int, j: int) -> BinomialExp:
        """The binomial whose inverse sits at (i, j), 0-indexed."""
        return binomial(self.a_exps[i], self.b_exps[j])

    def multiply(self, s: Sequence[RingElement]) -> list[RingElement]:
        """C * s in C_p, for even-weight s."""
        if len(s) != self.ell:
            raise ValueError(f"expected {self.ell} components, got {len(s)}")
        out = []
        for i in range(self.ell):
            acc = RingElement.zero(self.p)
            for j in range(self.ell):
                acc = acc + div_binomial_canonical(s[j], self.entry(i, j))
            out.append(acc)
        return out


@dataclass(frozen=True)
class LowerFactor:
    """L^i: a lower-bidiagonal update followed by divisions of rows i+1..l.

    ``lower[m]`` holds the (sub-diagonal, diagonal) multipliers of row
    i+1+m, ``divisors[m]`` the binomial that row is divided by.
    """

    i: int
    lower: tuple[tuple[BinomialExp, BinomialExp], ...]
    divisors: tuple[BinomialExp, ...]


@dataclass(frozen=True)
class DiagonalFactor:
    diag: tuple[BinomialExp, ...]


@dataclass(frozen=True)
class UpperFactor:
    """U^i: divisions of rows i+1..l followed by an upper-bidiagonal update.

    ``diag[m]`` multiplies row i+1+m (row i keeps the identity) and
    ``upper[m]`` multiplies the neighbour below row i+m.
    """

    i: int
    divisors: tuple[BinomialExp, ...]
    diag: tuple[BinomialExp, ...]
    upper: tuple[BinomialExp, ...]


Factor = Union[LowerFactor, DiagonalFactor, UpperFactor]


@dataclass(frozen=True)
class FactoredInverse:
    """Factors of C^-1 in product order U^1..U^(l-1), D, L^(l-1)..L^1."""

    ell: int
    factors: tuple[Factor, ...]

    @property
    def diagonal(self) -> DiagonalFactor:
        return self.factors[self.ell - 1]

    def apply(self, c: Sequence, ctr: XorCounter | None = None) -> list:
        """Compute C^-1 c.  Works on RingElement or SlicedPoly components."""
        if len(c) != self.ell:
            raise ValueError(f"expected {self.ell} components, got {len(c)}")
        s = list(c)
        for f in reversed(self.factors):
            if isinstance(f, LowerFactor):
                _apply_lower(f, s, ctr)
            elif isinstance(f, DiagonalFactor):
                for j, e in enumerate(f.diag):
                    s[j] = s[j].mul_binomial(e, ctr)
            else:
                _apply_upper(f, s, ctr)
        return s


def _apply_lower(f: LowerFactor, s: list, ctr) -> None:
    i = f.i
    # descending, so each row reads its neighbour before that row is updated
    for m in reversed(range(len(f.lower))):
        j = i + m  # 0-based index of row i+1+m
        sub, dia = f.lower[m]
        s[j] = s[j - 1].mul_binomial(sub, ctr).add(s[j].mul_binomial(dia, ctr), ctr)
    for m, e in enumerate(f.divisors):
        s[i + m] = s[i + m].div_binomial(e, ctr)


def _apply_upper(f: UpperFactor, s: list, ctr) -> None:
    i = f.i
    ell = len(s)
    for m, e in enumerate(f.divisors):
        s[i + m] = s[i + m].div_binomial(e, ctr)
    last = s[ell - 1]
    # ascending, so each row reads its lower neighbour before that row is updated
    for m, up in enumerate(f.upper):
        j = i - 1 + m
        head = s[j] if m == 0 else s[j].mul_binomial(f.diag[m - 1], ctr)
        s[j] = head.add(s[j + 1].mul_binomial(up, ctr), ctr)
    s[ell - 1] = last.mul_binomial(f.diag[-1], ctr)


def factorize(sys: CauchySystem) -> FactoredInverse:
    a, b, ell = sys.a_exps, sys.b_exps, sys.ell
    # math below is 1-indexed: a_(n) is a[n - 1]
    lowers = []
    for i in range(1, ell):
        lower = tuple(
            (binomial(a[j - i - 1], b[i - 1]), binomial(a[j - 1], b[i - 1]))
            for j in range(i + 1, ell + 1)
        )
        divisors = tuple(binomial(a[j - 1], a[j - i - 1]) for j in range(i + 1, ell + 1))
        lowers.append(LowerFactor(i, lower, divisors))
    diag = DiagonalFactor(tuple(binomial(a[j], b[j]) for j in range(ell)))
    uppers = []
    for i in range(1, ell):
        uppers.append(
            UpperFactor(
                i,
                divisors=tuple(binomial(b[j - i - 1], b[j - 1]) for j in range(i + 1, ell + 1)),
                diag=tuple(binomial(a[i - 1], b[j - 1]) for j in range(i + 1, ell + 1)),
                upper=tuple(binomial(a[i - 1], b[j - i]) for j in range(i, ell)),
            )
        )
    return FactoredInverse(ell, (*uppers, diag, *reversed(lowers)))


def lu_solve(sys: CauchySystem, c: Sequence, ctr: XorCounter | None = None) -> list:
    """Solve C(x^a, x^b) s = c over C_p.

    Components of ``c`` may carry h(x) offsets; the output does not change.
    Divisions use the simplified quotient, which the following binomial
    multiplication absorbs.
    """
    return factorize(sys).apply(c, ctr)


def determinant(sys: CauchySystem) -> tuple[list[BinomialExp], list[BinomialExp]]:
    """Closed-form determinant as (numerator, denominator) binomial lists.

    numerator: (x^a_j + x^a_i), (x^b_i + x^b_j) for every i < j;
    denominator: x^a_i + x^b_j for every (i, j).
    """
    a, b, ell = sys.a_exps, sys.b_exps, sys.ell
    numerator = []
    for i, j in combinations(range(ell), 2):
        numerator.append(binomial(a[j], a[i]))
        numerator.append(binomial(b[i], b[j]))
    denominator = [binomial(a[i], b[j]) for i in range(ell) for j in range(ell)]
    return numerator, denominator


def evaluate_determinant(sys: CauchySystem) -> RingElement:
    """The determinant as an element of C_p."""
    numerator, denominator = determinant(sys)
    d = constants(sys.p)[0]
    for e in numerator:
        d = mul_binomial(d, e)
    for e in denominator:
        d = div_binomial_canonical(d, e)
    return d


def is_invertible(sys: CauchySystem) -> bool:
    """True when det mod h(x) is a unit of F2[x]/(h(x))."""
    h = (1 << sys.p) - 1
    return gf2x.gcd(gf2x.mod(evaluate_determinant(sys).bits, h), h) == 1
