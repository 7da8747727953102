import numpy as np
import pytest

from cauchy_mds.ring import RingElement

PRIMES = (5, 7, 11, 13)


def poly(p, *exps):
    return RingElement.from_exponents(exps, p)


def random_even(rng, p):
    bits = int(rng.integers(0, 1 << (p - 1)))
    return RingElement.lift(bits, p)


def random_element(rng, p):
    return RingElement(p, int(rng.integers(0, 1 << p)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, line = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {line}")


# Parity block of C(2,2,5): entry [row][parity] is a list of (bit row, info column)
# terms; row 4 stands for the parity-check bit s_{4,i} = s_{0,i}+...+s_{3,i}.
REFERENCE_TABLE = [
    [[(2, 0), (4, 0), (1, 1), (3, 1), (4, 1)], [(0, 0), (1, 0), (3, 0), (0, 1), (3, 1)]],
    [[(1, 0), (4, 1)], [(1, 0), (2, 1)]],
    [[(4, 0), (2, 1)], [(4, 0), (0, 1)]],
    [[(0, 0), (2, 0), (4, 0), (1, 1), (4, 1)], [(1, 0), (3, 0), (0, 1), (1, 1), (3, 1)]],
]


def reference_table():
    """The reference table expanded over the 8 stored information bits: (8, 4 rows, 2 parities)."""
    out = np.zeros((8, 4, 2), dtype=np.uint8)
    for row, entries in enumerate(REFERENCE_TABLE):
        for j, terms in enumerate(entries):
            for t, col in terms:
                for src in ([t] if t < 4 else range(4)):
                    out[col * 4 + src, row, j] ^= 1
    return out
