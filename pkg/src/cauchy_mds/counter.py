"""Single-bit XOR accounting."""

from dataclasses import dataclass


@dataclass
class XorCounter:
    """Tally of single-bit XORs between two operands not known to be zero.

    One counter per logical operation sequence; not thread-safe.
    """

    count: int = 0

    def add(self, n: int) -> None:
        if n < 0:
            raise ValueError("XOR count increments must be non-negative")
        self.count += n

    def reset(self) -> int:
        """Zero the tally and return the value it held."""
        n, self.count = self.count, 0
        return n


def tally(ctr: XorCounter | None, n: int) -> None:
    if ctr is not None:
        ctr.add(n)
