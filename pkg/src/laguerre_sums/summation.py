"""Compensated accumulation for the series loops."""
from __future__ import annotations


class KahanSum:
    """Kahan-compensated running sum.

    The closed forms subtract hypergeometric blocks of comparable size, so
    each block is accumulated with a carry term to keep full binary64
    accuracy in the partial sums.
    """

    __slots__ = ("total", "carry")

    def __init__(self) -> None:
        self.total = 0.0
        self.carry = 0.0

    def add(self, value: float) -> None:
        y = value - self.carry
        t = self.total + y
        self.carry = (t - self.total) - y
        self.total = t
