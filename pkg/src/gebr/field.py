"""Finite fields GF(2^w) for 1 <= w <= 8.

Elements are plain ints in [0, 2^w). Addition is XOR. Multiplication and
inversion are table driven, with the tables built once per w from a fixed
reduction polynomial so that independent implementations agree bit for bit:

    w=1  GF(2) directly
    w=2  x^2 + x + 1
    w=3  x^3 + x + 1
    w=4  x^4 + x + 1
    w=5  x^5 + x^2 + 1
    w=6  x^6 + x + 1
    w=7  x^7 + x^3 + 1
    w=8  x^8 + x^4 + x^3 + x + 1

The full multiplication table (at most 64 KiB for w=8) keeps the hot
kernels branch free.
"""

import functools

import numpy as np

# reduction polynomials, bit i = coefficient of x^i
REDUCTION_POLY = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011011,
}


def _build_mul_table(w: int, red: int) -> np.ndarray:
    n = 1 << w
    a = np.arange(n, dtype=np.uint32)
    prod = np.zeros((n, n), dtype=np.uint32)
    for bit in range(w):
        has_bit = (np.arange(n) >> bit) & 1 == 1
        prod[:, has_bit] ^= (a << bit)[:, None]
    for bit in range(2 * w - 2, w - 1, -1):
        sel = ((prod >> bit) & 1).astype(np.uint32)
        prod ^= sel * np.uint32(red << (bit - w))
    return np.ascontiguousarray(prod.astype(np.uint8))


class GF:
    """Arithmetic context for GF(2^w)."""

    def __init__(self, w: int):
        if not 1 <= w <= 8:
            raise ValueError(f"field exponent w={w} out of range 1..8")
        self.w = w
        self.order = 1 << w
        self.reduction = REDUCTION_POLY[w]
        self.mul_table = _build_mul_table(w, self.reduction)
        inv = np.zeros(self.order, dtype=np.uint8)
        for x in range(1, self.order):
            hits = np.nonzero(self.mul_table[x] == 1)[0]
            if len(hits) != 1:
                raise ValueError(f"reduction polynomial for w={w} is not irreducible")
            inv[x] = hits[0]
        self.inv_table = inv

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^w)")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, GF) and other.w == self.w

    def __hash__(self):
        return hash(("GF", self.w))

    def __repr__(self):
        return f"GF(2^{self.w})"


@functools.lru_cache(maxsize=None)
def gf(w: int) -> GF:
    """Shared GF(2^w) instance for the given exponent."""
    return GF(w)
