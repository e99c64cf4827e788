"""Pure numpy/bigint kernel backend.

GF(2) polynomials are packed into Python big integers (bit i = coefficient
of x^i), which makes multiplication and division word-level operations.
General GF(2^w) work uses the field's full multiplication table with
vectorized row lookups.
"""

import numpy as np

NAME = "numpy"


def _to_int(a: np.ndarray) -> int:
    bits = np.packbits(a.astype(np.uint8), bitorder="little")
    return int.from_bytes(bits.tobytes(), "little")


def _from_int(v: int, length: int) -> np.ndarray:
    nbytes = max(1, (length + 7) // 8)
    raw = np.frombuffer(v.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length].astype(np.uint8)


def poly_mul_full(a: np.ndarray, b: np.ndarray, mul: np.ndarray) -> np.ndarray:
    """Full product of dense GF(2^w) polynomials, length la+lb-1."""
    la, lb = len(a), len(b)
    out = np.zeros(la + lb - 1, dtype=np.uint8)
    for i in range(la):
        c = a[i]
        if c:
            out[i : i + lb] ^= mul[c, b]
    return out

def poly_divmod(a: np.ndarray, b: np.ndarray, mul: np.ndarray, inv_lead: int):
    """Long division of a by b; requires len(a) >= len(b) and b[-1] != 0.

    Returns (quotient, remainder) with len(q) = la-lb+1, len(r) = lb-1.
    """
    la, lb = len(a), len(b)
    r = a.copy()
    q = np.zeros(la - lb + 1, dtype=np.uint8)
    for i in range(la - lb, -1, -1):
        c = r[i + lb - 1]
        if c:
            f = mul[c, inv_lead]
            q[i] = f
            r[i : i + lb] ^= mul[f, b]
    return q, r[: lb - 1].copy()


def gf2_mul_full(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """GF(2) full product via packed bigints."""
    la, lb = len(a), len(b)
    av, bv = _to_int(a), _to_int(b)
    out = 0
    while av:
        low = av & -av
        out ^= bv * low  # single-bit multiply == shift
        av ^= low
    return _from_int(out, la + lb - 1)


def gf2_divmod(a: np.ndarray, b: np.ndarray):
    """GF(2) long division via packed bigints; same contract as poly_divmod."""
    la, lb = len(a), len(b)
    av, bv = _to_int(a), _to_int(b)
    q = 0
    db = lb - 1
    while av.bit_length() - 1 >= db and av:
        sh = av.bit_length() - 1 - db
        av ^= bv << sh
        q |= 1 << sh
    return _from_int(q, la - lb + 1), _from_int(av, lb - 1)
