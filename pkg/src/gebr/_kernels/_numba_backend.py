"""Numba @njit kernel backend.

Same contracts as the numpy backend. GF(2) multiplication packs
coefficients into uint64 words and convolves with shift/xor; everything
else is tight byte loops over the field's multiplication table.
"""

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def _mul_full(a, b, mul, out):
    la = a.shape[0]
    lb = b.shape[0]
    for i in range(la):
        c = a[i]
        if c != 0:
            row = mul[c]
            for j in range(lb):
                out[i + j] ^= row[b[j]]


@njit(cache=True)
def _divmod(r, b, mul, inv_lead, q):
    la = r.shape[0]
    lb = b.shape[0]
    for i in range(la - lb, -1, -1):
        c = r[i + lb - 1]
        if c != 0:
            f = mul[c, inv_lead]
            q[i] = f
            row = mul[f]
            for j in range(lb):
                r[i + j] ^= row[b[j]]


@njit(cache=True)
def _gf2_mul_words(aw, bw, out, nbits_a):
    nb = bw.shape[0]
    for k in range(nbits_a):
        if (aw[k >> 6] >> np.uint64(k & 63)) & np.uint64(1):
            off = k >> 6
            sh = np.uint64(k & 63)
            if sh == np.uint64(0):
                for j in range(nb):
                    out[j + off] ^= bw[j]
            else:
                ish = np.uint64(64) - sh
                for j in range(nb):
                    w = bw[j]
                    out[j + off] ^= w << sh
                    out[j + off + 1] ^= w >> ish


@njit(cache=True)
def _gf2_divmod_bytes(r, b, q):
    la = r.shape[0]
    lb = b.shape[0]
    for i in range(la - lb, -1, -1):
        if r[i + lb - 1] != 0:
            q[i] = 1
            for j in range(lb):
                r[i + j] ^= b[j]


def poly_mul_full(a: np.ndarray, b: np.ndarray, mul: np.ndarray) -> np.ndarray:
    out = np.zeros(len(a) + len(b) - 1, dtype=np.uint8)
    _mul_full(a, b, mul, out)
    return out


def poly_divmod(a: np.ndarray, b: np.ndarray, mul: np.ndarray, inv_lead: int):
    la, lb = len(a), len(b)
    r = a.copy()
    q = np.zeros(la - lb + 1, dtype=np.uint8)
    _divmod(r, b, mul, np.uint8(inv_lead), q)
    return q, r[: lb - 1].copy()


def _pack_words(a: np.ndarray) -> np.ndarray:
    bits = np.packbits(a, bitorder="little")
    pad = (-len(bits)) % 8
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    return bits.view(np.uint64)


def _unpack_words(words: np.ndarray, length: int) -> np.ndarray:
    raw = words.view(np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length].astype(np.uint8)


def gf2_mul_full(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    la, lb = len(a), len(b)
    aw = _pack_words(a)
    bw = _pack_words(b)
    out = np.zeros(len(aw) + len(bw) + 1, dtype=np.uint64)
    _gf2_mul_words(aw, bw, out, la)
    return _unpack_words(out, la + lb - 1)


def gf2_divmod(a: np.ndarray, b: np.ndarray):
    la, lb = len(a), len(b)
    r = a.copy()
    q = np.zeros(la - lb + 1, dtype=np.uint8)
    _gf2_divmod_bytes(r, b, q)
    return q, r[: lb - 1].copy()
