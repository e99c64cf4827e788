"""Dense polynomial arithmetic with coefficients in GF(2^w).

A polynomial is a numpy uint8 array in little-endian coefficient order
(index i holds the coefficient of x^i). The canonical form has no trailing
zeros; the zero polynomial is the empty array. All operations are exact.

Serialization: `to_bytes`/`from_bytes` use a 32-bit little-endian count
followed by one byte per coefficient; `to_hex`/`from_hex` render the same
coefficients as space-separated hex pairs.
"""

import struct

import numpy as np

from . import _kernels as kernels
from .field import GF

ZERO = np.zeros(0, dtype=np.uint8)
ONE = np.ones(1, dtype=np.uint8)


def trim(a) -> np.ndarray:
    """Canonical form: strip trailing zero coefficients."""
    a = np.asarray(a, dtype=np.uint8)
    nz = np.nonzero(a)[0]
    if len(nz) == 0:
        return ZERO
    return a[: nz[-1] + 1]


def deg(a) -> int:
    """Degree, with deg(0) = -1."""
    return len(trim(a)) - 1


def is_zero(a) -> bool:
    return len(trim(a)) == 0


def eq(a, b) -> bool:
    a, b = trim(a), trim(b)
    return len(a) == len(b) and bool(np.all(a == b))


def x_power(e: int) -> np.ndarray:
    out = np.zeros(e + 1, dtype=np.uint8)
    out[e] = 1
    return out


def from_exponents(exps, coeffs=None) -> np.ndarray:
    """Polynomial with 1 (or the paired coefficient) at each exponent."""
    exps = list(exps)
    if not exps:
        return ZERO
    out = np.zeros(max(exps) + 1, dtype=np.uint8)
    if coeffs is None:
        for e in exps:
            out[e] ^= 1
    else:
        for e, c in zip(exps, coeffs):
            out[e] ^= c
    return trim(out)


def add(a, b) -> np.ndarray:
    la, lb = len(a), len(b)
    if la < lb:
        a, b, la, lb = b, a, lb, la
    out = np.array(a, dtype=np.uint8, copy=True)
    out[:lb] ^= b
    return trim(out)


def mul(a, b, gf: GF) -> np.ndarray:
    a, b = trim(a), trim(b)
    if len(a) == 0 or len(b) == 0:
        return ZERO
    if gf.w == 1:
        return trim(kernels.gf2_mul_full(a, b))
    return trim(kernels.poly_mul_full(a, b, gf.mul_table))


def divmod_(a, b, gf: GF):
    """Exact division with remainder: a = q*b + r, deg r < deg b."""
    a, b = trim(a), trim(b)
    if len(b) == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if len(a) < len(b):
        return ZERO, a
    if gf.w == 1:
        q, r = kernels.gf2_divmod(a, b)
    else:
        q, r = kernels.poly_divmod(a, b, gf.mul_table, gf.inv(int(b[-1])))
    return trim(q), trim(r)


def mod(a, b, gf: GF) -> np.ndarray:
    return divmod_(a, b, gf)[1]


def scale(a, c: int, gf: GF) -> np.ndarray:
    """Multiply every coefficient by the scalar c."""
    if c == 0:
        return ZERO
    if c == 1:
        return trim(a)
    return trim(gf.mul_table[c, trim(a)])


def monic(a, gf: GF) -> np.ndarray:
    a = trim(a)
    if len(a) == 0 or a[-1] == 1:
        return a
    return scale(a, gf.inv(int(a[-1])), gf)


def gcd(a, b, gf: GF) -> np.ndarray:
    a, b = trim(a), trim(b)
    while len(b):
        a, b = b, mod(a, b, gf)
    return monic(a, gf)


def gcd_ext(a, b, gf: GF):
    """Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic."""
    a, b = trim(a), trim(b)
    if len(a) == 0 and len(b) == 0:
        raise ZeroDivisionError("gcd(0, 0) undefined")
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while len(r1):
        q, r = divmod_(r0, r1, gf)
        r0, r1 = r1, r
        s0, s1 = s1, add(s0, mul(q, s1, gf))
        t0, t1 = t1, add(t0, mul(q, t1, gf))
    lead = int(r0[-1])
    if lead != 1:
        c = gf.inv(lead)
        r0, s0, t0 = scale(r0, c, gf), scale(s0, c, gf), scale(t0, c, gf)
    return r0, trim(s0), trim(t0)


def pow_(a, n: int, gf: GF) -> np.ndarray:
    out = ONE
    for _ in range(n):
        out = mul(out, a, gf)
    return out


def divides(a, b, gf: GF) -> bool:
    """True iff a divides b exactly (a nonzero)."""
    return is_zero(mod(b, a, gf))


# ---------------------------------------------------------------------------
# text and byte forms

def to_terms(a) -> str:
    a = trim(a)
    if len(a) == 0:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if c == 0:
            continue
        coef = "" if c == 1 else f"{int(c):02x}*"
        if i == 0:
            parts.append(f"{int(c):02x}" if c != 1 else "1")
        elif i == 1:
            parts.append(f"{coef}x")
        else:
            parts.append(f"{coef}x^{i}")
    return "+".join(parts)


def from_terms(s: str) -> np.ndarray:
    """Parse '1+x^3+x^6' style text (GF(2) coefficients only)."""
    s = "".join(s.split())
    if s in ("", "0"):
        return ZERO
    exps = []
    for term in s.split("+"):
        if term == "1":
            exps.append(0)
        elif term == "x":
            exps.append(1)
        elif term.startswith("x^"):
            exps.append(int(term[2:]))
        else:
            raise ValueError(f"bad term {term!r}")
    return from_exponents(exps)


def to_hex(a) -> str:
    return " ".join(f"{int(c):02x}" for c in trim(a))


def from_hex(s: str) -> np.ndarray:
    compact = "".join(s.replace(":", " ").split())
    if len(compact) % 2:
        raise ValueError("hex polynomial needs an even number of digits")
    if not compact:
        return ZERO
    return trim(np.frombuffer(bytes.fromhex(compact), dtype=np.uint8))


def to_bytes(a) -> bytes:
    a = trim(a)
    return struct.pack("<I", len(a)) + a.tobytes()


def from_bytes(buf: bytes):
    """Parse a length-prefixed polynomial; returns (poly, bytes consumed)."""
    (n,) = struct.unpack_from("<I", buf, 0)
    if len(buf) < 4 + n:
        raise ValueError("truncated polynomial")
    return trim(np.frombuffer(buf[4 : 4 + n], dtype=np.uint8)), 4 + n


# ---------------------------------------------------------------------------
# GF(2) factorization (used by divisor sweeps); int-packed representation

def _to_int(a) -> int:
    a = trim(a)
    v = 0
    for i, c in enumerate(a):
        if c:
            v |= 1 << i
    return v


def _from_int(v: int) -> np.ndarray:
    if v == 0:
        return ZERO
    n = v.bit_length()
    return np.array([(v >> i) & 1 for i in range(n)], dtype=np.uint8)


def _ideg(a: int) -> int:
    return a.bit_length() - 1


def _imul(a: int, b: int) -> int:
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _idivmod(a: int, b: int):
    q = 0
    db = _ideg(b)
    while a and _ideg(a) >= db:
        sh = _ideg(a) - db
        a ^= b << sh
        q |= 1 << sh
    return q, a


def _igcd(a: int, b: int) -> int:
    while b:
        a, b = b, _idivmod(a, b)[1]
    return a


def _imulmod(a: int, b: int, m: int) -> int:
    return _idivmod(_imul(a, b), m)[1]


def _factor_squarefree_int(f: int):
    """Distinct-degree then equal-degree factorization of squarefree f."""
    out = []
    v = f
    h = _idivmod(2, v)[1]  # x mod v
    d = 0
    while _ideg(v) > 0:
        d += 1
        if 2 * d > _ideg(v):
            out.append(v)
            break
        h = _imulmod(h, h, v)
        g = _igcd(h ^ 2, v)
        if g != 1:
            out.extend(_split_equal_degree(g, d))
            v = _idivmod(v, g)[0]
            h = _idivmod(h, v)[1] if v != 1 else 0
    return out


def _split_equal_degree(g: int, d: int):
    """Split g (product of distinct irreducibles of degree d) via trace maps."""
    if _ideg(g) == d:
        return [g]
    probe = 2  # deterministic probe sequence: x, x+1, x^2, ...
    while True:
        probe += 1
        v = _idivmod(probe, g)[1]
        if v == 0:
            continue
        tr = 0
        acc = v
        for _ in range(d):
            tr ^= acc
            acc = _imulmod(acc, acc, g)
        c = _igcd(tr, g)
        if c not in (1, g):
            return _split_equal_degree(c, d) + _split_equal_degree(_idivmod(g, c)[0], d)


def _factor_int(f: int) -> dict:
    if _ideg(f) <= 0:
        return {}
    # derivative over GF(2): keep odd-index coefficients, shifted down
    df = 0
    i = 1
    v = f >> 1
    while v:
        if (v & 1) and (i % 2 == 1):
            df |= 1 << (i - 1)
        v >>= 1
        i += 1
    if df == 0:
        # perfect square: take square root by halving exponents
        root = 0
        i = 0
        v = f
        while v:
            if v & 1:
                root |= 1 << (i // 2)
            v >>= 1
            i += 1
        return {p: 2 * m for p, m in _factor_int(root).items()}
    c = _igcd(f, df)
    if c == 1:
        return {p: 1 for p in _factor_squarefree_int(f)}
    out = _factor_int(c)
    for p, m in _factor_int(_idivmod(f, c)[0]).items():
        out[p] = out.get(p, 0) + m
    return out


def factor_gf2(a):
    """Factor a GF(2) polynomial into (irreducible, multiplicity) pairs."""
    f = _to_int(a)
    if f == 0:
        raise ZeroDivisionError("cannot factor the zero polynomial")
    fac = _factor_int(f)
    pairs = sorted(fac.items())
    return [(_from_int(p), m) for p, m in pairs]


def divisors_gf2(a):
    """All monic divisors of a GF(2) polynomial, sorted by (degree, value)."""
    pairs = [(_to_int(p), m) for p, m in factor_gf2(a)]
    divs = [1]
    for p, m in pairs:
        grow = []
        pk = 1
        for _ in range(m):
            pk = _imul(pk, p)
            grow.extend(_imul(d, pk) for d in divs)
        divs.extend(grow)
    divs.sort(key=lambda v: (_ideg(v), v))
    return [_from_int(v) for v in divs]
