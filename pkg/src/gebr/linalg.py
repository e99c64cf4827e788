"""Exact linear algebra over quotient rings of GF(2^w)[x].

The rings here have zero divisors, so elimination only pivots on unit
entries (gcd with the modulus equal 1). When no unit pivot exists but the
determinant is a unit, solving falls back to adjugate (Cramer) form.
Determinants are computed division free; in characteristic 2 the
determinant equals the permanent, so a subset-sum dynamic program over
columns is exact and needs no signs. All routines target the small, dense
systems array codes produce (t up to a dozen or so).

`solve_unique_mod_h` and `lift_with_known_coeffs` implement the two-step
CRT strategy: solve uniquely modulo the big factor of 1 + x^(p*tau), then
pin down the small factor from known coefficients.
"""

import numpy as np

from . import poly
from .errors import (
    InconsistentKnowns,
    InsufficientKnowns,
    ModulusMismatch,
    NoUnitPivot,
    SingularModH,
)
from .field import GF
from .ring import CrtMap, Modulus, RingElement, reduce_to


class RingMatrix:
    """Rectangular matrix of RingElements sharing one modulus."""

    def __init__(self, entries):
        if not entries or not entries[0]:
            raise ValueError("matrix must be non-empty")
        self.rows = len(entries)
        self.cols = len(entries[0])
        modulus = entries[0][0].modulus
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for e in row:
                if e.modulus != modulus:
                    raise ModulusMismatch("matrix entries over mixed moduli")
        self.entries = [list(row) for row in entries]
        self.modulus = modulus

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def transpose(self) -> "RingMatrix":
        return RingMatrix(
            [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)]
        )

    def map(self, fn) -> "RingMatrix":
        return RingMatrix([[fn(e) for e in row] for row in self.entries])


def determinant(m: RingMatrix) -> RingElement:
    """Determinant by division-free subset expansion (char 2: no signs)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    t = m.rows
    zero = RingElement.zero(m.modulus)
    one = RingElement.one(m.modulus)
    acc = [zero] * (1 << t)
    acc[0] = one
    for mask in range(1, 1 << t):
        row = bin(mask).count("1") - 1
        s = zero
        mm = mask
        while mm:
            j = (mm & -mm).bit_length() - 1
            e = m.entries[row][j]
            if not e.is_zero():
                prev = acc[mask ^ (1 << j)]
                if not prev.is_zero():
                    s = s + e * prev
            mm &= mm - 1
        acc[mask] = s
    return acc[(1 << t) - 1]


def _cramer(m: RingMatrix, b, stalled: bool):
    det = determinant(m)
    g = poly.gcd(det.poly, m.modulus.poly, m.modulus.gf)
    if poly.deg(g) != 0:
        cls = NoUnitPivot if stalled else SingularModH
        raise cls(
            f"determinant shares {poly.to_terms(g)} with the modulus", gcd=g
        )
    det_inv = det.inverse()
    out = []
    for col in range(m.cols):
        repl = RingMatrix(
            [
                [b[r] if c == col else m.entries[r][c] for c in range(m.cols)]
                for r in range(m.rows)
            ]
        )
        out.append(determinant(repl) * det_inv)
    return out


def solve_right(m: RingMatrix, b):
    """Solve M x = b over the matrix's quotient ring.

    Gauss-Jordan restricted to unit pivots (row-major search, first unit
    wins); a stalled elimination falls back to Cramer. Raises SingularModH
    (NoUnitPivot on a stall) with the determinant gcd when singular.
    """
    n = m.rows
    if m.cols != n or len(b) != n:
        raise ValueError("solve_right needs a square system")
    aug = [list(m.entries[r]) + [b[r]] for r in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col].is_unit():
                piv = r
                break
        if piv is None:
            return _cramer(m, b, stalled=True)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [inv * e for e in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [er + f * ec for er, ec in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def solve_unique_mod_h(m: RingMatrix, v, crt: CrtMap):
    """Unique solution of u M = v in the second CRT factor.

    Entries of m and v live modulo 1 + x^(p*tau); the system is reduced
    modulo 1 + x^tau + ... + x^((p-1)*tau), where the determinant is
    required to be a unit, and solved there.
    """
    target = crt.mod_b
    mb = m.map(lambda e: reduce_to(e, target)).transpose()
    vb = [reduce_to(x, target) for x in v]
    return solve_right(mb, vb)


def lift_with_known_coeffs(u2, known, crt: CrtMap):
    """Lift second-factor solutions to the full ring using known coefficients.

    `known` carries, for each entry, (position, value) pairs; every residue
    class mod tau needs at least one covered position. Extra pairs are
    checked for consistency (first listed position per class anchors the
    class).
    """
    tau = crt.mod_a.degree
    m_full = crt.mod_full.degree
    out = []
    for idx, (u2_i, pairs) in enumerate(zip(u2, known)):
        base = crt.embed_b(u2_i)
        deltas = [None] * tau
        for pos, val in pairs:
            if not 0 <= pos < m_full:
                raise ValueError(f"known position {pos} out of range")
            mu = pos % tau
            d = int(val) ^ base[pos]
            if deltas[mu] is None:
                deltas[mu] = d
            elif deltas[mu] != d:
                raise InconsistentKnowns(
                    f"entry {idx}: positions in class {mu} disagree"
                )
        missing = [mu for mu in range(tau) if deltas[mu] is None]
        if missing:
            raise InsufficientKnowns(
                f"entry {idx}: residue classes {missing} have no known position"
            )
        u_prime = RingElement(
            np.array(deltas, dtype=np.uint8), crt.mod_a, _reduced=True
        )
        out.append(base + crt.embed_a(u_prime))
    return out


def solve_vandermonde(exponents, rhs, modulus: Modulus, rows=None):
    """Solve the power-of-x system sum_b x^(rows[a]*exponents[b]) s_b = rhs_a.

    `rows` defaults to 0..t-1, the leading parity rows. The solution stays
    in the given quotient ring; callers lift it when they hold known
    coefficients.
    """
    t = len(exponents)
    if len(set(e % _x_order(modulus) for e in exponents)) != t:
        raise ValueError("exponents collide modulo the ring period")
    if rows is None:
        rows = range(t)
    rows = list(rows)
    if len(rows) != t or len(rhs) != t:
        raise ValueError("need exactly t rows and t right-hand sides")
    mat = RingMatrix(
        [
            [RingElement.x_power(r * e, modulus) for e in exponents]
            for r in rows
        ]
    )
    return solve_right(mat, list(rhs))


def _x_order(modulus: Modulus) -> int:
    # For cyclic moduli 1 + x^m the powers of x repeat with period m;
    # otherwise fall back to a bound that never triggers the collision check.
    return modulus.degree if modulus.is_cyclic else 1 << 62


def field_solve(a: np.ndarray, b: np.ndarray, gf: GF):
    """Solve the GF(2^w) linear system a x = b exactly.

    Returns the unique solution vector, or None when the system is rank
    deficient in the unknowns or inconsistent.
    """
    a = np.array(a, dtype=np.uint8)
    b = np.array(b, dtype=np.uint8)
    rows, cols = a.shape
    mul = gf.mul_table
    aug = np.concatenate([a, b.reshape(rows, 1)], axis=1)
    rank = 0
    pivot_cols = []
    for c in range(cols):
        piv = None
        for r in range(rank, rows):
            if aug[r, c]:
                piv = r
                break
        if piv is None:
            continue
        aug[[rank, piv]] = aug[[piv, rank]]
        inv = gf.inv(int(aug[rank, c]))
        aug[rank] = mul[inv, aug[rank]]
        for r in range(rows):
            if r != rank and aug[r, c]:
                aug[r] ^= mul[int(aug[r, c]), aug[rank]]
        pivot_cols.append(c)
        rank += 1
        if rank == rows:
            break
    if rank < cols:
        return None
    if np.any(aug[rank:, cols]):
        return None
    out = np.zeros(cols, dtype=np.uint8)
    for r, c in enumerate(pivot_cols):
        out[c] = aug[r, cols]
    return out
