"""Compact array codec: alpha x (k+r) arrays over F[x]/h(x).

Same Vandermonde parity structure as the expanded codec but columns are
bare polynomials modulo the parity-check polynomial h(x); there are no
local parities. When gcd(g, h) = gcd(1 + x^tau, h) = 1 each compact column
lifts to a unique expanded-code column (to_gebr), which is how the two
codecs correspond.

Line recovery is supported for the classic tau = 1 family, where the
zero-extended p x (k+r) view genuinely has even parity on slopes 0..r-1.
For tau > 1 that parity fails for most arrays (easily checked by random
search), so the equations behind the recovery matrix do not hold and the
operation refuses such parameters.
"""

import numpy as np

from . import poly, recoverability
from .errors import (
    BadShape,
    GebrError,
    TooManyErasures,
    TooManyLines,
    UnsupportedParams,
)
from .gebr_codec import GebrArray, LineErasure, _select_rows, analyze_lines
from .linalg import lift_with_known_coeffs, solve_unique_mod_h, solve_vandermonde
from .params import CodeParams
from .ring import CrtMap, RingElement


class GbrArray:
    """Immutable alpha x (k+r) symbol array with its parameters."""

    def __init__(self, params: CodeParams, symbols: np.ndarray, verdict=None):
        symbols = np.array(symbols, dtype=np.uint8)
        if symbols.shape != (params.alpha, params.n):
            raise BadShape(
                f"array shape {symbols.shape} != ({params.alpha}, {params.n})"
            )
        symbols.flags.writeable = False
        self.params = params
        self.symbols = symbols
        self.verdict = verdict

    def column(self, j: int) -> RingElement:
        return RingElement(
            self.symbols[:, j].copy(), self.params.mod_h, _reduced=True
        )

    def syndrome(self, ell: int) -> RingElement:
        acc = RingElement.zero(self.params.mod_h)
        for j in range(self.params.n):
            acc = acc + self.column(j).shift(ell * j)
        return acc

    def info(self) -> np.ndarray:
        return self.symbols[:, : self.params.k].copy()

    def extended(self) -> np.ndarray:
        """The m x (k+r) zero-extended view (rows alpha..m-1 all zero)."""
        out = np.zeros((self.params.m, self.params.n), dtype=np.uint8)
        out[: self.params.alpha] = self.symbols
        return out

    def validate(self) -> bool:
        return all(self.syndrome(ell).is_zero() for ell in range(self.params.r))

    def __eq__(self, other):
        return (
            isinstance(other, GbrArray)
            and other.params == self.params
            and bool(np.array_equal(other.symbols, self.symbols))
        )


def gbr_encode(info: np.ndarray, params: CodeParams, with_verdict: bool = True) -> GbrArray:
    """Encode an alpha x k information array into an alpha x (k+r) array."""
    info = np.asarray(info, dtype=np.uint8)
    if info.shape != (params.alpha, params.k):
        raise BadShape(
            f"info shape {info.shape} != ({params.alpha}, {params.k})"
        )
    symbols = np.zeros((params.alpha, params.n), dtype=np.uint8)
    symbols[:, : params.k] = info
    rhs = []
    for ell in range(params.r):
        acc = RingElement.zero(params.mod_h)
        for j in range(params.k):
            acc = acc + RingElement(
                info[:, j].copy(), params.mod_h, _reduced=True
            ).shift(ell * j)
        rhs.append(acc)
    parity = solve_vandermonde(list(range(params.k, params.n)), rhs, params.mod_h)
    for idx, col in enumerate(parity):
        symbols[:, params.k + idx] = col.coeffs
    verdict = recoverability.classify_gbr(params) if with_verdict else None
    return GbrArray(params, symbols, verdict=verdict)


def gbr_decode_columns(arr: GbrArray, erased) -> GbrArray:
    """Restore up to r erased columns of a compact array."""
    params = arr.params
    erased = sorted(set(int(e) for e in erased))
    if any(not 0 <= e < params.n for e in erased):
        raise BadShape("erased column index out of range")
    t = len(erased)
    if t == 0:
        return arr
    if t > params.r:
        raise TooManyErasures(f"{t} erased columns > r = {params.r}")
    survivors = [j for j in range(params.n) if j not in erased]
    rhs = []
    for ell in range(t):
        acc = RingElement.zero(params.mod_h)
        for j in survivors:
            acc = acc + arr.column(j).shift(ell * j)
        rhs.append(acc)
    sol = solve_vandermonde(erased, rhs, params.mod_h)
    symbols = np.array(arr.symbols)
    for e, col in zip(erased, sol):
        symbols[:, e] = col.coeffs
    out = GbrArray(params, symbols, verdict=arr.verdict)
    if not out.validate():
        raise GebrError("decode verification failed: restored array is not a codeword")
    return out


def _line_poly_ext(ext: np.ndarray, ell: int, slope: int, params: CodeParams) -> RingElement:
    m = params.m
    coeffs = np.zeros(m, dtype=np.uint8)
    for j in range(ext.shape[1]):
        coeffs[j] = ext[(ell - slope * j) % m, j]
    return RingElement(coeffs, params.mod_m, _reduced=True)


def gbr_recover_lines(arr: GbrArray, le: LineErasure) -> GbrArray:
    """Recover erased slope-i lines of a compact tau = 1 (classic BR) array.

    Uses the parity rows whose slope offset is coprime to p. When the slope
    itself is a parity slope (i < r), the erased line polynomials are code
    members, which replaces the missing known coefficients; otherwise the
    structural zeros above row alpha anchor the lift.
    """
    params = arr.params
    if not poly.eq(params.g, poly.ONE):
        raise UnsupportedParams("line recovery requires g(x) = 1")
    if params.tau != 1:
        # For tau > 1 the zero-extended array does not satisfy the slope
        # parities the recovery system is built from.
        raise UnsupportedParams("compact line recovery requires tau = 1")
    parity_slope = le.slope < params.r
    if not parity_slope and params.n > params.p - 1:
        raise UnsupportedParams(
            f"slope {le.slope} needs k + r <= p - 1 = {params.p - 1}"
        )
    t = len(le.lines)
    if t == 0:
        return arr
    info = analyze_lines(le, params)
    if t > len(info.i_bar):
        raise TooManyLines(f"{t} erased lines > |I-bar| = {len(info.i_bar)}")
    m = params.m
    ext = arr.extended()
    erased = set(le.lines)
    survivors = [l for l in range(m) if l not in erased]
    surv_polys = {l: _line_poly_ext(ext, l, le.slope, params) for l in survivors}
    rows = []
    zero = RingElement.zero(params.mod_m)
    for mult in info.multipliers:
        entries = [RingElement.x_power((e * mult) % m, params.mod_m) for e in le.lines]
        rhs = zero
        for l in survivors:
            rhs = rhs + surv_polys[l].shift(l * mult)
        rows.append((entries, rhs))
    mat, rhs = _select_rows(rows, t, params)
    sol = solve_unique_mod_h(mat.transpose(), rhs, params.crt)
    if parity_slope:
        # The slope has a parity row of its own, so every line polynomial
        # sums to zero: its 1 + x component vanishes and the code lift is
        # exact (this covers full-length k + r = p arrays).
        lifted = [params.crt.embed_b(u2) for u2 in sol]
    else:
        known = []
        for e in le.lines:
            pairs = [(j, 0) for j in range(params.n, m)]
            pairs.extend(
                (j, 0)
                for j in range(params.n)
                if (e - le.slope * j) % m >= params.alpha
            )
            known.append(pairs)
        lifted = lift_with_known_coeffs(sol, known, params.crt)
    symbols = np.array(arr.symbols)
    for e, s_bar in zip(le.lines, lifted):
        for j in range(params.n):
            row = (e - le.slope * j) % m
            val = s_bar[j]
            if row < params.alpha:
                symbols[row, j] = val
            elif val:
                raise GebrError("line recovery produced a symbol in the zero extension")
    out = GbrArray(params, symbols, verdict=arr.verdict)
    if not out.validate():
        raise GebrError(
            "line recovery verification failed: restored array is not a codeword"
        )
    return out


def to_gebr(arr: GbrArray) -> GebrArray:
    """Lift a compact array to the expanded code through the ring isomorphism.

    Each column maps to the unique multiple of (1 + x^tau) g(x) congruent
    to it modulo h(x); requires gcd(g, h) = gcd(1 + x^tau, h) = 1.
    """
    params = arr.params
    if not (params.gcd_g_h_is_one and params.gcd_xtau1_h_is_one):
        raise UnsupportedParams(
            "expanded/compact correspondence needs gcd(g,h) = gcd(1+x^tau,h) = 1"
        )
    iso = CrtMap(params.mod_gen, params.mod_h)
    symbols = np.zeros((params.m, params.n), dtype=np.uint8)
    for j in range(params.n):
        symbols[:, j] = iso.embed_b(arr.column(j)).coeffs
    return GebrArray(params, symbols, verdict=arr.verdict)
