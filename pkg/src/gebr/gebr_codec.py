"""Expanded array codec: p*tau x (k+r) arrays with local column parities.

Columns live in the cyclic code generated by (1 + x^tau) g(x); the r
parity columns additionally zero every line of slope 0..r-1. Decoding of
column erasures and recovery of erased slope-i lines both reduce to small
power-of-x systems solved modulo 1 + x^tau + ... + x^((p-1)*tau) and then
lifted back, either through code divisibility (columns) or from
known-zero coefficients (lines).
"""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import poly, recoverability
from .errors import (
    BadShape,
    GebrError,
    GNotInvertible,
    NotCoprime,
    TooManyErasures,
    TooManyLines,
    UnsupportedParams,
)
from .linalg import (
    RingMatrix,
    determinant,
    lift_with_known_coeffs,
    solve_unique_mod_h,
    solve_vandermonde,
)
from .params import CodeParams, check_membership, local_encode_column
from .ring import RingElement, reduce_to


class GebrArray:
    """Immutable m x (k+r) symbol array with its parameters.

    `verdict` carries the recoverability classification computed at encode
    time (encode proceeds even on NotRecoverable/Unknown parameters; the
    verdict is the caller's warning).
    """

    def __init__(self, params: CodeParams, symbols: np.ndarray, verdict=None):
        symbols = np.array(symbols, dtype=np.uint8)
        if symbols.shape != (params.m, params.n):
            raise BadShape(
                f"array shape {symbols.shape} != ({params.m}, {params.n})"
            )
        symbols.flags.writeable = False
        self.params = params
        self.symbols = symbols
        self.verdict = verdict

    def column(self, j: int) -> RingElement:
        return RingElement(
            self.symbols[:, j].copy(), self.params.mod_m, _reduced=True
        )

    def syndrome(self, ell: int) -> RingElement:
        acc = RingElement.zero(self.params.mod_m)
        for j in range(self.params.n):
            acc = acc + self.column(j).shift(ell * j)
        return acc

    def info(self) -> np.ndarray:
        return self.symbols[: self.params.alpha, : self.params.k].copy()

    def validate(self) -> bool:
        ok = all(
            check_membership(self.symbols[:, j], self.params)
            for j in range(self.params.n)
        )
        return ok and all(
            self.syndrome(ell).is_zero() for ell in range(self.params.r)
        )

    def __eq__(self, other):
        return (
            isinstance(other, GebrArray)
            and other.params == self.params
            and bool(np.array_equal(other.symbols, self.symbols))
        )


def encode(info: np.ndarray, params: CodeParams, with_verdict: bool = True) -> GebrArray:
    """Encode an alpha x k information array into a full GEBR array."""
    info = np.asarray(info, dtype=np.uint8)
    if info.shape != (params.alpha, params.k):
        raise BadShape(
            f"info shape {info.shape} != ({params.alpha}, {params.k})"
        )
    symbols = np.zeros((params.m, params.n), dtype=np.uint8)
    for j in range(params.k):
        symbols[:, j] = local_encode_column(info[:, j], params)
    rhs = []
    for ell in range(params.r):
        acc = RingElement.zero(params.mod_m)
        for j in range(params.k):
            acc = acc + RingElement(
                symbols[:, j].copy(), params.mod_m, _reduced=True
            ).shift(ell * j)
        rhs.append(reduce_to(acc, params.mod_hfull))
    parity = solve_vandermonde(
        list(range(params.k, params.n)), rhs, params.mod_hfull
    )
    for idx, u2 in enumerate(parity):
        symbols[:, params.k + idx] = params.crt.embed_b(u2).coeffs
    verdict = recoverability.classify(params) if with_verdict else None
    return GebrArray(params, symbols, verdict=verdict)


def decode_columns(arr: GebrArray, erased) -> GebrArray:
    """Restore up to r erased columns; the erased symbols' values are ignored."""
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
        acc = RingElement.zero(params.mod_m)
        for j in survivors:
            acc = acc + arr.column(j).shift(ell * j)
        rhs.append(reduce_to(acc, params.mod_hfull))
    sol = solve_vandermonde(erased, rhs, params.mod_hfull)
    symbols = np.array(arr.symbols)
    for e, u2 in zip(erased, sol):
        symbols[:, e] = params.crt.embed_b(u2).coeffs
    out = GebrArray(params, symbols, verdict=arr.verdict)
    if not out.validate():
        raise GebrError("decode verification failed: restored array is not a codeword")
    return out


def line_inverse_exponent(i: int, ell: int, params: CodeParams) -> int:
    """The multiplier (p*tau - (i - ell))^-1 mod p*tau used in recovery rows."""
    m = params.m
    g = (i - ell) % m
    if math.gcd(g, m) != 1:
        raise NotCoprime(f"slope offset {i}-{ell} shares a factor with {m}")
    return pow(m - g, -1, m)


@dataclass(frozen=True)
class LineErasure:
    """A slope and the erased line indices along it."""

    slope: int
    lines: tuple

    def __init__(self, slope, lines):
        object.__setattr__(self, "slope", int(slope))
        object.__setattr__(self, "lines", tuple(sorted(set(int(e) for e in lines))))


@dataclass
class LineAnalysis:
    """Derived structure of a line erasure under given parameters."""

    theta: list            # sorted residues of erased lines mod tau
    eta: int               # number of occupied groups
    v_rows: list           # 0/1 incidence row per group
    excluded: list         # parity offsets i-ell that are multiples of p
    i_bar: list            # usable offsets (i-ell) mod m, in ell order
    multipliers: list      # (m - g)^-1 mod m per i_bar entry


def analyze_lines(le: LineErasure, params: CodeParams) -> LineAnalysis:
    m, tau = params.m, params.tau
    if not 0 <= le.slope < m:
        raise BadShape(f"slope {le.slope} out of range 0..{m - 1}")
    if any(not 0 <= e < m for e in le.lines):
        raise BadShape("erased line index out of range")
    theta = sorted(set(e % tau for e in le.lines))
    v_rows = [
        [1 if e % tau == th else 0 for e in le.lines] for th in theta
    ]
    excluded, i_bar, multipliers = [], [], []
    for ell in range(params.r):
        g = (le.slope - ell) % m
        if math.gcd(g, m) != 1:
            excluded.append(g)
        else:
            i_bar.append(g)
            multipliers.append(pow(m - g, -1, m))
    return LineAnalysis(theta, len(theta), v_rows, excluded, i_bar, multipliers)


def _line_poly(ext: np.ndarray, ell: int, slope: int, params: CodeParams) -> RingElement:
    m = params.m
    ncols = ext.shape[1]
    coeffs = np.zeros(m, dtype=np.uint8)
    for j in range(ncols):
        coeffs[j] = ext[(ell - slope * j) % m, j]
    return RingElement(coeffs, params.mod_m, _reduced=True)


def _build_candidate_rows(arr_symbols, le, info: LineAnalysis, params: CodeParams):
    """All available constraint rows (entries over R_m) with right-hand sides."""
    m = params.m
    one = RingElement.one(params.mod_m)
    zero = RingElement.zero(params.mod_m)
    erased = set(le.lines)
    survivors = [l for l in range(m) if l not in erased]
    surv_polys = {
        l: _line_poly(arr_symbols, l, le.slope, params) for l in survivors
    }
    rows = []
    for th, v in zip(info.theta, info.v_rows):
        entries = [one if bit else zero for bit in v]
        rhs = zero
        for l in survivors:
            if l % params.tau == th:
                rhs = rhs + surv_polys[l]
        rows.append((entries, rhs))
    for mult in info.multipliers:
        entries = [
            RingElement.x_power((e * mult) % m, params.mod_m) for e in le.lines
        ]
        rhs = zero
        for l in survivors:
            rhs = rhs + surv_polys[l].shift(l * mult)
        rows.append((entries, rhs))
    return rows


def _select_rows(rows, t, params: CodeParams):
    """First row subset (listed order) whose matrix is invertible mod the h factor."""
    first_gcd = None
    for combo in itertools.combinations(range(len(rows)), t):
        mat = RingMatrix([rows[c][0] for c in combo])
        det = determinant(mat)
        g = poly.gcd(det.poly, params.h_full, params.gf)
        if poly.deg(g) == 0:
            rhs = [rows[c][1] for c in combo]
            return mat, rhs
        if first_gcd is None:
            first_gcd = g
    raise GNotInvertible(
        "no row subset yields a matrix invertible modulo the h factor",
        gcd=first_gcd,
    )


def recover_lines(arr: GebrArray, le: LineErasure) -> GebrArray:
    """Recover erased lines of one slope (g = 1 and tau a power of p only)."""
    params = arr.params
    if not poly.eq(params.g, poly.ONE):
        raise UnsupportedParams("line recovery requires g(x) = 1")
    if params.gamma != 1:
        raise UnsupportedParams("line recovery requires tau to be a power of p")
    if params.n > (params.p - 1) * params.tau:
        raise UnsupportedParams(
            f"line recovery requires k + r <= (p-1)*tau = {(params.p - 1) * params.tau}"
        )
    t = len(le.lines)
    if t == 0:
        return arr
    info = analyze_lines(le, params)
    if t > info.eta + len(info.i_bar):
        raise TooManyLines(
            f"{t} erased lines > eta + |I-bar| = {info.eta + len(info.i_bar)}"
        )
    rows = _build_candidate_rows(arr.symbols, le, info, params)
    mat, rhs = _select_rows(rows, t, params)
    sol = solve_unique_mod_h(mat.transpose(), rhs, params.crt)
    known = [
        [(pos, 0) for pos in range(params.n, params.m)] for _ in range(t)
    ]
    lifted = lift_with_known_coeffs(sol, known, params.crt)
    symbols = np.array(arr.symbols)
    for e, s_bar in zip(le.lines, lifted):
        for j in range(params.n):
            symbols[(e - le.slope * j) % params.m, j] = s_bar[j]
    out = GebrArray(params, symbols, verdict=arr.verdict)
    if not out.validate():
        raise GebrError(
            "line recovery verification failed: restored array is not a codeword"
        )
    return out
