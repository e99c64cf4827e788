"""Code parameter validation and the per-column cyclic-code structure.

A parameter set (p, tau, k, r, q=2^w, g) defines a cyclic code of length
m = p*tau generated by (1 + x^tau) g(x), where g divides
1 + x^tau + ... + x^((p-1)*tau). Columns of the expanded array live in that
code; the first alpha coefficients of an information column carry payload
and the remaining m - alpha are local parities.
"""

import numpy as np

from . import linalg, poly
from .errors import BadShape, GNotDivisor, NotPrime, UnsolvablePattern
from .field import GF, gf as _gf
from .ring import CrtMap, Modulus, RingElement


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class CodeParams:
    """Validated parameters plus every derived quantity the codecs need.

    Use derive_params() to construct. `d` (the cyclic code's minimum
    distance) is optional caller metadata and is never computed or
    validated here.
    """

    def __init__(self, p, tau, k, r, w, g, d=None):
        self.p = p
        self.tau = tau
        self.k = k
        self.r = r
        self.w = w
        self.d = d
        self.gf: GF = _gf(w)
        self.m = p * tau
        gg = poly.trim(g)
        gg.flags.writeable = False
        self.g = gg
        h_full = poly.from_exponents(range(0, self.m, tau))
        q, rem = poly.divmod_(h_full, gg, self.gf)
        if not poly.is_zero(rem):
            raise GNotDivisor(
                f"g(x) = {poly.to_terms(gg)} does not divide "
                f"1 + x^{tau} + ... + x^{(p - 1) * tau}"
            )
        self.h = q
        self.h_full = h_full
        self.alpha = poly.deg(q)
        if self.alpha < 1:
            raise BadShape("g(x) equals the full cofactor: no payload (alpha = 0)")
        self.gen = poly.mul(poly.from_exponents([0, tau]), gg, self.gf)
        tau_rest, nu = tau, 0
        while tau_rest % p == 0:
            tau_rest //= p
            nu += 1
        self.nu = nu
        self.gamma = tau_rest
        self.gcd_g_h_is_one = poly.deg(poly.gcd(gg, q, self.gf)) == 0
        self.gcd_xtau1_h_is_one = (
            poly.deg(poly.gcd(poly.from_exponents([0, tau]), q, self.gf)) == 0
        )
        # quotient rings used throughout
        self.mod_m = Modulus(poly.from_exponents([0, self.m]), self.gf)
        self.mod_h = Modulus(self.h, self.gf)
        self.mod_hfull = Modulus(h_full, self.gf)
        self.mod_gen = Modulus(self.gen, self.gf)
        self.crt = CrtMap.cyclic(p, tau, w)
        self._x_alpha_inv = RingElement.x_power(self.alpha, self.mod_gen).inverse()

    @property
    def n(self) -> int:
        return self.k + self.r

    def header(self) -> str:
        return (
            f"p={self.p};tau={self.tau};k={self.k};r={self.r};w={self.w};"
            f"g={poly.to_hex(self.g) or '00'}"
        )

    def __repr__(self):
        return f"CodeParams({self.header()})"

    def __eq__(self, other):
        return isinstance(other, CodeParams) and other.header() == self.header()

    def __hash__(self):
        return hash(self.header())


def derive_params(p, tau, k, r, w=1, g=None, d=None) -> CodeParams:
    """Validate raw parameters and derive h, alpha, nu, gamma and friends."""
    if not is_prime(p) or p == 2:
        raise NotPrime(f"p = {p} is not an odd prime")
    if tau < 1:
        raise BadShape(f"tau = {tau} must be positive")
    if k < 1 or r < 1:
        raise BadShape(f"k = {k} and r = {r} must be positive")
    if not 1 <= w <= 8:
        raise BadShape(f"w = {w} out of range 1..8")
    if k + r > p * tau:
        raise BadShape(f"k + r = {k + r} exceeds p*tau = {p * tau}")
    if g is None:
        g = poly.ONE
    g = poly.trim(np.asarray(g, dtype=np.uint8))
    if poly.is_zero(g) or g[0] != 1:
        raise BadShape("g(x) must have constant term 1")
    return CodeParams(p, tau, k, r, w, g, d=d)


def residue_class_sums(col: np.ndarray, params: CodeParams) -> np.ndarray:
    """The tau per-class sums of column symbols (all zero inside the code)."""
    return np.bitwise_xor.reduce(
        np.asarray(col, dtype=np.uint8).reshape(params.p, params.tau), axis=0
    )


def check_membership(col, params: CodeParams) -> bool:
    """True iff the column polynomial is divisible by (1 + x^tau) g(x)."""
    col = np.asarray(col, dtype=np.uint8)
    if len(col) != params.m:
        raise BadShape(f"column length {len(col)} != m = {params.m}")
    return poly.is_zero(poly.mod(poly.trim(col), params.gen, params.gf))


def local_encode_column(info, params: CodeParams) -> np.ndarray:
    """Systematic column encode: payload at 0..alpha-1, parities above.

    The output s(x) = info(x) + x^alpha q(x) is a multiple of
    (1 + x^tau) g(x), with q = x^(-alpha) info(x) in that quotient (x is a
    unit there because the generator has constant term 1).
    """
    info = np.asarray(info, dtype=np.uint8)
    if len(info) != params.alpha:
        raise BadShape(f"info length {len(info)} != alpha = {params.alpha}")
    out = np.zeros(params.m, dtype=np.uint8)
    out[: params.alpha] = info
    if info.any():
        q = RingElement(info, params.mod_gen) * params._x_alpha_inv
        out[params.alpha :] = q.coeffs
    return out


def local_repair(col, erased, params: CodeParams) -> np.ndarray:
    """Restore erased positions of a single column from its code constraints.

    `erased` is an iterable of positions; stored values there are ignored.
    Raises UnsolvablePattern when the constraint sub-system does not pin
    the erased symbols down (for g = 1 that means two losses in one residue
    class).
    """
    col = np.array(col, dtype=np.uint8, copy=True)
    if len(col) != params.m:
        raise BadShape(f"column length {len(col)} != m = {params.m}")
    positions = sorted(set(int(e) for e in erased))
    if not positions:
        return col
    if any(not 0 <= e < params.m for e in positions):
        raise BadShape("erased position out of range")
    col[positions] = 0
    ncon = params.m - params.alpha  # deg of the generator
    a = np.zeros((ncon, len(positions)), dtype=np.uint8)
    for j, e in enumerate(positions):
        rem = poly.mod(poly.x_power(e), params.gen, params.gf)
        a[: len(rem), j] = rem
    rhs = poly.mod(poly.trim(col), params.gen, params.gf)
    b = np.zeros(ncon, dtype=np.uint8)
    b[: len(rhs)] = rhs
    sol = linalg.field_solve(a, b, params.gf)
    if sol is None:
        raise UnsolvablePattern(
            f"cannot repair positions {positions} within one column"
        )
    col[positions] = sol
    return col
