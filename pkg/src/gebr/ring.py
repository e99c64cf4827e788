"""Quotient rings GF(2^w)[x]/(M(x)): elements, inverses, CRT splitting.

A RingElement stores exactly deg(M) coefficients (canonical reduced form),
so equality is a plain coefficient comparison. Values are immutable and
all operations are pure; everything is safe to share across threads.

The rings 1 + x^(p*tau) split as a product of the rings modulo 1 + x^tau
and modulo 1 + x^tau + ... + x^((p-1)*tau); CrtMap implements that
isomorphism (and any other coprime two-factor split) via fixed idempotents.
"""

import functools

import numpy as np

from . import poly
from .errors import ModulusMismatch, NotInvertible
from .field import GF, gf as _gf


class Modulus:
    """Immutable modulus polynomial with cached degree and field context."""

    def __init__(self, p, gf: GF):
        arr = poly.trim(p)
        if len(arr) < 2:
            raise ValueError("modulus must have degree >= 1")
        arr = arr.copy()
        arr.flags.writeable = False
        self.poly = arr
        self.degree = len(arr) - 1
        self.gf = gf
        # 1 + x^m moduli admit cyclic-shift fast paths
        self.is_cyclic = bool(
            arr[0] == 1 and arr[-1] == 1 and np.all(arr[1:-1] == 0)
        )
        self._key = (gf.w, arr.tobytes())

    def __eq__(self, other):
        return isinstance(other, Modulus) and other._key == self._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"Modulus({poly.to_terms(self.poly)}, w={self.gf.w})"


class RingElement:
    """Element of GF(2^w)[x]/(M(x)) in canonical reduced form."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs, modulus: Modulus, _reduced=False):
        if _reduced:
            arr = coeffs
        else:
            arr = poly.trim(coeffs)
            if len(arr) > modulus.degree:
                arr = poly.mod(arr, modulus.poly, modulus.gf)
            out = np.zeros(modulus.degree, dtype=np.uint8)
            out[: len(arr)] = arr
            arr = out
        arr.flags.writeable = False
        self.coeffs = arr
        self.modulus = modulus

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, modulus: Modulus):
        return cls(np.zeros(modulus.degree, dtype=np.uint8), modulus, _reduced=True)

    @classmethod
    def one(cls, modulus: Modulus):
        out = np.zeros(modulus.degree, dtype=np.uint8)
        out[0] = 1
        return cls(out, modulus, _reduced=True)

    @classmethod
    def x_power(cls, e: int, modulus: Modulus):
        if modulus.is_cyclic:
            out = np.zeros(modulus.degree, dtype=np.uint8)
            out[e % modulus.degree] = 1
            return cls(out, modulus, _reduced=True)
        return cls(poly.x_power(e), modulus)

    # -- views --------------------------------------------------------
    @property
    def poly(self) -> np.ndarray:
        """Trimmed coefficient array."""
        return poly.trim(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def is_one(self) -> bool:
        return bool(self.coeffs[0] == 1) and not self.coeffs[1:].any()

    def __getitem__(self, i: int) -> int:
        return int(self.coeffs[i])

    # -- arithmetic ---------------------------------------------------
    def _check(self, other):
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ModulusMismatch(
                f"operands over {self.modulus!r} and {other.modulus!r}"
            )

    def __add__(self, other):
        self._check(other)
        return RingElement(
            self.coeffs ^ other.coeffs, self.modulus, _reduced=True
        )

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other):
        self._check(other)
        m = self.modulus
        a, b = self.poly, other.poly
        if len(a) == 0 or len(b) == 0:
            return RingElement.zero(m)
        full = poly.mul(a, b, m.gf)
        if m.is_cyclic:
            # x^deg == 1: fold the high part back onto the low part
            d = m.degree
            out = np.zeros(d, dtype=np.uint8)
            out[: min(d, len(full))] = full[:d]
            if len(full) > d:
                out[: len(full) - d] ^= full[d:]
            return RingElement(out, m, _reduced=True)
        return RingElement(full, m)

    def shift(self, e: int):
        """Multiply by x^e."""
        m = self.modulus
        if m.is_cyclic:
            return RingElement(np.roll(self.coeffs, e % m.degree), m, _reduced=True)
        return self * RingElement.x_power(e, m)

    def is_unit(self) -> bool:
        if self.is_zero():
            return False
        return poly.deg(poly.gcd(self.poly, self.modulus.poly, self.modulus.gf)) == 0

    def inverse(self):
        if self.is_zero():
            raise NotInvertible("zero is not invertible", gcd=self.modulus.poly)
        g, s, _ = poly.gcd_ext(self.poly, self.modulus.poly, self.modulus.gf)
        if poly.deg(g) != 0:
            raise NotInvertible(
                f"gcd with modulus is {poly.to_terms(g)}", gcd=g
            )
        return RingElement(s, self.modulus)

    # -- comparison / display ------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and other.modulus == self.modulus
            and bool(np.all(other.coeffs == self.coeffs))
        )

    def __hash__(self):
        return hash((self.modulus, self.coeffs.tobytes()))

    def __repr__(self):
        return f"<{poly.to_terms(self.coeffs)} mod {poly.to_terms(self.modulus.poly)}>"


def reduce_to(elem: RingElement, target: Modulus) -> RingElement:
    """Reduce an element into a smaller quotient (target must divide)."""
    return RingElement(elem.poly, target)


class CrtMap:
    """Two-factor CRT isomorphism R[x]/(A*B) = R[x]/A x R[x]/B.

    Requires gcd(A, B) = 1. Idempotents are derived once by extended
    Euclid, making split and join single multiplications.
    """

    def __init__(self, mod_a: Modulus, mod_b: Modulus):
        if mod_a.gf != mod_b.gf:
            raise ModulusMismatch("CRT factors over different fields")
        gf = mod_a.gf
        g, s, t = poly.gcd_ext(mod_a.poly, mod_b.poly, gf)
        if poly.deg(g) != 0:
            raise ValueError(
                f"CRT factors share divisor {poly.to_terms(g)}"
            )
        self.gf = gf
        self.mod_a = mod_a
        self.mod_b = mod_b
        self.mod_full = Modulus(poly.mul(mod_a.poly, mod_b.poly, gf), gf)
        # e_a = t*B  (1 mod A, 0 mod B); e_b = s*A  (0 mod A, 1 mod B)
        self.e_a = RingElement(poly.mul(t, mod_b.poly, gf), self.mod_full)
        self.e_b = RingElement(poly.mul(s, mod_a.poly, gf), self.mod_full)

    @classmethod
    @functools.lru_cache(maxsize=None)
    def cyclic(cls, p: int, tau: int, w: int) -> "CrtMap":
        """The split of 1 + x^(p*tau) into 1 + x^tau and its cofactor."""
        gf = _gf(w)
        mod_a = Modulus(poly.from_exponents([0, tau]), gf)
        mod_b = Modulus(poly.from_exponents(range(0, p * tau, tau)), gf)
        return cls(mod_a, mod_b)

    def split(self, v: RingElement):
        if v.modulus != self.mod_full:
            raise ModulusMismatch("element is not in the joined ring")
        p = v.poly
        return (
            RingElement(p, self.mod_a),
            RingElement(p, self.mod_b),
        )

    def join(self, a: RingElement, b: RingElement) -> RingElement:
        if a.modulus != self.mod_a or b.modulus != self.mod_b:
            raise ModulusMismatch("component moduli do not match this map")
        lifted_a = RingElement(a.poly, self.mod_full)
        lifted_b = RingElement(b.poly, self.mod_full)
        return lifted_a * self.e_a + lifted_b * self.e_b

    def embed_b(self, b: RingElement) -> RingElement:
        """join(0, b): lift a second-factor element (common codec case)."""
        if b.modulus != self.mod_b:
            raise ModulusMismatch("component modulus does not match this map")
        return RingElement(b.poly, self.mod_full) * self.e_b

    def embed_a(self, a: RingElement) -> RingElement:
        """join(a, 0): lift a first-factor element."""
        if a.modulus != self.mod_a:
            raise ModulusMismatch("component modulus does not match this map")
        return RingElement(a.poly, self.mod_full) * self.e_a


def crt_split(b: RingElement, p: int, tau: int):
    """Split an element of GF[x]/(1+x^(p*tau)) into its two CRT components."""
    cm = CrtMap.cyclic(p, tau, b.modulus.gf.w)
    return cm.split(b)


def crt_join(b1: RingElement, b2: RingElement, p: int, tau: int) -> RingElement:
    """Inverse of crt_split."""
    cm = CrtMap.cyclic(p, tau, b1.modulus.gf.w)
    return cm.join(b1, b2)
