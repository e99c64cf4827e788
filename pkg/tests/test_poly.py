import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gebr import poly
from gebr.field import gf

K1 = gf(1)
K8 = gf(8)


def coeffs(w=1, min_len=0, max_len=40):
    return st.lists(
        st.integers(0, (1 << w) - 1), min_size=min_len, max_size=max_len
    ).map(lambda xs: np.array(xs, dtype=np.uint8))


def test_trim_and_degree():
    assert poly.deg(poly.ZERO) == -1
    assert poly.deg(np.array([1, 0, 0], dtype=np.uint8)) == 0
    assert poly.deg(poly.from_terms("1+x^9")) == 9


def test_divmod_golden_factorizations():
    q, r = poly.divmod_(poly.from_terms("1+x^9"), poly.from_terms("1+x^3"), K1)
    assert poly.eq(q, poly.from_terms("1+x^3+x^6")) and poly.is_zero(r)
    _, r = poly.divmod_(poly.from_terms("1+x^3+x^6"), poly.from_terms("1+x"), K1)
    assert poly.eq(r, poly.ONE)  # odd number of terms
    q, r = poly.divmod_(poly.from_exponents([0, 50]), poly.from_exponents([0, 25]), K1)
    assert poly.eq(q, poly.from_exponents([0, 25])) and poly.is_zero(r)


def test_divide_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        poly.divmod_(poly.ONE, poly.ZERO, K1)


@given(st.integers(1, 8), st.data())
@settings(max_examples=60)
def test_divmod_reconstruction(w, data):
    k = gf(w)
    a = data.draw(coeffs(w, 0, 40))
    b = data.draw(coeffs(w, 1, 20))
    b = poly.trim(b)
    if poly.is_zero(b):
        b = poly.ONE
    q, r = poly.divmod_(a, b, k)
    assert poly.deg(r) < poly.deg(b) or poly.is_zero(r)
    assert poly.eq(poly.add(poly.mul(q, b, k), r, ), poly.trim(a))


def test_gcd_of_binomials_exhaustive():
    for a in range(1, 65):
        for b in range(1, 65):
            g = poly.gcd(poly.from_exponents([0, a]), poly.from_exponents([0, b]), K1)
            assert poly.eq(g, poly.from_exponents([0, math.gcd(a, b)]))


def test_gcd_golden():
    g = poly.gcd(poly.from_exponents([0, 25]), poly.from_exponents([0, 10]), K1)
    assert poly.eq(g, poly.from_exponents([0, 5]))


def test_gcd_with_self_is_monic_self():
    f = np.array([3, 0, 5], dtype=np.uint8)  # 3 + 5x^2 over GF(2^3)
    k = gf(3)
    g, s, t = poly.gcd_ext(f, f, k)
    assert g[-1] == 1
    assert poly.eq(g, poly.monic(f, k))
    lhs = poly.add(poly.mul(s, f, k), poly.mul(t, f, k))
    assert poly.eq(lhs, g)


@given(st.integers(1, 8), st.data())
@settings(max_examples=60)
def test_gcd_ext_bezout(w, data):
    k = gf(w)
    a = poly.trim(data.draw(coeffs(w, 1, 24)))
    b = poly.trim(data.draw(coeffs(w, 1, 24)))
    if poly.is_zero(a) and poly.is_zero(b):
        a = poly.ONE
    g, s, t = poly.gcd_ext(a, b, k)
    lhs = poly.add(poly.mul(s, a, k), poly.mul(t, b, k))
    assert poly.eq(lhs, g)
    if not poly.is_zero(a):
        assert poly.is_zero(poly.mod(a, g, k))
    if not poly.is_zero(b):
        assert poly.is_zero(poly.mod(b, g, k))


def test_text_forms_round_trip():
    f = poly.from_terms("1+x^3+x^6")
    assert poly.to_terms(f) == "1+x^3+x^6"
    assert poly.eq(poly.from_hex(poly.to_hex(f)), f)
    assert poly.to_hex(poly.from_hex("01 00 01")) == "01 00 01"
    assert poly.is_zero(poly.from_terms("0"))
    with pytest.raises(ValueError):
        poly.from_terms("1+y")


def test_byte_form_round_trip():
    f = np.array([2, 0, 7, 1], dtype=np.uint8)
    buf = poly.to_bytes(f)
    back, used = poly.from_bytes(buf + b"tail")
    assert used == len(buf)
    assert poly.eq(back, f)


def test_factor_gf2_reconstructs():
    f = poly.from_exponents([0, 5, 10, 15, 20])
    pairs = poly.factor_gf2(f)
    acc = poly.ONE
    for p_, mult in pairs:
        acc = poly.mul(acc, poly.pow_(p_, mult, K1), K1)
    assert poly.eq(acc, f)


def test_factor_gf2_irreducible_and_square():
    pairs = poly.factor_gf2(poly.from_terms("1+x^3+x^6"))
    assert len(pairs) == 1 and pairs[0][1] == 1
    assert poly.eq(pairs[0][0], poly.from_terms("1+x^3+x^6"))
    sq = poly.mul(poly.from_terms("1+x+x^2"), poly.from_terms("1+x+x^2"), K1)
    pairs = poly.factor_gf2(sq)
    assert len(pairs) == 1 and pairs[0][1] == 2
    assert poly.eq(pairs[0][0], poly.from_terms("1+x+x^2"))


def test_divisors_gf2():
    f = poly.from_exponents([0, 10, 20])  # square of a three-factor product
    divs = poly.divisors_gf2(f)
    assert len(divs) == 27
    assert all(poly.divides(d, f, K1) for d in divs)
    assert poly.eq(divs[0], poly.ONE)
    assert poly.eq(divs[-1], f)
    # sorted by degree, no duplicates
    degs = [poly.deg(d) for d in divs]
    assert degs == sorted(degs)
    assert len({poly.to_hex(d) for d in divs}) == len(divs)
