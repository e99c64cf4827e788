import itertools

import numpy as np
import pytest

from gebr import poly
from gebr.errors import InconsistentKnowns, InsufficientKnowns, SingularModH
from gebr.field import gf
from gebr.linalg import (
    RingMatrix,
    determinant,
    field_solve,
    lift_with_known_coeffs,
    solve_right,
    solve_unique_mod_h,
    solve_vandermonde,
)
from gebr.ring import CrtMap, Modulus, RingElement, reduce_to

K1 = gf(1)
CM = CrtMap.cyclic(3, 3, 1)
R9 = CM.mod_full
H36 = CM.mod_b


def elem(terms, mod=R9):
    return RingElement(poly.from_terms(terms), mod)


def xp(e, mod=R9):
    return RingElement.x_power(e, mod)


def rand_elem(rng, mod):
    return RingElement(
        rng.integers(0, 2, mod.degree).astype(np.uint8), mod, _reduced=True
    )


def cofactor_det(m: RingMatrix) -> RingElement:
    """Independent oracle: Laplace expansion along the first row."""
    if m.rows == 1:
        return m.entries[0][0]
    acc = RingElement.zero(m.modulus)
    for j in range(m.cols):
        minor = RingMatrix(
            [
                [m.entries[r][c] for c in range(m.cols) if c != j]
                for r in range(1, m.rows)
            ]
        )
        acc = acc + m.entries[0][j] * cofactor_det(minor)
    return acc


def test_determinant_identity():
    ident = RingMatrix(
        [[elem("1") if i == j else elem("0") for j in range(3)] for i in range(3)]
    )
    assert determinant(ident).is_one()


def test_determinant_2x2():
    m = RingMatrix([[elem("1"), elem("1")], [elem("1"), elem("x")]])
    assert determinant(m) == elem("1+x")


def test_determinant_line_recovery_matrix():
    # slope-2 recovery matrix for four erased lines: det = x+x^2+x^5+x^7
    e = [0, 1, 3, 4]
    m = RingMatrix(
        [
            [elem("1"), elem("0"), elem("1"), elem("0")],
            [elem("0"), elem("1"), elem("0"), elem("1")],
            [xp(0), xp(4), xp(12), xp(16)],
            [xp(0), xp(8), xp(24), xp(32)],
        ]
    )
    assert determinant(m) == elem("x+x^2+x^5+x^7")
    assert poly.deg(poly.gcd(determinant(m).poly, H36.poly, K1)) == 0


def test_determinant_matches_cofactor_oracle():
    rng = np.random.default_rng(0)
    for size in (2, 3):
        for _ in range(25):
            m = RingMatrix(
                [[rand_elem(rng, R9) for _ in range(size)] for _ in range(size)]
            )
            assert determinant(m) == cofactor_det(m)


def test_solve_right_round_trip_vandermonde():
    rng = np.random.default_rng(1)
    for _ in range(20):
        exps = rng.choice(9, size=3, replace=False)
        m = RingMatrix([[xp(int(l * e), H36) for e in exps] for l in range(3)])
        x = [rand_elem(rng, H36) for _ in range(3)]
        b = [
            sum(
                (m.entries[r][c] * x[c] for c in range(3)),
                RingElement.zero(H36),
            )
            for r in range(3)
        ]
        got = solve_right(m, b)
        assert got == x


def test_solve_unique_mod_h_worked_example():
    v_mat = RingMatrix([[elem("1"), elem("1")], [elem("1"), elem("x")]])
    v = [elem("1+x+x^2+x^5"), elem("1+x^3+x^7+x^8")]
    u2 = solve_unique_mod_h(v_mat, v, CM)
    assert u2[0] == elem("1+x+x^2+x^3+x^5", H36)
    assert u2[1] == elem("x^3", H36)


def test_solve_unique_mod_h_identity():
    ident = RingMatrix(
        [[elem("1") if i == j else elem("0") for j in range(2)] for i in range(2)]
    )
    v = [elem("1+x^6"), elem("x^8")]
    u2 = solve_unique_mod_h(ident, v, CM)
    assert u2 == [reduce_to(v[0], H36), reduce_to(v[1], H36)]


def test_two_solution_system_brute_force():
    """All solutions of the 2x2 system over 1+x^9, enumerated by components.

    The kernel lives entirely in the 1+x^3 component, so candidates are the
    64 pairs over that factor; each solution is checked by direct
    multiplication, and all of them reduce to one residue mod 1+x^3+x^6.
    """
    v_mat = RingMatrix([[elem("1"), elem("1")], [elem("1"), elem("x")]])
    v = [elem("1+x+x^2+x^5"), elem("1+x^3+x^7+x^8")]
    u2 = solve_unique_mod_h(v_mat, v, CM)
    solutions = []
    for bits_a in range(8):
        for bits_b in range(8):
            ua = RingElement(
                np.array([bits_a & 1, (bits_a >> 1) & 1, (bits_a >> 2) & 1], np.uint8),
                CM.mod_a, _reduced=True,
            )
            ub = RingElement(
                np.array([bits_b & 1, (bits_b >> 1) & 1, (bits_b >> 2) & 1], np.uint8),
                CM.mod_a, _reduced=True,
            )
            cand = [CM.join(ua, u2[0]), CM.join(ub, u2[1])]
            lhs0 = cand[0] * v_mat.entries[0][0] + cand[1] * v_mat.entries[1][0]
            lhs1 = cand[0] * v_mat.entries[0][1] + cand[1] * v_mat.entries[1][1]
            if lhs0 == v[0] and lhs1 == v[1]:
                solutions.append(cand)
    assert len(solutions) == 2
    expected = [
        [elem("1+x^2+x^3+x^4+x^5+x^7"), elem("x+x^3+x^4+x^7")],
        [elem("x+x^6+x^8"), elem("1+x^2+x^5+x^6+x^8")],
    ]
    assert all(any(s == e for s in solutions) for e in expected)
    for s in solutions:
        assert reduce_to(s[0], H36) == u2[0]
        assert reduce_to(s[1], H36) == u2[1]


def test_singular_system_carries_gcd():
    m = RingMatrix([[elem("1", H36), elem("1", H36)], [elem("1", H36), elem("1", H36)]])
    with pytest.raises(SingularModH) as exc:
        solve_right(m, [elem("1", H36), elem("0", H36)])
    assert poly.eq(exc.value.gcd, H36.poly)


def test_lift_zero():
    zero = RingElement.zero(H36)
    out = lift_with_known_coeffs(
        [zero], [[(6, 0), (7, 0), (8, 0)]], CM
    )
    assert out[0].is_zero()


def test_lift_closed_form():
    # knowns force zeros at 6..8: the 1+x^3 correction repeats a = embed(u2)
    rng = np.random.default_rng(2)
    for _ in range(50):
        u2 = rand_elem(rng, H36)
        a = CM.embed_b(u2)
        (lifted,) = lift_with_known_coeffs([u2], [[(6, 0), (7, 0), (8, 0)]], CM)
        expect = np.zeros(9, dtype=np.uint8)
        for ell in range(3):
            expect[ell] = a[ell] ^ a[6 + ell]
            expect[3 + ell] = a[3 + ell] ^ a[6 + ell]
        assert np.array_equal(lifted.coeffs, expect)
        assert reduce_to(lifted, H36) == u2
        assert all(lifted[j] == 0 for j in (6, 7, 8))


def test_lift_disambiguates_two_solution_system():
    # one known coefficient of the first entry picks exactly one solution
    u2 = [elem("1+x+x^2+x^3+x^5", H36), elem("x^3", H36)]
    first = elem("1+x^2+x^3+x^4+x^5+x^7")
    known = [[(0, first[0]), (1, first[1]), (2, first[2])], None]
    # anchor entry 1 from the matching full solution
    second = elem("x+x^3+x^4+x^7")
    known[1] = [(0, second[0]), (1, second[1]), (2, second[2])]
    lifted = lift_with_known_coeffs(u2, known, CM)
    assert lifted[0] == first and lifted[1] == second


def test_lift_insufficient_and_inconsistent():
    u2 = elem("x^3", H36)
    with pytest.raises(InsufficientKnowns):
        lift_with_known_coeffs([u2], [[(6, 0), (7, 0)]], CM)  # class 2 uncovered
    a = CM.embed_b(u2)
    bad = [[(0, a[0]), (1, a[1]), (2, a[2]), (3, a[3] ^ 1)]]
    with pytest.raises(InconsistentKnowns):
        lift_with_known_coeffs([u2], bad, CM)


def test_solve_vandermonde_parity_example():
    # parity system of the 7+2 compact code: s8 = x^5
    info = [
        elem("1", H36), elem("x", H36), elem("x^2", H36), elem("x^3", H36),
        elem("x^4", H36), elem("x^5", H36), elem("1", H36),
    ]
    rhs = []
    for ell in range(2):
        acc = RingElement.zero(H36)
        for j, c in enumerate(info):
            acc = acc + c.shift(ell * j)
        rhs.append(acc)
    s7, s8 = solve_vandermonde([7, 8], rhs, H36)
    assert s7 == elem("x+x^2+x^3+x^4", H36)
    assert s8 == elem("x^5", H36)


def test_solve_vandermonde_single_point():
    v = elem("x^2+x^4", H36)
    (s,) = solve_vandermonde([5], [v], H36, rows=[1])
    assert xp(5, H36) * s == v


def test_solve_vandermonde_rejects_colliding_points():
    with pytest.raises(ValueError):
        solve_vandermonde([1, 10], [elem("1"), elem("x")], R9)


def test_field_solve():
    k = gf(3)
    a = np.array([[1, 2], [3, 1]], dtype=np.uint8)
    x = np.array([5, 7], dtype=np.uint8)
    b = np.array(
        [
            k.add(k.mul(1, 5), k.mul(2, 7)),
            k.add(k.mul(3, 5), k.mul(1, 7)),
        ],
        dtype=np.uint8,
    )
    got = field_solve(a, b, k)
    assert np.array_equal(got, x)
    singular = np.array([[1, 1], [1, 1]], dtype=np.uint8)
    assert field_solve(singular, np.array([1, 0], np.uint8), k) is None
