import itertools

import numpy as np
import pytest

from gebr import poly
from gebr.errors import (
    GNotInvertible,
    NotCoprime,
    TooManyErasures,
    TooManyLines,
    UnsupportedParams,
)
from gebr.gebr_codec import (
    GebrArray,
    LineErasure,
    _build_candidate_rows,
    analyze_lines,
    decode_columns,
    encode,
    line_inverse_exponent,
    recover_lines,
)
from gebr.linalg import RingMatrix, determinant
from gebr.params import check_membership, derive_params

P442 = derive_params(3, 3, 4, 2, w=1)
P772 = derive_params(3, 3, 7, 2, w=1)


def random_array(params, seed=0):
    rng = np.random.default_rng(seed)
    info = rng.integers(0, params.gf.order, (params.alpha, params.k)).astype(np.uint8)
    return encode(info, params)


def erase_columns(arr, cols):
    z = np.array(arr.symbols)
    for c in cols:
        z[:, c] = 0
    return GebrArray(arr.params, z)


def erase_lines(arr, le: LineErasure):
    z = np.array(arr.symbols)
    for e in le.lines:
        for j in range(arr.params.n):
            z[(e - le.slope * j) % arr.params.m, j] = 0
    return GebrArray(arr.params, z)


def test_encode_zero_is_zero():
    arr = encode(np.zeros((6, 4), dtype=np.uint8), P442)
    assert not arr.symbols.any()
    assert arr.validate()


def test_encode_shape_checks():
    with pytest.raises(Exception):
        encode(np.zeros((5, 4), dtype=np.uint8), P442)


def test_encode_systematic_and_valid():
    arr = random_array(P442, seed=3)
    rng = np.random.default_rng(3)
    info = rng.integers(0, 2, (6, 4)).astype(np.uint8)
    assert np.array_equal(arr.info(), info)
    assert arr.validate()
    assert arr.verdict.verdict == "Recoverable"


def test_encode_worked_info_columns():
    # information polynomials (1, x, ..., x^5, 1) in the expanded view
    info = np.zeros((6, 7), dtype=np.uint8)
    for j in range(6):
        info[j, j] = 1
    info[0, 6] = 1
    arr = encode(info, P772)
    assert arr.validate()
    assert np.array_equal(arr.symbols[:, 0], [1, 0, 0, 0, 0, 0, 1, 0, 0])
    for j in range(9):
        assert check_membership(arr.symbols[:, j], P772)


def test_decode_zero_erasures_identity():
    arr = random_array(P442, seed=4)
    assert decode_columns(arr, []) == arr


def test_decode_too_many():
    arr = random_array(P442, seed=5)
    with pytest.raises(TooManyErasures):
        decode_columns(arr, [0, 1, 2])


def test_decode_exhaustive_pairs():
    for seed in range(5):
        arr = random_array(P442, seed=100 + seed)
        for cols in itertools.combinations(range(6), 2):
            assert decode_columns(erase_columns(arr, cols), cols) == arr
        for col in range(6):
            assert decode_columns(erase_columns(arr, [col]), [col]) == arr


def test_decode_tiny_code_exhaustive():
    params = derive_params(3, 1, 1, 2, w=1)
    for seed in range(20):
        arr = random_array(params, seed=seed)
        for t in (1, 2):
            for cols in itertools.combinations(range(3), t):
                assert decode_columns(erase_columns(arr, cols), cols) == arr


def test_table_one_extended_parity():
    # the published 6x9 array: every row and slope-1 diagonal of the 9x9
    # extension sums to zero
    tbl = np.array(
        [
            [1, 0, 0, 0, 0, 0, 1, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, 1, 0],
            [0, 0, 1, 0, 0, 0, 0, 1, 0],
            [0, 0, 0, 1, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1, 0, 0, 1],
        ],
        dtype=np.uint8,
    )
    ext = np.zeros((9, 9), dtype=np.uint8)
    ext[:6] = tbl
    for slope in (0, 1):
        for line in range(9):
            total = 0
            for j in range(9):
                total ^= int(ext[(line - slope * j) % 9, j])
            assert total == 0


# ---------------------------------------------------------------------------
# line recovery

def test_line_inverse_exponent_goldens():
    assert line_inverse_exponent(2, 1, P442) == 8
    assert line_inverse_exponent(2, 0, P442) == 4
    # offset 1: inverse of m-1 is m-1
    assert line_inverse_exponent(1, 0, P442) == 8
    with pytest.raises(NotCoprime):
        line_inverse_exponent(3, 0, P442)


def test_analyze_lines_worked_example():
    le = LineErasure(2, (0, 1, 3, 4))
    info = analyze_lines(le, P442)
    assert info.theta == [0, 1] and info.eta == 2
    assert info.v_rows == [[1, 0, 1, 0], [0, 1, 0, 1]]
    assert info.i_bar == [2, 1]
    assert info.multipliers == [4, 8]


def test_recovery_matrix_determinant_golden():
    arr = random_array(P442, seed=6)
    le = LineErasure(2, (0, 1, 3, 4))
    info = analyze_lines(le, P442)
    rows = _build_candidate_rows(arr.symbols, le, info, P442)
    det = determinant(RingMatrix([r[0] for r in rows]))
    assert poly.to_terms(det.poly) == "x+x^2+x^5+x^7"


def test_recover_lines_worked_example():
    for seed in range(5):
        arr = random_array(P442, seed=200 + seed)
        le = LineErasure(2, (0, 1, 3, 4))
        assert recover_lines(erase_lines(arr, le), le) == arr


def test_recover_lines_zero_identity():
    arr = random_array(P442, seed=7)
    assert recover_lines(arr, LineErasure(2, ())) == arr


def test_recover_lines_parity_slope():
    # slope 1 is itself a parity slope: offset 0 drops out, t = eta + 1
    arr = random_array(P442, seed=8)
    le = LineErasure(1, (0, 3))
    info = analyze_lines(le, P442)
    assert info.eta == 1 and len(info.i_bar) == 1
    assert recover_lines(erase_lines(arr, le), le) == arr


def test_recover_lines_submatrix_selection():
    # three erased lines but four candidate rows: a subset must be chosen
    arr = random_array(P442, seed=9)
    le = LineErasure(2, (0, 1, 3))
    info = analyze_lines(le, P442)
    assert len(le.lines) < info.eta + len(info.i_bar)
    assert recover_lines(erase_lines(arr, le), le) == arr


def test_recover_lines_many_seeds_slope_sweep():
    for slope in range(9):
        arr = random_array(P442, seed=300 + slope)
        le = LineErasure(slope, (1, 4))
        try:
            got = recover_lines(erase_lines(arr, le), le)
        except (GNotInvertible, TooManyLines):
            continue
        assert got == arr


def test_recover_lines_too_many():
    arr = random_array(P442, seed=10)
    le = LineErasure(2, (0, 1, 2, 3, 4, 5))
    info = analyze_lines(le, P442)
    assert len(le.lines) > info.eta + len(info.i_bar)
    with pytest.raises(TooManyLines):
        recover_lines(arr, le)


def test_recover_lines_unsupported_params():
    arr_g = random_array(derive_params(5, 2, 3, 2, w=1), seed=11)
    with pytest.raises(UnsupportedParams):
        recover_lines(arr_g, LineErasure(1, (0,)))  # tau not a power of p
    g = poly.from_terms("1+x^5+x^10+x^15+x^20")
    params_g = derive_params(5, 10, 10, 2, w=1, g=g)
    arr2 = GebrArray(params_g, np.zeros((50, 12), dtype=np.uint8))
    with pytest.raises(UnsupportedParams):
        recover_lines(arr2, LineErasure(1, (0,)))  # g != 1
    with pytest.raises(UnsupportedParams):
        recover_lines(random_array(P772, seed=12), LineErasure(1, (0,)))  # k+r too big
