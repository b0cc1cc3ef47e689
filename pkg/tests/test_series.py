import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcong.errors import InversionError, PreconditionError, StructuralError
from qcong.series import (
    ZZ,
    CoefficientRing,
    IntegersMod,
    add,
    divide,
    equal_up_to,
    first_difference,
    from_coefficients,
    invert,
    lift,
    make_series,
    monomial,
    mul,
    one,
    power,
    reduce_mod,
    shift,
    sub,
    zero,
)


def naive_mul(a, b, n, m=None):
    out = [0] * n
    for i, x in enumerate(a[:n]):
        for j, y in enumerate(b[:n - i]):
            out[i + j] += x * y
    return out if m is None else [v % m for v in out]


coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=60)
rings = st.sampled_from([None, 2, 3, 4, 7, 11, 1 << 20])


def _ring(m):
    return ZZ if m is None else IntegersMod(m)


@settings(max_examples=80, deadline=None)
@given(coeff_lists, coeff_lists, rings)
def test_mul_matches_schoolbook(a, b, m):
    n = min(len(a), len(b))
    got = mul(from_coefficients(_ring(m), a), from_coefficients(_ring(m), b))
    assert got.order == n
    assert got.tolist() == naive_mul(a, b, n, m)


@settings(max_examples=20, deadline=None)
@given(st.integers(200, 1500), rings, st.integers(0, 2**32))
def test_dense_mul_matches_schoolbook(n, m, seed):
    rng = np.random.default_rng(seed)
    a = [int(v) for v in rng.integers(-1000, 1000, n)]
    b = [int(v) for v in rng.integers(-1000, 1000, n)]
    got = mul(from_coefficients(_ring(m), a), from_coefficients(_ring(m), b))
    # compare a prefix only: the schoolbook product is quadratic
    k = 120
    assert got.tolist()[:k] == naive_mul(a, b, k, m)
    last = sum(a[i] * b[n - 1 - i] for i in range(n))
    assert got[n - 1] == (last if m is None else last % m)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, rings)
def test_inverse_roundtrip(tail, m):
    a = from_coefficients(_ring(m), [1] + tail)
    assert mul(a, invert(a)) == one(a.order, _ring(m))


@settings(max_examples=30, deadline=None)
@given(st.integers(100, 3000), st.sampled_from([2, 4, 5, 7, 11, None]), st.integers(0, 2**32))
def test_divide_then_multiply(n, m, seed):
    rng = np.random.default_rng(seed)
    ring = _ring(m)
    a = from_coefficients(ring, [int(v) for v in rng.integers(-9, 9, n)])
    b = from_coefficients(ring, [1] + [int(v) for v in rng.integers(-3, 3, n - 1)])
    assert mul(divide(a, b), b) == a


def test_divide_sparse_denominator():
    ring = IntegersMod(2)
    n = 5000
    b = make_series(ring, n, [(0, 1), (7, 1), (40, 1)])
    a = from_coefficients(ring, [1] * n)
    assert mul(divide(a, b), b) == a


def test_invert_geometric():
    # 1/(1-q) = 1 + q + q^2 + ...
    assert invert(make_series(ZZ, 10, [(0, 1), (1, -1)])).tolist() == [1] * 10


def test_non_unit_constant_rejected():
    with pytest.raises(InversionError):
        invert(make_series(ZZ, 5, [(0, 2)]))
    with pytest.raises(InversionError):
        invert(make_series(IntegersMod(4), 5, [(0, 2)]))
    # 3 is a unit mod 4
    assert invert(make_series(IntegersMod(4), 3, [(0, 3)])).tolist() == [3, 0, 0]


def test_make_series_validation():
    with pytest.raises(StructuralError):
        make_series(ZZ, 5, [(1, 1), (1, 2)])
    with pytest.raises(StructuralError):
        make_series(ZZ, 5, [(5, 1)])
    with pytest.raises(StructuralError):
        make_series(ZZ, 5, [(-1, 1)])
    with pytest.raises(StructuralError):
        make_series(ZZ, 0, [])


def test_ring_validation_and_mismatch():
    with pytest.raises(StructuralError):
        CoefficientRing(1)
    with pytest.raises(StructuralError):
        IntegersMod((1 << 20) + 1)
    with pytest.raises(StructuralError):
        add(one(3, ZZ), one(3, IntegersMod(2)))


def test_truncation_to_min_order():
    a = from_coefficients(ZZ, [1, 2, 3, 4])
    b = from_coefficients(ZZ, [1, 1])
    assert add(a, b).tolist() == [2, 3]
    assert mul(a, b).tolist() == [1, 3]


def test_shift_and_monomial():
    a = from_coefficients(ZZ, [1, 2, 3])
    assert shift(a, 2).tolist() == [0, 0, 1]
    assert shift(a, 1, 5).tolist() == [0, 1, 2, 3, 0]
    assert monomial(-4, 2, 4).tolist() == [0, 0, -4, 0]


def test_power():
    a = make_series(ZZ, 8, [(0, 1), (1, 1)])
    assert power(a, 3).tolist() == [1, 3, 3, 1, 0, 0, 0, 0]
    assert power(a, 0) == one(8)


def test_reduce_and_lift():
    a = from_coefficients(ZZ, [5, -3, 7, 0])
    r = reduce_mod(a, 4)
    assert r.ring == IntegersMod(4) and r.tolist() == [1, 1, 3, 0]
    assert reduce_mod(r, 2).tolist() == [1, 1, 1, 0]
    with pytest.raises(StructuralError):
        reduce_mod(r, 3)
    with pytest.raises(StructuralError):
        reduce_mod(a, 1)
    assert lift(r).ring == ZZ and lift(r).tolist() == [1, 1, 3, 0]


def test_big_exact_coefficients_do_not_overflow():
    a = make_series(ZZ, 40, [(0, 1), (1, 10**30)])
    got = power(a, 3)
    assert got[3] == 10**90 and got[2] == 3 * 10**60


@settings(max_examples=50, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(2, 97))
def test_reduction_is_a_ring_map(a, b, m):
    A, B = from_coefficients(ZZ, a), from_coefficients(ZZ, b)
    assert reduce_mod(mul(A, B), m) == mul(reduce_mod(A, m), reduce_mod(B, m))
    assert reduce_mod(sub(A, B), m) == sub(reduce_mod(A, m), reduce_mod(B, m))


def test_comparisons():
    a = from_coefficients(ZZ, [1, 2, 3, 4])
    b = from_coefficients(ZZ, [1, 2, 9, 4])
    assert first_difference(a, b) == 2
    assert equal_up_to(a, b, 2) and not equal_up_to(a, b, 3)
    with pytest.raises(PreconditionError):
        first_difference(a, b, 10)
    assert zero(4) == from_coefficients(ZZ, [0, 0, 0, 0])


def test_immutable():
    a = from_coefficients(ZZ, [1, 2])
    with pytest.raises(ValueError):
        a.coeffs[0] = 5
