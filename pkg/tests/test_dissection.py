import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcong.dissection import (
    IDENTITY_IDS,
    PDissectionInstance,
    Progression,
    compare_sides,
    extract,
    gen_pentagonal_index,
    identity_sides,
    substitute_power,
    verify_identity,
    verify_p_dissection,
)
from qcong.errors import PreconditionError, StructuralError
from qcong.qproducts import euler, grs_generating
from qcong.reports import FAIL
from qcong.series import ZZ, IntegersMod, add, from_coefficients, make_series, shift, zero


def test_extract_basics():
    s = from_coefficients(ZZ, list(range(10)))
    assert extract(s, Progression(1, 0)) == s
    assert extract(s, Progression(3, 1)).tolist() == [1, 4, 7]
    assert extract(s, Progression(4, 2)).order == 2
    assert extract(euler(2, 200), Progression(2, 1)) == zero(100)


def test_extract_parity_of_a25_even_part():
    a = grs_generating(2, 5, 200, IntegersMod(2))
    assert extract(a, Progression(2, 0)) == euler(2, 100, IntegersMod(2))


def test_progression_validation():
    with pytest.raises(StructuralError):
        Progression(3, 3)
    with pytest.raises(StructuralError):
        Progression(0, 0)
    with pytest.raises(PreconditionError):
        extract(from_coefficients(ZZ, [1, 2]), Progression(5, 4))


def test_substitute_power():
    e1 = euler(1, 100)
    assert substitute_power(e1, 1, 100) == e1
    assert substitute_power(e1, 2, 100) == euler(2, 100)
    with pytest.raises(PreconditionError):
        substitute_power(from_coefficients(ZZ, [1, 1]), 2, 10)
    with pytest.raises(StructuralError):
        substitute_power(e1, 0, 10)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=80), st.integers(1, 7))
def test_dissection_completeness(values, A):
    a = from_coefficients(ZZ, values)
    n = a.order
    total = zero(n)
    for B in range(min(A, n)):
        part = substitute_power(extract(a, Progression(A, B)), A, n - B)
        total = add(total, shift(part, B, n))
    assert total == a


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=40), st.integers(1, 6))
def test_substitute_extract_roundtrip(values, k):
    a = from_coefficients(ZZ, values)
    n = a.order * k
    assert extract(substitute_power(a, k, n), Progression(k, 0)) == a


def test_gen_pentagonal_index_values():
    assert [gen_pentagonal_index(n) for n in (0, 1, 2, 3, 4, 5, 7)] == [0, 1, -1, None, None, 2, -2]
    # k(3k-1)/2 = 12 at k = 3; k = -3 gives 15
    assert gen_pentagonal_index(12) == 3
    assert gen_pentagonal_index(15) == -3
    with pytest.raises(PreconditionError):
        gen_pentagonal_index(-1)


@settings(max_examples=60, deadline=None)
@given(st.integers(-300, 300))
def test_gen_pentagonal_roundtrip(k):
    assert gen_pentagonal_index(k * (3 * k - 1) // 2) == k


def test_euler_parity_is_pentagonal():
    e = euler(1, 3000, IntegersMod(2))
    for n in range(3000):
        assert (e[n] == 1) == (gen_pentagonal_index(n) is not None)


@pytest.mark.parametrize("identity", IDENTITY_IDS)
def test_identities_at_500(identity):
    assert verify_identity(identity, 500).passed


def test_identity_errors():
    with pytest.raises(KeyError):
        verify_identity("bogus", 100)
    with pytest.raises(PreconditionError):
        verify_identity("t1", 7)


def test_identity_failure_is_reported():
    # sanity check of the comparison machinery with a deliberately wrong side
    lhs, rhs = identity_sides("t4", 50)
    broken = add(rhs, make_series(ZZ, 50, [(17, 1)]))
    report = compare_sides("broken", "identity", {}, lhs, broken, 50, 0.0)
    assert report.outcome == FAIL
    assert report.counterexamples[0]["exponent"] == 17


@pytest.mark.parametrize("p,p_star,k", [(5, -5, -1), (7, 7, 1), (11, -11, -2), (13, 13, 2)])
def test_p_dissection_instances(p, p_star, k):
    inst = PDissectionInstance.for_prime(p)
    assert (inst.p_star, inst.exceptional_k) == (p_star, k)
    assert inst.residue_violations() == []
    assert verify_p_dissection(p, p * p + 50).passed


def test_p_dissection_residues_for_5():
    inst = PDissectionInstance.for_prime(5)
    residues = {((3 * k * k + k) // 2) % 5 for k in inst.k_range if k != inst.exceptional_k}
    assert inst.tail_exponent == 1 and 1 not in residues


def test_p_dissection_larger_prime():
    assert verify_p_dissection(17, 300).passed


def test_p_dissection_preconditions():
    with pytest.raises(PreconditionError):
        verify_p_dissection(9, 100)
    with pytest.raises(PreconditionError):
        verify_p_dissection(3, 100)
    with pytest.raises(PreconditionError):
        verify_p_dissection(7, 48)
