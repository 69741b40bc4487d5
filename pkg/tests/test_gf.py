import pytest
from hypothesis import given, strategies as st

from ccode3d.gf import (
    FieldElement,
    FieldMismatchError,
    FieldSpec,
    MissingRootOfUnityError,
    element_order,
    find_root,
)

PRIMES = [5, 7, 11, 13]

fields = st.sampled_from([FieldSpec(p) for p in PRIMES])


def test_field_spec_rejects_nonprime():
    with pytest.raises(ValueError):
        FieldSpec(9)
    with pytest.raises(ValueError):
        FieldSpec(2)
    with pytest.raises(ValueError):
        FieldSpec(1 << 17)


def test_arith_examples():
    F5 = FieldSpec(5)
    assert (F5.element(2) + F5.element(4)).value == 1
    assert (F5.element(0) - F5.element(1)).value == 4
    F7 = FieldSpec(7)
    assert (F7.element(3) * F7.element(5)).value == 1


def test_mul_against_exhaustive_table():
    # independent oracle: the full multiplication table of F_7
    F7 = FieldSpec(7)
    for a in range(7):
        for b in range(7):
            assert (F7.element(a) * F7.element(b)).value == (a * b) % 7


def test_mismatched_fields_rejected():
    with pytest.raises(FieldMismatchError):
        FieldSpec(5).element(1) + FieldSpec(7).element(1)


def test_inverse_examples():
    assert FieldSpec(5).element(1).inverse().value == 1
    # oracle: exhaustive search for the inverse
    assert next(x for x in range(1, 7) if (3 * x) % 7 == 1) == 5
    assert FieldSpec(7).element(3).inverse().value == 5
    assert next(x for x in range(1, 5) if (2 * x) % 5 == 1) == 3
    assert FieldSpec(5).element(2).inverse().value == 3
    with pytest.raises(ZeroDivisionError):
        FieldSpec(5).element(0).inverse()


def test_order_examples():
    assert element_order(FieldSpec(5).element(4)) == 2
    assert element_order(FieldSpec(7).element(2)) == 3
    assert element_order(FieldSpec(11).element(1)) == 1
    with pytest.raises(ValueError):
        element_order(FieldSpec(5).element(0))


@given(fields, st.integers(min_value=1, max_value=1 << 14))
def test_order_properties(field, raw):
    a = field.element(raw)
    if a.value == 0:
        return
    t = element_order(a)
    assert (field.p - 1) % t == 0
    assert field.pow(a.value, t) == 1
    # minimality against a brute scan
    for smaller in range(1, t):
        assert field.pow(a.value, smaller) != 1


def test_find_root_golden():
    assert find_root(2, FieldSpec(5).element(-1)).value == 2
    assert find_root(3, FieldSpec(7).element(-1)).value == 3
    assert find_root(2, FieldSpec(7).element(2)).value == 3
    with pytest.raises(MissingRootOfUnityError) as err:
        find_root(3, FieldSpec(5).element(1))
    assert (err.value.r, err.value.k, err.value.p) == (1, 3, 5)


def test_find_root_properties():
    for p in PRIMES:
        field = FieldSpec(p)
        for gamma in range(1, p):
            g = field.element(gamma)
            r = element_order(g)
            for k in range(1, 7):
                if (p - 1) % (r * k) != 0:
                    with pytest.raises(MissingRootOfUnityError):
                        find_root(k, g)
                    continue
                w = find_root(k, g)
                assert field.pow(w.value, k) == gamma
                assert element_order(w) == r * k
                # smallest valid residue, by exhaustive rescan
                for cand in range(1, w.value):
                    ok = (
                        field.pow(cand, k) == gamma
                        and element_order(field.element(cand)) == r * k
                    )
                    assert not ok


@given(fields, st.integers(), st.integers())
def test_field_ops_match_int_arithmetic(field, x, y):
    a, b = field.element(x), field.element(y)
    assert (a + b).value == (x + y) % field.p
    assert (a - b).value == (x - y) % field.p
    assert (a * b).value == (x * y) % field.p
    assert (-a).value == (-x) % field.p
    if b.value != 0:
        assert ((a / b) * b).value == a.value
