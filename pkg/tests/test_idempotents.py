import pytest

from ccode3d.gf import FieldSpec, element_order, find_root
from ccode3d.idempotents import (
    build_constacyclic_idempotents,
    build_full_idempotents,
    idempotent_eigenfactor,
    identity_report,
    reciprocal_index,
    reciprocal_index_for_constant,
)
from ccode3d.poly import Poly

F5 = FieldSpec(5)
F7 = FieldSpec(7)


def lagrange_family_oracle(field, points):
    """Independent interpolation oracle: product/quotient form, one inversion
    per member, no shared code with the library constructors."""
    members = []
    for t, pt in enumerate(points):
        num = Poly.one(field)
        den = 1
        for u, other in enumerate(points):
            if u == t:
                continue
            num = num * Poly.from_coeffs(field, [-other, 1])
            den = (den * (pt - other)) % field.p
        members.append(num.scale(pow(den, -1, field.p)))
    return members


def valid_triples(qs=(5, 7, 11, 13), k_max=6):
    for q in qs:
        field = FieldSpec(q)
        for gamma in range(1, q):
            r = element_order(field.element(gamma))
            for k in range(1, k_max + 1):
                if (q - 1) % (r * k) == 0:
                    yield field, k, gamma, r


def test_constacyclic_golden_values():
    fam = build_constacyclic_idempotents(2, F5.element(-1))
    assert [list(m.coeffs) for m in fam.members] == [[3, 4], [3, 1]]
    fam7 = build_constacyclic_idempotents(3, F7.element(-1))
    assert [list(m.coeffs) for m in fam7.members] == [[5, 4, 6], [5, 2, 5], [5, 1, 3]]
    triv = build_constacyclic_idempotents(1, F5.element(2))
    assert [list(m.coeffs) for m in triv.members] == [[1]]


def test_full_family_golden_values():
    fam = build_full_idempotents(1, F5.element(1))
    assert [list(m.coeffs) for m in fam.members] == [[1]]
    fam2 = build_full_idempotents(2, F5.element(1))
    assert [list(m.coeffs) for m in fam2.members] == [[3, 3], [3, 2]]
    # evaluation pattern at the fixed root: 1 on own index, 0 elsewhere
    fam3 = build_full_idempotents(2, F5.element(-1))
    assert fam3.omega == 2
    for t, m in enumerate(fam3.members):
        for u in range(fam3.size):
            assert m.evaluate(pow(2, u, 5)) == (1 if t == u else 0)


def test_families_match_interpolation_oracle():
    for field, k, gamma, r in valid_triples():
        omega = find_root(k, field.element(gamma)).value
        con = build_constacyclic_idempotents(k, field.element(gamma))
        points = [field.pow(omega, 1 + t * r) for t in range(k)]
        assert list(con.members) == lagrange_family_oracle(field, points)
        full = build_full_idempotents(k, field.element(gamma))
        full_points = [field.pow(omega, t) for t in range(r * k)]
        assert list(full.members) == lagrange_family_oracle(field, full_points)


def test_eigenfactor_examples():
    fam = build_constacyclic_idempotents(2, F5.element(-1))
    assert idempotent_eigenfactor(fam, 1, 0).value == 1
    assert idempotent_eigenfactor(fam, 0, 1).value == 2
    fam7 = build_constacyclic_idempotents(3, F7.element(-1))
    assert idempotent_eigenfactor(fam7, 1, 2).value == pow(pow(3, 3, 7), 2, 7) == 1
    with pytest.raises(IndexError):
        idempotent_eigenfactor(fam, 5, 1)


def test_reciprocal_index_examples():
    assert reciprocal_index(2, 0, constant_is_one=False) == 1
    assert reciprocal_index(3, 2, constant_is_one=True) == 2
    assert reciprocal_index(3, 0, constant_is_one=True) == 1
    assert reciprocal_index_for_constant(F5, -1, 2, 0) == 1
    with pytest.raises(ValueError):
        reciprocal_index_for_constant(F5, 2, 2, 0)
    with pytest.raises(IndexError):
        reciprocal_index(3, 3, constant_is_one=True)


def test_identity_report_all_green():
    for field, k, gamma, _ in valid_triples(qs=(5, 7), k_max=4):
        for fam in (build_constacyclic_idempotents(k, field.element(gamma)),
                    build_full_idempotents(k, field.element(gamma))):
            assert all(identity_report(fam).values())


def test_completeness_and_orthogonality_small():
    fam = build_constacyclic_idempotents(3, F7.element(-1))
    modulus = fam.modulus()
    total = Poly.zero(F7)
    for m in fam.members:
        total = total + m
    assert total % modulus == Poly.one(F7)
    for t, a in enumerate(fam.members):
        for u, b in enumerate(fam.members):
            expected = a if t == u else Poly.zero(F7)
            assert (a * b) % modulus == expected


def test_shift_acts_as_eigenvalue():
    for field, k, gamma, _ in valid_triples(qs=(5, 7), k_max=4):
        fam = build_constacyclic_idempotents(k, field.element(gamma))
        z = Poly.x_power(field, 1)
        for t, m in enumerate(fam.members):
            lhs = (z * m) % fam.modulus()
            assert lhs == m.scale(fam.eigenvalue(t))


def test_quotient_lift_proportionality():
    # the constacyclic member times the complementary cyclotomic factor is a
    # scalar multiple of the matching full-cycle member; the scalar is the
    # factor's value at the shared root
    for field, k, gamma, r in valid_triples(qs=(5, 7, 11), k_max=4):
        con = build_constacyclic_idempotents(k, field.element(gamma))
        full = build_full_idempotents(k, field.element(gamma))
        rk = r * k
        big = Poly.binomial(field, rk, 1)
        small = Poly.binomial(field, k, gamma)
        cofactor, rem = divmod(big, small)
        assert rem.is_zero()
        for t in range(k):
            lifted = (con.members[t] * cofactor) % big
            scalar = cofactor.evaluate(con.eigenvalue(t))
            assert scalar != 0
            target_idx = (1 + t * r) % rk
            assert lifted == full.members[target_idx].scale(scalar)


def test_reciprocal_proportionality_map():
    # coefficient reversal permutes the family by the reciprocal index map,
    # up to a nonzero scalar fixed by evaluating at the partner's root
    for field, k, gamma, _ in valid_triples(qs=(5, 7, 13), k_max=6):
        if gamma not in (1, field.p - 1):
            continue
        fam = build_constacyclic_idempotents(k, field.element(gamma))
        for t, m in enumerate(fam.members):
            idx = reciprocal_index(k, t, constant_is_one=(gamma == 1))
            rec = m.reciprocal()
            scalar = rec.evaluate(fam.eigenvalue(idx))
            assert scalar != 0
            assert rec == fam.members[idx].scale(scalar)


def test_cyclic_case_reindexes_full_family():
    # when the constant is 1 the two families coincide up to an index shift
    for field, k in [(F5, 2), (F5, 4), (F7, 2), (F7, 3), (F7, 6)]:
        con = build_constacyclic_idempotents(k, field.element(1))
        full = build_full_idempotents(k, field.element(1))
        for t in range(k - 1):
            assert con.members[t] == full.members[t + 1]
        assert con.members[k - 1] == full.members[0]
