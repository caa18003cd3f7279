from itertools import product

import pytest

from golombz.finitefield import TABLE_CAP, field_create


def test_gf4_modulus_and_inverse_pair():
    F = field_create(2, 2)
    assert F.modulus == (1, 1, 1)  # x^2 + x + 1
    x = F.x()
    assert F.mul(x, F.add(x, F.one)) == F.one


def test_prime_field_primitive():
    F = field_create(5)
    assert F.primitive == F.element(2)
    assert F.modulus == (0, 1)


def test_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        field_create(4)


def test_rejects_bad_degree():
    with pytest.raises(ValueError):
        field_create(2, 0)


def test_rejects_tables_over_cap():
    with pytest.raises(ValueError):
        field_create(2, 21, tables=True)
    assert 2**21 > TABLE_CAP


def test_large_field_without_tables():
    F = field_create(2, 21, tables=False)
    assert not F.has_tables
    g = F.primitive
    assert F.pow(g, F.order - 1) == F.one
    with pytest.raises(ValueError):
        F.dlog(g)


@pytest.mark.parametrize("p, m", [(2, 1), (2, 3), (3, 2), (2, 4), (5, 2), (7, 1), (13, 1)])
def test_antilog_is_a_permutation(p, m):
    F = field_create(p, m)
    g = F.primitive
    seen = set()
    y = F.one
    for a in range(F.order - 1):
        assert F.dlog(y) == a
        seen.add(y)
        y = F.mul(y, g)
    assert y == F.one
    assert len(seen) == F.order - 1
    assert F.pow(g, F.order - 1) == F.one


def test_dlog_of_zero_rejected():
    F = field_create(3, 2)
    with pytest.raises(ValueError):
        F.dlog(F.zero)


@pytest.mark.parametrize("p, m", [(2, 2), (3, 2), (2, 3), (5, 1)])
def test_field_axioms_exhaustive(p, m):
    F = field_create(p, m)
    els = list(F.elements())
    for a, b in product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a, b, c in product(els, repeat=3):
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)


def test_table_and_plain_multiplication_agree():
    with_tables = field_create(3, 3)
    plain = field_create(3, 3, tables=False)
    for a in with_tables.elements():
        for b in with_tables.elements():
            assert with_tables.mul(a, b) == plain.mul(a, b)


def test_multiplicative_identity_and_inverse():
    F = field_create(2, 4)
    x = F.x()
    assert F.mul(x, F.one) == x
    for a in F.elements():
        if not a.is_zero():
            assert F.mul(a, F.inverse(a)) == F.one


def test_subfield():
    F = field_create(2, 4)
    sub = F.subfield(2)
    assert len(sub) == 4
    for a in sub:
        for b in sub:
            assert F.mul(a, b) in sub
            assert F.add(a, b) in sub
    with pytest.raises(ValueError):
        F.subfield(3)


def test_element_from_int_round_trips():
    F = field_create(3, 2)
    for i in range(F.order):
        assert F.element(i).to_int(3) == i
