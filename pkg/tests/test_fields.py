import random

import pytest

from linsets import fields
from linsets.fields import (EnumerationBudgetError, FieldTower, FiniteField,
                            LevelMismatchError, lex_min_irreducible,
                            make_tower, poly_is_irreducible)


@pytest.fixture(scope="module")
def tower():
    return make_tower(3, 1, 2)


def test_prime_field_arithmetic():
    F = FiniteField(5)
    assert F.add(3, 4) == 2
    assert F.neg(2) == 3
    assert F.mul(3, 4) == 2
    assert F.inv(4) == 4
    assert F.pow(2, 3) == 3


def test_nonprime_characteristic_rejected():
    with pytest.raises(ValueError):
        FiniteField(6)


def test_field_axioms_random(tower):
    rng = random.Random(7)
    for F in (tower.fq, tower.fqt, tower.fqn):
        for _ in range(150):
            a, b, c = (rng.randrange(F.order) for _ in range(3))
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a)
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            assert F.add(a, F.neg(a)) == 0
            if a:
                assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, 1) == a


def test_subfield_arithmetic_is_compatible(tower):
    big, small = tower.fqn, tower.fqt
    for a in range(small.order):
        for b in range(small.order):
            assert small.mul(a, b) == big.mul(a, b)
            assert small.add(a, b) == big.add(a, b)


def test_coords_are_radix_digits(tower):
    F, sub = tower.fqn, tower.fqt
    for a in (0, 1, 17, F.order - 1):
        digits = F.coords(a, sub)
        assert F.from_coords(digits, sub) == a
        assert all(0 <= d < sub.order for d in digits)
        assert len(digits) == F.degree_over(sub)


def test_in_subfield_is_index_threshold(tower):
    F, sub = tower.fqn, tower.fq
    for a in range(F.order):
        # membership in the subfield means all higher digits vanish
        expected = all(d == 0 for d in F.coords(a, sub)[1:])
        assert F.in_subfield(a, sub) == expected == (a < sub.order)


def test_frobenius_fixes_subfield(tower):
    F, sub = tower.fqn, tower.fqt
    for a in range(sub.order):
        assert F.pow(a, sub.order) == a


def test_trace_and_norm(tower):
    F, sub = tower.fqt, tower.fq
    rng = random.Random(3)
    for _ in range(50):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        ta = F.trace(a, sub)
        assert ta < sub.order
        assert F.trace(F.add(a, b), sub) == sub.add(ta, F.trace(b, sub))
        na = F.norm(a, sub)
        assert na < sub.order
        assert F.norm(F.mul(a, b), sub) == sub.mul(na, F.norm(b, sub))
    # trace and norm are onto for an extension of prime fields
    assert {F.trace(a, sub) for a in range(F.order)} == set(range(sub.order))
    assert {F.norm(a, sub) for a in range(1, F.order)} \
        == set(range(1, sub.order))


def test_lex_min_irreducible_known_values():
    F2 = FiniteField(2)
    assert lex_min_irreducible(F2, 2) == (1, 1, 1)
    F3 = FiniteField(3)
    assert lex_min_irreducible(F3, 2) == (1, 0, 1)
    assert poly_is_irreducible(F3, (1, 0, 1))
    assert not poly_is_irreducible(F3, (2, 0, 1))


def test_tower_determinism_and_serialization():
    a = make_tower(2, 1, 3)
    b = make_tower(2, 1, 3)
    assert a.serialize() == b.serialize()
    c = FieldTower.deserialize(a.serialize())
    assert c.serialize() == a.serialize()
    assert c.fqn.order == a.fqn.order


def test_xi_squared_relation(tower):
    F = tower.fqn
    lhs = F.mul(tower.xi, tower.xi)
    rhs = F.add(F.mul(tower.A, tower.xi), tower.B)
    assert lhs == rhs


def test_element_operations(tower):
    x = tower.element("qn", 5)
    y = tower.element("qn", 11)
    assert (x + y).index == tower.fqn.add(5, 11)
    assert (x * y).index == tower.fqn.mul(5, 11)
    assert (-x + x).index == 0
    assert (x * x.inv()).index == 1
    assert (x / x).index == 1
    assert x.frobenius().index == tower.fqn.pow(5, tower.q)
    with pytest.raises(LevelMismatchError):
        _ = x + tower.element("qt", 1)


def test_embed_and_project(tower):
    x = tower.element("qt", 4)
    up = fields.embed(x, "qn")
    assert up.index == 4 and up.level == "qn"
    back = fields.project(up, "qt")
    assert back.index == 4
    outside = tower.element("qn", tower.fqt.order + 1)
    assert fields.project(outside, "qt") is None
    with pytest.raises(LevelMismatchError):
        fields.embed(up, "q")


def test_relative_trace_norm_elements(tower):
    x = tower.element("qt", 7)
    assert fields.rel_trace(x).level == "q"
    assert fields.rel_norm(x).level == "q"
    z = tower.element("qn", 37)
    assert fields.rel_trace_top(z).level == "qt"
    assert fields.rel_norm_top(z).level == "qt"
    with pytest.raises(LevelMismatchError):
        fields.rel_trace(z)


def test_enumeration_budget():
    F = FiniteField(2)
    big = FiniteField.extension(F, lex_min_irreducible(F, 8))
    with pytest.raises(EnumerationBudgetError):
        list(big.elements(bound=100))


def test_basis_over_is_positional(tower):
    F, sub = tower.fqn, tower.fq
    basis = F.basis_over(sub)
    assert basis == [sub.order ** j for j in range(F.degree_over(sub))]
    # every element is the coordinate combination of the basis
    a = 29 % F.order
    digits = F.coords(a, sub)
    acc = 0
    for d, e in zip(digits, basis):
        acc = F.add(acc, F.mul(d, e))
    assert acc == a
