import random

import pytest

from linsets import subspaces
from linsets.fields import (EnumerationBudgetError, LevelMismatchError,
                            make_tower)


@pytest.fixture(scope="module")
def tower():
    return make_tower(2, 1, 3)


def test_span_is_canonical(tower):
    F, B = tower.fqn, tower.fq
    a = subspaces.span(F, B, [3, 5])
    b = subspaces.span(F, B, [5, F.add(3, 5), 3])
    assert a.rows == b.rows
    assert a == b


def test_dim_and_membership(tower):
    F, B = tower.fqn, tower.fq
    S = subspaces.span(F, B, [3, 5, 9])
    assert S.dim <= 3
    elems = set(S.elements())
    assert len(elems) == B.order ** S.dim
    for v in elems:
        assert S.contains(v)
    assert 0 in elems
    outside = next(x for x in range(F.order) if x not in elems)
    assert not S.contains(outside)


def test_pair_subspaces(tower):
    F, B = tower.fqn, tower.fq
    U = subspaces.span(F, B, [(1, 3), (2, 7)], pair=True)
    assert U.pair and U.ncoords == 2 * F.degree_over(B)
    assert U.contains((1, 3))
    both = {(a, b) for a, b in U.elements()}
    assert len(both) == B.order ** U.dim


def test_whole_subfield(tower):
    F = tower.fqn
    W = subspaces.whole_subfield(F, tower.fq, tower.fqt)
    assert W.dim == 3
    assert set(W.elements()) == set(range(tower.fqt.order))


def test_intersect_and_sum_dims(tower):
    F, B = tower.fqn, tower.fq
    rng = random.Random(21)
    for _ in range(30):
        S = subspaces.span(F, B, [rng.randrange(1, F.order)
                                  for _ in range(3)])
        T = subspaces.span(F, B, [rng.randrange(1, F.order)
                                  for _ in range(3)])
        inter = subspaces.intersect(S, T)
        total = subspaces.ssum(S, T)
        assert inter.dim + total.dim == S.dim + T.dim
        for v in inter.elements():
            assert S.contains(v) and T.contains(v)


def test_scalar_coset(tower):
    F, B = tower.fqn, tower.fq
    S = subspaces.span(F, B, [3, 12])
    a = 7
    aS = subspaces.scalar_coset(a, S)
    assert aS.dim == S.dim
    assert set(aS.elements()) == {F.mul(a, v) for v in S.elements()}
    with pytest.raises(ValueError):
        subspaces.scalar_coset(0, S)


def test_gaussian_binomial_values():
    assert subspaces.gaussian_binomial(4, 2, 2) == 35
    assert subspaces.gaussian_binomial(3, 1, 3) == 13
    assert subspaces.gaussian_binomial(5, 0, 2) == 1
    assert subspaces.gaussian_binomial(2, 3, 2) == 0


def test_enumerate_subspaces_counts(tower):
    F, B = tower.fqn, tower.fq
    T = subspaces.span(F, B, [1, 2, 4])
    assert T.dim == 3
    for i in range(T.dim + 1):
        subs = list(subspaces.enumerate_subspaces(T, i))
        assert len(subs) == subspaces.gaussian_binomial(T.dim, i, B.order)
        assert len({W.rows for W in subs}) == len(subs)
        for W in subs:
            assert W.dim == i
            for v in W.elements():
                assert T.contains(v)


def test_enumerate_subspaces_budget(tower):
    F, B = tower.fqn, tower.fq
    T = subspaces.span(F, B, [1, 2, 4, 8])
    with pytest.raises(EnumerationBudgetError):
        list(subspaces.enumerate_subspaces(T, 2, budget=3))


def test_mate_check(tower):
    other = make_tower(3, 1, 2)
    S = subspaces.span(tower.fqn, tower.fq, [1])
    T = subspaces.span(other.fqn, other.fq, [1])
    with pytest.raises(LevelMismatchError):
        subspaces.intersect(S, T)
