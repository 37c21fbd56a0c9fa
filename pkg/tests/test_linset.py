import random

import pytest

from linsets import families, linpoly, linset, subspaces
from linsets.fields import make_tower


@pytest.fixture(scope="module")
def tower():
    return make_tower(2, 1, 2)


def rand_subspace(rng, F, B, dim):
    return subspaces.span(F, B, [rng.randrange(1, F.order)
                                 for _ in range(dim)])


def test_normalize_point(tower):
    F = tower.fqn
    assert linset.normalize_point(F, 0, 5) == (0, 1)
    v0, v1 = 3, 7
    P = linset.normalize_point(F, v0, v1)
    assert P[0] == 1
    lam = 9
    assert linset.normalize_point(F, F.mul(lam, v0), F.mul(lam, v1)) == P
    with pytest.raises(ValueError):
        linset.normalize_point(F, 0, 0)


def test_from_ST_rank(tower):
    F, B = tower.fqn, tower.fq
    S = rand_subspace(random.Random(1), F, B, 2)
    T = rand_subspace(random.Random(2), F, B, 2)
    L = linset.LinearSet.from_ST(S, T)
    assert L.rank == S.dim + T.dim
    assert L.S is S and L.T is T


def test_point_weights_against_oracle(tower):
    rng = random.Random(31)
    F, B = tower.fqn, tower.fq
    for _ in range(10):
        S = rand_subspace(rng, F, B, 2)
        T = rand_subspace(rng, F, B, 2)
        L = linset.LinearSet.from_ST(S, T)
        weights = linset.point_weights(L)
        for P, w in weights.items():
            assert linset.weight_oracle(L, P) == w
        # absent points have weight zero
        alpha = next(a for a in range(1, F.order)
                     if (1, a) not in weights)
        assert linset.weight_oracle(L, (1, alpha)) == 0


def test_axis_weights(tower):
    F, B = tower.fqn, tower.fq
    S = subspaces.span(F, B, [1, 2])
    T = subspaces.span(F, B, [1, 5])
    L = linset.LinearSet.from_ST(S, T)
    assert linset.weight_oracle(L, (1, 0)) == S.dim
    assert linset.weight_oracle(L, (0, 1)) == T.dim


def test_weight_via_alpha(tower):
    rng = random.Random(32)
    F, B = tower.fqn, tower.fq
    S = rand_subspace(rng, F, B, 2)
    T = rand_subspace(rng, F, B, 2)
    L = linset.LinearSet.from_ST(S, T)
    weights = linset.point_weights(L)
    for alpha in range(1, F.order):
        assert linset.weight_via_alpha(S, T, alpha) \
            == weights.get((1, alpha), 0)


def test_enumerator_identity(tower):
    rng = random.Random(33)
    F, B = tower.fqn, tower.fq
    for _ in range(10):
        S = rand_subspace(rng, F, B, rng.randrange(1, 4))
        T = rand_subspace(rng, F, B, rng.randrange(1, 4))
        L = linset.LinearSet.from_ST(S, T)
        enum = linset.weight_enumerator(L)
        assert enum.identity_holds(B.order, L.rank)


def test_enumerator_string():
    enum = linset.WeightEnumerator({2: 2, 1: 9})
    assert enum.as_poly_string() == "2X^2 + 9X"
    assert enum.size() == 11
    assert list(enum.records()) == [(1, 9), (2, 2)]


def test_layer_sets_match_oracle(tower):
    rng = random.Random(34)
    F, B = tower.fqn, tower.fq
    for _ in range(15):
        S = rand_subspace(rng, F, B, rng.randrange(2, 4))
        T = rand_subspace(rng, F, B, rng.randrange(2, 4))
        if not (S.dim and T.dim):
            continue
        L = linset.LinearSet.from_ST(S, T)
        oracle = linset.point_weights(L)
        excluded = (1, 0) if T.dim <= S.dim else (0, 1)
        for i in range(1, min(S.dim, T.dim) + 1):
            expect = {P for P, w in oracle.items()
                      if w >= i and P != excluded}
            assert linset.points_weight_at_least(S, T, i) == expect
            exact = {P for P, w in oracle.items()
                     if w == i and P != excluded}
            assert linset.points_weight_exactly(S, T, i) == exact


def test_layer_index_out_of_range(tower):
    F, B = tower.fqn, tower.fq
    S = subspaces.span(F, B, [1, 2])
    T = subspaces.span(F, B, [1, 5])
    with pytest.raises(ValueError):
        linset.points_weight_at_least(S, T, 3)


def test_two_heavy_points_check(tower):
    rng = random.Random(35)
    F, B = tower.fqn, tower.fq
    seen = set()
    for _ in range(20):
        S = rand_subspace(rng, F, B, 2)
        T = rand_subspace(rng, F, B, 2)
        if S.dim < 2 or T.dim < 2:
            continue
        L = linset.LinearSet.from_ST(S, T)
        counts = linset.weight_enumerator(L).counts
        expected = sum(c for w, c in counts.items() if w >= 2) == 2
        assert linset.two_heavy_points_check(S, T) == expected
        seen.add(expected)
    assert seen == {True, False}  # both outcomes exercised


def test_weight_via_kernel_all_points(tower):
    rng = random.Random(36)
    fqt, fqn, fq = tower.fqt, tower.fqn, tower.fq
    for k in range(8):
        f = linpoly.LinPoly(fqt, fq, (rng.randrange(4), rng.randrange(4)))
        g = linpoly.LinPoly(fqt, fq, (rng.randrange(4), rng.randrange(4)))
        eta = tower.xi if k % 2 else rng.randrange(fqt.order, fqn.order)
        S = families.make_S_f(fqn, fqt, fq, f)
        T = families.make_S_f(fqn, fqt, fq, g, xi=eta)
        L = linset.LinearSet.from_ST(S, T)
        oracle = linset.point_weights(L)
        for alpha in range(1, fqn.order):
            assert linset.weight_via_kernel(tower, f, g, eta, alpha) \
                == oracle.get((1, alpha), 0)


def test_weight_via_kernel_rejects_middle_eta(tower):
    f = linpoly.identity(tower.fqt, tower.fq)
    with pytest.raises(ValueError):
        linset.weight_via_kernel(tower, f, f, 2, 1)


def test_rank_weight_dual_path(tower):
    rng = random.Random(37)
    F, B = tower.fqn, tower.fq
    S = rand_subspace(rng, F, B, 2)
    T = rand_subspace(rng, F, B, 2)
    L = linset.LinearSet.from_ST(S, T)
    assert linset.rank_weight(L, 1, 0) == S.dim
    assert linset.rank_weight(L, 0, 1) == T.dim
    for x1 in range(1, F.order):
        r = linset.rank_weight(L, 1, x1)
        assert 0 < r <= L.rank
    with pytest.raises(ValueError):
        linset.rank_weight(L, 0, 0)
