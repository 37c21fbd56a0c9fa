import random

import pytest

from linsets import families, linpoly, linset, subspaces
from linsets.fields import FiniteField, make_tower


def test_make_S_f_is_graph():
    tower = make_tower(2, 1, 2)
    fqt, fqn, fq = tower.fqt, tower.fqn, tower.fq
    f = linpoly.monomial(fqt, fq, 1)
    S = families.make_S_f(fqn, fqt, fq, f)
    assert S.dim == 2
    expect = {fqn.add(u, fqn.mul(tower.xi, f.eval(u)))
              for u in range(fqt.order)}
    assert set(S.elements()) == expect


def test_region_classification():
    tower = make_tower(3, 1, 2)
    assert families.region_of(tower, 2) == "unit"
    assert families.region_of(tower, 5) == "mid"
    assert families.region_of(tower, 50) == "outer"
    with pytest.raises(ValueError):
        families.region_of(tower, 0)


def test_trace_trace_requires_odd_q():
    with pytest.raises(families.HypothesisError):
        families.trace_trace(make_tower(2, 1, 2))


def test_trace_trace_small():
    def pred(tw):
        return tw.fqt.trace(tw.A, tw.fq) != tw.fq.neg(tw.fq.int_embed(2))

    tower = families.find_tower(3, 1, 2, pred)
    fam = families.trace_trace(tower)
    rep = families.verify_family(fam)
    assert rep.ok
    assert rep.identity_holds()
    # t = 2: the middle region must be empty of set points (weight t-2 = 0)
    assert set(rep.realized["mid"]) <= {0}


def test_monomial_hypotheses():
    tower = make_tower(2, 1, 2)
    with pytest.raises(families.HypothesisError):
        families.monomial_s(tower, 2)  # gcd(2, 2) != 1


def test_lp_requires_t_at_least_5():
    with pytest.raises(families.HypothesisError):
        families.lp_binomial(make_tower(2, 1, 3), 1)


def test_find_lp_delta_q2_fallback():
    tower = make_tower(2, 1, 5)
    delta = families.find_lp_delta(tower)
    assert delta >= tower.fq.order  # outside the base field


def test_f_trace_formula_region():
    tower = make_tower(3, 1, 2)
    f = linpoly.monomial(tower.fqt, tower.fq, 1)
    fam = families.f_trace(tower, f)
    rep = families.verify_family(fam)
    assert rep.ok and rep.identity_holds()
    assert fam.params["is_xq"]


def test_f_f_zero_polynomial():
    tower = make_tower(2, 1, 2)
    fam = families.f_f(tower, linpoly.zero(tower.fqt, tower.fq))
    rep = families.verify_family(fam)
    assert rep.ok
    # S = T = the middle field: the two axis points plus one point per
    # middle-subline direction, all of weight t
    assert dict(rep.enumerator.counts) == {2: 5}


def test_find_tower_is_deterministic():
    def pred(tw):
        return tw.fqt.norm(tw.B, tw.fq) != tw.fq.neg(1)

    a = families.find_tower(3, 1, 3, pred)
    b = families.find_tower(3, 1, 3, pred)
    assert a.serialize() == b.serialize()
    assert pred(a)


def test_find_disjoint_scalar_and_avoiding_T():
    tower = make_tower(2, 1, 3)
    F, B = tower.fqn, tower.fq
    S = subspaces.span(F, B, [1, 2, 4])
    xi = families.find_disjoint_scalar(S)
    assert subspaces.intersect(S, subspaces.scalar_coset(xi, S)).dim == 0
    T = families.build_avoiding_T(S, 3)
    assert T.dim == 3 and T.contains(1) and T.contains(xi)
    # the resulting product has no weight-r points beyond the axis ones
    pts = linset.points_weight_at_least(S, T, 3)
    assert pts == {(0, 1)}


def test_check_relation_fg_matches_enumerator():
    rng = random.Random(41)
    tower = make_tower(2, 1, 2)
    fqt, fqn, fq = tower.fqt, tower.fqn, tower.fq
    outcomes = set()
    for _ in range(12):
        f = linpoly.LinPoly(fqt, fq, (rng.randrange(4), rng.randrange(4)))
        g = linpoly.LinPoly(fqt, fq, (rng.randrange(4), rng.randrange(4)))
        if f.is_zero() or g.is_zero():
            continue
        eta = rng.randrange(fqt.order, fqn.order)
        rel = families.check_relation_fg(tower, f, g, eta)
        L = families.relation_set(tower, f, g, eta)
        counts = linset.weight_enumerator(L).counts
        assert rel == (sum(c for w, c in counts.items() if w >= 2) == 2)
        outcomes.add(rel)
    assert outcomes == {True, False}


def test_psi_product_preconditions():
    tower = make_tower(2, 1, 2)
    fqt, fq = tower.fqt, tower.fq
    with pytest.raises(families.HypothesisError):
        families.psi_product(tower, linpoly.zero(fqt, fq))
    with pytest.raises(families.HypothesisError):
        families.psi_product(tower, linpoly.trace_poly(fqt, fq))


def test_psi_product_prediction():
    tower = make_tower(2, 1, 2)
    f = linpoly.monomial(tower.fqt, tower.fq, 1)
    L, predicted = families.psi_product(tower, f)
    assert linset.weight_enumerator(L) == predicted
    assert dict(predicted.counts) == {2: 2, 1: 9}


def test_psi_step_on_non_graph():
    # one extra step applied to a set that is not the graph of any map
    fq = FiniteField(2)
    L, W = families.psi_iterate(fq, 3)
    assert linset.weight_enumerator(L) == W


def test_psi_iterate_sizes():
    fq = FiniteField(2)
    for m in (1, 2, 3):
        L, W = families.psi_iterate(fq, m)
        assert W.size() == families.psi_iterate_size(2, m, 3)
    with pytest.raises(ValueError):
        families.psi_iterate(fq, 0)


def test_verify_family_detects_mismatch():
    tower = make_tower(3, 1, 2)
    f = linpoly.monomial(tower.fqt, tower.fq, 1)
    fam = families.monomial_s(tower, 1)
    # corrupt the prediction: claim the middle region carries weight t
    bad = families.Family(fam.kind, tower, f, f, fam.L,
                          families.WeightPrediction(
                              unit=(families.EXACT, 2),
                              mid=(families.EXACT, 2),
                              outer=(families.AT_MOST, 2)))
    rep = families.verify_family(bad)
    assert not rep.ok and rep.failures
