"""Linear sets on PG(1,q^n): point weights, enumerators, layer sets.

Points are normalized homogeneous pairs: (0, 1) or (1, alpha) with alpha a
top-field element index.  A linear set is defined by a base-field subspace
U of L^2; when U = S x T the two factors are kept so the product-specific
criteria apply.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dfield

from . import gflinalg, linpoly, subspaces
from .fields import EnumerationBudgetError, ENUMERATION_BOUND, LevelMismatchError

POINT_ZERO_ONE = (0, 1)


def normalize_point(F, v0, v1):
    """Canonical representative of the projective point <(v0, v1)>."""
    if v0 == 0:
        if v1 == 0:
            raise ValueError("zero vector has no projective point")
        return POINT_ZERO_ONE
    return (1, F.mul(v1, F.inv(v0)))


def swap_point(F, P):
    """The image of P under swapping the two projective coordinates."""
    v0, v1 = P
    return normalize_point(F, v1, v0)


@dataclass(frozen=True)
class LinearSet:
    field: object                 # top chain field L
    base: object                  # base field of linearity
    U: subspaces.FqSubspace       # pair subspace of L^2
    S: object = None              # first factor when U = S x T
    T: object = None

    @property
    def rank(self):
        return self.U.dim

    @classmethod
    def from_subspace(cls, U):
        return cls(U.field, U.base, U)

    @classmethod
    def from_ST(cls, S, T):
        S._check_mate(T)
        if S.pair:
            raise LevelMismatchError("factors must be subspaces of the field")
        m = S.field.degree_over(S.base)
        rows = [tuple(r) + (0,) * m for r in S.rows]
        rows += [(0,) * m + tuple(r) for r in T.rows]
        U = subspaces.from_rows(S.field, S.base, rows, pair=True)
        return cls(S.field, S.base, U, S=S, T=T)


@dataclass
class WeightEnumerator:
    """Map w -> number of points of weight exactly w (w >= 1)."""

    counts: dict = dfield(default_factory=dict)

    def size(self):
        return sum(self.counts.values())

    def identity_holds(self, q, rank):
        """sum_w A_w (q^w - 1) == q^rank - 1."""
        lhs = sum(c * (q ** w - 1) for w, c in self.counts.items())
        return lhs == q ** rank - 1

    def __eq__(self, other):
        return dict(self.counts) == dict(other.counts)

    def as_poly_string(self):
        if not self.counts:
            return "0"
        parts = []
        for w in sorted(self.counts, reverse=True):
            c = self.counts[w]
            term = "X" if w == 1 else "X^%d" % w
            parts.append("%d%s" % (c, term) if c != 1 else term)
        return " + ".join(parts)

    def records(self):
        for w in sorted(self.counts):
            yield w, self.counts[w]


def point_weights(L, budget=ENUMERATION_BOUND):
    """Exact map point -> weight by one scan over the nonzero vectors of U.

    A point of weight w is hit by exactly q^w - 1 nonzero vectors."""
    B = L.base
    q = B.order
    if q ** L.rank > budget:
        raise EnumerationBudgetError(
            "scanning %d vectors exceeds the budget %d" % (q ** L.rank, budget))
    F = L.field
    counts = {}
    for row in L.U.vectors():
        if not any(row):
            continue
        v0, v1 = L.U._from_row(row)
        P = normalize_point(F, v0, v1)
        counts[P] = counts.get(P, 0) + 1
    weights = {}
    for P, c in counts.items():
        w, pw = 0, 1
        while pw < c + 1:
            pw *= q
            w += 1
        assert pw == c + 1, "point multiplicity %d is not q^w - 1" % c
        weights[P] = w
    return weights


def weight_oracle(L, P):
    """Weight of P as dim{lambda : lambda*v in U}, by exact linear algebra."""
    F, B = L.field, L.base
    v0, v1 = (0, 1) if P == POINT_ZERO_ONE else P
    pivots = [subspaces._pivot(r) for r in L.U.rows]
    residuals = []
    for b in F.basis_over(B):
        row = F.coords(F.mul(b, v0), B) + F.coords(F.mul(b, v1), B)
        residuals.append(gflinalg.reduce_mod(L.U.rows, pivots, row, B))
    m = F.degree_over(B)
    return m - gflinalg.rank(residuals, B)


def weight_enumerator(L, budget=ENUMERATION_BOUND):
    counts = {}
    for w in point_weights(L, budget).values():
        counts[w] = counts.get(w, 0) + 1
    return WeightEnumerator(counts)


def weight_via_alpha(S, T, alpha):
    """dim(S ∩ alpha^{-1} T); the weight of <(1, alpha)> in L_{S x T}."""
    if alpha == 0:
        raise ValueError("use dim(S) directly for the point (1, 0)")
    F = S.field
    return subspaces.intersect(
        S, subspaces.scalar_coset(F.inv(alpha), T)).dim


def _layer_setup(S, T):
    """Apply the r <= k - r convention; returns (S, T, swapped)."""
    if T.dim > S.dim:
        return T, S, True
    return S, T, False


def points_weight_at_least(S, T, i, budget=ENUMERATION_BOUND):
    """Points of weight >= i in L_{S x T}, excluding the heavy axis point
    ((1,0), or (0,1) when the factors were swapped to honor dim T <= dim S)."""
    S, T, swapped = _layer_setup(S, T)
    if not 1 <= i <= T.dim:
        raise ValueError("layer index %d out of range 1..%d" % (i, T.dim))
    F = S.field
    points = set()
    for W in subspaces.enumerate_subspaces(T, i, budget):
        inter = None
        for a in W.basis_elements():
            coset = subspaces.scalar_coset(F.inv(a), S)
            inter = coset if inter is None else subspaces.intersect(inter, coset)
            if inter.dim == 0:
                break
        for xi in inter.elements():
            P = normalize_point(F, xi, 1)
            points.add(swap_point(F, P) if swapped else P)
    return points


def points_weight_exactly(S, T, i, budget=ENUMERATION_BOUND):
    S2, T2, _ = _layer_setup(S, T)
    at_least = points_weight_at_least(S, T, i, budget)
    if i + 1 > T2.dim:
        return at_least
    return at_least - points_weight_at_least(S, T, i + 1, budget)


def weight_via_kernel(tower, f, g, eta, alpha):
    """Weight of <(1, alpha)> in L_{S_{f,xi} x S_{g,eta}} via the kernel of a
    composed linearized polynomial; xi is the tower's canonical generator,
    eta = a*xi + b with a, b read off eta's {1, xi}-coordinates."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    fqt, fqn = tower.fqt, tower.fqn
    b_eta, a_eta = fqn.coords(eta, fqt)
    if a_eta == 0:
        raise ValueError("eta lies in the middle field")
    alpha_inv = fqn.inv(alpha)
    a0, a1 = fqn.coords(alpha_inv, fqt)
    A, B = tower.A, tower.B
    ident = linpoly.identity(fqt, tower.fq)
    if eta == tower.xi:
        # reduced form: f(a0 X + a1 B g(X)) - (a0 + a1 A) g(X) - a1 X
        inner = linpoly.add(linpoly.post_scale(a0, ident),
                            linpoly.post_scale(fqt.mul(a1, B), g))
        tail = linpoly.add(linpoly.post_scale(fqt.add(a0, fqt.mul(a1, A)), g),
                           linpoly.post_scale(a1, ident))
    else:
        # f(a0 X + (a0 b + a a1 B) g(X)) - a1 X - (a a0 + a a1 A + b a1) g(X)
        c_in = fqt.add(fqt.mul(a0, b_eta),
                       fqt.mul(a_eta, fqt.mul(a1, B)))
        inner = linpoly.add(linpoly.post_scale(a0, ident),
                            linpoly.post_scale(c_in, g))
        c_tail = fqt.add(fqt.mul(a_eta, a0),
                         fqt.add(fqt.mul(a_eta, fqt.mul(a1, A)),
                                 fqt.mul(b_eta, a1)))
        tail = linpoly.add(linpoly.post_scale(a1, ident),
                           linpoly.post_scale(c_tail, g))
    G = linpoly.add(linpoly.compose(f, inner), linpoly.neg(tail))
    return linpoly.kernel_dim(G)


def two_heavy_points_check(S, T, budget=ENUMERATION_BOUND):
    """True iff L_{S x T} has only the two axis points of weight >= 2:
    every independent pair a1, a2 in T must give dim(a1 S ∩ a2 S) = 0."""
    S, T, _ = _layer_setup(S, T)
    if T.dim < 2 or S.dim < 2:
        raise ValueError("both factors must have dimension >= 2")
    for W in subspaces.enumerate_subspaces(T, 2, budget):
        a1, a2 = W.basis_elements()
        inter = subspaces.intersect(subspaces.scalar_coset(a1, S),
                                    subspaces.scalar_coset(a2, S))
        if inter.dim != 0:
            return False
    return True


def rank_weight(L, x0, x1):
    """Rank weight of the codeword (x0, x1) G for the block generator matrix
    read off the S x T basis; computed both as a direct span dimension and
    as rank - point weight, which must agree."""
    if L.S is None or L.T is None:
        raise ValueError("rank_weight needs an S x T tagged linear set")
    if x0 == 0 and x1 == 0:
        raise ValueError("zero codeword")
    F = L.field
    k = L.rank
    entries = []
    if x0 != 0:
        entries += [F.mul(x0, s) for s in L.S.basis_elements()]
    if x1 != 0:
        entries += [F.mul(x1, t) for t in L.T.basis_elements()]
    direct = subspaces.span(F, L.base, entries).dim
    if x0 == 0:
        P = (1, 0)
    else:
        xi = F.neg(F.mul(x1, F.inv(x0)))
        P = normalize_point(F, xi, 1)
    via_weight = k - weight_oracle(L, P)
    assert direct == via_weight, "rank-weight paths disagree"
    return direct
