"""Even-type point sets in the projective plane PG(2, q), q even.

A translation even set is assembled from an additive (F_2-linearized) map
g on F_q: the affine graph {(1, x, g(x))} together with the line at
infinity minus the set of directions {<(0, x, g(x))>}.  Every line of the
plane meets such a set in an even number of points.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linpoly, linset
from .fields import EnumerationBudgetError, ENUMERATION_BOUND


def normalize3(F, v):
    """Canonical representative of a projective point/line of PG(2, q)."""
    for i in range(3):
        if v[i]:
            inv = F.inv(v[i])
            return tuple(F.mul(inv, x) for x in v)
    raise ValueError("zero vector has no projective point")


def plane_points(F):
    """All points of PG(2, |F|) as normalized triples."""
    out = [(0, 0, 1)]
    out += [(0, 1, z) for z in range(F.order)]
    out += [(1, y, z) for y in range(F.order) for z in range(F.order)]
    return out


def plane_lines(F):
    """Lines as normalized dual triples; P on L iff the dot product is 0."""
    return plane_points(F)


def incident(F, P, L):
    s = 0
    for a, b in zip(P, L):
        s = F.add(s, F.mul(a, b))
    return s == 0


@dataclass
class EvenSetReport:
    q: int
    points: frozenset        # normalized triples
    size: int
    n_directions: int        # distinct directions of the graph map
    spectrum: dict           # line intersection size -> number of lines
    all_even: bool

    def spectrum_values(self):
        return sorted(self.spectrum)


def translation_even_set(g, budget=ENUMERATION_BOUND):
    """The even set of the additive map g: affine graph plus the co-directions
    on the line at infinity.  Requires characteristic 2."""
    F = g.field
    if F.p != 2:
        raise ValueError("even sets here need q even")
    if F.order ** 2 > budget:
        raise EnumerationBudgetError("plane scan exceeds the budget")
    affine = {(1, x, g.eval(x)) for x in range(F.order)}
    dirs = {normalize3(F, (0, x, g.eval(x))) for x in range(1, F.order)}
    infinity = {(0, 1, z) for z in range(F.order)} | {(0, 0, 1)}
    points = frozenset(affine | (infinity - dirs))
    spectrum = {}
    for L in plane_lines(F):
        k = sum(1 for P in points if incident(F, P, L))
        spectrum[k] = spectrum.get(k, 0) + 1
    all_even = all(k % 2 == 0 for k in spectrum)
    return EvenSetReport(F.order, points, len(points), len(dirs),
                         spectrum, all_even)


def graph_map_from_linear_set(L, a=None):
    """Turn a rank-s linear set of PG(1, 2^s) avoiding some point (1, a)
    into the additive map whose graph it becomes after the projective map
    (v0, v1) -> (a v0 + v1, v0), which moves (1, a) to (0, 1).

    Returns (g, a) with g a linearized polynomial over the prime field."""
    F = L.field
    if F.p != 2:
        raise ValueError("needs characteristic 2")
    prime = F.prime_subfield
    if L.rank != F.degree_over(prime):
        raise ValueError("rank must equal the degree over the prime field")
    if a is None:
        hit = {linset.normalize_point(F, v0, v1)
               for v0, v1 in L.U.elements() if (v0, v1) != (0, 0)}
        a = next(x for x in range(F.order) if (1, x) not in hit)
    mapping = {}
    for v0, v1 in L.U.elements():
        u0 = F.add(F.mul(a, v0), v1)
        if u0 in mapping:
            raise ValueError("(1, %d) lies on the linear set" % a)
        mapping[u0] = v0
    g = linpoly.from_map(F, prime, mapping)
    return g, a
