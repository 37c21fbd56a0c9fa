"""F_q-subspace calculus inside a chain field L and inside L^2.

A subspace carries its canonical reduced-row-echelon basis over the base
field, so subspace equality is tuple equality of bases.  Vectors of L^2
are flattened to length-2m coordinate rows; the two halves are the two
projective coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gflinalg
from .fields import EnumerationBudgetError, ENUMERATION_BOUND, LevelMismatchError


@dataclass(frozen=True)
class FqSubspace:
    field: object      # ambient chain field L
    base: object       # base field of linearity
    pair: bool         # False: subspace of L; True: subspace of L^2
    rows: tuple        # RREF rows of base-field coordinates

    @property
    def dim(self):
        return len(self.rows)

    @property
    def ncoords(self):
        m = self.field.degree_over(self.base)
        return 2 * m if self.pair else m

    def _check_mate(self, other):
        if (self.field is not other.field or self.base is not other.base
                or self.pair != other.pair):
            raise LevelMismatchError("subspaces in different ambients")

    def member_row(self, row):
        red, pivots = self.rows, [_pivot(r) for r in self.rows]
        return not any(gflinalg.reduce_mod(red, pivots, row, self.base))

    def contains(self, value):
        """Membership of an element index (pair=False) or index pair."""
        return self.member_row(self._to_row(value))

    def _to_row(self, value):
        F, B = self.field, self.base
        if self.pair:
            v0, v1 = value
            return F.coords(v0, B) + F.coords(v1, B)
        return F.coords(value, B)

    def _from_row(self, row):
        F, B = self.field, self.base
        if self.pair:
            m = len(row) // 2
            return (F.from_coords(row[:m], B), F.from_coords(row[m:], B))
        return F.from_coords(row, B)

    def vectors(self):
        """All |B|^dim coordinate rows of the subspace (zero included)."""
        return iter_span_rows(self.rows, self.base, self.ncoords)

    def elements(self):
        """All subspace members as element indices / index pairs."""
        for row in self.vectors():
            yield self._from_row(row)

    def basis_elements(self):
        return [self._from_row(r) for r in self.rows]

    def serialize(self):
        return ";".join(",".join(str(c) for c in row) for row in self.rows)


def _pivot(row):
    for i, x in enumerate(row):
        if x:
            return i
    raise ValueError("zero row in echelon basis")


def iter_span_rows(rows, B, ncoords):
    if not rows:
        yield (0,) * ncoords
        return
    first, rest = rows[0], rows[1:]
    for partial in iter_span_rows(rest, B, ncoords):
        for c in range(B.order):
            if c == 0:
                yield partial
            else:
                scaled = tuple(B.mul(c, x) for x in first)
                yield tuple(B.add(a, b) for a, b in zip(scaled, partial))


def _spanned(field, base, pair, coord_rows):
    red, _ = gflinalg.rref(coord_rows, base)
    return FqSubspace(field, base, pair, tuple(red))


def span(field, base, elements, pair=False):
    """Canonical subspace spanned by element indices (or index pairs)."""
    rows = []
    m = field.degree_over(base)
    for v in elements:
        if pair:
            v0, v1 = v
            rows.append(field.coords(v0, base) + field.coords(v1, base))
        else:
            rows.append(field.coords(v, base))
    if not rows:
        rows = []
    return _spanned(field, base, pair, rows)


def from_rows(field, base, rows, pair=False):
    return _spanned(field, base, pair, [tuple(r) for r in rows])


def whole_subfield(field, base, sub):
    """The chain subfield `sub` as a base-subspace of `field`."""
    return span(field, base, sub.basis_over(base)
                if sub.order > base.order else [1])


def intersect(S, T):
    S._check_mate(T)
    rows = gflinalg.intersect_rowspaces(S.rows, T.rows, S.base)
    return FqSubspace(S.field, S.base, S.pair, tuple(rows))


def ssum(S, T):
    S._check_mate(T)
    red, _ = gflinalg.rref(list(S.rows) + list(T.rows), S.base)
    return FqSubspace(S.field, S.base, S.pair, tuple(red))


def scalar_coset(a, S):
    """The subspace a*S for a nonzero field element index a."""
    if a == 0:
        raise ValueError("scalar must be nonzero")
    if S.pair:
        raise LevelMismatchError("scalar_coset acts on subspaces of the field")
    F = S.field
    return span(F, S.base, [F.mul(a, v) for v in S.basis_elements()])


def gaussian_binomial(n, k, q):
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def enumerate_subspaces(T, i, budget=ENUMERATION_BOUND):
    """All i-dimensional base-subspaces of T, canonical echelon order.

    Enumerates i x dim(T) RREF patterns in T's internal coordinates and
    maps them through T's basis."""
    d = T.dim
    if not 0 <= i <= d:
        raise ValueError("subspace dimension %d out of range" % i)
    B = T.base
    count = gaussian_binomial(d, i, B.order)
    if count > budget:
        raise EnumerationBudgetError(
            "enumerating %d subspaces exceeds the budget %d" % (count, budget))
    if i == 0:
        yield FqSubspace(T.field, T.base, T.pair, ())
        return
    for pivots in itertools.combinations(range(d), i):
        free = []
        for r in range(i):
            for c in range(pivots[r] + 1, d):
                if c not in pivots:
                    free.append((r, c))
        for values in itertools.product(range(B.order), repeat=len(free)):
            local = [[0] * d for _ in range(i)]
            for r in range(i):
                local[r][pivots[r]] = 1
            for (r, c), v in zip(free, values):
                local[r][c] = v
            rows = []
            for r in range(i):
                row = [0] * T.ncoords
                for c in range(d):
                    coef = local[r][c]
                    if coef:
                        row = [B.add(x, B.mul(coef, y))
                               for x, y in zip(row, T.rows[c])]
                rows.append(tuple(row))
            yield _spanned(T.field, T.base, T.pair, rows)
