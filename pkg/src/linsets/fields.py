"""Exact arithmetic in a chain of finite-field extensions.

Every field element is a plain integer index.  The base-|subfield| digits
of an index (least significant digit first) are exactly the coordinates of
the element over that subfield, so subfield embeddings are the identity on
indices and every coordinate map is a radix conversion.  Addition is
digit-wise mod p; multiplication goes through lazily built exp/log tables.

The four-level tower F_p <= F_q <= F_{q^t} <= F_{q^2t} is assembled from
deterministic defining polynomials (lexicographically smallest monic
irreducible of the required degree, unless overridden).
"""
from __future__ import annotations

from dataclasses import dataclass

ENUMERATION_BOUND = 1 << 20

LEVELS = ("q", "qt", "qn")


class EnumerationBudgetError(RuntimeError):
    """A full scan would exceed the configured element budget."""


class LevelMismatchError(ValueError):
    """Operands belong to different fields or tower levels."""


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class FiniteField:
    """One level of an extension chain; elements are ints 0..order-1."""

    def __init__(self, p, _base=None, _modulus=None):
        if _base is None:
            if not is_prime(p):
                raise ValueError("characteristic %r is not prime" % (p,))
            self.p = p
            self.base = None
            self.rel_degree = 1
            self.modulus = None
            self.order = p
        else:
            self.p = _base.p
            self.base = _base
            self.rel_degree = len(_modulus) - 1
            self.modulus = tuple(_modulus)
            self.order = _base.order ** self.rel_degree
        self._exp = None
        self._log = None

    @classmethod
    def extension(cls, base, modulus):
        """Extension of `base` by a monic irreducible (low-degree-first coeffs)."""
        modulus = tuple(modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if any(not (0 <= c < base.order) for c in modulus):
            raise ValueError("modulus coefficients out of range")
        if not poly_is_irreducible(base, modulus):
            raise ValueError("modulus %r is reducible over order-%d field"
                             % (modulus, base.order))
        return cls(base.p, _base=base, _modulus=modulus)

    def __repr__(self):
        return "FiniteField(order=%d)" % self.order

    # --- additive structure: digit-wise mod p ---

    def add(self, a, b):
        p = self.p
        if p == 2:
            return a ^ b
        out = 0
        shift = 1
        while a or b:
            out += ((a % p) + (b % p)) % p * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a):
        p = self.p
        if p == 2:
            return a
        out = 0
        shift = 1
        while a:
            out += (p - a % p) % p * shift
            a //= p
            shift *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    # --- multiplicative structure ---

    def mul(self, a, b):
        if self.base is None:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is None:
            self._build_tables()
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inversion of zero field element")
        if self.base is None:
            return pow(a, self.p - 2, self.p)
        if self._exp is None:
            self._build_tables()
        return self._exp[-self._log[a] % (self.order - 1)]

    def pow(self, a, k):
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("inversion of zero field element")
            return 0
        if self.base is None:
            if k < 0:
                a, k = self.inv(a), -k
            return pow(a, k, self.p)
        if self._exp is None:
            self._build_tables()
        return self._exp[(self._log[a] * k) % (self.order - 1)]

    def _mul_raw(self, a, b):
        # table-free multiplication, used only while building the tables
        base = self.base
        d = self.rel_degree
        ca = self.coords(a, base)
        cb = self.coords(b, base)
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(ca):
            if ai == 0:
                continue
            for j, bj in enumerate(cb):
                if bj:
                    prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        neg_mod = [base.neg(c) for c in self.modulus[:d]]
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            for j, mj in enumerate(neg_mod):
                if mj:
                    prod[i - d + j] = base.add(prod[i - d + j], base.mul(c, mj))
        return self.from_coords(prod[:d], base)

    def _build_tables(self):
        if self.order > ENUMERATION_BOUND:
            raise EnumerationBudgetError(
                "field of order %d exceeds the multiplication-table budget"
                % self.order)
        n = self.order - 1
        for g in range(min(2, n), self.order):
            exp = [1]
            x = g
            while x != 1:
                exp.append(x)
                x = self._mul_raw(x, g)
            if len(exp) == n:
                log = [0] * self.order
                for i, v in enumerate(exp):
                    log[v] = i
                self._exp = exp
                self._log = log
                return
        raise AssertionError("no multiplicative generator found")

    # --- coordinates and sublevels ---

    def degree_over(self, sub):
        d = 0
        o = 1
        while o < self.order:
            o *= sub.order
            d += 1
        if o != self.order:
            raise LevelMismatchError(
                "order %d is not a power of %d" % (self.order, sub.order))
        return d

    def coords(self, a, sub):
        """Coordinate vector of `a` over a lower chain field, low digit first."""
        d = self.degree_over(sub)
        so = sub.order
        out = []
        for _ in range(d):
            out.append(a % so)
            a //= so
        return tuple(out)

    def from_coords(self, digits, sub):
        out = 0
        for c in reversed(list(digits)):
            out = out * sub.order + c
        return out

    def in_subfield(self, a, sub):
        return a < sub.order

    @property
    def prime_subfield(self):
        f = self
        while f.base is not None:
            f = f.base
        return f

    def basis_over(self, sub):
        """The positional basis e_j = from_coords(unit vector j)."""
        return [sub.order ** j for j in range(self.degree_over(sub))]

    def trace(self, a, sub):
        d = self.degree_over(sub)
        so = sub.order
        out = 0
        x = a
        for _ in range(d):
            out = self.add(out, x)
            x = self.pow(x, so)
        return out

    def norm(self, a, sub):
        d = self.degree_over(sub)
        so = sub.order
        out = 1
        x = a
        for _ in range(d):
            out = self.mul(out, x)
            x = self.pow(x, so)
        return out

    def int_embed(self, c):
        """The field element c*1 for an integer c."""
        return c % self.p

    def elements(self, bound=ENUMERATION_BOUND):
        if self.order > bound:
            raise EnumerationBudgetError(
                "enumerating %d elements exceeds the budget %d"
                % (self.order, bound))
        return range(self.order)


# --- polynomial utilities over a FiniteField (coeff lists, low-first) ---

def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return out


def _poly_mod(F, a, b):
    """Remainder of a modulo b (b nonzero)."""
    a = _poly_trim(a)
    b = _poly_trim(b)
    inv_lead = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lead)
        shift = len(a) - len(b)
        for j, bj in enumerate(b):
            if bj:
                a[shift + j] = F.sub(a[shift + j], F.mul(c, bj))
        a = _poly_trim(a)
        if not a:
            break
    return a


def poly_is_irreducible(F, coeffs):
    """Trial-division irreducibility test for a monic polynomial."""
    coeffs = _poly_trim(coeffs)
    d = len(coeffs) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    if coeffs[0] == 0:
        return False
    for deg in range(1, d // 2 + 1):
        for k in range(F.order ** deg):
            div = []
            kk = k
            for _ in range(deg):
                div.append(kk % F.order)
                kk //= F.order
            div.append(1)
            if not _poly_mod(F, coeffs, div):
                return False
    return True


def lex_min_irreducible(F, d):
    """Smallest monic irreducible of degree d, ordering coefficient vectors
    (c_0, ..., c_{d-1}) as base-|F| integers with c_0 least significant."""
    for k in range(F.order ** d):
        coeffs = []
        kk = k
        for _ in range(d):
            coeffs.append(kk % F.order)
            kk //= F.order
        coeffs.append(1)
        if poly_is_irreducible(F, coeffs):
            return tuple(coeffs)
    raise AssertionError("no irreducible of degree %d found" % d)


class FieldTower:
    """The chain F_p <= F_q <= F_{q^t} <= F_{q^2t}, n = 2t.

    xi is the canonical generator of the top quadratic extension; with top
    modulus X^2 + m1*X + m0 we record A = -m1 and B = -m0, so that
    xi^2 = A*xi + B holds by construction.
    """

    def __init__(self, p, e, t, overrides=None):
        if e < 1 or t < 1:
            raise ValueError("e and t must be positive")
        self.p = p
        self.e = e
        self.t = t
        self.q = p ** e
        self.n = 2 * t
        self.fp = FiniteField(p)
        degs = (e, t, 2)
        polys = []
        base = self.fp
        fields = []
        for i, d in enumerate(degs):
            if overrides is not None and i < len(overrides) and overrides[i] is not None:
                poly = tuple(overrides[i])
                if len(poly) != d + 1:
                    raise ValueError("override polynomial %d has wrong degree" % i)
            else:
                poly = lex_min_irreducible(base, d)
            base = FiniteField.extension(base, poly)
            polys.append(poly)
            fields.append(base)
        self.fq, self.fqt, self.fqn = fields
        self.defining_polys = tuple(polys)
        self.xi = self.fqt.order
        m0, m1, _ = self.fqn.modulus
        self.A = self.fqt.neg(m1)
        self.B = self.fqt.neg(m0)

    def level(self, tag):
        try:
            return {"q": self.fq, "qt": self.fqt, "qn": self.fqn}[tag]
        except KeyError:
            raise LevelMismatchError("unknown level tag %r" % (tag,))

    def element(self, tag, index):
        F = self.level(tag)
        if not (0 <= index < F.order):
            raise ValueError("index %d out of range for level %s" % (index, tag))
        return FieldElement(self, tag, index)

    def serialize(self):
        parts = ["%d,%d,%d" % (self.p, self.e, self.t)]
        for poly in self.defining_polys:
            parts.append(",".join(str(c) for c in poly))
        return ";".join(parts)

    @classmethod
    def deserialize(cls, text):
        parts = text.strip().split(";")
        if len(parts) != 4:
            raise ValueError("expected 'p,e,t;poly1;poly2;poly3'")
        p, e, t = (int(x) for x in parts[0].split(","))
        overrides = [tuple(int(c) for c in part.split(",")) for part in parts[1:]]
        return cls(p, e, t, overrides=overrides)

    def __repr__(self):
        return "FieldTower(p=%d, e=%d, t=%d)" % (self.p, self.e, self.t)


def make_tower(p, e, t, overrides=None):
    """Deterministic tower; same inputs give bit-identical defining polynomials."""
    return FieldTower(p, e, t, overrides=overrides)


@dataclass(frozen=True)
class FieldElement:
    """An element of one tower level, as an index with coordinate access."""

    tower: FieldTower
    level: str
    index: int

    @property
    def field(self):
        return self.tower.level(self.level)

    @property
    def coords(self):
        """Coordinates over the immediately lower level."""
        F = self.field
        lower = F.base
        return F.coords(self.index, lower)

    def _check(self, other):
        if self.tower is not other.tower or self.level != other.level:
            raise LevelMismatchError("operands on different towers or levels")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.tower, self.level,
                            self.field.add(self.index, other.index))

    def __sub__(self, other):
        self._check(other)
        return FieldElement(self.tower, self.level,
                            self.field.sub(self.index, other.index))

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.tower, self.level,
                            self.field.mul(self.index, other.index))

    def __neg__(self):
        return FieldElement(self.tower, self.level, self.field.neg(self.index))

    def inv(self):
        return FieldElement(self.tower, self.level, self.field.inv(self.index))

    def __truediv__(self, other):
        return self * other.inv()

    def __pow__(self, k):
        return FieldElement(self.tower, self.level, self.field.pow(self.index, k))

    def frobenius(self, times=1):
        """x -> x^(q^times) with q the tower's base field order."""
        return self ** (self.tower.q ** times)

    def __bool__(self):
        return self.index != 0


def _level_rank(tag):
    return LEVELS.index(tag)


def embed(x, to_level):
    """Injective ring map into a higher level (identity on indices)."""
    if _level_rank(to_level) < _level_rank(x.level):
        raise LevelMismatchError("embed target below element level")
    return FieldElement(x.tower, to_level, x.index)


def project(x, to_level=None):
    """Preimage in the level below (or `to_level`), None if absent."""
    if to_level is None:
        to_level = LEVELS[_level_rank(x.level) - 1] if _level_rank(x.level) else None
    if to_level is None or _level_rank(to_level) > _level_rank(x.level):
        raise LevelMismatchError("project target above element level")
    sub = x.tower.level(to_level)
    if x.index < sub.order:
        return FieldElement(x.tower, to_level, x.index)
    return None


def rel_trace(x):
    """Tr_{q^t/q}: level qt -> level q."""
    if x.level != "qt":
        raise LevelMismatchError("rel_trace expects a level-qt element")
    val = x.field.trace(x.index, x.tower.fq)
    assert val < x.tower.fq.order
    return FieldElement(x.tower, "q", val)


def rel_norm(x):
    if x.level != "qt":
        raise LevelMismatchError("rel_norm expects a level-qt element")
    val = x.field.norm(x.index, x.tower.fq)
    assert val < x.tower.fq.order
    return FieldElement(x.tower, "q", val)


def rel_trace_top(x):
    """Tr_{q^n/q^t}: level qn -> level qt."""
    if x.level != "qn":
        raise LevelMismatchError("rel_trace_top expects a level-qn element")
    val = x.field.trace(x.index, x.tower.fqt)
    assert val < x.tower.fqt.order
    return FieldElement(x.tower, "qt", val)


def rel_norm_top(x):
    if x.level != "qn":
        raise LevelMismatchError("rel_norm_top expects a level-qn element")
    val = x.field.norm(x.index, x.tower.fqt)
    assert val < x.tower.fqt.order
    return FieldElement(x.tower, "qt", val)


def enumerate_level(tower, tag, bound=ENUMERATION_BOUND):
    """All elements of a level in index (lexicographic coordinate) order."""
    F = tower.level(tag)
    for i in F.elements(bound):
        yield FieldElement(tower, tag, i)
