"""Algebra of q-linearized polynomials sum a_i X^(q^i) over a chain field.

A polynomial lives on a level `field` and is linear over a lower `base`
field; coefficients are kept in reduced form of length m = [field:base]
(exponents folded mod m via x^(q^m) = x), so equality of maps is equality
of coefficient tuples.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import gflinalg
from .fields import LevelMismatchError


@dataclass(frozen=True)
class LinPoly:
    field: object          # the level the polynomial acts on
    base: object           # the sub-level defining "linearized"
    coeffs: tuple          # element indices of `field`, length [field:base]

    def __post_init__(self):
        m = self.field.degree_over(self.base)
        if len(self.coeffs) != m:
            raise ValueError("expected %d coefficients, got %d"
                             % (m, len(self.coeffs)))

    @property
    def qdeg_bound(self):
        return len(self.coeffs)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def eval(self, x):
        F = self.field
        q = self.base.order
        out = 0
        xp = x
        for a in self.coeffs:
            if a:
                out = F.add(out, F.mul(a, xp))
            xp = F.pow(xp, q)
        return out


def make(field, base, coeff_map):
    """LinPoly from {exponent: coefficient}, folding exponents mod m."""
    m = field.degree_over(base)
    coeffs = [0] * m
    for i, c in coeff_map.items():
        j = i % m
        coeffs[j] = field.add(coeffs[j], c)
    return LinPoly(field, base, tuple(coeffs))


def zero(field, base):
    return make(field, base, {})


def identity(field, base):
    return make(field, base, {0: 1})


def monomial(field, base, i, coeff=1):
    """coeff * X^(q^i)."""
    return make(field, base, {i: coeff})


def trace_poly(field, base):
    m = field.degree_over(base)
    return LinPoly(field, base, (1,) * m)


def add(f, g):
    _check_pair(f, g)
    F = f.field
    return LinPoly(F, f.base, tuple(F.add(a, b)
                                    for a, b in zip(f.coeffs, g.coeffs)))


def neg(f):
    F = f.field
    return LinPoly(F, f.base, tuple(F.neg(a) for a in f.coeffs))


def post_scale(c, f):
    """c * f(X)."""
    F = f.field
    return LinPoly(F, f.base, tuple(F.mul(c, a) for a in f.coeffs))


def pre_scale(f, c):
    """f(c * X)."""
    F = f.field
    q = f.base.order
    out = []
    cp = c
    for a in f.coeffs:
        out.append(F.mul(a, cp))
        cp = F.pow(cp, q)
    return LinPoly(F, f.base, tuple(out))


def compose(f, g):
    """f(g(X)) in reduced coefficient form."""
    _check_pair(f, g)
    F = f.field
    q = f.base.order
    m = len(f.coeffs)
    out = [0] * m
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        qi = q ** i
        for j, b in enumerate(g.coeffs):
            if b == 0:
                continue
            k = (i + j) % m
            out[k] = F.add(out[k], F.mul(a, F.pow(b, qi)))
    return LinPoly(F, f.base, tuple(out))


def _check_pair(f, g):
    if f.field is not g.field or f.base is not g.base:
        raise LevelMismatchError("polynomials on different levels")


def as_matrix(f):
    """Matrix rows = base-coords of f(e_j) for the positional basis e_j;
    the map acts as c -> c . M on coordinate row vectors."""
    F = f.field
    B = f.base
    return [F.coords(f.eval(e), B) for e in F.basis_over(B)]


def kernel_dim(f):
    m = len(f.coeffs)
    return m - gflinalg.rank(as_matrix(f), f.base)


def image_dim(f):
    return gflinalg.rank(as_matrix(f), f.base)


def is_invertible(f):
    return kernel_dim(f) == 0


def kernel_elements(f):
    """Kernel basis as field element indices."""
    F = f.field
    B = f.base
    basis = gflinalg.left_nullspace(as_matrix(f), B)
    return [F.from_coords(v, B) for v in basis]


def from_map(field, base, mapping):
    """Interpolate the LinPoly matching a base-linear map given on all of
    `field` (or at least on the positional basis); verified on the basis."""
    B = base
    m = field.degree_over(B)
    q = B.order
    basis = field.basis_over(B)
    # unknowns a_0..a_{m-1} over `field`: sum_i a_i e_j^(q^i) = mapping[e_j]
    rows = []
    for e in basis:
        row = []
        xp = e
        for _ in range(m):
            row.append(xp)
            xp = field.pow(xp, q)
        row.append(mapping[e])
        rows.append(row)
    red, pivots = gflinalg.rref(rows, field)
    if pivots and pivots[-1] == m:
        raise ValueError("mapping is not base-linear")
    coeffs = [0] * m
    for row, c in zip(red, pivots):
        coeffs[c] = row[m]
    f = LinPoly(field, base, tuple(coeffs))
    for x, y in mapping.items():
        if f.eval(x) != y:
            raise ValueError("mapping is not base-linear")
    return f


def subspace_poly_coeffs(field, base, basis_elements):
    """Unfolded monic coefficients (length k+1) of the linearized polynomial
    whose roots are exactly the base-span of `basis_elements`."""
    q = base.order
    coeffs = [1]  # P_0 = X
    for w in basis_elements:
        pw = _eval_raw(field, q, coeffs, w)
        if pw == 0:
            raise ValueError("basis elements are not independent")
        factor = field.pow(pw, q - 1)
        # P_{j+1}(X) = P_j(X)^q - P_j(w)^(q-1) * P_j(X)
        frob = [0] + [field.pow(c, q) for c in coeffs]
        out = [field.sub(a, field.mul(factor, b))
               for a, b in zip(frob, coeffs + [0] * (len(frob) - len(coeffs)))]
        coeffs = out
    return coeffs


def _eval_raw(field, q, coeffs, x):
    out = 0
    xp = x
    for c in coeffs:
        if c:
            out = field.add(out, field.mul(c, xp))
        xp = field.pow(xp, q)
    return out


def subspace_polynomial(field, base, basis_elements):
    """Folded LinPoly form of subspace_poly_coeffs (loses the leading term
    when the subspace is the whole level)."""
    raw = subspace_poly_coeffs(field, base, basis_elements)
    return make(field, base, dict(enumerate(raw)))


def normcond_check(field, base, coeffs, s=1):
    """Necessary condition for complete splitting of
    a_0 X + a_1 X^(q^s) + ... + a_{k-1} X^(q^(s(k-1))) - X^(q^(sk)):
    N_{q^t/q}(a_0) == (-1)^(t(k+1)).

    `coeffs` is the explicit list a_0..a_k (a_k must be -1)."""
    t = field.degree_over(base)
    if _gcd(s, t) != 1:
        raise ValueError("gcd(s, t) must be 1")
    coeffs = list(coeffs)
    k = len(coeffs) - 1
    if k < 1 or coeffs[-1] != field.neg(1):
        raise ValueError("polynomial is not in the -X^(q^(sk)) leading shape")
    norm = field.norm(coeffs[0], base)
    sign = 1 if t * (k + 1) % 2 == 0 else base.neg(1)
    return norm == sign


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def format_linpoly(f):
    """Text form `a_0 + a_1*X^q + a_2*X^q2 + ...` with coefficients as
    coordinate tuples over the base field."""
    B = f.base
    F = f.field
    parts = []
    for i, c in enumerate(f.coeffs):
        coeff = "(" + ",".join(str(d) for d in F.coords(c, B)) + ")"
        if i == 0:
            parts.append(coeff)
        elif i == 1:
            parts.append("%s*X^q" % coeff)
        else:
            parts.append("%s*X^q%d" % (coeff, i))
    return " + ".join(parts)


def parse_linpoly(field, base, text):
    m = field.degree_over(base)
    coeffs = [0] * m
    for part in text.split("+"):
        part = part.strip()
        if "*" in part:
            coeff_txt, mono = part.split("*")
            mono = mono.strip()
            if mono == "X^q":
                i = 1
            elif mono.startswith("X^q"):
                i = int(mono[3:])
            else:
                raise ValueError("bad monomial %r" % mono)
        else:
            coeff_txt, i = part, 0
        digits = [int(d) for d in coeff_txt.strip().strip("()").split(",")]
        coeffs[i] = field.from_coords(digits, base)
    return LinPoly(field, base, tuple(coeffs))
