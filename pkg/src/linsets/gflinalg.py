"""Exact Gaussian elimination over any chain field.

Matrices are lists/tuples of row tuples whose entries are element indices
of a FiniteField; all ranks and kernels here are exact echelon reductions,
never probabilistic.
"""
from __future__ import annotations


def rref(rows, F):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = F.inv(mat[r][c])
        if inv != 1:
            mat[r] = [F.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [F.sub(x, F.mul(factor, y))
                          for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows, F):
    return len(rref(rows, F)[0])


def reduce_mod(rref_rows, pivots, v, F):
    """Residual of v after elimination against an RREF basis."""
    v = list(v)
    for row, c in zip(rref_rows, pivots):
        if v[c] != 0:
            factor = v[c]
            v = [F.sub(x, F.mul(factor, y)) for x, y in zip(v, row)]
    return tuple(v)


def right_nullspace(rows, F):
    """Basis (as rows) of {x : A x = 0} for A given by `rows`."""
    red, pivots = rref(rows, F)
    if rows:
        ncols = len(rows[0])
    else:
        return []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(tuple(v))
    return basis


def left_nullspace(rows, F):
    """Basis of {c : c . rows = 0} (coefficient vectors over the rows)."""
    if not rows:
        return []
    transposed = [tuple(r[i] for r in rows) for i in range(len(rows[0]))]
    return right_nullspace(transposed, F)


def intersect_rowspaces(rows_a, rows_b, F):
    """Zassenhaus: basis of rowspace(a) intersect rowspace(b)."""
    if not rows_a or not rows_b:
        return []
    n = len(rows_a[0])
    block = [tuple(r) + tuple(r) for r in rows_a]
    block += [tuple(r) + (0,) * n for r in rows_b]
    red, _ = rref(block, F)
    out = []
    for row in red:
        if all(x == 0 for x in row[:n]):
            right = row[n:]
            if any(right):
                out.append(right)
    return rref(out, F)[0]
