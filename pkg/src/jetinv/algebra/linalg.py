"""Exact Gaussian elimination over the rationals."""
from __future__ import annotations

from fractions import Fraction


def rref(matrix):
    """Reduced row echelon form of ``matrix``.

    Returns ``(rows, pivots)`` where ``rows`` are the nonzero reduced rows
    (lists of :class:`Fraction`) and ``pivots`` their pivot columns.
    The input is not modified.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return [], []
    n_cols = len(m[0])
    if any(len(row) != n_cols for row in m):
        raise ValueError("matrix rows have different lengths")
    pivots = []
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(matrix) -> int:
    """Exact rank by forward elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return 0
    n_cols = len(m[0])
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def nullspace(matrix, n_cols=None):
    """Basis of ``{v : matrix @ v = 0}`` in reduced echelon form.

    Each basis vector has its first nonzero entry equal to 1 and the
    vectors are ordered by the position of that entry.
    """
    if n_cols is None:
        n_cols = len(matrix[0]) if matrix else 0
    rows, pivots = rref(matrix) if matrix else ([], [])
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f]
        basis.append(v)
    if not basis:
        return []
    reduced, _ = rref(basis)
    return reduced


def solve(matrix, rhs):
    """One exact solution of ``matrix @ v = rhs`` or ``None`` if inconsistent."""
    n_cols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == n_cols:
        return None
    v = [Fraction(0)] * n_cols
    for row, pc in zip(rows, pivots):
        v[pc] = row[n_cols]
    return v
