"""Exact Gaussian elimination over a tabulated finite field.

Matrices are plain lists of rows of int-encoded field elements.  Sizes in
this package stay small (a few hundred rows at most), so straightforward
elimination with table lookups is both fast enough and easy to audit.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .field import FieldSpec


def rref(field: FieldSpec, rows: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = [list(r) for r in rows]
    if not mat:
        return mat, []
    ncols = len(mat[0])
    mul, sub, inv = field.mul, field.sub, field.inv
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        prow = mat[r]
        scale = mul[inv[prow[c]]]
        for j in range(c, ncols):
            prow[j] = scale[prow[j]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                row = mat[i]
                factor = mul[row[c]]
                for j in range(c, ncols):
                    pj = prow[j]
                    if pj:
                        row[j] = sub[row[j]][factor[pj]]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(field, rows)[1])


def kernel_basis(field: FieldSpec, rows: Sequence[Sequence[int]]) -> List[List[int]]:
    """Basis of the right kernel {v : M v = 0}."""
    if not rows:
        return []
    mat, pivots = rref(field, rows)
    ncols = len(mat[0])
    neg = field.neg
    pivot_set = set(pivots)
    basis = []
    for fc in range(ncols):
        if fc in pivot_set:
            continue
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = neg[mat[i][fc]]
        basis.append(v)
    return basis


def solve(
    field: FieldSpec, rows: Sequence[Sequence[int]], rhs: Sequence[int]
) -> Optional[List[int]]:
    """A particular solution of M x = rhs (free variables set to 0), or None."""
    if len(rows) != len(rhs):
        raise ValueError("matrix/vector size mismatch")
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    mat, pivots = rref(field, aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = [0] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = mat[i][ncols]
    return x
