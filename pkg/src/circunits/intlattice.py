"""Exact integer-lattice arithmetic for exponent vectors.

Subgroups of the free abelian group on the d-generators are integer row
lattices.  Membership, index and quotient shape all reduce to echelon and
Smith computations on small matrices, done here with plain big-int rows.
"""

from __future__ import annotations

from math import gcd

__all__ = [
    "row_lattice_basis",
    "lattice_contains",
    "lattice_rank",
    "lattice_index_in_ambient",
    "smith_diagonal",
]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _first_nonzero(vec: list[int]) -> int:
    for i, v in enumerate(vec):
        if v:
            return i
    return -1


def row_lattice_basis(rows: list[list[int]] | list[tuple[int, ...]]) -> list[list[int]]:
    """Echelon basis of the lattice spanned by the rows.

    Rows come back ordered by pivot column, each pivot positive, entries
    above a pivot reduced into [0, pivot).
    """
    basis: dict[int, list[int]] = {}
    for row in rows:
        vec = list(row)
        while True:
            c = _first_nonzero(vec)
            if c < 0:
                break
            if c not in basis:
                if vec[c] < 0:
                    vec = [-v for v in vec]
                basis[c] = vec
                break
            pivot_row = basis[c]
            g, x, y = _xgcd(pivot_row[c], vec[c])
            combined = [x * p + y * v for p, v in zip(pivot_row, vec)]
            reduced = [
                (vec[c] // g) * p - (pivot_row[c] // g) * v
                for p, v in zip(pivot_row, vec)
            ]
            basis[c] = combined
            vec = reduced
    ordered = [basis[c] for c in sorted(basis)]
    # normalize entries above each pivot for a deterministic result
    for i in range(len(ordered) - 1, -1, -1):
        c = _first_nonzero(ordered[i])
        p = ordered[i][c]
        for k in range(i):
            q = ordered[k][c] // p
            if q:
                ordered[k] = [a - q * b for a, b in zip(ordered[k], ordered[i])]
    return ordered


def lattice_contains(basis: list[list[int]], vec: list[int] | tuple[int, ...]) -> bool:
    """Membership test against an echelon basis from row_lattice_basis."""
    v = list(vec)
    by_pivot = {_first_nonzero(row): row for row in basis}
    while True:
        c = _first_nonzero(v)
        if c < 0:
            return True
        row = by_pivot.get(c)
        if row is None or v[c] % row[c]:
            return False
        q = v[c] // row[c]
        v = [a - q * b for a, b in zip(v, row)]


def lattice_rank(basis: list[list[int]]) -> int:
    return len(basis)


def lattice_index_in_ambient(basis: list[list[int]], n_cols: int) -> int:
    """Index of the lattice inside Z^n_cols; 0 means infinite (rank deficit)."""
    if len(basis) != n_cols:
        return 0
    index = 1
    for row in basis:
        index *= row[_first_nonzero(row)]
    return index


def smith_diagonal(rows: list[list[int]] | list[tuple[int, ...]]) -> list[int]:
    """Nonzero elementary divisors d_1 | d_2 | ... of the integer matrix."""
    mat = [list(r) for r in rows]
    divisors: list[int] = []
    while mat and any(any(r) for r in mat):
        # bring the smallest nonzero entry to the top-left corner
        bi, bj = -1, -1
        best = None
        for i, r in enumerate(mat):
            for j, v in enumerate(r):
                if v and (best is None or abs(v) < best):
                    best, bi, bj = abs(v), i, j
        mat[0], mat[bi] = mat[bi], mat[0]
        for r in mat:
            r[0], r[bj] = r[bj], r[0]
        # clear the first row and column by division steps
        dirty = False
        for i in range(1, len(mat)):
            if mat[i][0]:
                q = mat[i][0] // mat[0][0]
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[0])]
                if mat[i][0]:
                    dirty = True
        for j in range(1, len(mat[0])):
            if mat[0][j]:
                q = mat[0][j] // mat[0][0]
                for r in mat:
                    r[j] -= q * r[0]
                if mat[0][j]:
                    dirty = True
        if dirty:
            continue
        # enforce the divisibility chain before splitting off the corner
        pivot = mat[0][0]
        offender = None
        for i in range(1, len(mat)):
            for j in range(1, len(mat[i])):
                if mat[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            mat[0] = [a + b for a, b in zip(mat[0], mat[offender])]
            continue
        divisors.append(abs(pivot))
        mat = [r[1:] for r in mat[1:]]
    return divisors
