"""Exact dense linear algebra over Q or Q(i).

Vectors are tuples, matrices are lists of row tuples.  All routines are
field-generic: entries only need +, -, *, / and == 0, which both Fraction
and CRat provide.  Reduced row echelon form is the canonical form used
throughout the library for subspaces, so two equal subspaces always
produce identical bases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple[list[tuple], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[0])


def kernel_basis(rows: Sequence[Sequence], ncols: int, one=Fraction(1)) -> list[tuple]:
    """Canonical (rref) basis of {x : rows @ x = 0} in an ncols-dim space."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero = one - one
    for fcol in free:
        vec = [zero] * ncols
        vec[fcol] = one
        for rrow, pcol in zip(red, pivots):
            vec[pcol] = -rrow[fcol]
        basis.append(tuple(vec))
    return rref(basis)[0] if basis else []


def solve(rows: Sequence[Sequence], rhs: Sequence):
    """One solution of rows @ x = rhs, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    if not rows:
        return None if any(v != 0 for v in rhs) else ()
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    zero = rhs[0] - rhs[0] if rhs else Fraction(0)
    for row in red:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    sol = [zero] * ncols
    for row, p in zip(red, pivots):
        if p == ncols:
            return None
        sol[p] = row[-1]
    return tuple(sol)


def coords_in_basis(basis: Sequence[Sequence], vec: Sequence):
    """Coordinates of vec in the given (independent) basis, or None."""
    cols = [list(b) for b in basis]
    # solve basis^T @ c = vec
    rows = [tuple(cols[j][i] for j in range(len(basis))) for i in range(len(vec))]
    return solve(rows, list(vec))


def in_span(basis: Sequence[Sequence], vec: Sequence) -> bool:
    return coords_in_basis(basis, vec) is not None


def det(rows: Sequence[Sequence]):
    """Determinant by fraction-friendly Gaussian elimination."""
    n = len(rows)
    mat = [list(r) for r in rows]
    if any(len(r) != n for r in mat):
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return Fraction(1)
    result = None
    sign_flips = 0
    for c in range(n):
        piv = None
        for i in range(c, n):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            return mat[0][0] - mat[0][0]
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            sign_flips += 1
        pv = mat[c][c]
        result = pv if result is None else result * pv
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    if sign_flips % 2:
        result = -result
    return result


def basis_change_sign(frm: Sequence[Sequence], to: Sequence[Sequence]) -> int:
    """Sign of det of the change of basis between two bases of one space.

    +1 if `frm` and `to` define the same orientation, -1 otherwise.
    Entries must be rational (orientations live in real spaces).
    """
    if len(frm) != len(to):
        raise ValueError("bases of different sizes")
    if not frm:
        return 1
    coords = []
    for v in frm:
        c = coords_in_basis(to, v)
        if c is None:
            raise ValueError("vectors do not span the same space")
        coords.append(c)
    d = det(coords)
    if d == 0:
        raise ValueError("degenerate change of basis")
    return 1 if d > 0 else -1


def intersect_rowspaces(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int,
                        one=Fraction(1)) -> list[tuple]:
    """Canonical basis of rowspace(a) & rowspace(b)."""
    if not a or not b:
        return []
    # x in both spans: x = ca @ a = cb @ b; solve for stacked coefficients.
    na, nb = len(a), len(b)
    rows = []
    for col in range(ncols):
        rows.append(tuple([a[i][col] for i in range(na)] +
                          [-b[j][col] for j in range(nb)]))
    ker = kernel_basis(rows, na + nb, one)
    vecs = []
    for coeff in ker:
        vec = [one - one] * ncols
        for i in range(na):
            if coeff[i] != 0:
                vec = [v + coeff[i] * x for v, x in zip(vec, a[i])]
        vecs.append(tuple(vec))
    return rref(vecs)[0]


def scale_primitive(vec: Sequence[Fraction], lead_positive: bool = True) -> tuple:
    """Scale a rational vector to coprime integers, leading entry positive."""
    from math import gcd
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    if lead_positive:
        for v in ints:
            if v != 0:
                if v < 0:
                    ints = [-w for w in ints]
                break
    return tuple(Fraction(v) for v in ints)
