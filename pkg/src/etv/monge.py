"""Piecewise linear functions, corner loci, and mixed products.

A PL function is a difference of two max-families of affine functionals
Re<z, w> + c.  Its corner locus is the codimension-one complex framed by
the d^c jumps across walls of the linearity tiling, oriented by the rule:
the wall inherits the basis C with (outward-from-P, C) matching the
standard orientation of R^{2n}, and carries d^c(h_P) - d^c(h_Q).

The weighted-boundary operator takes a cycle X on whose cells h is affine
to the boundary of the cycle framed by d^c(G) wedge frame, where G is the
affine extension of h on each cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .exterior import ccov_form, complexify, dc_ccov, wedge
from .framed import (EtvRep, FramedCell, FramedSet, boundary, canonicalize,
                     cell_weight, equivalent, translate, zero_etv)
from .intersection import product_many
from .linalg import basis_change_sign, det, rank, rref
from .polyhedra import HPoly, VPolytope, triangulate_full_dim
from .scalars import CRat

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class AffineFunc:
    """z -> Re<z, w> + c with w a complex covector."""
    w: tuple      # CRat entries
    c: Fraction

    def real_coeffs(self):
        out = []
        for wj in self.w:
            out.extend((wj.re, -wj.im))
        return tuple(out)

    def value(self, z):
        return sum(a * x for a, x in zip(self.real_coeffs(), z)) + self.c


def affine_zero(n: int) -> AffineFunc:
    return AffineFunc(w=tuple(CRat(0) for _ in range(n)), c=_ZERO)


@dataclass(frozen=True)
class PLFunction:
    """max(plus) - max(minus), both families nonempty and duplicate-free."""
    n: int
    plus: tuple
    minus: tuple

    @staticmethod
    def convex(n: int, funcs) -> "PLFunction":
        return PLFunction(n=n, plus=tuple(dict.fromkeys(funcs)),
                          minus=(affine_zero(n),))

    def value(self, z):
        return (max(f.value(z) for f in self.plus)
                - max(f.value(z) for f in self.minus))

    def is_convex(self) -> bool:
        return len(self.minus) == 1

    def shifted(self, a) -> "PLFunction":
        """The function z -> value(z - a)."""
        def move(f: AffineFunc) -> AffineFunc:
            drop = sum(x * y for x, y in zip(f.real_coeffs(), a))
            return AffineFunc(f.w, f.c - drop)
        return PLFunction(self.n, tuple(move(f) for f in self.plus),
                          tuple(move(f) for f in self.minus))

    def plus_sum(self, other: "PLFunction") -> "PLFunction":
        """Pointwise sum, using max-family addition on both parts."""
        if self.n != other.n:
            raise ValueError("ambient mismatch")

        def family_sum(fa, fb):
            out = []
            for f in fa:
                for g in fb:
                    w = tuple(a + b for a, b in zip(f.w, g.w))
                    out.append(AffineFunc(w, f.c + g.c))
            return tuple(dict.fromkeys(out))
        return PLFunction(self.n, family_sum(self.plus, other.plus),
                          family_sum(self.minus, other.minus))


@dataclass(frozen=True)
class LinearityCell:
    poly: HPoly
    plus_active: AffineFunc
    minus_active: AffineFunc

    def differential(self):
        """Total differential covector w_plus - w_minus on this cell."""
        return tuple(a - b for a, b in zip(self.plus_active.w, self.minus_active.w))


def _max_region(family, i, ambient) -> HPoly:
    ineqs = []
    fi = family[i]
    ci = fi.real_coeffs()
    for j, fj in enumerate(family):
        if j == i:
            continue
        cj = fj.real_coeffs()
        ineqs.append((tuple(a - b for a, b in zip(cj, ci)), fi.c - fj.c))
    return HPoly(ambient, (), ineqs)


def linearity_complex(h: PLFunction) -> list:
    """Full-dimensional cells where one plus and one minus functional rule."""
    ambient = 2 * h.n
    cells = []
    seen = set()
    for i in range(len(h.plus)):
        ri = _max_region(h.plus, i, ambient)
        for j in range(len(h.minus)):
            rj = _max_region(h.minus, j, ambient)
            region = ri.intersect(rj).canonical()
            if region.is_empty() or region.dim < ambient:
                continue
            if region.key in seen:
                continue
            seen.add(region.key)
            cells.append(LinearityCell(region, h.plus[i], h.minus[j]))
    return cells


def corner_locus(h: PLFunction) -> EtvRep:
    """The codimension-one cycle framed by d^c jumps of the linearity tiling."""
    n = h.n
    ambient = 2 * n
    cells = linearity_complex(h)
    walls: dict = {}
    for ci, lc in enumerate(cells):
        for facet, ineq in lc.poly.facets_with_normals():
            walls.setdefault(facet.key, []).append((facet, ineq, ci))
    standard = [tuple(_ONE if i == j else _ZERO for j in range(ambient))
                for i in range(ambient)]
    framed_cells = []
    for entries in walls.values():
        if len(entries) != 2:
            raise ValueError("linearity tiling has a non-interior wall")
        (facet, ineq_p, ci_p), (_, _, ci_q) = entries
        diff = tuple(a - b for a, b in
                     zip(cells[ci_p].differential(), cells[ci_q].differential()))
        if all(d.is_zero() for d in diff):
            continue
        form = ccov_form(dc_ccov(diff))
        a, _ = ineq_p
        outward = None
        for idx, coeff in enumerate(a):
            if coeff != 0:
                e = [_ZERO] * ambient
                e[idx] = _ONE if coeff > 0 else -_ONE
                outward = tuple(e)
                break
        sign = basis_change_sign([outward] + list(facet.tangent_basis), standard)
        framed_cells.append(FramedCell(facet, form if sign > 0 else -form))
    return canonicalize(FramedSet(n, 2 * n - 1, framed_cells))


def support_function(gamma: VPolytope) -> PLFunction:
    """max over the vertices of Re<z, vertex>, as a convex PL function."""
    if gamma.rays:
        raise ValueError("support function needs a bounded polytope")
    n = gamma.ambient // 2
    funcs = [AffineFunc(w=complexify(v), c=_ZERO) for v in gamma.vertices]
    return PLFunction.convex(n, funcs)


# ---------------------------------------------------------------------------
# the weighted-boundary operator

def _active_affine_on(h: PLFunction, cell: HPoly):
    """The affine extension of h on a cell, or None if h is not affine there."""
    p = cell.relint_point()
    best_plus = max(f.value(p) for f in h.plus)
    best_minus = max(f.value(p) for f in h.minus)
    ambient = cell.ambient
    for i, fi in enumerate(h.plus):
        if fi.value(p) != best_plus:
            continue
        ri = _max_region(h.plus, i, ambient)
        if not ri.contains_poly(cell):
            continue
        for j, fj in enumerate(h.minus):
            if fj.value(p) != best_minus:
                continue
            rj = _max_region(h.minus, j, ambient)
            if rj.contains_poly(cell):
                w = tuple(a - b for a, b in zip(fi.w, fj.w))
                return AffineFunc(w=w, c=fi.c - fj.c)
    return None


def dc_weighted(h: PLFunction, x) -> EtvRep:
    """Boundary of the cycle reframed by d^c of the cellwise affine extension.

    Requires h to be affine on every support cell; the result has cycle
    dimension one less and depends only on the class of the input.
    """
    framed = x.framed if isinstance(x, EtvRep) else x
    n = framed.n
    if framed.k - 1 < n:
        raise ValueError("weighted boundary drops below the cycle range")
    cells = []
    for c in framed.support_cells():
        active = _active_affine_on(h, c.poly)
        if active is None:
            raise ValueError("function is not affine on a support cell")
        dc_form = ccov_form(dc_ccov(active.w))
        cells.append(FramedCell(c.poly, wedge(dc_form, c.frame)))
    weighted = FramedSet(n, framed.k, cells)
    return canonicalize(boundary(weighted))


def mixed_ma(*funcs: PLFunction, seed: int = 0) -> EtvRep:
    """Product of the corner loci; zero above the dimension range."""
    if not funcs:
        raise ValueError("empty mixed product")
    n = funcs[0].n
    if any(h.n != n for h in funcs):
        raise ValueError("ambient mismatch")
    if len(funcs) > n:
        return zero_etv(n, n)
    loci = []
    for h in funcs:
        locus = corner_locus(h)
        if locus.is_zero():
            return zero_etv(n, 2 * n - len(funcs))
        loci.append(locus)
    return product_many(loci, seed=seed)


# ---------------------------------------------------------------------------
# mixed volumes

def embed_real(points) -> VPolytope:
    """Points of R^n as dual-space points with zero imaginary parts."""
    out = []
    for p in points:
        v = []
        for x in p:
            v.extend((Fraction(x), _ZERO))
        out.append(tuple(v))
    return VPolytope.from_points(out)


def _check_real_body(gamma: VPolytope):
    for v in gamma.vertices:
        if any(v[i] != 0 for i in range(1, len(v), 2)):
            raise ValueError("body has nonzero imaginary coordinates")


def mixed_volume_via_ma(*bodies: VPolytope, seed: int = 0) -> Fraction:
    """Mixed volume through the mixed product of support-function loci.

    The product of the n corner loci is supported on translates of the
    imaginary plane; its total density divided by n! is the mixed volume.
    """
    n = bodies[0].ambient // 2
    if len(bodies) != n:
        raise ValueError(f"need exactly {n} bodies")
    for b in bodies:
        _check_real_body(b)
    result = mixed_ma(*[support_function(b) for b in bodies], seed=seed)
    if result.is_zero():
        return _ZERO
    imag_basis = []
    for j in range(n):
        e = [_ZERO] * (2 * n)
        e[2 * j + 1] = _ONE
        imag_basis.append(tuple(e))
    imag_basis = tuple(rref(imag_basis)[0])
    total = _ZERO
    for c in result.cells():
        if tuple(c.poly.tangent_basis) != imag_basis:
            raise ValueError("mixed product not supported on imaginary translates")
        total += cell_weight(c.frame, c.poly.tangent_basis)
    return total / factorial(n)


def _real_minkowski(a, b):
    return [tuple(x + y for x, y in zip(p, q)) for p in a for q in b]


def _real_volume(points) -> Fraction:
    pts = sorted(set(tuple(Fraction(x) for x in p) for p in points))
    if not pts:
        return _ZERO
    d = len(pts[0])
    diffs = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
    if rank(diffs) < d:
        return _ZERO
    total = _ZERO
    for simplex in triangulate_full_dim(pts):
        p0 = simplex[0]
        mat = [[a - b for a, b in zip(p, p0)] for p in simplex[1:]]
        total += abs(det(mat))
    return total / factorial(d)


def mixed_volume_oracle(*bodies) -> Fraction:
    """Polarization of the volume: independent of the cycle machinery.

    Bodies are plain point lists in R^n; the alternating sum of volumes of
    Minkowski sums over subsets divided by n! gives the mixed volume.
    """
    n = len(bodies[0][0])
    if len(bodies) != n:
        raise ValueError(f"need exactly {n} bodies")
    total = _ZERO
    for r in range(1, n + 1):
        for subset in combinations(range(n), r):
            pts = [tuple(Fraction(x) for x in p) for p in bodies[subset[0]]]
            for i in subset[1:]:
                pts = _real_minkowski(pts, bodies[i])
            total += (-1) ** (n - r) * _real_volume(pts)
    return total / factorial(n)


def is_r_generated(p) -> bool:
    """Invariance of the cycle under translations along the imaginary plane."""
    rep = p if isinstance(p, EtvRep) else canonicalize(p)
    if rep.is_zero():
        return True
    n = rep.n
    for j in range(n):
        e = [_ZERO] * (2 * n)
        e[2 * j + 1] = _ONE
        if not equivalent(translate(rep, tuple(e)), rep):
            return False
    return True
