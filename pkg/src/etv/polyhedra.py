"""Rational convex polyhedra, face structure, and polyhedral sets.

H-polyhedra are the working representation for cells: intersections,
refinements and localizations are all constraint surgery plus exact LP.
V-polytopes represent the input polytopes in the dual space, where face
enumeration and volume multivectors are needed.

Canonicalization contract: a canonical HPoly has its affine hull expressed
as an rref equality system, no implicit equalities hiding among the
inequalities, no redundant inequalities, and primitive integer constraint
vectors.  Two canonical HPolys describe the same set iff their keys match.
The canonical tangent basis is the rref basis of the direction space, so
all cells sharing an affine hull direction also share their reference
orientation, which keeps frame bookkeeping transport-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .linalg import (coords_in_basis, det, kernel_basis, rank, rref,
                     scale_primitive, solve)
from .lp import OPTIMAL, UNBOUNDED, solve_lp

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _prim_eq(coeffs, rhs):
    vec = scale_primitive(tuple(coeffs) + (rhs,), lead_positive=True)
    return vec[:-1], vec[-1]


def _prim_ineq(coeffs, rhs):
    # only positive scaling preserves the inequality direction
    vec = scale_primitive(tuple(coeffs) + (rhs,), lead_positive=False)
    for v in vec[:-1]:
        if v != 0:
            return vec[:-1], vec[-1]
    return None  # constant constraint, handled by caller


class EmptyPolyhedron(Exception):
    pass


class HPoly:
    """Rational H-polyhedron {z : eq. z = rhs, ineq . z <= rhs}."""

    __slots__ = ("ambient", "eq", "ineq", "_canonical", "_empty", "_tangent",
                 "_relint", "_key", "_facets", "_vertices")

    def __init__(self, ambient: int, eq=(), ineq=(), _canonical=False):
        self.ambient = ambient
        self.eq = tuple((tuple(a), b) for a, b in eq)
        self.ineq = tuple((tuple(a), b) for a, b in ineq)
        self._canonical = _canonical
        self._empty = None
        self._tangent = None
        self._relint = None
        self._key = None
        self._facets = None
        self._vertices = None

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def whole_space(ambient: int) -> "HPoly":
        return HPoly(ambient).canonical()

    @staticmethod
    def empty(ambient: int) -> "HPoly":
        p = HPoly(ambient)
        p._empty = True
        p._canonical = True
        return p

    @staticmethod
    def from_equalities(ambient: int, eqs) -> "HPoly":
        return HPoly(ambient, eq=eqs).canonical()

    def intersect(self, other: "HPoly") -> "HPoly":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        if self.is_empty() or other.is_empty():
            return HPoly.empty(self.ambient)
        return HPoly(self.ambient, self.eq + other.eq, self.ineq + other.ineq)

    def with_constraint(self, coeffs, rhs, equality=False) -> "HPoly":
        if equality:
            return HPoly(self.ambient, self.eq + ((tuple(coeffs), rhs),), self.ineq)
        return HPoly(self.ambient, self.eq, self.ineq + ((tuple(coeffs), rhs),))

    def translate(self, vec) -> "HPoly":
        if self.is_empty():
            return self
        eq = tuple((a, b + sum(x * y for x, y in zip(a, vec))) for a, b in self.eq)
        ineq = tuple((a, b + sum(x * y for x, y in zip(a, vec))) for a, b in self.ineq)
        out = HPoly(self.ambient, eq, ineq, _canonical=self._canonical)
        if self._tangent is not None:
            out._tangent = self._tangent
        return out

    # -- feasibility and canonical form ---------------------------------------

    def is_empty(self) -> bool:
        if self._empty is None:
            res = solve_lp([_ZERO] * self.ambient,
                           [list(a) for a, _ in self.ineq], [b for _, b in self.ineq],
                           [list(a) for a, _ in self.eq], [b for _, b in self.eq])
            self._empty = res.status != OPTIMAL
        return self._empty

    def _optimize(self, coeffs, maximize):
        return solve_lp(list(coeffs),
                        [list(a) for a, _ in self.ineq], [b for _, b in self.ineq],
                        [list(a) for a, _ in self.eq], [b for _, b in self.eq],
                        maximize=maximize)

    def minimize(self, coeffs):
        return self._optimize(coeffs, False)

    def maximize(self, coeffs):
        return self._optimize(coeffs, True)

    def canonical(self) -> "HPoly":
        if self._canonical:
            return self
        if self.is_empty():
            return HPoly.empty(self.ambient)
        eqs = [(a, b) for a, b in self.eq]
        ineqs = []
        seen = set()
        for a, b in self.ineq:
            prim = _prim_ineq(a, b)
            if prim is None:
                if b < 0:
                    return HPoly.empty(self.ambient)  # 0 <= negative
                continue
            if prim not in seen:
                seen.add(prim)
                ineqs.append(prim)

        # find implicit equalities
        keep = []
        for a, b in ineqs:
            res = HPoly(self.ambient, tuple(eqs), tuple(ineqs)).minimize(a)
            if res.status == OPTIMAL and res.value == b:
                eqs.append((a, b))
            else:
                keep.append((a, b))
        ineqs = keep

        # canonical affine hull: rref of [A | b]
        if eqs:
            aug = [tuple(a) + (b,) for a, b in eqs]
            red, pivots = rref(aug)
            if any(all(x == 0 for x in row[:-1]) and row[-1] != 0 for row in red):
                return HPoly.empty(self.ambient)
            # reduce inequalities modulo the hull so equal sets share keys
            reduced = []
            seen_r = set()
            for a, b in ineqs:
                v = list(a) + [b]
                for row, p in zip(red, pivots):
                    f = v[p]
                    if f != 0:
                        v = [x - f * y for x, y in zip(v, row)]
                prim = _prim_ineq(v[:-1], v[-1])
                if prim is None:
                    if v[-1] < 0:
                        return HPoly.empty(self.ambient)
                    continue
                if prim not in seen_r:
                    seen_r.add(prim)
                    reduced.append(prim)
            ineqs = reduced
            eqs = []
            for row in red:
                coeffs, rhs = _prim_eq(row[:-1], row[-1])
                eqs.append((coeffs, rhs))

        # drop inequalities implied by the affine hull or by the others
        poly_eqs = tuple(eqs)
        pruned = []
        for a, b in ineqs:
            res = HPoly(self.ambient, poly_eqs, ()).maximize(a)
            if res.status == OPTIMAL and res.value <= b:
                continue  # affine hull already enforces it
            pruned.append((a, b))
        ineqs = pruned
        irredundant = list(ineqs)
        i = 0
        while i < len(irredundant):
            rest = irredundant[:i] + irredundant[i + 1:]
            a, b = irredundant[i]
            res = HPoly(self.ambient, poly_eqs, tuple(rest)).maximize(a)
            if res.status == OPTIMAL and res.value <= b:
                irredundant.pop(i)
            else:
                i += 1

        out = HPoly(self.ambient, tuple(eqs), tuple(sorted(irredundant)),
                    _canonical=True)
        out._empty = False
        return out

    @property
    def key(self):
        if self._key is None:
            if not self._canonical:
                raise ValueError("key of non-canonical polyhedron")
            if self._empty:
                self._key = ("empty", self.ambient)
            else:
                self._key = (self.eq, self.ineq)
        return self._key

    # -- geometry --------------------------------------------------------------

    @property
    def tangent_basis(self):
        """Canonical (rref) basis of the direction space of the affine hull."""
        if self._tangent is None:
            if not self._canonical:
                raise ValueError("tangent basis of non-canonical polyhedron")
            rows = [a for a, _ in self.eq]
            self._tangent = tuple(kernel_basis(rows, self.ambient))
        return self._tangent

    @property
    def dim(self) -> int:
        if self.is_empty():
            return -1
        return len(self.canonical().tangent_basis) if not self._canonical \
            else len(self.tangent_basis)

    def relint_point(self):
        if self._relint is not None:
            return self._relint
        if not self._canonical:
            raise ValueError("relative interior of non-canonical polyhedron")
        if self._empty:
            raise EmptyPolyhedron("relative interior of empty polyhedron")
        n = self.ambient
        if not self.ineq:
            pt = solve([a for a, _ in self.eq], [b for _, b in self.eq]) \
                if self.eq else tuple([_ZERO] * n)
            self._relint = tuple(pt)
            return self._relint
        # maximize t with a.z + t <= b, t <= 1
        a_ub = [list(a) + [_ONE] for a, _ in self.ineq] + [[_ZERO] * n + [_ONE]]
        b_ub = [b for _, b in self.ineq] + [_ONE]
        a_eq = [list(a) + [_ZERO] for a, _ in self.eq]
        b_eq = [b for _, b in self.eq]
        res = solve_lp([_ZERO] * n + [_ONE], a_ub, b_ub, a_eq, b_eq, maximize=True)
        if res.status != OPTIMAL or res.value <= 0:
            raise EmptyPolyhedron("no strict interior point found")
        self._relint = tuple(res.x[:n])
        return self._relint

    def contains_point(self, p) -> bool:
        return (all(sum(x * y for x, y in zip(a, p)) == b for a, b in self.eq)
                and all(sum(x * y for x, y in zip(a, p)) <= b for a, b in self.ineq))

    def contains_poly(self, other: "HPoly") -> bool:
        if other.is_empty():
            return True
        if self.is_empty():
            return False
        for a, b in self.eq:
            hi = other.maximize(a)
            if hi.status != OPTIMAL or hi.value != b:
                return False
            lo = other.minimize(a)
            if lo.status != OPTIMAL or lo.value != b:
                return False
        for a, b in self.ineq:
            hi = other.maximize(a)
            if hi.status == UNBOUNDED or hi.value > b:
                return False
        return True

    def same_set(self, other: "HPoly") -> bool:
        return self.canonical().key == other.canonical().key

    def facets_with_normals(self):
        """Pairs (facet, inequality) for every proper facet of the cell."""
        if self._facets is None:
            if not self._canonical:
                raise ValueError("facets of non-canonical polyhedron")
            out = []
            for a, b in self.ineq:
                f = HPoly(self.ambient, self.eq + ((a, b),), self.ineq).canonical()
                if not f.is_empty() and f.dim == self.dim - 1:
                    out.append((f, (a, b)))
            self._facets = out
        return self._facets

    def all_faces(self):
        """All nonempty faces of all dimensions (self included), deduped."""
        seen = {self.key: self}
        frontier = [self]
        while frontier:
            nxt = []
            for cell in frontier:
                for f, _ in cell.facets_with_normals():
                    if f.key not in seen:
                        seen[f.key] = f
                        nxt.append(f)
            frontier = nxt
        return list(seen.values())

    def smallest_face_at(self, p) -> "HPoly":
        """The face whose relative interior contains p."""
        if not self.contains_point(p):
            raise ValueError("point not in polyhedron")
        tight = [(a, b) for a, b in self.ineq
                 if sum(x * y for x, y in zip(a, p)) == b]
        return HPoly(self.ambient, self.eq + tuple(tight), self.ineq).canonical()

    def recession_cone(self) -> "HPoly":
        eq = tuple((a, _ZERO) for a, _ in self.eq)
        ineq = tuple((a, _ZERO) for a, _ in self.ineq)
        return HPoly(self.ambient, eq, ineq).canonical()

    def localized_cone(self, p) -> "HPoly":
        """Cone of directions v with p + eps*v in the cell for small eps > 0."""
        if not self.contains_point(p):
            raise ValueError("localization point not in cell")
        eq = tuple((a, _ZERO) for a, _ in self.eq)
        ineq = tuple((a, _ZERO) for a, b in self.ineq
                     if sum(x * y for x, y in zip(a, p)) == b)
        return HPoly(self.ambient, eq, ineq).canonical()

    def affine_hull(self) -> "HPoly":
        return HPoly(self.ambient, self.eq, ()).canonical()

    def is_bounded(self) -> bool:
        return self.recession_cone().dim == 0

    def is_cone(self) -> bool:
        zero = tuple([_ZERO] * self.ambient)
        return self.contains_point(zero) and self.recession_cone().same_set(self)

    # -- vertex enumeration (bounded cells) ------------------------------------

    def vertices(self):
        """Vertices of a bounded cell, enumerated in tangent coordinates."""
        if self._vertices is not None:
            return self._vertices
        if not self._canonical:
            raise ValueError("vertices of non-canonical polyhedron")
        if self.is_empty():
            return []
        if not self.is_bounded():
            raise ValueError("vertex enumeration needs a bounded cell")
        d = self.dim
        base = solve([a for a, _ in self.eq], [b for _, b in self.eq]) \
            if self.eq else tuple([_ZERO] * self.ambient)
        if d == 0:
            self._vertices = [tuple(base)]
            return self._vertices
        basis = self.tangent_basis
        # constraints in t-space: a.(base + B^T t) <= b
        cons = []
        for a, b in self.ineq:
            row = tuple(sum(x * y for x, y in zip(a, bv)) for bv in basis)
            rhs = b - sum(x * y for x, y in zip(a, base))
            cons.append((row, rhs))
        verts = {}
        for idx in combinations(range(len(cons)), d):
            rows = [cons[i][0] for i in idx]
            rhs = [cons[i][1] for i in idx]
            if rank(rows) < d:
                continue
            t = solve(rows, rhs)
            if t is None:
                continue
            if all(sum(x * y for x, y in zip(row, t)) <= r for row, r in cons):
                verts[t] = None
        out = []
        for t in verts:
            pt = list(base)
            for c, bv in zip(t, basis):
                pt = [p + c * x for p, x in zip(pt, bv)]
            out.append(tuple(pt))
        out.sort()
        self._vertices = out
        return out

    def __repr__(self):
        if self._empty:
            return f"HPoly(empty, ambient={self.ambient})"
        return f"HPoly(eq={len(self.eq)}, ineq={len(self.ineq)}, ambient={self.ambient})"


# ---------------------------------------------------------------------------
# V-polytopes

def extreme_points(points):
    """Subset of points that are vertices of the convex hull."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 1:
        return pts
    out = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        # p extreme iff p is not a convex combination of the others
        a_eq = [[q[j] for q in others] for j in range(len(p))]
        a_eq.append([_ONE] * len(others))
        b_eq = list(p) + [_ONE]
        res = solve_lp([_ZERO] * len(others),
                       a_ub=[[-_ONE if k == j else _ZERO for k in range(len(others))]
                             for j in range(len(others))],
                       b_ub=[_ZERO] * len(others),
                       a_eq=a_eq, b_eq=b_eq)
        if res.status != OPTIMAL:
            out.append(p)
    return out


@dataclass(frozen=True)
class VPolytope:
    """Bounded rational polytope given by its vertex list (minimal)."""
    vertices: tuple
    rays: tuple = ()

    @staticmethod
    def from_points(points) -> "VPolytope":
        return VPolytope(vertices=tuple(extreme_points(points)))

    @property
    def ambient(self) -> int:
        return len(self.vertices[0])

    @property
    def tangent_basis(self):
        v0 = self.vertices[0]
        diffs = [tuple(a - b for a, b in zip(v, v0)) for v in self.vertices[1:]]
        return rref(diffs)[0] if diffs else []

    @property
    def dim(self) -> int:
        return len(self.tangent_basis)

    def translate(self, vec) -> "VPolytope":
        return VPolytope(vertices=tuple(tuple(a + b for a, b in zip(v, vec))
                                        for v in self.vertices))

    def minkowski(self, other: "VPolytope") -> "VPolytope":
        sums = [tuple(a + b for a, b in zip(u, v))
                for u in self.vertices for v in other.vertices]
        return VPolytope.from_points(sums)

    def scale(self, t) -> "VPolytope":
        return VPolytope(vertices=tuple(tuple(t * x for x in v) for v in self.vertices))

    def _intrinsic(self):
        """Vertex coordinates in the tangent basis (full-dimensional chart)."""
        basis = self.tangent_basis
        v0 = self.vertices[0]
        coords = []
        for v in self.vertices:
            diff = tuple(a - b for a, b in zip(v, v0))
            c = coords_in_basis(list(basis), diff) if basis else ()
            coords.append(tuple(c))
        return coords, v0, basis

    def face_vertex_sets(self):
        """Vertex index sets of all faces, keyed by dimension."""
        coords, _, _ = self._intrinsic()
        d = self.dim
        lattice: dict[int, set] = {d: {frozenset(range(len(self.vertices)))}}
        memo = {}

        def facets_of(idx_set):
            key = frozenset(idx_set)
            if key in memo:
                return memo[key]
            idx = sorted(idx_set)
            pts = [coords[i] for i in idx]
            # local chart for the face
            p0 = pts[0]
            diffs = [tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]
            basis = rref(diffs)[0] if diffs else []
            local = []
            for p in pts:
                diff = tuple(a - b for a, b in zip(p, p0))
                local.append(tuple(coords_in_basis(list(basis), diff)) if basis else ())
            out = _hull_facet_vertex_sets(local)
            result = [frozenset(idx[i] for i in f) for f in out]
            memo[key] = result
            return result

        cur = d
        while cur > 0:
            nxt = set()
            for fset in lattice.get(cur, ()):  # faces of dimension cur
                for sub in facets_of(fset):
                    nxt.add(sub)
            cur -= 1
            lattice[cur] = nxt
        return lattice

    def faces(self, m: int):
        """All m-dimensional faces as VPolytopes."""
        if m < 0 or m > self.dim:
            raise ValueError("face dimension out of range")
        lattice = self.face_vertex_sets()
        out = []
        for fset in sorted(lattice[m], key=lambda s: sorted(s)):
            out.append(VPolytope(vertices=tuple(self.vertices[i] for i in sorted(fset))))
        return out

    def to_hpoly(self) -> HPoly:
        """Convex hull in H-form: affine hull equalities plus facet cuts."""
        ambient = self.ambient
        v0 = self.vertices[0]
        basis = self.tangent_basis
        eq_rows = kernel_basis([list(b) for b in basis], ambient) if basis else \
            [tuple(_ONE if j == i else _ZERO for j in range(ambient)) for i in range(ambient)]
        eqs = []
        for a in eq_rows:
            eqs.append((a, sum(x * y for x, y in zip(a, v0))))
        coords, _, _ = self._intrinsic()
        ineqs = []
        for normal, offset, _tight in _hull_facets(coords):
            # lift the facet normal from the chart to ambient coordinates
            amb = [_ZERO] * ambient
            for c, bvec in zip(normal, basis):
                amb = [a + c * x for a, x in zip(amb, bvec)]
            rhs = offset + sum(x * y for x, y in zip(amb, v0))
            ineqs.append((tuple(amb), rhs))
        return HPoly(ambient, eqs, ineqs).canonical()

    def volume(self) -> Fraction:
        """Volume in the tangent-basis chart (full-dimensional measure)."""
        coords, _, _ = self._intrinsic()
        return _volume_of_full_dim(coords)

    def contains_point(self, p) -> bool:
        return self.to_hpoly().contains_point(p)


def _hull_facets(points):
    """Facets of a full-dimensional point configuration.

    Returns (normal, offset, tight index set) triples with normal . x <=
    offset valid for all points and equality exactly on the tight set.
    """
    d = len(points[0]) if points else 0
    if d == 0:
        return []
    out = {}
    for subset in combinations(range(len(points)), d):
        p0 = points[subset[0]]
        diffs = [tuple(a - b for a, b in zip(points[i], p0)) for i in subset[1:]]
        if rank(diffs) != d - 1:
            continue
        normal = kernel_basis(diffs, d)
        if len(normal) != 1:
            continue
        nvec = scale_primitive(normal[0], lead_positive=True)
        offset = sum(x * y for x, y in zip(nvec, p0))
        if (nvec, offset) in out:
            continue
        lo = hi = False
        for q in points:
            val = sum(x * y for x, y in zip(nvec, q))
            if val > offset:
                hi = True
            elif val < offset:
                lo = True
            if hi and lo:
                break
        if hi and lo:
            continue
        if hi:  # flip so the hull is on the <= side
            nvec = tuple(-x for x in nvec)
            offset = -offset
        tight = frozenset(i for i, q in enumerate(points)
                          if sum(x * y for x, y in zip(nvec, q)) == offset)
        out[(nvec, offset)] = (nvec, offset, tight)
    return list(out.values())


def _hull_facet_vertex_sets(points):
    d = rank([tuple(a - b for a, b in zip(p, points[0])) for p in points[1:]])
    if d == 0:
        return []
    return [tight for _, _, tight in _hull_facets(points)]


def _volume_of_full_dim(points) -> Fraction:
    d = len(points[0]) if points else 0
    if d == 0:
        return Fraction(1)
    total = Fraction(0)
    for simplex in triangulate_full_dim(points):
        p0 = simplex[0]
        mat = [[a - b for a, b in zip(p, p0)] for p in simplex[1:]]
        total += abs(det(mat))
    import math
    return total / math.factorial(d)


def triangulate_full_dim(points):
    """Simplices (as vertex tuples) covering conv(points), full-dim chart."""
    pts = sorted(set(tuple(p) for p in points))
    d = len(pts[0]) if pts else 0
    if d == 0:
        return [tuple(pts)]
    diffs = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
    intrinsic_dim = rank(diffs)
    if intrinsic_dim < d:
        return []
    apex = pts[0]
    simplices = []
    for nvec, offset, tight in _hull_facets(pts):
        if sum(x * y for x, y in zip(nvec, apex)) == offset:
            continue  # apex on this facet, cone is flat
        face_pts = [pts[i] for i in sorted(tight)]
        # chart for the facet
        q0 = face_pts[0]
        fdiffs = [tuple(a - b for a, b in zip(p, q0)) for p in face_pts[1:]]
        fbasis = rref(fdiffs)[0]
        local = []
        for p in face_pts:
            diff = tuple(a - b for a, b in zip(p, q0))
            local.append(tuple(coords_in_basis(list(fbasis), diff)))
        for sub in triangulate_full_dim(local):
            lifted = []
            for lp_ in sub:
                pt = list(q0)
                for c, bvec in zip(lp_, fbasis):
                    pt = [a + c * x for a, x in zip(pt, bvec)]
                lifted.append(tuple(pt))
            simplices.append(tuple([apex] + lifted))
    return simplices


def triangulate_cell(cell: HPoly):
    """Simplices covering a bounded cell, in ambient coordinates."""
    verts = cell.vertices()
    if not verts:
        return []
    d = cell.dim
    if d == 0:
        return [tuple(verts)]
    basis = cell.tangent_basis
    v0 = verts[0]
    local = []
    for v in verts:
        diff = tuple(a - b for a, b in zip(v, v0))
        local.append(tuple(coords_in_basis(list(basis), diff)))
    out = []
    for simplex in triangulate_full_dim(local):
        lifted = []
        for lp_ in simplex:
            pt = list(v0)
            for c, bvec in zip(lp_, basis):
                pt = [a + c * x for a, x in zip(pt, bvec)]
            lifted.append(tuple(pt))
        out.append(tuple(lifted))
    return out


# ---------------------------------------------------------------------------
# volume multivectors

def volume_multivector(face: VPolytope, basis):
    """The odd multivector p with integral(omega) = omega(p) for volume forms.

    `basis` is the orientation token: an ordered basis of the face tangent
    space.  The result is basis-chart volume times the basis blade, as an
    ambient multivector.
    """
    from .exterior import Alt, wedge_all
    if face.rays:
        raise ValueError("volume multivector needs a bounded face")
    m = len(basis)
    if m == 0:
        return Alt.scalar(_ONE)
    v0 = face.vertices[0]
    coords = []
    for v in face.vertices:
        diff = tuple(a - b for a, b in zip(v, v0))
        c = coords_in_basis(list(basis), diff)
        if c is None:
            raise ValueError("orientation token does not span the face")
        coords.append(tuple(c))
    vol = _volume_of_full_dim(coords)
    blade = wedge_all([Alt(1, {(i,): x for i, x in enumerate(b) if x != 0})
                       for b in basis])
    return blade.scale(vol)


# ---------------------------------------------------------------------------
# dual cones

def dual_cone(gamma: VPolytope, delta: VPolytope) -> HPoly:
    """Cone of z where max over gamma of Re<z, .> is attained on all of delta."""
    from .exterior import real_functional_of_dual_point
    ambient = gamma.ambient
    dverts = set(delta.vertices)
    if not dverts <= set(gamma.vertices):
        raise ValueError("delta is not a face of gamma")
    u0 = delta.vertices[0]
    eqs = []
    for u in delta.vertices[1:]:
        diff = tuple(a - b for a, b in zip(u, u0))
        eqs.append((real_functional_of_dual_point(diff), _ZERO))
    ineqs = []
    for v in gamma.vertices:
        if v in dverts:
            continue
        diff = tuple(a - b for a, b in zip(v, u0))
        ineqs.append((real_functional_of_dual_point(diff), _ZERO))
    return HPoly(ambient, eqs, ineqs).canonical()


# ---------------------------------------------------------------------------
# polyhedral sets

@dataclass
class PolyhedralSet:
    """Finite k-dimensional complex: top cells plus derived skeleton."""
    k: int
    ambient: int
    cells: list = field(default_factory=list)
    _skeleton: dict | None = None

    @staticmethod
    def from_cells(k: int, ambient: int, cells, validate=False) -> "PolyhedralSet":
        canon = {}
        for c in cells:
            cc = c.canonical()
            if cc.is_empty():
                continue
            if cc.dim != k:
                raise ValueError(f"cell of dim {cc.dim} in a {k}-complex")
            canon[cc.key] = cc
        out = PolyhedralSet(k=k, ambient=ambient, cells=sorted(canon.values(),
                                                               key=lambda c: repr(c.key)))
        if validate:
            out.validate_face_to_face()
        return out

    def validate_face_to_face(self):
        for i, a in enumerate(self.cells):
            for b in self.cells[i + 1:]:
                inter = a.intersect(b).canonical()
                if inter.is_empty():
                    continue
                p = inter.relint_point()
                for cell in (a, b):
                    face = cell.smallest_face_at(p)
                    if face.key != inter.key:
                        raise ValueError("cells do not intersect in a common face")

    def skeleton_with_incidence(self):
        """(k-1)-faces of the top cells with the adjacency map."""
        if self._skeleton is None:
            faces: dict = {}
            for ci, cell in enumerate(self.cells):
                for f, normal in cell.facets_with_normals():
                    entry = faces.setdefault(f.key, (f, []))
                    entry[1].append((ci, normal))
            self._skeleton = faces
        return self._skeleton

    def support_contains(self, p) -> bool:
        return any(c.contains_point(p) for c in self.cells)


def hyperplane_key(coeffs, rhs):
    vec = scale_primitive(tuple(coeffs) + (rhs,), lead_positive=True)
    return vec[:-1], vec[-1]


def hyperplanes_of_cells(cells):
    """Canonical hyperplanes carrying all constraints of the given cells."""
    seen = {}
    for cell in cells:
        for a, b in cell.eq + cell.ineq:
            if any(x != 0 for x in a):
                seen.setdefault(hyperplane_key(a, b), None)
    return list(seen.keys())


def split_by_hyperplanes(cell: HPoly, hyperplanes):
    """Arrangement pieces of the cell of full cell dimension.

    Only hyperplanes strictly straddled by the cell produce cuts, which is
    exactly the set of arrangement walls meeting the cell's interior.
    """
    pieces = [cell.canonical()]
    for a, b in hyperplanes:
        nxt = []
        for piece in pieces:
            lo = piece.minimize(a)
            hi = piece.maximize(a)
            lo_cross = lo.status == UNBOUNDED or (lo.status == OPTIMAL and lo.value < b)
            hi_cross = hi.status == UNBOUNDED or (hi.status == OPTIMAL and hi.value > b)
            if lo_cross and hi_cross:
                below = piece.with_constraint(a, b).canonical()
                above = piece.with_constraint(tuple(-x for x in a), -b).canonical()
                nxt.extend(p for p in (below, above) if not p.is_empty())
            else:
                nxt.append(piece)
        pieces = nxt
    return pieces


def common_refinement(x: PolyhedralSet, y: PolyhedralSet) -> tuple:
    """Refine both complexes over the union of their constraint hyperplanes.

    Returns (pieces of x cells, pieces of y cells, refined union complex).
    Every piece is a cell of the global hyperplane arrangement restricted
    to its parent, so the union is face-to-face.
    """
    hyps = hyperplanes_of_cells(list(x.cells) + list(y.cells))
    px = {}
    for ci, cell in enumerate(x.cells):
        px[ci] = split_by_hyperplanes(cell, hyps)
    py = {}
    for ci, cell in enumerate(y.cells):
        py[ci] = split_by_hyperplanes(cell, hyps)
    union = {}
    for parts in list(px.values()) + list(py.values()):
        for p in parts:
            union[p.key] = p
    k = max(x.k, y.k)
    refined = PolyhedralSet(k=k, ambient=x.ambient,
                            cells=sorted(union.values(), key=lambda c: repr(c.key)))
    return px, py, refined


def refine_complex(x: PolyhedralSet, extra_hyperplanes=()) -> dict:
    """Self-refinement pieces of every cell over the complex's hyperplanes."""
    hyps = hyperplanes_of_cells(list(x.cells))
    hyps.extend(h for h in extra_hyperplanes if h not in hyps)
    return {ci: split_by_hyperplanes(cell, hyps) for ci, cell in enumerate(x.cells)}


def localization(x: PolyhedralSet, theta: HPoly) -> PolyhedralSet:
    """Fan of direction cones of the cells around a cell of the complex.

    The fan agrees with the complex shifted by an interior point of theta
    near the origin; its minimal cone is the direction space of theta.
    """
    theta = theta.canonical()
    p = theta.relint_point()
    cones = []
    found = False
    for cell in x.cells:
        if cell.contains_point(p):
            cones.append(cell.localized_cone(p))
            found = True
    if not found:
        raise ValueError("cell is not part of the complex")
    return PolyhedralSet.from_cells(x.k, x.ambient, cones)
