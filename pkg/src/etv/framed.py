"""Framed polyhedral complexes and the group of tropical cycles.

A framed set is a k-dimensional complex whose top cells carry odd complex
forms of degree 2n-k, always stored relative to the cell's canonical
tangent basis.  Validity of a framed set as a cycle means: every frame
restricts real-valued to its cell, vanishes on the cell's maximal complex
subspace, degenerate cells carry zero frames, and the boundary cancels.

Because canonical tangent bases depend only on the direction space of a
cell, refining or translating cells never changes the reference
orientation, so frames can be compared and summed directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exterior import (Alt, evaluate_cform, max_complex_subspace,
                       quotient_pushforward, restrict)
from .linalg import basis_change_sign, kernel_basis
from .polyhedra import (HPoly, PolyhedralSet, common_refinement,
                        hyperplanes_of_cells, split_by_hyperplanes,
                        triangulate_cell)
from .polynomials import Poly
from .scalars import CRat

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class FramedCell:
    poly: HPoly   # canonical
    frame: Alt    # complex form at the orientation of poly.tangent_basis

    def translated(self, vec) -> "FramedCell":
        return FramedCell(self.poly.translate(vec), self.frame)


class FramedSet:
    """k-dimensional cells with degree-(2n-k) frames in C^n (ambient R^{2n})."""

    def __init__(self, n: int, k: int, cells=()):
        self.n = n
        self.k = k
        self.cells = []
        for c in cells:
            poly = c.poly.canonical()
            if poly.is_empty():
                continue
            if poly.dim != k:
                raise ValueError(f"cell of dimension {poly.dim} in a {k}-dim framed set")
            self.cells.append(FramedCell(poly, c.frame))
        self.cells.sort(key=lambda c: repr(c.poly.key))

    @property
    def ambient(self) -> int:
        return 2 * self.n

    def support_cells(self):
        return [c for c in self.cells if not c.frame.is_zero()]

    def frame_at(self, p) -> Alt:
        for c in self.cells:
            if not c.frame.is_zero() and c.poly.contains_point(p):
                return c.frame
        return Alt(2 * self.n - self.k)

    def carrier(self) -> PolyhedralSet:
        return PolyhedralSet.from_cells(self.k, self.ambient,
                                        [c.poly for c in self.support_cells()])

    def translated(self, vec) -> "FramedSet":
        return FramedSet(self.n, self.k, [c.translated(vec) for c in self.cells])

    def scaled(self, t) -> "FramedSet":
        return FramedSet(self.n, self.k,
                         [FramedCell(c.poly, c.frame.scale(t)) for c in self.cells])

    def __repr__(self):
        return f"FramedSet(n={self.n}, k={self.k}, cells={len(self.cells)})"


# ---------------------------------------------------------------------------
# boundary

def induced_facet_sign(cell: HPoly, facet: HPoly, ineq) -> int:
    """Outward-first induced orientation of the facet vs its canonical basis.

    +1 when (outward vector, canonical facet basis) matches the cell's
    canonical orientation.
    """
    a, _ = ineq
    outward = None
    for v in cell.tangent_basis:
        d = sum(x * y for x, y in zip(a, v))
        if d != 0:
            outward = v if d > 0 else tuple(-x for x in v)
            break
    if outward is None:
        raise ValueError("inequality does not cut the cell's tangent space")
    frm = [outward] + list(facet.tangent_basis)
    return basis_change_sign(frm, list(cell.tangent_basis))


def boundary(x: FramedSet) -> FramedSet:
    """Frames of facets summed with outward-first induced orientations."""
    acc: dict = {}
    for c in x.cells:
        if c.frame.is_zero():
            continue
        for facet, ineq in c.poly.facets_with_normals():
            s = induced_facet_sign(c.poly, facet, ineq)
            add = c.frame if s > 0 else -c.frame
            if facet.key in acc:
                poly, cur = acc[facet.key]
                acc[facet.key] = (poly, cur + add)
            else:
                acc[facet.key] = (facet, add)
    cells = [FramedCell(poly, frame) for poly, frame in acc.values()]
    out = FramedSet(x.n, x.k - 1, cells)
    return out


def is_closed(x: FramedSet) -> bool:
    return not boundary(x).support_cells()


# ---------------------------------------------------------------------------
# validity

@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    witness: str | None = None


def is_etp(x: FramedSet) -> ValidityReport:
    """Check the cycle conditions; the witness names the first failure."""
    if x.k < x.n:
        raise ValueError("dimension below n cannot carry a cycle structure")
    deg = 2 * x.n - x.k
    for i, c in enumerate(x.cells):
        if c.frame.is_zero():
            continue
        if c.frame.degree != deg:
            return ValidityReport(False, f"cell {i}: frame degree {c.frame.degree} != {deg}")
        basis = c.poly.tangent_basis
        _, degenerate = max_complex_subspace(list(basis))
        if degenerate:
            return ValidityReport(False, f"cell {i}: degenerate cell with nonzero frame")
        restricted, real = restrict(c.frame, list(basis))
        if not real:
            return ValidityReport(False, f"cell {i}: restriction not real-valued")
        pf = quotient_pushforward(c.frame, basis)
        if not pf.kills_complex:
            return ValidityReport(False,
                                  f"cell {i}: frame does not vanish on the complex subspace")
    bd = boundary(x)
    for c in bd.cells:
        if not c.frame.is_zero():
            return ValidityReport(False, "boundary support nonempty")
    return ValidityReport(True)


# ---------------------------------------------------------------------------
# positivity

def cell_sign(frame: Alt, tangent_basis) -> int:
    """Sign of the quotient volume form: +1, -1, or 0."""
    return quotient_pushforward(frame, tangent_basis).sign


def cell_weight(frame: Alt, tangent_basis) -> Fraction:
    """Density of the frame against the unit positive frame of the subspace."""
    pf = quotient_pushforward(frame, tangent_basis)
    if pf.density.im != 0:
        raise ValueError("weight of a non-real frame")
    return pf.density.re


def unit_positive_frame(tangent_basis, n: int) -> Alt:
    """The positive generator of frames on a nondegenerate subspace.

    Valid frames on a fixed subspace form a one-dimensional real space;
    this returns the representative of quotient density one.
    """
    k = len(tangent_basis)
    m = 2 * n - k
    keys = list(combinations(range(n), m))
    nk = len(keys)
    rows = []
    for tup in combinations(range(k), m):
        args = [tangent_basis[i] for i in tup]
        row_a = []
        row_b = []
        for key in keys:
            minor = evaluate_cform(Alt(m, {key: CRat(1)}), args)
            row_a.append(minor.im)
            row_b.append(minor.re)
        rows.append(tuple(row_a + row_b))
    ker = kernel_basis(rows, 2 * nk)
    candidates = []
    for vec in ker:
        terms = {}
        for j, key in enumerate(keys):
            val = CRat(vec[j], vec[nk + j])
            if not val.is_zero():
                terms[key] = val
        form = Alt(m, terms)
        if not form.is_zero():
            pf = quotient_pushforward(form, tangent_basis)
            if pf.sign != 0:
                candidates.append((form, pf.density.re))
    if not candidates:
        raise ValueError("no positive frame: subspace is degenerate")
    form, density = candidates[0]
    return form.scale(CRat(1 / density))


def is_positive(p) -> bool:
    for c in _framed(p).support_cells():
        if cell_sign(c.frame, c.poly.tangent_basis) < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# canonical representatives

class EtvRep:
    """Canonical representative of a cycle class (validated, zero-free, merged)."""

    def __init__(self, framed: FramedSet, _checked=False):
        if not _checked:
            raise ValueError("use canonicalize() to build canonical representatives")
        self.framed = framed

    @property
    def n(self):
        return self.framed.n

    @property
    def k(self):
        return self.framed.k

    @property
    def dim(self):
        """Cycle dimension k - n."""
        return self.framed.k - self.framed.n

    def is_zero(self) -> bool:
        return not self.framed.cells

    def cells(self):
        return self.framed.cells

    def __repr__(self):
        return f"EtvRep(n={self.n}, k={self.k}, cells={len(self.framed.cells)})"


def _framed(p) -> FramedSet:
    return p.framed if isinstance(p, EtvRep) else p


def _mergeable(a: FramedCell, b: FramedCell, others, ambient):
    if a.frame != b.frame:
        return None
    if a.poly.eq != b.poly.eq:
        return None
    valid = []
    for coeffs, rhs in a.poly.ineq:
        res = b.poly.maximize(coeffs)
        if res.status == "optimal" and res.value <= rhs:
            valid.append((coeffs, rhs))
    for coeffs, rhs in b.poly.ineq:
        res = a.poly.maximize(coeffs)
        if res.status == "optimal" and res.value <= rhs:
            valid.append((coeffs, rhs))
    merged = HPoly(ambient, a.poly.eq, tuple(valid)).canonical()
    # merged must be exactly the union
    for piece in split_by_hyperplanes(merged, hyperplanes_of_cells([a.poly, b.poly])):
        q = piece.relint_point()
        if not (a.poly.contains_point(q) or b.poly.contains_point(q)):
            return None
    # merging must not break the face-to-face property with the rest
    for o in others:
        inter = merged.intersect(o.poly).canonical()
        if inter.is_empty():
            continue
        q = inter.relint_point()
        if merged.smallest_face_at(q).key != inter.key:
            return None
        if o.poly.smallest_face_at(q).key != inter.key:
            return None
    return merged


def canonicalize(x, validate=True) -> EtvRep:
    """Drop zero frames and greedily merge coplanar equal-framed neighbors."""
    x = _framed(x)
    if validate:
        report = is_etp(x)
        if not report.ok:
            raise ValueError(f"not a valid cycle: {report.witness}")
    cells = [c for c in x.cells if not c.frame.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(cells)):
            for j in range(i + 1, len(cells)):
                others = [cells[t] for t in range(len(cells)) if t not in (i, j)]
                merged = _mergeable(cells[i], cells[j], others, x.ambient)
                if merged is not None:
                    frame = cells[i].frame
                    cells = others + [FramedCell(merged, frame)]
                    changed = True
                    break
            if changed:
                break
    return EtvRep(FramedSet(x.n, x.k, cells), _checked=True)


def zero_etv(n: int, k: int) -> EtvRep:
    return EtvRep(FramedSet(n, k, []), _checked=True)


# ---------------------------------------------------------------------------
# group structure

def equivalent(p, q) -> bool:
    """Same cycle class: frames agree on the common refinement of supports."""
    x = _framed(p)
    y = _framed(q)
    if x.n != y.n:
        raise ValueError("ambient mismatch")
    xs = x.support_cells()
    ys = y.support_cells()
    if not xs and not ys:
        return True
    if not xs or not ys:
        return not xs and not ys
    if x.k != y.k:
        return False
    cx = PolyhedralSet.from_cells(x.k, x.ambient, [c.poly for c in xs])
    cy = PolyhedralSet.from_cells(y.k, y.ambient, [c.poly for c in ys])
    _, _, refined = common_refinement(cx, cy)
    for cell in refined.cells:
        pt = cell.relint_point()
        if x.frame_at(pt) != y.frame_at(pt):
            return False
    return True


def add(p, q) -> EtvRep:
    """Sum of cycles: frames added on the common refinement."""
    x = _framed(p)
    y = _framed(q)
    if x.n != y.n:
        raise ValueError("ambient mismatch")
    if not x.support_cells():
        return q if isinstance(q, EtvRep) else canonicalize(y, validate=False)
    if not y.support_cells():
        return p if isinstance(p, EtvRep) else canonicalize(x, validate=False)
    if x.k != y.k:
        raise ValueError("dimension mismatch in sum")
    cx = PolyhedralSet.from_cells(x.k, x.ambient, [c.poly for c in x.support_cells()])
    cy = PolyhedralSet.from_cells(y.k, y.ambient, [c.poly for c in y.support_cells()])
    _, _, refined = common_refinement(cx, cy)
    cells = []
    for cell in refined.cells:
        pt = cell.relint_point()
        frame = x.frame_at(pt) + y.frame_at(pt)
        cells.append(FramedCell(cell, frame))
    return canonicalize(FramedSet(x.n, x.k, cells), validate=False)


def scale(t, p) -> EtvRep:
    x = _framed(p)
    t = Fraction(t) if not isinstance(t, (Fraction, CRat)) else t
    if t == 0:
        return zero_etv(x.n, x.k)
    return canonicalize(x.scaled(t), validate=False)


def negate(p) -> EtvRep:
    return scale(Fraction(-1), p)


def translate(p, vec) -> EtvRep:
    x = _framed(p)
    return canonicalize(x.translated(vec), validate=False)


def split_positive(p) -> tuple[EtvRep, EtvRep]:
    """P = P+ - P- with both parts positive.

    P- is a sum of single-celled full-plane cycles over the affine hulls of
    the cells of P, with minimal integer multiples of the unit positive
    frame making every cell of P + P- nonnegative.
    """
    x = _framed(p)
    hull_needs: dict = {}
    hull_poly: dict = {}
    for c in x.support_cells():
        hull = c.poly.affine_hull()
        w = cell_weight(c.frame, c.poly.tangent_basis)
        cur = hull_needs.get(hull.key, _ZERO)
        hull_needs[hull.key] = min(cur, w)
        hull_poly[hull.key] = hull
    plane_cells = []
    for key, wmin in hull_needs.items():
        if wmin >= 0:
            continue
        c_int = -(-(-wmin).numerator // (-wmin).denominator)  # ceil(-wmin)
        hull = hull_poly[key]
        gen = unit_positive_frame(hull.tangent_basis, x.n)
        plane_cells.append(FramedCell(hull, gen.scale(Fraction(c_int))))
    if not plane_cells:
        return (canonicalize(x, validate=False), zero_etv(x.n, x.k))
    pminus = canonicalize(FramedSet(x.n, x.k, plane_cells), validate=False)
    pplus = add(p, pminus)
    return (pplus, pminus)


def irreducible_components(p) -> list[EtvRep]:
    """Connected components under the shared-facet neighbor relation."""
    x = _framed(p)
    cells = x.support_cells()
    if not cells:
        return []
    parent = list(range(len(cells)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            inter = cells[i].poly.intersect(cells[j].poly).canonical()
            if not inter.is_empty() and inter.dim == x.k - 1:
                parent[find(i)] = find(j)
    groups: dict = {}
    for i in range(len(cells)):
        groups.setdefault(find(i), []).append(cells[i])
    out = []
    for root in sorted(groups, key=lambda r: repr(cells[r].poly.key)):
        out.append(EtvRep(FramedSet(x.n, x.k, groups[root]), _checked=True))
    return out


# ---------------------------------------------------------------------------
# currents

@dataclass(frozen=True)
class TestForm:
    """Real form with polynomial coefficients over a bounded box window."""
    degree: int
    terms: tuple            # ((index tuple, Poly), ...)
    window: tuple           # ((lo, hi), ...) per ambient coordinate

    __test__ = False        # keep pytest collection away

    def nvars(self):
        return len(self.window)


def constant_test_form(window, degree=0, indices=(), value=Fraction(1)) -> TestForm:
    nv = len(window)
    if degree == 0:
        return TestForm(0, (((), Poly.const(nv, value)),), tuple(window))
    return TestForm(degree, ((tuple(indices), Poly.const(nv, value)),), tuple(window))


def exterior_derivative(tf: TestForm) -> TestForm:
    from .exterior import _merge_keys
    nv = tf.nvars()
    acc: dict = {}
    for key, poly in tf.terms:
        for v in range(nv):
            d = poly.derivative(v)
            if d.is_zero():
                continue
            merged, sign = _merge_keys((v,), tuple(key))
            if merged is None:
                continue
            cur = acc.get(merged)
            addition = d if sign > 0 else -d
            acc[merged] = addition if cur is None else cur + addition
    terms = tuple((k, p) for k, p in sorted(acc.items()) if not p.is_zero())
    return TestForm(tf.degree + 1, terms, tf.window)


def window_poly(ambient: int, window) -> HPoly:
    ineq = []
    for i, (lo, hi) in enumerate(window):
        row = [_ZERO] * ambient
        row[i] = _ONE
        ineq.append((tuple(row), hi))
        row = [_ZERO] * ambient
        row[i] = -_ONE
        ineq.append((tuple(row), -lo))
    return HPoly(ambient, (), ineq).canonical()


def _shuffle_sign(s_tuple, t_tuple):
    inv = 0
    for a in s_tuple:
        for b in t_tuple:
            if b < a:
                inv += 1
    return -1 if inv % 2 else 1


def evaluate_current(p, tf: TestForm) -> Fraction:
    """Exact integral sum over cells of (restricted frame) wedge (test form)."""
    x = _framed(p)
    deg_frame = 2 * x.n - x.k
    if deg_frame + tf.degree != x.k:
        raise ValueError("test form degree does not complement the frame degree")
    box = window_poly(x.ambient, tf.window)
    total = _ZERO
    for c in x.support_cells():
        region = c.poly.intersect(box).canonical()
        if region.is_empty() or region.dim < x.k:
            continue
        for simplex in triangulate_cell(region):
            v0 = simplex[0]
            edges = [tuple(a - b for a, b in zip(v, v0)) for v in simplex[1:]]
            sign = basis_change_sign(edges, list(c.poly.tangent_basis))
            integrand = Poly.const(x.k, 0)
            for s_tup in combinations(range(x.k), deg_frame):
                t_tup = tuple(i for i in range(x.k) if i not in s_tup)
                fval = evaluate_cform(c.frame, [edges[i] for i in s_tup])
                if fval.im != 0:
                    raise ValueError("frame restriction not real on a cell")
                if fval.re == 0:
                    continue
                shuffle = _shuffle_sign(s_tup, t_tup)
                phi_poly = Poly.const(x.k, 0)
                for key, coeff in tf.terms:
                    if len(key) != tf.degree:
                        raise ValueError("malformed test form term")
                    from .linalg import det as _det
                    minor = [[edges[i][j] for j in key] for i in t_tup]
                    dval = _det(minor) if key else _ONE
                    if dval == 0:
                        continue
                    phi_poly = phi_poly + coeff.subs_affine(v0, edges) * dval
                integrand = integrand + phi_poly * (fval.re * shuffle)
            val = integrand.integral_over_standard_simplex()
            total += sign * val
    return total
