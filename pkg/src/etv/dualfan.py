"""Homogeneous cycles from convex polytopes in the dual space.

For a bounded rational polytope in the dual space, the fan of dual cones
of its m-faces carries frames (-i)^m rho(p_face), где p_face is the odd
volume multivector of the face.  The sign of each frame is coordinated
through the nondegenerate pairing Im<z, z*> between the cone's quotient
space and the face tangent space: the frame is stored at the cell
orientation (Q, complex-standard) where the pairing determinant of
(Q, face basis) is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exterior import (Alt, apply_J, max_complex_subspace,
                       oriented_quotient_basis, pairing, rho, wedge)
from .framed import EtvRep, FramedCell, FramedSet, canonicalize, induced_facet_sign
from .linalg import det, rref
from .polyhedra import HPoly, VPolytope, dual_cone, volume_multivector
from .scalars import CRat


def face_is_degenerate(face: VPolytope) -> bool:
    """dim of the face exceeds the complex dimension of its complex span."""
    basis = list(face.tangent_basis)
    if not basis:
        return False
    span = list(basis) + [apply_J(v) for v in basis]
    dim_c = len(rref(span)[0]) // 2
    return len(basis) > dim_c


def symplectic_orientation_sign(basis_q, basis_f) -> int:
    """Sign of det[Im <q_i, f_j>]: the orientation the symplectic power
    assigns to (basis_q followed by basis_f)."""
    if len(basis_q) != len(basis_f):
        raise ValueError("pairing needs equal dimensions")
    if not basis_q:
        return 1
    mat = [[pairing(q, f).im for f in basis_f] for q in basis_q]
    d = det(mat)
    if d == 0:
        raise ValueError("degenerate pairing between quotient and face")
    return 1 if d > 0 else -1


def minus_i_power(m: int) -> CRat:
    return [CRat(1), CRat(0, -1), CRat(-1), CRat(0, 1)][m % 4]


@dataclass
class DualFanEtp:
    """Dual-fan cycle of a polytope: cones keyed by the faces they refine."""
    gamma: VPolytope
    k: int
    result: EtvRep
    face_map: list   # (face, cone, frame) triples, degenerate faces framed zero

    def framed_rep(self) -> FramedSet:
        """The unmerged fan representative; support functions are linear on
        each of its cones."""
        n = self.gamma.ambient // 2
        return FramedSet(n, self.k,
                         [FramedCell(cone, frame) for _, cone, frame in self.face_map])


def dual_fan_frame(face: VPolytope, cone: HPoly, n: int) -> Alt:
    """Frame of the dual cone of a nondegenerate face, at the cone's
    canonical orientation."""
    m = len(face.tangent_basis)
    fbasis = list(face.tangent_basis)
    p_face = volume_multivector(face, fbasis)
    w = rho(p_face).scale(minus_i_power(m))
    tangent = cone.tangent_basis
    c_basis, degenerate = max_complex_subspace(list(tangent))
    if degenerate:
        raise ValueError("dual cone of a nondegenerate face cannot be degenerate")
    quotient = oriented_quotient_basis(tangent, c_basis)
    sign = symplectic_orientation_sign(quotient, fbasis)
    return w if sign > 0 else -w


def dual_fan_etp(gamma: VPolytope, k: int, validate=True) -> DualFanEtp:
    """The homogeneous k-cycle of dual cones of (2n-k)-faces of gamma."""
    n = gamma.ambient // 2
    if not n <= k <= 2 * n:
        raise ValueError(f"k={k} outside [{n}, {2 * n}]")
    m = 2 * n - k
    if m > gamma.dim:
        raise ValueError(f"polytope has no faces of dimension {m}")
    face_map = []
    cells = []
    for face in gamma.faces(m):
        cone = dual_cone(gamma, face)
        if face_is_degenerate(face):
            frame = Alt(m)
        else:
            frame = dual_fan_frame(face, cone, n)
        face_map.append((face, cone, frame))
        cells.append(FramedCell(cone, frame))
    framed = FramedSet(n, k, cells)
    result = canonicalize(framed, validate=validate)
    return DualFanEtp(gamma=gamma, k=k, result=result, face_map=face_map)


def valid_k_range(gamma: VPolytope):
    n = gamma.ambient // 2
    return range(max(n, 2 * n - gamma.dim), 2 * n + 1)


# ---------------------------------------------------------------------------
# cocycle checks

def _oriented_facets(face_poly: HPoly):
    """Facets of a face (as H-cell) with induced-orientation signs."""
    out = []
    for facet, ineq in face_poly.facets_with_normals():
        out.append((facet, induced_facet_sign(face_poly, facet, ineq)))
    return out


def pascal_check(gamma: VPolytope, m: int) -> bool:
    """Oriented volume multivectors of m-faces sum to zero around every
    (m+1)-face; the complexified cochain also vanishes beyond dimension n."""
    if m < 0 or m > gamma.dim:
        raise ValueError("face dimension out of range")
    n = gamma.ambient // 2
    if m + 1 <= gamma.dim:
        for face in gamma.faces(m + 1):
            face_poly = face.to_hpoly()
            total = Alt(m)
            for sub_poly, sign in _oriented_facets(face_poly):
                sub = VPolytope.from_points(sub_poly.vertices())
                p_sub = volume_multivector(sub, list(sub_poly.tangent_basis))
                total = total + (p_sub if sign > 0 else -p_sub)
            if not total.is_zero():
                return False
    if m > n:
        for face in gamma.faces(m):
            basis = list(face.tangent_basis)
            if not rho(volume_multivector(face, basis)).is_zero():
                return False
    return True


def volume_recursion_check(gamma: VPolytope, m: int) -> bool:
    """rho(p) of every (m+1)-face equals the cone recursion over its m-faces,
    for two independent choices of the base points."""
    if m + 1 > gamma.dim:
        raise ValueError("no faces of dimension m+1")
    for face in gamma.faces(m + 1):
        face_poly = face.to_hpoly()
        lhs = rho(volume_multivector(VPolytope.from_points(face_poly.vertices()),
                                     list(face_poly.tangent_basis)))
        for choice in (0, 1):
            total = Alt(m + 1)
            for sub_poly, sign in _oriented_facets(face_poly):
                verts = sub_poly.vertices()
                w = verts[choice % len(verts)]
                sub = VPolytope.from_points(verts)
                p_sub = rho(volume_multivector(sub, list(sub_poly.tangent_basis)))
                if sign < 0:
                    p_sub = -p_sub
                w_vec = rho(Alt(1, {(i,): x for i, x in enumerate(w) if x != 0}))
                total = total + wedge(w_vec, p_sub)
            if total.scale(CRat(Fraction(1, m + 1))) != lhs:
                return False
    return True


def real_volume_recursion_check(gamma: VPolytope, m: int) -> bool:
    """The real multivector recursion, prior to complexification."""
    if m + 1 > gamma.dim:
        raise ValueError("no faces of dimension m+1")
    for face in gamma.faces(m + 1):
        face_poly = face.to_hpoly()
        lhs = volume_multivector(VPolytope.from_points(face_poly.vertices()),
                                 list(face_poly.tangent_basis))
        total = Alt(m + 1)
        for sub_poly, sign in _oriented_facets(face_poly):
            verts = sub_poly.vertices()
            sub = VPolytope.from_points(verts)
            p_sub = volume_multivector(sub, list(sub_poly.tangent_basis))
            if sign < 0:
                p_sub = -p_sub
            w_vec = Alt(1, {(i,): x for i, x in enumerate(verts[0]) if x != 0})
            total = total + wedge(w_vec, p_sub)
        if total.scale(Fraction(1, m + 1)) != lhs:
            return False
    return True
