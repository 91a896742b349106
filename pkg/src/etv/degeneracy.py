"""Zero-value criterion for mixed products and its constructive witnesses.

A family of nonempty finite covector sets is degenerate when every
transversal selection is linearly dependent.  The witness algorithm
follows the constructive narrowing: grow a maximal nondegenerate
subfamily with independent representatives, then repeatedly shrink to the
subfamily whose sets lie in the span of their own representatives; the
loop ends with p sets inside a (p-1)-dimensional subspace.

The same machinery runs over Q (real bodies, mixed volumes) and over Q(i)
(hyperplane equations of corner loci).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exterior import real_covector_to_ccov
from .framed import EtvRep
from .linalg import kernel_basis, rank, rref
from .monge import AffineFunc, PLFunction, corner_locus
from .scalars import CRat

_ZERO = Fraction(0)


@dataclass(frozen=True)
class VectorFamily:
    """Nonempty finite sets of nonzero covectors in an n-dim complex space."""
    n: int
    sets: tuple   # tuple of tuples of CRat-coordinate covectors

    def __post_init__(self):
        for s in self.sets:
            if not s:
                raise ValueError("family sets must be nonempty")
            for v in s:
                if all(c.is_zero() for c in v):
                    raise ValueError("family vectors must be nonzero")

    @property
    def k(self):
        return len(self.sets)


@dataclass(frozen=True)
class DegeneracyWitness:
    p: int
    set_indices: tuple     # indices of B_1..B_p in the family
    subspace_basis: tuple  # (p-1) covectors spanning H

    def validate(self, family: VectorFamily) -> bool:
        basis = list(self.subspace_basis)
        if len(rref(basis)[0]) != self.p - 1:
            return False
        if len(self.set_indices) != self.p:
            return False
        for i in self.set_indices:
            for v in family.sets[i]:
                if rank(basis + [v]) > self.p - 1:
                    return False
        return True


def _extend_transversal(sets, chosen):
    """Backtracking search for an independent transversal of the sets."""
    if not sets:
        return []
    head, tail = sets[0], sets[1:]
    for v in head:
        if rank(chosen + [v]) > len(chosen):
            rest = _extend_transversal(tail, chosen + [v])
            if rest is not None:
                return [v] + rest
    return None


def _subfamily_transversal(family: VectorFamily, indices):
    return _extend_transversal([family.sets[i] for i in indices], [])


def is_nondegenerate(family: VectorFamily) -> bool:
    """Some selection of one vector per set is linearly independent."""
    if family.k > family.n:
        return False
    return _subfamily_transversal(family, range(family.k)) is not None


def _span_contains_set(basis, vectors) -> bool:
    r = len(basis)
    return all(rank(list(basis) + [v]) == r for v in vectors)


def degeneracy_witness(family: VectorFamily) -> DegeneracyWitness:
    """Constructive witness: p sets inside a (p-1)-dim subspace.

    Implements the narrowing proof: maximal nondegenerate subfamily with
    representatives c_i, an outside set C whose span lies in span(c_i),
    then repeated restriction to the sets contained in the current span.
    """
    if is_nondegenerate(family):
        raise ValueError("family is nondegenerate; no witness exists")
    chosen: list = []
    reps: list = []
    for i in range(family.k):
        transversal = _subfamily_transversal(family, chosen + [i])
        if transversal is not None:
            chosen.append(i)
            reps = transversal
    outside = next(i for i in range(family.k) if i not in chosen)
    rep_of = dict(zip(chosen, reps))

    current = list(chosen)
    while True:
        basis = rref([rep_of[i] for i in current])[0]
        inside = [i for i in current
                  if _span_contains_set(basis, family.sets[i])]
        if len(inside) == len(current):
            witness = DegeneracyWitness(
                p=len(current) + 1,
                set_indices=tuple(sorted(current + [outside])),
                subspace_basis=tuple(basis))
            if not witness.validate(family):
                raise AssertionError("constructed witness failed validation")
            return witness
        if not inside:
            raise AssertionError("narrowing emptied the subfamily")
        current = inside


def witness_bruteforce(family: VectorFamily, size_cap: int = 12):
    """Smallest index subset with dim span of its union below its size."""
    if family.k > size_cap:
        raise ValueError("family too large for subset enumeration")
    for p in range(1, family.k + 1):
        for subset in combinations(range(family.k), p):
            vecs = [v for i in subset for v in family.sets[i]]
            basis = rref(vecs)[0]
            if len(basis) <= p - 1:
                return DegeneracyWitness(p=p, set_indices=subset,
                                         subspace_basis=tuple(basis))
    return None


# ---------------------------------------------------------------------------
# hyperplane equations of hypersurface cycles

def _normalize_line(w):
    for c in w:
        if not c.is_zero():
            return tuple(x / c for x in w)
    raise ValueError("zero covector has no direction")


def hyperplane_equations(p: EtvRep) -> list:
    """Per-cell complex covectors vanishing on the cell tangent spaces,
    normalized so the first nonzero coordinate is one."""
    if p.dim != p.n - 1:
        raise ValueError("hyperplane equations need a hypersurface cycle")
    out = []
    for c in p.cells():
        rows = list(c.poly.tangent_basis)
        ann = kernel_basis([list(r) for r in rows], 2 * p.n)
        if len(ann) != 1:
            raise ValueError("cell tangent space is not a hyperplane")
        w = real_covector_to_ccov(ann[0])
        out.append(_normalize_line(w))
    return out


# ---------------------------------------------------------------------------
# the zero criterion for mixed products

@dataclass(frozen=True)
class HDegeneracyCertificate:
    """A subset of the functions descends along a complex subspace.

    After adding the linear correctors, every function named in `subset`
    is invariant under translations by the subspace spanned by h_basis
    (complex vectors of C^n).
    """
    subset: tuple
    h_basis: tuple      # complex vectors (CRat coordinates)
    correctors: tuple   # AffineFunc per subset member


def _complex_annihilator(covectors, n):
    """Basis of {z in C^n : <z, w> = 0 for all given covectors w}."""
    rows = [list(w) for w in covectors]
    if not rows:
        return [tuple(CRat(1) if j == i else CRat(0) for j in range(n))
                for i in range(n)]
    return [tuple(v) for v in kernel_basis(rows, n, one=CRat(1))]


def _pairing_c(z, w) -> CRat:
    total = CRat(0)
    for a, b in zip(z, w):
        total = total + a * b
    return total


def validate_h_certificate(cert: HDegeneracyCertificate, funcs) -> bool:
    """Corrected functions must have all piece differentials constant along H."""
    if not cert.h_basis:
        return False
    for idx, corr in zip(cert.subset, cert.correctors):
        h = funcs[idx]
        base = tuple(-c for c in corr.w)
        for piece in h.plus:
            diff = tuple(a - b for a, b in zip(piece.w, base))
            for hv in cert.h_basis:
                if not _pairing_c(hv, diff).is_zero():
                    return False
    return True


def ma_zero_criterion(*funcs: PLFunction, seed: int = 0):
    """Verdict for vanishing of the mixed product of convex PL functions.

    Returns (zero, certificate): zero is True iff the family of hyperplane
    equations of the corner loci is degenerate, in which case a validated
    descent certificate for a subset of the functions is attached.
    """
    n = funcs[0].n
    for h in funcs:
        if not h.is_convex():
            raise ValueError("criterion needs convex functions")
        if h.n != n:
            raise ValueError("ambient mismatch")
    k = len(funcs)
    sets = []
    for idx, h in enumerate(funcs):
        locus = corner_locus(h)
        if locus.is_zero():
            # affine function: its factor vanishes outright
            whole = tuple(tuple(CRat(1) if j == i else CRat(0) for j in range(n))
                          for i in range(n))
            cert = HDegeneracyCertificate(
                subset=(idx,), h_basis=whole,
                correctors=(AffineFunc(tuple(-c for c in h.plus[0].w),
                                       -h.plus[0].c),))
            return True, cert
        covs = tuple(dict.fromkeys(hyperplane_equations(locus)))
        sets.append(covs)
    family = VectorFamily(n=n, sets=tuple(sets))
    if k > n or not is_nondegenerate(family):
        witness = degeneracy_witness(family)
        h_basis = _complex_annihilator(witness.subspace_basis, n)
        correctors = []
        for i in witness.set_indices:
            base = funcs[i].plus[0]
            correctors.append(AffineFunc(tuple(-c for c in base.w), -base.c))
        cert = HDegeneracyCertificate(subset=witness.set_indices,
                                      h_basis=tuple(h_basis),
                                      correctors=tuple(correctors))
        if not validate_h_certificate(cert, funcs):
            raise AssertionError("descent certificate failed validation")
        return True, cert
    return False, None


# ---------------------------------------------------------------------------
# the mixed volume criterion

def _body_direction_set(points, n):
    """Span basis of the difference space of a body, as complex covectors."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    diffs = [tuple(a - b for a, b in zip(p, pts[0])) for p in pts[1:]]
    basis = rref(diffs)[0] if diffs else []
    return tuple(tuple(CRat(x) for x in b) for b in basis)


def mixed_volume_zero_criterion(*bodies):
    """Zero mixed volume iff some p bodies translate into a (p-1)-dim subspace.

    Bodies are point lists in R^n.  Returns (zero, subset, subspace_basis)
    with real basis vectors when zero, else (False, None, None).
    """
    n = len(bodies[0][0])
    if len(bodies) != n:
        raise ValueError(f"need exactly {n} bodies")
    sets = []
    for i, b in enumerate(bodies):
        dirs = _body_direction_set(b, n)
        if not dirs:
            # a single point translates into the origin: p = 1, H = 0
            return True, (i,), ()
        sets.append(dirs)
    family = VectorFamily(n=n, sets=tuple(sets))
    if is_nondegenerate(family):
        return False, None, None
    witness = degeneracy_witness(family)
    real_basis = tuple(tuple(c.re for c in w) for w in witness.subspace_basis)
    return True, witness.set_indices, real_basis
