"""Transversal and stable intersections, products, and recession fans.

The stable intersection of positive cycles follows the displacement
recipe: a candidate cell survives iff the localization fans keep meeting
under every certified generic shift in a finite direction battery (for
cone fans, meeting near the origin is scale-invariant in the shift, so
each direction is decided by one exact emptiness check).  Frames come
from a single certified transversal shift: the frames of all top cells of
the shifted transversal intersection are summed on the common subspace.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .exterior import Alt, max_complex_subspace, quotient_pushforward, restrict
from .framed import (EtvRep, FramedCell, FramedSet, add, canonicalize,
                     cell_sign, is_positive, negate, split_positive, zero_etv)
from .linalg import intersect_rowspaces, rank
from .polyhedra import HPoly, hyperplanes_of_cells, split_by_hyperplanes

_ZERO = Fraction(0)
_ONE = Fraction(1)


# ---------------------------------------------------------------------------
# transversality

def _spaces_transversal(a: HPoly, b: HPoly) -> bool:
    rows = list(a.tangent_basis) + list(b.tangent_basis)
    return rank(rows) == a.ambient


def _pair_transversal(a: HPoly, b: HPoly, memo) -> bool:
    key = (a.key, b.key)
    if key in memo:
        return memo[key]
    result = True
    inter = a.intersect(b).canonical()
    if not inter.is_empty():
        if not _spaces_transversal(a, b):
            result = False
        else:
            for fa, _ in a.facets_with_normals():
                if not _pair_transversal(fa, b, memo):
                    result = False
                    break
            if result:
                for fb, _ in b.facets_with_normals():
                    if not _pair_transversal(a, fb, memo):
                        result = False
                        break
    memo[key] = result
    return result


def transversal(x, y) -> bool:
    """Every pair of touching faces has tangent spaces summing to R^{2n}."""
    xf = x.framed if isinstance(x, EtvRep) else x
    yf = y.framed if isinstance(y, EtvRep) else y
    memo: dict = {}
    for a in xf.support_cells():
        for b in yf.support_cells():
            if not _pair_transversal(a.poly, b.poly, memo):
                return False
    return True


# ---------------------------------------------------------------------------
# transversal intersection

def _wedge_frame(fa: FramedCell, fb: FramedCell, cell: HPoly) -> Alt:
    """Frame of an intersection cell: the wedge, signed by the positivity rule."""
    from .exterior import wedge
    raw = wedge(fa.frame, fb.frame)
    tangent = cell.tangent_basis
    _, degenerate = max_complex_subspace(list(tangent))
    if degenerate:
        restricted, _ = restrict(raw, list(tangent))
        if not restricted.is_zero():
            raise ValueError("nonzero frame restriction on a degenerate cell")
        return Alt(raw.degree)
    pf = quotient_pushforward(raw, tangent)
    if pf.sign == 0:
        return Alt(raw.degree)
    target = cell_sign(fa.frame, fa.poly.tangent_basis) * \
        cell_sign(fb.frame, fb.poly.tangent_basis)
    return raw if pf.sign == target else -raw


def transversal_intersection(x, y) -> FramedSet:
    """Pairwise cell intersections framed by signed wedges."""
    xf = x.framed if isinstance(x, EtvRep) else x
    yf = y.framed if isinstance(y, EtvRep) else y
    n = xf.n
    k_out = xf.k + yf.k - 2 * n
    if k_out < n:
        raise ValueError("dimension of the intersection falls below n")
    acc: dict = {}
    for a in xf.support_cells():
        for b in yf.support_cells():
            inter = a.poly.intersect(b.poly).canonical()
            if inter.is_empty() or inter.dim != k_out:
                continue
            frame = _wedge_frame(a, b, inter)
            if inter.key in acc:
                poly, cur = acc[inter.key]
                acc[inter.key] = (poly, cur + frame)
            else:
                acc[inter.key] = (inter, frame)
    cells = [FramedCell(p, f) for p, f in acc.values()]
    return FramedSet(n, k_out, cells)


# ---------------------------------------------------------------------------
# generic shifts

@dataclass
class ShiftCertificate:
    shift: tuple
    tries: int
    pair_count: int
    transversal: bool


class ShiftBudgetExhausted(RuntimeError):
    pass


def _random_direction(rng: random.Random, ambient: int):
    while True:
        v = tuple(Fraction(rng.randint(-5, 5)) for _ in range(ambient))
        if any(x != 0 for x in v):
            return v


def generic_shift(x, y, seed: int = 0, budget: int = 40) -> ShiftCertificate:
    """First certified transversal shift from a deterministic sequence."""
    xf = x.framed if isinstance(x, EtvRep) else x
    yf = y.framed if isinstance(y, EtvRep) else y
    ambient = xf.ambient
    rng = random.Random(seed)
    pair_count = len(xf.support_cells()) * len(yf.support_cells())
    zero = tuple([_ZERO] * ambient)
    if transversal(xf, yf):
        return ShiftCertificate(zero, 0, pair_count, True)
    for t in range(1, budget + 1):
        eps = Fraction(1, 2 ** t)
        z = tuple(eps * c for c in _random_direction(rng, ambient))
        if transversal(xf, yf.translated(z)):
            return ShiftCertificate(z, t, pair_count, True)
    raise ShiftBudgetExhausted(f"no transversal shift found in {budget} candidates")


# ---------------------------------------------------------------------------
# stable intersection

@dataclass
class StableSupportCell:
    cell: HPoly
    frame: Alt
    shift: tuple
    parents: tuple


def _localize(framed: FramedSet, p) -> FramedSet:
    cells = []
    for c in framed.support_cells():
        if c.poly.contains_point(p):
            cells.append(FramedCell(c.poly.localized_cone(p), c.frame))
    return FramedSet(framed.n, framed.k, cells)


def _support_meets(xf: FramedSet, yf: FramedSet, z) -> bool:
    for a in xf.support_cells():
        for b in yf.support_cells():
            if not a.poly.intersect(b.poly.translate(z)).is_empty():
                return True
    return False


def _shift_battery(ambient: int, seed: int):
    dirs = []
    for i in range(ambient):
        e = [_ZERO] * ambient
        e[i] = _ONE
        dirs.append(tuple(e))
        e = [_ZERO] * ambient
        e[i] = -_ONE
        dirs.append(tuple(e))
    rng = random.Random(seed ^ 0x5EED)
    for _ in range(4):
        dirs.append(_random_direction(rng, ambient))
    return dirs


def _certified_variant(k_fan: FramedSet, l_fan: FramedSet, base, seed: int,
                       budget: int = 25):
    """A transversal shift close to the direction `base`, or None."""
    if transversal(k_fan, l_fan.translated(base)):
        return base
    rng = random.Random(seed ^ 0xD1FF)
    for t in range(1, budget + 1):
        eps = Fraction(1, 2 ** t)
        cand = tuple(b + eps * c for b, c in
                     zip(base, _random_direction(rng, len(base))))
        if transversal(k_fan, l_fan.translated(cand)):
            return cand
    return None


def stable_support(x, y, seed: int = 0) -> list:
    """Stable cells of the expected dimension with their displacement frames."""
    xf = x.framed if isinstance(x, EtvRep) else x
    yf = y.framed if isinstance(y, EtvRep) else y
    n = xf.n
    k_out = xf.k + yf.k - 2 * n
    if k_out < 0:
        return []
    candidates: dict = {}
    for a in xf.support_cells():
        for b in yf.support_cells():
            inter = a.poly.intersect(b.poly).canonical()
            if inter.is_empty() or inter.dim < k_out:
                continue
            if inter.dim == k_out:
                candidates.setdefault(inter.key, (inter, (a.poly, b.poly)))
            else:
                for face in inter.all_faces():
                    if face.dim == k_out:
                        candidates.setdefault(face.key, (face, (a.poly, b.poly)))
    out = []
    for cand, parents in candidates.values():
        p = cand.relint_point()
        k_fan = _localize(xf, p)
        l_fan = _localize(yf, p)
        kmin = None
        for c in k_fan.support_cells():
            rows = list(c.poly.tangent_basis)
            kmin = rows if kmin is None else intersect_rowspaces(kmin, rows, 2 * n)
        lmin = None
        for c in l_fan.support_cells():
            rows = list(c.poly.tangent_basis)
            lmin = rows if lmin is None else intersect_rowspaces(lmin, rows, 2 * n)
        vmin = intersect_rowspaces(kmin or [], lmin or [], 2 * n)
        if len(vmin) != k_out:
            continue
        stable = True
        witness_shift = None
        for i, direction in enumerate(_shift_battery(2 * n, seed)):
            z = _certified_variant(k_fan, l_fan, direction, seed + i)
            if z is None:
                stable = False
                break
            if not _support_meets(k_fan, l_fan, z):
                stable = False
                break
            if witness_shift is None:
                witness_shift = z
        if not stable:
            continue
        inter_fan = transversal_intersection(k_fan, l_fan.translated(witness_shift))
        total = Alt(2 * n - k_out)
        for c in inter_fan.cells:
            total = total + c.frame
        out.append(StableSupportCell(cell=cand, frame=total,
                                     shift=witness_shift, parents=parents))
    out.sort(key=lambda s: repr(s.cell.key))
    return out


def stable_intersection(x, y, seed: int = 0, force_stable: bool = False) -> EtvRep:
    """Displacement-limit intersection of positive cycles."""
    p = x if isinstance(x, EtvRep) else canonicalize(x)
    q = y if isinstance(y, EtvRep) else canonicalize(y)
    n = p.n
    if p.is_zero() or q.is_zero():
        return zero_etv(n, n)
    if not (is_positive(p) and is_positive(q)):
        raise ValueError("stable intersection is defined for positive cycles")
    k_out = p.k + q.k - 2 * n
    if k_out < n:
        return zero_etv(n, n)
    if not force_stable and transversal(p, q):
        return canonicalize(transversal_intersection(p, q))
    cells = [FramedCell(s.cell, s.frame) for s in stable_support(p, q, seed)]
    return canonicalize(FramedSet(n, k_out, cells))


def product(x, y, seed: int = 0) -> EtvRep:
    """Bilinear extension of the stable intersection through positive parts."""
    p = x if isinstance(x, EtvRep) else canonicalize(x)
    q = y if isinstance(y, EtvRep) else canonicalize(y)
    n = p.n
    if p.is_zero() or q.is_zero():
        return zero_etv(n, n)
    if (p.dim + q.dim) < n:
        return zero_etv(n, n)
    p_plus, p_minus = split_positive(p)
    q_plus, q_minus = split_positive(q)
    total = zero_etv(n, p.k + q.k - 2 * n)
    for a, sa in ((p_plus, 1), (p_minus, -1)):
        if a.is_zero():
            continue
        for b, sb in ((q_plus, 1), (q_minus, -1)):
            if b.is_zero():
                continue
            term = stable_intersection(a, b, seed=seed)
            if term.is_zero():
                continue
            total = add(total, term if sa * sb > 0 else negate(term))
    return total


def product_many(factors, seed: int = 0) -> EtvRep:
    result = None
    for f in factors:
        result = f if result is None else product(result, f, seed=seed)
    if result is None:
        raise ValueError("empty product")
    return result


# ---------------------------------------------------------------------------
# Bergman (recession) fans

def bergman_fan(x, validate: bool = True) -> EtvRep:
    """Recession fan with frames summed over cells receding into each cone."""
    p = x if isinstance(x, EtvRep) else canonicalize(x)
    n = p.n
    k = p.k
    cells = p.framed.support_cells()
    if not cells:
        return zero_etv(n, k)
    recession = [(c, c.poly.recession_cone()) for c in cells]
    cones = [rc for _, rc in recession if rc.dim == k]
    if not cones:
        return zero_etv(n, k)
    hyps = hyperplanes_of_cells([rc for _, rc in recession if rc.dim > 0])
    pieces: dict = {}
    for cone in cones:
        for piece in split_by_hyperplanes(cone, hyps):
            if piece.dim == k:
                pieces.setdefault(piece.key, piece)
    framed_cells = []
    for piece in pieces.values():
        total = Alt(2 * n - k)
        for c, rc in recession:
            if rc.dim == k and rc.contains_poly(piece):
                total = total + c.frame
        framed_cells.append(FramedCell(piece, total))
    return canonicalize(FramedSet(n, k, framed_cells), validate=validate)
