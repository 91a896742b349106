"""Real and complex exterior algebra over C^n viewed as R^{2n}.

Conventions fixed here and relied on by every other module:

* Real coordinates are interleaved ``(x1, y1, ..., xn, yn)``; the complex
  structure J maps ``(xj, yj) -> (-yj, xj)``, i.e. multiplication by i.
* The complex pairing ``<z, w> = sum_j zj * wj`` is complex bilinear.  A
  dual point w acts on z through the real functional ``Re<z, w>``, which
  identifies real covectors on R^{2n} with complex covectors: the real
  covector ``sum aj dxj + cj dyj`` corresponds to ``w_j = aj - i*cj``.
* ``d^c g (v) = dg(J v)``.  For the affine g(z) = Re<z, w> + c this gives
  the real covector with x-coefficients -Im(w) and y-coefficients -Re(w),
  whose complex covector is ``i * w``.  (The global sign is pinned by the
  weighted-boundary identity test in the acceptance suite.)

Forms and multivectors share one sparse representation keyed by strictly
increasing index tuples.  An odd form is a plain form together with the
ordered basis (orientation token) it is expressed in; re-expressing in a
basis of opposite orientation negates it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linalg import (basis_change_sign, det, intersect_rowspaces, rank,
                     rref)
from .scalars import CRat

RVec = tuple  # 2n rationals, (x1, y1, ..., xn, yn)
CCov = tuple  # n CRat entries


# ---------------------------------------------------------------------------
# sparse alternating tensors

class Alt:
    """Sparse alternating tensor of fixed degree.

    Used both for forms (keys index covectors) and multivectors (keys
    index vectors); coefficients are Fraction or CRat.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict | None = None):
        self.degree = degree
        self.terms = {}
        if terms:
            for key, val in terms.items():
                if val != 0:
                    self.terms[tuple(key)] = val

    @staticmethod
    def zero(degree: int) -> "Alt":
        return Alt(degree)

    @staticmethod
    def scalar(value) -> "Alt":
        return Alt(0, {(): value})

    @staticmethod
    def basis_blade(indices, value=Fraction(1)) -> "Alt":
        key, sign = _sort_key(tuple(indices))
        if key is None:
            return Alt(len(indices))
        return Alt(len(indices), {key: value if sign > 0 else -value})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Alt") -> "Alt":
        if self.degree != other.degree:
            raise ValueError("degree mismatch in sum")
        terms = dict(self.terms)
        for key, val in other.terms.items():
            new = terms.get(key, 0) + val
            if new == 0:
                terms.pop(key, None)
            else:
                terms[key] = new
        return Alt(self.degree, terms)

    def __sub__(self, other: "Alt") -> "Alt":
        return self + (-other)

    def __neg__(self) -> "Alt":
        return Alt(self.degree, {k: -v for k, v in self.terms.items()})

    def scale(self, factor) -> "Alt":
        if factor == 0:
            return Alt(self.degree)
        return Alt(self.degree, {k: v * factor for k, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, Alt) and self.degree == other.degree
                and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return f"Alt{self.degree}(0)"
        parts = [f"{v}*e{list(k)}" for k, v in sorted(self.terms.items())]
        return f"Alt{self.degree}(" + " + ".join(parts) + ")"


def _sort_key(key: tuple):
    """Sort an index tuple; returns (sorted tuple, permutation sign)."""
    items = list(key)
    sign = 1
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b:
            return None, 0
    return tuple(items), sign


def _merge_keys(a: tuple, b: tuple):
    """Merge two increasing tuples; returns (merged, shuffle sign) or (None, 0)."""
    merged = []
    sign = 1
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return None, 0
        if a[i] < b[j]:
            merged.append(a[i])
            i += 1
        else:
            # b[j] jumps over the remaining len(a) - i entries of a
            if (len(a) - i) % 2:
                sign = -sign
            merged.append(b[j])
            j += 1
    merged.extend(a[i:])
    merged.extend(b[j:])
    return tuple(merged), sign


def wedge(a: Alt, b: Alt) -> Alt:
    """Exterior product; returns the zero form on degree overflow."""
    out: dict = {}
    for ka, va in a.terms.items():
        for kb, vb in b.terms.items():
            key, sign = _merge_keys(ka, kb)
            if key is None:
                continue
            val = va * vb
            if sign < 0:
                val = -val
            cur = out.get(key, 0) + val
            if cur == 0:
                out.pop(key, None)
            else:
                out[key] = cur
    return Alt(a.degree + b.degree, out)


def wedge_all(factors) -> Alt:
    result = None
    for f in factors:
        result = f if result is None else wedge(result, f)
    if result is None:
        return Alt.scalar(Fraction(1))
    return result


# ---------------------------------------------------------------------------
# complex structure

def apply_J(v: RVec) -> RVec:
    out = []
    for j in range(0, len(v), 2):
        out.extend((-v[j + 1], v[j]))
    return tuple(out)


def complexify(v: RVec) -> CCov:
    """Complex coordinates z_j = x_j + i y_j of a real vector."""
    return tuple(CRat(v[j], v[j + 1]) for j in range(0, len(v), 2))


def pairing(z: RVec, w: RVec) -> CRat:
    """Complex bilinear pairing sum z_j w_j of two real-coordinate vectors."""
    zc, wc = complexify(z), complexify(w)
    total = CRat(0)
    for a, b in zip(zc, wc):
        total = total + a * b
    return total


def rho(mv: Alt) -> Alt:
    """Ring homomorphism from real to complex multivectors, identity on vectors.

    Basis vectors map as e_{xj} -> f_j and e_{yj} -> i f_j; blades with a
    repeated complex direction collapse to zero.
    """
    out = Alt(mv.degree)
    for key, val in mv.terms.items():
        factors = []
        for idx in key:
            coeff = CRat(1) if idx % 2 == 0 else CRat(0, 1)
            factors.append(Alt(1, {(idx // 2,): coeff}))
        blade = wedge_all(factors) if factors else Alt.scalar(CRat(1))
        out = out + blade.scale(CRat.of(val) if not isinstance(val, CRat) else val)
    return out


# ---------------------------------------------------------------------------
# covectors and d^c

def real_functional_of_dual_point(w: RVec) -> tuple:
    """Ambient coefficients of z -> Re<z, w> for a dual-space point w."""
    out = []
    for j in range(0, len(w), 2):
        out.extend((w[j], -w[j + 1]))
    return tuple(out)


def real_covector_to_ccov(xi) -> CCov:
    """Complex covector w with Re<z, w> equal to the real covector xi."""
    return tuple(CRat(xi[j], -xi[j + 1]) for j in range(0, len(xi), 2))


def ccov_to_real_covector(w: CCov) -> tuple:
    out = []
    for c in w:
        out.extend((c.re, -c.im))
    return tuple(out)


def dc_affine(w: CCov, c=Fraction(0)) -> Alt:
    """d^c of the affine functional Re<z, w> + c, as a real covector.

    By d^c g(v) = dg(Jv): the x_j coefficient is -Im w_j and the y_j
    coefficient is -Re w_j; the constant contributes nothing.
    """
    terms = {}
    for j, wj in enumerate(w):
        if wj.im != 0:
            terms[(2 * j,)] = -wj.im
        if wj.re != 0:
            terms[(2 * j + 1,)] = -wj.re
    return Alt(1, terms)


def dc_ccov(w: CCov) -> CCov:
    """d^c of Re<z, w> as a complex covector: i * w."""
    i = CRat(0, 1)
    return tuple(i * wj for wj in w)


def ccov_form(w: CCov) -> Alt:
    """A complex covector as a degree-1 complex form."""
    return Alt(1, {(j,): wj for j, wj in enumerate(w) if not wj.is_zero()})


# ---------------------------------------------------------------------------
# evaluation and restriction

def evaluate_cform(form: Alt, vectors) -> CRat:
    """Value of a complex m-form on m real vectors (complexified arguments)."""
    if form.degree != len(vectors):
        raise ValueError("argument count does not match form degree")
    zs = [complexify(v) for v in vectors]
    total = CRat(0)
    for key, val in form.terms.items():
        minor = [[z[i] for i in key] for z in zs]
        total = total + CRat.of(val) * det(minor)
    return total


def restrict(form: Alt, basis) -> tuple[Alt, bool]:
    """Pullback of a complex form to the span of a real basis.

    Returns the form in basis coordinates (CRat values) and a flag telling
    whether every coefficient is real.
    """
    m = form.degree
    d = len(basis)
    terms = {}
    all_real = True
    if m > d:
        return Alt(m), True
    for key in combinations(range(d), m):
        val = evaluate_cform(form, [basis[i] for i in key])
        if not val.is_zero():
            terms[key] = val
            if val.im != 0:
                all_real = False
    return Alt(m, terms), all_real


def restriction_is_zero(form: Alt, basis) -> bool:
    restricted, _ = restrict(form, basis)
    return restricted.is_zero()


def evaluate_rform(form: Alt, vectors):
    """Value of a real m-form on m real vectors (no complexification)."""
    if form.degree != len(vectors):
        raise ValueError("argument count does not match form degree")
    total = None
    for key, val in form.terms.items():
        minor = [[v[i] for i in key] for v in vectors]
        term = val * det(minor)
        total = term if total is None else total + term
    if total is None:
        return Fraction(0)
    return total


def restrict_rform(form: Alt, basis) -> Alt:
    """Classical pullback of a real form to the span of a real basis."""
    m = form.degree
    d = len(basis)
    if m > d:
        return Alt(m)
    terms = {}
    for key in combinations(range(d), m):
        val = evaluate_rform(form, [basis[i] for i in key])
        if val != 0:
            terms[key] = val
    return Alt(m, terms)


# ---------------------------------------------------------------------------
# complex subspaces and orientation bookkeeping

def max_complex_subspace(basis) -> tuple[list, bool]:
    """Largest complex subspace of span(basis) and a degeneracy verdict.

    Returns (canonical basis of E & J(E), degenerate) where degenerate
    means the complex codimension of the subspace is smaller than the real
    codimension of E.
    """
    if not basis:
        return [], False
    ncols = len(basis[0])
    n = ncols // 2
    ebasis = rref(basis)[0]
    jbasis = [apply_J(v) for v in ebasis]
    inter = intersect_rowspaces(list(ebasis), jbasis, ncols)
    codim_c = n - len(inter) // 2
    codim_r = ncols - len(ebasis)
    return list(inter), codim_c < codim_r


def standard_complex_basis(c_basis) -> list:
    """Real basis (u1, J u1, u2, J u2, ...) carrying the complex orientation."""
    chosen: list = []
    for v in c_basis:
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            jv = apply_J(v)
            if rank(chosen + [jv]) > len(chosen):
                chosen.append(jv)
    if len(chosen) != len(c_basis):
        raise ValueError("input does not span a complex subspace")
    return chosen


def extend_basis(partial, pool) -> list:
    """Vectors from pool extending partial to a basis of span(partial+pool)."""
    chosen = list(partial)
    added = []
    for v in pool:
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            added.append(v)
    return added


def oriented_quotient_basis(tangent_basis, c_basis) -> list:
    """Complement Q of the complex part inside E, oriented so that
    (Q, standard complex basis) matches the orientation of tangent_basis.
    """
    c_std = standard_complex_basis(c_basis) if c_basis else []
    comp = extend_basis(c_std, tangent_basis)
    if comp:
        sign = basis_change_sign(list(comp) + c_std, list(tangent_basis))
        if sign < 0:
            comp[0] = tuple(-x for x in comp[0])
    else:
        sign = basis_change_sign(c_std, list(tangent_basis)) if c_std else 1
        if sign < 0:
            raise ValueError("complex subspace orientation conflicts with token")
    return comp


@dataclass(frozen=True)
class Pushforward:
    """Quotient volume data of an odd form on a cell tangent space."""
    density: CRat          # value on the oriented quotient basis
    sign: int              # +1 / -1 / 0
    real: bool
    kills_complex: bool


def quotient_pushforward(form: Alt, tangent_basis) -> Pushforward:
    """Direct image of a degree-(dim E - dim C_E) form on E/C_E.

    The form is taken at the orientation of tangent_basis; the quotient is
    oriented so that (quotient, complex-standard) recovers that orientation.
    """
    c_basis, degenerate = max_complex_subspace(list(tangent_basis))
    if degenerate:
        raise ValueError("quotient pushforward on a degenerate subspace")
    comp = oriented_quotient_basis(tangent_basis, c_basis)
    if form.degree != len(comp):
        raise ValueError("form degree does not match quotient dimension")
    kills = True
    if c_basis:
        c_std = standard_complex_basis(c_basis)
        pool = list(comp) + list(c_std)
        for key in combinations(range(len(pool)), form.degree):
            if max(key, default=-1) < len(comp):
                continue  # tuple avoiding the complex part
            if not evaluate_cform(form, [pool[i] for i in key]).is_zero():
                kills = False
                break
    density = evaluate_cform(form, comp)
    if density.is_zero():
        sign = 0
    elif density.im != 0:
        sign = 0
    else:
        sign = 1 if density.re > 0 else -1
    return Pushforward(density=density, sign=sign,
                       real=density.im == 0, kills_complex=kills)


# ---------------------------------------------------------------------------
# odd forms

@dataclass(frozen=True)
class OddForm:
    """A complex form together with the orientation token it is written in."""
    form: Alt
    basis: tuple

    def transported(self, new_basis) -> "OddForm":
        sign = basis_change_sign(list(self.basis), list(new_basis))
        form = self.form if sign > 0 else -self.form
        return OddForm(form=form, basis=tuple(new_basis))

    def same_odd_form(self, other: "OddForm") -> bool:
        return self.transported(other.basis).form == other.form
