"""Cross-module invariants: group axioms, current congruence, displacement
constancy, vanishing transfer, and ring closures."""

import random
from fractions import Fraction as F

import pytest

from etv.dualfan import dual_fan_etp
from etv.exterior import Alt
from etv.framed import (FramedCell, FramedSet, TestForm, add, canonicalize,
                        equivalent, evaluate_current, exterior_derivative,
                        is_positive, negate, scale, translate, zero_etv)
from etv.intersection import (bergman_fan, generic_shift, product,
                              stable_intersection, transversal_intersection)
from etv.monge import (AffineFunc, PLFunction, affine_zero, corner_locus,
                       embed_real, is_r_generated, mixed_ma, support_function)
from etv.polyhedra import (HPoly, PolyhedralSet, VPolytope, localization,
                           common_refinement)
from etv.polynomials import Poly
from etv.scalars import CRat


def pt(*xs):
    return tuple(F(x) for x in xs)


def line_cycle(a, b, c, weight=1):
    """The line {a x + b y = c} in C^1 framed by its positive unit frame."""
    from etv.framed import unit_positive_frame
    cell = HPoly(2, eq=[((F(a), F(b)), F(c))]).canonical()
    gen = unit_positive_frame(cell.tangent_basis, 1)
    return canonicalize(FramedSet(1, 1, [FramedCell(cell, gen.scale(F(weight)))]))


class TestModuleAxioms:
    def setup_method(self):
        rng = random.Random(5)
        self.triples = []
        for _ in range(4):
            lines = [line_cycle(rng.randint(0, 2), rng.randint(-1, 2) or 1,
                                rng.randint(-2, 2), rng.randint(-3, 3) or 1)
                     for _ in range(3)]
            self.triples.append(lines)

    def test_commutative(self):
        for p, q, _ in self.triples:
            assert equivalent(add(p, q), add(q, p))

    def test_associative(self):
        for p, q, r in self.triples:
            assert equivalent(add(add(p, q), r), add(p, add(q, r)))

    def test_inverse_and_identity(self):
        for p, _, _ in self.triples:
            assert add(p, negate(p)).is_zero()
            assert equivalent(add(p, zero_etv(1, 1)), p)

    def test_scale_distributes(self):
        for p, q, _ in self.triples:
            assert equivalent(scale(F(3, 2), add(p, q)),
                              add(scale(F(3, 2), p), scale(F(3, 2), q)))
            assert equivalent(scale(F(2), scale(F(5), p)), scale(F(10), p))


class TestCurrentCongruence:
    def battery(self, n):
        window = tuple((F(-2), F(2)) for _ in range(2 * n))
        nv = 2 * n
        forms = []
        if n == 1:
            # degree 0 batteries for k = n cycles in C^1
            forms.append(TestForm(0, (((), Poly.const(nv, F(1))),), window))
            forms.append(TestForm(0, (((), Poly.var(nv, 0) + Poly.var(nv, 1)),),
                                  window))
            forms.append(TestForm(0, (((), Poly.var(nv, 1) * Poly.var(nv, 1)),),
                                  window))
        return forms

    def test_equivalent_cycles_pair_equally(self):
        p = line_cycle(1, 0, 0, 2)
        # refined representative of the same class
        left = HPoly(2, eq=[((F(1), F(0)), F(0))],
                     ineq=[((F(0), F(1)), F(1))]).canonical()
        right = HPoly(2, eq=[((F(1), F(0)), F(0))],
                      ineq=[((F(0), F(-1)), F(-1))]).canonical()
        frame = p.cells()[0].frame
        q = FramedSet(1, 1, [FramedCell(left, frame), FramedCell(right, frame)])
        assert equivalent(p, q)
        for tf in self.battery(1):
            assert evaluate_current(p, tf) == evaluate_current(q, tf)

    def test_closed_current_on_exact_forms(self):
        # a 1-dim cycle in C^1 (k=2): frames of degree 0, tests of degree 2
        gamma = VPolytope.from_points([pt(0, 0), pt(1, 0), pt(0, 1)])
        full = dual_fan_etp(gamma, 2).result
        window = ((F(-1), F(1)), (F(-1), F(1)))
        bump = (Poly.var(2, 0) - F(-1)) * (F(1) - Poly.var(2, 0)) \
            * (Poly.var(2, 1) - F(-1)) * (F(1) - Poly.var(2, 1))
        for idx in ((0,), (1,)):
            psi = TestForm(1, ((idx, bump),), window)
            dpsi = exterior_derivative(psi)
            assert evaluate_current(full, dpsi) == 0

    def test_closed_current_in_c2(self):
        fan = dual_fan_etp(VPolytope.from_points(
            [pt(0, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 0, 1, 0)]), 3).result
        window = tuple((F(-1), F(1)) for _ in range(4))
        bump = Poly.const(4, F(1))
        for v in range(4):
            bump = bump * (Poly.var(4, v) - F(-1)) * (F(1) - Poly.var(4, v))
        psi = TestForm(1, (((2,), bump),), window)
        dpsi = exterior_derivative(psi)
        assert evaluate_current(fan, dpsi) == 0


class TestDisplacementConstancy:
    def test_w_form_constant_across_shifts(self):
        gamma = VPolytope.from_points([pt(0, 0, 0, 0), pt(1, 0, 0, 0),
                                       pt(0, 0, 1, 0)])
        fan = dual_fan_etp(gamma, 3).result
        sums = []
        for seed in (3, 17):
            cert = generic_shift(fan, fan, seed=seed)
            assert any(x != 0 for x in cert.shift)
            inter = transversal_intersection(fan, fan.framed.translated(cert.shift))
            total = Alt(2)
            for c in inter.cells:
                total = total + c.frame
            sums.append(total)
        assert sums[0] == sums[1]


class TestVanishingTransfer:
    def test_zero_iff_bergman_zero(self):
        seg_e1 = dual_fan_etp(VPolytope.from_points(
            [pt(0, 0, 0, 0), pt(1, 0, 0, 0)]), 3).result
        seg_e2 = dual_fan_etp(VPolytope.from_points(
            [pt(0, 0, 0, 0), pt(0, 0, 1, 0)]), 3).result
        shift_a, shift_b = pt(2, 1, 0, 0), pt(0, -1, 1, 3)
        # parallel pair: products vanish before and after translation
        x, y = translate(seg_e1, shift_a), translate(seg_e1, shift_b)
        assert product(x, y).is_zero()
        assert product(bergman_fan(x), bergman_fan(y)).is_zero()
        # independent pair: both nonzero
        x, y = translate(seg_e1, shift_a), translate(seg_e2, shift_b)
        assert not product(x, y).is_zero()
        assert not product(bergman_fan(x), bergman_fan(y)).is_zero()


class TestRingClosures:
    def test_mixed_ma_symmetric(self):
        h1 = PLFunction.convex(2, [affine_zero(2),
                                   AffineFunc((CRat(1), CRat(0)), F(0))])
        h2 = PLFunction.convex(2, [affine_zero(2),
                                   AffineFunc((CRat(1), CRat(1)), F(0)),
                                   AffineFunc((CRat(0), CRat(2)), F(1))])
        assert equivalent(mixed_ma(h1, h2), mixed_ma(h2, h1))

    def test_mixed_ma_additive_in_first_slot(self):
        h1 = PLFunction.convex(2, [affine_zero(2),
                                   AffineFunc((CRat(1), CRat(0)), F(0))])
        g1 = PLFunction.convex(2, [affine_zero(2),
                                   AffineFunc((CRat(0), CRat(1)), F(0))])
        h2 = PLFunction.convex(2, [affine_zero(2),
                                   AffineFunc((CRat(1), CRat(2)), F(0))])
        lhs = mixed_ma(h1.plus_sum(g1), h2)
        rhs = add(mixed_ma(h1, h2), mixed_ma(g1, h2))
        assert equivalent(lhs, rhs)

    def test_r_generated_closure(self):
        a = embed_real([(F(0), F(0)), (F(1), F(0)), (F(0), F(1))])
        b = embed_real([(F(0), F(0)), (F(1), F(1))])
        ha, hb = support_function(a), support_function(b)
        la, lb = corner_locus(ha), corner_locus(hb)
        assert is_r_generated(la) and is_r_generated(lb)
        z = product(la, lb)
        assert is_r_generated(z)

    def test_homogeneous_closure(self):
        a = embed_real([(F(0), F(0)), (F(1), F(0)), (F(0), F(1))])
        b = embed_real([(F(0), F(0)), (F(2), F(1))])
        z = mixed_ma(support_function(a), support_function(b))
        assert not z.is_zero()
        for c in z.cells():
            assert c.poly.is_cone()


class TestLocalizationInvariants:
    def square_boundary(self):
        sq = VPolytope.from_points([pt(0, 0), pt(2, 0), pt(0, 2), pt(2, 2)])
        edges = [f for f, _ in sq.to_hpoly().facets_with_normals()]
        return PolyhedralSet.from_cells(1, 2, edges)

    def test_corner_localization(self):
        x = self.square_boundary()
        corner = HPoly(2, eq=[((F(1), F(0)), F(0)), ((F(0), F(1)), F(0))]).canonical()
        fan = localization(x, corner)
        assert len(fan.cells) == 2
        for c in fan.cells:
            assert c.is_cone() and c.dim == 1

    def test_edge_localization_is_line(self):
        x = self.square_boundary()
        edge_point = HPoly(2, eq=[((F(1), F(0)), F(0)), ((F(0), F(1)), F(1))]).canonical()
        fan = localization(x, edge_point)
        assert len(fan.cells) == 1
        cell = fan.cells[0]
        assert cell.dim == 1 and cell.contains_point(pt(0, -5))

    def test_independent_of_interior_point(self):
        x = self.square_boundary()
        edge = x.cells[0]
        fan1 = localization(x, edge)
        # a second interior point of the same edge
        p = edge.relint_point()
        v = edge.vertices()[0]
        q = tuple((a + b) / 2 for a, b in zip(p, v))
        cones = [c.localized_cone(q) for c in x.cells if c.contains_point(q)]
        fan2 = PolyhedralSet.from_cells(1, 2, cones)
        assert [c.key for c in fan1.cells] == [c.key for c in fan2.cells]

    def test_fan_localizes_to_itself_at_origin(self):
        tri = VPolytope.from_points([pt(0, 0), pt(1, 0), pt(0, 1)])
        fan_cells = [c.poly for c in dual_fan_etp(tri, 1).result.cells()]
        x = PolyhedralSet.from_cells(1, 2, fan_cells)
        origin = HPoly(2, eq=[((F(1), F(0)), F(0)), ((F(0), F(1)), F(0))]).canonical()
        fan = localization(x, origin)
        assert sorted(repr(c.key) for c in fan.cells) == \
            sorted(repr(c.key) for c in x.cells)


class TestRefinementInvariants:
    def test_recession_cone_of_piece_contained_in_parent(self):
        a = HPoly(2, ineq=[((F(1), F(0)), F(0))]).canonical()   # halfplane x <= 0
        b = HPoly(2, ineq=[((F(0), F(1)), F(0))]).canonical()   # halfplane y <= 0
        xa = PolyhedralSet.from_cells(2, 2, [a])
        xb = PolyhedralSet.from_cells(2, 2, [b])
        px, _, _ = common_refinement(xa, xb)
        parent_rc = a.recession_cone()
        for piece in px[0]:
            rc = piece.recession_cone()
            assert parent_rc.contains_poly(rc)


class TestRoundTrips:
    def test_fixture_serialization_is_canonical(self):
        from etv import jsonio
        fixtures = [
            dual_fan_etp(VPolytope.from_points([pt(0, 0), pt(1, 0)]), 1).result,
            dual_fan_etp(VPolytope.from_points(
                [pt(0, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 0, 1, 0)]), 3).result,
            corner_locus(PLFunction.convex(1, [affine_zero(1),
                                               AffineFunc((CRat(1),), F(0))])),
        ]
        for fx in fixtures:
            blob = jsonio.framedset_to_json(fx)
            again = jsonio.framedset_to_json(jsonio.etv_from_json(blob))
            assert blob == again


class TestFrameLineStructure:
    def test_dual_fan_frames_reconstruct_from_unit_generator(self, polytope_corpus):
        from etv.dualfan import dual_fan_etp, valid_k_range
        from etv.framed import cell_weight, unit_positive_frame
        from etv.scalars import CRat
        for name, gamma in polytope_corpus[:8] + polytope_corpus[11:16]:
            for k in valid_k_range(gamma):
                fan = dual_fan_etp(gamma, k, validate=False).result
                for c in fan.cells():
                    basis = c.poly.tangent_basis
                    w = cell_weight(c.frame, basis)
                    gen = unit_positive_frame(basis, fan.n)
                    assert gen.scale(CRat(w)) == c.frame, f"{name} k={k}"


class TestProductAssociativity:
    def coordinate_hyperplane(self, n, j):
        from etv.dualfan import dual_fan_etp
        zero = tuple(F(0) for _ in range(2 * n))
        e = [F(0)] * (2 * n)
        e[2 * j] = F(1)
        gamma = VPolytope.from_points([zero, tuple(e)])
        return dual_fan_etp(gamma, 2 * n - 1).result

    def test_triple_product_in_c3(self):
        from etv.framed import cell_weight
        ls = [self.coordinate_hyperplane(3, j) for j in range(3)]
        left = product(product(ls[0], ls[1]), ls[2])
        right = product(ls[0], product(ls[1], ls[2]))
        assert equivalent(left, right)
        assert len(left.cells()) == 1
        c = left.cells()[0]
        assert cell_weight(c.frame, c.poly.tangent_basis) == 1  # 3! * MV = 1
