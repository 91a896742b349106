from fractions import Fraction as F

import pytest

from etv.polyhedra import VPolytope


def pt(*xs):
    return tuple(F(x) for x in xs)


def _poly(*points):
    return VPolytope.from_points(list(points))


def corpus_n1():
    """Dual-space polytopes in C^1* (ambient R^2)."""
    seg01 = _poly(pt(0, 0), pt(1, 0))
    seg03 = _poly(pt(0, 0), pt(3, 0))
    seg_m12 = _poly(pt(-1, 0), pt(2, 0))
    seg_imag = _poly(pt(0, 0), pt(0, 1))
    seg_diag = _poly(pt(0, 0), pt(1, 1))
    square = _poly(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1))
    triangle = _poly(pt(0, 0), pt(1, 0), pt(0, 1))
    hexagon = _poly(pt(2, 0), pt(1, 2), pt(-1, 2), pt(-2, 0), pt(-1, -2), pt(1, -2))
    quad = _poly(pt(0, 0), pt(2, 0), pt(3, 2), pt(-1, 1))
    mink_a = seg01.minkowski(triangle)
    mink_b = square.minkowski(seg_diag)
    return [("seg01", seg01), ("seg03", seg03), ("seg-m12", seg_m12),
            ("seg-imag", seg_imag), ("seg-diag", seg_diag),
            ("square", square), ("triangle", triangle),
            ("hexagon", hexagon), ("quad", quad),
            ("mink-seg-tri", mink_a), ("mink-sq-diag", mink_b)]


def corpus_n2():
    """Dual-space polytopes in C^2* (ambient R^4)."""
    seg_e1 = _poly(pt(0, 0, 0, 0), pt(1, 0, 0, 0))
    seg_e2 = _poly(pt(0, 0, 0, 0), pt(0, 0, 1, 0))
    seg_cplx = _poly(pt(0, 0, 0, 0), pt(1, 0, 0, 1))
    square_real = _poly(pt(0, 0, 0, 0), pt(1, 0, 0, 0),
                        pt(0, 0, 1, 0), pt(1, 0, 1, 0))
    square_cplx = _poly(pt(0, 0, 0, 0), pt(1, 0, 0, 0),
                        pt(0, 1, 0, 0), pt(1, 1, 0, 0))  # degenerate 2-face
    tri_real = _poly(pt(0, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 0, 1, 0))
    tri_mixed = _poly(pt(0, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 0, 0, 1))
    mink_segs = seg_e1.minkowski(seg_cplx)
    prism = square_real.minkowski(seg_e1)
    simplex3 = _poly(pt(0, 0, 0, 0), pt(1, 0, 0, 0), pt(0, 0, 1, 0), pt(0, 1, 0, 0))
    point = _poly(pt(2, 0, -1, 0))
    return [("seg-e1", seg_e1), ("seg-e2", seg_e2), ("seg-cplx", seg_cplx),
            ("square-real", square_real), ("square-cplx", square_cplx),
            ("tri-real", tri_real), ("tri-mixed", tri_mixed),
            ("mink-segs", mink_segs), ("prism", prism),
            ("simplex3", simplex3), ("point", point)]


@pytest.fixture(scope="session")
def polytope_corpus():
    return corpus_n1() + corpus_n2()
