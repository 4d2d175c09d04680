import random
from fractions import Fraction as F

import pytest

from conelab.delone import (
    _region_vertices,
    cells_incident_to_origin,
    delone_subdivision,
    delone_with_window_growth,
    dicing_subdivision,
    minkowski_sum_check,
    minkowski_sum_vertices,
    normalize_cell,
    secondary_cone_check,
    subdivisions_equal,
    voronoi_polytope,
)
from conelab.exact import IntMatrix, invert
from conelab.fixtures import load_graph, load_int_matrix, load_matrix
from conelab.matroids import cographic_representation
from conelab.quadforms import QuadForm
from conelab.tumatrix import TUMatrix

HEX = QuadForm(load_matrix("QHEX.txt"))
I2 = QuadForm(load_matrix("I2.txt"))
AK3 = TUMatrix.check(load_int_matrix("AK3.txt"))
AK4 = TUMatrix.check(load_int_matrix("AK4.txt"))


def test_delone_examples():
    s = delone_subdivision(HEX)
    assert s.cells == frozenset({
        ((0, 0), (0, 1), (1, 1)),
        ((0, 0), (1, 0), (1, 1)),
    })

    s2 = delone_subdivision(I2)
    assert s2.cells == frozenset({((0, 0), (0, 1), (1, 0), (1, 1))})

    s1 = delone_subdivision(QuadForm.from_rows([[1]]))
    assert s1.cells == frozenset({((0,), (1,))})


def test_delone_rejects_indefinite():
    with pytest.raises(ValueError):
        delone_subdivision(QuadForm.from_rows([[1, 2], [2, 1]]))


def test_delone_scaling_invariance():
    assert subdivisions_equal(delone_subdivision(HEX.scale(2)), delone_subdivision(HEX))
    assert subdivisions_equal(
        delone_subdivision(HEX.scale(F(1, 3))), delone_subdivision(HEX)
    )


def test_delone_gl_equivariance():
    h = IntMatrix([[1, 1], [0, 1]])
    q2 = HEX.conjugate(h)
    s2 = delone_subdivision(q2)
    s = delone_subdivision(HEX)
    # cells map pointwise through (h^t)^-1
    hti = invert(h.to_rational().transpose())
    mapped = set()
    for cell in s.cells:
        pts = [tuple(int(x) for x in hti.mul_vector([F(v) for v in p])) for p in cell]
        mapped.add(normalize_cell(pts))
    assert mapped == set(s2.cells)


def test_dicing_examples():
    d = dicing_subdivision(AK3)
    assert subdivisions_equal(d, delone_subdivision(HEX))

    d2 = dicing_subdivision(TUMatrix.check(IntMatrix.identity(2)))
    assert subdivisions_equal(d2, delone_subdivision(I2))

    strip = dicing_subdivision(TUMatrix.check(IntMatrix([[1], [0]])))
    assert len(strip.cells) == 1
    (cell,) = strip.cells
    xs = {p[0] for p in cell}
    assert xs == {0, 1}  # a vertical strip of width one


def test_dicing_rejects_non_unimodular():
    # the column (2, 0) is primitive-free: no integral row transform makes
    # the matrix totally unimodular
    with pytest.raises(ValueError):
        dicing_subdivision(TUMatrix(IntMatrix([[2], [0]])))


def test_dicing_vertices_are_lattice_points():
    """Arrangement axiom: every vertex of a unimodular dicing is integral.

    Exhausts the slab index vectors around the central cube for the fixture
    systems and checks that the true region vertices (computed from the
    hyperplane constraints, independent of any lattice scan) are integer
    points, and that the dicing stored exactly those points as the cell.
    """
    from itertools import product as iproduct

    for a in (AK3, TUMatrix.check(IntMatrix.identity(2))):
        cols = [tuple(c) for c in a.inner.columns()]
        g = a.inner.rows
        sub = dicing_subdivision(a)
        cell_classes = set(sub.cells)
        seen = set()
        for ks in iproduct(range(-2, 2), repeat=len(cols)):
            verts = _region_vertices(cols, ks, g)
            assert verts is not None, "a region vertex failed to be integral"
            if len(verts) < g + 1:
                continue
            from conelab.delone import _affine_rank, normalize_cell

            if _affine_rank(verts) != g:
                continue
            seen.add(normalize_cell(verts))
        # every full-dimensional region near the origin is one of the
        # stored classes
        assert cell_classes <= seen


def test_subdivisions_equal_guards():
    s = delone_subdivision(HEX)
    s2 = delone_subdivision(HEX, 4)
    with pytest.raises(ValueError):
        subdivisions_equal(s, s2)
    assert not subdivisions_equal(delone_subdivision(I2), s)


def test_delone_matches_dicing_for_interior_forms():
    rng = random.Random(3)
    assert secondary_cone_check(AK3, 10, rng)
    assert secondary_cone_check(TUMatrix.check(IntMatrix.identity(3)), 5, rng)


def test_secondary_cone_check_k4():
    rng = random.Random(5)
    assert secondary_cone_check(AK4, 3, rng)


def test_secondary_cone_check_theta_cographic():
    rng = random.Random(8)
    theta = load_graph("THETA.graph")
    a = TUMatrix.check(cographic_representation(theta))
    assert secondary_cone_check(a, 5, rng)


def test_degenerate_delone_via_rank_reduction():
    rank1 = QuadForm.from_rows([[1, 0], [0, 0]])
    s = delone_subdivision(rank1)
    strip = dicing_subdivision(TUMatrix.check(IntMatrix([[1], [0]])))
    assert subdivisions_equal(s, strip)

    zero = QuadForm.from_rows([[0, 0], [0, 0]])
    sz = delone_subdivision(zero)
    assert len(sz.cells) == 1  # the trivial subdivision


def test_window_growth():
    # a very skew form needs a bigger window and the growth helper finds it
    skew = QuadForm.from_rows([[9, F(-17, 2)], [F(-17, 2), 9]])
    sub, r = delone_with_window_growth(skew)
    assert r >= 3
    assert len(sub.cells) == 2  # still a triangulated type


def test_voronoi_examples():
    v = voronoi_polytope(I2, 2)
    assert set(v.vertices) == {
        (F(1, 2), F(1, 2)), (F(1, 2), F(-1, 2)),
        (F(-1, 2), F(1, 2)), (F(-1, 2), F(-1, 2)),
    }

    v = voronoi_polytope(HEX, 2)
    assert len(v.vertices) == 6
    assert (F(2, 3), F(1, 3)) in set(v.vertices)

    v = voronoi_polytope(QuadForm.from_rows([[1, 0], [0, 0]]), 2)
    assert set(v.vertices) == {(F(1, 2), F(0)), (F(-1, 2), F(0))}


def test_voronoi_duality_count_g2():
    # vertices of the cell around the origin match the number of
    # full-dimensional Delone cells incident to a lattice point
    for q in (HEX, I2):
        vor = voronoi_polytope(q, 2)
        sub = delone_subdivision(q)
        assert len(vor.vertices) == len(cells_incident_to_origin(sub))


def test_voronoi_completeness_certificate():
    # sheared square lattice: the facet vector (1,-3) escapes a radius-1
    # search box, and the boundedness certificate catches it
    q = QuadForm.from_rows([[1, 3], [3, 10]])
    with pytest.raises(ValueError):
        voronoi_polytope(q, 1)
    v = voronoi_polytope(q, 3)
    assert len(v.halfspaces) == 4 and len(v.vertices) == 4


def test_minkowski_sum_checks():
    assert minkowski_sum_check(AK3, 2)
    assert minkowski_sum_check(TUMatrix.check(IntMatrix.identity(2)), 2)
    assert minkowski_sum_check(AK4, 2)


def test_minkowski_vertices_square():
    segs = [(F(1), F(0)), (F(0), F(1))]
    verts = minkowski_sum_vertices(segs, 2)
    assert set(verts) == {
        (F(1, 2), F(1, 2)), (F(1, 2), F(-1, 2)),
        (F(-1, 2), F(1, 2)), (F(-1, 2), F(-1, 2)),
    }


def test_subdivision_json_stable():
    s = delone_subdivision(HEX)
    d1 = s.to_json_dict()
    d2 = delone_subdivision(HEX).to_json_dict()
    assert d1 == d2
    assert d1["g"] == 2 and d1["window"] == 3
    assert d1["cells"] == sorted(d1["cells"])
