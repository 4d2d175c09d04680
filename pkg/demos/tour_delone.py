"""Walkthrough: Delone subdivisions, dicings, and Voronoi duality."""

import random

from conelab.delone import (
    cells_incident_to_origin,
    delone_subdivision,
    dicing_subdivision,
    minkowski_sum_check,
    secondary_cone_check,
    subdivisions_equal,
    voronoi_polytope,
)
from conelab.exact import IntMatrix
from conelab.matroids import complete_graph, graphic_representation
from conelab.quadforms import QuadForm
from conelab.tumatrix import TUMatrix


def main():
    hexform = QuadForm.from_rows([[2, -1], [-1, 2]])
    print("=== two ways to triangulate the plane ===")
    s = delone_subdivision(hexform)
    print("Del([[2,-1],[-1,2]]) cell classes:")
    for cell in s.sorted_cells():
        print("  ", cell)

    ak3 = TUMatrix.check(graphic_representation(complete_graph(3)))
    d = dicing_subdivision(ak3)
    print("dicing of the triangle representation gives the same classes:",
          subdivisions_equal(s, d))

    print()
    print("=== the square type ===")
    i2 = QuadForm(IntMatrix.identity(2).to_rational())
    s2 = delone_subdivision(i2)
    print("Del(I2) classes:", s2.sorted_cells())
    print("equal to the hexagonal type:", subdivisions_equal(s2, s))

    print()
    print("=== interior forms all look alike ===")
    rng = random.Random(0)
    print("5 random interior forms of the triangle cone reproduce its dicing:",
          secondary_cone_check(ak3, 5, rng))

    print()
    print("=== duality: Voronoi cell vertices vs cells at a lattice point ===")
    for name, q in (("hexagonal", hexform), ("square", i2)):
        vor = voronoi_polytope(q, 2)
        incident = cells_incident_to_origin(delone_subdivision(q))
        print(f"{name}: {len(vor.vertices)} Voronoi vertices, "
              f"{len(incident)} cells at the origin")

    print()
    print("=== Voronoi cells of column-sum forms are zonotopes ===")
    ak4 = TUMatrix.check(graphic_representation(complete_graph(4)))
    print("K4 system: Voronoi cell (the permutohedron) equals its segment sum:",
          minkowski_sum_check(ak4, 2))


if __name__ == "__main__":
    main()
