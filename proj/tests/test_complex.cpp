#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octa/complex.hpp"
#include "octa/error.hpp"
#include "octa/hull.hpp"
#include "oracles.hpp"

using namespace octa;

namespace {

std::array<Point, 6> octa_points() {
  // Pairing order (e1,-e1)(e2,-e2)(e3,-e3).
  return {Point(1, 0, 0), Point(-1, 0, 0), Point(0, 1, 0),
          Point(0, -1, 0), Point(0, 0, 1), Point(0, 0, -1)};
}

CrossPolytopalComplex single_cell() {
  ComplexBuilder b;
  b.add_cell(octa_points(), 4);
  return b.take();
}

std::array<Point, 6> translated(const std::array<Point, 6>& pts, const Point& t) {
  std::array<Point, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = pts[i] + t;
  return out;
}

}  // namespace

TEST_CASE("is_cross_polytope on the regular octahedron") {
  CHECK(is_cross_polytope(octa_points()));
  // Pairing two adjacent vertices makes e1e2 a claimed non-edge, which it is not.
  CHECK(!is_cross_polytope(octa_points(), {{{0, 2}, {1, 3}, {4, 5}}}));
}

TEST_CASE("is_cross_polytope rejects a point inside the hull of the others") {
  std::array<Point, 6> pts = octa_points();
  pts[5] = barycenter({pts[0], pts[1], pts[2], pts[3], pts[4]});
  CHECK(!is_cross_polytope(pts));
  CHECK(!oracle::brute_force_is_octahedron(pts, {{{0, 1}, {2, 3}, {4, 5}}}));
}

TEST_CASE("is_cross_polytope matches the hull-lattice oracle on random configs") {
  oracle::RatGen gen(101);
  const std::array<std::array<int, 2>, 3> pairs = {{{0, 1}, {2, 3}, {4, 5}}};
  int agree_true = 0;
  for (int it = 0; it < 250; ++it) {
    std::array<Point, 6> pts;
    for (auto& p : pts) p = gen.point();
    bool mine = is_cross_polytope(pts, pairs);
    bool oracle_says = oracle::brute_force_is_octahedron(pts, pairs);
    CHECK(mine == oracle_says);
    if (mine) ++agree_true;
  }
  // Random affine images of the octahedron exercise the true branch.
  for (int it = 0; it < 100; ++it) {
    Point col1 = gen.point(), col2 = gen.point(), col3 = gen.point(), t = gen.point();
    if (orient(Point(0, 0, 0), col1, col2, col3) == 0) continue;
    std::array<Point, 6> pts;
    auto base = octa_points();
    for (int i = 0; i < 6; ++i)
      pts[i] = Point(base[i].x * col1.x + base[i].y * col2.x + base[i].z * col3.x,
                     base[i].x * col1.y + base[i].y * col2.y + base[i].z * col3.y,
                     base[i].x * col1.z + base[i].y * col2.z + base[i].z * col3.z) +
               t;
    bool mine = is_cross_polytope(pts, pairs);
    CHECK(mine);
    CHECK(oracle::brute_force_is_octahedron(pts, pairs));
    if (mine) ++agree_true;
  }
  CHECK(agree_true >= 100);  // the equivalence was exercised on true instances
}

TEST_CASE("f-vector and boundary of a single cell") {
  CrossPolytopalComplex c = single_cell();
  CHECK(f_vector(c) == std::array<long, 4>{6, 12, 8, 1});
  CHECK(boundary_of(c).size() == 8);
  CHECK(boundary_is_octahedral(c));
  CHECK(validate_complex(c, ValidateLevel::full).ok());
  CHECK(cell_volume(c, c.cells[0]) == rat(4, 3));
}

TEST_CASE("two cells glued along an edge validate") {
  ComplexBuilder b;
  b.add_cell(octa_points(), 0);
  b.add_cell(translated(octa_points(), Point(1, 1, 0)), 0);
  auto c = b.take();
  CHECK(c.vertices.size() == 10);  // two shared points
  CHECK(validate_complex(c, ValidateLevel::full).ok());
}

TEST_CASE("two cells glued along a facet validate") {
  // Reflect the octahedron through the plane x+y+z = 1; the facet
  // (e1,e2,e3) is shared exactly.
  std::array<Point, 6> mirror;
  auto base = octa_points();
  for (int i = 0; i < 6; ++i) {
    const Point& p = base[i];
    Rat defect = Rat(1) - p.x - p.y - p.z;
    mirror[i] = p + (rat(2, 3) * defect) * Point(1, 1, 1);
  }
  ComplexBuilder b;
  b.add_cell(base, 0);
  b.add_cell(mirror, 0);
  auto c = b.take();
  CHECK(c.vertices.size() == 9);  // three shared points
  CHECK(validate_complex(c, ValidateLevel::full).ok());
  CHECK(boundary_of(c).size() == 14);
}

TEST_CASE("touching at a single vertex validates; box overlap alone does not fail") {
  ComplexBuilder b;
  b.add_cell(octa_points(), 0);
  b.add_cell(translated(octa_points(), Point(2, 0, 0)), 0);
  CHECK(validate_complex(b.complex(), ValidateLevel::full).ok());

  ComplexBuilder d;
  d.add_cell(octa_points(), 0);
  d.add_cell(translated(octa_points(), Point(1, 1, 1)), 0);  // disjoint, boxes overlap
  CHECK(validate_complex(d.complex(), ValidateLevel::full).ok());
}

TEST_CASE("overlapping translated copies fail full validation only") {
  ComplexBuilder b;
  b.add_cell(octa_points(), 0);
  b.add_cell(translated(octa_points(), Point(rat(1, 2), rat(0), rat(0))), 0);
  auto c = b.take();
  CHECK(validate_complex(c, ValidateLevel::fast).ok());
  auto rep = validate_complex(c, ValidateLevel::full);
  CHECK(!rep.ok());
  CHECK(rep.violations[0].check == "NonFaceIntersection");
}

TEST_CASE("a miscertified cell is caught at fast level") {
  ComplexBuilder b;
  b.add_cell(octa_points(), 0);
  auto c = b.take();
  std::swap(c.cells[0].v[1], c.cells[0].v[2]);  // break the pairing
  auto rep = validate_complex(c, ValidateLevel::fast);
  CHECK(!rep.ok());
  CHECK(rep.violations[0].check == "CellNotCrossPolytope");
}

TEST_CASE("cells_intersect_properly distinguishes face contact from overlap") {
  auto base = octa_points();
  CHECK(cells_intersect_properly(base, translated(base, Point(2, 0, 0))));
  CHECK(cells_intersect_properly(base, translated(base, Point(1, 1, 0))));
  CHECK(!cells_intersect_properly(base, translated(base, Point(1, 0, 0))));
  // A vertex of one cell in the interior of the other.
  CHECK(!cells_intersect_properly(
      base, translated(base, Point(rat(3, 2), rat(0), rat(0)))));
}
