#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "octa/geom.hpp"

namespace octa {

// One octahedral cell: six indices into a shared vertex pool, stored in
// pairing order (v[0],v[1]), (v[2],v[3]), (v[4],v[5]) antipodal. The eight
// triangles choosing one vertex per pair are exactly the cell's facets once
// the cell certifies.
struct OctaCell {
  std::array<int, 6> v;
  int type = 0;  // 1..4 per the reference taxonomy, 0 = untagged
};

// The eight one-per-pair vertex triples of a cell, in a fixed order.
std::array<std::array<int, 3>, 8> cell_triangles(const OctaCell& cell);

// The twelve edges (every cross-pair of distinct antipodal classes).
std::array<std::array<int, 2>, 12> cell_edges(const OctaCell& cell);

// Certified combinatorial-octahedron test: true iff all eight one-per-pair
// triangles are strictly supporting (the remaining three points strictly on
// one common side). Equivalent to: all six points are hull vertices, the
// hull is simplicial, and no pair forms a hull edge.
bool is_cross_polytope(const std::array<Point, 6>& pts,
                       const std::array<std::array<int, 2>, 3>& pairs);

// Convenience overload in pairing order (0,1)(2,3)(4,5).
bool is_cross_polytope(const std::array<Point, 6>& pts);

struct CrossPolytopalComplex {
  std::vector<Point> vertices;
  std::vector<OctaCell> cells;

  const Point& pt(int i) const { return vertices[i]; }
  std::array<Point, 6> cell_points(const OctaCell& c) const;
};

// Deduplicating builder: identical rational points map to one pool index, so
// shared faces are identified by construction. Pool order is first-appearance
// order, which keeps outputs deterministic.
class ComplexBuilder {
 public:
  int add_point(const Point& p);
  void add_cell(const std::array<Point, 6>& pts, int type);
  const CrossPolytopalComplex& complex() const { return c_; }
  CrossPolytopalComplex take() { return std::move(c_); }

 private:
  CrossPolytopalComplex c_;
  std::map<Point, int, PointLess> index_;
};

enum class ValidateLevel { fast, full };

struct Violation {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// fast: every cell certifies, pool points distinct, and every triangle lies
// in one or two cells (shared-face geometry is exact by pooling).
// full: additionally tests every box-overlapping cell pair for proper
// intersection: the common vertex set must be a face of both cells and the
// geometric intersection must not exceed its convex hull.
ValidationReport validate_complex(const CrossPolytopalComplex& c, ValidateLevel level);

// (f0, f1, f2, f3) after identification of shared faces.
std::array<long, 4> f_vector(const CrossPolytopalComplex& c);

// All triangles lying in exactly one cell, sorted deterministically.
std::vector<std::array<int, 3>> boundary_of(const CrossPolytopalComplex& c);

// True iff the boundary is combinatorially the boundary of the 3-dimensional
// cross-polytope: 8 triangles on 6 vertices whose non-adjacency graph is a
// perfect matching, the triangles being exactly the one-per-pair choices.
bool boundary_is_octahedral(const CrossPolytopalComplex& c);

// True iff the two certified cells (pairing order (0,1)(2,3)(4,5), shared
// points exactly equal) intersect in a common face of both.
bool cells_intersect_properly(const std::array<Point, 6>& a,
                              const std::array<Point, 6>& b);

// Exact volume of one cell.
Rat cell_volume(const CrossPolytopalComplex& c, const OctaCell& cell);

// Exact sum of all cell volumes.
Rat total_volume(const CrossPolytopalComplex& c);

}  // namespace octa
