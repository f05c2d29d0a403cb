#pragma once

#include <array>
#include <vector>

#include "octa/geom.hpp"

namespace octa {

// Facet list of a 3-dimensional convex hull. Facets are triangles of input
// indices, oriented outward: for every facet (a,b,c) and interior point x,
// orient(a,b,c,x) == -1. Input points that are not hull vertices appear in
// no facet. Coplanar hull faces come out fan-triangulated.
struct HullFacets {
  std::vector<Point> points;
  std::vector<std::array<int, 3>> facets;
};

// Exact hull of a tiny point set (everything in this artifact has <= 30
// points, most have 6). Enumerates supporting planes by brute force, groups
// coplanar triples, and walks each face polygon with exact predicates, so
// degeneracies (interior points, on-edge points, coplanar faces) are handled
// without tolerances. Throws DegenerateInput when all points are coplanar.
HullFacets convex_hull(std::vector<Point> points);

// True iff the open segment (a,b) contains a point strictly inside the hull.
// Clips the parametric segment against every facet halfspace exactly.
bool segment_meets_interior(const HullFacets& hull, const Point& a, const Point& b);

// True iff p is inside or on the boundary of the hull.
bool point_in_closed_hull(const HullFacets& hull, const Point& p);

// Exact volume: signed-tetrahedra sum from the hull-vertex average. Always
// positive for a valid hull.
Rat volume(const HullFacets& hull);

}  // namespace octa
