#pragma once

#include <array>
#include <vector>

#include "octa/geom.hpp"

namespace octa {

// Convex simplicial 3-polytope: vertices plus outward-oriented triangular
// facets. For interior x and any facet (a,b,c), orient(a,b,c,x) == -1.
struct SimplicialPolytope {
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> facets;

  int f0() const { return static_cast<int>(vertices.size()); }
  int f2() const { return static_cast<int>(facets.size()); }
  int f1() const;  // distinct undirected edges
};

// Full structural + geometric validation: closed 2-sphere (each edge in
// exactly two facets, consistent orientation, connected), strict convexity
// of every facet plane, Euler relation and f2 = 2(f0-2).
// Throws InvalidPolytope with a description of the first violation.
void validate_polytope(const SimplicialPolytope& p);

// Exact volume from the vertex average (valid polytope required).
Rat polytope_volume(const SimplicialPolytope& p);

}  // namespace octa
