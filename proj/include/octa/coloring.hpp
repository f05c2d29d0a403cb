#pragma once

#include <vector>

#include "octa/polytope.hpp"

namespace octa {

// Proper 3-coloring of a polytope graph, colors in {1,2,3}. The cone apex
// later receives color 4.
struct Coloring {
  std::vector<int> color;  // indexed by vertex
};

// Deterministic forced propagation across the dual graph: the lowest-index
// facet gets colors 1,2,3 on its sorted vertices, and the third color of
// every neighbouring facet is determined by the shared edge. On an Eulerian
// sphere triangulation the coloring is forced once one facet is colored, so
// propagation either completes or proves the graph is not 3-chromatic.
// `seed` permutes the three seed colors (identity by default).
// Throws NotBalanced on contradiction.
Coloring three_color(const SimplicialPolytope& p);
Coloring three_color(const SimplicialPolytope& p, const std::array<int, 3>& seed);

}  // namespace octa
