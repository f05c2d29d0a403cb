#pragma once

#include <array>
#include <map>

#include "octa/bipyramid.hpp"
#include "octa/complex.hpp"

namespace octa {

// Caps for the deterministic halving searches. They convert violated
// preconditions into hard errors instead of non-termination; rational
// bit-length grows linearly with halvings, so they also bound output size.
struct SearchConfig {
  int halving_cap = 64;
  int assembly_retry_cap = 16;
};

// Everything the four search stages produce for one bipyramid frame.
// c = (V1,W1,V2,W2,V3,W3) is the inner cross-polytope, with c[u] on the
// segment from O toward the matching frame vertex at shrink factor t.
// edge_points maps each of the 12 edges of C (as index pairs into c) to a
// point strictly interior to that edge. epsilon scales C about O to give
// the type-4 cell.
struct InnerFrame {
  std::array<Point, 6> c;
  Rat t1, t2, t3;
  std::map<std::pair<int, int>, Point> edge_points;
  Rat delta2, delta3;
  Rat epsilon;

  const Point& pe(int u, int v) const {
    return edge_points.at({std::min(u, v), std::max(u, v)});
  }
};

// Stage 1: place the inner cross-polytope. t1 = 1/2; t2 and t3 start at half
// the previous factor and halve until the new diagonal crosses the hull of
// the previously placed points (exact predicates). Throws SearchExhausted.
InnerFrame inner_cross_polytope(const BipyramidFrame& b, const SearchConfig& cfg,
                                int extra_halvings = 0);

// Stage 2: slice the edges of C with lines/planes parallel to L1/L2, halving
// the offsets until every Q_U = conv(U, O, {P_e : U in e}) certifies.
void edge_points(const BipyramidFrame& b, InnerFrame& f, const SearchConfig& cfg,
                 int extra_halvings = 0);

// Stage 3: shrink factor for the type-4 cell; halves until all six type-3
// candidates certify and eps*C meets each of them only in the shared vertex.
void choose_epsilon(const BipyramidFrame& b, InnerFrame& f, const SearchConfig& cfg,
                    int extra_halvings = 0);

// Stage 4: emit the 23 cells (8 type-1, 8 type-2, 6 type-3, 1 type-4) into
// the builder, re-certifying each. Throws CellCertificationFailed.
void assemble_cells(const BipyramidFrame& b, const InnerFrame& f, ComplexBuilder& out);

// All four stages plus the bounded joint retry (every parameter halved once
// more per round). Returns the 23-cell complex of one frame.
CrossPolytopalComplex subdivide_frame(const BipyramidFrame& b, const SearchConfig& cfg = {});

// Full pipeline: 3-coloring, cone triangulation, matching, one 23-cell
// subdivision per bipyramid, merged over a shared vertex pool. The result is
// a proper subdivision with 23(f0-2) cells.
CrossPolytopalComplex octahedralize(const SimplicialPolytope& p, const SearchConfig& cfg = {});

// Non-proper 23-cell subdivision of a single tetrahedron, flag fixed to
// F0 = s[0], F1 = (s[0],s[1]), F2 = (s[0],s[1],s[2]). The boundary picks up
// the facet barycenter and the edge midpoint and is combinatorially the
// boundary of the cross-polytope.
CrossPolytopalComplex subdivide_tetrahedron(const std::array<Point, 4>& s,
                                            const SearchConfig& cfg = {});

// The reference decomposition of the regular octahedron into 23 cells
// (Schlegel picture of the 24-cell): cuboctahedron scale lambda and inner
// octahedron scale mu found by the same halving search from (1/2, 1/4).
CrossPolytopalComplex schlegel_24cell_reference(const SearchConfig& cfg = {});

}  // namespace octa
