#pragma once

#include <vector>

#include "octa/coloring.hpp"
#include "octa/polytope.hpp"

namespace octa {

// Cone triangulation of a balanced polytope: one tetrahedron per facet, all
// coned from the vertex centroid (strictly interior by convexity). The apex
// carries the fourth color.
struct ConeTriangulation {
  SimplicialPolytope polytope;
  Coloring coloring;
  Point apex;
};

ConeTriangulation cone_triangulate(const SimplicialPolytope& p, const Coloring& kappa);

// Frame of points the subdivision engine works on. L1 is the line X1-Y1
// (containing O strictly between them), L2 the plane spanned by X1,Y1,X2
// (which also contains Y2, with X2/Y2 strictly on opposite sides of L1),
// and X3/Y3 lie strictly on opposite sides of L2.
struct BipyramidFrame {
  Point O;
  Point X1, Y1, X2, Y2, X3, Y3;
};

// Checks the separation invariants above; throws InvalidPolytope otherwise.
void check_frame(const BipyramidFrame& f);

// Volume of the two tetrahedra (E, X3) and (E, Y3) over the equatorial
// triangle E = (X1, X2, Y2). For the tetrahedron variant the plane of E
// splits the simplex into exactly these halves, so the formula covers both.
Rat frame_volume(const BipyramidFrame& f);

// Two cone tetrahedra glued along an equatorial triangle E = {Y2, X1, X2}
// (the apex plus the unique {2,3}-colored edge), with flag F0 = Y2 (apex),
// F1 = (Y2, X2), and Y1 the barycenter of F1. O is the barycenter of E.
struct GeneralizedBipyramid {
  BipyramidFrame frame;
  int id = 0;

  // The two tetrahedra S1 = (E, X3) and S2 = (E, Y3).
  Rat volume() const;
};

// Constructs a bipyramid from an equatorial triangle, two apexes and the
// flag, validating every frame invariant (including O at parameter 2/3 on
// the median from X1).
GeneralizedBipyramid make_bipyramid(const Point& equator_x1, const Point& equator_x2,
                                    const Point& equator_y2, const Point& apex_x3,
                                    const Point& apex_y3, int id = 0);

// Matches the cone tetrahedra into f2/2 flagged bipyramids via the
// {2,3}-colored polytope edges. Throws MatchingFailure when some equatorial
// triangle is not shared by exactly two tetrahedra.
std::vector<GeneralizedBipyramid> match_bipyramids(const ConeTriangulation& t);

}  // namespace octa
