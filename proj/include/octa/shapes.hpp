#pragma once

#include "octa/polytope.hpp"

namespace octa {

// conv(+-e1, +-e2, +-e3), outward-oriented octant facets.
SimplicialPolytope make_regular_octahedron();

// Unit tetrahedron (0,0,0),(1,0,0),(0,1,0),(0,0,1).
SimplicialPolytope make_unit_tetrahedron();

// Bipyramid over a 2k-gon: 2k rational points on the unit circle (exact
// Pythagorean parametrization of rounded tangent half-angles) plus apexes
// (0,0,+-1). Convex, simplicial and balanced; k >= 2.
SimplicialPolytope make_bipyramid_2k(int k);

// Icosahedron with the golden ratio replaced by the rational 987/610; the
// combinatorics survive the perturbation (validated exactly). Balanced it is
// not: all vertex degrees are 5.
SimplicialPolytope make_rational_icosahedron();

}  // namespace octa
