#include "octa/shapes.hpp"

#include <cmath>

#include "octa/error.hpp"
#include "octa/hull.hpp"

namespace octa {

SimplicialPolytope make_regular_octahedron() {
  SimplicialPolytope p;
  p.vertices = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  // One facet per octant, wound outward.
  p.facets = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
              {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return p;
}

SimplicialPolytope make_unit_tetrahedron() {
  SimplicialPolytope p;
  p.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  p.facets = {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {0, 3, 2}};
  return p;
}

SimplicialPolytope make_bipyramid_2k(int k) {
  if (k < 2) throw InvalidPolytope("bipyramid2k needs k >= 2");
  const int m = 2 * k;
  // Rational points on the unit circle via t = tan(theta/2):
  // (x, y) = ((1-t^2)/(1+t^2), 2t/(1+t^2)). Rounding t to a fixed grid keeps
  // the points exactly on the circle; monotone t keeps them in convex
  // position. theta = pi is the pole of the parametrization, handled as the
  // exact point (-1, 0).
  const long den = 1 << 14;
  std::vector<Point> eq;
  Rat prev_t;
  bool have_prev = false;
  for (int j = 0; j < m; ++j) {
    if (2 * j == m) {
      eq.push_back({-1, 0, 0});
      have_prev = false;
      continue;
    }
    double theta = M_PI * (2.0 * j) / m;
    double td = std::tan(theta / 2.0);
    Rat t(static_cast<long>(std::floor(td * den)), den);
    t.canonicalize();
    if (have_prev && t <= prev_t) t = prev_t + Rat(1, den);
    prev_t = t;
    have_prev = true;
    Rat t2 = t * t;
    Rat denom = Rat(1) + t2;
    eq.push_back({(Rat(1) - t2) / denom, Rat(2) * t / denom, Rat(0)});
  }

  SimplicialPolytope p;
  p.vertices = eq;
  p.vertices.push_back({0, 0, 1});
  p.vertices.push_back({0, 0, -1});
  int north = m, south = m + 1;
  for (int j = 0; j < m; ++j) {
    int a = j, b = (j + 1) % m;
    p.facets.push_back({a, b, north});
    p.facets.push_back({b, a, south});
  }
  return p;
}

SimplicialPolytope make_rational_icosahedron() {
  Rat phi(987, 610);  // ~1.61803, close enough to keep every facet strict
  Rat one(1), zero(0);
  SimplicialPolytope p;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) p.vertices.push_back({zero, Rat(s1) * one, Rat(s2) * phi});
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) p.vertices.push_back({Rat(s1) * one, Rat(s2) * phi, zero});
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) p.vertices.push_back({Rat(s2) * phi, zero, Rat(s1) * one});
  p.facets = convex_hull(p.vertices).facets;
  return p;
}

}  // namespace octa
