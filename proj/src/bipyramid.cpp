#include "octa/bipyramid.hpp"

#include <map>

#include "octa/error.hpp"

namespace octa {

ConeTriangulation cone_triangulate(const SimplicialPolytope& p, const Coloring& kappa) {
  ConeTriangulation t;
  t.polytope = p;
  t.coloring = kappa;
  t.apex = barycenter(p.vertices);
  // Interior by convexity; cheap to assert exactly.
  for (const auto& f : p.facets)
    if (orient(p.vertices[f[0]], p.vertices[f[1]], p.vertices[f[2]], t.apex) >= 0)
      throw InvalidPolytope("cone apex not strictly interior");
  return t;
}

void check_frame(const BipyramidFrame& f) {
  if (f.X1 == f.Y1) throw InvalidPolytope("frame: X1 == Y1");
  if (!strictly_between(f.X1, f.Y1, f.O))
    throw InvalidPolytope("frame: O not strictly inside segment X1Y1");
  if (collinear(f.X1, f.Y1, f.X2)) throw InvalidPolytope("frame: X1,Y1,X2 collinear");
  Plane l2 = plane_through(f.X1, f.Y1, f.X2);
  if (plane_side(l2, f.Y2) != 0) throw InvalidPolytope("frame: Y2 not in plane L2");
  int sx = side_in_plane(l2.normal, f.X1, f.Y1, f.X2);
  int sy = side_in_plane(l2.normal, f.X1, f.Y1, f.Y2);
  if (sx == 0 || sy == 0 || sx == sy)
    throw InvalidPolytope("frame: L1 does not separate X2 from Y2 in L2");
  int s3 = plane_side(l2, f.X3);
  int t3 = plane_side(l2, f.Y3);
  if (s3 == 0 || t3 == 0 || s3 == t3)
    throw InvalidPolytope("frame: L2 does not separate X3 from Y3");
}

Rat frame_volume(const BipyramidFrame& f) {
  Rat six(6);
  Rat v1 = abs(orient_value(f.X1, f.X2, f.Y2, f.X3)) / six;
  Rat v2 = abs(orient_value(f.X1, f.X2, f.Y2, f.Y3)) / six;
  return v1 + v2;
}

Rat GeneralizedBipyramid::volume() const { return frame_volume(frame); }

GeneralizedBipyramid make_bipyramid(const Point& equator_x1, const Point& equator_x2,
                                    const Point& equator_y2, const Point& apex_x3,
                                    const Point& apex_y3, int id) {
  GeneralizedBipyramid b;
  b.id = id;
  BipyramidFrame& f = b.frame;
  f.X1 = equator_x1;
  f.X2 = equator_x2;
  f.Y2 = equator_y2;
  f.Y1 = Rat(1, 2) * (f.X2 + f.Y2);  // barycenter of F1 = (Y2, X2)
  f.X3 = apex_x3;
  f.Y3 = apex_y3;
  f.O = Rat(1, 3) * (f.X1 + f.X2 + f.Y2);
  // Barycenter on the median: O = (X1 + 2 Y1)/3, exactly.
  if (Rat(3) * f.O != f.X1 + Rat(2) * f.Y1)
    throw InvalidPolytope("bipyramid: barycenter identity violated");
  check_frame(f);
  return b;
}

std::vector<GeneralizedBipyramid> match_bipyramids(const ConeTriangulation& t) {
  const SimplicialPolytope& p = t.polytope;
  const std::vector<int>& col = t.coloring.color;

  // Group facets by their unique {2,3}-colored edge.
  std::map<std::pair<int, int>, std::vector<int>> pair_edge;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    const auto& f = p.facets[fi];
    int v2 = -1, v3 = -1;
    for (int v : f) {
      if (col[v] == 2) v2 = v;
      if (col[v] == 3) v3 = v;
    }
    if (v2 < 0 || v3 < 0)
      throw MatchingFailure("facet " + std::to_string(fi) + " lacks a {2,3} edge");
    pair_edge[{v2, v3}].push_back(static_cast<int>(fi));
  }

  std::vector<GeneralizedBipyramid> out;
  for (auto& [edge, facets] : pair_edge) {
    if (facets.size() != 2)
      throw MatchingFailure("equatorial triangle for edge (" +
                            std::to_string(edge.first) + "," +
                            std::to_string(edge.second) + ") lies in " +
                            std::to_string(facets.size()) + " tetrahedra");
    auto third = [&](int fi) {
      for (int v : p.facets[fi])
        if (v != edge.first && v != edge.second) return v;
      throw MatchingFailure("degenerate facet");
    };
    // X1 = color-2 vertex of E, X2 = color-3 vertex, Y2 = apex (color 4).
    out.push_back(make_bipyramid(p.vertices[edge.first], p.vertices[edge.second],
                                 t.apex, p.vertices[third(facets[0])],
                                 p.vertices[third(facets[1])],
                                 static_cast<int>(out.size())));
  }
  return out;
}

}  // namespace octa
