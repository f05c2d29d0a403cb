#include "octa/complex.hpp"

#include <algorithm>
#include <set>

#include "octa/error.hpp"
#include "octa/hull.hpp"

namespace octa {

std::array<std::array<int, 3>, 8> cell_triangles(const OctaCell& cell) {
  std::array<std::array<int, 3>, 8> out;
  int n = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[n++] = {cell.v[i], cell.v[2 + j], cell.v[4 + k]};
  return out;
}

std::array<std::array<int, 2>, 12> cell_edges(const OctaCell& cell) {
  std::array<std::array<int, 2>, 12> out;
  int n = 0;
  for (int p = 0; p < 3; ++p)
    for (int q = p + 1; q < 3; ++q)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[n++] = {cell.v[2 * p + i], cell.v[2 * q + j]};
  return out;
}

bool is_cross_polytope(const std::array<Point, 6>& pts,
                       const std::array<std::array<int, 2>, 3>& pairs) {
  // Each one-per-pair triangle must have the three remaining points strictly
  // on a single side. That forces the hull to be simplicial with exactly
  // these 8 facets, all 6 points vertices, and no pair an edge.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        const Point& a = pts[pairs[0][i]];
        const Point& b = pts[pairs[1][j]];
        const Point& c = pts[pairs[2][k]];
        const Point& a2 = pts[pairs[0][1 - i]];
        const Point& b2 = pts[pairs[1][1 - j]];
        const Point& c2 = pts[pairs[2][1 - k]];
        int s = orient(a, b, c, a2);
        if (s == 0) return false;
        if (orient(a, b, c, b2) != s) return false;
        if (orient(a, b, c, c2) != s) return false;
      }
    }
  }
  return true;
}

bool is_cross_polytope(const std::array<Point, 6>& pts) {
  return is_cross_polytope(pts, {{{0, 1}, {2, 3}, {4, 5}}});
}

std::array<Point, 6> CrossPolytopalComplex::cell_points(const OctaCell& c) const {
  std::array<Point, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = vertices[c.v[i]];
  return out;
}

int ComplexBuilder::add_point(const Point& p) {
  auto it = index_.find(p);
  if (it != index_.end()) return it->second;
  int id = static_cast<int>(c_.vertices.size());
  c_.vertices.push_back(p);
  index_.emplace(p, id);
  return id;
}

void ComplexBuilder::add_cell(const std::array<Point, 6>& pts, int type) {
  OctaCell cell;
  cell.type = type;
  for (int i = 0; i < 6; ++i) cell.v[i] = add_point(pts[i]);
  c_.cells.push_back(cell);
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::string s = violations[0].check + ": " + violations[0].detail;
  if (violations.size() > 1)
    s += " (+" + std::to_string(violations.size() - 1) + " more)";
  return s;
}

namespace {

std::array<int, 3> sorted3(std::array<int, 3> t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Per-cell data cached for the pairwise test.
struct CellGeom {
  std::array<Point, 6> pts;
  std::array<Plane, 8> planes;  // outward facet planes
  Point lo, hi;                 // bounding box
};

CellGeom cell_geom(const CrossPolytopalComplex& c, const OctaCell& cell) {
  CellGeom g;
  g.pts = c.cell_points(cell);
  g.lo = g.hi = g.pts[0];
  for (const Point& p : g.pts) {
    if (p.x < g.lo.x) g.lo.x = p.x;
    if (p.y < g.lo.y) g.lo.y = p.y;
    if (p.z < g.lo.z) g.lo.z = p.z;
    if (p.x > g.hi.x) g.hi.x = p.x;
    if (p.y > g.hi.y) g.hi.y = p.y;
    if (p.z > g.hi.z) g.hi.z = p.z;
  }
  auto tris = cell_triangles(cell);
  for (int t = 0; t < 8; ++t) {
    // Local positions of the triangle's vertices within the cell.
    std::array<int, 3> loc;
    for (int e = 0; e < 3; ++e)
      loc[e] = static_cast<int>(std::find(cell.v.begin(), cell.v.end(), tris[t][e]) -
                                cell.v.begin());
    Plane h = plane_through(g.pts[loc[0]], g.pts[loc[1]], g.pts[loc[2]]);
    // Orient outward: the antipode of the first vertex must be strictly inside.
    int anti = loc[0] ^ 1;
    if (plane_side(h, g.pts[anti]) > 0) {
      h.normal = Rat(-1) * h.normal;
      h.offset = -h.offset;
    }
    g.planes[t] = h;
  }
  return g;
}

bool boxes_disjoint(const CellGeom& a, const CellGeom& b) {
  return a.hi.x < b.lo.x || b.hi.x < a.lo.x || a.hi.y < b.lo.y || b.hi.y < a.lo.y ||
         a.hi.z < b.lo.z || b.hi.z < a.lo.z;
}

// Membership of a point in the convex hull of 0..3 common vertices.
bool in_common_face(const std::vector<Point>& face, const Point& p) {
  switch (face.size()) {
    case 0:
      return false;
    case 1:
      return p == face[0];
    case 2:
      return on_segment(face[0], face[1], p);
    default: {
      if (orient(face[0], face[1], face[2], p) != 0) return false;
      Point n = cross(face[1] - face[0], face[2] - face[0]);
      for (int e = 0; e < 3; ++e) {
        const Point& a = face[e];
        const Point& b = face[(e + 1) % 3];
        const Point& other = face[(e + 2) % 3];
        int ref = side_in_plane(n, a, b, other);
        int s = side_in_plane(n, a, b, p);
        if (s != 0 && s != ref) return false;
      }
      return true;
    }
  }
}

// A common vertex set is a face of the cell iff its members occupy distinct
// antipodal classes (any 1 is a vertex, 2 span an edge, 3 a facet).
bool is_face_of(const OctaCell& cell, const std::vector<int>& common) {
  if (common.size() > 3) return false;
  std::set<int> classes;
  for (int v : common) {
    int pos = -1;
    for (int i = 0; i < 6; ++i)
      if (cell.v[i] == v) pos = i;
    if (pos < 0) return false;
    if (!classes.insert(pos / 2).second) return false;
  }
  return true;
}

// Fast certificate for properly glued pairs: a facet plane of `host` that
// contains every common vertex and has all non-common vertices of `other`
// strictly beyond it proves host-and-other intersect exactly in
// conv(common). Opportunistic; callers fall back to the exhaustive test.
bool facet_plane_separates(const OctaCell& host, const CellGeom& host_geom,
                           const OctaCell& other, const CellGeom& other_geom,
                           const std::vector<int>& common) {
  auto tris = cell_triangles(host);
  for (int t = 0; t < 8; ++t) {
    bool contains_common = true;
    for (int v : common) {
      if (v != tris[t][0] && v != tris[t][1] && v != tris[t][2]) {
        contains_common = false;
        break;
      }
    }
    if (!contains_common) continue;
    const Plane& h = host_geom.planes[t];
    bool beyond = true;
    for (int i = 0; i < 6 && beyond; ++i) {
      bool is_common = false;
      for (int v : common)
        if (other.v[i] == v) is_common = true;
      if (!is_common && plane_side(h, other_geom.pts[i]) <= 0) beyond = false;
    }
    if (beyond) return true;
  }
  return false;
}

// Values of one cell's vertices against the other's facet planes; everything
// else in the exhaustive pair test reads from this matrix.
using ValueMatrix = std::array<std::array<Rat, 8>, 6>;

ValueMatrix values_against(const CellGeom& pts_of, const CellGeom& planes_of) {
  ValueMatrix m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 8; ++j) m[i][j] = plane_value(planes_of.planes[j], pts_of.pts[i]);
  return m;
}

bool vertex_inside(const ValueMatrix& m, int i) {
  for (int j = 0; j < 8; ++j)
    if (sgn(m[i][j]) > 0) return false;
  return true;
}

// Clip edge (a,b) of the matrix's own cell against the other cell using the
// precomputed values; the clipped part must stay inside conv(face).
bool clipped_edge_ok(const ValueMatrix& m, int a, int b, const CellGeom& own,
                     const std::vector<Point>& face) {
  Rat lo(0), hi(1);
  for (int j = 0; j < 8; ++j) {
    const Rat& g0 = m[a][j];
    const Rat& g1 = m[b][j];
    if (g0 == g1) {
      if (sgn(g0) > 0) return true;
      continue;
    }
    Rat t = g0 / (g0 - g1);
    if (g1 < g0) {
      if (t > lo) lo = t;
    } else {
      if (t < hi) hi = t;
    }
    if (lo > hi) return true;
  }
  Point pa = lerp(own.pts[a], own.pts[b], lo);
  Point pb = lerp(own.pts[a], own.pts[b], hi);
  return in_common_face(face, pa) && in_common_face(face, pb);
}

void check_pair(const CrossPolytopalComplex& c, int ia, int ib, const CellGeom& ga,
                const CellGeom& gb, std::vector<Violation>& out) {
  const OctaCell& A = c.cells[ia];
  const OctaCell& B = c.cells[ib];
  auto fail = [&](const std::string& why) {
    out.push_back({"NonFaceIntersection",
                   "cells " + std::to_string(ia) + "," + std::to_string(ib) + ": " + why});
  };

  std::vector<int> common;
  for (int v : A.v)
    for (int w : B.v)
      if (v == w) common.push_back(v);
  if (common.size() > 3) {
    fail("share " + std::to_string(common.size()) + " vertices");
    return;
  }
  if (!is_face_of(A, common) || !is_face_of(B, common)) {
    fail("shared vertices are not a face of both");
    return;
  }
  if (!common.empty() && (facet_plane_separates(A, ga, B, gb, common) ||
                          facet_plane_separates(B, gb, A, ga, common)))
    return;
  if (common.empty()) {
    // Disjointness certificate: some facet plane with the whole other cell
    // strictly beyond it, evaluated lazily with early abort.
    auto separated_by_facet = [](const CellGeom& host, const CellGeom& other) {
      for (const Plane& h : host.planes) {
        bool separated = true;
        for (const Point& p : other.pts)
          if (plane_side(h, p) <= 0) {
            separated = false;
            break;
          }
        if (separated) return true;
      }
      return false;
    };
    if (separated_by_facet(ga, gb) || separated_by_facet(gb, ga)) return;
  }

  std::vector<Point> face;
  for (int v : common) face.push_back(c.pt(v));

  ValueMatrix a_vs_b = values_against(ga, gb);
  ValueMatrix b_vs_a = values_against(gb, ga);

  // Vertex containment: a vertex of one cell inside the other must be shared.
  for (int i = 0; i < 6; ++i) {
    if (vertex_inside(a_vs_b, i) && !in_common_face(face, ga.pts[i])) {
      fail("vertex of first cell intrudes");
      return;
    }
    if (vertex_inside(b_vs_a, i) && !in_common_face(face, gb.pts[i])) {
      fail("vertex of second cell intrudes");
      return;
    }
  }
  // Edge clipping: any part of an edge inside the other cell must lie in the
  // common face. Every vertex of the true intersection polytope lies on an
  // edge of one of the two cells, so this is exhaustive.
  auto local = [](const OctaCell& cell, int pool) {
    for (int i = 0; i < 6; ++i)
      if (cell.v[i] == pool) return i;
    return -1;
  };
  for (const auto& e : cell_edges(A)) {
    if (!clipped_edge_ok(a_vs_b, local(A, e[0]), local(A, e[1]), ga, face)) {
      fail("edge of first cell intrudes");
      return;
    }
  }
  for (const auto& e : cell_edges(B)) {
    if (!clipped_edge_ok(b_vs_a, local(B, e[0]), local(B, e[1]), gb, face)) {
      fail("edge of second cell intrudes");
      return;
    }
  }
}

}  // namespace

ValidationReport validate_complex(const CrossPolytopalComplex& c, ValidateLevel level) {
  ValidationReport rep;
  // Pool sanity.
  {
    std::map<Point, int, PointLess> seen;
    for (size_t i = 0; i < c.vertices.size(); ++i) {
      auto [it, fresh] = seen.emplace(c.vertices[i], static_cast<int>(i));
      if (!fresh)
        rep.violations.push_back(
            {"DuplicatePoolPoint",
             "indices " + std::to_string(it->second) + "," + std::to_string(i)});
    }
  }
  const int n = static_cast<int>(c.vertices.size());
  for (size_t ci = 0; ci < c.cells.size(); ++ci) {
    const OctaCell& cell = c.cells[ci];
    std::set<int> distinct(cell.v.begin(), cell.v.end());
    bool in_range = true;
    for (int v : cell.v)
      if (v < 0 || v >= n) in_range = false;
    if (!in_range || distinct.size() != 6) {
      rep.violations.push_back({"BadCellIndices", "cell " + std::to_string(ci)});
      continue;
    }
    if (!is_cross_polytope(c.cell_points(cell)))
      rep.violations.push_back({"CellNotCrossPolytope", "cell " + std::to_string(ci)});
  }
  if (!rep.ok()) return rep;

  // Triangle incidence: every triangle in one or two cells.
  std::map<std::array<int, 3>, int> tri_count;
  for (const auto& cell : c.cells)
    for (const auto& t : cell_triangles(cell)) tri_count[sorted3(t)]++;
  for (auto& [t, k] : tri_count) {
    if (k > 2)
      rep.violations.push_back(
          {"TriangleInTooManyCells", "(" + std::to_string(t[0]) + "," +
                                         std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                         ") in " + std::to_string(k) + " cells"});
  }
  if (level == ValidateLevel::fast || !rep.ok()) return rep;

  std::vector<CellGeom> geoms;
  geoms.reserve(c.cells.size());
  for (const auto& cell : c.cells) geoms.push_back(cell_geom(c, cell));
  for (size_t i = 0; i < c.cells.size(); ++i)
    for (size_t j = i + 1; j < c.cells.size(); ++j) {
      if (boxes_disjoint(geoms[i], geoms[j])) continue;
      check_pair(c, static_cast<int>(i), static_cast<int>(j), geoms[i], geoms[j],
                 rep.violations);
    }
  return rep;
}

std::array<long, 4> f_vector(const CrossPolytopalComplex& c) {
  std::set<int> verts;
  std::set<std::pair<int, int>> edges;
  std::set<std::array<int, 3>> tris;
  for (const auto& cell : c.cells) {
    for (int v : cell.v) verts.insert(v);
    for (const auto& e : cell_edges(cell))
      edges.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
    for (const auto& t : cell_triangles(cell)) tris.insert(sorted3(t));
  }
  return {static_cast<long>(verts.size()), static_cast<long>(edges.size()),
          static_cast<long>(tris.size()), static_cast<long>(c.cells.size())};
}

std::vector<std::array<int, 3>> boundary_of(const CrossPolytopalComplex& c) {
  std::map<std::array<int, 3>, int> tri_count;
  for (const auto& cell : c.cells)
    for (const auto& t : cell_triangles(cell)) tri_count[sorted3(t)]++;
  std::vector<std::array<int, 3>> out;
  for (auto& [t, k] : tri_count)
    if (k == 1) out.push_back(t);
  return out;
}

bool boundary_is_octahedral(const CrossPolytopalComplex& c) {
  auto tris = boundary_of(c);
  if (tris.size() != 8) return false;
  std::set<int> verts;
  for (auto& t : tris) verts.insert(t.begin(), t.end());
  if (verts.size() != 6) return false;
  std::vector<int> vs(verts.begin(), verts.end());
  auto vindex = [&](int v) {
    return static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  };
  bool adj[6][6] = {};
  for (auto& t : tris)
    for (int e = 0; e < 3; ++e)
      for (int f = e + 1; f < 3; ++f) {
        adj[vindex(t[e])][vindex(t[f])] = true;
        adj[vindex(t[f])][vindex(t[e])] = true;
      }
  // Non-adjacency must be a perfect matching.
  int partner[6];
  for (int i = 0; i < 6; ++i) {
    int cnt = 0;
    for (int j = 0; j < 6; ++j)
      if (i != j && !adj[i][j]) {
        partner[i] = j;
        ++cnt;
      }
    if (cnt != 1) return false;
  }
  for (int i = 0; i < 6; ++i)
    if (partner[partner[i]] != i) return false;
  // All 8 one-per-pair triples must be present.
  std::set<std::array<int, 3>> have(tris.begin(), tris.end());
  std::vector<std::array<int, 2>> pairs;
  std::set<int> used;
  for (int i = 0; i < 6; ++i)
    if (!used.count(i)) {
      pairs.push_back({vs[i], vs[partner[i]]});
      used.insert(i);
      used.insert(partner[i]);
    }
  if (pairs.size() != 3) return false;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        std::array<int, 3> t = sorted3({pairs[0][i], pairs[1][j], pairs[2][k]});
        if (!have.count(t)) return false;
      }
  return true;
}

bool cells_intersect_properly(const std::array<Point, 6>& a,
                              const std::array<Point, 6>& b) {
  ComplexBuilder builder;
  builder.add_cell(a, 0);
  builder.add_cell(b, 0);
  const CrossPolytopalComplex& c = builder.complex();
  CellGeom ga = cell_geom(c, c.cells[0]);
  CellGeom gb = cell_geom(c, c.cells[1]);
  if (boxes_disjoint(ga, gb)) return true;
  std::vector<Violation> v;
  check_pair(c, 0, 1, ga, gb, v);
  return v.empty();
}

Rat cell_volume(const CrossPolytopalComplex& c, const OctaCell& cell) {
  auto pts = c.cell_points(cell);
  return volume(convex_hull(std::vector<Point>(pts.begin(), pts.end())));
}

Rat total_volume(const CrossPolytopalComplex& c) {
  Rat total(0);
  for (const auto& cell : c.cells) total += cell_volume(c, cell);
  return total;
}

}  // namespace octa
