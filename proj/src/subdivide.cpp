#include "octa/subdivide.hpp"

#include <set>
#include <string>

#include "octa/error.hpp"
#include "octa/hull.hpp"

namespace octa {

namespace {

Rat half_pow(int n) {
  Rat r(1);
  Rat h(1, 2);
  for (int i = 0; i < n; ++i) r *= h;
  return r;
}

// Frame vertex aligned with inner vertex c[u].
const Point& gamma_vertex(const BipyramidFrame& b, int u) {
  switch (u) {
    case 0: return b.X1;
    case 1: return b.Y1;
    case 2: return b.X2;
    case 3: return b.Y2;
    case 4: return b.X3;
    default: return b.Y3;
  }
}

// The four inner vertices not in u's antipodal class, grouped in opposite
// pairs: {q, q^1} and {r, r^1}.
std::array<int, 4> others_of(int u) {
  switch (u / 2) {
    case 0: return {2, 3, 4, 5};
    case 1: return {0, 1, 4, 5};
    default: return {0, 1, 2, 3};
  }
}

// Q_U = conv(U, O, {P_e : U in e}) with pairs (U,O) + opposite edge points.
std::array<Point, 6> q_cell(const BipyramidFrame& b, const InnerFrame& f, int u) {
  auto o = others_of(u);
  return {f.c[u],       b.O,          f.pe(u, o[0]),
          f.pe(u, o[1]), f.pe(u, o[2]), f.pe(u, o[3])};
}

// Type-3 candidate at u: conv(Gamma[u], eps*c[u], {P_e : u in e}).
std::array<Point, 6> type3_cell(const BipyramidFrame& b, const InnerFrame& f, int u,
                                const Rat& eps) {
  auto o = others_of(u);
  return {gamma_vertex(b, u), lerp(b.O, f.c[u], eps),
          f.pe(u, o[0]),      f.pe(u, o[1]),
          f.pe(u, o[2]),      f.pe(u, o[3])};
}

std::array<Point, 6> type4_cell(const BipyramidFrame& b, const InnerFrame& f,
                                const Rat& eps) {
  std::array<Point, 6> out;
  for (int u = 0; u < 6; ++u) out[u] = lerp(b.O, f.c[u], eps);
  return out;
}

}  // namespace

InnerFrame inner_cross_polytope(const BipyramidFrame& b, const SearchConfig& cfg,
                                int extra_halvings) {
  check_frame(b);
  InnerFrame f;
  f.t1 = Rat(1, 2);
  f.c[0] = lerp(b.O, b.X1, f.t1);
  f.c[1] = lerp(b.O, b.Y1, f.t1);

  Plane l2 = plane_through(b.X1, b.Y1, b.X2);

  f.t2 = f.t1 * half_pow(1 + extra_halvings);
  int step = 0;
  for (;; f.t2 /= 2, ++step) {
    if (step > cfg.halving_cap)
      throw SearchExhausted("inner_cross_polytope: no admissible t2");
    f.c[2] = lerp(b.O, b.X2, f.t2);
    f.c[3] = lerp(b.O, b.Y2, f.t2);
    if (segments_cross_in_plane(l2.normal, f.c[0], f.c[1], f.c[2], f.c[3])) break;
  }

  f.t3 = f.t2 * half_pow(1 + extra_halvings);
  step = 0;
  for (;; f.t3 /= 2, ++step) {
    if (step > cfg.halving_cap)
      throw SearchExhausted("inner_cross_polytope: no admissible t3");
    f.c[4] = lerp(b.O, b.X3, f.t3);
    f.c[5] = lerp(b.O, b.Y3, f.t3);
    // The new diagonal must pierce the quadrilateral placed so far.
    if (!segment_crosses_polygon({f.c[0], f.c[2], f.c[1], f.c[3]}, f.c[4], f.c[5]))
      continue;
    if (is_cross_polytope(f.c)) break;
  }
  return f;
}

void edge_points(const BipyramidFrame& b, InnerFrame& f, const SearchConfig& cfg,
                 int extra_halvings) {
  Plane l2 = plane_through(b.X1, b.Y1, b.X2);

  // Stage k=2: lines parallel to L1 cut the four edges inside L2 at
  // parameter delta2 from the L1 endpoint.
  f.delta2 = half_pow(1 + extra_halvings);
  int step = 0;
  for (;; f.delta2 /= 2, ++step) {
    if (step > cfg.halving_cap) throw SearchExhausted("edge_points: no admissible delta2");
    for (int u : {0, 1})
      for (int w : {2, 3}) f.edge_points[{u, w}] = lerp(f.c[u], f.c[w], f.delta2);
    // All four planar Q^2 quadrilaterals must have properly crossing
    // diagonals (2-dimensional cross-polytopes).
    bool ok = true;
    for (int u : {0, 1})
      ok = ok && segments_cross_in_plane(l2.normal, f.c[u], b.O, f.pe(u, 2), f.pe(u, 3));
    for (int w : {2, 3})
      ok = ok && segments_cross_in_plane(l2.normal, f.c[w], b.O, f.pe(0, w), f.pe(1, w));
    if (ok) break;
  }

  // Stage k=3: planes parallel to L2 cut the eight remaining edges at
  // parameter delta3 from the L2 endpoint.
  f.delta3 = half_pow(1 + extra_halvings);
  step = 0;
  for (;; f.delta3 /= 2, ++step) {
    if (step > cfg.halving_cap) throw SearchExhausted("edge_points: no admissible delta3");
    for (int u : {0, 1, 2, 3})
      for (int w : {4, 5}) f.edge_points[{u, w}] = lerp(f.c[u], f.c[w], f.delta3);
    bool ok = true;
    for (int u = 0; u < 6 && ok; ++u) ok = is_cross_polytope(q_cell(b, f, u));
    if (ok) break;
  }
}

void choose_epsilon(const BipyramidFrame& b, InnerFrame& f, const SearchConfig& cfg,
                    int extra_halvings) {
  // The segment from each inner vertex to O must pierce the hull of its four
  // edge points; independent of epsilon, so checked once up front.
  for (int u = 0; u < 6; ++u) {
    auto o = others_of(u);
    std::array<Point, 4> p = {f.pe(u, o[0]), f.pe(u, o[1]), f.pe(u, o[2]), f.pe(u, o[3])};
    bool pierced;
    if (orient(p[0], p[1], p[2], p[3]) == 0) {
      // Coplanar (a translate-and-dilate of a C section): polygon crossing.
      pierced = segment_crosses_polygon({p[0], p[2], p[1], p[3]}, f.c[u], b.O);
    } else {
      HullFacets hull = convex_hull({p[0], p[1], p[2], p[3]});
      pierced = segment_meets_interior(hull, f.c[u], b.O);
    }
    if (!pierced)
      throw CellCertificationFailed("edge-point hull misses segment O-c[" +
                                    std::to_string(u) + "]");
  }

  f.epsilon = half_pow(1 + extra_halvings);
  int step = 0;
  for (;; f.epsilon /= 2, ++step) {
    if (step > cfg.halving_cap) throw SearchExhausted("choose_epsilon: no admissible epsilon");
    bool ok = true;
    std::array<Point, 6> inner = type4_cell(b, f, f.epsilon);
    for (int u = 0; u < 6 && ok; ++u) {
      std::array<Point, 6> t3 = type3_cell(b, f, u, f.epsilon);
      ok = is_cross_polytope(t3) && cells_intersect_properly(inner, t3);
    }
    if (ok) break;
  }
}

void assemble_cells(const BipyramidFrame& b, const InnerFrame& f, ComplexBuilder& out) {
  auto certify_add = [&](const std::array<Point, 6>& pts, int type) {
    if (!is_cross_polytope(pts))
      throw CellCertificationFailed("type-" + std::to_string(type) + " cell failed");
    out.add_cell(pts, type);
  };

  // Types 1 and 2: one cell per facet of Gamma / of eps*C, each triangle
  // vertex paired with the edge point on the opposite edge.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        int u1 = i, u2 = 2 + j, u3 = 4 + k;
        certify_add({gamma_vertex(b, u1), f.pe(u2, u3), gamma_vertex(b, u2),
                     f.pe(u1, u3), gamma_vertex(b, u3), f.pe(u1, u2)},
                    1);
      }
    }
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        int u1 = i, u2 = 2 + j, u3 = 4 + k;
        certify_add({lerp(b.O, f.c[u1], f.epsilon), f.pe(u2, u3),
                     lerp(b.O, f.c[u2], f.epsilon), f.pe(u1, u3),
                     lerp(b.O, f.c[u3], f.epsilon), f.pe(u1, u2)},
                    2);
      }
    }
  }
  for (int u = 0; u < 6; ++u) certify_add(type3_cell(b, f, u, f.epsilon), 3);
  certify_add(type4_cell(b, f, f.epsilon), 4);
}

namespace {

// The assembled 23 cells must form a valid complex that exactly fills the
// bipyramid and exposes the Gamma triangulation as its boundary.
void certify_assembly(const BipyramidFrame& b, const CrossPolytopalComplex& c) {
  if (!validate_complex(c, ValidateLevel::full).ok())
    throw CellCertificationFailed("cells do not intersect in common faces");
  if (total_volume(c) != frame_volume(b))
    throw CellCertificationFailed("cell volumes do not sum to the bipyramid volume");
  if (!boundary_is_octahedral(c))
    throw CellCertificationFailed("boundary is not the cross-polytope boundary");
  std::set<Point, PointLess> boundary_pts;
  for (const auto& t : boundary_of(c))
    for (int v : t) boundary_pts.insert(c.pt(v));
  const std::set<Point, PointLess> frame_pts = {b.X1, b.Y1, b.X2, b.Y2, b.X3, b.Y3};
  if (boundary_pts != frame_pts)
    throw CellCertificationFailed("boundary vertices are not the frame vertices");
}

// Runs the three searches and the assembly, retrying with jointly halved
// parameters whenever a cell or the assembled complex fails certification.
void subdivide_into(const BipyramidFrame& b, const SearchConfig& cfg, ComplexBuilder& out) {
  for (int round = 0;; ++round) {
    if (round > cfg.assembly_retry_cap)
      throw SearchExhausted("assembly retries exhausted");
    try {
      InnerFrame f = inner_cross_polytope(b, cfg, round);
      edge_points(b, f, cfg, round);
      choose_epsilon(b, f, cfg, round);
      ComplexBuilder local;
      assemble_cells(b, f, local);
      certify_assembly(b, local.complex());
      for (const OctaCell& cell : local.complex().cells)
        out.add_cell(local.complex().cell_points(cell), cell.type);
      return;
    } catch (const CellCertificationFailed&) {
      continue;
    }
  }
}

}  // namespace

CrossPolytopalComplex subdivide_frame(const BipyramidFrame& b, const SearchConfig& cfg) {
  ComplexBuilder out;
  subdivide_into(b, cfg, out);
  return out.take();
}

CrossPolytopalComplex octahedralize(const SimplicialPolytope& p, const SearchConfig& cfg) {
  validate_polytope(p);
  Coloring kappa = three_color(p);
  ConeTriangulation cone = cone_triangulate(p, kappa);
  std::vector<GeneralizedBipyramid> bips = match_bipyramids(cone);
  ComplexBuilder out;
  for (const GeneralizedBipyramid& bip : bips) {
    try {
      subdivide_into(bip.frame, cfg, out);
    } catch (const SearchExhausted& e) {
      throw SearchExhausted("bipyramid " + std::to_string(bip.id) + ": " + e.what());
    }
  }
  return out.take();
}

CrossPolytopalComplex subdivide_tetrahedron(const std::array<Point, 4>& s,
                                            const SearchConfig& cfg) {
  const Point& a = s[0];
  const Point& b = s[1];
  const Point& c = s[2];
  const Point& d = s[3];
  if (orient(a, b, c, d) == 0) throw DegenerateInput("subdivide_tetrahedron: flat input");

  Rat third(1, 3), quarter(1, 4), half(1, 2);
  Point g = third * (a + b + c);   // barycenter of F2
  Point m = half * (a + b);        // midpoint of F1
  Point o = quarter * (a + b + c + d);

  BipyramidFrame frame;
  frame.O = o;
  frame.X1 = d;
  frame.Y1 = g;
  frame.X2 = c;
  frame.Y2 = m;
  frame.X3 = a;
  frame.Y3 = b;
  // O sits at parameter 3/4 on the segment from the off-facet vertex to the
  // facet barycenter; exact by construction, asserted anyway.
  if (Rat(4) * o != d + Rat(3) * g)
    throw InvalidPolytope("tetrahedron: barycenter identity violated");
  check_frame(frame);
  return subdivide_frame(frame, cfg);
}

CrossPolytopalComplex schlegel_24cell_reference(const SearchConfig& cfg) {
  Rat lambda(1, 2), mu(1, 4);
  for (int step = 0; step <= cfg.halving_cap; ++step, lambda /= 2, mu /= 2) {
    Point e[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
    auto cub = [&](int i, int si, int j, int sj) {
      return lambda * (Rat(si) * e[i] + Rat(sj) * e[j]);
    };

    ComplexBuilder builder;
    bool all_ok = true;
    auto try_add = [&](const std::array<Point, 6>& pts, int type) {
      if (!is_cross_polytope(pts)) {
        all_ok = false;
        return;
      }
      builder.add_cell(pts, type);
    };

    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) {
          // Type 1: outer facet + triangular cuboctahedron face.
          try_add({Rat(s1) * e[0], cub(1, s2, 2, s3), Rat(s2) * e[1], cub(0, s1, 2, s3),
                   Rat(s3) * e[2], cub(0, s1, 1, s2)},
                  1);
          if (!all_ok) break;
        }
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1}) {
          if (!all_ok) break;
          // Type 2: inner facet + the same cuboctahedron face.
          try_add({mu * (Rat(s1) * e[0]), cub(1, s2, 2, s3), mu * (Rat(s2) * e[1]),
                   cub(0, s1, 2, s3), mu * (Rat(s3) * e[2]), cub(0, s1, 1, s2)},
                  2);
        }
    for (int axis : {0, 1, 2})
      for (int sign : {1, -1}) {
        if (!all_ok) break;
        int ob = (axis + 1) % 3, oc = (axis + 2) % 3;
        // Type 3: square face of the cuboctahedron + the two matching
        // vertices of the outer and inner octahedra.
        try_add({Rat(sign) * e[axis], mu * (Rat(sign) * e[axis]), cub(axis, sign, ob, 1),
                 cub(axis, sign, ob, -1), cub(axis, sign, oc, 1), cub(axis, sign, oc, -1)},
                3);
      }
    if (all_ok) {
      std::array<Point, 6> inner;
      for (int i = 0; i < 3; ++i) {
        inner[2 * i] = mu * e[i];
        inner[2 * i + 1] = mu * (Rat(-1) * e[i]);
      }
      try_add(inner, 4);
    }
    if (!all_ok) continue;
    if (!validate_complex(builder.complex(), ValidateLevel::full).ok()) continue;
    return builder.take();
  }
  throw SearchExhausted("schlegel_24cell_reference: no admissible scales");
}

}  // namespace octa
