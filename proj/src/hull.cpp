#include "octa/hull.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "octa/error.hpp"

namespace octa {

namespace {

// Primitive integer key for an oriented plane, so that supporting planes
// found from different triples of the same face compare equal.
struct PlaneKey {
  Int a, b, c, d;
  bool operator<(const PlaneKey& o) const {
    int r = cmp(a, o.a);
    if (r != 0) return r < 0;
    r = cmp(b, o.b);
    if (r != 0) return r < 0;
    r = cmp(c, o.c);
    if (r != 0) return r < 0;
    return cmp(d, o.d) < 0;
  }
};

PlaneKey canonical_key(const Plane& h) {
  // Clear denominators, then divide by the gcd. Orientation is preserved.
  Int l = 1;
  for (const Rat* q : {&h.normal.x, &h.normal.y, &h.normal.z, &h.offset}) {
    Int den = q->get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    l = l / g * den;
  }
  Rat lr(l);
  Int a = Rat(h.normal.x * lr).get_num();
  Int b = Rat(h.normal.y * lr).get_num();
  Int c = Rat(h.normal.z * lr).get_num();
  Int d = Rat(h.offset * lr).get_num();
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  if (sgn(g) != 0) {
    a /= g;
    b /= g;
    c /= g;
    d /= g;
  }
  return {a, b, c, d};
}

// Walks the extreme points of a coplanar set in cyclic order (gift wrapping
// with exact predicates). n is the outward face normal; the result is wound
// counterclockwise as seen from outside.
std::vector<int> wrap_face(const std::vector<Point>& pts, const std::vector<int>& face,
                           const Point& n) {
  // Start at the lexicographic minimum, which is always extreme.
  int start = face[0];
  for (int i : face)
    if (PointLess()(pts[i], pts[start])) start = i;
  std::vector<int> cycle;
  int cur = start;
  do {
    cycle.push_back(cur);
    int cand = -1;
    for (int i : face) {
      if (i == cur || pts[i] == pts[cur]) continue;
      if (cand < 0) {
        cand = i;
        continue;
      }
      int s = side_in_plane(n, pts[cur], pts[cand], pts[i]);
      if (s < 0) {
        cand = i;
      } else if (s == 0) {
        // Collinear with the current candidate: keep the farther point so
        // interior-of-edge points never become polygon vertices.
        Point u = pts[cand] - pts[cur];
        Point v = pts[i] - pts[cur];
        if (dot(v, v) > dot(u, u)) cand = i;
      }
    }
    if (cand < 0) throw DegenerateInput("convex_hull: face with a single point");
    cur = cand;
    if (cycle.size() > face.size()) throw DegenerateInput("convex_hull: face walk failed");
  } while (cur != start);
  return cycle;
}

}  // namespace

HullFacets convex_hull(std::vector<Point> points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw DegenerateInput("convex_hull: need at least 4 points");

  // Reject flat input up front.
  bool full_dim = false;
  for (int i = 1; i < n && !full_dim; ++i)
    for (int j = i + 1; j < n && !full_dim; ++j)
      for (int k = j + 1; k < n && !full_dim; ++k)
        if (orient(points[0], points[i], points[j], points[k]) != 0) full_dim = true;
  if (!full_dim) throw DegenerateInput("convex_hull: all points coplanar");

  // First occurrence wins for duplicated points.
  std::vector<int> rep(n);
  {
    std::map<Point, int, PointLess> seen;
    for (int i = 0; i < n; ++i) {
      auto [it, fresh] = seen.emplace(points[i], i);
      rep[i] = it->second;
      (void)fresh;
    }
  }

  // Collect supporting planes from all triples.
  std::map<PlaneKey, Plane> supports;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (collinear(points[i], points[j], points[k])) continue;
        Plane h = plane_through(points[i], points[j], points[k]);
        int lo = 0, hi = 0;
        for (int m = 0; m < n; ++m) {
          int s = plane_side(h, points[m]);
          if (s > 0)
            ++hi;
          else if (s < 0)
            ++lo;
          if (lo && hi) break;
        }
        if (lo && hi) continue;
        if (hi) {  // flip so that all points are on side <= 0 (outward normal)
          h.normal = Rat(-1) * h.normal;
          h.offset = -h.offset;
        }
        supports.emplace(canonical_key(h), h);
      }
    }
  }

  HullFacets out;
  out.points = points;
  for (auto& [key, h] : supports) {
    (void)key;
    std::vector<int> face;
    for (int m = 0; m < n; ++m)
      if (rep[m] == m && plane_side(h, points[m]) == 0) face.push_back(m);
    std::vector<int> cycle = wrap_face(points, face, h.normal);
    for (size_t t = 1; t + 1 < cycle.size(); ++t)
      out.facets.push_back({cycle[0], cycle[t], cycle[t + 1]});
  }

  // Structural sanity: triangles must close up into a 2-sphere.
  std::map<std::pair<int, int>, int> edge_count;
  for (auto& f : out.facets)
    for (int e = 0; e < 3; ++e) {
      int a = f[e], b = f[(e + 1) % 3];
      edge_count[{std::min(a, b), std::max(a, b)}] += 1;
    }
  for (auto& [e, c] : edge_count) {
    (void)e;
    if (c != 2) throw DegenerateInput("convex_hull: facets do not close up");
  }
  return out;
}

bool segment_meets_interior(const HullFacets& hull, const Point& a, const Point& b) {
  // p(t) = a + t(b-a); interior of the hull is orient(facet, p) < 0 for all
  // facets. Each constraint is linear in t, so intersect open intervals.
  Rat lo(0), hi(1);
  for (const auto& f : hull.facets) {
    const Point& p = hull.points[f[0]];
    const Point& q = hull.points[f[1]];
    const Point& r = hull.points[f[2]];
    Rat g0 = orient_value(p, q, r, a);
    Rat g1 = orient_value(p, q, r, b);
    if (g0 == g1) {
      if (sgn(g0) >= 0) return false;  // parallel and never strictly inside
      continue;
    }
    Rat t = g0 / (g0 - g1);  // g(t) == 0
    if (g1 < g0) {
      if (t > lo) lo = t;  // inside for t > t*
    } else {
      if (t < hi) hi = t;  // inside for t < t*
    }
    if (lo >= hi) return false;
  }
  return lo < hi;
}

bool point_in_closed_hull(const HullFacets& hull, const Point& p) {
  for (const auto& f : hull.facets)
    if (orient(hull.points[f[0]], hull.points[f[1]], hull.points[f[2]], p) > 0)
      return false;
  return true;
}

Rat volume(const HullFacets& hull) {
  std::set<int> used;
  for (const auto& f : hull.facets) used.insert(f.begin(), f.end());
  std::vector<Point> verts;
  for (int i : used) verts.push_back(hull.points[i]);
  Point ref = barycenter(verts);
  Rat six(6);
  Rat total(0);
  for (const auto& f : hull.facets) {
    const Point& a = hull.points[f[0]];
    const Point& b = hull.points[f[1]];
    const Point& c = hull.points[f[2]];
    total += dot(cross(a - ref, b - ref), c - ref) / six;
  }
  return total;
}

}  // namespace octa
