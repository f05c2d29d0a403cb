#include "octa/geom.hpp"

#include "octa/error.hpp"

namespace octa {

Point barycenter(const std::vector<Point>& pts) {
  Point s;
  for (const Point& p : pts) s = s + p;
  Rat inv(1, static_cast<long>(pts.size()));
  inv.canonicalize();
  return inv * s;
}

Plane plane_through(const Point& p, const Point& q, const Point& r) {
  Point n = cross(q - p, r - p);
  if (n == Point()) throw DegenerateInput("plane_through: collinear points");
  return Plane{n, dot(n, p)};
}

Rat orient_value(const Point& p, const Point& q, const Point& r, const Point& s) {
  return dot(cross(q - p, r - p), s - p);
}

int orient(const Point& p, const Point& q, const Point& r, const Point& s) {
  return sgn(orient_value(p, q, r, s));
}

int side_in_plane(const Point& n, const Point& p, const Point& q, const Point& r) {
  return sgn(dot(n, cross(q - p, r - p)));
}

bool collinear(const Point& p, const Point& q, const Point& r) {
  return cross(q - p, r - p) == Point();
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (!collinear(a, b, p)) return false;
  return dot(p - a, p - b) <= 0;
}

bool strictly_between(const Point& a, const Point& b, const Point& p) {
  if (p == a || p == b) return false;
  return on_segment(a, b, p);
}

bool segments_cross_in_plane(const Point& n, const Point& a, const Point& b,
                             const Point& c, const Point& d) {
  int c1 = side_in_plane(n, a, b, c);
  int c2 = side_in_plane(n, a, b, d);
  int c3 = side_in_plane(n, c, d, a);
  int c4 = side_in_plane(n, c, d, b);
  return c1 * c2 < 0 && c3 * c4 < 0;
}

bool segment_crosses_polygon(const std::vector<Point>& polygon, const Point& a,
                             const Point& b) {
  if (polygon.size() < 3) return false;
  Plane h = plane_through(polygon[0], polygon[1], polygon[2]);
  Rat va = plane_value(h, a);
  Rat vb = plane_value(h, b);
  if (sgn(va) == 0 || sgn(vb) == 0 || sgn(va) == sgn(vb)) return false;
  // Exact crossing point of (a,b) with the polygon's plane.
  Rat t = va / (va - vb);
  Point z = lerp(a, b, t);
  // Strictly inside all edges, with a consistent winding.
  int ref = 0;
  for (size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    int s = side_in_plane(h.normal, p, q, z);
    if (s == 0) return false;
    if (ref == 0)
      ref = s;
    else if (s != ref)
      return false;
  }
  return true;
}

}  // namespace octa
