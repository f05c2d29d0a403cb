#pragma once

#include <array>
#include <vector>

#include "octa/rat.hpp"

namespace octa {

// Exact rational point/vector in R^3. All geometric decisions in the
// pipeline are made on these; nothing is ever rounded.
struct Point {
  Rat x, y, z;

  Point() : x(0), y(0), z(0) {}
  Point(Rat x_, Rat y_, Rat z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  Point(long x_, long y_, long z_) : x(x_), y(y_), z(z_) {}

  friend Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Point operator*(const Rat& s, const Point& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

// Lexicographic order; used for deterministic keying, no geometric meaning.
struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    c = cmp(a.y, b.y);
    if (c != 0) return c < 0;
    return cmp(a.z, b.z) < 0;
  }
};

inline Rat dot(const Point& a, const Point& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Point cross(const Point& a, const Point& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// a + t*(b-a)
inline Point lerp(const Point& a, const Point& b, const Rat& t) {
  return a + t * (b - a);
}

Point barycenter(const std::vector<Point>& pts);

// Oriented plane {p : <normal,p> = offset}. normal is never zero.
struct Plane {
  Point normal;
  Rat offset;
};

// Sign of <n,p> - offset: +1 on the normal side, 0 on the plane.
inline int plane_side(const Plane& h, const Point& p) {
  return sgn(dot(h.normal, p) - h.offset);
}

// Exact value of <n,p> - offset (linear in p; used for parametric clipping).
inline Rat plane_value(const Plane& h, const Point& p) {
  return dot(h.normal, p) - h.offset;
}

// Plane through three non-collinear points, normal = (q-p) x (r-p).
// Throws DegenerateInput on collinear input.
Plane plane_through(const Point& p, const Point& q, const Point& r);

// Sign of det(q-p, r-p, s-p): +1 when s is on the positive side of the
// oriented plane through p,q,r; 0 iff the four points are coplanar.
int orient(const Point& p, const Point& q, const Point& r, const Point& s);

// The determinant itself (exact; affine in each argument).
Rat orient_value(const Point& p, const Point& q, const Point& r, const Point& s);

// 2D orientation of r relative to the directed line p->q inside a plane with
// normal n: sign of <n, (q-p) x (r-p)>. All three points must lie in a common
// plane orthogonal to nothing in particular; n fixes which side is positive.
int side_in_plane(const Point& n, const Point& p, const Point& q, const Point& r);

bool collinear(const Point& p, const Point& q, const Point& r);

// True iff p lies on the closed segment [a,b].
bool on_segment(const Point& a, const Point& b, const Point& p);

// True iff p lies strictly between a and b on the open segment (a,b).
bool strictly_between(const Point& a, const Point& b, const Point& p);

// Proper crossing of coplanar segments (a,b) and (c,d): they intersect in a
// single point interior to both. n is the normal of their common plane.
bool segments_cross_in_plane(const Point& n, const Point& a, const Point& b,
                             const Point& c, const Point& d);

// True iff the open segment (a,b) crosses the relative interior of the convex
// polygon given by coplanar vertices in cyclic order. a and b must not lie in
// the polygon's plane on the same side; the crossing point is computed
// exactly and tested strictly inside every edge.
bool segment_crosses_polygon(const std::vector<Point>& polygon, const Point& a,
                             const Point& b);

}  // namespace octa
