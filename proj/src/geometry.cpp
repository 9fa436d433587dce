#include "planewalk/geometry.h"

#include "planewalk/errors.h"

#include <algorithm>

namespace planewalk {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

int orient(const Point& a, const Point& b, const Point& c) {
  const Rational v = cross(b - a, c - a);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

namespace {

// parameter of the intersection of lines a+t(b-a) and c+s(d-c); caller
// guarantees the lines are not parallel
Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point r = b - a, s = d - c;
  const Rational denom = cross(r, s);
  const Rational t = cross(c - a, s) / denom;
  return a + t * r;
}

}  // namespace

SegIntersection intersect_segments(const Segment& s, const Segment& t) {
  const Point &a = s.a, &b = s.b, &c = t.a, &d = t.b;
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);

  if (o1 == 0 && o2 == 0) {
    // collinear: intersect the two coordinate intervals
    Point lo1 = std::min(a, b), hi1 = std::max(a, b);
    Point lo2 = std::min(c, d), hi2 = std::max(c, d);
    Point lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    // the lex order agrees with position along a common line
    if (hi < lo) return SegNone{};
    if (lo == hi) return SegAt{lo};
    return SegOverlap{lo, hi};
  }

  if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0)
    return SegAt{line_intersection(a, b, c, d)};

  // touching cases where one endpoint lies on the other segment
  if (o1 == 0 && on_segment(c, a, b)) return SegAt{c};
  if (o2 == 0 && on_segment(d, a, b)) return SegAt{d};
  if (o3 == 0 && on_segment(a, c, d)) return SegAt{a};
  if (o4 == 0 && on_segment(b, c, d)) return SegAt{b};
  return SegNone{};
}

bool proper_crossing(const Segment& s, const Segment& t) {
  const int o1 = orient(s.a, s.b, t.a), o2 = orient(s.a, s.b, t.b);
  const int o3 = orient(t.a, t.b, s.a), o4 = orient(t.a, t.b, s.b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

Rational dist2(const Point& a, const Point& b) {
  const Point d = b - a;
  return d.x * d.x + d.y * d.y;
}

Rational dist2_point_segment(const Point& p, const Segment& s) {
  const Point d = s.b - s.a;
  const Rational len2 = dot(d, d);
  if (len2 == 0) return dist2(p, s.a);
  Rational t = dot(p - s.a, d) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return dist2(p, s.a + t * d);
}

Rational dist2_segments(const Segment& s, const Segment& t) {
  if (!std::holds_alternative<SegNone>(intersect_segments(s, t))) return Rational(0);
  Rational m = dist2_point_segment(s.a, t);
  m = std::min(m, dist2_point_segment(s.b, t));
  m = std::min(m, dist2_point_segment(t.a, s));
  m = std::min(m, dist2_point_segment(t.b, s));
  return m;
}

namespace {

// quadrants are right-open, counterclockwise from the positive x-axis:
// 0: angle in [0, 90), 1: [90, 180), 2: [180, 270), 3: [270, 360)
int quadrant(const Point& d) {
  if (d.x > 0 && d.y >= 0) return 0;
  if (d.x <= 0 && d.y > 0) return 1;
  if (d.x < 0 && d.y <= 0) return 2;
  return 3;
}

}  // namespace

bool angle_less(const Point& a, const Point& b) {
  if (a.x == 0 && a.y == 0) throw Error(Errc::SemanticError, "angle of zero vector");
  if (b.x == 0 && b.y == 0) throw Error(Errc::SemanticError, "angle of zero vector");
  const int qa = quadrant(a), qb = quadrant(b);
  if (qa != qb) return qa < qb;
  return cross(a, b) > 0;
}

bool same_direction(const Point& a, const Point& b) {
  return cross(a, b) == 0 && dot(a, b) > 0;
}

}  // namespace planewalk
