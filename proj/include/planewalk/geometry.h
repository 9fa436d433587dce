#pragma once

#include "planewalk/rational.h"

#include <optional>
#include <utility>
#include <variant>

namespace planewalk {

struct Point {
  Rational x, y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
  // lexicographic: the canonical tie-free order used for vertex naming
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);

// sign of cross(b - a, c - a): +1 left turn, -1 right turn, 0 collinear
int orient(const Point& a, const Point& b, const Point& c);

// p on the closed segment [a, b] (endpoints included)
bool on_segment(const Point& p, const Point& a, const Point& b);

struct Segment {
  Point a, b;
};

// Exact intersection of two closed segments.
//   None: disjoint
//   At:   a single common point (crossing or touching)
//   Overlap: a common sub-segment of positive length (collinear case)
struct SegNone {};
struct SegAt { Point p; };
struct SegOverlap { Point p, q; };  // p < q lexicographically
using SegIntersection = std::variant<SegNone, SegAt, SegOverlap>;

SegIntersection intersect_segments(const Segment& s, const Segment& t);

// true iff the open interiors cross in exactly one point (proper crossing)
bool proper_crossing(const Segment& s, const Segment& t);

Rational dist2(const Point& a, const Point& b);
Rational dist2_point_segment(const Point& p, const Segment& s);
// 0 when the segments meet; otherwise the min over endpoint/segment pairs
Rational dist2_segments(const Segment& s, const Segment& t);

// Counterclockwise angular order of nonzero direction vectors starting at the
// positive x-axis.  Quadrant split first, exact cross product inside a
// quadrant: no transcendental functions anywhere.
// Returns true when a strictly precedes b.  Equal directions compare false
// both ways; callers that forbid ties must check collinear_same_direction.
bool angle_less(const Point& a, const Point& b);
bool same_direction(const Point& a, const Point& b);

}  // namespace planewalk
