#pragma once

#include "planewalk/geometry.h"
#include "planewalk/obstruction.h"
#include "planewalk/rational.h"

#include <vector>

namespace planewalk {

// Jitter radius under which a per-position displacement cannot create or
// destroy incidences between disjoint features of the drawing: a lower bound
// for one quarter of the smallest gap, over disjoint image-edge pairs and
// non-incident walk-vertex/image-edge pairs.  Falls back to a quarter of the
// shortest image edge when every feature pair touches, and to 1 for walks
// with no steps.  Exact coordinates required.
Rational safe_jitter_bound(const Instance& inst);

// The first `count` primitive integer vectors, ordered by squared length and
// counterclockwise angle from the positive x-axis within each ring:
// (1,0), (0,1), (-1,0), (0,-1), (1,1), (-1,1), ...
std::vector<Point> jitter_directions(int count);

struct JitteredCurve {
  bool closed = false;
  Rational amplitude;         // displacement scale actually applied
  std::vector<Point> points;  // closed curves repeat point 0 at the end

  int segments() const {
    return points.empty() ? 0 : static_cast<int>(points.size()) - 1;
  }
  Segment segment(int i) const {  // 1-based, aligned with walk steps
    return {points[i - 1], points[i]};
  }
};

// Position p of the walk maps to its vertex image displaced by
// amplitude * direction_p, with amplitude = safe_jitter_bound / 2^seed.
JitteredCurve build_jittered_curve(const Instance& inst, int seed);

// Generic means: no zero-length segment, no collinear overlap between any
// two segments, and non-adjacent segments either miss each other or cross
// properly (no endpoint touches).
bool check_genericity(const JitteredCurve& c);

struct GeometricAnalysis {
  Rational bound;
  int seed = 0;
  JitteredCurve curve;
  CellParities parities;  // proper crossings per two-cell, mod 2
};

// Measures crossing parities on the first generic jittered curve.  Seeds
// start at the smallest exponent that keeps every displacement under the
// bound and double the denominator up to 64 times before giving up
// (GenericityExhausted).
GeometricAnalysis analyze_geometric(const Instance& inst);

CellParities geometric_parities(const Instance& inst);

}  // namespace planewalk
