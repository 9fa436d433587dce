#pragma once

#include "planewalk/plane_graph.h"

#include <utility>
#include <vector>

namespace planewalk {

// A drawn curve before any combinatorial structure is extracted: corner points
// in drawing order.  Closed polylines implicitly join the last corner back to
// the first.
struct RawPolyline {
  std::vector<Point> points;
  bool closed = false;
};

// Traces one walk step back to the input: which input segment carried it and
// the parameter interval it covers there (t = 0 at the segment's source, 1 at
// its target; intervals always run forward, t0 < t1).
struct StepProvenance {
  int segment = 0;
  Rational t0, t1;
};

struct ArrangementResult {
  Instance instance;
  std::vector<StepProvenance> provenance;  // entry [i-1] describes step i
};

// Builds the exact arrangement of the polyline's segments: every pairwise
// crossing and every collinear-overlap endpoint becomes a vertex, segments are
// split there, overlapping pieces merge into single edges, and the walk is
// re-expressed through the subdivision.  Vertex ids are "v0", "v1", ... in
// lexicographic coordinate order.  Quadratic pair scan; exactness over speed.
ArrangementResult arrange_polyline(const RawPolyline& raw);

// Puts two instances over one common plane graph.  Identical ambient graphs
// pass through untouched; otherwise both must carry exact coordinates and the
// union of the two drawings is re-arranged from scratch, each walk re-expressed
// through the joint subdivision.
std::pair<Instance, Instance> overlay_pair(const Instance& K, const Instance& L);

// Checks the drawing is an honest arrangement: non-adjacent edges have
// disjoint closed images or share exactly one endpoint, never overlap or cross
// internally; adjacent edges meet only at the common endpoint.  Throws
// SemanticError otherwise.  Requires exact coordinates.
void assert_disjoint_drawing(const PlaneGraph& g);

}  // namespace planewalk
