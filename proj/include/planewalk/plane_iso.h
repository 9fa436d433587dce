#pragma once

#include "planewalk/plane_graph.h"

namespace planewalk {

// Plane-graph isomorphism including the rotation systems: a vertex bijection
// carrying edges to edges and every counterclockwise rotation list to the
// image's, up to cyclic shift.  Backtracking search; meant for small graphs.
bool plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

// Instance version: additionally carries the walk position-by-position.  The
// walk pins the bijection on every vertex it visits; the rest is searched.
bool plane_isomorphic(const Instance& a, const Instance& b);

}  // namespace planewalk
