#pragma once

#include "planewalk/plane_graph.h"

#include <array>
#include <map>
#include <string>

namespace planewalk {

// Standalone SVG documents for drawings, derivative towers, and deleted
// product tables.  Output is deterministic: identical inputs give identical
// bytes.  Every float is printed through one %.6g formatter, containers are
// ordered, and nothing depends on clocks or addresses.

// Straight-line positions for a coordinate-free graph.  Per connected
// component: the distinct vertices of the longest traced face (ties broken by
// the canonical dart sequence) go on a unit circle in boundary order, every
// other vertex starts at the origin and takes 200 Jacobi rounds of
// neighbor averaging.  Components are then packed left to right.  For
// 3-connected plane graphs this is Tutte's barycentric embedding, hence
// crossing-free and faithful to the rotation; anything less connected gets a
// best-effort picture.
std::map<std::string, std::array<double, 2>> layout_from_rotation(const PlaneGraph& g);

// The drawn graph with the walk overlaid: step segments on top of the edges,
// step numbers at the midpoints, vertices labelled.  Uses exact or layout
// coordinates when the graph has them, layout_from_rotation otherwise.
std::string render_drawing(const Instance& inst);

// Both walks of a pair on their common ambient graph; step labels are
// prefixed K/L and the two overlays carry the classes walk-K and walk-L.
std::string render_drawing_pair(const Instance& K, const Instance& L);

// The iterated-derivative chain, one drawing per level, captioned.  Levels
// come from decide_approximable; when the verdict is a winding rule one more
// derivative is appended so the picture shows the chain stabilizing.
std::string render_tower(const Instance& inst);

// The deleted product as a grid of squares, first index horizontal, second
// vertical and increasing upward.  Cell classes: "cell", plus "black" for
// image-disjoint step pairs, "comp-<n>" for the component index, and
// "contributing" when that component counts toward the obstruction.  Cells of
// odd crossing parity carry a "1" text label (class "parity").
std::string render_table(const Instance& inst);

// Full K-step x L-step grid of the disjoinability complex, same classes.
std::string render_table_pair(const Instance& K, const Instance& L);

}  // namespace planewalk
