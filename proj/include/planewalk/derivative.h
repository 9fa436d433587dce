#pragma once

#include "planewalk/plane_graph.h"

#include <optional>
#include <string>
#include <vector>

namespace planewalk {

// One visit of the walk to an image vertex: domain position p together with
// the image edges of the steps entering and leaving it.  A pass whose two
// edges coincide is a bounce.
struct Pass {
  int position = 0;
  std::string vertex;
  Edge in_edge, out_edge;

  bool bounce() const { return in_edge == out_edge; }
};

// Two domain-disjoint passes through the same image vertex whose edge pairs
// interleave in the rotation there.
struct TransversalWitness {
  int p = 0, q = 0;  // positions, p < q
  std::string vertex;
  Edge p_in, p_out, q_in, q_out;
};

struct WindingInfo {
  int degree = 0;        // nonzero; sign is the tool convention (see below)
  int cycle_length = 0;  // length of the image cycle
};

enum class Verdict { Yes, No, Inconclusive };

enum class DecisionReason {
  Injective,
  EmptyDerivative,
  UnitWinding,
  TransversalFound,
  ForbiddenWinding,
  ObstructionZero,     // mod-2 obstruction backend only
  ObstructionNonzero,  // mod-2 obstruction backend only
};

struct Decision {
  Verdict approximable = Verdict::Inconclusive;
  DecisionReason reason = DecisionReason::Injective;
  int level = 0;  // derivative level at which the reason fired
  std::optional<TransversalWitness> witness;
  std::optional<WindingInfo> winding;
  std::vector<Instance> levels;  // level 0 = the input instance
};

// 1-based step numbers entering/leaving domain position p.  For closed walks
// position 0 is entered by the wrapping step m.
int in_step_at(const Walk& w, int p);
int out_step_at(const Walk& w, int p);

// Domain distance between positions: |p - q|, cyclic for closed walks.
int domain_distance(const Walk& w, int p, int q);

// Passes at interior positions, ascending: 1..m-1 for open walks, every
// position for closed ones.  Empty for constant and empty walks.
std::vector<Pass> interior_passes(const Instance& inst);

// Lexicographically least pair of interior passes at a common vertex with
// domain distance >= 2, four pairwise-distinct image edges, and interleaving
// edge pairs in the rotation; nullopt when the drawing has none.
std::optional<TransversalWitness> detect_transversal(const Instance& inst);

// Derived vertex id of an image edge {u, v}: "(u v)".
std::string derived_vertex_id(const Edge& e);

// Line-graph derivative with its natural plane embedding: vertices are the
// image edges, the walk is the step-image sequence with consecutive repeats
// collapsed, and the rotation at an edge-vertex reads the input rotations at
// its two endpoints counterclockwise-after the edge itself.  Coordinates, when
// present upstream, become edge midpoints (layout only).  Constant walks
// derive to the empty instance.  Requires a transversal-free input.
Instance derive(const Instance& inst);

// Recognizes standard windings: the image is a single cycle, the walk never
// bounces, and the direction is uniform.  Degree sign: with exact coordinates,
// positive means counterclockwise by the shoelace of one lap; otherwise
// positive means the walk leaves the least image vertex toward its lesser
// cycle neighbor.
std::optional<WindingInfo> detect_winding(const Instance& inst);

// The iterated-derivative decision: injective or empty walks are
// approximable, a transversal self-intersection or a winding of |degree| >= 2
// is fatal, and otherwise the derivative is taken and the loop repeats.  The
// iteration count is capped by the initial walk length; hitting the cap is an
// internal error (IterationCapExceeded), not a verdict.
Decision decide_approximable(const Instance& inst);

// Iterates the derivative on a closed walk until a winding appears (its
// degree is returned) or the walk dies out (0).  Throws TransversalPresent
// with the offending level in detail() when any level has one.
int winding_degree(const Instance& inst);

// Fast path for walks using every host edge exactly once: such a walk is
// approximable iff it has no transversal self-intersection.  Returns nullopt
// for non-Euler walks.
std::optional<Decision> check_euler_shortcut(const Instance& inst);

}  // namespace planewalk
