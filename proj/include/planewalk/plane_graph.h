#pragma once

#include "planewalk/geometry.h"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace planewalk {

// Undirected simple edge; stored with a < b so set membership is canonical.
struct Edge {
  std::string a, b;

  Edge() = default;
  Edge(std::string u, std::string v);

  bool incident(const std::string& v) const { return a == v || b == v; }
  // the endpoint that is not v; caller guarantees incidence
  const std::string& other(const std::string& v) const { return a == v ? b : a; }
  bool shares_endpoint(const Edge& o) const {
    return a == o.a || a == o.b || b == o.a || b == o.b;
  }

  bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Edge& o) const { return !(*this == o); }
  bool operator<(const Edge& o) const { return a < o.a || (a == o.a && b < o.b); }
};

std::string edge_label(const Edge& e);

// Exact: user-supplied drawing, authoritative for all geometric questions.
// Layout: synthesized placement (derivative levels); rendering only.
enum class CoordsKind { None, Exact, Layout };

// Plane graph: a simple graph plus a genus-0 rotation system (counterclockwise
// cyclic edge order per vertex), optionally drawn with exact coordinates.
struct PlaneGraph {
  std::vector<std::string> vertices;  // sorted
  CoordsKind coords_kind = CoordsKind::None;
  std::map<std::string, Point> coords;
  std::set<Edge> edges;
  // cyclic lists, canonicalized so the least incident edge comes first
  std::map<std::string, std::vector<Edge>> rotation;

  bool has_vertex(const std::string& v) const;
  bool has_edge(const Edge& e) const { return edges.count(e) > 0; }
  int degree(const std::string& v) const;
};

// Walk: vertex sequence, each consecutive pair an edge; closed walks also
// join last to first.  Normalized public walks have no consecutive repeats
// and closed walks run at least 3 steps (constants excepted).  Derivative
// levels may hold shorter closed walks internally.
struct Walk {
  std::vector<std::string> verts;
  bool closed = false;

  bool empty() const { return verts.empty(); }
  bool constant() const { return verts.size() == 1; }
  // number of steps: open walks have size-1, closed walks size (one step per
  // vertex, the last returning to the start)
  int steps() const;
  // image edge of step i, 1-based; closed step m joins the last vertex to the
  // first
  Edge step_edge(int i) const;
  // vertex at domain position p: open walks have positions 0..m, closed 0..m-1
  const std::string& vertex_at(int p) const { return verts[static_cast<std::size_t>(p)]; }
  int positions() const { return closed ? steps() : static_cast<int>(verts.size()); }
  bool injective() const;
};

struct Instance {
  PlaneGraph graph;
  Walk walk;
};

using Dart = std::pair<std::string, std::string>;  // directed edge (from, to)

struct FaceTrace {
  std::vector<std::vector<Dart>> faces;
  // keyed by the least vertex of each connected component
  std::map<std::string, int> genus;
};

// Validates everything: simplicity, rotation completeness, coordinate
// distinctness, rotation-vs-coordinates agreement, genus 0 per component.
// Rotation is computed from coordinates when absent.
PlaneGraph build_plane_graph(const std::vector<std::string>& vertices,
                             const std::map<std::string, Point>& coords,  // empty = none
                             const std::vector<Edge>& edges,
                             const std::map<std::string, std::vector<Edge>>& rotation = {},
                             CoordsKind kind_if_coords = CoordsKind::Exact);

// Counterclockwise angular sort of the incident edges, exact comparator.
std::map<std::string, std::vector<Edge>> rotation_from_coordinates(
    const std::vector<std::string>& vertices, const std::map<std::string, Point>& coords,
    const std::vector<Edge>& edges);

// Collapses consecutive duplicates (wrapping for closed walks), checks each
// step is an edge.  Closed walks that land below 3 steps without being
// constant are rejected.
Walk normalize_walk(const std::vector<std::string>& raw, bool closed, const PlaneGraph& g);

// Face tracing by the fixed convention: arriving at v along e, leave along
// the edge after e in clockwise order (= predecessor in the stored
// counterclockwise rotation).  Bounded faces of a drawn graph come out
// counterclockwise under this rule.
FaceTrace trace_faces(const PlaneGraph& g);

// Subgraph induced by the edges the walk traverses, rotation restricted,
// coordinates inherited.
PlaneGraph image_subgraph(const Instance& inst);

// Shared helper: cyclic list rotated so the least element is first.
std::vector<Edge> canonicalize_cycle(std::vector<Edge> cycle);

}  // namespace planewalk
