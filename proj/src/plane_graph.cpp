#include "planewalk/plane_graph.h"

#include "planewalk/errors.h"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace planewalk {

Edge::Edge(std::string u, std::string v) {
  if (u == v) throw Error(Errc::LoopEdge, "loop at '" + u + "'");
  if (u < v) {
    a = std::move(u);
    b = std::move(v);
  } else {
    a = std::move(v);
    b = std::move(u);
  }
}

std::string edge_label(const Edge& e) { return e.a + "-" + e.b; }

bool PlaneGraph::has_vertex(const std::string& v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

int PlaneGraph::degree(const std::string& v) const {
  auto it = rotation.find(v);
  return it == rotation.end() ? 0 : static_cast<int>(it->second.size());
}

int Walk::steps() const {
  if (verts.size() <= 1) return 0;
  return closed ? static_cast<int>(verts.size()) : static_cast<int>(verts.size()) - 1;
}

Edge Walk::step_edge(int i) const {
  const auto n = verts.size();
  const auto u = static_cast<std::size_t>(i - 1);
  return Edge(verts[u], verts[(u + 1) % n]);
}

bool Walk::injective() const {
  std::set<std::string> seen(verts.begin(), verts.end());
  return seen.size() == verts.size();
}

std::vector<Edge> canonicalize_cycle(std::vector<Edge> cycle) {
  if (cycle.size() <= 1) return cycle;
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  return cycle;
}

std::map<std::string, std::vector<Edge>> rotation_from_coordinates(
    const std::vector<std::string>& vertices, const std::map<std::string, Point>& coords,
    const std::vector<Edge>& edges) {
  std::map<std::string, std::vector<Edge>> rot;
  for (const auto& v : vertices) rot[v] = {};
  for (const auto& e : edges) {
    rot[e.a].push_back(e);
    rot[e.b].push_back(e);
  }
  for (auto& [v, incident] : rot) {
    const Point at = coords.at(v);
    auto dir = [&](const Edge& e) { return coords.at(e.other(v)) - at; };
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j)
        if (same_direction(dir(incident[i]), dir(incident[j])))
          throw Error(Errc::CoincidentDirections,
                      "edges " + edge_label(incident[i]) + " and " + edge_label(incident[j]) +
                          " leave '" + v + "' in the same direction");
    std::sort(incident.begin(), incident.end(),
              [&](const Edge& x, const Edge& y) { return angle_less(dir(x), dir(y)); });
    incident = canonicalize_cycle(incident);
  }
  return rot;
}

namespace {

struct DartLess {
  bool operator()(const Dart& x, const Dart& y) const { return x < y; }
};

// next dart of the face containing d: arrive at d.second, leave along the
// predecessor (counterclockwise) of the arrival edge
Dart face_next(const PlaneGraph& g, const Dart& d) {
  const std::string& v = d.second;
  const Edge arrived(d.first, d.second);
  const auto& rot = g.rotation.at(v);
  const auto it = std::find(rot.begin(), rot.end(), arrived);
  const std::size_t i = static_cast<std::size_t>(it - rot.begin());
  const Edge& leave = rot[(i + rot.size() - 1) % rot.size()];
  return {v, leave.other(v)};
}

std::map<std::string, std::string> component_roots(const PlaneGraph& g) {
  // tiny union-find keyed by vertex id
  std::map<std::string, std::string> parent;
  for (const auto& v : g.vertices) parent[v] = v;
  std::function<std::string(const std::string&)> find = [&](const std::string& v) {
    std::string r = v;
    while (parent[r] != r) r = parent[r];
    std::string c = v;
    while (parent[c] != r) c = std::exchange(parent[c], r);
    return r;
  };
  for (const auto& e : g.edges) {
    auto ra = find(e.a), rb = find(e.b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::string, std::string> root;
  for (const auto& v : g.vertices) root[v] = find(v);
  return root;
}

}  // namespace

FaceTrace trace_faces(const PlaneGraph& g) {
  FaceTrace out;
  std::set<Dart, DartLess> pending;
  for (const auto& e : g.edges) {
    pending.insert({e.a, e.b});
    pending.insert({e.b, e.a});
  }
  while (!pending.empty()) {
    const Dart start = *pending.begin();
    std::vector<Dart> face;
    Dart d = start;
    do {
      face.push_back(d);
      pending.erase(d);
      d = face_next(g, d);
    } while (d != start);
    out.faces.push_back(std::move(face));
  }

  const auto root = component_roots(g);
  std::map<std::string, int> vcount, ecount, fcount;
  for (const auto& v : g.vertices) vcount[root.at(v)]++;
  for (const auto& e : g.edges) ecount[root.at(e.a)]++;
  for (const auto& f : out.faces) fcount[root.at(f.front().first)]++;
  for (const auto& [r, V] : vcount) {
    const int E = ecount.count(r) ? ecount.at(r) : 0;
    const int F = fcount.count(r) ? fcount.at(r) : 1;  // an edgeless component bounds one face
    out.genus[r] = (2 - V + E - F) / 2;
  }
  return out;
}

PlaneGraph build_plane_graph(const std::vector<std::string>& vertices,
                             const std::map<std::string, Point>& coords,
                             const std::vector<Edge>& edges,
                             const std::map<std::string, std::vector<Edge>>& rotation,
                             CoordsKind kind_if_coords) {
  PlaneGraph g;
  g.vertices = vertices;
  std::sort(g.vertices.begin(), g.vertices.end());
  if (std::adjacent_find(g.vertices.begin(), g.vertices.end()) != g.vertices.end())
    throw Error(Errc::SemanticError, "duplicate vertex id");

  for (const auto& e : edges) {
    if (!g.has_vertex(e.a) || !g.has_vertex(e.b))
      throw Error(Errc::SemanticError, "edge " + edge_label(e) + " references unknown vertex");
    if (!g.edges.insert(e).second)
      throw Error(Errc::ParallelEdge, "edge " + edge_label(e) + " listed twice");
  }

  if (!coords.empty()) {
    for (const auto& v : g.vertices)
      if (!coords.count(v))
        throw Error(Errc::SemanticError, "vertex '" + v + "' has no coordinates");
    for (auto i = coords.begin(); i != coords.end(); ++i) {
      auto j = i;
      for (++j; j != coords.end(); ++j)
        if (i->second == j->second)
          throw Error(Errc::CoincidentCoordinates,
                      "vertices '" + i->first + "' and '" + j->first + "' coincide");
    }
    g.coords = coords;
    g.coords_kind = kind_if_coords;
  }

  const std::vector<Edge> edge_list(g.edges.begin(), g.edges.end());
  if (!rotation.empty()) {
    for (const auto& v : g.vertices) {
      auto it = rotation.find(v);
      std::vector<Edge> rot = it == rotation.end() ? std::vector<Edge>{} : it->second;
      std::vector<Edge> expect;
      for (const auto& e : edge_list)
        if (e.incident(v)) expect.push_back(e);
      std::vector<Edge> sorted = rot;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != expect)
        throw Error(Errc::SemanticError,
                    "rotation at '" + v + "' does not list the incident edges exactly once");
      g.rotation[v] = canonicalize_cycle(rot);
    }
    if (g.coords_kind == CoordsKind::Exact) {
      const auto computed = rotation_from_coordinates(g.vertices, g.coords, edge_list);
      if (computed != g.rotation)
        throw Error(Errc::RotationCoordMismatch,
                    "explicit rotation disagrees with the drawn angular order");
    }
  } else {
    if (coords.empty() && !edge_list.empty()) {
      // degree <= 2 everywhere still has a forced cyclic order
      bool forced = true;
      std::map<std::string, std::vector<Edge>> rot;
      for (const auto& v : g.vertices) rot[v] = {};
      for (const auto& e : edge_list) {
        rot[e.a].push_back(e);
        rot[e.b].push_back(e);
      }
      for (auto& [v, inc] : rot) {
        if (inc.size() > 2) forced = false;
        std::sort(inc.begin(), inc.end());
      }
      if (!forced)
        throw Error(Errc::NoCoordinates,
                    "rotation required: no coordinates and a vertex of degree 3 or more");
      g.rotation = rot;
    } else if (!coords.empty()) {
      g.rotation = rotation_from_coordinates(g.vertices, g.coords, edge_list);
    } else {
      for (const auto& v : g.vertices) g.rotation[v] = {};
    }
  }
  for (const auto& v : g.vertices)
    if (!g.rotation.count(v)) g.rotation[v] = {};

  const FaceTrace ft = trace_faces(g);
  for (const auto& [r, genus] : ft.genus)
    if (genus != 0)
      throw Error(Errc::NonPlanarRotation,
                  "component of '" + r + "' has genus " + std::to_string(genus));
  return g;
}

Walk normalize_walk(const std::vector<std::string>& raw, bool closed, const PlaneGraph& g) {
  if (raw.empty()) throw Error(Errc::SemanticError, "empty walk");
  for (const auto& v : raw)
    if (!g.has_vertex(v)) throw Error(Errc::SemanticError, "walk vertex '" + v + "' not in graph");

  std::vector<std::string> seq;
  for (const auto& v : raw)
    if (seq.empty() || seq.back() != v) seq.push_back(v);
  if (closed) {
    while (seq.size() > 1 && seq.back() == seq.front()) seq.pop_back();
  }

  Walk w;
  w.verts = std::move(seq);
  w.closed = closed;
  const int m = w.steps();
  for (int i = 1; i <= m; ++i) {
    const Edge e = w.step_edge(i);
    if (!g.has_edge(e))
      throw Error(Errc::NotAWalk, "consecutive vertices " + edge_label(e) + " are not an edge");
  }
  if (closed && !w.constant() && m < 3)
    throw Error(Errc::DegenerateClosed,
                "closed walk collapses to " + std::to_string(m) + " steps");
  return w;
}

PlaneGraph image_subgraph(const Instance& inst) {
  const Walk& w = inst.walk;
  std::set<Edge> used;
  for (int i = 1; i <= w.steps(); ++i) used.insert(w.step_edge(i));
  std::set<std::string> verts(w.verts.begin(), w.verts.end());

  PlaneGraph g;
  g.vertices.assign(verts.begin(), verts.end());
  g.edges = used;
  g.coords_kind = inst.graph.coords_kind;
  if (g.coords_kind != CoordsKind::None)
    for (const auto& v : g.vertices) g.coords[v] = inst.graph.coords.at(v);
  for (const auto& v : g.vertices) {
    std::vector<Edge> rot;
    for (const auto& e : inst.graph.rotation.at(v))
      if (used.count(e)) rot.push_back(e);
    g.rotation[v] = canonicalize_cycle(rot);
  }
  return g;
}

}  // namespace planewalk
