#include "planewalk/derivative.h"

#include "planewalk/errors.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace planewalk {

int in_step_at(const Walk& w, int p) {
  if (w.closed && p == 0) return w.steps();
  return p;
}

int out_step_at(const Walk&, int p) { return p + 1; }

int domain_distance(const Walk& w, int p, int q) {
  int d = p < q ? q - p : p - q;
  if (w.closed) d = std::min(d, w.positions() - d);
  return d;
}

std::vector<Pass> interior_passes(const Instance& inst) {
  const Walk& w = inst.walk;
  std::vector<Pass> out;
  if (w.empty() || w.constant()) return out;
  const int lo = w.closed ? 0 : 1;
  const int hi = w.steps() - 1;
  for (int p = lo; p <= hi; ++p)
    out.push_back({p, w.vertex_at(p), w.step_edge(in_step_at(w, p)), w.step_edge(out_step_at(w, p))});
  return out;
}

namespace {

int rotation_index(const std::vector<Edge>& rot, const Edge& e) {
  const auto it = std::find(rot.begin(), rot.end(), e);
  if (it == rot.end()) throw std::logic_error("edge missing from rotation");
  return static_cast<int>(it - rot.begin());
}

// Do {a1, a2} and {b1, b2} interleave in the cyclic list?  All four entries
// are distinct members of rot.
bool interleave_in_rotation(const std::vector<Edge>& rot, const Edge& a1, const Edge& a2,
                            const Edge& b1, const Edge& b2) {
  const int n = static_cast<int>(rot.size());
  const int ia1 = rotation_index(rot, a1), ia2 = rotation_index(rot, a2);
  const auto inside = [&](const Edge& e) {
    const int dx = (rotation_index(rot, e) - ia1 + n) % n;
    return 0 < dx && dx < (ia2 - ia1 + n) % n;
  };
  return inside(b1) != inside(b2);
}

bool four_distinct(const Edge& a, const Edge& b, const Edge& c, const Edge& d) {
  return a != b && a != c && a != d && b != c && b != d && c != d;
}

}  // namespace

std::optional<TransversalWitness> detect_transversal(const Instance& inst) {
  const std::vector<Pass> passes = interior_passes(inst);
  for (std::size_t i = 0; i < passes.size(); ++i)
    for (std::size_t j = i + 1; j < passes.size(); ++j) {
      const Pass& p = passes[i];
      const Pass& q = passes[j];
      if (p.vertex != q.vertex) continue;
      if (domain_distance(inst.walk, p.position, q.position) < 2) continue;
      if (!four_distinct(p.in_edge, p.out_edge, q.in_edge, q.out_edge)) continue;
      if (!interleave_in_rotation(inst.graph.rotation.at(p.vertex), p.in_edge, p.out_edge,
                                  q.in_edge, q.out_edge))
        continue;
      return TransversalWitness{p.position, q.position, p.vertex,
                                p.in_edge,  p.out_edge, q.in_edge, q.out_edge};
    }
  return std::nullopt;
}

std::string derived_vertex_id(const Edge& e) { return "(" + e.a + " " + e.b + ")"; }

Instance derive(const Instance& inst) {
  if (const auto w = detect_transversal(inst))
    throw Error(Errc::TransversalPresent,
                "transversal self-intersection at '" + w->vertex + "'");
  const Walk& wk = inst.walk;
  if (wk.empty() || wk.constant())
    return {build_plane_graph({}, {}, {}), Walk{{}, wk.closed}};

  const PlaneGraph image = image_subgraph(inst);

  // step-image sequence, consecutive repeats collapsed (cyclically if closed)
  std::vector<Edge> seq;
  for (int i = 1; i <= wk.steps(); ++i) {
    const Edge e = wk.step_edge(i);
    if (seq.empty() || !(seq.back() == e)) seq.push_back(e);
  }
  if (wk.closed)
    while (seq.size() > 1 && seq.back() == seq.front()) seq.pop_back();

  std::map<Edge, std::string> id_of;
  std::vector<std::string> ids;
  for (const Edge& e : image.edges) {
    id_of[e] = derived_vertex_id(e);
    ids.push_back(id_of[e]);
  }

  std::vector<std::string> wverts;
  for (const Edge& e : seq) wverts.push_back(id_of.at(e));

  std::set<Edge> dedges;
  const int n = static_cast<int>(seq.size());
  if (n > 1) {
    const int pairs = wk.closed ? n : n - 1;
    for (int i = 0; i < pairs; ++i)
      dedges.insert(Edge(id_of.at(seq[static_cast<std::size_t>(i)]),
                         id_of.at(seq[static_cast<std::size_t>((i + 1) % n)])));
  }

  // rotation at an edge-vertex: connections through each endpoint, reading
  // the input rotation there counterclockwise starting just after the edge
  // itself; the two endpoint blocks concatenate (block order is immaterial
  // cyclically)
  std::map<std::string, std::vector<Edge>> drot;
  for (const Edge& a : image.edges) {
    const std::string& aid = id_of.at(a);
    std::vector<Edge> rot;
    for (const std::string& side : {a.b, a.a}) {
      const std::vector<Edge>& irot = image.rotation.at(side);
      const int sz = static_cast<int>(irot.size());
      const int k = rotation_index(irot, a);
      for (int t = 1; t < sz; ++t) {
        const Edge& b = irot[static_cast<std::size_t>((k + t) % sz)];
        const Edge cand(aid, id_of.at(b));
        if (dedges.count(cand)) rot.push_back(cand);
      }
    }
    drot[aid] = rot;
  }

  // midpoints make a rendering layout when they stay distinct
  std::map<std::string, Point> mids;
  if (image.coords_kind != CoordsKind::None) {
    std::set<Point> seen;
    for (const Edge& e : image.edges) {
      const Point m = Rational(1, 2) * (image.coords.at(e.a) + image.coords.at(e.b));
      if (!seen.insert(m).second) {
        mids.clear();
        break;
      }
      mids[id_of.at(e)] = m;
    }
  }

  Instance out;
  out.graph = build_plane_graph(ids, mids, std::vector<Edge>(dedges.begin(), dedges.end()),
                                drot, CoordsKind::Layout);
  out.walk = Walk{wverts, wk.closed};
  return out;
}

std::optional<WindingInfo> detect_winding(const Instance& inst) {
  const Walk& w = inst.walk;
  if (!w.closed || w.empty() || w.constant()) return std::nullopt;

  const PlaneGraph image = image_subgraph(inst);
  for (const std::string& v : image.vertices)
    if (image.degree(v) != 2) return std::nullopt;
  if (image.edges.size() != image.vertices.size()) return std::nullopt;

  // bounce-free and direction-uniform: each image vertex is always left by
  // the same successor
  std::map<std::string, std::string> successor;
  const int m = w.steps();
  for (int p = 0; p < m; ++p) {
    const std::string& here = w.vertex_at(p);
    const std::string& next = w.vertex_at((p + 1) % m);
    if (w.step_edge(in_step_at(w, p)) == w.step_edge(out_step_at(w, p))) return std::nullopt;
    const auto [it, fresh] = successor.emplace(here, next);
    if (!fresh && it->second != next) return std::nullopt;
  }

  const int n = static_cast<int>(image.edges.size());
  if (m % n != 0) throw std::logic_error("winding laps misaligned");
  int degree = m / n;

  bool counterclockwise;
  if (image.coords_kind == CoordsKind::Exact) {
    Rational shoelace(0);
    for (int p = 0; p < n; ++p)
      shoelace += cross(image.coords.at(w.vertex_at(p)),
                        image.coords.at(w.vertex_at((p + 1) % m)));
    counterclockwise = shoelace > 0;
  } else {
    // combinatorial fallback: orientation read at the least image vertex
    const std::string& least = image.vertices.front();
    std::vector<std::string> nbrs;
    for (const Edge& e : image.rotation.at(least)) nbrs.push_back(e.other(least));
    counterclockwise = successor.at(least) == std::min(nbrs[0], nbrs[1]);
  }
  if (!counterclockwise) degree = -degree;
  return WindingInfo{degree, n};
}

namespace {

int iteration_cap(const Instance& inst) {
  return std::max(3, static_cast<int>(inst.walk.verts.size()));
}

}  // namespace

Decision decide_approximable(const Instance& inst) {
  Decision d;
  d.levels.push_back(inst);
  const int cap = iteration_cap(inst);
  for (int level = 0;; ++level) {
    const Instance& cur = d.levels.back();
    d.level = level;
    if (cur.walk.empty()) {
      d.approximable = Verdict::Yes;
      d.reason = DecisionReason::EmptyDerivative;
      return d;
    }
    if (cur.walk.injective()) {
      d.approximable = Verdict::Yes;
      d.reason = DecisionReason::Injective;
      return d;
    }
    if (auto w = detect_transversal(cur)) {
      d.approximable = Verdict::No;
      d.reason = DecisionReason::TransversalFound;
      d.witness = w;
      return d;
    }
    if (cur.walk.closed) {
      if (auto wi = detect_winding(cur)) {
        d.winding = wi;
        d.approximable = std::abs(wi->degree) >= 2 ? Verdict::No : Verdict::Yes;
        d.reason = std::abs(wi->degree) >= 2 ? DecisionReason::ForbiddenWinding
                                             : DecisionReason::UnitWinding;
        return d;
      }
    }
    if (level >= cap)
      throw Error(Errc::IterationCapExceeded,
                  "derivative tower exceeded " + std::to_string(cap) + " levels", cap);
    d.levels.push_back(derive(cur));
  }
}

int winding_degree(const Instance& inst) {
  if (!inst.walk.closed) throw Error(Errc::SemanticError, "winding degree needs a closed walk");
  Instance cur = inst;
  const int cap = iteration_cap(inst);
  for (int level = 0;; ++level) {
    if (cur.walk.empty()) return 0;
    if (detect_transversal(cur))
      throw Error(Errc::TransversalPresent,
                  "transversal self-intersection at level " + std::to_string(level), level);
    if (auto wi = detect_winding(cur)) return wi->degree;
    if (level >= cap)
      throw Error(Errc::IterationCapExceeded,
                  "derivative tower exceeded " + std::to_string(cap) + " levels", cap);
    cur = derive(cur);
  }
}

std::optional<Decision> check_euler_shortcut(const Instance& inst) {
  std::map<Edge, int> uses;
  for (int i = 1; i <= inst.walk.steps(); ++i) uses[inst.walk.step_edge(i)]++;
  for (const Edge& e : inst.graph.edges)
    if (uses[e] != 1) return std::nullopt;

  Decision d;
  d.levels.push_back(inst);
  if (auto w = detect_transversal(inst)) {
    d.approximable = Verdict::No;
    d.reason = DecisionReason::TransversalFound;
    d.witness = w;
    d.level = 0;
    return d;
  }
  // an Euler walk without transversal intersections has an injective
  // derivative: each image edge is traversed once, so no derived vertex
  // repeats
  d.levels.push_back(derive(inst));
  if (!d.levels.back().walk.injective()) throw std::logic_error("euler derivative not injective");
  d.approximable = Verdict::Yes;
  d.reason = DecisionReason::Injective;
  d.level = 1;
  return d;
}

}  // namespace planewalk
