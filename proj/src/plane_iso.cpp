#include "planewalk/plane_iso.h"

#include <algorithm>
#include <map>
#include <set>

namespace planewalk {

namespace {

// Does the (possibly partial) map respect every edge among mapped vertices
// and, once total, every rotation list?
bool edges_ok(const PlaneGraph& a, const PlaneGraph& b,
              const std::map<std::string, std::string>& m, const std::string& just_mapped) {
  for (const Edge& e : a.rotation.at(just_mapped)) {
    const auto other = m.find(e.other(just_mapped));
    if (other == m.end()) continue;
    if (!b.has_edge(Edge(m.at(just_mapped), other->second))) return false;
  }
  return true;
}

bool rotations_ok(const PlaneGraph& a, const PlaneGraph& b,
                  const std::map<std::string, std::string>& m) {
  for (const auto& [v, rot] : a.rotation) {
    std::vector<Edge> mapped;
    for (const Edge& e : rot) mapped.push_back(Edge(m.at(e.a), m.at(e.b)));
    if (canonicalize_cycle(mapped) != b.rotation.at(m.at(v))) return false;
  }
  return true;
}

bool extend(const PlaneGraph& a, const PlaneGraph& b, std::map<std::string, std::string>& m,
            std::set<std::string>& used, std::size_t next) {
  if (next == a.vertices.size()) return rotations_ok(a, b, m);
  const std::string& u = a.vertices[next];
  if (m.count(u)) return extend(a, b, m, used, next + 1);
  for (const std::string& x : b.vertices) {
    if (used.count(x) || b.degree(x) != a.degree(u)) continue;
    m[u] = x;
    used.insert(x);
    if (edges_ok(a, b, m, u) && extend(a, b, m, used, next + 1)) return true;
    m.erase(u);
    used.erase(x);
  }
  return false;
}

bool isomorphic_seeded(const PlaneGraph& a, const PlaneGraph& b,
                       std::map<std::string, std::string> seed) {
  if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size()) return false;
  std::vector<int> da, db;
  for (const auto& v : a.vertices) da.push_back(a.degree(v));
  for (const auto& v : b.vertices) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  std::set<std::string> used;
  for (const auto& [u, x] : seed) {
    if (!a.has_vertex(u) || !b.has_vertex(x) || a.degree(u) != b.degree(x)) return false;
    if (!used.insert(x).second) return false;  // seed not injective
  }
  for (const auto& [u, x] : seed) {
    (void)x;
    if (!edges_ok(a, b, seed, u)) return false;
  }
  return extend(a, b, seed, used, 0);
}

}  // namespace

bool plane_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
  return isomorphic_seeded(a, b, {});
}

bool plane_isomorphic(const Instance& a, const Instance& b) {
  if (a.walk.closed != b.walk.closed || a.walk.verts.size() != b.walk.verts.size()) return false;
  std::map<std::string, std::string> seed;
  std::map<std::string, std::string> reverse;
  for (std::size_t i = 0; i < a.walk.verts.size(); ++i) {
    const std::string &u = a.walk.verts[i], &x = b.walk.verts[i];
    const auto [it, fresh] = seed.emplace(u, x);
    if (!fresh && it->second != x) return false;
    const auto [rit, rfresh] = reverse.emplace(x, u);
    if (!rfresh && rit->second != u) return false;
  }
  return isomorphic_seeded(a.graph, b.graph, seed);
}

}  // namespace planewalk
