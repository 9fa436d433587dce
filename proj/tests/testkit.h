#pragma once

// Shared helpers for the test binaries: walk enumeration over small graphs
// and a couple of construction shortcuts.  Kept free of any test framework
// so the acceptance driver can use it too.

#include "planewalk/arrangement.h"
#include "planewalk/fixtures.h"
#include "planewalk/plane_graph.h"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace planewalk::testkit {

inline std::vector<std::string> neighbors(const PlaneGraph& g, const std::string& v) {
  std::vector<std::string> out;
  for (const Edge& e : g.rotation.at(v)) out.push_back(e.other(v));
  return out;
}

// All open walks with step count in [1, max_steps], as raw vertex sequences.
// Sequences are emitted in lexicographic order.  Walks may retrace edges; an
// optional per-edge multiplicity cap prunes the enumeration.
inline std::vector<std::vector<std::string>> enumerate_open_walks(const PlaneGraph& g,
                                                                  int max_steps,
                                                                  int max_multiplicity = 0) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  std::map<Edge, int> used;
  std::function<void()> grow = [&] {
    if (static_cast<int>(cur.size()) >= 2) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_steps + 1) return;
    for (const auto& n : neighbors(g, cur.back())) {
      const Edge e(cur.back(), n);
      if (max_multiplicity && used[e] == max_multiplicity) continue;
      used[e]++;
      cur.push_back(n);
      grow();
      cur.pop_back();
      used[e]--;
    }
  };
  for (const auto& v : g.vertices) {
    cur = {v};
    grow();
  }
  return out;
}

// All closed walks with step count in [3, max_steps], every starting point
// (rotations of the same cycle are distinct entries: cheap extra coverage).
inline std::vector<std::vector<std::string>> enumerate_closed_walks(const PlaneGraph& g,
                                                                    int max_steps,
                                                                    int max_multiplicity = 0) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> cur;
  std::map<Edge, int> used;
  std::function<void()> grow = [&] {
    const int len = static_cast<int>(cur.size());
    if (len >= 3 && cur.back() != cur.front() && g.has_edge(Edge(cur.back(), cur.front()))) {
      const Edge back(cur.back(), cur.front());
      if (!max_multiplicity || used[back] < max_multiplicity) out.push_back(cur);
    }
    if (len == max_steps) return;
    for (const auto& n : neighbors(g, cur.back())) {
      const Edge e(cur.back(), n);
      if (max_multiplicity && used[e] == max_multiplicity) continue;
      used[e]++;
      cur.push_back(n);
      grow();
      cur.pop_back();
      used[e]--;
    }
  };
  for (const auto& v : g.vertices) {
    cur = {v};
    grow();
  }
  return out;
}

inline PlaneGraph triangle_graph() { return lookup_fixture("C3WIND(1)")->graph; }

// Deterministic pseudo-random rational polyline with at most 10 segments.
// Coordinates have numerators in [-8, 8] and denominators in [1, 4].  Redraws
// until enough distinct corners remain (two open, three closed).
inline RawPolyline random_polyline(std::mt19937& rng) {
  const auto coord = [&rng] {
    const long num = static_cast<long>(rng() % 17) - 8;
    const long den = static_cast<long>(rng() % 4) + 1;
    return Rational(num, den);
  };
  while (true) {
    RawPolyline raw;
    raw.closed = rng() % 2 == 0;
    const int corners = 3 + static_cast<int>(rng() % 8);
    for (int i = 0; i < corners; ++i) raw.points.push_back({coord(), coord()});
    std::vector<Point> distinct;
    for (const Point& p : raw.points)
      if (distinct.empty() || !(distinct.back() == p)) distinct.push_back(p);
    if (raw.closed)
      while (distinct.size() > 1 && distinct.back() == distinct.front()) distinct.pop_back();
    if (distinct.size() >= (raw.closed ? 3u : 2u)) return raw;
  }
}

// The polyline's segments after dropping duplicate corners, mirroring what
// arrange_polyline normalizes away.
inline std::vector<Segment> polyline_segments(const RawPolyline& raw) {
  std::vector<Point> pts;
  for (const Point& p : raw.points)
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
  if (raw.closed)
    while (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();
  std::vector<Segment> segs;
  const std::size_t n = pts.size();
  const std::size_t m = raw.closed ? n : n - 1;
  for (std::size_t i = 0; i < m; ++i) segs.push_back({pts[i], pts[(i + 1) % n]});
  return segs;
}

// Exact point-set identity between a drawn graph and a segment collection:
// every edge lies inside some input segment (segments are convex, so endpoint
// containment is containment), and the graph's vertices tile every input
// segment end to end with edges.
inline bool covers_exactly(const PlaneGraph& g, const std::vector<Segment>& inputs) {
  for (const Edge& e : g.edges) {
    const Point& a = g.coords.at(e.a);
    const Point& b = g.coords.at(e.b);
    bool inside = false;
    for (const Segment& s : inputs)
      if (on_segment(a, s.a, s.b) && on_segment(b, s.a, s.b)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  std::map<Point, std::string> id_of;
  for (const auto& [v, p] : g.coords) id_of[p] = v;
  for (const Segment& s : inputs) {
    std::vector<Point> on;
    for (const auto& [v, p] : g.coords)
      if (on_segment(p, s.a, s.b)) on.push_back(p);
    std::sort(on.begin(), on.end());  // lex order is monotone along a line
    if (on.empty() || !(on.front() == std::min(s.a, s.b)) || !(on.back() == std::max(s.a, s.b)))
      return false;
    for (std::size_t k = 0; k + 1 < on.size(); ++k)
      if (!g.has_edge(Edge(id_of.at(on[k]), id_of.at(on[k + 1])))) return false;
  }
  return true;
}

}  // namespace planewalk::testkit
