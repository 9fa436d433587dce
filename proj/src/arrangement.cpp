#include "planewalk/arrangement.h"

#include "planewalk/errors.h"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <variant>

namespace planewalk {

namespace {

// parameter of p along s; caller guarantees p lies on the line of s
Rational param_on(const Segment& s, const Point& p) {
  const Rational dx = s.b.x - s.a.x;
  if (dx != 0) return (p.x - s.a.x) / dx;
  return (p.y - s.a.y) / (s.b.y - s.a.y);
}

struct ChainEntry {
  Rational t;
  std::size_t vertex;  // index into SplitResult::points
};

struct SplitResult {
  std::vector<Point> points;                    // lex sorted, distinct
  std::vector<std::vector<ChainEntry>> chains;  // per input segment, ascending t
};

std::size_t point_index(const std::vector<Point>& pts, const Point& p) {
  const auto it = std::lower_bound(pts.begin(), pts.end(), p);
  return static_cast<std::size_t>(it - pts.begin());
}

// Cuts every segment at both endpoints, at every intersection with the other
// segments (crossings, touchings, overlap interval ends), and at every forced
// point it contains.  Forced points enter the point set even when they lie on
// no segment.
SplitResult split_segments(const std::vector<Segment>& segs, const std::vector<Point>& forced) {
  const std::size_t n = segs.size();
  std::vector<std::set<Point>> cuts(n);
  for (std::size_t i = 0; i < n; ++i) {
    cuts[i].insert(segs[i].a);
    cuts[i].insert(segs[i].b);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const SegIntersection x = intersect_segments(segs[i], segs[j]);
      if (const auto* at = std::get_if<SegAt>(&x)) {
        cuts[i].insert(at->p);
        cuts[j].insert(at->p);
      } else if (const auto* ov = std::get_if<SegOverlap>(&x)) {
        for (const Point& p : {ov->p, ov->q}) {
          cuts[i].insert(p);
          cuts[j].insert(p);
        }
      }
    }
  for (const Point& p : forced)
    for (std::size_t i = 0; i < n; ++i)
      if (on_segment(p, segs[i].a, segs[i].b)) cuts[i].insert(p);

  SplitResult out;
  for (const auto& c : cuts) out.points.insert(out.points.end(), c.begin(), c.end());
  out.points.insert(out.points.end(), forced.begin(), forced.end());
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());

  out.chains.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Point& p : cuts[i])
      out.chains[i].push_back({param_on(segs[i], p), point_index(out.points, p)});
    std::sort(out.chains[i].begin(), out.chains[i].end(),
              [](const ChainEntry& a, const ChainEntry& b) { return a.t < b.t; });
  }
  return out;
}

std::vector<std::string> coordinate_ids(std::size_t count) {
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) ids.push_back("v" + std::to_string(i));
  return ids;
}

PlaneGraph graph_of_split(const SplitResult& split, const std::vector<std::string>& ids) {
  std::map<std::string, Point> coords;
  for (std::size_t i = 0; i < split.points.size(); ++i) coords[ids[i]] = split.points[i];
  std::set<Edge> edge_set;
  for (const auto& chain : split.chains)
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      edge_set.insert(Edge(ids[chain[k].vertex], ids[chain[k + 1].vertex]));
  return build_plane_graph(ids, coords, std::vector<Edge>(edge_set.begin(), edge_set.end()));
}

bool same_graph(const PlaneGraph& a, const PlaneGraph& b) {
  return a.vertices == b.vertices && a.coords_kind == b.coords_kind && a.coords == b.coords &&
         a.edges == b.edges && a.rotation == b.rotation;
}

Walk reexpress_walk(const Walk& w, const PlaneGraph& g, const std::map<Edge, std::size_t>& seg_of,
                    const SplitResult& split, const std::vector<std::string>& ids,
                    const PlaneGraph& common) {
  if (w.empty()) return w;
  if (w.constant())
    return Walk{{ids[point_index(split.points, g.coords.at(w.verts[0]))]}, w.closed};
  std::vector<std::string> out;
  out.push_back(ids[point_index(split.points, g.coords.at(w.verts[0]))]);
  for (int i = 1; i <= w.steps(); ++i) {
    const Edge e = w.step_edge(i);
    const auto& chain = split.chains.at(seg_of.at(e));
    if (w.vertex_at(i - 1) == e.a)
      for (std::size_t k = 1; k < chain.size(); ++k) out.push_back(ids[chain[k].vertex]);
    else
      for (std::size_t k = chain.size() - 1; k-- > 0;) out.push_back(ids[chain[k].vertex]);
  }
  if (w.closed) out.pop_back();
  return normalize_walk(out, w.closed, common);
}

}  // namespace

ArrangementResult arrange_polyline(const RawPolyline& raw) {
  std::vector<Point> pts;
  for (const Point& p : raw.points)
    if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
  if (raw.closed)
    while (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();
  if (!raw.closed && pts.size() < 2)
    throw Error(Errc::ZeroLengthInput, "open polyline has fewer than two distinct points");
  if (raw.closed && pts.size() < 3)
    throw Error(Errc::SemanticError, "closed polyline has fewer than three distinct corners");

  std::vector<Segment> segs;
  const std::size_t corners = pts.size();
  const std::size_t nseg = raw.closed ? corners : corners - 1;
  for (std::size_t i = 0; i < nseg; ++i) segs.push_back({pts[i], pts[(i + 1) % corners]});

  const SplitResult split = split_segments(segs, {});
  const std::vector<std::string> ids = coordinate_ids(split.points.size());

  ArrangementResult out;
  out.instance.graph = graph_of_split(split, ids);

  // Re-express the walk through the subdivision.  Chains have strictly
  // increasing parameters and consecutive chains share only the corner we
  // skip, so the vertex list comes out already free of consecutive repeats.
  std::vector<std::string> wverts;
  wverts.push_back(ids[split.chains[0].front().vertex]);
  for (std::size_t i = 0; i < nseg; ++i) {
    const auto& chain = split.chains[i];
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      wverts.push_back(ids[chain[k + 1].vertex]);
      out.provenance.push_back({static_cast<int>(i), chain[k].t, chain[k + 1].t});
    }
  }
  if (raw.closed) wverts.pop_back();
  out.instance.walk = normalize_walk(wverts, raw.closed, out.instance.graph);
  if (static_cast<int>(out.provenance.size()) != out.instance.walk.steps())
    throw std::logic_error("arrangement provenance misaligned");
  return out;
}

std::pair<Instance, Instance> overlay_pair(const Instance& K, const Instance& L) {
  if (same_graph(K.graph, L.graph)) return {K, L};
  if (K.graph.coords_kind != CoordsKind::Exact || L.graph.coords_kind != CoordsKind::Exact)
    throw Error(Errc::AmbientMismatch,
                "instances live on different graphs and lack exact coordinates");

  std::vector<Segment> segs;
  std::vector<Point> forced;
  std::map<Edge, std::size_t> seg_of_k, seg_of_l;
  for (const Instance* inst : {&K, &L}) {
    auto& seg_of = inst == &K ? seg_of_k : seg_of_l;
    for (const Edge& e : inst->graph.edges) {
      seg_of[e] = segs.size();
      segs.push_back({inst->graph.coords.at(e.a), inst->graph.coords.at(e.b)});
    }
    // vertex points survive the overlay even when isolated
    for (const std::string& v : inst->graph.vertices) forced.push_back(inst->graph.coords.at(v));
  }

  const SplitResult split = split_segments(segs, forced);
  const std::vector<std::string> ids = coordinate_ids(split.points.size());
  const PlaneGraph common = graph_of_split(split, ids);

  return {Instance{common, reexpress_walk(K.walk, K.graph, seg_of_k, split, ids, common)},
          Instance{common, reexpress_walk(L.walk, L.graph, seg_of_l, split, ids, common)}};
}

void assert_disjoint_drawing(const PlaneGraph& g) {
  if (g.coords_kind != CoordsKind::Exact)
    throw Error(Errc::SemanticError, "drawing check needs exact coordinates");
  const std::vector<Edge> es(g.edges.begin(), g.edges.end());
  for (std::size_t i = 0; i < es.size(); ++i) {
    const Segment si{g.coords.at(es[i].a), g.coords.at(es[i].b)};
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const Segment sj{g.coords.at(es[j].a), g.coords.at(es[j].b)};
      const SegIntersection x = intersect_segments(si, sj);
      if (es[i].shares_endpoint(es[j])) {
        const std::string& shared = es[i].incident(es[j].a) ? es[j].a : es[j].b;
        const auto* at = std::get_if<SegAt>(&x);
        if (!at || !(at->p == g.coords.at(shared)))
          throw Error(Errc::SemanticError, "edges " + edge_label(es[i]) + " and " +
                                               edge_label(es[j]) +
                                               " meet away from their shared endpoint");
      } else if (!std::holds_alternative<SegNone>(x)) {
        throw Error(Errc::SemanticError, "edges " + edge_label(es[i]) + " and " +
                                             edge_label(es[j]) + " cross in the drawing");
      }
    }
  }
  for (const std::string& v : g.vertices) {
    const Point& p = g.coords.at(v);
    for (const Edge& e : es) {
      if (e.incident(v)) continue;
      if (on_segment(p, g.coords.at(e.a), g.coords.at(e.b)))
        throw Error(Errc::SemanticError, "vertex '" + v + "' lies on edge " + edge_label(e));
    }
  }
}

}  // namespace planewalk
