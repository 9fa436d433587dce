#include "planewalk/pushoff.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <variant>

#include "planewalk/errors.h"

namespace planewalk {

namespace {

Segment edge_segment(const PlaneGraph& g, const Edge& e) {
  return {g.coords.at(e.a), g.coords.at(e.b)};
}

Rational l1_norm(const Point& p) {
  return (p.x < 0 ? -p.x : p.x) + (p.y < 0 ? -p.y : p.y);
}

}  // namespace

Rational safe_jitter_bound(const Instance& inst) {
  if (inst.graph.coords_kind != CoordsKind::Exact)
    throw Error(Errc::NoCoordinates, "jittered curves need exact coordinates");
  const Walk& w = inst.walk;
  if (w.empty() || w.constant()) return 1;

  std::set<Edge> edges;
  for (int t = 1; t <= static_cast<int>(w.steps()); ++t) edges.insert(w.step_edge(t));
  std::set<std::string> verts(w.verts.begin(), w.verts.end());

  std::optional<Rational> min2;
  const auto feed = [&min2](const Rational& d2) {
    if (!min2 || d2 < *min2) min2 = d2;
  };
  for (auto e = edges.begin(); e != edges.end(); ++e)
    for (auto f = std::next(e); f != edges.end(); ++f)
      if (!e->shares_endpoint(*f))
        feed(dist2_segments(edge_segment(inst.graph, *e), edge_segment(inst.graph, *f)));
  for (const std::string& v : verts)
    for (const Edge& e : edges)
      if (!e.incident(v))
        feed(dist2_point_segment(inst.graph.coords.at(v), edge_segment(inst.graph, e)));
  if (!min2)
    for (const Edge& e : edges)
      feed(dist2(inst.graph.coords.at(e.a), inst.graph.coords.at(e.b)));

  return sqrt_lower_bound(*min2) / 4;
}

std::vector<Point> jitter_directions(int count) {
  // Primitive integer vectors by (norm, angle), keeping only those that stay
  // in general position: no three chosen vectors collinear as points.  That
  // makes every degeneracy polynomial in the jitter amplitude have a nonzero
  // quadratic coefficient, so halving the amplitude always escapes it; a
  // dense table (e.g. all eight unit-ish vectors) admits amplitude-invariant
  // endpoint-on-segment incidences.
  const auto generic_with = [](const std::vector<Point>& chosen, const Point& v) {
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (orient(chosen[i], chosen[j], v) == 0) return false;
    return true;
  };

  std::vector<Point> out;
  for (long r2 = 1; static_cast<int>(out.size()) < count; ++r2) {
    long lim = 0;
    while ((lim + 1) * (lim + 1) <= r2) ++lim;
    std::vector<Point> ring;
    for (long x = -lim; x <= lim; ++x) {
      for (long y = -lim; y <= lim; ++y) {
        if (x * x + y * y != r2) continue;
        if (std::gcd(std::abs(x), std::abs(y)) != 1) continue;
        ring.push_back({Rational(x), Rational(y)});
      }
    }
    std::sort(ring.begin(), ring.end(), angle_less);
    for (const Point& v : ring) {
      if (static_cast<int>(out.size()) == count) break;
      if (generic_with(out, v)) out.push_back(v);
    }
  }
  return out;
}

JitteredCurve build_jittered_curve(const Instance& inst, int seed) {
  const Walk& w = inst.walk;
  const int m = static_cast<int>(w.steps());
  const int positions = w.closed ? m : m + 1;
  const auto dirs = jitter_directions(positions);

  JitteredCurve c;
  c.closed = w.closed;
  c.amplitude = safe_jitter_bound(inst) / Rational(BigInt(1) << seed);
  for (int p = 0; p < positions; ++p)
    c.points.push_back(inst.graph.coords.at(w.vertex_at(p)) + c.amplitude * dirs[p]);
  if (w.closed) c.points.push_back(c.points.front());
  return c;
}

bool check_genericity(const JitteredCurve& c) {
  const int m = c.segments();
  for (int i = 1; i <= m; ++i) {
    const Segment s = c.segment(i);
    if (s.a == s.b) return false;
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const Segment si = c.segment(i);
      const Segment sj = c.segment(j);
      const auto hit = intersect_segments(si, sj);
      if (std::holds_alternative<SegOverlap>(hit)) return false;
      const bool adjacent = j - i == 1 || (c.closed && i == 1 && j == m);
      if (adjacent) continue;  // meet at the shared walk point only; overlaps caught above
      if (std::holds_alternative<SegAt>(hit) && !proper_crossing(si, sj)) return false;
    }
  }
  return true;
}

GeometricAnalysis analyze_geometric(const Instance& inst) {
  GeometricAnalysis a;
  a.bound = safe_jitter_bound(inst);
  if (inst.walk.empty() || inst.walk.constant()) return a;

  const int positions =
      static_cast<int>(inst.walk.steps()) + (inst.walk.closed ? 0 : 1);
  Rational max_l1 = 0;
  for (const Point& d : jitter_directions(positions)) max_l1 = std::max(max_l1, l1_norm(d));
  int s0 = 0;
  while (Rational(BigInt(1) << s0) <= max_l1) ++s0;

  const auto dp = deleted_product(inst.walk);
  for (int seed = s0; seed < s0 + 64; ++seed) {
    JitteredCurve c = build_jittered_curve(inst, seed);
    if (!check_genericity(c)) continue;
    a.seed = seed;
    a.curve = std::move(c);
    for (const TwoCell& cell : dp.cells)
      a.parities[cell] =
          proper_crossing(a.curve.segment(cell.i), a.curve.segment(cell.j)) ? 1 : 0;
    return a;
  }
  throw Error(Errc::GenericityExhausted, "no generic jitter in 64 halvings");
}

CellParities geometric_parities(const Instance& inst) {
  return analyze_geometric(inst).parities;
}

}  // namespace planewalk
