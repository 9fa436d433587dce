#include "planewalk/obstruction.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "planewalk/arrangement.h"

namespace planewalk {

namespace {

bool degenerate(const Walk& w) { return w.empty() || w.constant(); }

// Domain positions of the endpoints of step s.
std::pair<int, int> step_positions(const Walk& w, int s) {
  const int m = static_cast<int>(w.steps());
  if (w.closed) return {s - 1, s % m};
  return {s - 1, s};
}

void add_face(DeletedProductComplex& dp, const OneCell& oc, const TwoCell& c) {
  dp.one_cells[oc].push_back(c);
}

void finish(DeletedProductComplex& dp) {
  std::sort(dp.cells.begin(), dp.cells.end());
  for (auto& [oc, inc] : dp.one_cells) {
    std::sort(inc.begin(), inc.end());
    if (inc.size() == 1) dp.boundary.insert(oc);
    if (inc.size() > 2) throw std::logic_error("one-cell with more than two cells");
  }
}

bool one_cell_black(const OneCell& oc, const Instance& first, const Instance& second) {
  const std::string& vertex = oc.tag == 0 ? first.walk.vertex_at(oc.a)
                                          : second.walk.vertex_at(oc.b);
  const Edge edge = oc.tag == 0 ? second.walk.step_edge(oc.b)
                                : first.walk.step_edge(oc.a);
  return !edge.incident(vertex);
}

PaintedComplex paint(const DeletedProductComplex& dp, const Instance& first,
                     const Instance& second) {
  PaintedComplex painted;
  painted.complex = dp;
  for (const TwoCell& c : dp.cells)
    if (!first.walk.step_edge(c.i).shares_endpoint(second.walk.step_edge(c.j)))
      painted.black_cells.insert(c);
  for (const auto& [oc, inc] : dp.one_cells)
    if (one_cell_black(oc, first, second)) painted.black_one_cells.insert(oc);
  return painted;
}

CellParities parities_of(const StripSystem& s, const DeletedProductComplex& dp,
                         const CorridorOrder& order, bool attribute_by_in,
                         bool pair_mode) {
  CellParities parities;
  for (const TwoCell& c : dp.cells) parities[c] = 0;
  for (const auto& [v, arcs] : s.disks) {
    if (arcs.size() < 2) continue;
    const auto slots = disk_slots(s, v, order);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        const DiskArc& a = arcs[i];
        const DiskArc& b = arcs[j];
        if (pair_mode && a.walk == b.walk) continue;
        if (!arcs_interleave(slots, a, b)) continue;
        TwoCell cell;
        if (pair_mode) {
          const DiskArc& ka = a.walk == 0 ? a : b;
          const DiskArc& la = a.walk == 0 ? b : a;
          cell.i = attribute_by_in ? ka.in.step : ka.out.step;
          cell.j = attribute_by_in ? la.in.step : la.out.step;
        } else {
          const int s1 = attribute_by_in ? a.in.step : a.out.step;
          const int s2 = attribute_by_in ? b.in.step : b.out.step;
          cell.i = std::min(s1, s2);
          cell.j = std::max(s1, s2);
        }
        auto it = parities.find(cell);
        if (it == parities.end())
          throw std::logic_error("crossing attributed outside the complex");
        it->second ^= 1;
      }
    }
  }
  return parities;
}

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

ObstructionVector vector_of(const std::vector<Component>& comps) {
  ObstructionVector v;
  for (const Component& c : comps)
    if (c.contributes) v.coordinates.push_back(c.parity);
  return v;
}

}  // namespace

DeletedProductComplex deleted_product(const Walk& w) {
  DeletedProductComplex dp;
  dp.kind = w.closed ? ComplexKind::Closed : ComplexKind::Open;
  if (degenerate(w)) return dp;
  const int m = static_cast<int>(w.steps());
  if (!w.closed) {
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 2; j <= m; ++j) {
        const TwoCell c{i, j};
        dp.cells.push_back(c);
        add_face(dp, {0, i - 1, j}, c);
        add_face(dp, {0, i, j}, c);
        add_face(dp, {1, i, j - 1}, c);
        add_face(dp, {1, i, j}, c);
      }
    }
  } else {
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        const int d = j - i;
        if (std::min(d, m - d) < 2) continue;
        const TwoCell c{i, j};
        dp.cells.push_back(c);
        const auto [pi, qi] = step_positions(w, i);
        const auto [pj, qj] = step_positions(w, j);
        add_face(dp, {0, pi, j}, c);
        add_face(dp, {0, qi, j}, c);
        add_face(dp, {0, pj, i}, c);
        add_face(dp, {0, qj, i}, c);
      }
    }
  }
  finish(dp);
  return dp;
}

DeletedProductComplex pair_product(const Walk& K, const Walk& L) {
  DeletedProductComplex dp;
  dp.kind = ComplexKind::Pair;
  if (degenerate(K) || degenerate(L)) return dp;
  const int mk = static_cast<int>(K.steps());
  const int ml = static_cast<int>(L.steps());
  for (int i = 1; i <= mk; ++i) {
    for (int j = 1; j <= ml; ++j) {
      const TwoCell c{i, j};
      dp.cells.push_back(c);
      const auto [pi, qi] = step_positions(K, i);
      const auto [pj, qj] = step_positions(L, j);
      add_face(dp, {0, pi, j}, c);
      add_face(dp, {0, qi, j}, c);
      add_face(dp, {1, i, pj}, c);
      add_face(dp, {1, i, qj}, c);
    }
  }
  finish(dp);
  return dp;
}

PaintedComplex paint_black(const DeletedProductComplex& dp, const Instance& inst) {
  return paint(dp, inst, inst);
}

PaintedComplex paint_black_pair(const DeletedProductComplex& dp, const Instance& K,
                                const Instance& L) {
  return paint(dp, K, L);
}

CellParities crossing_parities(const Instance& inst) {
  if (degenerate(inst.walk)) return {};
  const auto s = build_strips(inst);
  return parities_of(s, deleted_product(inst.walk), s.corridors, false, false);
}

CellParities crossing_parities_with(const Instance& inst, const CorridorOrder& order,
                                    bool attribute_by_in) {
  if (degenerate(inst.walk)) return {};
  return parities_of(build_strips(inst), deleted_product(inst.walk), order,
                     attribute_by_in, false);
}

CellParities pair_crossing_parities(const Instance& K, const Instance& L) {
  if (degenerate(K.walk) || degenerate(L.walk)) return {};
  const auto s = build_strips_pair(K, L);
  return parities_of(s, pair_product(K.walk, L.walk), s.corridors, false, true);
}

CellParities pair_crossing_parities_with(const Instance& K, const Instance& L,
                                         const CorridorOrder& order,
                                         bool attribute_by_in) {
  if (degenerate(K.walk) || degenerate(L.walk)) return {};
  return parities_of(build_strips_pair(K, L), pair_product(K.walk, L.walk), order,
                     attribute_by_in, true);
}

std::vector<Component> components(const PaintedComplex& painted,
                                  const CellParities& parities) {
  const auto& dp = painted.complex;
  const auto& cells = dp.cells;
  UnionFind uf(cells.size());
  auto index_of = [&cells](const TwoCell& c) {
    return static_cast<int>(std::lower_bound(cells.begin(), cells.end(), c) -
                            cells.begin());
  };
  for (const auto& [oc, inc] : dp.one_cells)
    if (inc.size() == 2 && !painted.black_one_cells.count(oc))
      uf.unite(index_of(inc[0]), index_of(inc[1]));

  std::map<int, Component> by_root;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    Component& c = by_root[uf.find(static_cast<int>(k))];
    c.cells.push_back(cells[k]);
    c.contributes = true;
  }
  for (const OneCell& oc : dp.boundary) {
    if (painted.black_one_cells.count(oc)) continue;
    by_root[uf.find(index_of(dp.one_cells.at(oc).front()))].contributes = false;
  }
  std::vector<Component> out;
  for (auto& [root, c] : by_root) {
    std::sort(c.cells.begin(), c.cells.end());
    for (const TwoCell& cell : c.cells) c.parity ^= parities.at(cell) & 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return a.cells.front() < b.cells.front();
  });
  return out;
}

ObstructionAnalysis analyze_obstruction(const Instance& inst) {
  ObstructionAnalysis a;
  a.painted = paint_black(deleted_product(inst.walk), inst);
  a.parities = crossing_parities(inst);
  a.components = components(a.painted, a.parities);
  a.vector = vector_of(a.components);
  return a;
}

ObstructionVector van_kampen(const Instance& inst) {
  return analyze_obstruction(inst).vector;
}

Decision decide_by_obstruction(const Instance& inst) {
  const ObstructionVector v = van_kampen(inst);
  Decision d;
  d.level = 0;
  d.levels = {inst};
  if (!inst.walk.closed) {
    d.approximable = v.zero() ? Verdict::Yes : Verdict::No;
  } else {
    d.approximable = v.zero() ? Verdict::Inconclusive : Verdict::No;
  }
  d.reason = v.zero() ? DecisionReason::ObstructionZero : DecisionReason::ObstructionNonzero;
  return d;
}

ObstructionAnalysis analyze_disjoinability(const Instance& K, const Instance& L) {
  const auto [k, l] = overlay_pair(K, L);
  ObstructionAnalysis a;
  a.painted = paint_black_pair(pair_product(k.walk, l.walk), k, l);
  a.parities = pair_crossing_parities(k, l);
  a.components = components(a.painted, a.parities);
  a.vector = vector_of(a.components);
  return a;
}

ObstructionVector disjoinability_obstruction(const Instance& K, const Instance& L) {
  return analyze_disjoinability(K, L).vector;
}

}  // namespace planewalk
