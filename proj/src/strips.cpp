#include "planewalk/strips.h"

#include <algorithm>
#include <stdexcept>

#include "planewalk/errors.h"

namespace planewalk {

namespace {

void add_walk(StripSystem& s, const Walk& w, int walk_index) {
  const int m = static_cast<int>(w.steps());
  for (int t = 1; t <= m; ++t) s.corridors[w.step_edge(t)].push_back({walk_index, t});
  for (const Pass& pass : interior_passes({s.graph, w})) {
    DiskArc arc;
    arc.walk = walk_index;
    arc.position = pass.position;
    arc.in_edge = pass.in_edge;
    arc.out_edge = pass.out_edge;
    arc.in = {walk_index, in_step_at(w, pass.position)};
    arc.out = {walk_index, out_step_at(w, pass.position)};
    s.disks[pass.vertex].push_back(arc);
  }
}

void finish(StripSystem& s) {
  for (auto& [e, strands] : s.corridors) std::sort(strands.begin(), strands.end());
}

bool same_ambient(const PlaneGraph& a, const PlaneGraph& b) {
  return a.vertices == b.vertices && a.coords_kind == b.coords_kind &&
         a.coords == b.coords && a.edges == b.edges && a.rotation == b.rotation;
}

int slot_index(const std::vector<Slot>& slots, const Edge& e, const Strand& st) {
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slots[i].edge == e && slots[i].strand == st) return static_cast<int>(i);
  throw std::logic_error("strand end missing from disk");
}

}  // namespace

StripSystem build_strips(const Instance& inst) {
  StripSystem s;
  s.graph = inst.graph;
  s.walks = {inst.walk};
  add_walk(s, inst.walk, 0);
  finish(s);
  return s;
}

StripSystem build_strips_pair(const Instance& K, const Instance& L) {
  if (!same_ambient(K.graph, L.graph))
    throw Error(Errc::AmbientMismatch, "pair strips need a common ambient graph");
  StripSystem s;
  s.graph = K.graph;
  s.walks = {K.walk, L.walk};
  add_walk(s, K.walk, 0);
  add_walk(s, L.walk, 1);
  finish(s);
  return s;
}

std::vector<Slot> disk_slots(const StripSystem& s, const std::string& v,
                             const CorridorOrder& order) {
  std::vector<Slot> slots;
  auto rot = s.graph.rotation.find(v);
  if (rot == s.graph.rotation.end()) return slots;
  for (const Edge& e : rot->second) {
    auto it = order.find(e);
    if (it == order.end()) continue;
    if (v == e.b) {
      for (const Strand& st : it->second) slots.push_back({e, st});
    } else {
      for (auto r = it->second.rbegin(); r != it->second.rend(); ++r)
        slots.push_back({e, *r});
    }
  }
  return slots;
}

bool arcs_interleave(const std::vector<Slot>& slots, const DiskArc& a, const DiskArc& b) {
  const int n = static_cast<int>(slots.size());
  const int a1 = slot_index(slots, a.in_edge, a.in);
  const int a2 = slot_index(slots, a.out_edge, a.out);
  const int b1 = slot_index(slots, b.in_edge, b.in);
  const int b2 = slot_index(slots, b.out_edge, b.out);
  // b's ends must sit on opposite sides of the chord a1-a2.
  const int da = (a2 - a1 + n) % n;
  const int d1 = (b1 - a1 + n) % n;
  const int d2 = (b2 - a1 + n) % n;
  const bool in1 = 0 < d1 && d1 < da;
  const bool in2 = 0 < d2 && d2 < da;
  return in1 != in2;
}

}  // namespace planewalk
