#pragma once

#include "planewalk/derivative.h"
#include "planewalk/plane_graph.h"

#include <map>
#include <string>
#include <vector>

namespace planewalk {

// One strand running along an edge corridor: a step of one of the walks.
// Single-instance analyses use walk 0 only; pair analyses put K at 0, L at 1.
struct Strand {
  int walk = 0;
  int step = 0;  // 1-based

  bool operator==(const Strand& o) const { return walk == o.walk && step == o.step; }
  bool operator!=(const Strand& o) const { return !(*this == o); }
  bool operator<(const Strand& o) const {
    return walk < o.walk || (walk == o.walk && step < o.step);
  }
};

// Transverse order of the parallel strands inside each traversed corridor.
using CorridorOrder = std::map<Edge, std::vector<Strand>>;

// One strand end on a vertex disk's boundary circle.
struct Slot {
  Edge edge;
  Strand strand;

  bool operator==(const Slot& o) const { return edge == o.edge && strand == o.strand; }
};

// An arc across a vertex disk: one interior pass, joining the disk ends of
// its in- and out-strands.
struct DiskArc {
  int walk = 0;
  int position = 0;
  Edge in_edge, out_edge;
  Strand in, out;
};

// The strip system of one or two walks drawn on a common plane graph:
// corridors (in canonical transverse order: ascending walk, then step) and
// the arcs crossing each vertex disk.  Terminal occurrences of open walks
// leave free stubs, which appear in no arc.
struct StripSystem {
  PlaneGraph graph;
  std::vector<Walk> walks;
  CorridorOrder corridors;
  std::map<std::string, std::vector<DiskArc>> disks;
};

StripSystem build_strips(const Instance& inst);

// Both instances must share the ambient graph verbatim (overlay first).
StripSystem build_strips_pair(const Instance& K, const Instance& L);

// Cyclic slot sequence around the disk of v: corridors enter by the rotation
// at v, and within a corridor the strands read in the given order at the
// edge's higher endpoint and reversed at the lower one (the two ends of a
// strip meet the two disk boundaries with opposite handedness).
std::vector<Slot> disk_slots(const StripSystem& s, const std::string& v,
                             const CorridorOrder& order);

// Whether the chords of the two arcs interleave in the cyclic slot sequence.
bool arcs_interleave(const std::vector<Slot>& slots, const DiskArc& a, const DiskArc& b);

}  // namespace planewalk
