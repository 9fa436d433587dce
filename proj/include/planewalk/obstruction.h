#pragma once

#include "planewalk/derivative.h"
#include "planewalk/strips.h"

#include <map>
#include <set>
#include <vector>

namespace planewalk {

// A two-cell of the deleted product: an ordered step pair (i, j) of one walk
// with i + 2 <= j for open walks, the unordered pair {i, j} stored as i < j
// for closed ones (cyclic step distance >= 2 required), and a (K-step,
// L-step) pair of the full grid for disjoint pairs.
struct TwoCell {
  int i = 0, j = 0;

  bool operator==(const TwoCell& o) const { return i == o.i && j == o.j; }
  bool operator<(const TwoCell& o) const { return i < o.i || (i == o.i && j < o.j); }
};

// A one-cell, as (domain vertex, step): tag 0 pairs position a of the first
// factor with step b of the second, tag 1 pairs step a of the first factor
// with position b of the second.  Closed single-walk complexes quotient the
// two roles together and use tag 0 throughout.
struct OneCell {
  int tag = 0;
  int a = 0, b = 0;

  bool operator==(const OneCell& o) const { return tag == o.tag && a == o.a && b == o.b; }
  bool operator<(const OneCell& o) const {
    if (tag != o.tag) return tag < o.tag;
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
};

enum class ComplexKind { Open, Closed, Pair };

struct DeletedProductComplex {
  ComplexKind kind = ComplexKind::Open;
  std::vector<TwoCell> cells;                         // sorted
  std::map<OneCell, std::vector<TwoCell>> one_cells;  // face -> incident cells
  std::set<OneCell> boundary;                         // faces of exactly one cell
};

DeletedProductComplex deleted_product(const Walk& w);
DeletedProductComplex pair_product(const Walk& K, const Walk& L);

// Black = image-disjoint.  A two-cell is black iff its two step images are
// distinct edges without a common endpoint; a one-cell is black iff the
// vertex image misses the step image.  Every one-cell of a black two-cell is
// black, so black two-cells always end up as singleton components.
struct PaintedComplex {
  DeletedProductComplex complex;
  std::set<TwoCell> black_cells;
  std::set<OneCell> black_one_cells;
};

PaintedComplex paint_black(const DeletedProductComplex& dp, const Instance& inst);
PaintedComplex paint_black_pair(const DeletedProductComplex& dp, const Instance& K,
                                const Instance& L);

// Mod-2 crossing count of the combinatorial push-off, per two-cell.  Each
// interleaving arc pair in a vertex disk toggles the cell of the two outgoing
// steps.  The _with variants take explicit corridor orders and can attribute
// crossings to the incoming steps instead; contributing component sums are
// invariant under both choices.
using CellParities = std::map<TwoCell, int>;

CellParities crossing_parities(const Instance& inst);
CellParities crossing_parities_with(const Instance& inst, const CorridorOrder& order,
                                    bool attribute_by_in);
CellParities pair_crossing_parities(const Instance& K, const Instance& L);
CellParities pair_crossing_parities_with(const Instance& K, const Instance& L,
                                         const CorridorOrder& order, bool attribute_by_in);

// Connected components of the two-cells, glued across shared non-black
// one-cells.  A component contributes iff every boundary one-cell incident to
// it is black.
struct Component {
  std::vector<TwoCell> cells;  // sorted
  bool contributes = false;
  int parity = 0;  // mod-2 sum over the member cells
};

std::vector<Component> components(const PaintedComplex& painted, const CellParities& parities);

// Parity sums of the contributing components, ordered by least member cell.
struct ObstructionVector {
  std::vector<int> coordinates;

  bool zero() const {
    for (int c : coordinates)
      if (c) return false;
    return true;
  }
};

struct ObstructionAnalysis {
  PaintedComplex painted;
  CellParities parities;
  std::vector<Component> components;
  ObstructionVector vector;
};

ObstructionAnalysis analyze_obstruction(const Instance& inst);
ObstructionVector van_kampen(const Instance& inst);

// Yes/No by vanishing for open walks; for closed walks a nonzero vector is a
// No and a zero one is Inconclusive (the closed criterion is one-sided).
Decision decide_by_obstruction(const Instance& inst);

// Pair analogue over the full K-step x L-step grid.  Overlays the two
// drawings onto a common ambient graph first.
ObstructionAnalysis analyze_disjoinability(const Instance& K, const Instance& L);
ObstructionVector disjoinability_obstruction(const Instance& K, const Instance& L);

}  // namespace planewalk
