#pragma once

#include "planewalk/rational.h"
#include "planewalk/strips.h"

#include <optional>

namespace planewalk {

enum class OracleStatus { Yes, No, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::No;
  BigInt bound = 0;                      // full search-space size
  std::optional<CorridorOrder> witness;  // first crossing-free order (Yes only)
};

// Exhaustive ground truth: the walk is approximable by embeddings iff some
// choice of one transverse strand order per corridor leaves every vertex disk
// free of interleaving arc pairs.  Orders are tried lexicographically
// (corridors by edge, strands by walk step), so the witness is the least one.
// The space has prod(multiplicity!) points; if that exceeds the budget
// nothing is tried and the result is BudgetExceeded.
OracleResult oracle_approximable(const Instance& inst,
                                 const BigInt& budget = BigInt(10000000));

// Pair ground truth, after overlaying K and L onto a common ambient graph.
// Each corridor picks a K/L interleaving pattern, constant along the strip
// (same-walk strands may swap inside it, opposite-walk strands may not), and
// each corridor end places its strands within the pattern independently; a
// vertex disk fails only on a K-arc crossing an L-arc.  Once patterns are
// fixed the disks decouple, so the space has prod C(nK+nL, nK) times, per
// disk end, nK! * nL! points.
OracleResult oracle_disjoinable(const Instance& K, const Instance& L,
                                const BigInt& budget = BigInt(10000000));

}  // namespace planewalk
