#pragma once

#include "planewalk/ingest.h"
#include "planewalk/rational.h"

#include <json.hpp>

#include <set>
#include <string>

namespace planewalk {

enum class Method { Derivative, Obstruction, Geom, Oracle };

// Parses repeated --method values ("derivative", "obstruction", "geom",
// "oracle", "all").  Empty input selects the default set: derivative +
// obstruction (+ geom when the instance carries exact coordinates); pair
// analyses default to obstruction alone.  Pair mode rejects methods that
// need a single walk and expands "all" to the applicable set.
std::set<Method> resolve_methods(const std::vector<std::string>& names, bool pair_mode,
                                 bool exact_coords);

// Exit-code protocol: 0 approximable/disjoinable, 1 not, 2 inconclusive,
// 3 usage or input error (raised by the CLI), 4 theorem violation (two
// methods that provably must agree disagreed; never masked).
struct AnalysisReport {
  nlohmann::ordered_json json;
  int exit_code = 2;
};

AnalysisReport analyze_instance(const Instance& inst, const std::string& label,
                                const std::set<Method>& methods, const BigInt& oracle_budget,
                                bool with_timings);

AnalysisReport analyze_pair(const Instance& K, const Instance& L, const std::string& label,
                            const std::set<Method>& methods, const BigInt& oracle_budget,
                            bool with_timings);

// One line per method plus the verdict; deterministic (no timings).
std::string human_summary(const AnalysisReport& report);

}  // namespace planewalk
