#pragma once

#include "planewalk/plane_graph.h"

#include <optional>
#include <string>
#include <vector>

namespace planewalk {

// Built-in instances with exact coordinates, addressable by name from the CLI
// and the tests.  A fixture is a drawn graph, optionally with a walk, or a
// pair of instances for the disjoinability pipeline.
struct Fixture {
  std::string name;
  std::string summary;
  PlaneGraph graph;                                     // unset for pair fixtures
  std::optional<Walk> walk;
  std::optional<std::pair<Instance, Instance>> pair;    // raw, not yet overlaid
};

// Known names: PATH3, BACKFORTH, STAR4, STARPASS, XGRAPH, XWALK, THETA,
// C3WIND(d) for any integer d, NESTEDEIGHT, FOLDCYCLE, PAIRX, PAIRPAR,
// XSPLIT.  Returns nothing for unknown names.
std::optional<Fixture> lookup_fixture(const std::string& name);

// Names and summaries for the `fixtures` command, deterministic order.
// C3WIND is listed once with its parameter convention.
std::vector<std::pair<std::string, std::string>> fixture_directory();

Instance fixture_instance(const std::string& name);           // throws if no walk
std::pair<Instance, Instance> fixture_pair(const std::string& name);  // throws if not a pair

}  // namespace planewalk
