#pragma once

#include "planewalk/arrangement.h"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace planewalk {

// A parsed input document: exactly one of `instance` / `pair` is set.
// Polyline inputs are routed through arrange_polyline, so `instance` is
// always simplicial; `provenance` then maps walk steps back to input
// segments.  `label` names the source (fixture name or "input").
struct ParsedInput {
  std::optional<Instance> instance;
  std::optional<std::pair<Instance, Instance>> pair;
  std::vector<StepProvenance> provenance;
  std::string label = "input";
};

// Parses a UTF-8 JSON document:
//   { "fixture": "<name>" }
//   { "polyline": { "closed": bool, "points": [["p/q","r/s"], ...] } }
//   { "graph": { "vertices": [...], "edges": [...], "rotations": {...}? },
//     "walk": { "closed": bool, "vertices": [...] } }
//   { "K": <instance doc>, "L": <instance doc> }
// Coordinates and points are exact rationals: JSON integers, or strings
// "p/q", "123", "-1.25".  Non-integer JSON numbers are rejected (binary
// floats lose the decimal text), with the string forms suggested instead.
// Throws Error(SyntaxError) with line/column or Error(SemanticError).
ParsedInput parse_document(const std::string& text);

// Conveniences that insist on the document kind.
Instance parse_instance(const std::string& text);
std::pair<Instance, Instance> parse_pair(const std::string& text);

// Resolves a CLI input argument: "fixture:NAME" hits the registry, anything
// else is read as a file path.
ParsedInput load_input(const std::string& path_or_fixture);

}  // namespace planewalk
