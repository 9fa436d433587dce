#pragma once

namespace planewalk {

// Entry point of the planewalk binary.  Subcommands: analyze, degree,
// disjoint, render, fixtures.  Exit codes: 0 approximable/disjoinable (or
// plain success for degree/render/fixtures), 1 not, 2 inconclusive, 3
// usage or input error, 4 cross-method theorem violation.
int run_cli(int argc, char** argv);

}  // namespace planewalk
