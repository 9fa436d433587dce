#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planewalk/derivative.h"
#include "planewalk/obstruction.h"
#include "planewalk/oracle.h"

#include "testkit.h"

using namespace planewalk;

namespace {

std::vector<Strand> strands(std::initializer_list<int> steps) {
  std::vector<Strand> out;
  for (int s : steps) out.push_back({0, s});
  return out;
}

// True iff every vertex disk is free of interleaving arc pairs under `order`.
bool order_is_crossing_free(const Instance& inst, const CorridorOrder& order) {
  const auto s = build_strips(inst);
  for (const auto& [v, arcs] : s.disks) {
    const auto slots = disk_slots(s, v, order);
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j)
        if (arcs_interleave(slots, arcs[i], arcs[j])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("trivial walks pass with a one-point search space") {
  const auto tri = oracle_approximable(fixture_instance("C3WIND(1)"));
  CHECK(tri.status == OracleStatus::Yes);
  CHECK(tri.bound == 1);

  CHECK(oracle_approximable(fixture_instance("PATH3")).status == OracleStatus::Yes);

  const PlaneGraph g = lookup_fixture("STAR4")->graph;
  Walk none;
  const auto empty = oracle_approximable(Instance{g, none});
  CHECK(empty.status == OracleStatus::Yes);
  CHECK(empty.bound == 1);
  REQUIRE(empty.witness.has_value());
  CHECK(empty.witness->empty());

  Walk point;
  point.verts = {"c"};
  CHECK(oracle_approximable(Instance{g, point}).status == OracleStatus::Yes);
}

TEST_CASE("star pass resolves on the first corridor order") {
  const auto r = oracle_approximable(fixture_instance("STARPASS"));
  CHECK(r.status == OracleStatus::Yes);
  CHECK(r.bound == 2);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->size() == 3);
  CHECK(r.witness->at(Edge("c", "e")) == strands({2, 3}));
  CHECK(r.witness->at(Edge("c", "w")) == strands({1}));
  CHECK(r.witness->at(Edge("c", "s")) == strands({4}));
}

TEST_CASE("transversal walk admits no order at all") {
  const auto r = oracle_approximable(fixture_instance("XWALK"));
  CHECK(r.status == OracleStatus::No);
  CHECK(r.bound == 1);
  CHECK(!r.witness.has_value());
}

TEST_CASE("double winding fails every strand order") {
  for (const std::string name : {"C3WIND(2)", "C3WIND(-2)"}) {
    CAPTURE(name);
    const auto r = oracle_approximable(fixture_instance(name));
    CHECK(r.status == OracleStatus::No);
    CHECK(r.bound == 8);
  }
}

TEST_CASE("fold cycle unfolds with ascending strands") {
  const auto r = oracle_approximable(fixture_instance("FOLDCYCLE"));
  CHECK(r.status == OracleStatus::Yes);
  CHECK(r.bound == 4);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->at(Edge("c0", "c1")) == strands({1, 4}));
  CHECK(r.witness->at(Edge("c1", "c2")) == strands({2, 3}));
}

TEST_CASE("nested eight embeds without reordering") {
  const auto r = oracle_approximable(fixture_instance("NESTEDEIGHT"));
  CHECK(r.status == OracleStatus::Yes);
  CHECK(r.bound == 1);
}

TEST_CASE("witness orders check out as crossing-free") {
  for (const std::string name : {"STARPASS", "FOLDCYCLE", "NESTEDEIGHT", "C3WIND(1)"}) {
    CAPTURE(name);
    const Instance inst = fixture_instance(name);
    const auto r = oracle_approximable(inst);
    REQUIRE(r.witness.has_value());
    CHECK(order_is_crossing_free(inst, *r.witness));
  }
}

TEST_CASE("budget gates the search upfront") {
  const Instance wind2 = fixture_instance("C3WIND(2)");
  const auto cut = oracle_approximable(wind2, BigInt(7));
  CHECK(cut.status == OracleStatus::BudgetExceeded);
  CHECK(cut.bound == 8);
  CHECK(!cut.witness.has_value());

  // A budget equal to the bound is enough to run.
  CHECK(oracle_approximable(wind2, BigInt(8)).status == OracleStatus::No);

  const auto [pk, pl] = fixture_pair("PAIRPAR");
  const auto pcut = oracle_disjoinable(pk, pl, BigInt(1));
  CHECK(pcut.status == OracleStatus::BudgetExceeded);
  CHECK(pcut.bound == 2);
}

TEST_CASE("oracle matches the derivative on small walks") {
  const PlaneGraph x = lookup_fixture("XGRAPH")->graph;
  for (const auto& verts : testkit::enumerate_open_walks(x, 5, 2)) {
    const Instance inst{x, normalize_walk(verts, false, x)};
    const auto r = oracle_approximable(inst);
    REQUIRE(r.status != OracleStatus::BudgetExceeded);
    CAPTURE(verts.size());
    CHECK((r.status == OracleStatus::Yes) ==
          (decide_approximable(inst).approximable == Verdict::Yes));
    if (r.witness) CHECK(order_is_crossing_free(inst, *r.witness));
  }

  const PlaneGraph tri = testkit::triangle_graph();
  for (const auto& verts : testkit::enumerate_closed_walks(tri, 6, 2)) {
    const Instance inst{tri, normalize_walk(verts, true, tri)};
    const auto r = oracle_approximable(inst);
    REQUIRE(r.status != OracleStatus::BudgetExceeded);
    CAPTURE(verts.size());
    CHECK((r.status == OracleStatus::Yes) ==
          (decide_approximable(inst).approximable == Verdict::Yes));
  }
}

TEST_CASE("pair fixtures split into the expected verdicts") {
  const auto [xk, xl] = fixture_pair("PAIRX");
  const auto crossing = oracle_disjoinable(xk, xl);
  CHECK(crossing.status == OracleStatus::No);
  CHECK(crossing.bound == 1);

  const auto [pk, pl] = fixture_pair("PAIRPAR");
  const auto parallel = oracle_disjoinable(pk, pl);
  CHECK(parallel.status == OracleStatus::Yes);
  CHECK(parallel.bound == 2);
  CHECK(!parallel.witness.has_value());

  const auto [sk, sl] = fixture_pair("XSPLIT");
  const auto split = oracle_disjoinable(sk, sl);
  CHECK(split.status == OracleStatus::No);
  CHECK(split.bound == 1);
}

TEST_CASE("nonzero pair obstruction implies the oracle says no") {
  const PlaneGraph x = lookup_fixture("XGRAPH")->graph;
  const auto walks = testkit::enumerate_open_walks(x, 2, 1);
  for (const auto& kv : walks) {
    for (const auto& lv : walks) {
      const Instance k{x, normalize_walk(kv, false, x)};
      const Instance l{x, normalize_walk(lv, false, x)};
      const auto r = oracle_disjoinable(k, l);
      REQUIRE(r.status != OracleStatus::BudgetExceeded);
      if (!disjoinability_obstruction(k, l).zero()) {
        CAPTURE(kv.size());
        CAPTURE(lv.size());
        CHECK(r.status == OracleStatus::No);
      }
    }
  }
}
