#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "planewalk/arrangement.h"
#include "planewalk/derivative.h"
#include "planewalk/fixtures.h"
#include "planewalk/obstruction.h"
#include "testkit.h"

using namespace planewalk;

namespace {

TwoCell tc(int i, int j) { return {i, j}; }

std::set<TwoCell> cell_set(const std::vector<TwoCell>& v) { return {v.begin(), v.end()}; }

std::set<TwoCell> odd_cells(const CellParities& p) {
  std::set<TwoCell> out;
  for (const auto& [c, parity] : p)
    if (parity) out.insert(c);
  return out;
}

std::vector<int> contributing_sums(const std::vector<Component>& comps) {
  std::vector<int> out;
  for (const Component& c : comps)
    if (c.contributes) out.push_back(c.parity);
  return out;
}

std::vector<int> sums_under(const Instance& inst, const CellParities& parities) {
  const auto painted = paint_black(deleted_product(inst.walk), inst);
  return contributing_sums(components(painted, parities));
}

std::vector<int> pair_sums_under(const Instance& k, const Instance& l,
                                 const CellParities& parities) {
  const auto painted = paint_black_pair(pair_product(k.walk, l.walk), k, l);
  return contributing_sums(components(painted, parities));
}

CorridorOrder shuffled(CorridorOrder order, std::mt19937& rng) {
  for (auto& [e, strands] : order) std::shuffle(strands.begin(), strands.end(), rng);
  return order;
}

}  // namespace

TEST_CASE("deleted product cells and faces") {
  const auto xwalk = fixture_instance("XWALK");
  const auto dp = deleted_product(xwalk.walk);
  CHECK(dp.kind == ComplexKind::Open);
  CHECK(cell_set(dp.cells) ==
        std::set<TwoCell>{tc(1, 3), tc(1, 4), tc(1, 5), tc(2, 4), tc(2, 5), tc(3, 5)});
  // (1,3) has three boundary sides; the fourth, (step 1, position 3), is
  // shared with (1,4).
  CHECK(dp.one_cells.at({0, 0, 3}) == std::vector<TwoCell>{tc(1, 3)});
  CHECK(dp.one_cells.at({0, 1, 3}) == std::vector<TwoCell>{tc(1, 3)});
  CHECK(dp.one_cells.at({1, 1, 2}) == std::vector<TwoCell>{tc(1, 3)});
  CHECK(dp.one_cells.at({1, 1, 3}) == std::vector<TwoCell>{tc(1, 3), tc(1, 4)});
  CHECK(dp.boundary.count({0, 0, 3}) == 1);
  CHECK(dp.boundary.count({1, 1, 3}) == 0);

  // Two steps leave no room for a disjoint step pair.
  const auto tri = testkit::triangle_graph();
  CHECK(deleted_product(normalize_walk({"c0", "c1", "c2"}, false, tri)).cells.empty());
  // Neither does a 3-cycle under the cyclic distance rule.
  CHECK(deleted_product(fixture_instance("C3WIND(1)").walk).cells.empty());

  const auto nine = deleted_product(fixture_instance("C3WIND(2)").walk);
  CHECK(nine.kind == ComplexKind::Closed);
  CHECK(nine.cells.size() == 9);
  for (const auto& [oc, inc] : nine.one_cells) CHECK(oc.tag == 0);
  CHECK(deleted_product(fixture_instance("C3WIND(3)").walk).cells.size() == 27);
}

TEST_CASE("painting marks image-disjoint cells") {
  const auto xwalk = fixture_instance("XWALK");
  const auto painted = paint_black(deleted_product(xwalk.walk), xwalk);
  CHECK(painted.black_cells == std::set<TwoCell>{tc(1, 3), tc(3, 5)});
  // Position 1 sits at the crossing vertex, step 3 runs between e and n.
  CHECK(painted.black_one_cells.count({0, 1, 3}) == 1);
  CHECK(painted.black_one_cells.count({0, 1, 4}) == 0);

  const auto theta = fixture_instance("THETA");
  const auto tpaint = paint_black(deleted_product(theta.walk), theta);
  CHECK(tpaint.black_cells == std::set<TwoCell>{tc(1, 3), tc(2, 4)});

  const auto star = fixture_instance("STARPASS");
  const auto spaint = paint_black(deleted_product(star.walk), star);
  CHECK(spaint.black_cells.empty());
}

TEST_CASE("crossing walk carries the obstruction") {
  const auto inst = fixture_instance("XWALK");
  const auto analysis = analyze_obstruction(inst);
  CHECK(odd_cells(analysis.parities) == std::set<TwoCell>{tc(2, 5)});

  REQUIRE(analysis.components.size() == 3);
  CHECK(analysis.components[0].cells == std::vector<TwoCell>{tc(1, 3)});
  CHECK(analysis.components[0].contributes);
  CHECK(analysis.components[0].parity == 0);
  CHECK(analysis.components[1].cells ==
        std::vector<TwoCell>{tc(1, 4), tc(1, 5), tc(2, 4), tc(2, 5)});
  CHECK(analysis.components[1].contributes);
  CHECK(analysis.components[1].parity == 1);
  CHECK(analysis.components[2].cells == std::vector<TwoCell>{tc(3, 5)});
  CHECK(analysis.components[2].parity == 0);

  CHECK(analysis.vector.coordinates == std::vector<int>{0, 1, 0});
  CHECK(!analysis.vector.zero());
  const auto d = decide_by_obstruction(inst);
  CHECK(d.approximable == Verdict::No);
  CHECK(d.reason == DecisionReason::ObstructionNonzero);
}

TEST_CASE("nested pass stays invisible to the obstruction") {
  const auto inst = fixture_instance("STARPASS");
  const auto analysis = analyze_obstruction(inst);
  CHECK(odd_cells(analysis.parities).empty());
  REQUIRE(analysis.components.size() == 1);
  CHECK(analysis.components[0].cells.size() == 3);
  CHECK(!analysis.components[0].contributes);
  CHECK(analysis.vector.coordinates.empty());
  CHECK(analysis.vector.zero());
  CHECK(decide_by_obstruction(inst).approximable == Verdict::Yes);
}

TEST_CASE("retraced path vanishes") {
  const auto inst = fixture_instance("BACKFORTH");
  const auto analysis = analyze_obstruction(inst);
  CHECK(odd_cells(analysis.parities).empty());
  REQUIRE(analysis.components.size() == 1);
  CHECK(!analysis.components[0].contributes);
  CHECK(analysis.vector.zero());
  CHECK(decide_by_obstruction(inst).approximable == Verdict::Yes);
}

TEST_CASE("embedded path contributes a zero coordinate") {
  const auto inst = fixture_instance("PATH3");
  const auto analysis = analyze_obstruction(inst);
  CHECK(analysis.vector.coordinates == std::vector<int>{0});
  CHECK(analysis.vector.zero());
  CHECK(decide_by_obstruction(inst).approximable == Verdict::Yes);
}

TEST_CASE("closed zero vector is one-sided") {
  const auto theta = fixture_instance("THETA");
  const auto ta = analyze_obstruction(theta);
  CHECK(ta.vector.coordinates == std::vector<int>{0, 0});
  CHECK(ta.vector.zero());
  CHECK(decide_by_obstruction(theta).approximable == Verdict::Inconclusive);
  CHECK(decide_by_obstruction(theta).reason == DecisionReason::ObstructionZero);

  const auto fold = fixture_instance("FOLDCYCLE");
  const auto fa = analyze_obstruction(fold);
  CHECK(fa.components.size() == 2);
  CHECK(contributing_sums(fa.components).empty());
  CHECK(fa.vector.zero());
  CHECK(decide_by_obstruction(fold).approximable == Verdict::Inconclusive);

  CHECK(analyze_obstruction(fixture_instance("NESTEDEIGHT")).vector.zero());
}

TEST_CASE("double winding is detected") {
  const auto inst = fixture_instance("C3WIND(2)");
  const auto analysis = analyze_obstruction(inst);
  CHECK(odd_cells(analysis.parities) == std::set<TwoCell>{tc(3, 6)});
  REQUIRE(analysis.components.size() == 1);
  CHECK(analysis.components[0].cells.size() == 9);
  CHECK(analysis.components[0].contributes);
  CHECK(analysis.vector.coordinates == std::vector<int>{1});
  CHECK(decide_by_obstruction(inst).approximable == Verdict::No);
}

TEST_CASE("triple winding escapes the mod-2 obstruction") {
  const auto inst = fixture_instance("C3WIND(3)");
  const auto analysis = analyze_obstruction(inst);
  CHECK(odd_cells(analysis.parities) ==
        std::set<TwoCell>{tc(3, 6), tc(3, 9), tc(4, 7), tc(6, 9)});
  REQUIRE(analysis.components.size() == 1);
  CHECK(analysis.components[0].cells.size() == 27);
  CHECK(analysis.components[0].contributes);
  CHECK(analysis.vector.coordinates == std::vector<int>{0});
  CHECK(analysis.vector.zero());
  // The derivative still says no: the vanishing vector is not a certificate
  // for closed walks.
  CHECK(decide_by_obstruction(inst).approximable == Verdict::Inconclusive);
  CHECK(decide_approximable(inst).approximable == Verdict::No);
}

TEST_CASE("attribution by incoming steps moves parities inside components") {
  const char* names[] = {"XWALK",     "STARPASS",  "BACKFORTH", "C3WIND(2)",
                         "C3WIND(3)", "FOLDCYCLE", "THETA",     "NESTEDEIGHT"};
  for (const char* name : names) {
    CAPTURE(name);
    const auto inst = fixture_instance(name);
    const auto canonical = build_strips(inst).corridors;
    const auto by_out = crossing_parities(inst);
    const auto by_in = crossing_parities_with(inst, canonical, true);
    CHECK(sums_under(inst, by_out) == sums_under(inst, by_in));
  }
  // On the crossing walk the parity lands two cells over, same component.
  const auto inst = fixture_instance("XWALK");
  const auto by_in = crossing_parities_with(inst, build_strips(inst).corridors, true);
  CHECK(odd_cells(by_in) == std::set<TwoCell>{tc(1, 4)});
}

TEST_CASE("corridor reordering preserves contributing sums") {
  const char* names[] = {"XWALK",     "STARPASS",  "BACKFORTH", "C3WIND(2)",
                         "C3WIND(3)", "FOLDCYCLE", "THETA",     "NESTEDEIGHT"};
  std::mt19937 rng(2026);
  for (const char* name : names) {
    CAPTURE(name);
    const auto inst = fixture_instance(name);
    const auto canonical = build_strips(inst).corridors;
    const auto baseline = sums_under(inst, crossing_parities(inst));
    for (int trial = 0; trial < 10; ++trial) {
      const auto order = shuffled(canonical, rng);
      CHECK(sums_under(inst, crossing_parities_with(inst, order, false)) == baseline);
      CHECK(sums_under(inst, crossing_parities_with(inst, order, true)) == baseline);
    }
  }
}

TEST_CASE("pair grids") {
  const auto [xk, xl] = fixture_pair("PAIRX");
  const auto xa = analyze_disjoinability(xk, xl);
  CHECK(xa.painted.complex.cells.size() == 4);
  CHECK(xa.painted.black_cells.empty());
  CHECK(odd_cells(xa.parities) == std::set<TwoCell>{tc(2, 2)});
  REQUIRE(xa.components.size() == 1);
  CHECK(xa.components[0].contributes);
  CHECK(xa.vector.coordinates == std::vector<int>{1});
  CHECK(!xa.vector.zero());

  const auto [pk, pl] = fixture_pair("PAIRPAR");
  const auto pa = analyze_disjoinability(pk, pl);
  CHECK(pa.painted.complex.cells.size() == 1);
  REQUIRE(pa.components.size() == 1);
  CHECK(!pa.components[0].contributes);
  CHECK(pa.vector.coordinates.empty());
  CHECK(pa.vector.zero());

  const auto [sk, sl] = fixture_pair("XSPLIT");
  const auto sa = analyze_disjoinability(sk, sl);
  CHECK(odd_cells(sa.parities) == std::set<TwoCell>{tc(2, 2)});
  CHECK(sa.vector.coordinates == std::vector<int>{1});
}

TEST_CASE("pair attribution and reordering invariance") {
  const char* names[] = {"PAIRX", "PAIRPAR", "XSPLIT"};
  std::mt19937 rng(553);
  for (const char* name : names) {
    CAPTURE(name);
    const auto [rk, rl] = fixture_pair(name);
    const auto [k, l] = overlay_pair(rk, rl);
    const auto canonical = build_strips_pair(k, l).corridors;
    const auto baseline = pair_sums_under(k, l, pair_crossing_parities(k, l));
    CHECK(pair_sums_under(k, l, pair_crossing_parities_with(k, l, canonical, true)) ==
          baseline);
    for (int trial = 0; trial < 10; ++trial) {
      const auto order = shuffled(canonical, rng);
      CHECK(pair_sums_under(k, l, pair_crossing_parities_with(k, l, order, false)) ==
            baseline);
    }
  }
}

TEST_CASE("open walks: obstruction agrees with the derivative") {
  for (const PlaneGraph& g :
       {fixture_instance("XWALK").graph, fixture_instance("THETA").graph,
        testkit::triangle_graph()}) {
    for (const auto& verts : testkit::enumerate_open_walks(g, 5, 2)) {
      const Instance inst{g, normalize_walk(verts, false, g)};
      const auto by_derivative = decide_approximable(inst).approximable;
      const auto by_vector = decide_by_obstruction(inst).approximable;
      CAPTURE(verts.size());
      CHECK(by_derivative == by_vector);
      // In particular a level-0 transversal forces a nonzero vector.
      if (detect_transversal(inst)) CHECK(!van_kampen(inst).zero());
    }
  }
}

TEST_CASE("closed walks: nonzero vector implies a derivative no") {
  const auto g = fixture_instance("THETA").graph;
  for (const auto& verts : testkit::enumerate_closed_walks(g, 6, 2)) {
    const Instance inst{g, normalize_walk(verts, true, g)};
    if (van_kampen(inst).zero()) continue;
    CHECK(decide_approximable(inst).approximable == Verdict::No);
  }
}
