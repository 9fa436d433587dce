#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <vector>

#include "planewalk/fixtures.h"
#include "planewalk/obstruction.h"
#include "planewalk/pushoff.h"
#include "testkit.h"

using namespace planewalk;

namespace {

std::vector<int> contributing_sums(const Instance& inst, const CellParities& parities) {
  const auto painted = paint_black(deleted_product(inst.walk), inst);
  std::vector<int> out;
  for (const Component& c : components(painted, parities))
    if (c.contributes) out.push_back(c.parity);
  return out;
}

std::set<TwoCell> odd_cells(const CellParities& p) {
  std::set<TwoCell> out;
  for (const auto& [c, parity] : p)
    if (parity) out.insert(c);
  return out;
}

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("jitter bound quarters the smallest gap") {
  CHECK(safe_jitter_bound(fixture_instance("XWALK")) == Rational(1, 4));
  CHECK(safe_jitter_bound(fixture_instance("C3WIND(1)")) == Rational(3, 4));
  CHECK(safe_jitter_bound(fixture_instance("BACKFORTH")) == Rational(1, 4));
  CHECK(safe_jitter_bound(fixture_instance("THETA")) == Rational(1, 4));

  PlaneGraph g = build_plane_graph({"a", "b"}, {{"a", pt(0, 0)}, {"b", pt(3, 0)}},
                                   {{"a", "b"}});
  const Instance single{g, normalize_walk({"a", "b"}, false, g)};
  CHECK(safe_jitter_bound(single) == Rational(3, 4));
}

TEST_CASE("direction table stays in general position") {
  const auto dirs = jitter_directions(10);
  const std::vector<Point> expect = {pt(1, 0),   pt(0, 1),  pt(-1, 0), pt(0, -1),
                                     pt(1, 1),   pt(-1, -1), pt(-2, 5), pt(-5, 2),
                                     pt(2, -5),  pt(5, -2)};
  REQUIRE(dirs.size() == 10);
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(dirs[i] == expect[i]);

  // No three entries collinear: this is what lets amplitude halving escape
  // every near-degenerate configuration (see jitter_directions).
  const auto many = jitter_directions(20);
  for (std::size_t i = 0; i < many.size(); ++i)
    for (std::size_t j = i + 1; j < many.size(); ++j)
      for (std::size_t k = j + 1; k < many.size(); ++k)
        CHECK(orient(many[i], many[j], many[k]) != 0);
}

TEST_CASE("crossing walk measured geometrically") {
  const auto inst = fixture_instance("XWALK");
  const auto a = analyze_geometric(inst);
  CHECK(a.bound == Rational(1, 4));
  CHECK(a.seed == 2);
  CHECK(a.curve.amplitude == Rational(1, 16));
  CHECK(a.curve.points.front() == Point{Rational(-31, 16), Rational(0)});
  CHECK(check_genericity(a.curve));
  CHECK(odd_cells(a.parities) == std::set<TwoCell>{TwoCell{2, 5}});
}

TEST_CASE("genericity rejects overlaps and endpoint touches") {
  JitteredCurve overlap;
  overlap.points = {pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 2)};
  CHECK(!check_genericity(overlap));

  JitteredCurve touch;
  touch.points = {pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 0)};
  CHECK(!check_genericity(touch));

  JitteredCurve zero;
  zero.points = {pt(0, 0), pt(0, 0), pt(1, 0)};
  CHECK(!check_genericity(zero));

  JitteredCurve crossing;
  crossing.points = {pt(0, 0), pt(4, 0), pt(4, 2), pt(2, -1)};
  CHECK(check_genericity(crossing));
}

TEST_CASE("black cells never pick up geometric crossings") {
  for (const char* name : {"XWALK", "PATH3", "THETA", "NESTEDEIGHT"}) {
    CAPTURE(name);
    const auto inst = fixture_instance(name);
    const auto painted = paint_black(deleted_product(inst.walk), inst);
    const auto parities = geometric_parities(inst);
    for (const TwoCell& c : painted.black_cells) CHECK(parities.at(c) == 0);
  }
}

TEST_CASE("geometric and combinatorial backends agree on contributing sums") {
  const char* names[] = {"XWALK",     "STARPASS",  "BACKFORTH",   "PATH3",
                         "THETA",     "C3WIND(1)", "C3WIND(2)",   "C3WIND(3)",
                         "FOLDCYCLE", "C3WIND(-2)", "NESTEDEIGHT"};
  for (const char* name : names) {
    CAPTURE(name);
    const auto inst = fixture_instance(name);
    CHECK(contributing_sums(inst, geometric_parities(inst)) ==
          contributing_sums(inst, crossing_parities(inst)));
  }
}

TEST_CASE("halving the amplitude changes nothing") {
  for (const char* name : {"XWALK", "STARPASS", "BACKFORTH", "C3WIND(2)", "THETA"}) {
    CAPTURE(name);
    const auto inst = fixture_instance(name);
    const auto a = analyze_geometric(inst);
    const auto dp = deleted_product(inst.walk);
    JitteredCurve finer = build_jittered_curve(inst, a.seed + 1);
    REQUIRE(check_genericity(finer));
    CellParities again;
    for (const TwoCell& c : dp.cells)
      again[c] = proper_crossing(finer.segment(c.i), finer.segment(c.j)) ? 1 : 0;
    CHECK(again == a.parities);
  }
}

TEST_CASE("backend agreement across enumerated open walks") {
  const auto g = fixture_instance("XWALK").graph;
  int checked = 0;
  for (const auto& verts : testkit::enumerate_open_walks(g, 5, 2)) {
    const Instance inst{g, normalize_walk(verts, false, g)};
    CHECK(contributing_sums(inst, geometric_parities(inst)) ==
          contributing_sums(inst, crossing_parities(inst)));
    ++checked;
  }
  CHECK(checked > 100);
}
