#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "planewalk/derivative.h"
#include "planewalk/errors.h"
#include "planewalk/fixtures.h"
#include "planewalk/plane_iso.h"

#include "testkit.h"

using namespace planewalk;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected an Error");
}

using V = std::vector<std::string>;

Instance closed_on(const char* name, const V& verts) {
  const PlaneGraph g = lookup_fixture(name)->graph;
  return {g, normalize_walk(verts, true, g)};
}

}  // namespace

TEST_CASE("interior passes and bounces") {
  const Instance bf = fixture_instance("BACKFORTH");
  const auto passes = interior_passes(bf);
  REQUIRE(passes.size() == 3);
  CHECK(passes[0].position == 1);
  CHECK(passes[0].vertex == "u1");
  CHECK_FALSE(passes[0].bounce());
  CHECK(passes[1].vertex == "u2");
  CHECK(passes[1].bounce());
  CHECK(passes[2].vertex == "u1");

  const Instance fold = fixture_instance("FOLDCYCLE");
  const auto fp = interior_passes(fold);
  REQUIRE(fp.size() == 4);  // closed: every position is interior
  CHECK(fp[0].position == 0);
  CHECK(fp[0].bounce());  // enters and leaves c0 along the same edge
  CHECK(fp[2].bounce());  // turnaround at c2
  CHECK_FALSE(fp[1].bounce());

  CHECK(interior_passes(fixture_instance("C3WIND(0)")).empty());
}

TEST_CASE("transversal detection") {
  const auto w = detect_transversal(fixture_instance("XWALK"));
  REQUIRE(w.has_value());
  CHECK(w->p == 1);
  CHECK(w->q == 4);
  CHECK(w->vertex == "c");
  CHECK(w->p_in == Edge("c", "w"));
  CHECK(w->p_out == Edge("c", "e"));
  CHECK(w->q_in == Edge("c", "n"));
  CHECK(w->q_out == Edge("c", "s"));

  // shared edge between the passes: no witness
  CHECK_FALSE(detect_transversal(fixture_instance("STARPASS")).has_value());
  // winding revisits reuse both edges
  CHECK_FALSE(detect_transversal(fixture_instance("C3WIND(2)")).has_value());
  // nested loops at the shared vertex do not interleave
  CHECK_FALSE(detect_transversal(fixture_instance("NESTEDEIGHT")).has_value());
  CHECK_FALSE(detect_transversal(fixture_instance("BACKFORTH")).has_value());

  // closed walk crossing itself at the center of the cross
  const auto cw = detect_transversal(closed_on("XWALK", {"w", "c", "e", "n", "c", "s", "c"}));
  REQUIRE(cw.has_value());
  CHECK(cw->p == 1);
  CHECK(cw->q == 4);
}

TEST_CASE("derivative of simple folds") {
  const Instance d1 = derive(fixture_instance("BACKFORTH"));
  CHECK(d1.walk.verts == V{"(u0 u1)", "(u1 u2)", "(u0 u1)"});
  CHECK_FALSE(d1.walk.closed);
  CHECK(d1.graph.edges.size() == 1);
  CHECK(d1.graph.coords_kind == CoordsKind::Layout);

  const Instance d2 = derive(d1);
  CHECK(d2.walk.constant());
  const Instance d3 = derive(d2);
  CHECK(d3.walk.empty());
  CHECK(d3.graph.vertices.empty());

  const Instance sp = derive(fixture_instance("STARPASS"));
  CHECK(sp.walk.verts == V{"(c w)", "(c e)", "(c s)"});
  CHECK(sp.walk.injective());
  CHECK(sp.graph.vertices.size() == 3);
  CHECK(sp.graph.edges.size() == 2);

  CHECK(code_of([] { derive(fixture_instance("XWALK")); }) == Errc::TransversalPresent);
}

TEST_CASE("windings are derivative fixed points") {
  for (const char* name : {"C3WIND(1)", "C3WIND(2)", "C3WIND(3)", "C3WIND(-2)"}) {
    CAPTURE(name);
    const Instance in = fixture_instance(name);
    CHECK(plane_isomorphic(derive(in), in));
  }
}

TEST_CASE("derivative of the nested figure-eight is an injective hexagon") {
  const Instance in = fixture_instance("NESTEDEIGHT");
  const Instance d = derive(in);
  CHECK(d.walk.closed);
  CHECK(d.walk.verts.size() == 6);
  CHECK(d.walk.injective());
  CHECK(d.graph.edges.size() == 6);
  const auto wi = detect_winding(d);
  REQUIRE(wi.has_value());
  CHECK(wi->degree == -1);
  CHECK(wi->cycle_length == 6);
}

TEST_CASE("winding detection") {
  const auto w3 = detect_winding(fixture_instance("C3WIND(3)"));
  REQUIRE(w3.has_value());
  CHECK(w3->degree == 3);
  CHECK(w3->cycle_length == 3);

  const auto wm2 = detect_winding(fixture_instance("C3WIND(-2)"));
  REQUIRE(wm2.has_value());
  CHECK(wm2->degree == -2);

  const auto w1 = detect_winding(fixture_instance("C3WIND(1)"));
  REQUIRE(w1.has_value());
  CHECK(w1->degree == 1);

  // theta cycle: single counterclockwise test via exact shoelace (negative)
  const auto th = detect_winding(fixture_instance("THETA"));
  REQUIRE(th.has_value());
  CHECK(th->degree == -1);
  CHECK(th->cycle_length == 4);

  CHECK_FALSE(detect_winding(fixture_instance("FOLDCYCLE")).has_value());  // bounces
  CHECK_FALSE(detect_winding(fixture_instance("BACKFORTH")).has_value());  // open
  CHECK_FALSE(detect_winding(fixture_instance("C3WIND(0)")).has_value());  // constant
  CHECK_FALSE(detect_winding(fixture_instance("NESTEDEIGHT")).has_value());
}

TEST_CASE("decision procedure on the fixture suite") {
  const Decision x = decide_approximable(fixture_instance("XWALK"));
  CHECK(x.approximable == Verdict::No);
  CHECK(x.reason == DecisionReason::TransversalFound);
  CHECK(x.level == 0);
  REQUIRE(x.witness.has_value());
  CHECK(x.witness->p == 1);
  CHECK(x.witness->q == 4);

  for (int d = -3; d <= 3; ++d) {
    CAPTURE(d);
    const Decision c = decide_approximable(fixture_instance("C3WIND(" + std::to_string(d) + ")"));
    CHECK((c.approximable == Verdict::Yes) == (std::abs(d) <= 1));
    if (std::abs(d) >= 2) {
      CHECK(c.reason == DecisionReason::ForbiddenWinding);
      CHECK(c.level == 0);
      REQUIRE(c.winding.has_value());
      CHECK(c.winding->degree == d);
    }
  }

  const Decision bf = decide_approximable(fixture_instance("BACKFORTH"));
  CHECK(bf.approximable == Verdict::Yes);
  CHECK(bf.levels.size() == 3);  // [a,b,a] -> derived fold -> constant

  const Decision sp = decide_approximable(fixture_instance("STARPASS"));
  CHECK(sp.approximable == Verdict::Yes);
  CHECK(sp.reason == DecisionReason::Injective);
  CHECK(sp.level == 1);

  CHECK(decide_approximable(fixture_instance("THETA")).reason == DecisionReason::Injective);
  CHECK(decide_approximable(fixture_instance("FOLDCYCLE")).approximable == Verdict::Yes);
  CHECK(decide_approximable(fixture_instance("NESTEDEIGHT")).approximable == Verdict::Yes);
  CHECK(decide_approximable(fixture_instance("PATH3")).reason == DecisionReason::Injective);

  const Instance doubled = closed_on(
      "NESTEDEIGHT", {"v", "a1", "a2", "v", "b2", "b1", "v", "a1", "a2", "v", "b2", "b1"});
  const Decision dd = decide_approximable(doubled);
  CHECK(dd.approximable == Verdict::No);
  CHECK(dd.reason == DecisionReason::ForbiddenWinding);
  CHECK(dd.level == 1);
  REQUIRE(dd.winding.has_value());
  CHECK(dd.winding->degree == -2);
}

TEST_CASE("winding degree of towers") {
  CHECK(winding_degree(fixture_instance("C3WIND(2)")) == 2);
  CHECK(winding_degree(fixture_instance("C3WIND(-2)")) == -2);
  CHECK(winding_degree(fixture_instance("THETA")) == -1);
  CHECK(winding_degree(fixture_instance("FOLDCYCLE")) == 0);
  CHECK(winding_degree(fixture_instance("C3WIND(0)")) == 0);
  CHECK(winding_degree(fixture_instance("NESTEDEIGHT")) == -1);

  CHECK(code_of([] { winding_degree(fixture_instance("PATH3")); }) == Errc::SemanticError);
  const Instance crossing = closed_on("XWALK", {"w", "c", "e", "n", "c", "s", "c"});
  try {
    winding_degree(crossing);
    FAIL("expected TransversalPresent");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TransversalPresent);
    CHECK(e.detail() == 0);
  }
}

TEST_CASE("euler shortcut") {
  const auto p3 = check_euler_shortcut(fixture_instance("PATH3"));
  REQUIRE(p3.has_value());
  CHECK(p3->approximable == Verdict::Yes);

  const auto xw = check_euler_shortcut(fixture_instance("XWALK"));
  REQUIRE(xw.has_value());
  CHECK(xw->approximable == Verdict::No);
  CHECK(xw->witness.has_value());

  CHECK_FALSE(check_euler_shortcut(fixture_instance("STARPASS")).has_value());
  CHECK_FALSE(check_euler_shortcut(fixture_instance("FOLDCYCLE")).has_value());
  CHECK_FALSE(check_euler_shortcut(fixture_instance("THETA")).has_value());

  const auto c1 = check_euler_shortcut(fixture_instance("C3WIND(1)"));
  REQUIRE(c1.has_value());
  CHECK(c1->approximable == Verdict::Yes);
}

TEST_CASE("open derivatives strictly shrink and decisions terminate") {
  const PlaneGraph g = lookup_fixture("XGRAPH")->graph;
  int decided = 0;
  for (const auto& verts : testkit::enumerate_open_walks(g, 5)) {
    const Instance inst{g, normalize_walk(verts, false, g)};
    if (!detect_transversal(inst)) {
      const Instance d = derive(inst);
      CHECK(d.walk.steps() < inst.walk.steps());
    }
    const Decision dec = decide_approximable(inst);  // must not throw
    if (const auto eu = check_euler_shortcut(inst))
      CHECK(eu->approximable == dec.approximable);
    ++decided;
  }
  CHECK(decided > 100);
}
