#include "planewalk/fixtures.h"

#include "planewalk/errors.h"

#include <regex>

namespace planewalk {

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

PlaneGraph path_graph(const std::vector<std::pair<std::string, Point>>& pts) {
  std::vector<std::string> verts;
  std::map<std::string, Point> coords;
  std::vector<Edge> edges;
  for (const auto& [id, p] : pts) {
    verts.push_back(id);
    coords[id] = p;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    edges.emplace_back(pts[i].first, pts[i + 1].first);
  return build_plane_graph(verts, coords, edges);
}

PlaneGraph star4() {
  std::map<std::string, Point> coords = {
      {"c", pt(0, 0)}, {"e", pt(2, 0)}, {"n", pt(0, 2)}, {"w", pt(-2, 0)}, {"s", pt(0, -2)}};
  std::vector<Edge> edges = {Edge("c", "e"), Edge("c", "n"), Edge("c", "w"), Edge("c", "s")};
  return build_plane_graph({"c", "e", "n", "w", "s"}, coords, edges);
}

PlaneGraph starpass_graph() {
  std::map<std::string, Point> coords = {
      {"c", pt(0, 0)}, {"e", pt(2, 0)}, {"w", pt(-2, 0)}, {"s", pt(0, -2)}};
  std::vector<Edge> edges = {Edge("c", "e"), Edge("c", "w"), Edge("c", "s")};
  return build_plane_graph({"c", "e", "w", "s"}, coords, edges);
}

PlaneGraph xgraph() {
  std::map<std::string, Point> coords = {
      {"c", pt(0, 0)}, {"e", pt(2, 0)}, {"n", pt(0, 2)}, {"w", pt(-2, 0)}, {"s", pt(0, -2)}};
  std::vector<Edge> edges = {Edge("c", "e"), Edge("c", "n"), Edge("c", "w"), Edge("c", "s"),
                             Edge("e", "n")};
  return build_plane_graph({"c", "e", "n", "w", "s"}, coords, edges);
}

PlaneGraph triangle() {
  std::map<std::string, Point> coords = {{"c0", pt(0, 0)}, {"c1", pt(4, 0)}, {"c2", pt(2, 3)}};
  std::vector<Edge> edges = {Edge("c0", "c1"), Edge("c1", "c2"), Edge("c0", "c2")};
  return build_plane_graph({"c0", "c1", "c2"}, coords, edges);
}

PlaneGraph theta() {
  std::map<std::string, Point> coords = {{"a", pt(-2, 0)}, {"b", pt(2, 0)}, {"t", pt(0, 2)},
                                         {"m", pt(0, 0)},  {"u", pt(0, -2)}};
  std::vector<Edge> edges = {Edge("a", "t"), Edge("t", "b"), Edge("a", "m"),
                             Edge("m", "b"), Edge("a", "u"), Edge("u", "b")};
  return build_plane_graph({"a", "b", "t", "m", "u"}, coords, edges);
}

PlaneGraph nested_eight_graph() {
  // two triangles sharing v; the b-triangle sits inside the angular sector of
  // the a-triangle at v, so the rotation at v is (va1, vb1, vb2, va2)
  std::map<std::string, Point> coords = {{"v", pt(0, 0)},  {"a1", pt(4, 0)}, {"a2", pt(0, 4)},
                                         {"b1", pt(2, 1)}, {"b2", pt(1, 2)}};
  std::vector<Edge> edges = {Edge("v", "a1"), Edge("a1", "a2"), Edge("v", "a2"),
                             Edge("v", "b1"), Edge("b1", "b2"), Edge("v", "b2")};
  return build_plane_graph({"v", "a1", "a2", "b1", "b2"}, coords, edges);
}

Walk make_walk(const PlaneGraph& g, const std::vector<std::string>& verts, bool closed) {
  return normalize_walk(verts, closed, g);
}

Instance segment_instance(Point a, Point b) {
  // single drawn segment, walk of one step; ids in coordinate order
  std::string ia = "p0", ib = "p1";
  if (b < a) std::swap(a, b);
  std::map<std::string, Point> coords = {{ia, a}, {ib, b}};
  PlaneGraph g = build_plane_graph({ia, ib}, coords, {Edge(ia, ib)});
  return Instance{g, make_walk(g, {ia, ib}, false)};
}

std::optional<long> parse_c3wind(const std::string& name) {
  static const std::regex re(R"(^C3WIND\((-?\d+)\)$)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) return std::nullopt;
  return std::stol(m[1].str());
}

}  // namespace

std::optional<Fixture> lookup_fixture(const std::string& name) {
  Fixture f;
  f.name = name;

  if (auto d = parse_c3wind(name)) {
    if (*d > 1000 || *d < -1000)
      throw Error(Errc::SemanticError, "C3WIND degree out of range");
    f.graph = triangle();
    f.summary = "triangle traversed " + std::to_string(*d) + " times";
    std::vector<std::string> seq;
    if (*d == 0) {
      seq = {"c0"};
    } else if (*d > 0) {
      for (long k = 0; k < *d; ++k) { seq.push_back("c0"); seq.push_back("c1"); seq.push_back("c2"); }
    } else {
      for (long k = 0; k < -*d; ++k) { seq.push_back("c0"); seq.push_back("c2"); seq.push_back("c1"); }
    }
    f.walk = make_walk(f.graph, seq, true);
    return f;
  }

  if (name == "PATH3") {
    f.graph = path_graph({{"u0", pt(0, 0)}, {"u1", pt(1, 0)}, {"u2", pt(2, 0)}, {"u3", pt(3, 0)}});
    f.walk = make_walk(f.graph, {"u0", "u1", "u2", "u3"}, false);
    f.summary = "injective open walk along a 3-edge path";
    return f;
  }
  if (name == "BACKFORTH") {
    f.graph = path_graph({{"u0", pt(0, 0)}, {"u1", pt(1, 0)}, {"u2", pt(2, 0)}});
    f.walk = make_walk(f.graph, {"u0", "u1", "u2", "u1", "u0"}, false);
    f.summary = "open walk out and back along a 2-edge path";
    return f;
  }
  if (name == "STAR4") {
    f.graph = star4();
    f.summary = "degree-4 star, no walk";
    return f;
  }
  if (name == "STARPASS") {
    f.graph = starpass_graph();
    f.walk = make_walk(f.graph, {"w", "c", "e", "c", "s"}, false);
    f.summary = "two passes through the star center sharing an edge";
    return f;
  }
  if (name == "XGRAPH") {
    f.graph = xgraph();
    f.summary = "star plus chord e-n, no walk";
    return f;
  }
  if (name == "XWALK") {
    f.graph = xgraph();
    f.walk = make_walk(f.graph, {"w", "c", "e", "n", "c", "s"}, false);
    f.summary = "transversal crossing at the star center";
    return f;
  }
  if (name == "THETA") {
    f.graph = theta();
    f.walk = make_walk(f.graph, {"a", "t", "b", "m"}, true);
    f.summary = "theta graph with an injective 4-cycle walk";
    return f;
  }
  if (name == "NESTEDEIGHT") {
    f.graph = nested_eight_graph();
    f.walk = make_walk(f.graph, {"v", "a1", "a2", "v", "b2", "b1"}, true);
    f.summary = "figure eight with nested loops";
    return f;
  }
  if (name == "FOLDCYCLE") {
    f.graph = triangle();
    f.walk = make_walk(f.graph, {"c0", "c1", "c2", "c1"}, true);
    f.summary = "closed walk folding back over an edge; generalized degree 0";
    return f;
  }
  if (name == "PAIRX") {
    f.pair = std::make_pair(segment_instance(pt(-1, 0), pt(1, 0)),
                            segment_instance(pt(0, -1), pt(0, 1)));
    f.summary = "two crossing segments";
    return f;
  }
  if (name == "PAIRPAR") {
    f.pair = std::make_pair(segment_instance(pt(0, 0), pt(1, 0)),
                            segment_instance(pt(0, 0), pt(1, 0)));
    f.summary = "two copies of the same segment";
    return f;
  }
  if (name == "XSPLIT") {
    PlaneGraph g = xgraph();
    Instance k{g, make_walk(g, {"w", "c", "e"}, false)};
    Instance l{g, make_walk(g, {"n", "c", "s"}, false)};
    f.pair = std::make_pair(k, l);
    f.summary = "the two strands of XWALK as separate instances";
    return f;
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> fixture_directory() {
  std::vector<std::string> names = {"PATH3",    "BACKFORTH", "STAR4",       "STARPASS",
                                    "XGRAPH",   "XWALK",     "C3WIND(d)",   "THETA",
                                    "NESTEDEIGHT", "FOLDCYCLE", "PAIRX",    "PAIRPAR",
                                    "XSPLIT"};
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& n : names) {
    if (n == "C3WIND(d)") {
      out.emplace_back(n, "triangle traversed d times (d integer, negative = reversed)");
      continue;
    }
    out.emplace_back(n, lookup_fixture(n)->summary);
  }
  return out;
}

Instance fixture_instance(const std::string& name) {
  auto f = lookup_fixture(name);
  if (!f) throw Error(Errc::SemanticError, "unknown fixture '" + name + "'");
  if (f->pair) throw Error(Errc::SemanticError, "fixture '" + name + "' is a pair");
  if (!f->walk) throw Error(Errc::SemanticError, "fixture '" + name + "' has no walk");
  return Instance{f->graph, *f->walk};
}

std::pair<Instance, Instance> fixture_pair(const std::string& name) {
  auto f = lookup_fixture(name);
  if (!f) throw Error(Errc::SemanticError, "unknown fixture '" + name + "'");
  if (!f->pair) throw Error(Errc::SemanticError, "fixture '" + name + "' is not a pair");
  return *f->pair;
}

}  // namespace planewalk
