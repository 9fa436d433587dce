#include "planewalk/ingest.h"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "planewalk/errors.h"
#include "planewalk/fixtures.h"

namespace planewalk {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::SemanticError, what); }

// nlohmann reports byte offsets; users think in line/column.
std::pair<long, long> line_column(const std::string& text, std::size_t byte) {
  long line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

BigInt big(const std::string& digits) {
  return BigInt(digits[0] == '+' ? digits.substr(1) : digits);  // cpp_int dislikes '+'
}

Rational rational_from_text(const std::string& s) {
  static const std::regex integer(R"(^[+-]?\d+$)");
  static const std::regex fraction(R"(^([+-]?\d+)/(\d+)$)");
  static const std::regex decimal(R"(^([+-]?)(\d+)\.(\d+)$)");
  std::smatch m;
  if (std::regex_match(s, m, integer)) return Rational(big(s));
  if (std::regex_match(s, m, fraction)) {
    const BigInt den(m[2].str());
    if (den == 0) fail("zero denominator in \"" + s + "\"");
    return Rational(big(m[1].str()), den);
  }
  if (std::regex_match(s, m, decimal)) {
    BigInt scale = 1;
    for (std::size_t k = 0; k < m[3].str().size(); ++k) scale *= 10;
    const Rational r = Rational(BigInt(m[2].str())) + Rational(BigInt(m[3].str()), scale);
    return m[1].str() == "-" ? -r : r;
  }
  fail("expected a rational (\"p/q\", integer, or decimal string), got \"" + s + "\"");
}

Rational parse_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(BigInt(v.get<long long>()));
  if (v.is_number_unsigned()) return Rational(BigInt(v.get<unsigned long long>()));
  if (v.is_number_float())
    fail(where + ": non-integer JSON numbers pass through binary floating point and lose "
                 "the written value; use a string like \"1/3\" or \"0.5\" instead");
  if (v.is_string()) return rational_from_text(v.get<std::string>());
  fail(where + ": expected a rational number");
}

const json& field(const json& doc, const char* key, const std::string& where) {
  const auto it = doc.find(key);
  if (it == doc.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

std::string id_of(const json& v, const std::string& where) {
  if (!v.is_string() || v.get<std::string>().empty()) fail(where + ": expected a vertex id");
  return v.get<std::string>();
}

RawPolyline parse_polyline(const json& doc) {
  RawPolyline raw;
  const json& closed = field(doc, "closed", "polyline");
  if (!closed.is_boolean()) fail("polyline.closed: expected a boolean");
  raw.closed = closed.get<bool>();
  const json& points = field(doc, "points", "polyline");
  if (!points.is_array()) fail("polyline.points: expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string where = "polyline.points[" + std::to_string(i) + "]";
    const json& p = points[i];
    if (!p.is_array() || p.size() != 2) fail(where + ": expected [x, y]");
    raw.points.push_back({parse_rational(p[0], where), parse_rational(p[1], where)});
  }
  return raw;
}

Edge parse_edge_ref(const json& v, const std::vector<Edge>& edges, const std::string& vertex,
                    const std::string& where) {
  if (v.is_number_integer()) {
    const long k = v.get<long>();
    if (k < 0 || k >= static_cast<long>(edges.size()))
      fail(where + ": edge index " + std::to_string(k) + " out of range");
    return edges[static_cast<std::size_t>(k)];
  }
  if (v.is_string()) return Edge(vertex, v.get<std::string>());  // neighbor id
  if (v.is_array() && v.size() == 2)
    return Edge(id_of(v[0], where), id_of(v[1], where));
  fail(where + ": expected an edge index, a neighbor id, or an id pair");
}

Instance parse_graph_walk(const json& doc) {
  const json& graph = field(doc, "graph", "document");
  const json& jverts = field(graph, "vertices", "graph");
  if (!jverts.is_array() || jverts.empty()) fail("graph.vertices: expected a nonempty array");

  std::vector<std::string> vertices;
  std::map<std::string, Point> coords;
  for (std::size_t i = 0; i < jverts.size(); ++i) {
    const std::string where = "graph.vertices[" + std::to_string(i) + "]";
    const json& v = jverts[i];
    if (!v.is_object()) fail(where + ": expected an object");
    const std::string id = id_of(field(v, "id", where), where);
    if (coords.count(id) || std::count(vertices.begin(), vertices.end(), id))
      fail(where + ": duplicate vertex id \"" + id + "\"");
    vertices.push_back(id);
    const bool has_x = v.contains("x"), has_y = v.contains("y");
    if (has_x != has_y) fail(where + ": give both coordinates or neither");
    if (has_x) coords[id] = {parse_rational(v["x"], where), parse_rational(v["y"], where)};
  }
  if (!coords.empty() && coords.size() != vertices.size())
    fail("graph.vertices: coordinates must be given for all vertices or none");

  const json& jedges = field(graph, "edges", "graph");
  if (!jedges.is_array()) fail("graph.edges: expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    const json& e = jedges[i];
    if (!e.is_array() || e.size() != 2) fail(where + ": expected [\"id\",\"id\"]");
    const std::string a = id_of(e[0], where), b = id_of(e[1], where);
    if (a == b) fail(where + ": loop edge at \"" + a + "\"");
    for (const std::string& id : {a, b})
      if (!std::count(vertices.begin(), vertices.end(), id))
        fail(where + ": unknown vertex id \"" + id + "\"");
    const Edge edge(a, b);
    if (std::count(edges.begin(), edges.end(), edge)) fail(where + ": duplicate edge");
    edges.push_back(edge);
  }

  std::map<std::string, std::vector<Edge>> rotation;
  if (coords.empty()) {
    const json& jrot = field(graph, "rotations", "graph (required without coordinates)");
    if (!jrot.is_object()) fail("graph.rotations: expected an object keyed by vertex id");
    for (const auto& [id, list] : jrot.items()) {
      const std::string where = "graph.rotations[\"" + id + "\"]";
      if (!std::count(vertices.begin(), vertices.end(), id))
        fail(where + ": unknown vertex id");
      if (!list.is_array()) fail(where + ": expected an array");
      for (const json& ref : list) rotation[id].push_back(parse_edge_ref(ref, edges, id, where));
    }
  } else if (graph.contains("rotations")) {
    fail("graph.rotations: remove it or the coordinates; the rotation is derived from the "
         "drawing when coordinates are present");
  }

  PlaneGraph g = build_plane_graph(vertices, coords, edges, rotation);
  if (g.coords_kind == CoordsKind::Exact) assert_disjoint_drawing(g);

  const json& jwalk = field(doc, "walk", "document");
  const json& closed = field(jwalk, "closed", "walk");
  if (!closed.is_boolean()) fail("walk.closed: expected a boolean");
  const json& wverts = field(jwalk, "vertices", "walk");
  if (!wverts.is_array()) fail("walk.vertices: expected an array");
  std::vector<std::string> seq;
  for (std::size_t i = 0; i < wverts.size(); ++i) {
    const std::string id = id_of(wverts[i], "walk.vertices[" + std::to_string(i) + "]");
    if (!g.has_vertex(id))
      fail("walk.vertices[" + std::to_string(i) + "]: unknown vertex id \"" + id + "\"");
    seq.push_back(id);
  }
  return Instance{g, normalize_walk(seq, closed.get<bool>(), g)};
}

ParsedInput from_fixture(const std::string& name) {
  const auto f = lookup_fixture(name);
  if (!f) fail("unknown fixture \"" + name + "\"");
  ParsedInput in;
  in.label = name;
  if (f->pair)
    in.pair = f->pair;
  else if (f->walk)
    in.instance = Instance{f->graph, *f->walk};
  else
    fail("fixture \"" + name + "\" has no walk; it is a bare graph");
  return in;
}

ParsedInput parse_value(const json& doc) {
  if (!doc.is_object()) fail("document: expected a JSON object");
  ParsedInput in;
  if (doc.contains("fixture")) {
    return from_fixture(id_of(doc["fixture"], "fixture"));
  } else if (doc.contains("K") || doc.contains("L")) {
    const ParsedInput k = parse_value(field(doc, "K", "pair document"));
    const ParsedInput l = parse_value(field(doc, "L", "pair document"));
    if (!k.instance || !l.instance) fail("pair document: K and L must be instance documents");
    in.pair = std::make_pair(*k.instance, *l.instance);
  } else if (doc.contains("polyline")) {
    ArrangementResult r = arrange_polyline(parse_polyline(doc["polyline"]));
    in.instance = std::move(r.instance);
    in.provenance = std::move(r.provenance);
  } else if (doc.contains("graph")) {
    in.instance = parse_graph_walk(doc);
  } else {
    fail("document: expected one of \"fixture\", \"polyline\", \"graph\"+\"walk\", "
         "or \"K\"/\"L\"");
  }
  return in;
}

}  // namespace

ParsedInput parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(Errc::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                    e.what(),
                line);
  }
  return parse_value(doc);
}

Instance parse_instance(const std::string& text) {
  ParsedInput in = parse_document(text);
  if (!in.instance) fail("expected an instance document, got a pair");
  return *std::move(in.instance);
}

std::pair<Instance, Instance> parse_pair(const std::string& text) {
  ParsedInput in = parse_document(text);
  if (!in.pair) fail("expected a pair document (\"K\"/\"L\" or a pair fixture)");
  return *std::move(in.pair);
}

ParsedInput load_input(const std::string& path_or_fixture) {
  static const std::string prefix = "fixture:";
  if (path_or_fixture.rfind(prefix, 0) == 0)
    return parse_document("{\"fixture\": \"" + path_or_fixture.substr(prefix.size()) + "\"}");
  std::ifstream f(path_or_fixture, std::ios::binary);
  if (!f) fail("cannot open input file \"" + path_or_fixture + "\"");
  std::ostringstream buf;
  buf << f.rdbuf();
  ParsedInput in = parse_document(buf.str());
  if (in.label == "input") in.label = path_or_fixture;
  return in;
}

}  // namespace planewalk
