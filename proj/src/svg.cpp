#include "planewalk/svg.h"

#include "planewalk/arrangement.h"
#include "planewalk/derivative.h"
#include "planewalk/obstruction.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace planewalk {
namespace {

using Pos = std::array<double, 2>;
using PosMap = std::map<std::string, Pos>;

// Single formatter for every float in the output; %.6g keeps the bytes stable
// and short.  Negative zero is flushed so -0 never leaks into a document.
std::string fmt(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  return out;
}

struct BBox {
  double minx = 0, miny = 0, maxx = 0, maxy = 0;
  bool any = false;

  void add(const Pos& p) {
    if (!any) {
      minx = maxx = p[0];
      miny = maxy = p[1];
      any = true;
    } else {
      minx = std::min(minx, p[0]);
      maxx = std::max(maxx, p[0]);
      miny = std::min(miny, p[1]);
      maxy = std::max(maxy, p[1]);
    }
  }
};

// Model-to-pixel frame.  Model y grows upward, SVG y downward, so the frame
// flips it: px = ox + s*x, py = oy - s*y.
struct Frame {
  double s = 1, ox = 0, oy = 0;

  Pos map(const Pos& p) const { return {ox + s * p[0], oy - s * p[1]}; }
};

Frame fit_frame(const BBox& bb, double x0, double y0, double w, double h, double margin) {
  const double bw = bb.any ? bb.maxx - bb.minx : 0;
  const double bh = bb.any ? bb.maxy - bb.miny : 0;
  double s = 1;
  if (bw > 1e-12 || bh > 1e-12) {
    s = std::min(bw > 1e-12 ? (w - 2 * margin) / bw : 1e18,
                 bh > 1e-12 ? (h - 2 * margin) / bh : 1e18);
  }
  Frame f;
  f.s = s;
  f.ox = x0 + w / 2 - s * (bb.minx + bb.maxx) / 2;
  f.oy = y0 + h / 2 + s * (bb.miny + bb.maxy) / 2;
  return f;
}

PosMap graph_positions(const PlaneGraph& g) {
  if (g.coords_kind == CoordsKind::None) return layout_from_rotation(g);
  PosMap out;
  for (const auto& [id, p] : g.coords)
    out[id] = {p.x.convert_to<double>(), p.y.convert_to<double>()};
  return out;
}

const char* kStyle = R"( <style>
  .edge { stroke:#9a938a; stroke-width:1.5; }
  .walk-step { stroke:#1c6fd1; stroke-width:3; stroke-linecap:round; opacity:0.72; }
  .walk-L { stroke:#d13b3b; }
  .vertex { fill:#20211f; }
  text { font-family:"DejaVu Sans Mono",monospace; font-size:13px; fill:#20211f; }
  .step-label { font-size:11px; fill:#1c6fd1; }
  .step-label.label-L { fill:#d13b3b; }
  .caption { font-size:13px; fill:#555047; }
  .axis { font-size:11px; fill:#555047; }
  .cell { fill:#efece5; stroke:#6e685f; stroke-width:1; }
  .parity { font-size:15px; text-anchor:middle; }
  .parity.on-black { fill:#ffffff; }
 </style>
)";

const char* kArrowDef =
    " <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\""
    " markerWidth=\"5\" markerHeight=\"5\" orient=\"auto-start-reverse\">"
    "<path d=\"M 0 1 L 9 5 L 0 9 z\" fill=\"#6b655c\"/></marker></defs>\n";

void open_svg(std::ostringstream& out, double w, double h) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h)
      << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\">\n"
      << kStyle;
}

void line(std::ostringstream& out, const std::string& cls, const Pos& a, const Pos& b,
          const std::string& extra = "") {
  out << " <line class=\"" << cls << "\" x1=\"" << fmt(a[0]) << "\" y1=\"" << fmt(a[1])
      << "\" x2=\"" << fmt(b[0]) << "\" y2=\"" << fmt(b[1]) << "\"" << extra << "/>\n";
}

void text_at(std::ostringstream& out, const std::string& cls, const Pos& p,
             const std::string& body) {
  out << " <text class=\"" << cls << "\" x=\"" << fmt(p[0]) << "\" y=\"" << fmt(p[1]) << "\">"
      << escape_xml(body) << "</text>\n";
}

// Graph edges, the walk on top with per-step labels, then vertices.  Repeat
// traversals of one edge get labels pushed further out along the normal so
// they stack instead of overprinting.
void draw_instance(std::ostringstream& out, const Instance& inst, const PosMap& pos,
                   const Frame& f, const std::string& walk_class,
                   const std::string& label_prefix) {
  const PlaneGraph& g = inst.graph;
  for (const Edge& e : g.edges) line(out, "edge", f.map(pos.at(e.a)), f.map(pos.at(e.b)));

  const Walk& w = inst.walk;
  const int m = w.steps();
  std::map<Edge, int> seen;
  for (int i = 1; i <= m; ++i) {
    const std::string& from = w.verts[static_cast<std::size_t>(i - 1)];
    const std::string& to =
        (w.closed && i == m) ? w.verts.front() : w.verts[static_cast<std::size_t>(i)];
    const Pos a = f.map(pos.at(from)), b = f.map(pos.at(to));
    std::string cls = "walk-step";
    if (!walk_class.empty()) cls += " " + walk_class;
    line(out, cls, a, b, " marker-end=\"url(#arrow)\"");

    const int k = seen[w.step_edge(i)]++;
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len = std::max(std::hypot(dx, dy), 1e-9);
    const double off = 9.0 + 11.0 * k;
    const Pos mid = {(a[0] + b[0]) / 2 - dy / len * off, (a[1] + b[1]) / 2 + dx / len * off};
    std::string lcls = "step-label";
    if (!walk_class.empty()) lcls += " label-" + label_prefix;
    text_at(out, lcls, mid, label_prefix + std::to_string(i));
  }

  for (const std::string& v : g.vertices) {
    const Pos p = f.map(pos.at(v));
    out << " <circle class=\"vertex\" cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1])
        << "\" r=\"3.5\"/>\n";
    text_at(out, "vertex-label", {p[0] + 5, p[1] - 5}, v);
  }
}

std::string walk_caption(const Walk& w) {
  if (w.empty()) return "empty walk";
  if (w.constant()) return "constant walk at " + w.verts.front();
  std::ostringstream c;
  c << (w.closed ? "closed" : "open") << " walk, " << w.steps() << " step"
    << (w.steps() == 1 ? "" : "s");
  return c.str();
}

// ---- coordinate-free layout ----

struct ComponentLayout {
  std::vector<std::string> verts;
  PosMap pos;
};

std::vector<std::vector<std::string>> vertex_components(const PlaneGraph& g) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const Edge& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::set<std::string> left(g.vertices.begin(), g.vertices.end());
  std::vector<std::vector<std::string>> comps;
  while (!left.empty()) {
    std::vector<std::string> queue = {*left.begin()}, comp;
    left.erase(left.begin());
    while (!queue.empty()) {
      std::string v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (const std::string& u : adj[v])
        if (left.erase(u)) queue.push_back(u);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<Dart> canonical_face(std::vector<Dart> f) {
  auto least = std::min_element(f.begin(), f.end());
  std::rotate(f.begin(), least, f.end());
  return f;
}

}  // namespace

std::map<std::string, std::array<double, 2>> layout_from_rotation(const PlaneGraph& g) {
  const FaceTrace traced = trace_faces(g);
  PosMap out;
  double shift = 0;

  for (const auto& comp : vertex_components(g)) {
    const std::set<std::string> in_comp(comp.begin(), comp.end());
    PosMap local;
    if (comp.size() == 1) {
      local[comp.front()] = {0, 0};
    } else {
      // Outer ring: the longest face of this component, ties to the least
      // canonical dart sequence.
      std::vector<Dart> best;
      for (const auto& face : traced.faces) {
        if (!in_comp.count(face.front().first)) continue;
        std::vector<Dart> cand = canonical_face(face);
        if (best.empty() || cand.size() > best.size() ||
            (cand.size() == best.size() && cand < best))
          best = std::move(cand);
      }
      std::vector<std::string> ring;
      std::set<std::string> on_ring;
      for (const Dart& d : best)
        if (on_ring.insert(d.first).second) ring.push_back(d.first);

      const double n = static_cast<double>(ring.size());
      for (std::size_t k = 0; k < ring.size(); ++k) {
        const double ang =
            std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(k) / n;
        local[ring[k]] = {std::cos(ang), std::sin(ang)};
      }

      std::vector<std::string> interior;
      for (const std::string& v : comp)
        if (!on_ring.count(v)) {
          interior.push_back(v);
          local[v] = {0, 0};
        }
      if (!interior.empty()) {
        std::map<std::string, std::vector<std::string>> adj;
        for (const Edge& e : g.edges) {
          if (!in_comp.count(e.a)) continue;
          adj[e.a].push_back(e.b);
          adj[e.b].push_back(e.a);
        }
        for (int round = 0; round < 200; ++round) {
          PosMap next = local;
          for (const std::string& v : interior) {
            double sx = 0, sy = 0;
            for (const std::string& u : adj[v]) {
              sx += local[u][0];
              sy += local[u][1];
            }
            const double d = static_cast<double>(adj[v].size());
            next[v] = {sx / d, sy / d};
          }
          local = std::move(next);
        }
      }
    }

    BBox bb;
    for (const auto& [id, p] : local) bb.add(p);
    for (const auto& [id, p] : local) out[id] = {p[0] - bb.minx + shift, p[1] - bb.miny};
    shift += (bb.maxx - bb.minx) + 1.0;
  }
  return out;
}

std::string render_drawing(const Instance& inst) {
  const double W = 640, H = 480;
  std::ostringstream out;
  open_svg(out, W, H);
  out << kArrowDef;
  if (inst.graph.vertices.empty()) {
    text_at(out, "caption", {8, H - 10}, "empty graph");
  } else {
    const PosMap pos = graph_positions(inst.graph);
    BBox bb;
    for (const auto& [id, p] : pos) bb.add(p);
    const Frame f = fit_frame(bb, 0, 0, W, H - 28, 48);
    draw_instance(out, inst, pos, f, "", "");
    text_at(out, "caption", {8, H - 10}, walk_caption(inst.walk));
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_drawing_pair(const Instance& K, const Instance& L) {
  // The inputs may still live on separate graphs; draw the common ambient
  // picture the analyses work with.
  const auto [k, l] = overlay_pair(K, L);
  const double W = 640, H = 480;
  std::ostringstream out;
  open_svg(out, W, H);
  out << kArrowDef;
  const PosMap pos = graph_positions(k.graph);
  BBox bb;
  for (const auto& [id, p] : pos) bb.add(p);
  const Frame f = fit_frame(bb, 0, 0, W, H - 28, 48);
  draw_instance(out, k, pos, f, "walk-K", "K");
  Instance l_only = l;
  l_only.graph.edges.clear();      // ambient drawn once, with K
  l_only.graph.vertices.clear();
  draw_instance(out, l_only, pos, f, "walk-L", "L");
  text_at(out, "caption", {8, H - 10},
          "K: " + walk_caption(k.walk) + "; L: " + walk_caption(l.walk));
  out << "</svg>\n";
  return out.str();
}

std::string render_tower(const Instance& inst) {
  Decision d = decide_approximable(inst);
  std::vector<Instance> levels = d.levels;
  if (d.reason == DecisionReason::UnitWinding || d.reason == DecisionReason::ForbiddenWinding)
    levels.push_back(derive(levels.back()));

  const double W = 640, panel = 300;
  const double H = panel * static_cast<double>(levels.size());
  std::ostringstream out;
  open_svg(out, W, H);
  out << kArrowDef;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const Instance& lv = levels[k];
    const double y0 = panel * static_cast<double>(k);
    out << " <g class=\"level\" id=\"level-" << k << "\">\n";
    std::string cap = "level " + std::to_string(k) + ": ";
    if (lv.graph.vertices.empty()) {
      cap += "empty";
    } else {
      const PosMap pos = graph_positions(lv.graph);
      BBox bb;
      for (const auto& [id, p] : pos) bb.add(p);
      const Frame f = fit_frame(bb, 0, y0, W, panel - 24, 44);
      draw_instance(out, lv, pos, f, "", "");
      cap += walk_caption(lv.walk);
    }
    text_at(out, "caption", {8, y0 + panel - 10}, cap);
    out << " </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

const char* kContributingFill[] = {"#ffd166", "#8ecae6", "#b5e48c",
                                   "#f4a0c0", "#c9b6f0", "#ffb4a2"};

// Grid of the two-cells: first index is the column, second the row, rows
// growing upward.  The style block gains one fill rule per contributing
// component; black cells are singleton components and override to near-black.
std::string table_svg(const ObstructionAnalysis& oa, const std::string& kind_word) {
  const auto& cells = oa.painted.complex.cells;
  const auto& black = oa.painted.black_cells;

  std::map<TwoCell, int> comp_of;
  for (std::size_t c = 0; c < oa.components.size(); ++c)
    for (const TwoCell& tc : oa.components[c].cells) comp_of[tc] = static_cast<int>(c);

  std::ostringstream vec;
  vec << '[';
  for (std::size_t k = 0; k < oa.vector.coordinates.size(); ++k)
    vec << (k ? "," : "") << oa.vector.coordinates[k];
  vec << ']';

  const double s = 48, m = 56, cap = 30;
  if (cells.empty()) {
    std::ostringstream out;
    open_svg(out, 320, 80);
    text_at(out, "caption", {8, 44}, kind_word + " complex, no two-cells, vector " + vec.str());
    out << "</svg>\n";
    return out.str();
  }

  int imin = cells.front().i, imax = cells.front().i;
  int jmin = cells.front().j, jmax = cells.front().j;
  for (const TwoCell& c : cells) {
    imin = std::min(imin, c.i);
    imax = std::max(imax, c.i);
    jmin = std::min(jmin, c.j);
    jmax = std::max(jmax, c.j);
  }
  const double W = 2 * m + s * static_cast<double>(imax - imin + 1);
  const double H = 2 * m + cap + s * static_cast<double>(jmax - jmin + 1);

  std::ostringstream out;
  open_svg(out, W, H);
  out << " <style>\n";
  for (std::size_t c = 0; c < oa.components.size(); ++c)
    if (oa.components[c].contributes)
      out << "  .cell.comp-" << c << " { fill:"
          << kContributingFill[c % (sizeof kContributingFill / sizeof *kContributingFill)]
          << "; }\n";
  out << "  .cell.black { fill:#2b2b2b; }\n </style>\n";

  const auto cx = [&](int i) { return m + s * static_cast<double>(i - imin); };
  const auto cy = [&](int j) { return m + s * static_cast<double>(jmax - j); };

  for (const TwoCell& c : cells) {
    const int comp = comp_of.at(c);
    std::string cls = "cell comp-" + std::to_string(comp);
    if (oa.components[static_cast<std::size_t>(comp)].contributes) cls += " contributing";
    const bool is_black = black.count(c) != 0;
    if (is_black) cls += " black";
    out << " <rect class=\"" << cls << "\" data-cell=\"" << c.i << "," << c.j << "\" x=\""
        << fmt(cx(c.i)) << "\" y=\"" << fmt(cy(c.j)) << "\" width=\"" << fmt(s)
        << "\" height=\"" << fmt(s) << "\"/>\n";
    const auto par = oa.parities.find(c);
    if (par != oa.parities.end() && (par->second & 1)) {
      std::string pcls = is_black ? "parity on-black" : "parity";
      text_at(out, pcls, {cx(c.i) + s / 2, cy(c.j) + s / 2 + 5}, "1");
    }
  }

  for (int i = imin; i <= imax; ++i)
    text_at(out, "axis", {cx(i) + s / 2 - 4, m + s * static_cast<double>(jmax - jmin + 1) + 16},
            std::to_string(i));
  for (int j = jmin; j <= jmax; ++j)
    text_at(out, "axis", {m - 20, cy(j) + s / 2 + 4}, std::to_string(j));
  const bool pair = kind_word == "pair";
  text_at(out, "axis", {m + s * static_cast<double>(imax - imin + 1) / 2 - 20,
                        m + s * static_cast<double>(jmax - jmin + 1) + 34},
          pair ? "K step" : "step i");
  text_at(out, "axis", {8, m - 12}, pair ? "L step" : "step j");
  text_at(out, "caption", {8, H - 10}, kind_word + " complex, vector " + vec.str());
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_table(const Instance& inst) {
  const ObstructionAnalysis oa = analyze_obstruction(inst);
  return table_svg(oa, inst.walk.closed ? "closed" : "open");
}

std::string render_table_pair(const Instance& K, const Instance& L) {
  const ObstructionAnalysis oa = analyze_disjoinability(K, L);
  return table_svg(oa, "pair");
}

}  // namespace planewalk
