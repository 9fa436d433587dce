#include "planewalk/report.h"

#include <chrono>
#include <sstream>

#include "planewalk/derivative.h"
#include "planewalk/errors.h"
#include "planewalk/obstruction.h"
#include "planewalk/oracle.h"
#include "planewalk/pushoff.h"

namespace planewalk {

namespace {

using nlohmann::ordered_json;

std::string rat(const Rational& r) { return r.str(); }

ordered_json vector_json(const ObstructionVector& v) {
  ordered_json a = ordered_json::array();
  for (int c : v.coordinates) a.push_back(c);
  return a;
}

std::string vector_text(const ObstructionVector& v) {
  std::ostringstream s;
  s << "[";
  for (std::size_t i = 0; i < v.coordinates.size(); ++i)
    s << (i ? "," : "") << v.coordinates[i];
  s << "]";
  return s.str();
}

ObstructionVector vector_of(const std::vector<Component>& comps) {
  ObstructionVector v;
  for (const Component& c : comps)
    if (c.contributes) v.coordinates.push_back(c.parity);
  return v;
}

ordered_json order_json(const CorridorOrder& order) {
  ordered_json a = ordered_json::array();
  for (const auto& [edge, strands] : order) {
    ordered_json entry;
    entry["edge"] = edge_label(edge);
    ordered_json ss = ordered_json::array();
    for (const Strand& s : strands) ss.push_back({s.walk, s.step});
    entry["strands"] = std::move(ss);
    a.push_back(std::move(entry));
  }
  return a;
}

ordered_json table_json(const PaintedComplex& painted, const CellParities& parities,
                        const std::vector<Component>& comps, const ObstructionVector& vec) {
  std::map<TwoCell, int> comp_of;
  for (std::size_t k = 0; k < comps.size(); ++k)
    for (const TwoCell& c : comps[k].cells) comp_of[c] = static_cast<int>(k);

  ordered_json t;
  switch (painted.complex.kind) {
    case ComplexKind::Open: t["kind"] = "open"; break;
    case ComplexKind::Closed: t["kind"] = "closed"; break;
    case ComplexKind::Pair: t["kind"] = "pair"; break;
  }
  ordered_json cells = ordered_json::array();
  for (const TwoCell& c : painted.complex.cells) {
    ordered_json jc;
    jc["i"] = c.i;
    jc["j"] = c.j;
    jc["parity"] = parities.count(c) ? parities.at(c) : 0;
    jc["black"] = painted.black_cells.count(c) > 0;
    jc["component"] = comp_of.at(c);
    cells.push_back(std::move(jc));
  }
  t["cells"] = std::move(cells);
  ordered_json jcomps = ordered_json::array();
  for (const Component& c : comps) {
    ordered_json jc;
    ordered_json cc = ordered_json::array();
    for (const TwoCell& cell : c.cells) cc.push_back({cell.i, cell.j});
    jc["cells"] = std::move(cc);
    jc["parity"] = c.parity;
    jc["contributes"] = c.contributes;
    jcomps.push_back(std::move(jc));
  }
  t["components"] = std::move(jcomps);
  t["vector"] = vector_json(vec);
  return t;
}

ordered_json graph_summary(const PlaneGraph& g) {
  ordered_json j;
  j["vertices"] = g.vertices.size();
  j["edges"] = g.edges.size();
  switch (g.coords_kind) {
    case CoordsKind::Exact: j["coords"] = "exact"; break;
    case CoordsKind::Layout: j["coords"] = "layout"; break;
    case CoordsKind::None: j["coords"] = "none"; break;
  }
  return j;
}

ordered_json walk_summary(const Instance& inst) {
  ordered_json j;
  j["closed"] = inst.walk.closed;
  j["steps"] = inst.walk.steps();
  ordered_json verts = ordered_json::array();
  for (const std::string& v : inst.walk.verts) verts.push_back(v);
  j["walk"] = std::move(verts);
  j["graph"] = graph_summary(inst.graph);
  return j;
}

const char* reason_name(DecisionReason r) {
  switch (r) {
    case DecisionReason::Injective: return "injective";
    case DecisionReason::EmptyDerivative: return "empty_derivative";
    case DecisionReason::UnitWinding: return "unit_winding";
    case DecisionReason::TransversalFound: return "transversal";
    case DecisionReason::ForbiddenWinding: return "forbidden_winding";
    case DecisionReason::ObstructionZero: return "obstruction_zero";
    case DecisionReason::ObstructionNonzero: return "obstruction_nonzero";
  }
  return "?";
}

// Verdict of the mod-2 vector, one-sided for closed walks.
std::string vector_verdict(bool closed, bool zero) {
  if (!zero) return "not_approximable";
  return closed ? "inconclusive" : "approximable";
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled) {}
  template <typename F>
  auto run(ordered_json& timings, const char* key, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    const auto t1 = std::chrono::steady_clock::now();
    if (enabled_)
      timings[key] =
          std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count() / 1000.0;
    return result;
  }

 private:
  bool enabled_;
};

int exit_for(const ordered_json& j) {
  if (!j["consistency"]["violations"].empty()) return 4;
  const std::string v = j["verdict"].get<std::string>();
  if (v == "approximable" || v == "disjoinable") return 0;
  if (v == "not_approximable" || v == "not_disjoinable") return 1;
  return 2;
}

}  // namespace

std::set<Method> resolve_methods(const std::vector<std::string>& names, bool pair_mode,
                                 bool exact_coords) {
  std::set<Method> out;
  if (names.empty()) {
    if (pair_mode) return {Method::Obstruction};
    out = {Method::Derivative, Method::Obstruction};
    if (exact_coords) out.insert(Method::Geom);
    return out;
  }
  for (const std::string& n : names) {
    if (n == "all") {
      if (pair_mode) {
        out.insert(Method::Obstruction);
        out.insert(Method::Oracle);
      } else {
        out.insert(Method::Derivative);
        out.insert(Method::Obstruction);
        if (exact_coords) out.insert(Method::Geom);
        out.insert(Method::Oracle);
      }
    } else if (n == "derivative") {
      if (pair_mode)
        throw Error(Errc::SemanticError, "method \"derivative\" applies to single instances");
      out.insert(Method::Derivative);
    } else if (n == "obstruction") {
      out.insert(Method::Obstruction);
    } else if (n == "geom") {
      if (pair_mode)
        throw Error(Errc::SemanticError, "method \"geom\" applies to single instances");
      out.insert(Method::Geom);
    } else if (n == "oracle") {
      out.insert(Method::Oracle);
    } else {
      throw Error(Errc::SemanticError, "unknown method \"" + n +
                                           "\" (expected derivative, obstruction, geom, "
                                           "oracle, or all)");
    }
  }
  return out;
}

AnalysisReport analyze_instance(const Instance& inst, const std::string& label,
                                const std::set<Method>& methods, const BigInt& oracle_budget,
                                bool with_timings) {
  ordered_json j;
  j["schema"] = "planewalk-report/1";
  j["instance"] = walk_summary(inst);
  j["instance"]["kind"] = "walk";
  j["instance"]["source"] = label;
  j["methods"] = ordered_json::object();

  ordered_json timings = ordered_json::object();
  Timer timer(with_timings);

  std::optional<Decision> deriv;
  if (methods.count(Method::Derivative)) {
    deriv = timer.run(timings, "derivative_ms", [&] { return decide_approximable(inst); });
    ordered_json m;
    m["verdict"] = deriv->approximable == Verdict::Yes ? "approximable" : "not_approximable";
    m["reason"] = reason_name(deriv->reason);
    m["level"] = deriv->level;
    if (deriv->winding) m["winding"] = deriv->winding->degree;
    m["levels"] = deriv->levels.size();
    j["methods"]["derivative"] = std::move(m);
  }

  std::optional<ObstructionAnalysis> oa;
  if (methods.count(Method::Obstruction)) {
    oa = timer.run(timings, "obstruction_ms", [&] { return analyze_obstruction(inst); });
    ordered_json m;
    m["verdict"] = vector_verdict(inst.walk.closed, oa->vector.zero());
    m["vector"] = vector_json(oa->vector);
    m["zero"] = oa->vector.zero();
    if (inst.walk.closed) {
      const bool gap =
          oa->vector.zero() && deriv && deriv->approximable == Verdict::No;
      m["completeness_gap"] = gap;
    }
    j["methods"]["obstruction"] = std::move(m);
  }

  std::optional<GeometricAnalysis> ga;
  std::optional<ObstructionVector> geom_vector;
  if (methods.count(Method::Geom)) {
    ga = timer.run(timings, "geom_ms", [&] { return analyze_geometric(inst); });
    const PaintedComplex painted =
        oa ? oa->painted : paint_black(deleted_product(inst.walk), inst);
    geom_vector = vector_of(components(painted, ga->parities));
    ordered_json m;
    m["verdict"] = vector_verdict(inst.walk.closed, geom_vector->zero());
    m["vector"] = vector_json(*geom_vector);
    m["seed"] = ga->seed;
    m["jitter_bound"] = rat(ga->bound);
    if (!ga->curve.points.empty()) m["amplitude"] = rat(ga->curve.amplitude);
    j["methods"]["geom"] = std::move(m);
  }

  std::optional<OracleResult> oracle;
  if (methods.count(Method::Oracle)) {
    oracle = timer.run(timings, "oracle_ms",
                       [&] { return oracle_approximable(inst, oracle_budget); });
    ordered_json m;
    switch (oracle->status) {
      case OracleStatus::Yes: m["verdict"] = "approximable"; break;
      case OracleStatus::No: m["verdict"] = "not_approximable"; break;
      case OracleStatus::BudgetExceeded: m["verdict"] = "budget_exceeded"; break;
    }
    m["bound"] = oracle->bound.str();
    m["budget"] = oracle_budget.str();
    j["methods"]["oracle"] = std::move(m);
  }

  // Overall verdict: the derivative decides outright; the oracle is equally
  // decisive when it ran to completion; the vector methods are one-sided for
  // closed walks.
  std::string verdict = "inconclusive";
  if (deriv)
    verdict = deriv->approximable == Verdict::Yes ? "approximable" : "not_approximable";
  else if (oracle && oracle->status != OracleStatus::BudgetExceeded)
    verdict = oracle->status == OracleStatus::Yes ? "approximable" : "not_approximable";
  else if (oa)
    verdict = vector_verdict(inst.walk.closed, oa->vector.zero());
  else if (geom_vector)
    verdict = vector_verdict(inst.walk.closed, geom_vector->zero());
  j["verdict"] = verdict;

  ordered_json witnesses = ordered_json::object();
  if (deriv && deriv->witness) {
    const TransversalWitness& w = *deriv->witness;
    ordered_json t;
    t["level"] = deriv->level;
    t["vertex"] = w.vertex;
    t["p"] = w.p;
    t["q"] = w.q;
    t["p_in"] = edge_label(w.p_in);
    t["p_out"] = edge_label(w.p_out);
    t["q_in"] = edge_label(w.q_in);
    t["q_out"] = edge_label(w.q_out);
    witnesses["transversal"] = std::move(t);
  }
  if (oracle && oracle->witness) witnesses["oracle_order"] = order_json(*oracle->witness);
  j["witnesses"] = std::move(witnesses);

  if (oa) {
    j["obstruction"] = table_json(oa->painted, oa->parities, oa->components, oa->vector);
  } else if (ga) {
    const PaintedComplex painted = paint_black(deleted_product(inst.walk), inst);
    const auto comps = components(painted, ga->parities);
    j["obstruction"] = table_json(painted, ga->parities, comps, vector_of(comps));
  }

  ordered_json checked = ordered_json::array();
  ordered_json violations = ordered_json::array();
  const auto violate = [&violations](const std::string& check, const std::string& detail) {
    ordered_json v;
    v["check"] = check;
    v["detail"] = detail;
    violations.push_back(std::move(v));
  };

  if (deriv && oa && !inst.walk.closed) {
    checked.push_back("open-derivative-equals-obstruction");
    const bool dyes = deriv->approximable == Verdict::Yes;
    if (dyes != oa->vector.zero())
      violate("open-derivative-equals-obstruction",
              "derivative says " + std::string(dyes ? "yes" : "no") + " but the vector is " +
                  vector_text(oa->vector));
  }
  if (deriv && oa && inst.walk.closed && !oa->vector.zero()) {
    checked.push_back("closed-nonzero-obstruction-implies-no");
    if (deriv->approximable == Verdict::Yes)
      violate("closed-nonzero-obstruction-implies-no",
              "vector " + vector_text(oa->vector) + " is nonzero but the derivative says yes");
  }
  if (deriv && oracle && oracle->status != OracleStatus::BudgetExceeded) {
    checked.push_back("oracle-equals-derivative");
    const bool dyes = deriv->approximable == Verdict::Yes;
    const bool oyes = oracle->status == OracleStatus::Yes;
    if (dyes != oyes)
      violate("oracle-equals-derivative", std::string("derivative says ") +
                                              (dyes ? "yes" : "no") + " but the oracle says " +
                                              (oyes ? "yes" : "no"));
  }
  if (!deriv && oa && oracle && oracle->status != OracleStatus::BudgetExceeded) {
    const bool oyes = oracle->status == OracleStatus::Yes;
    if (!inst.walk.closed) {
      checked.push_back("open-oracle-equals-obstruction");
      if (oyes != oa->vector.zero())
        violate("open-oracle-equals-obstruction",
                std::string("oracle says ") + (oyes ? "yes" : "no") + " but the vector is " +
                    vector_text(oa->vector));
    } else if (!oa->vector.zero()) {
      checked.push_back("closed-nonzero-obstruction-implies-oracle-no");
      if (oyes)
        violate("closed-nonzero-obstruction-implies-oracle-no",
                "vector " + vector_text(oa->vector) + " is nonzero but the oracle says yes");
    }
  }
  if (oa && geom_vector) {
    checked.push_back("geom-vector-equals-obstruction-vector");
    if (oa->vector.coordinates != geom_vector->coordinates)
      violate("geom-vector-equals-obstruction-vector",
              "combinatorial vector " + vector_text(oa->vector) + " vs geometric vector " +
                  vector_text(*geom_vector));
  }
  j["consistency"] = ordered_json::object();
  j["consistency"]["checked"] = std::move(checked);
  j["consistency"]["violations"] = std::move(violations);
  if (with_timings) j["timings"] = std::move(timings);

  const int code = exit_for(j);
  return {std::move(j), code};
}

AnalysisReport analyze_pair(const Instance& K, const Instance& L, const std::string& label,
                            const std::set<Method>& methods, const BigInt& oracle_budget,
                            bool with_timings) {
  ordered_json j;
  j["schema"] = "planewalk-report/1";
  j["instance"] = ordered_json::object();
  j["instance"]["kind"] = "pair";
  j["instance"]["source"] = label;
  j["instance"]["K"] = walk_summary(K);
  j["instance"]["L"] = walk_summary(L);
  j["methods"] = ordered_json::object();

  ordered_json timings = ordered_json::object();
  Timer timer(with_timings);

  std::optional<ObstructionAnalysis> oa;
  if (methods.count(Method::Obstruction)) {
    oa = timer.run(timings, "obstruction_ms", [&] { return analyze_disjoinability(K, L); });
    ordered_json m;
    m["verdict"] = oa->vector.zero() ? "inconclusive" : "not_disjoinable";
    m["vector"] = vector_json(oa->vector);
    m["zero"] = oa->vector.zero();
    j["methods"]["obstruction"] = std::move(m);
  }

  std::optional<OracleResult> oracle;
  if (methods.count(Method::Oracle)) {
    oracle = timer.run(timings, "oracle_ms",
                       [&] { return oracle_disjoinable(K, L, oracle_budget); });
    ordered_json m;
    switch (oracle->status) {
      case OracleStatus::Yes: m["verdict"] = "disjoinable"; break;
      case OracleStatus::No: m["verdict"] = "not_disjoinable"; break;
      case OracleStatus::BudgetExceeded: m["verdict"] = "budget_exceeded"; break;
    }
    m["bound"] = oracle->bound.str();
    m["budget"] = oracle_budget.str();
    j["methods"]["oracle"] = std::move(m);
  }

  std::string verdict = "inconclusive";
  if (oracle && oracle->status != OracleStatus::BudgetExceeded)
    verdict = oracle->status == OracleStatus::Yes ? "disjoinable" : "not_disjoinable";
  else if (oa && !oa->vector.zero())
    verdict = "not_disjoinable";
  j["verdict"] = verdict;
  j["witnesses"] = ordered_json::object();

  if (oa) j["obstruction"] = table_json(oa->painted, oa->parities, oa->components, oa->vector);

  ordered_json checked = ordered_json::array();
  ordered_json violations = ordered_json::array();
  if (oa && oracle && oracle->status != OracleStatus::BudgetExceeded &&
      !oa->vector.zero()) {
    checked.push_back("nonzero-obstruction-implies-not-disjoinable");
    if (oracle->status == OracleStatus::Yes) {
      ordered_json v;
      v["check"] = "nonzero-obstruction-implies-not-disjoinable";
      v["detail"] = "vector " + vector_text(oa->vector) +
                    " is nonzero but the oracle found a disjoining order";
      violations.push_back(std::move(v));
    }
  }
  j["consistency"] = ordered_json::object();
  j["consistency"]["checked"] = std::move(checked);
  j["consistency"]["violations"] = std::move(violations);
  if (with_timings) j["timings"] = std::move(timings);

  const int code = exit_for(j);
  return {std::move(j), code};
}

namespace {

std::string words(std::string s) {
  for (char& c : s)
    if (c == '_') c = ' ';
  return s;
}

std::string vector_line(const ordered_json& m) {
  std::string out = "vector [";
  bool first = true;
  for (const auto& c : m["vector"]) {
    if (!first) out += ",";
    out += std::to_string(c.get<int>());
    first = false;
  }
  return out + "]";
}

}  // namespace

std::string human_summary(const AnalysisReport& report) {
  const ordered_json& j = report.json;
  std::ostringstream out;

  const auto step_count = [](int n) {
    return std::to_string(n) + (n == 1 ? " step" : " steps");
  };
  const ordered_json& inst = j["instance"];
  if (inst["kind"] == "pair") {
    out << "pair: " << inst["source"].get<std::string>() << " (K "
        << (inst["K"]["closed"].get<bool>() ? "closed" : "open") << ", "
        << step_count(inst["K"]["steps"].get<int>()) << "; L "
        << (inst["L"]["closed"].get<bool>() ? "closed" : "open") << ", "
        << step_count(inst["L"]["steps"].get<int>()) << ")\n";
  } else {
    out << "instance: " << inst["source"].get<std::string>() << " ("
        << (inst["closed"].get<bool>() ? "closed" : "open") << " walk, "
        << step_count(inst["steps"].get<int>()) << ")\n";
  }

  for (const auto& [name, m] : j["methods"].items()) {
    out << name << ": " << words(m["verdict"].get<std::string>());
    std::vector<std::string> notes;
    if (name == "derivative") {
      notes.push_back(words(m["reason"].get<std::string>()) + " at level " +
                      std::to_string(m["level"].get<int>()));
      if (m.contains("winding"))
        notes.push_back("degree " + std::to_string(m["winding"].get<int>()));
    } else if (name == "obstruction" || name == "geom") {
      notes.push_back(vector_line(m));
      if (name == "geom") notes.push_back("seed " + std::to_string(m["seed"].get<int>()));
      if (m.contains("completeness_gap") && m["completeness_gap"].get<bool>())
        notes.push_back("completeness gap: the zero vector does not certify yes here");
    } else if (name == "oracle") {
      notes.push_back("bound " + m["bound"].get<std::string>());
    }
    if (!notes.empty()) {
      out << " (";
      for (std::size_t i = 0; i < notes.size(); ++i) out << (i ? "; " : "") << notes[i];
      out << ")";
    }
    out << "\n";
  }

  for (const auto& v : j["consistency"]["violations"])
    out << "THEOREM VIOLATION [" << v["check"].get<std::string>() << "]: "
        << v["detail"].get<std::string>() << "\n";

  out << "verdict: " << words(j["verdict"].get<std::string>()) << "\n";
  return out.str();
}

}  // namespace planewalk
