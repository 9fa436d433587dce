#include "planewalk/cli.h"

#include "planewalk/derivative.h"
#include "planewalk/errors.h"
#include "planewalk/fixtures.h"
#include "planewalk/ingest.h"
#include "planewalk/report.h"
#include "planewalk/svg.h"

#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace planewalk {
namespace {

// File-name-safe slug of an input label: path stem, lowercased, runs of
// non-alphanumerics collapsed to single dashes.
std::string file_slug(const std::string& label) {
  const std::string stem = std::filesystem::path(label).stem().string();
  std::string s;
  for (char c : stem) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    else if (!s.empty() && s.back() != '-')
      s += '-';
  }
  while (!s.empty() && s.back() == '-') s.pop_back();
  return s.empty() ? "input" : s;
}

BigInt parse_budget(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::SemanticError, "--oracle-budget wants a nonnegative integer, got \"" +
                                         text + "\"");
  return BigInt(text);
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::SemanticError, "cannot write \"" + path.string() + "\"");
  f << bytes;
}

void emit_report(const AnalysisReport& rep, const std::string& json_out) {
  if (json_out == "-") {
    std::cout << rep.json.dump(2) << "\n";
    return;
  }
  std::cout << human_summary(rep);
  if (!json_out.empty()) write_file(json_out, rep.json.dump(2) + "\n");
}

void emit_svgs(const ParsedInput& in, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::string slug = file_slug(in.label);
  const auto save = [&](const std::string& what, const std::string& bytes) {
    const std::filesystem::path p = std::filesystem::path(dir) / (slug + "-" + what + ".svg");
    write_file(p, bytes);
    std::cout << "svg: " << p.generic_string() << "\n";
  };
  if (in.pair) {
    save("drawing", render_drawing_pair(in.pair->first, in.pair->second));
    save("table", render_table_pair(in.pair->first, in.pair->second));
  } else {
    save("drawing", render_drawing(*in.instance));
    save("tower", render_tower(*in.instance));
    save("table", render_table(*in.instance));
  }
}

int cmd_analyze(const std::string& file, const std::vector<std::string>& methods,
                const std::string& json_out, const std::string& svg_dir,
                const std::string& budget, bool no_timings) {
  const ParsedInput in = load_input(file);
  if (in.pair)
    throw Error(Errc::SemanticError, "\"" + in.label +
                                         "\" is a pair document; use the disjoint command");
  const bool exact = in.instance->graph.coords_kind == CoordsKind::Exact;
  const AnalysisReport rep =
      analyze_instance(*in.instance, in.label, resolve_methods(methods, false, exact),
                       parse_budget(budget), !no_timings);
  emit_report(rep, json_out);
  if (!svg_dir.empty()) emit_svgs(in, svg_dir);
  return rep.exit_code;
}

int cmd_disjoint(const std::string& file, const std::vector<std::string>& methods,
                 const std::string& json_out, const std::string& svg_dir,
                 const std::string& budget, bool no_timings) {
  const ParsedInput in = load_input(file);
  if (!in.pair)
    throw Error(Errc::SemanticError, "\"" + in.label +
                                         "\" is a single-walk document; use the analyze command");
  const AnalysisReport rep =
      analyze_pair(in.pair->first, in.pair->second, in.label,
                   resolve_methods(methods, true, false), parse_budget(budget), !no_timings);
  emit_report(rep, json_out);
  if (!svg_dir.empty()) emit_svgs(in, svg_dir);
  return rep.exit_code;
}

int cmd_degree(const std::string& file) {
  const ParsedInput in = load_input(file);
  if (in.pair)
    throw Error(Errc::SemanticError, "degree wants a single closed walk, not a pair");
  std::cout << winding_degree(*in.instance) << "\n";
  return 0;
}

int cmd_render(const std::string& file, const std::string& what, const std::string& out_dir) {
  const ParsedInput in = load_input(file);
  std::string bytes;
  if (in.pair) {
    if (what == "drawing")
      bytes = render_drawing_pair(in.pair->first, in.pair->second);
    else if (what == "table")
      bytes = render_table_pair(in.pair->first, in.pair->second);
    else
      throw Error(Errc::SemanticError, "pairs have no derivative tower");
  } else {
    if (what == "drawing")
      bytes = render_drawing(*in.instance);
    else if (what == "tower")
      bytes = render_tower(*in.instance);
    else
      bytes = render_table(*in.instance);
  }
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path p =
      std::filesystem::path(out_dir) / (file_slug(in.label) + "-" + what + ".svg");
  write_file(p, bytes);
  std::cout << p.generic_string() << "\n";
  return 0;
}

int cmd_fixtures() {
  const auto dir = fixture_directory();
  std::size_t width = 0;
  for (const auto& [name, summary] : dir) width = std::max(width, name.size());
  for (const auto& [name, summary] : dir)
    std::cout << name << std::string(width - name.size() + 2, ' ') << summary << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"planewalk: is a drawn walk approximable by embeddings?"};
  app.require_subcommand(1);

  std::string file, json_out, svg_dir, what, out_dir = ".";
  std::string budget = "100000";
  std::vector<std::string> methods;
  bool no_timings = false;

  CLI::App* analyze = app.add_subcommand("analyze", "decide approximability of one walk");
  analyze->add_option("file", file, "input document, or fixture:NAME")->required();
  analyze->add_option("--method", methods,
                      "derivative|obstruction|geom|oracle|all (repeatable)")
      ->delimiter(',');
  analyze->add_option("--json", json_out, "write the JSON report here (\"-\" = stdout)");
  analyze->add_option("--svg", svg_dir, "also render drawing/tower/table into this directory");
  analyze->add_option("--oracle-budget", budget, "give up beyond this many oracle candidates");
  analyze->add_flag("--no-timings", no_timings, "omit timings from the JSON report");

  CLI::App* degree = app.add_subcommand("degree", "generalized winding degree of a closed walk");
  degree->add_option("file", file, "input document, or fixture:NAME")->required();

  CLI::App* disjoint = app.add_subcommand("disjoint", "disjoinability of a walk pair");
  disjoint->add_option("file", file, "pair document, or fixture:NAME")->required();
  disjoint->add_option("--method", methods, "obstruction|oracle|all (repeatable)")
      ->delimiter(',');
  disjoint->add_option("--json", json_out, "write the JSON report here (\"-\" = stdout)");
  disjoint->add_option("--svg", svg_dir, "also render drawing/table into this directory");
  disjoint->add_option("--oracle-budget", budget, "give up beyond this many oracle candidates");
  disjoint->add_flag("--no-timings", no_timings, "omit timings from the JSON report");

  CLI::App* render = app.add_subcommand("render", "write one SVG view of the input");
  render->add_option("file", file, "input document, or fixture:NAME")->required();
  render->add_option("--what", what, "drawing|tower|table")
      ->required()
      ->check(CLI::IsMember({"drawing", "tower", "table"}));
  render->add_option("--out", out_dir, "output directory (default .)");

  app.add_subcommand("fixtures", "list the built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(file, methods, json_out, svg_dir, budget, no_timings);
    if (app.got_subcommand(degree)) return cmd_degree(file);
    if (app.got_subcommand(disjoint))
      return cmd_disjoint(file, methods, json_out, svg_dir, budget, no_timings);
    if (app.got_subcommand(render)) return cmd_render(file, what, out_dir);
    return cmd_fixtures();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace planewalk
