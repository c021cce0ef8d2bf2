#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nhm/error.hpp"
#include "nhm/io.hpp"
#include "nhm/oracle.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string in;
  std::string out;
  std::string format = "json";
  std::string pair;
  int depth_limit = 16;
  int oracle_depth = 12;
  bool oracle_check = false;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

nhm::Presentation load_presentation(const std::string& path) {
  std::string text = nhm::read_file(path);
  if (ends_with(path, ".obs")) return nhm::compile(nhm::parse_obstacles(text));
  return nhm::parse_presentation(text);
}

void deliver(const Options& opt, const std::string& content) {
  if (opt.out.empty())
    std::cout << content;
  else
    nhm::write_file(opt.out, content);
}

json point_json(const nhm::PointRef& p) {
  return json{{"chart", p.chart}, {"param", nhm::rational_str(p.param)}};
}

/// Re-derives every candidate-pair verdict by the independent ε-refinement
/// oracle and demands agreement with the separation module.
void cross_validate(const nhm::Analysis& a, int oracle_depth) {
  const auto& cands = a.partition.candidates();
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      bool paired = false;
      for (const nhm::InseparablePair& pr : a.pairs)
        paired = paired || (pr.a == cands[i] && pr.b == cands[j]);
      nhm::OracleVerdict v = nhm::insep_semidecide(a.presentation, a.groupoid, cands[i],
                                                   cands[j], oracle_depth);
      if (v.separated == paired)
        throw nhm::internal_error("oracle disagrees on " + cands[i].str() + " vs " +
                                  cands[j].str() + ": " + v.str());
    }
}

int run_validate(const Options& opt) {
  nhm::Analysis a = nhm::analyze(load_presentation(opt.in), opt.depth_limit);
  nhm::GraphLikeReport gl = nhm::check_graph_like(a.presentation, a.groupoid, a.partition);
  json doc;
  doc["charts"] = a.presentation.charts().size();
  doc["gluings"] = a.presentation.gluings().size();
  doc["rounds"] = a.groupoid.rounds_used();
  doc["map_count"] = a.groupoid.map_count();
  doc["maps"] = json::array();
  for (const auto& [pair, maps] : a.groupoid.maps())
    doc["maps"].push_back(
        json{{"from", pair.first}, {"to", pair.second}, {"count", maps.size()}});
  doc["graph_like"] = gl.graph_like;
  doc["candidates"] = gl.candidate_points;
  deliver(opt, doc.dump(2) + "\n");
  return 0;
}

int run_branch_points(const Options& opt) {
  nhm::Analysis a = nhm::analyze(load_presentation(opt.in), opt.depth_limit);
  if (opt.oracle_check) cross_validate(a, opt.oracle_depth);
  json doc;
  doc["pairs"] = json::array();
  for (const nhm::InseparablePair& pr : a.pairs)
    doc["pairs"].push_back(json{{"a", point_json(pr.a)}, {"b", point_json(pr.b)}});
  doc["classes"] = json::array();
  for (const auto& cls : a.partition.classes()) {
    json members = json::array();
    for (const nhm::PointRef& m : cls) members.push_back(point_json(m));
    doc["classes"].push_back(members);
  }
  deliver(opt, doc.dump(2) + "\n");
  return 0;
}

int run_quotient(const Options& opt) {
  nhm::Analysis a = nhm::analyze(load_presentation(opt.in), opt.depth_limit);
  if (opt.oracle_check) cross_validate(a, opt.oracle_depth);
  nhm::QuotientGraph qg = nhm::build_quotient(a);
  nhm::AtlasReport report = nhm::verify_atlas(qg, a);
  if (!report.ok) throw nhm::internal_error("atlas check failed: " + report.violations[0]);
  deliver(opt, opt.format == "dot" ? nhm::emit_quotient_dot(qg) : nhm::emit_quotient(qg));
  return 0;
}

int run_classify(const Options& opt) {
  nhm::Analysis a = nhm::analyze(load_presentation(opt.in), opt.depth_limit);
  nhm::QuotientGraph qg = nhm::build_quotient(a);
  json doc;
  doc["components"] = json::array();
  for (const nhm::QuotientComponent& comp : qg.components)
    doc["components"].push_back(
        json{{"charts", comp.charts},
             {"class", nhm::segment_class_str(nhm::classify_hausdorff(comp))}});
  deliver(opt, doc.dump(2) + "\n");
  return 0;
}

int run_foliation_compile(const Options& opt) {
  nhm::ObstacleSet q = nhm::parse_obstacles(nhm::read_file(opt.in));
  deliver(opt, nhm::emit_presentation(nhm::compile(q)));
  return 0;
}

nhm::PointRef parse_point_arg(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0)
    throw nhm::parse_error("point must be chart:param, got '" + text + "'");
  return {text.substr(0, colon), nhm::parse_rational(text.substr(colon + 1))};
}

int run_oracle(const Options& opt) {
  auto comma = opt.pair.find(',');
  if (comma == std::string::npos)
    throw nhm::parse_error("--pair must be chart:param,chart:param");
  nhm::PointRef a = parse_point_arg(opt.pair.substr(0, comma));
  nhm::PointRef b = parse_point_arg(opt.pair.substr(comma + 1));

  nhm::Presentation p = load_presentation(opt.in).symmetrized();
  nhm::TransitionGroupoid g = nhm::saturate(p, opt.depth_limit);
  nhm::OracleVerdict v = nhm::insep_semidecide(p, g, a, b, opt.oracle_depth);
  json doc{{"verdict", v.separated ? "SEPARATED" : "UNRESOLVED"}, {"k", v.k}};
  deliver(opt, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-Hausdorff 1-manifold analyzer"};
  app.require_subcommand(1);

  Options opt;
  int (*handler)(const Options&) = nullptr;

  auto add = [&](const std::string& name, const std::string& desc,
                 int (*fn)(const Options&)) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->add_option("--in", opt.in, "input file")->required();
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
    cmd->add_option("--depth-limit", opt.depth_limit, "saturation round limit");
    cmd->callback([&, fn] { handler = fn; });
    return cmd;
  };

  add("validate", "parse, saturate and report structure", run_validate);
  CLI::App* bp = add("branch-points", "inseparable pairs and chain classes", run_branch_points);
  CLI::App* qt = add("quotient", "build the minimal Hausdorff quotient graph", run_quotient);
  add("classify", "Hausdorff classification per component", run_classify);
  add("foliation-compile", "compile a planar obstacle set to a presentation",
      run_foliation_compile);
  CLI::App* orc = add("oracle", "epsilon-refinement separation semi-decision", run_oracle);

  qt->add_option("--format", opt.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  for (CLI::App* cmd : {bp, qt})
    cmd->add_flag("--oracle-check", opt.oracle_check,
                  "cross-validate pairs with the oracle");
  orc->add_option("--pair", opt.pair, "chart:param,chart:param")->required();
  orc->add_option("--k", opt.oracle_depth, "refinement depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"code", "parse"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  try {
    if (opt.depth_limit < 1) opt.depth_limit = 1;
    return handler(opt);
  } catch (const nhm::Error& e) {
    std::cerr << json{{"code", e.code()}, {"message", e.what()}}.dump() << "\n";
    return e.code() == "internal" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"code", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  }
}
