// propcol: command-line front end for the proportional choosability library.
//
// Exit codes: 0 success / positive answer, 1 negative answer, 2 bad input or
// unmet precondition, 3 resource cap, 4 internal error.

#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "propcol/propcol.hpp"

namespace {

using propcol::io::Json;

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kResource = 3, kInternal = 4 };

struct Options {
  std::string graph_path, assignment_path, coloring_path;
  std::string mode = "proportional";
  std::string strategy = "auto";
  std::string format = "json";
  std::string family;
  std::vector<std::size_t> params;
  std::string source;
  std::size_t param = 0;
  std::size_t k = 0;
  std::size_t k_max = 0;
  std::size_t palette = 0;
  double cap = 0;
  std::size_t nk_cap = propcol::OracleOptions{}.max_nk;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  bool exists = false, choosable = false, equitable = false;
  std::string equitable_mode = "colorable";
};

Json load(const std::string& path, const char* flag) {
  if (path.empty()) throw propcol::InputError(std::string("missing ") + flag);
  return propcol::io::parse(propcol::io::read_file(path));
}

propcol::Graph load_graph(const Options& o) {
  return propcol::io::load_graph(load(o.graph_path.empty() ? o.assignment_path : o.graph_path, "--graph"));
}

propcol::ListAssignment load_assignment(const Options& o) {
  return propcol::io::load_assignment(
      load(o.assignment_path.empty() ? o.graph_path : o.assignment_path, "--assignment"));
}

propcol::OracleOptions oracle_options(const Options& o) {
  propcol::OracleOptions opt;
  opt.max_nk = o.nk_cap;
  opt.threads = std::max<std::size_t>(1, o.threads);
  if (o.cap > 0) opt.search_cap = o.cap;
  return opt;
}

void emit(const Json& j) { std::cout << propcol::io::dump(j); }

int cmd_family(const Options& o) {
  auto name = propcol::parse_family_name(o.family);
  if (!name) throw propcol::InputError("unknown family " + o.family);
  propcol::Graph g = propcol::build_family({*name, o.params});
  if (o.format == "dot") {
    std::cout << propcol::io::to_dot(g);
  } else {
    emit(propcol::io::to_json(g));
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  auto mode = propcol::parse_mode(o.mode);
  if (!mode) throw propcol::InputError("unknown mode " + o.mode);
  propcol::Graph g = load_graph(o);
  propcol::ListAssignment L = load_assignment(o);
  propcol::Labelling f = propcol::io::coloring_from_json(load(o.coloring_path, "--coloring"));
  propcol::Verdict v = propcol::verify(g, L, f, *mode);
  emit(propcol::io::to_json(v));
  return v.ok ? kOk : kNegative;
}

int cmd_classify(const Options& o) {
  propcol::Graph g = load_graph(o);
  propcol::ListAssignment L = load_assignment(o);
  if (L.vertex_count() != g.order()) throw propcol::InputError("assignment does not match the graph order");
  propcol::Labelling f = propcol::io::coloring_from_json(load(o.coloring_path, "--coloring"));
  if (f.size() != g.order()) throw propcol::InputError("coloring does not match the graph order");
  emit(propcol::io::usage_to_json(L, f));
  return kOk;
}

int cmd_solve(const Options& o) {
  auto strategy = propcol::parse_strategy(o.strategy);
  if (!strategy) throw propcol::InputError("unknown strategy " + o.strategy);
  propcol::Graph g = load_graph(o);
  propcol::ListAssignment L = load_assignment(o);
  auto result = propcol::solve(g, L, *strategy, o.cap > 0 ? o.cap : propcol::OracleOptions{}.search_cap);
  std::clog << "strategy: " << propcol::strategy_name(result.used) << "\n";
  if (!result.coloring) {
    emit(Json{{"colors", nullptr}});
    return kNegative;
  }
  if (o.format == "dot") {
    std::cout << propcol::io::to_dot(g, &*result.coloring);
  } else {
    emit(propcol::io::to_json(*result.coloring));
  }
  return kOk;
}

int cmd_oracle(const Options& o) {
  const int picked = int(o.exists) + int(o.choosable) + int(o.equitable);
  if (picked != 1) throw propcol::InputError("pick exactly one of --exists, --choosable, --equitable");
  propcol::Graph g = load_graph(o);
  const auto opt = oracle_options(o);
  if (o.exists) {
    propcol::ListAssignment L = load_assignment(o);
    auto r = propcol::exists_proportional_coloring(g, L, opt.search_cap);
    emit(propcol::io::to_json(r));
    return r.exists ? kOk : kNegative;
  }
  if (o.k == 0) throw propcol::InputError("--k is required");
  if (o.choosable) {
    auto v = propcol::decide_proportional_k_choosability(g, o.k, opt);
    emit(propcol::io::to_json(v));
    return v.decision ? kOk : kNegative;
  }
  propcol::EquitableMode mode;
  if (o.equitable_mode == "colorable") {
    mode = propcol::EquitableMode::Colorable;
  } else if (o.equitable_mode == "choosable") {
    mode = propcol::EquitableMode::Choosable;
  } else {
    throw propcol::InputError("unknown equitable mode " + o.equitable_mode);
  }
  bool ok = propcol::equitable_oracles(g, o.k, mode, opt);
  emit(Json{{"equitable", ok}, {"k", o.k}, {"mode", o.equitable_mode}});
  return ok ? kOk : kNegative;
}

int cmd_chi_pc(const Options& o) {
  propcol::Graph g = load_graph(o);
  std::size_t k_max = o.k_max;
  if (k_max == 0 && o.cap > 0) k_max = static_cast<std::size_t>(o.cap);
  if (k_max == 0) k_max = std::max<std::size_t>(1, g.order());
  propcol::OracleOptions opt = oracle_options(o);
  opt.search_cap = propcol::OracleOptions{}.search_cap;
  auto r = propcol::chi_pc(g, k_max, opt);
  emit(propcol::io::to_json(r, k_max));
  switch (r.status) {
    case propcol::ChiPcStatus::Exact: return kOk;
    case propcol::ChiPcStatus::AboveCap: return kNegative;
    case propcol::ChiPcStatus::ResourceLimit: return kResource;
  }
  return kInternal;
}

int cmd_gallery(const Options& o) {
  if (o.source == "random") {
    propcol::Graph g = load_graph(o);
    if (o.k == 0) throw propcol::InputError("--k is required");
    std::size_t palette = o.palette == 0 ? o.k + g.order() : o.palette;
    std::mt19937_64 rng(o.seed);
    auto L = propcol::random_assignment(g.order(), o.k, palette, rng);
    emit(propcol::io::pair_to_json(g, L));
    return kOk;
  }
  auto source = propcol::parse_gallery_source(o.source);
  if (!source) throw propcol::InputError("unknown gallery source " + o.source);
  emit(propcol::io::to_json(propcol::gallery_instance(*source, o.param)));
  return kOk;
}

struct ReportRow {
  std::string family;
  propcol::FamilySpec spec;
  std::optional<std::size_t> expected;
};

int cmd_report(const Options& o) {
  using propcol::FamilyName;
  std::vector<ReportRow> rows;
  for (std::size_t n = 1; n <= 4; ++n) rows.push_back({"complete", {FamilyName::Complete, {n}}, n});
  for (std::size_t m = 1; m <= 4; ++m) {
    rows.push_back({"star", {FamilyName::Star, {m}}, 1 + (m + 1) / 2});
  }
  for (std::size_t n = 2; n <= 5; ++n) rows.push_back({"path", {FamilyName::Path, {n}}, std::nullopt});
  for (std::size_t n = 3; n <= 4; ++n) rows.push_back({"cycle", {FamilyName::Cycle, {n}}, std::nullopt});
  rows.push_back({"balanced_bipartite", {FamilyName::BalancedBipartite, {2}}, std::nullopt});
  rows.push_back({"doubled_multipartite", {FamilyName::DoubledMultipartite, {2}}, std::nullopt});
  rows.push_back({"clique_union", {FamilyName::CliqueUnion, {3, 1}}, 3});
  rows.push_back({"clique_union", {FamilyName::CliqueUnion, {2, 2, 1}}, 2});

  const auto opt = oracle_options(o);
  std::cout << "family,params,n,max_degree,chi_pc,status,expected,match\n";
  bool all_match = true;
  for (const auto& row : rows) {
    propcol::Graph g = propcol::build_family(row.spec);
    auto r = propcol::chi_pc(g, std::max<std::size_t>(1, g.order()), opt);
    std::string params;
    for (std::size_t i = 0; i < row.spec.params.size(); ++i) {
      params += (i ? ";" : "") + std::to_string(row.spec.params[i]);
    }
    std::string value = r.value ? std::to_string(*r.value) : ">=" + std::to_string(r.lower_bound);
    std::string expected = row.expected ? std::to_string(*row.expected) : "";
    std::string match;
    if (row.expected) {
      bool ok = r.value && *r.value == *row.expected;
      all_match = all_match && ok;
      match = ok ? "yes" : "no";
    }
    std::cout << row.family << ',' << params << ',' << g.order() << ',' << g.max_degree() << ','
              << value << ',' << propcol::io::chi_pc_status_name(r.status) << ',' << expected << ','
              << match << '\n';
  }
  return all_match ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proportional choosability toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_inputs = [&](CLI::App* sub, bool coloring) {
    sub->add_option("--graph", o.graph_path, "graph JSON (or a graph/assignment pair)");
    sub->add_option("--assignment", o.assignment_path, "assignment JSON (or a pair)");
    if (coloring) sub->add_option("--coloring", o.coloring_path, "coloring JSON");
  };

  auto* family = app.add_subcommand("family", "emit a named graph family");
  family->add_option("--name", o.family, "complete, star, path, cycle, balanced_bipartite, "
                                         "doubled_multipartite, star_forest, clique_union")
      ->required();
  family->add_option("--param", o.params, "family parameters")->required();
  family->add_option("--format", o.format, "json or dot");

  auto* verify = app.add_subcommand("verify", "check a labelling");
  add_inputs(verify, true);
  verify->add_option("--mode", o.mode,
                     "proper, proportional-labelling, proportional, equitable-k, equitable-l");

  auto* classify = app.add_subcommand("classify", "usage class of every palette color");
  add_inputs(classify, true);

  auto* solve = app.add_subcommand("solve", "find a proportional coloring");
  add_inputs(solve, false);
  solve->add_option("--strategy", o.strategy, "auto, star, components, smallorder, order, oracle");
  solve->add_option("--cap", o.cap, "search cap on k^n for the oracle");
  solve->add_option("--format", o.format, "json or dot");

  auto* oracle = app.add_subcommand("oracle", "exhaustive decisions");
  add_inputs(oracle, false);
  oracle->add_flag("--exists", o.exists, "proportional L-colorability of the given assignment");
  oracle->add_flag("--choosable", o.choosable, "proportional k-choosability");
  oracle->add_flag("--equitable", o.equitable, "equitable k-colorability or k-choosability");
  oracle->add_option("--equitable-mode", o.equitable_mode, "colorable or choosable");
  oracle->add_option("--k", o.k, "list size");
  oracle->add_option("--cap", o.cap, "search cap on k^n");
  oracle->add_option("--nk-cap", o.nk_cap, "largest n*k for assignment enumeration");
  oracle->add_option("--threads", o.threads, "worker threads");

  auto* chi = app.add_subcommand("chi-pc", "proportional choice number by ascending scan");
  add_inputs(chi, false);
  chi->add_option("--k-max", o.k_max, "largest k tried");
  chi->add_option("--cap", o.cap, "largest k tried, when --k-max is absent");
  chi->add_option("--nk-cap", o.nk_cap, "largest n*k for assignment enumeration");
  chi->add_option("--threads", o.threads, "worker threads");

  auto* gallery = app.add_subcommand("gallery", "hard instances and random assignments");
  gallery->add_option("--source", o.source,
                      "star-odd, doubled-multipartite, star-forest, balanced-bipartite, random")
      ->required();
  gallery->add_option("--param", o.param, "instance parameter");
  gallery->add_option("--graph", o.graph_path, "graph for --source random");
  gallery->add_option("--k", o.k, "list size for --source random");
  gallery->add_option("--palette", o.palette, "palette size for --source random (default k + n)");
  gallery->add_option("--seed", o.seed, "random seed");

  auto* report = app.add_subcommand("report", "choice numbers of built-in families as CSV");
  report->add_option("--nk-cap", o.nk_cap, "largest n*k for assignment enumeration");
  report->add_option("--threads", o.threads, "worker threads");
  report->add_option("--format", o.format, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*family) return cmd_family(o);
    if (*verify) return cmd_verify(o);
    if (*classify) return cmd_classify(o);
    if (*solve) return cmd_solve(o);
    if (*oracle) return cmd_oracle(o);
    if (*chi) return cmd_chi_pc(o);
    if (*gallery) return cmd_gallery(o);
    if (*report) return cmd_report(o);
  } catch (const propcol::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const propcol::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const propcol::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const propcol::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInput;
}
