// chroma: generators, orientation, detectors, verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chroma/constructions.hpp"
#include "chroma/detectors.hpp"
#include "chroma/extraction.hpp"
#include "chroma/harness.hpp"
#include "chroma/io.hpp"
#include "chroma/transforms.hpp"

using namespace chroma;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNone = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text(path, text);
}

std::string load(const std::string& path) {
  if (path.empty() || path == "-") {
    std::string all((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return all;
  }
  return read_text(path);
}

std::string render(const EdgeColoredGraph& g) {
  if (g.has_bipartition() && !g.prefix_split()) return render_ecg(to_prefix_layout(g));
  return render_ecg(g);
}

OrientedGraph load_digraph(const std::string& path) {
  auto any = parse_any(load(path));
  if (auto* d = std::get_if<OrientedGraph>(&any)) return *d;
  if (auto* c = std::get_if<ColoredOrientation>(&any)) return c->digraph();
  throw std::invalid_argument("expected an .org or .corg input");
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("CHROMA_SEED")) return std::stoull(env, nullptr, 0);
  return 1;
}

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return kExitFound;
    case SearchStatus::exhausted_none: return kExitNone;
    case SearchStatus::budget_exceeded: return kExitBudget;
  }
  return kExitInput;
}

struct GenOptions {
  std::string kind;
  std::string input;
  std::string output;
  std::size_t n = 8;
  std::size_t n2 = 0;
  std::size_t k = 2;
  std::size_t r = 6;
  int s = 3;
  int t = 7;
  double gamma = 0.1;
  double p = 0.5;
  std::size_t colors = 3;
  std::uint64_t seed = 1;
  std::size_t max_tries = 1000;
  bool oriented = false;
  bool no_degree_floor = false;
};

int run_gen(const GenOptions& o) {
  const auto& kind = o.kind;
  if (kind == "signature") {
    emit(o.output, render(signature(load_digraph(o.input))));
  } else if (kind == "dual") {
    emit(o.output, render(dual_graph(parse_ecg(load(o.input)))));
  } else if (kind == "blowup") {
    emit(o.output, render_org(blow_up(load_digraph(o.input), o.k)));
  } else if (kind == "transitive") {
    emit(o.output, render_org(transitive_tournament(o.n)));
  } else if (kind == "circulant") {
    emit(o.output, render_org(circulant_tournament(o.n)));
  } else if (kind == "cycle") {
    emit(o.output, render_org(directed_cycle(o.r)));
  } else if (kind == "blowup-sig") {
    emit(o.output, render(blow_up_signature(o.r, o.k)));
  } else if (kind == "random") {
    if (o.oriented)
      emit(o.output, render_org(random_oriented_graph(o.n, o.p, o.seed)));
    else if (o.n2 > 0)
      emit(o.output, render(random_bipartite_edge_colored(o.n, o.n2, o.p, o.colors, o.seed)));
    else
      emit(o.output, render(random_edge_colored_graph(o.n, o.p, o.colors, o.seed)));
  } else if (kind == "proper-kst") {
    emit(o.output, render(random_proper_complete_bipartite(static_cast<std::size_t>(o.s), o.n,
                                                           o.seed)));
  } else if (kind == "recolored") {
    RecolorParams params;
    params.n = o.n;
    params.s = o.s;
    params.t = o.t;
    params.gamma = o.gamma;
    params.seed = o.seed;
    params.max_tries = o.max_tries;
    params.check_degree_floor = !o.no_degree_floor;
    try {
      auto res = recolored_tournament(params);
      emit(o.output, render(res.graph));
      json stats = to_json(res.stats);
      stats["min_color_degree"] = min_color_degree(res.graph);
      stats["recolored"] = res.recolored.size();
      std::cerr << stats.dump() << '\n';
    } catch (const RecolorExhausted& e) {
      std::cerr << "error: " << e.what() << ' ' << to_json(e.stats()).dump() << '\n';
      return kExitNone;
    }
  }
  return 0;
}

struct OrientOptions {
  std::string input;
  std::string output;
  std::string report;
  int s = 2;
  int t = 2;
  std::optional<double> x;
  bool bipartite = false;
};

int run_orient(const OrientOptions& o) {
  const auto g = parse_ecg(load(o.input));
  const OrientationOptions opts{o.s, o.t, o.x};
  const auto res = o.bipartite ? construct_orientation_bipartite(g, opts)
                               : construct_orientation(g, opts);
  emit(o.output, render_corg(res.d));
  if (!o.report.empty()) emit(o.report, to_json(res.report).dump(2) + "\n");
  return 0;
}

struct FindOptions {
  std::string kind;
  std::string input;
  int s = 2;
  int t = 2;
  std::size_t max_len = 4;
  std::size_t k = 2;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  std::int64_t budget_ms = SearchBudget{}.time_limit.count();
};

int run_find(const FindOptions& o) {
  const SearchBudget budget{o.budget_nodes, std::chrono::milliseconds(o.budget_ms)};
  if (o.kind == "directed-cycle") {
    const auto out = shortest_directed_cycle(load_digraph(o.input));
    std::cout << to_json(out).dump(2) << '\n';
    return status_code(out.status);
  }
  const auto g = parse_ecg(load(o.input));
  if (o.kind == "pipeline") {
    const auto out = pc_short_cycle_pipeline(g, o.max_len, budget);
    std::cout << to_json(out).dump(2) << '\n';
    return status_code(out.outcome.status);
  }
  SearchOutcome out;
  if (o.kind == "pc-kst")
    out = find_pc_kst(g, o.s, o.t, budget);
  else if (o.kind == "rainbow-kst")
    out = find_rainbow_kst(g, o.s, o.t, budget);
  else if (o.kind == "pc-cycle")
    out = find_pc_cycle_upto(g, o.max_len, budget);
  else if (o.kind == "rainbow-c4")
    out = find_rainbow_c4(g, budget);
  else
    out = disjoint_pc_cycles(g, o.k, budget);
  std::cout << to_json(out).dump(2) << '\n';
  return status_code(out.status);
}

struct VerifyOptions {
  std::string suite;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  std::int64_t budget_ms = SearchBudget{}.time_limit.count();
  unsigned workers = 0;
  std::string json_path;
};

int run_verify(const VerifyOptions& o) {
  const SearchBudget budget{o.budget_nodes, std::chrono::milliseconds(o.budget_ms)};
  const auto report = run_suite(o.suite, o.trials, o.seed, budget, o.workers);
  std::cout << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << " trials "
            << report.trials << " failures " << report.failures << " elapsed "
            << report.elapsed_seconds << "s\n";
  for (const auto& f : report.examples)
    std::cout << "  trial " << f.trial << " seed " << f.seed << ": " << f.assertion << '\n';
  if (!o.json_path.empty()) emit(o.json_path, to_json(report).dump(2) + "\n");
  return report.passed() ? 0 : 1;
}

int run_analyze(const std::string& input, bool as_json) {
  const auto report = analyze(parse_ecg(load(input)));
  if (as_json) {
    std::cout << report.dump(2) << '\n';
    return 0;
  }
  for (const char* key : {"n", "m", "min_color_degree", "max_mono_degree", "total_color_degree"})
    std::cout << key << ' ' << report[key].dump() << '\n';
  for (const auto& th : report["thresholds"])
    std::cout << th["name"].get<std::string>() << ' ' << (th["holds"].get<bool>() ? "holds" : "fails")
              << " margin " << th["margin"].dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Properly colored cycles in edge-colored graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate or transform a graph");
  gen_cmd->add_option("kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"signature", "dual", "blowup", "transitive", "circulant", "cycle",
                             "blowup-sig", "random", "proper-kst", "recolored"}));
  gen_cmd->add_option("-i,--input", gen.input, "Input for signature/dual/blowup (- for stdin)");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
  gen_cmd->add_option("--n", gen.n, "Order (T for proper-kst)");
  gen_cmd->add_option("--n2", gen.n2, "Second side size; makes random bipartite");
  gen_cmd->add_option("--k", gen.k, "Blow-up factor");
  gen_cmd->add_option("--r", gen.r, "Cycle length");
  gen_cmd->add_option("--s", gen.s);
  gen_cmd->add_option("--t", gen.t);
  gen_cmd->add_option("--gamma", gen.gamma);
  gen_cmd->add_option("--p", gen.p);
  gen_cmd->add_option("--colors", gen.colors);
  gen_cmd->add_option("--seed", gen.seed)->default_val(default_seed());
  gen_cmd->add_option("--max-tries", gen.max_tries);
  gen_cmd->add_flag("--oriented", gen.oriented, "random: emit an oriented graph");
  gen_cmd->add_flag("--no-degree-floor", gen.no_degree_floor,
                    "recolored: accept on the density check alone");

  OrientOptions orient;
  auto* orient_cmd = app.add_subcommand("orient", "Orient a colored graph");
  orient_cmd->add_option("-i,--input", orient.input)->required();
  orient_cmd->add_option("-o,--output", orient.output);
  orient_cmd->add_option("--report", orient.report, "JSON report path");
  orient_cmd->add_option("--s", orient.s);
  orient_cmd->add_option("--t", orient.t);
  orient_cmd->add_option("--x", orient.x, "Override the extraction threshold");
  orient_cmd->add_flag("--bipartite", orient.bipartite,
                       "Use the bipartite variant (input must carry a bipartition)");

  FindOptions find;
  auto* find_cmd = app.add_subcommand("find", "Search for a structure");
  find_cmd->add_option("kind", find.kind)
      ->required()
      ->check(CLI::IsMember({"pc-kst", "rainbow-kst", "pc-cycle", "rainbow-c4", "directed-cycle",
                             "pipeline", "disjoint"}));
  find_cmd->add_option("-i,--input", find.input)->required();
  find_cmd->add_option("--s", find.s);
  find_cmd->add_option("--t", find.t);
  find_cmd->add_option("--max-len", find.max_len, "Cycle length bound (pc-cycle, pipeline)");
  find_cmd->add_option("--k", find.k, "Number of disjoint cycles");
  find_cmd->add_option("--budget-nodes", find.budget_nodes);
  find_cmd->add_option("--budget-ms", find.budget_ms);

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded verification suite");
  verify_cmd->add_option("suite", verify_opts.suite)
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--trials", verify_opts.trials);
  verify_cmd->add_option("--seed", verify_opts.seed, "Default: $CHROMA_SEED or 1")
      ->default_val(default_seed());
  verify_cmd->add_option("--budget-nodes", verify_opts.budget_nodes);
  verify_cmd->add_option("--budget-ms", verify_opts.budget_ms);
  verify_cmd->add_option("--workers", verify_opts.workers, "0 = hardware threads");
  verify_cmd->add_option("--json", verify_opts.json_path, "Write the JSON report here");

  std::string analyze_input;
  bool analyze_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Color-degree metrics and thresholds");
  analyze_cmd->add_option("-i,--input", analyze_input)->required();
  analyze_cmd->add_flag("--json", analyze_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*orient_cmd) return run_orient(orient);
    if (*find_cmd) return run_find(find);
    if (*verify_cmd) return run_verify(verify_opts);
    if (*analyze_cmd) return run_analyze(analyze_input, analyze_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
