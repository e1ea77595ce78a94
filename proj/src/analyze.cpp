#include <cmath>
#include <sstream>
#include <iomanip>

#include "chroma/harness.hpp"

namespace chroma {

json number(double x) {
  if (std::isfinite(x) && std::floor(x) == x && std::fabs(x) < 9.0e15)
    return static_cast<std::int64_t>(x);
  return x;
}

namespace {

std::string hex(std::uint64_t x) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << x;
  return out.str();
}

json threshold_entry(std::string name, std::string statement, double lhs, double rhs,
                     bool strict, bool conditional) {
  json j;
  j["name"] = std::move(name);
  j["statement"] = std::move(statement);
  j["lhs"] = number(lhs);
  j["rhs"] = number(rhs);
  j["holds"] = strict ? lhs > rhs : lhs >= rhs;
  j["margin"] = number(lhs - rhs);
  j["conditional"] = conditional;
  return j;
}

}  // namespace

json to_json(const Witness& w) {
  json j;
  j["kind"] = std::string(to_string(w.kind));
  j["vertices"] = w.vertices;
  json edges = json::array();
  for (const auto& e : w.edges) edges.push_back({e.u, e.v, e.c});
  j["edges"] = std::move(edges);
  return j;
}

json to_json(const SearchOutcome& o) {
  json j;
  j["schema"] = kReportSchema;
  j["status"] = std::string(to_string(o.status));
  j["witness"] = o.witness ? to_json(*o.witness) : json(nullptr);
  j["stats"] = {{"nodes", o.stats.nodes}, {"elapsed_s", o.stats.elapsed.count()}};
  if (!o.partial.empty()) {
    json part = json::array();
    for (const auto& w : o.partial) part.push_back(to_json(w));
    j["partial"] = std::move(part);
  }
  return j;
}

json to_json(const PipelineOutcome& o) {
  json j = to_json(o.outcome);
  j["stage"] = o.stage;
  j["min_out_degree"] = o.min_out_degree ? json(*o.min_out_degree) : json(nullptr);
  j["directed_girth"] = o.directed_girth ? json(*o.directed_girth) : json(nullptr);
  j["conjectured_bound"] = o.conjectured_bound;
  j["margin"] = o.margin ? json(*o.margin) : json(nullptr);
  return j;
}

json to_json(const OrientationReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["s"] = r.s;
  j["t"] = r.t;
  j["sigma"] = number(r.sigma);
  j["bipartite"] = r.bipartite;
  if (!r.runs.empty()) {
    j["l"] = r.runs.front().l;
    j["x"] = number(r.runs.front().x);
  }
  json runs = json::array();
  for (const auto& run : r.runs)
    runs.push_back({{"n2", run.n2}, {"l", run.l}, {"x", number(run.x)},
                    {"threshold", run.threshold}});
  j["runs"] = std::move(runs);
  json vs = json::array();
  for (const auto& v : r.vertices)
    vs.push_back({{"dplus", v.dplus}, {"dc", v.dc}, {"bound", number(v.bound)},
                  {"margin", number(v.margin)}});
  j["vertices"] = std::move(vs);
  return j;
}

json to_json(const SuiteReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["suite"] = r.name;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["passed"] = r.passed();
  json ex = json::array();
  for (const auto& f : r.examples)
    ex.push_back({{"trial", f.trial}, {"seed", f.seed}, {"digest", hex(f.digest)},
                  {"assertion", f.assertion}});
  j["failure_examples"] = std::move(ex);
  j["elapsed_s"] = r.elapsed_seconds;
  j["stream_digest"] = hex(r.stream_digest);
  j["config"] = r.config;
  j["counters"] = r.counters;
  return j;
}

json to_json(const RecolorStats& s) {
  return {{"attempts", s.attempts},
          {"rejected_density", s.rejected_density},
          {"rejected_degree", s.rejected_degree},
          {"exhaustive_density_check", s.exhaustive_density_check},
          {"subsets_checked_per_attempt", s.subsets_checked_per_attempt},
          {"within_hypothesis", s.within_hypothesis}};
}

json analyze(const EdgeColoredGraph& g) {
  json j;
  j["schema"] = kReportSchema;
  const auto n = static_cast<double>(g.order());
  j["n"] = g.order();
  j["m"] = g.size();
  j["bipartite"] = g.has_bipartition();
  const std::size_t total = total_color_degree(g);
  j["total_color_degree"] = total;
  j["max_mono_degree"] = mono_degree_max(g);
  if (g.order() == 0) {
    j["min_color_degree"] = nullptr;
    j["thresholds"] = json::array();
    return j;
  }
  const auto dc = static_cast<double>(min_color_degree(g));
  j["min_color_degree"] = min_color_degree(g);

  json th = json::array();
  const double root = std::sqrt(n);
  // Short PC cycles, r = 4, with the conjectured f(n, 4) = ceil(n/4).
  th.push_back(threshold_entry("short_pc_cycle_r4",
                               "min color degree >= ceil(n/4) + 2 sqrt(n) + 1 forces a "
                               "PC cycle of length <= 4 (assuming f(n,4) = ceil(n/4))",
                               dc, std::ceil(n / 4) + 2 * root + 1, false, true));
  th.push_back(threshold_entry("pc_c4", "min color degree > n/3 + 2 sqrt(n) + 1 forces a PC C4",
                               dc, n / 3 + 2 * root + 1, true, false));
  th.push_back(threshold_entry("rainbow_c4",
                               "min color degree > n/3 + 24 sqrt(n) forces a rainbow C4", dc,
                               n / 3 + 24 * root, true, false));
  auto total_check = [&](int s, int t) {
    auto r = check_total_degree_threshold(g, s, t);
    std::string name = std::string(r.bipartite_form ? "bipartite_" : "") + "total_degree_k" +
                       std::to_string(s) + std::to_string(t);
    std::string statement =
        r.bipartite_form
            ? "sum d^c > n1 n2 + sigma (n1 n2^(1-1/s) + n2 n1^(1-1/s)) + s (n1 + n2) forces a "
              "PC K_{s,t}"
            : "sum d^c > n^2/2 + sigma n^(2-1/s) + s n forces a PC K_{s,t}";
    th.push_back(threshold_entry(name, statement, r.total, r.threshold, true, false));
  };
  if (g.order() >= 2) total_check(2, 2);
  if (g.order() >= 3) total_check(2, 3);
  j["thresholds"] = std::move(th);
  return j;
}

}  // namespace chroma
