#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "chroma/enumerate.hpp"
#include "chroma/harness.hpp"
#include "chroma/io.hpp"
#include "chroma/random.hpp"
#include "chroma/transforms.hpp"

namespace chroma {

namespace {

struct Trial {
  std::uint64_t digest = 0;
  std::vector<std::string> violations;
  std::map<std::string, std::uint64_t> counters;

  void require(bool ok, const std::string& what) {
    if (!ok) violations.push_back(what);
  }
  void count(const std::string& key, std::uint64_t by = 1) { counters[key] += by; }

  /// Records a violation unless the search covered everything and found
  /// nothing.
  bool expect_none(const SearchOutcome& o, const std::string& what) {
    if (o.status == SearchStatus::exhausted_none) return true;
    violations.push_back(what + ": " + std::string(to_string(o.status)));
    return false;
  }
  bool expect_found(const SearchOutcome& o, const std::string& what) {
    if (o.status == SearchStatus::found) return true;
    violations.push_back(what + ": " + std::string(to_string(o.status)));
    return false;
  }
};

using TrialFn = void (*)(Trial&, std::size_t index, std::uint64_t seed,
                         const SearchBudget& budget);

struct SuiteDef {
  std::string name;
  TrialFn fn;
  std::size_t family = SIZE_MAX;  ///< fixed instance family size
  std::string params;
};

double uniform_in(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

std::string at(Vertex v) { return " at vertex " + std::to_string(v); }

// --- signature-laws ------------------------------------------------------

void signature_laws(Trial& r, std::size_t, std::uint64_t seed, const SearchBudget& budget) {
  Rng rng(seed);
  const std::size_t n = 2 + rng.below(11);
  const auto d = random_oriented_graph(n, 0.5, rng.next());
  const auto g = signature(d);
  r.digest = digest(d);

  for (Vertex v = 0; v < n; ++v) {
    const std::size_t want = d.out_degree(v) + (d.in_degree(v) > 0 ? 1 : 0);
    r.require(color_degree(g, v) == want, "color degree != out-degree (+1 with in-arcs)" + at(v));
  }
  r.expect_none(find_pc_kst(g, 2, 3, budget), "signature contains a PC K_{2,3}");

  if (n <= 8) {
    std::set<std::vector<Vertex>> directed;
    for (auto& c : enumerate_directed_cycles(d, n)) directed.insert(canonical_cycle(c));
    std::set<std::vector<Vertex>> proper;
    for (auto& c : enumerate_cycles(g, n)) {
      const auto w = cycle_witness(g, c);
      if (is_properly_colored(g, w.edges)) proper.insert(c);
    }
    r.require(directed == proper, "directed cycles and PC cycles differ (" +
                                      std::to_string(directed.size()) + " vs " +
                                      std::to_string(proper.size()) + ")");
    r.count("enumerated_instances");
    r.count("cycles", proper.size());
  }
}

// --- duality -------------------------------------------------------------

void duality(Trial& r, std::size_t, std::uint64_t seed, const SearchBudget& budget) {
  Rng rng(seed);
  const std::size_t n = 2 + rng.below(7);
  const std::size_t colors = 1 + rng.below(5);
  const double p = rng.coin(0.5) ? 0.3 : 0.6;
  const auto g = random_edge_colored_graph(n, p, colors, rng.next());
  const auto dual = dual_graph(g);
  r.digest = digest(g);

  for (int t : {2, 3})
    for (bool rainbow : {false, true}) {
      const auto find = rainbow ? find_rainbow_kst : find_pc_kst;
      const auto a = find(g, 2, t, budget);
      const auto b = find(dual, 2, t, budget);
      const std::string label =
          std::string(rainbow ? "rainbow" : "PC") + " K_{2," + std::to_string(t) + "}";
      if (a.status == SearchStatus::budget_exceeded ||
          b.status == SearchStatus::budget_exceeded) {
        r.require(false, label + ": budget exceeded");
        continue;
      }
      r.require(a.status == b.status, label + " existence differs between G and its dual");
      if (a.status == SearchStatus::found) r.count("found_" + std::string(rainbow ? "rainbow" : "pc"));
    }
}

// --- lemma1 ----------------------------------------------------------------

EdgeColoredGraph bipartite_signature(std::size_t n1, std::size_t n2, double p, Rng& rng) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = static_cast<Vertex>(n1); v < n1 + n2; ++v) {
      if (!rng.coin(p)) continue;
      if (rng.coin(0.5))
        arcs.push_back({u, v});
      else
        arcs.push_back({v, u});
    }
  const auto sig = signature(OrientedGraph(n1 + n2, std::move(arcs)));
  return EdgeColoredGraph::with_prefix_bipartition(
      n1 + n2, {sig.edges().begin(), sig.edges().end()}, n1);
}

bool has_edge(const EdgeColoredGraph& g, const Edge& e) { return g.color(e.u, e.v) == e.c; }

void lemma1(Trial& r, std::size_t, std::uint64_t seed, const SearchBudget& budget) {
  Rng rng(seed);
  const std::size_t n1 = 1 + rng.below(30);
  const std::size_t n2 = 1 + rng.below(30);
  const int s = rng.coin(0.5) ? 2 : 3;
  const int t = s + static_cast<int>(rng.below(3));
  EdgeColoredGraph g;
  switch (rng.below(3)) {
    case 0:
      g = random_bipartite_edge_colored(n1, n2, uniform_in(rng, 0.1, 0.9), 1 + rng.below(6),
                                        rng.next());
      break;
    case 1:
      g = bipartite_signature(n1, n2, uniform_in(rng, 0.2, 1.0), rng);
      break;
    default:
      g = random_bipartite_edge_colored(n1, n2, uniform_in(rng, 0.05, 0.3), 40, rng.next());
  }
  r.digest = digest(g);

  const auto res = lemma1_extract(g, {s, t, std::nullopt});
  for (const auto& e : res.proper.edges())
    r.require(has_edge(g, e), "proper subgraph edge missing from G");
  for (const auto& e : res.h.edges())
    r.require(has_edge(res.proper, e), "extracted edge missing from the proper subgraph");
  for (Vertex u = 0; u < n1; ++u) {
    r.require(res.proper.degree(u) == color_degree(res.proper, u),
              "proper subgraph repeats a color" + at(u));
    r.require(color_degree(res.proper, u) == color_degree(g, u),
              "proper subgraph lost a color" + at(u));
  }
  for (Vertex v = static_cast<Vertex>(n1); v < n1 + n2; ++v) {
    const std::size_t dc = color_degree(res.h, v);
    r.require(dc + 1 <= static_cast<std::size_t>(s), "d^c_H exceeds s-1" + at(v));
    r.require(res.state.saturated[v] == (dc + 1 == static_cast<std::size_t>(s)),
              "saturation flag disagrees with d^c_H" + at(v));
    if (s == 2) r.require(dc <= 1, "H not pseudo-canonical" + at(v));
  }
  r.require(static_cast<double>(res.state.order.size()) <= res.size_bound + 1e-9,
            "|U| = " + std::to_string(res.state.order.size()) + " exceeds (s-1) n2 / x");

  if (n2 <= 20) {
    const auto kst = find_pc_kst(g, s, t, budget);
    if (kst.status == SearchStatus::exhausted_none) {
      r.count("certified");
      for (Vertex u = 0; u < n1; ++u) {
        const double lost = static_cast<double>(color_degree(g, u) - color_degree(res.h, u));
        r.require(lost <= res.delta_bound + 1e-9,
                  "color loss " + std::to_string(lost) + " exceeds sigma n2^(1-1/s)" + at(u));
      }
    } else if (kst.status == SearchStatus::budget_exceeded) {
      r.count("uncertified_budget");
    }
  }
}

// --- orientation -----------------------------------------------------------

void check_orientation(Trial& r, const EdgeColoredGraph& g, const OrientationResult& res,
                       int s) {
  const auto& d = res.d;
  r.require(d.order() == g.order(), "orientation has the wrong order");
  for (const auto& a : d.arcs()) {
    r.require(g.color(a.tail, a.head) == a.c, "arc does not match a host edge and color");
    r.require(res.h.color(a.tail, a.head) == a.c, "arc missing from H");
    r.require(!d.digraph().has_arc(a.head, a.tail), "anti-parallel arcs");
  }
  r.require(d.size() == res.h.size(), "H and D have different sizes");
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto in = d.in_colors(v);
    const auto out = d.out_colors(v);
    std::vector<Color> both;
    std::set_intersection(in.begin(), in.end(), out.begin(), out.end(),
                          std::back_inserter(both));
    r.require(both.empty(), "in-colors and out-colors intersect" + at(v));
    r.require(in.size() + 1 <= static_cast<std::size_t>(s), "more than s-1 in-colors" + at(v));
  }
}

void orientation(Trial& r, std::size_t, std::uint64_t seed, const SearchBudget&) {
  Rng rng(seed);
  const std::size_t n = 3 + rng.below(38);
  const int s = n >= 4 && rng.coin(0.5) ? 3 : 2;
  const int t = s + static_cast<int>(rng.below(std::min<std::size_t>(3, n - s)));
  const double p = uniform_in(rng, 0.1, 0.9);
  const bool bipartite = rng.coin(0.25);
  EdgeColoredGraph host;
  if (bipartite) {
    const std::size_t n1 = 1 + rng.below(n - 1);
    host = random_bipartite_edge_colored(n1, n - n1, p, 1 + rng.below(n), rng.next());
  } else {
    host = random_edge_colored_graph(n, p, 1 + rng.below(n), rng.next());
  }
  r.digest = digest(host);
  const OrientationOptions opts{s, t, std::nullopt};
  check_orientation(r, host, construct_orientation(host, opts), s);
  if (bipartite) {
    check_orientation(r, host, construct_orientation_bipartite(host, opts), s);
    r.count("bipartite_variant");
  }
}

// --- orientation-bound -----------------------------------------------------

void check_bound(Trial& r, const EdgeColoredGraph& g, const OrientationResult& res,
                 bool bipartite_variant) {
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    std::size_t big_n = n;
    if (bipartite_variant) big_n = g.side_vertices(other(g.side(v))).size();
    const auto dplus = static_cast<double>(res.d.out_degree(v));
    const auto dc = static_cast<double>(color_degree(g, v));
    const double bound = dc - 2 * std::sqrt(static_cast<double>(big_n)) - 2;
    r.require(dplus > bound, std::string(bipartite_variant ? "bipartite " : "") +
                                 "out-degree " + std::to_string(dplus) + " not above " +
                                 std::to_string(bound) + at(v));
    if (v < res.report.vertices.size())
      r.require(res.report.vertices[v].dplus == res.d.out_degree(v),
                "report out-degree disagrees" + at(v));
  }
}

void orientation_bound(Trial& r, std::size_t, std::uint64_t seed, const SearchBudget& budget) {
  Rng rng(seed);
  std::size_t n = 3 + rng.below(18);
  EdgeColoredGraph g;
  const auto kind = rng.below(5);
  switch (kind) {
    case 0: {  // signature of a random acyclic orientation
      std::vector<Vertex> rank(n);
      std::iota(rank.begin(), rank.end(), Vertex{0});
      rng.shuffle(rank);
      const auto d = random_oriented_graph(n, uniform_in(rng, 0.3, 1.0), rng.next());
      std::vector<Arc> arcs;
      for (const auto& a : d.arcs())
        arcs.push_back(rank[a.tail] < rank[a.head] ? a : Arc{a.head, a.tail});
      g = signature(OrientedGraph(n, std::move(arcs)));
      break;
    }
    case 1:
      g = signature(random_oriented_graph(n, uniform_in(rng, 0.3, 1.0), rng.next()));
      break;
    case 2:
      g = random_edge_colored_graph(n, uniform_in(rng, 0.1, 0.5), 3 * n, rng.next());
      break;
    case 3: {
      const std::size_t n1 = 1 + rng.below(n - 1);
      g = random_bipartite_edge_colored(n1, n - n1, uniform_in(rng, 0.2, 0.8),
                                        1 + rng.below(2 * n), rng.next());
      break;
    }
    default:
      g = extremal_no_pc_c4(1 + rng.below(3));
      n = g.order();
  }
  r.digest = digest(g);

  const auto kst = find_pc_kst(g, 2, 2, budget);
  if (kst.status == SearchStatus::budget_exceeded) {
    r.count("uncertified_budget");
    return;
  }
  if (kst.status == SearchStatus::found) return;
  r.count("certified");
  const OrientationOptions opts{2, 2, std::nullopt};
  check_bound(r, g, construct_orientation(g, opts), false);
  if (g.has_bipartition()) {
    check_bound(r, g, construct_orientation_bipartite(g, opts), true);
    r.count("certified_bipartite");
  }
}

// --- pipeline --------------------------------------------------------------

constexpr std::size_t kCirculantCount = 52;  // n = 9..60

void pipeline(Trial& r, std::size_t index, std::uint64_t, const SearchBudget& budget) {
  if (index < kCirculantCount) {
    const std::size_t n = 9 + index;
    const auto g = signature(circulant_tournament(n));
    r.digest = digest(g);
    const auto out = pc_short_cycle_pipeline(g, 4, budget);
    if (!r.expect_found(out.outcome, "circulant n=" + std::to_string(n))) return;
    const auto& w = *out.outcome.witness;
    r.require(w.kind == WitnessKind::pc_cycle && verify(g, w), "witness fails re-verification");
    r.require(w.vertices.front().size() <= 4, "cycle longer than 4");
    r.count("stage" + std::to_string(out.stage));
    return;
  }
  const std::size_t k = index - kCirculantCount + 1;
  const auto g = extremal_no_pc_c4(k);
  r.digest = digest(g);
  const auto four = pc_short_cycle_pipeline(g, 4, budget);
  r.expect_none(four.outcome, "extremal k=" + std::to_string(k) + " r=4");
  r.require(four.stage == 0, "extremal r=4 reports a stage");
  const auto six = pc_short_cycle_pipeline(g, 6, budget);
  if (r.expect_found(six.outcome, "extremal k=" + std::to_string(k) + " r=6")) {
    const auto& w = *six.outcome.witness;
    r.require(verify(g, w), "r=6 witness fails re-verification");
    r.require(w.vertices.front().size() == 6, "r=6 cycle does not have length 6");
  }
}

// --- proposition12 ---------------------------------------------------------

void rainbow_case(Trial& r, std::size_t s, std::size_t big_t, int t, std::uint64_t seed) {
  const auto g = random_proper_complete_bipartite(s, big_t, seed);
  r.digest ^= digest(g);
  r.require(is_properly_colored(g, g.edges()), "input not properly colored");
  std::vector<Vertex> a(s), b(big_t);
  std::iota(a.begin(), a.end(), Vertex{0});
  std::iota(b.begin(), b.end(), static_cast<Vertex>(s));
  const auto w = extract_rainbow_kst(g, a, b, t);
  const std::string label = "K_{" + std::to_string(s) + "," + std::to_string(big_t) + "}";
  r.require(w.kind == WitnessKind::rainbow_kst && verify(g, w),
            label + ": witness fails re-verification");
  r.require(w.vertices.size() == 2 && w.vertices[0].size() == s &&
                w.vertices[1].size() == static_cast<std::size_t>(t),
            label + ": witness has the wrong shape");
}

void proposition12(Trial& r, std::size_t, std::uint64_t seed, const SearchBudget&) {
  Rng rng(seed);
  rainbow_case(r, 2, 4, 2, rng.next());
  rainbow_case(r, 3, 15, 3, rng.next());
}

// --- thresholds ------------------------------------------------------------

EdgeColoredGraph recolored_random_tournament(std::size_t n, double q, Rng& rng) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      arcs.push_back(rng.coin(0.5) ? Arc{u, v} : Arc{v, u});
  const auto sig = signature(OrientedGraph(n, std::move(arcs)));
  std::vector<Edge> edges(sig.edges().begin(), sig.edges().end());
  Color fresh = static_cast<Color>(n);
  for (auto& e : edges)
    if (rng.coin(q)) e.c = fresh++;
  return EdgeColoredGraph(n, std::move(edges));
}

void thresholds(Trial& r, std::size_t, std::uint64_t seed, const SearchBudget& budget) {
  Rng rng(seed);
  constexpr std::size_t n = 100;
  std::optional<EdgeColoredGraph> g;
  for (int attempt = 0; attempt < 1000 && !g; ++attempt) {
    EdgeColoredGraph h = rng.coin(0.5)
                             ? random_edge_colored_graph(n, uniform_in(rng, 0.85, 1.0),
                                                         300 + rng.below(2701), rng.next())
                             : recolored_random_tournament(n, uniform_in(rng, 0.45, 1.0), rng);
    if (total_color_degree(h) > 7200) g = std::move(h);
  }
  if (!g) {
    r.require(false, "no instance above the threshold after 1000 draws");
    return;
  }
  r.digest = digest(*g);
  const auto check = check_total_degree_threshold(*g, 2, 2);
  r.require(check.holds && check.threshold == 7200.0, "threshold evaluation disagrees");
  const auto found = find_pc_kst(*g, 2, 2, budget);
  if (found.status == SearchStatus::exhausted_none)
    r.require(false, "no PC K_{2,2} although sum d^c = " + std::to_string(check.total) +
                         " > 7200: counterexample");
  else
    r.expect_found(found, "PC K_{2,2} search");
  r.count("total_color_degree_sum", total_color_degree(*g));
}

// --- extremal --------------------------------------------------------------

void extremal(Trial& r, std::size_t index, std::uint64_t, const SearchBudget& budget) {
  const std::size_t k = index % 3 + 1;
  const bool six = index < 3;
  const auto g = six ? extremal_no_pc_c4(k) : extremal_no_rainbow_c4_trianglefree(k);
  r.digest = digest(g);
  const std::string label = std::string(six ? "C6" : "C5") + " blow-up k=" + std::to_string(k);
  r.require(g.order() == (six ? 6 : 5) * k, label + ": wrong order");
  std::size_t low = SIZE_MAX;
  for (Vertex v = 0; v < g.order(); ++v) low = std::min(low, color_set(g, v).size());
  r.require(low == k + 1 && min_color_degree(g) == k + 1, label + ": min color degree != k+1");
  if (six) {
    r.expect_none(find_pc_kst(g, 2, 2, budget), label + ": PC C4");
    r.expect_none(find_pc_cycle_upto(g, 4, budget), label + ": PC cycle of length <= 4");
  } else {
    r.require(is_triangle_free(g), label + ": contains a triangle");
    r.expect_none(find_rainbow_c4(g, budget), label + ": rainbow C4");
    r.expect_none(find_rainbow_kst(g, 2, 2, budget), label + ": rainbow K_{2,2}");
  }
}

// --- recolor ---------------------------------------------------------------

void check_recolored(Trial& r, const RecolorParams& params, const RecolorResult& res,
                     const SearchBudget& budget, const std::string& mode) {
  const auto& g = res.graph;
  r.digest ^= digest(g);
  const auto k = static_cast<std::size_t>(params.s + params.t);
  const auto cap = static_cast<std::size_t>(params.density_cap());
  r.require(subsets_sparse(params.n, res.recolored, k, cap), mode + ": dense subset");
  const bool floor_ok = degree_floor_holds(res.tournament, res.recolored, params.degree_floor());
  if (params.check_degree_floor)
    r.require(floor_ok, mode + ": degree floor violated");
  else if (floor_ok)
    r.count(mode + "_degree_floor_holds_anyway");
  std::map<Color, std::size_t> uses;
  for (const auto& e : g.edges()) ++uses[e.c];
  for (const auto& e : res.recolored) {
    r.require(g.color(e.u, e.v) == e.c, mode + ": recolored pair lost its color");
    r.require(uses[e.c] == 1, mode + ": fresh color reused");
  }
  r.expect_none(find_pc_kst(g, params.s, params.t, budget), mode + ": PC K_{3,7}");
  const std::size_t dc = min_color_degree(g);
  r.require(dc >= (params.n + 1) / 2, mode + ": min color degree below ceil(n/2)");
  r.count(mode + "_min_color_degree_sum", dc);
}

void recolor(Trial& r, std::size_t, std::uint64_t seed, const SearchBudget& budget) {
  Rng rng(seed);
  RecolorParams params;
  params.n = 20;
  params.s = 3;
  params.t = 7;
  params.gamma = 0.1;
  params.seed = rng.next();
  params.max_tries = 200;
  for (bool floor : {true, false}) {
    params.check_degree_floor = floor;
    const std::string mode = floor ? "full" : "density_only";
    try {
      const auto res = recolored_tournament(params);
      r.count(mode + "_accepted");
      r.count(mode + "_attempts", res.stats.attempts);
      check_recolored(r, params, res, budget, mode);
    } catch (const RecolorExhausted& e) {
      r.count(mode + "_exhausted");
      r.count(mode + "_attempts", e.stats().attempts);
    }
  }
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> suites = {
      {"signature-laws", signature_laws, SIZE_MAX, "random orientations, n in [2,12], p = 0.5"},
      {"duality", duality, SIZE_MAX, "n in [2,8], colors in [1,5], p in {0.3,0.6}"},
      {"lemma1", lemma1, SIZE_MAX, "n1, n2 in [1,30], s in {2,3}, t in [s,s+2]"},
      {"orientation", orientation, SIZE_MAX, "n in [3,40], s in {2,3}, t in [s,min(s+2,n-1)]"},
      {"orientation-bound", orientation_bound, SIZE_MAX, "n in [3,20], s = t = 2"},
      {"pipeline", pipeline, kCirculantCount + 4,
       "circulant n in [9,60] with r = 4; extremal k in [1,4] with r = 4 and 6"},
      {"proposition12", proposition12, SIZE_MAX, "proper K_{2,4} and K_{3,15}"},
      {"thresholds", thresholds, SIZE_MAX, "n = 100, sum d^c > 7200, s = t = 2"},
      {"extremal", extremal, 6, "C6 and C5 blow-ups, k in [1,3]"},
      {"recolor", recolor, SIZE_MAX, "n = 20, s = 3, t = 7, gamma = 0.1, max_tries = 200"},
  };
  return suites;
}

const SuiteDef& lookup(std::string_view name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

Trial run_trial(const SuiteDef& def, std::size_t index, std::uint64_t seed,
                const SearchBudget& budget) {
  Trial trial;
  try {
    def.fn(trial, index, seed, budget);
  } catch (const std::exception& e) {
    trial.violations.push_back(std::string("exception: ") + e.what());
  }
  return trial;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.push_back(s.name);
    return out;
  }();
  return names;
}

std::vector<std::string> replay_trial(std::string_view name, std::size_t trial,
                                      std::uint64_t seed, const SearchBudget& budget) {
  return run_trial(lookup(name), trial, seed ^ trial, budget).violations;
}

SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed,
                      const SearchBudget& budget, unsigned workers) {
  const auto& def = lookup(name);
  const auto start = std::chrono::steady_clock::now();
  const std::size_t count = std::min(trials, def.family);

  std::vector<Trial> results(count);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) results[i] = run_trial(def, i, seed ^ i, budget);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  SuiteReport report;
  report.name = def.name;
  report.trials = count;
  std::uint64_t stream = fnv1a("");
  std::map<std::string, std::uint64_t> counters;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& t = results[i];
    char bytes[8];
    for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>(t.digest >> (8 * b));
    stream = fnv1a(std::string_view(bytes, 8), stream);
    for (const auto& [k, v] : t.counters) counters[k] += v;
    if (t.violations.empty()) continue;
    ++report.failures;
    if (report.examples.size() < 10) {
      std::string what = t.violations.front();
      if (t.violations.size() > 1)
        what += " (+" + std::to_string(t.violations.size() - 1) + " more)";
      report.examples.push_back({i, seed ^ i, t.digest, std::move(what)});
    }
  }
  report.stream_digest = stream;
  report.counters = json::object();
  for (const auto& [k, v] : counters) report.counters[k] = v;
  report.config = {{"suite", def.name},
                   {"trials_requested", trials},
                   {"seed", seed},
                   {"budget_nodes", budget.max_nodes},
                   {"budget_ms", budget.time_limit.count()},
                   {"workers", workers},
                   {"instances", def.params}};
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace chroma
