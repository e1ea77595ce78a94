#include "chroma/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "chroma/random.hpp"
#include "chroma/transforms.hpp"

namespace chroma {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("probability must lie in [0, 1]");
}

constexpr std::size_t kExhaustiveDensityLimit = 25;

}  // namespace

OrientedGraph transitive_tournament(std::size_t n) {
  if (n < 1) throw std::invalid_argument("transitive tournament needs n >= 1");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) arcs.push_back({i, j});
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph circulant_tournament(std::size_t n) {
  if (n < 3) throw std::invalid_argument("circulant tournament needs n >= 3");
  std::vector<Arc> arcs;
  const std::size_t reach = (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= reach; ++j)
      arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + j) % n)});
  if (n % 2 == 0)
    for (std::size_t i = 0; i < n / 2; ++i)
      arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + n / 2)});
  return OrientedGraph(n, std::move(arcs));
}

OrientedGraph directed_cycle(std::size_t r) {
  if (r < 3) throw std::invalid_argument("directed cycle needs r >= 3");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < r; ++i)
    arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % r)});
  return OrientedGraph(r, std::move(arcs));
}

EdgeColoredGraph blow_up_signature(std::size_t r, std::size_t k) {
  auto sig = signature(blow_up(directed_cycle(r), k));
  if (r % 2 != 0) return sig;
  std::vector<Side> sides(sig.order());
  for (std::size_t v = 0; v < sides.size(); ++v)
    sides[v] = (v / k) % 2 == 0 ? Side::first : Side::second;
  return EdgeColoredGraph(sig.order(), {sig.edges().begin(), sig.edges().end()},
                          std::move(sides));
}

EdgeColoredGraph extremal_no_pc_c4(std::size_t k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  return blow_up_signature(6, k);
}

EdgeColoredGraph extremal_no_rainbow_c4_trianglefree(std::size_t k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  return blow_up_signature(5, k);
}

OrientedGraph random_oriented_graph(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!rng.coin(p)) continue;
      if (rng.coin(0.5))
        arcs.push_back({u, v});
      else
        arcs.push_back({v, u});
    }
  return OrientedGraph(n, std::move(arcs));
}

EdgeColoredGraph random_edge_colored_graph(std::size_t n, double p, std::size_t colors,
                                           std::uint64_t seed) {
  check_probability(p);
  if (colors < 1) throw std::invalid_argument("need at least one color");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.coin(p)) edges.push_back({u, v, static_cast<Color>(rng.below(colors))});
  return EdgeColoredGraph(n, std::move(edges));
}

EdgeColoredGraph random_bipartite_edge_colored(std::size_t n1, std::size_t n2, double p,
                                               std::size_t colors, std::uint64_t seed) {
  check_probability(p);
  if (colors < 1) throw std::invalid_argument("need at least one color");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = n1; v < n1 + n2; ++v)
      if (rng.coin(p))
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                         static_cast<Color>(rng.below(colors))});
  return EdgeColoredGraph::with_prefix_bipartition(n1 + n2, std::move(edges), n1);
}

EdgeColoredGraph random_proper_complete_bipartite(std::size_t s, std::size_t big_t,
                                                  std::uint64_t seed) {
  if (s < 1 || big_t < 1) throw std::invalid_argument("need s, T >= 1");
  const std::size_t m = std::max(s, big_t);
  Rng rng(seed);
  // Injection [0, m) -> [0, 4m): the first m entries of a shuffled pool.
  std::vector<Color> pool(4 * m);
  std::iota(pool.begin(), pool.end(), Color{0});
  rng.shuffle(pool);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < big_t; ++j)
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(s + j),
                       pool[(i + j) % m]});
  return EdgeColoredGraph::with_prefix_bipartition(s + big_t, std::move(edges), s);
}

double RecolorParams::exponent() const {
  return static_cast<double>(s + t) / static_cast<double>(density_cap());
}

double RecolorParams::p() const {
  return 8.0 * gamma * std::pow(static_cast<double>(n), -exponent());
}

double RecolorParams::degree_floor() const {
  return gamma * std::pow(static_cast<double>(n), 1.0 - exponent());
}

bool subsets_sparse(std::size_t n, std::span<const Edge> pairs, std::size_t k,
                    std::size_t cap) {
  if (pairs.size() < cap) return true;
  // Only vertices touching a pair can add edges; order them and index pairs
  // by their later endpoint for the suffix bound.
  std::vector<std::size_t> rank(n, SIZE_MAX);
  std::vector<Vertex> active;
  for (const auto& e : pairs)
    for (Vertex x : {e.u, e.v})
      if (rank[x] == SIZE_MAX) {
        rank[x] = 0;
        active.push_back(x);
      }
  std::sort(active.begin(), active.end());
  for (std::size_t i = 0; i < active.size(); ++i) rank[active[i]] = i;
  const std::size_t a = active.size();
  if (a <= k) return pairs.size() < cap;

  std::vector<std::vector<std::size_t>> earlier(a);  // neighbors with lower rank
  std::vector<std::size_t> suffix(a + 1, 0);
  for (const auto& e : pairs) {
    auto x = rank[e.u], y = rank[e.v];
    if (x > y) std::swap(x, y);
    earlier[y].push_back(x);
    ++suffix[y];
  }
  for (std::size_t i = a; i-- > 0;) suffix[i] += suffix[i + 1];

  std::vector<char> chosen(a, 0);
  // Returns true when some completion reaches `cap` edges.
  auto dense = [&](auto&& self, std::size_t i, std::size_t picked,
                   std::size_t edges) -> bool {
    if (edges >= cap) return true;
    if (picked == k || i == a) return false;
    if (edges + suffix[i] < cap) return false;
    if (self(self, i + 1, picked, edges)) return true;
    std::size_t add = 0;
    for (auto j : earlier[i]) add += chosen[j];
    chosen[i] = 1;
    bool hit = self(self, i + 1, picked + 1, edges + add);
    chosen[i] = 0;
    return hit;
  };
  return !dense(dense, 0, 0, 0);
}

bool degree_floor_holds(const OrientedGraph& tournament, std::span<const Edge> pairs,
                        double floor) {
  std::vector<std::size_t> count(tournament.order(), 0);
  for (const auto& e : pairs) {
    // The pair lies in A_v (in-neighborhood of v) exactly when it is an
    // arc into v.
    if (tournament.has_arc(e.u, e.v)) ++count[e.v];
    if (tournament.has_arc(e.v, e.u)) ++count[e.u];
  }
  return std::all_of(count.begin(), count.end(),
                     [&](std::size_t c) { return static_cast<double>(c) > floor; });
}

RecolorResult recolored_tournament(const RecolorParams& params) {
  if (params.n < 3) throw std::invalid_argument("recolored tournament needs n >= 3");
  if (params.s < 1 || params.t < 1 || params.density_cap() <= 0)
    throw std::invalid_argument("need st - s - t > 0");
  if (!(params.gamma >= 0.0) || !std::isfinite(params.gamma))
    throw std::invalid_argument("gamma must be finite and >= 0");
  const double p = params.p();
  if (p > 1.0)
    throw std::invalid_argument("edge probability " + std::to_string(p) + " exceeds 1");
  if (params.max_tries == 0) throw std::invalid_argument("max_tries must be >= 1");

  RecolorResult result;
  result.tournament = circulant_tournament(params.n);
  const auto base = signature(result.tournament);
  const std::size_t k = static_cast<std::size_t>(params.s + params.t);
  const auto cap = static_cast<std::size_t>(params.density_cap());
  const bool exhaustive = params.n <= kExhaustiveDensityLimit;
  auto& stats = result.stats;
  stats.within_hypothesis = params.within_hypothesis();
  stats.exhaustive_density_check = exhaustive;
  stats.subsets_checked_per_attempt = exhaustive ? 0 : params.sampled_subsets;
  const bool degenerate = params.gamma == 0.0;

  Rng rng(params.seed);
  std::vector<Edge> sampled;
  for (;;) {
    if (stats.attempts == params.max_tries) throw RecolorExhausted(stats);
    ++stats.attempts;
    sampled.clear();
    for (Vertex u = 0; u < params.n; ++u)
      for (Vertex v = u + 1; v < params.n; ++v)
        if (rng.coin(p)) sampled.push_back({u, v, 0});

    if (params.check_degree_floor && !degenerate &&
        !degree_floor_holds(result.tournament, sampled, params.degree_floor())) {
      ++stats.rejected_degree;
      continue;
    }
    bool sparse = true;
    if (exhaustive) {
      sparse = subsets_sparse(params.n, sampled, k, cap);
    } else {
      // Sampled check; not a certificate.
      std::vector<std::vector<char>> adj(params.n, std::vector<char>(params.n, 0));
      for (const auto& e : sampled) adj[e.u][e.v] = adj[e.v][e.u] = 1;
      std::vector<Vertex> ids(params.n);
      std::iota(ids.begin(), ids.end(), Vertex{0});
      for (std::size_t trial = 0; trial < params.sampled_subsets && sparse; ++trial) {
        for (std::size_t i = 0; i < k; ++i)
          std::swap(ids[i], ids[i + rng.below(params.n - i)]);
        std::size_t count = 0;
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = i + 1; j < k; ++j) count += adj[ids[i]][ids[j]];
        sparse = count < cap;
      }
    }
    if (!sparse) {
      ++stats.rejected_density;
      continue;
    }
    break;
  }

  const Color fresh_base = base.max_color().value_or(0);
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  std::size_t rank = 0;
  for (auto& e : edges) {
    // Both lists are sorted by (u, v).
    while (rank < sampled.size() &&
           std::pair{sampled[rank].u, sampled[rank].v} < std::pair{e.u, e.v})
      ++rank;
    if (rank < sampled.size() && sampled[rank].u == e.u && sampled[rank].v == e.v) {
      e.c = static_cast<Color>(fresh_base + rank + 1);
      sampled[rank].c = e.c;
    }
  }
  result.graph = EdgeColoredGraph(params.n, std::move(edges));
  result.recolored = std::move(sampled);
  return result;
}

}  // namespace chroma
