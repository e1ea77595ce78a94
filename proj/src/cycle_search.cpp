#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "budget.hpp"
#include "chroma/detectors.hpp"

namespace chroma {

namespace {

// Depth-first search for a properly colored cycle of exactly `length`
// vertices whose smallest vertex is path[0].
class PcCycleSearch {
 public:
  PcCycleSearch(const EdgeColoredGraph& g, detail::BudgetMeter& meter)
      : g_(g), meter_(meter), on_path_(g.order(), 0) {}

  std::optional<std::vector<Vertex>> find(std::size_t length) {
    for (Vertex start = 0; start < g_.order(); ++start) {
      if (g_.degree(start) < 2) continue;
      path_.assign(1, start);
      colors_.clear();
      on_path_[start] = 1;
      bool ok = extend(length);
      on_path_[start] = 0;
      if (ok) return path_;
      if (meter_.exceeded()) return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  bool extend(std::size_t length) {
    const Vertex start = path_.front();
    const Vertex last = path_.back();
    if (path_.size() == length) {
      auto c = g_.color(last, start);
      return c && *c != colors_.back() && *c != colors_.front();
    }
    for (const auto& nb : g_.neighbors(last)) {
      if (nb.v <= start || on_path_[nb.v]) continue;
      if (!colors_.empty() && nb.c == colors_.back()) continue;
      if (!meter_.tick()) return false;
      path_.push_back(nb.v);
      colors_.push_back(nb.c);
      on_path_[nb.v] = 1;
      bool ok = extend(length);
      on_path_[nb.v] = 0;
      if (ok) return true;
      path_.pop_back();
      colors_.pop_back();
      if (meter_.exceeded()) return false;
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  detail::BudgetMeter& meter_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  std::vector<Color> colors_;
};

}  // namespace

SearchOutcome find_pc_cycle_upto(const EdgeColoredGraph& g, std::size_t r,
                                 const SearchBudget& budget) {
  if (r < 3) throw std::invalid_argument("cycle length bound must be >= 3");
  detail::BudgetMeter meter(budget);
  PcCycleSearch search(g, meter);
  SearchOutcome out;
  const std::size_t top = std::min(r, g.order());
  for (std::size_t length = 3; length <= top; ++length) {
    auto cycle = search.find(length);
    if (cycle) {
      auto w = cycle_witness(g, std::move(*cycle));
      if (!verify(g, w)) throw std::logic_error("PC cycle failed verification");
      out.status = SearchStatus::found;
      out.witness = std::move(w);
      out.stats = meter.stats();
      return out;
    }
    if (meter.exceeded()) break;
  }
  out.status = meter.exceeded() ? SearchStatus::budget_exceeded
                                : SearchStatus::exhausted_none;
  out.stats = meter.stats();
  return out;
}

SearchOutcome find_rainbow_c4(const EdgeColoredGraph& g, const SearchBudget& budget) {
  detail::BudgetMeter meter(budget);
  SearchOutcome out;
  // Cycle a-x-b-y with a the smallest vertex and x < y.
  for (Vertex a = 0; a < g.order() && !meter.exceeded(); ++a) {
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (!meter.tick()) break;
      std::vector<Neighbor> common;
      auto nb_b = g.neighbors(b);
      auto it = nb_b.begin();
      for (const auto& x : g.neighbors(a)) {
        if (x.v <= a) continue;
        while (it != nb_b.end() && it->v < x.v) ++it;
        if (it != nb_b.end() && it->v == x.v && x.c != it->c)
          common.push_back({x.v, x.c});
      }
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (!meter.tick()) break;
          Vertex x = common[i].v, y = common[j].v;
          Color ax = common[i].c, ay = common[j].c;
          Color xb = *g.color(x, b), yb = *g.color(y, b);
          Color cs[4] = {ax, xb, yb, ay};
          std::sort(cs, cs + 4);
          if (std::adjacent_find(cs, cs + 4) != cs + 4) continue;
          auto w = cycle_witness(g, {a, x, b, y}, WitnessKind::rainbow_cycle);
          if (!verify(g, w)) throw std::logic_error("rainbow C4 failed verification");
          out.status = SearchStatus::found;
          out.witness = std::move(w);
          out.stats = meter.stats();
          return out;
        }
        if (meter.exceeded()) break;
      }
      if (meter.exceeded()) break;
    }
  }
  out.status = meter.exceeded() ? SearchStatus::budget_exceeded
                                : SearchStatus::exhausted_none;
  out.stats = meter.stats();
  return out;
}

SearchOutcome shortest_directed_cycle(const OrientedGraph& d) {
  const auto start_time = std::chrono::steady_clock::now();
  const std::size_t n = d.order();
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best_len = kUnseen;
  std::vector<Vertex> best;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  std::uint64_t nodes = 0;

  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::deque<Vertex> queue{s};
    std::optional<Vertex> closing;
    while (!queue.empty() && !closing) {
      Vertex u = queue.front();
      queue.pop_front();
      ++nodes;
      // A cycle through s is at least dist[u] + 1 long; no shorter one here.
      if (dist[u] + 1 >= best_len) break;
      for (Vertex w : d.out_neighbors(u)) {
        if (w == s) {
          closing = u;
          break;
        }
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
      }
    }
    if (closing) {
      std::vector<Vertex> cycle;
      for (Vertex x = *closing; x != s; x = parent[x]) cycle.push_back(x);
      cycle.push_back(s);
      std::reverse(cycle.begin(), cycle.end());
      best_len = cycle.size();
      best = std::move(cycle);
    }
  }

  SearchOutcome out;
  out.stats.nodes = nodes;
  if (!best.empty()) {
    Witness w;
    w.kind = WitnessKind::directed_cycle;
    for (std::size_t i = 0; i < best.size(); ++i)
      w.edges.push_back({best[i], best[(i + 1) % best.size()], 0});
    w.vertices.push_back(std::move(best));
    if (!verify(d, w)) throw std::logic_error("directed cycle failed verification");
    out.status = SearchStatus::found;
    out.witness = std::move(w);
  }
  out.stats.elapsed = std::chrono::steady_clock::now() - start_time;
  return out;
}

}  // namespace chroma
