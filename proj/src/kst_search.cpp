#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "budget.hpp"
#include "chroma/detectors.hpp"
#include "chroma/extraction.hpp"

namespace chroma {

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted_none: return "exhausted-none";
    case SearchStatus::budget_exceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

class KstSearch {
 public:
  KstSearch(const EdgeColoredGraph& g, int s, int t, bool rainbow,
            const SearchBudget& budget)
      : g_(g), s_(static_cast<std::size_t>(s)), t_(static_cast<std::size_t>(t)),
        rainbow_(rainbow), meter_(budget) {}

  SearchOutcome run() {
    SearchOutcome out;
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (g_.degree(v) >= t_) all.push_back(v);
    bool found = choose_s(0, all, all);
    out.stats = meter_.stats();
    if (found) {
      auto w = kst_witness(g_, s_side_, t_side_,
                           rainbow_ ? WitnessKind::rainbow_kst : WitnessKind::pc_kst);
      if (!verify(g_, w)) throw std::logic_error("K_{s,t} witness failed verification");
      out.status = SearchStatus::found;
      out.witness = std::move(w);
    } else {
      out.status = meter_.exceeded() ? SearchStatus::budget_exceeded
                                     : SearchStatus::exhausted_none;
    }
    return out;
  }

 private:
  std::vector<Vertex> common_with(const std::vector<Vertex>& pool, Vertex v) const {
    std::vector<Vertex> out;
    auto nbs = g_.neighbors(v);
    auto it = nbs.begin();
    for (Vertex w : pool) {
      while (it != nbs.end() && it->v < w) ++it;
      if (it != nbs.end() && it->v == w) out.push_back(w);
    }
    return out;
  }

  // Picks S in ascending order from `pool`; `common` is the common
  // neighborhood of the S-vertices chosen so far.
  bool choose_s(std::size_t from, const std::vector<Vertex>& pool,
                const std::vector<Vertex>& common) {
    if (s_side_.size() == s_) return choose_candidates(common);
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool.size() - i < s_ - s_side_.size()) return false;
      if (!meter_.tick()) return false;
      Vertex v = pool[i];
      std::vector<Vertex> next;
      if (s_side_.empty()) {
        for (const auto& nb : g_.neighbors(v)) next.push_back(nb.v);
      } else {
        next = common_with(common, v);
      }
      if (next.size() < t_) continue;
      s_side_.push_back(v);
      if (choose_s(i + 1, pool, next)) return true;
      s_side_.pop_back();
      if (meter_.exceeded()) return false;
    }
    return false;
  }

  bool choose_candidates(const std::vector<Vertex>& common) {
    star_colors_.clear();
    candidates_.clear();
    for (Vertex w : common) {
      std::vector<Color> colors;
      for (Vertex a : s_side_) colors.push_back(*g_.color(a, w));
      auto sorted = colors;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
      candidates_.push_back(w);
      star_colors_.push_back(std::move(colors));
    }
    if (candidates_.size() < t_) return false;
    used_.assign(s_, {});
    used_all_.clear();
    t_side_.clear();
    return choose_t(0);
  }

  bool admissible(std::size_t idx) const {
    const auto& colors = star_colors_[idx];
    for (std::size_t i = 0; i < s_; ++i) {
      if (rainbow_) {
        if (used_all_.count(colors[i])) return false;
      } else if (used_[i].count(colors[i])) {
        return false;
      }
    }
    return true;
  }

  bool choose_t(std::size_t from) {
    if (t_side_.size() == t_) return true;
    for (std::size_t idx = from; idx < candidates_.size(); ++idx) {
      if (candidates_.size() - idx < t_ - t_side_.size()) return false;
      if (!meter_.tick()) return false;
      if (!admissible(idx)) continue;
      const auto& colors = star_colors_[idx];
      for (std::size_t i = 0; i < s_; ++i) {
        used_[i].insert(colors[i]);
        used_all_.insert(colors[i]);
      }
      t_side_.push_back(candidates_[idx]);
      if (choose_t(idx + 1)) return true;
      t_side_.pop_back();
      for (std::size_t i = 0; i < s_; ++i) {
        used_[i].erase(colors[i]);
        used_all_.erase(colors[i]);
      }
      if (meter_.exceeded()) return false;
    }
    return false;
  }

  const EdgeColoredGraph& g_;
  std::size_t s_;
  std::size_t t_;
  bool rainbow_;
  detail::BudgetMeter meter_;
  std::vector<Vertex> s_side_;
  std::vector<Vertex> t_side_;
  std::vector<Vertex> candidates_;
  std::vector<std::vector<Color>> star_colors_;
  std::vector<std::set<Color>> used_;
  std::set<Color> used_all_;
};

void check_sizes(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("need s, t >= 1");
}

}  // namespace

SearchOutcome find_pc_kst(const EdgeColoredGraph& g, int s, int t,
                          const SearchBudget& budget) {
  check_sizes(s, t);
  return KstSearch(g, s, t, false, budget).run();
}

SearchOutcome find_rainbow_kst(const EdgeColoredGraph& g, int s, int t,
                               const SearchBudget& budget) {
  check_sizes(s, t);
  return KstSearch(g, s, t, true, budget).run();
}

Witness extract_rainbow_kst(const EdgeColoredGraph& g, std::vector<Vertex> s_side,
                            std::vector<Vertex> b_side, int t) {
  if (t < 1) throw std::invalid_argument("need t >= 1");
  if (s_side.empty()) throw std::invalid_argument("S must be nonempty");
  std::sort(s_side.begin(), s_side.end());
  std::sort(b_side.begin(), b_side.end());
  const auto s = s_side.size();
  const auto tt = static_cast<std::size_t>(t);
  if (b_side.size() < tt + s * (tt - 1) * (s - 1))
    throw std::invalid_argument("|B| < t + s(t-1)(s-1)");
  std::set<Vertex> seen(s_side.begin(), s_side.end());
  for (Vertex v : b_side)
    if (!seen.insert(v).second) throw std::invalid_argument("S and B overlap");
  for (Vertex v : seen)
    if (v >= g.order()) throw std::invalid_argument("vertex out of range");

  // Complete and properly colored on both sides.
  for (Vertex a : s_side) {
    std::set<Color> colors;
    for (Vertex b : b_side) {
      auto c = g.color(a, b);
      if (!c) throw std::invalid_argument("G[S,B] is not complete");
      if (!colors.insert(*c).second)
        throw std::invalid_argument("G[S,B] is not properly colored");
    }
  }
  for (Vertex b : b_side) {
    std::set<Color> colors;
    for (Vertex a : s_side)
      if (!colors.insert(*g.color(a, b)).second)
        throw std::invalid_argument("G[S,B] is not properly colored");
  }

  std::vector<Vertex> chosen;
  std::set<Color> used;  // C(S, B*)
  while (chosen.size() < tt) {
    // F_u = {v in B \ B* : c(uv) in C(S, B*)}; take the smallest vertex of
    // B outside B* and every F_u.
    std::set<Vertex> blocked(chosen.begin(), chosen.end());
    for (Vertex u : s_side)
      for (Vertex v : b_side)
        if (!blocked.count(v) && used.count(*g.color(u, v))) blocked.insert(v);
    auto it = std::find_if(b_side.begin(), b_side.end(),
                           [&](Vertex v) { return !blocked.count(v); });
    if (it == b_side.end())
      throw std::logic_error("rainbow extraction ran out of candidates");
    chosen.push_back(*it);
    for (Vertex u : s_side) used.insert(*g.color(u, *it));
  }
  auto w = kst_witness(g, s_side, chosen, WitnessKind::rainbow_kst);
  if (!verify(g, w)) throw std::logic_error("rainbow K_{s,t} failed verification");
  return w;
}

ThresholdCheck check_total_degree_threshold(const EdgeColoredGraph& g, int s, int t) {
  const double sig = sigma(s, t);
  const double e = 1.0 - 1.0 / s;
  ThresholdCheck r;
  r.total = static_cast<double>(total_color_degree(g));
  if (g.has_bipartition()) {
    r.bipartite_form = true;
    auto n1 = static_cast<double>(g.side_vertices(Side::first).size());
    auto n2 = static_cast<double>(g.order()) - n1;
    r.threshold = n1 * n2 + sig * (n1 * std::pow(n2, e) + n2 * std::pow(n1, e)) +
                  s * (n1 + n2);
  } else {
    auto n = static_cast<double>(g.order());
    r.threshold = n * n / 2 + sig * std::pow(n, 2.0 - 1.0 / s) + s * n;
  }
  r.margin = r.total - r.threshold;
  r.holds = r.total > r.threshold;
  return r;
}

}  // namespace chroma
