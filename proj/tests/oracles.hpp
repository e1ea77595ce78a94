// Brute-force reference implementations used only by the tests. They share
// no code with the library searches.
#ifndef CHROMA_TESTS_ORACLES_HPP
#define CHROMA_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "chroma/core.hpp"

namespace oracle {

using chroma::Color;
using chroma::Edge;
using chroma::EdgeColoredGraph;
using chroma::OrientedGraph;
using chroma::Vertex;

/// Calls fn on every k-subset of pool (ascending); stops early when fn
/// returns true and reports whether it did.
inline bool any_subset(const std::vector<Vertex>& pool, std::size_t k,
                       const std::function<bool(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (pick.size() == k) return fn(pick);
    if (pool.size() - i < k - pick.size()) return false;
    pick.push_back(pool[i]);
    if (rec(i + 1)) return true;
    pick.pop_back();
    return rec(i + 1);
  };
  return rec(0);
}

inline std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

inline int color_matrix(const EdgeColoredGraph& g, Vertex a, Vertex b) {
  auto c = g.color(a, b);
  return c ? static_cast<int>(*c) : -1;
}

/// Existence of a properly colored (or rainbow) K_{s,t} by trying every
/// pair of disjoint subsets.
inline bool kst_exists(const EdgeColoredGraph& g, int s, int t, bool rainbow) {
  const auto all = all_vertices(g.order());
  return any_subset(all, s, [&](const std::vector<Vertex>& S) {
    std::vector<Vertex> rest;
    for (Vertex v : all)
      if (std::find(S.begin(), S.end(), v) == S.end()) rest.push_back(v);
    return any_subset(rest, t, [&](const std::vector<Vertex>& T) {
      std::vector<Color> every;
      for (Vertex a : S) {
        std::set<Color> seen;
        for (Vertex b : T) {
          int c = color_matrix(g, a, b);
          if (c < 0) return false;
          seen.insert(static_cast<Color>(c));
          every.push_back(static_cast<Color>(c));
        }
        if (seen.size() != T.size()) return false;
      }
      for (Vertex b : T) {
        std::set<Color> seen;
        for (Vertex a : S) seen.insert(static_cast<Color>(color_matrix(g, a, b)));
        if (seen.size() != S.size()) return false;
      }
      if (rainbow) {
        std::set<Color> distinct(every.begin(), every.end());
        if (distinct.size() != every.size()) return false;
      }
      return true;
    });
  });
}

/// Every simple cycle as a vertex sequence, each counted once per starting
/// point and direction, found by extending paths from every start.
inline void each_cycle(std::size_t n, const std::function<bool(Vertex, Vertex)>& edge,
                       std::size_t max_len,
                       const std::function<void(const std::vector<Vertex>&)>& fn) {
  std::vector<Vertex> path;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&] {
    const Vertex last = path.back();
    if (path.size() >= 3 && edge(last, path.front())) fn(path);
    if (path.size() == max_len) return;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || !edge(last, w)) continue;
      used[w] = 1;
      path.push_back(w);
      rec();
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    rec();
    used[s] = 0;
  }
}

inline bool cycle_is_pc(const EdgeColoredGraph& g, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  for (std::size_t i = 0; i < k; ++i) {
    int a = color_matrix(g, c[(i + k - 1) % k], c[i]);
    int b = color_matrix(g, c[i], c[(i + 1) % k]);
    if (a == b) return false;
  }
  return true;
}

/// Length of the shortest properly colored cycle of length <= max_len.
inline std::optional<std::size_t> shortest_pc_cycle(const EdgeColoredGraph& g,
                                                    std::size_t max_len) {
  std::optional<std::size_t> best;
  each_cycle(
      g.order(), [&](Vertex a, Vertex b) { return g.adjacent(a, b); }, max_len,
      [&](const std::vector<Vertex>& c) {
        if (cycle_is_pc(g, c) && (!best || c.size() < *best)) best = c.size();
      });
  return best;
}

inline bool has_pc_cycle_of_length(const EdgeColoredGraph& g, std::size_t len) {
  bool hit = false;
  each_cycle(
      g.order(), [&](Vertex a, Vertex b) { return g.adjacent(a, b); }, len,
      [&](const std::vector<Vertex>& c) { hit |= c.size() == len && cycle_is_pc(g, c); });
  return hit;
}

inline bool has_rainbow_c4(const EdgeColoredGraph& g) {
  bool hit = false;
  each_cycle(
      g.order(), [&](Vertex a, Vertex b) { return g.adjacent(a, b); }, 4,
      [&](const std::vector<Vertex>& c) {
        if (c.size() != 4) return;
        std::set<int> colors;
        for (std::size_t i = 0; i < 4; ++i) colors.insert(color_matrix(g, c[i], c[(i + 1) % 4]));
        hit |= colors.size() == 4;
      });
  return hit;
}

inline std::optional<std::size_t> directed_girth(const OrientedGraph& d) {
  std::optional<std::size_t> best;
  each_cycle(
      d.order(), [&](Vertex a, Vertex b) { return d.has_arc(a, b); }, d.order(),
      [&](const std::vector<Vertex>& c) {
        if (!best || c.size() < *best) best = c.size();
      });
  return best;
}

inline std::size_t count_colors(const EdgeColoredGraph& g, Vertex v) {
  std::set<Color> cs;
  for (const auto& e : g.edges())
    if (e.u == v || e.v == v) cs.insert(e.c);
  return cs.size();
}

/// Restart-after-deletion scan, recomputing color degrees from scratch.
inline EdgeColoredGraph naive_core(const EdgeColoredGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::vector<Edge> without = edges;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
      EdgeColoredGraph a(g.order(), edges), b(g.order(), without);
      if (count_colors(a, edges[i].u) == count_colors(b, edges[i].u) &&
          count_colors(a, edges[i].v) == count_colors(b, edges[i].v)) {
        edges = std::move(without);
        changed = true;
        break;
      }
    }
  }
  return EdgeColoredGraph(g.order(), std::move(edges), g.sides());
}

/// U-growth exactly as worded: rescan V1 \ U from the smallest id after
/// every insertion. Returns U in insertion order.
inline std::vector<Vertex> naive_growth(const EdgeColoredGraph& g0, int s,
                                        std::size_t threshold) {
  const auto first = g0.side_vertices(chroma::Side::first);
  std::vector<Vertex> U;
  auto colors_to_u = [&](Vertex v) {
    std::set<Color> cs;
    for (Vertex u : U)
      if (auto c = g0.color(u, v)) cs.insert(*c);
    return cs;
  };
  for (;;) {
    bool added = false;
    for (Vertex u : first) {
      if (std::find(U.begin(), U.end(), u) != U.end()) continue;
      std::size_t count = 0;
      for (const auto& nb : g0.neighbors(u)) {
        auto cs = colors_to_u(nb.v);
        if (cs.size() >= static_cast<std::size_t>(s - 1)) continue;  // saturated
        if (cs.count(nb.c)) continue;
        ++count;
      }
      if (count >= threshold) {
        U.push_back(u);
        added = true;
        break;
      }
    }
    if (!added) return U;
  }
}

/// True iff every k-subset spans fewer than cap pairs (bitmask enumeration).
inline bool subsets_sparse(std::size_t n, const std::vector<Edge>& pairs, std::size_t k,
                           std::size_t cap) {
  if (k > n) k = n;
  const auto all = all_vertices(n);
  return !any_subset(all, k, [&](const std::vector<Vertex>& S) {
    std::size_t count = 0;
    for (const auto& e : pairs)
      count += std::binary_search(S.begin(), S.end(), e.u) &&
               std::binary_search(S.begin(), S.end(), e.v);
    return count >= cap;
  });
}

}  // namespace oracle

#endif  // CHROMA_TESTS_ORACLES_HPP
