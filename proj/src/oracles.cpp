#include <algorithm>

#include "chroma/enumerate.hpp"

namespace chroma {

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back())
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::vector<std::vector<Vertex>> enumerate_cycles(const EdgeColoredGraph& g,
                                                  std::size_t max_len) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> on(g.order(), 0);
  auto walk = [&](auto&& self) -> void {
    const Vertex start = path.front();
    for (const auto& nb : g.neighbors(path.back())) {
      if (nb.v == start && path.size() >= 3 && path[1] < path.back())
        out.push_back(path);
      if (nb.v <= start || on[nb.v] || path.size() == max_len) continue;
      on[nb.v] = 1;
      path.push_back(nb.v);
      self(self);
      path.pop_back();
      on[nb.v] = 0;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    on[s] = 1;
    walk(walk);
    on[s] = 0;
  }
  return out;
}

std::vector<std::vector<Vertex>> enumerate_directed_cycles(const OrientedGraph& d,
                                                           std::size_t max_len) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<char> on(d.order(), 0);
  auto walk = [&](auto&& self) -> void {
    const Vertex start = path.front();
    for (Vertex w : d.out_neighbors(path.back())) {
      if (w == start) out.push_back(path);
      if (w <= start || on[w] || path.size() == max_len) continue;
      on[w] = 1;
      path.push_back(w);
      self(self);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (Vertex s = 0; s < d.order(); ++s) {
    path.assign(1, s);
    on[s] = 1;
    walk(walk);
    on[s] = 0;
  }
  return out;
}

bool is_triangle_free(const EdgeColoredGraph& g) {
  for (const auto& e : g.edges())
    for (const auto& nb : g.neighbors(e.u))
      if (nb.v != e.v && g.adjacent(nb.v, e.v)) return false;
  return true;
}

}  // namespace chroma
