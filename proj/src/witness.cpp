#include "chroma/witness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace chroma {

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::pc_kst: return "pc-kst";
    case WitnessKind::rainbow_kst: return "rainbow-kst";
    case WitnessKind::pc_cycle: return "pc-cycle";
    case WitnessKind::rainbow_cycle: return "rainbow-cycle";
    case WitnessKind::directed_cycle: return "directed-cycle";
    case WitnessKind::disjoint_cycles: return "disjoint-cycles";
  }
  return "unknown";
}

namespace {

std::vector<Edge> cycle_edges(const EdgeColoredGraph& g,
                              const std::vector<Vertex>& cycle) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex a = cycle[i];
    Vertex b = cycle[(i + 1) % cycle.size()];
    auto c = g.color(a, b);
    if (!c)
      throw std::invalid_argument("cycle vertices " + std::to_string(a) +
                                  " and " + std::to_string(b) +
                                  " are not adjacent");
    edges.push_back({a, b, *c});
  }
  return edges;
}

bool distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool edges_match(const EdgeColoredGraph& g, std::span<const Edge> edges) {
  for (const auto& e : edges) {
    if (e.u >= g.order() || e.v >= g.order()) return false;
    auto c = g.color(e.u, e.v);
    if (!c || *c != e.c) return false;
  }
  return true;
}

// Cycle of length >= 3 whose edges are exactly the listed traversal.
bool cycle_shape(const std::vector<Vertex>& cycle, std::span<const Edge> edges) {
  if (cycle.size() < 3 || edges.size() != cycle.size()) return false;
  if (!distinct(cycle)) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex a = cycle[i];
    Vertex b = cycle[(i + 1) % cycle.size()];
    if (edges[i].u != a || edges[i].v != b) return false;
  }
  return true;
}

bool cyclic_proper(std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].c == edges[(i + 1) % edges.size()].c) return false;
  return true;
}

bool verify_kst(const EdgeColoredGraph& g, const Witness& w, bool rainbow) {
  if (w.vertices.size() != 2) return false;
  const auto& s = w.vertices[0];
  const auto& t = w.vertices[1];
  if (s.empty() || t.empty()) return false;
  std::vector<Vertex> all(s);
  all.insert(all.end(), t.begin(), t.end());
  if (!distinct(all)) return false;
  if (w.edges.size() != s.size() * t.size()) return false;
  if (!edges_match(g, w.edges)) return false;
  std::set<std::pair<Vertex, Vertex>> listed;
  for (const auto& e : w.edges) listed.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  for (Vertex a : s)
    for (Vertex b : t)
      if (!listed.count({std::min(a, b), std::max(a, b)})) return false;
  std::vector<Edge> canonical;
  for (const auto& e : w.edges)
    canonical.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.c});
  return rainbow ? is_rainbow(g, canonical) : is_properly_colored(g, canonical);
}

}  // namespace

Witness cycle_witness(const EdgeColoredGraph& g, std::vector<Vertex> cycle,
                      WitnessKind kind) {
  Witness w;
  w.kind = kind;
  w.edges = cycle_edges(g, cycle);
  w.vertices.push_back(std::move(cycle));
  return w;
}

Witness kst_witness(const EdgeColoredGraph& g, std::vector<Vertex> s_side,
                    std::vector<Vertex> t_side, WitnessKind kind) {
  Witness w;
  w.kind = kind;
  for (Vertex a : s_side)
    for (Vertex b : t_side) {
      auto c = g.color(a, b);
      if (!c) throw std::invalid_argument("K_{s,t} witness is not complete");
      w.edges.push_back({a, b, *c});
    }
  w.vertices = {std::move(s_side), std::move(t_side)};
  return w;
}

bool verify(const EdgeColoredGraph& g, const Witness& w) {
  switch (w.kind) {
    case WitnessKind::pc_kst: return verify_kst(g, w, false);
    case WitnessKind::rainbow_kst: return verify_kst(g, w, true);
    case WitnessKind::pc_cycle:
    case WitnessKind::rainbow_cycle: {
      if (w.vertices.size() != 1) return false;
      if (!cycle_shape(w.vertices[0], w.edges)) return false;
      if (!edges_match(g, w.edges)) return false;
      if (w.kind == WitnessKind::pc_cycle) return cyclic_proper(w.edges);
      std::set<Color> colors;
      for (const auto& e : w.edges)
        if (!colors.insert(e.c).second) return false;
      return true;
    }
    case WitnessKind::disjoint_cycles: {
      if (w.vertices.empty()) return false;
      std::vector<Vertex> all;
      std::size_t offset = 0;
      for (const auto& cycle : w.vertices) {
        if (offset + cycle.size() > w.edges.size()) return false;
        std::span<const Edge> part(w.edges.data() + offset, cycle.size());
        if (!cycle_shape(cycle, part)) return false;
        if (!edges_match(g, part) || !cyclic_proper(part)) return false;
        all.insert(all.end(), cycle.begin(), cycle.end());
        offset += cycle.size();
      }
      return offset == w.edges.size() && distinct(all);
    }
    case WitnessKind::directed_cycle: return false;
  }
  return false;
}

bool verify(const OrientedGraph& d, const Witness& w) {
  if (w.kind != WitnessKind::directed_cycle || w.vertices.size() != 1)
    return false;
  const auto& cycle = w.vertices[0];
  if (cycle.size() < 3 || !distinct(cycle) || w.edges.size() != cycle.size())
    return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex a = cycle[i];
    Vertex b = cycle[(i + 1) % cycle.size()];
    if (w.edges[i].u != a || w.edges[i].v != b) return false;
    if (!d.has_arc(a, b)) return false;
  }
  return true;
}

}  // namespace chroma
