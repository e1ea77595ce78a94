#include "chroma/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace chroma {

namespace {

void sort_unique(std::vector<Color>& colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
}

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + "," +
         std::to_string(e.c) + ")";
}

}  // namespace

EdgeColoredGraph::EdgeColoredGraph(std::size_t n, std::vector<Edge> edges,
                                   std::optional<std::vector<Side>> sides)
    : edges_(std::move(edges)), adjacency_(n), sides_(std::move(sides)) {
  if (sides_ && sides_->size() != n)
    throw std::invalid_argument("bipartition size does not match vertex count");
  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("edge " + edge_text(e) + " has vertex >= n");
    if (e.u == e.v)
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (sides_ && (*sides_)[e.u] == (*sides_)[e.v])
      throw std::invalid_argument("edge " + edge_text(e) +
                                  " does not cross the bipartition");
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw std::invalid_argument("duplicate edge {" +
                                  std::to_string(edges_[i].u) + "," +
                                  std::to_string(edges_[i].v) + "}");
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.c});
    adjacency_[e.v].push_back({e.u, e.c});
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

EdgeColoredGraph EdgeColoredGraph::with_prefix_bipartition(
    std::size_t n, std::vector<Edge> edges, std::size_t k) {
  if (k > n) throw std::invalid_argument("bipartition prefix exceeds n");
  std::vector<Side> sides(n, Side::second);
  std::fill_n(sides.begin(), k, Side::first);
  return EdgeColoredGraph(n, std::move(edges), std::move(sides));
}

void EdgeColoredGraph::check_vertex(Vertex v) const {
  if (v >= order())
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

std::span<const Neighbor> EdgeColoredGraph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::optional<Color> EdgeColoredGraph::color(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& adj = adjacency_[u];
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& nb, Vertex x) { return nb.v < x; });
  if (it == adj.end() || it->v != v) return std::nullopt;
  return it->c;
}

Side EdgeColoredGraph::side(Vertex v) const {
  check_vertex(v);
  if (!sides_) throw std::logic_error("graph has no bipartition");
  return (*sides_)[v];
}

std::vector<Vertex> EdgeColoredGraph::side_vertices(Side s) const {
  if (!sides_) throw std::logic_error("graph has no bipartition");
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if ((*sides_)[v] == s) out.push_back(v);
  return out;
}

std::optional<std::size_t> EdgeColoredGraph::prefix_split() const {
  if (!sides_) return std::nullopt;
  const auto& s = *sides_;
  auto k = static_cast<std::size_t>(
      std::find(s.begin(), s.end(), Side::second) - s.begin());
  if (std::find(s.begin() + static_cast<std::ptrdiff_t>(k), s.end(),
                Side::first) != s.end())
    return std::nullopt;
  return k;
}

std::optional<Color> EdgeColoredGraph::max_color() const {
  if (edges_.empty()) return std::nullopt;
  return std::max_element(edges_.begin(), edges_.end(),
                          [](const Edge& a, const Edge& b) { return a.c < b.c; })
      ->c;
}

OrientedGraph::OrientedGraph(std::size_t n, std::vector<Arc> arcs)
    : arcs_(std::move(arcs)), out_(n), in_(n) {
  for (const auto& a : arcs_) {
    if (a.tail >= n || a.head >= n)
      throw std::invalid_argument("arc " + std::to_string(a.tail) + "->" +
                                  std::to_string(a.head) + " has vertex >= n");
    if (a.tail == a.head)
      throw std::invalid_argument("loop at vertex " + std::to_string(a.tail));
  }
  std::sort(arcs_.begin(), arcs_.end());
  for (std::size_t i = 1; i < arcs_.size(); ++i)
    if (arcs_[i] == arcs_[i - 1])
      throw std::invalid_argument("duplicate arc " +
                                  std::to_string(arcs_[i].tail) + "->" +
                                  std::to_string(arcs_[i].head));
  for (const auto& a : arcs_) {
    out_[a.tail].push_back(a.head);
    in_[a.head].push_back(a.tail);
  }
  for (auto& l : in_) std::sort(l.begin(), l.end());
  for (const auto& a : arcs_)
    if (has_arc(a.head, a.tail))
      throw std::invalid_argument("anti-parallel arcs between " +
                                  std::to_string(a.tail) + " and " +
                                  std::to_string(a.head));
}

std::span<const Vertex> OrientedGraph::out_neighbors(Vertex v) const {
  if (v >= order()) throw std::out_of_range("vertex out of range");
  return out_[v];
}

std::span<const Vertex> OrientedGraph::in_neighbors(Vertex v) const {
  if (v >= order()) throw std::out_of_range("vertex out of range");
  return in_[v];
}

bool OrientedGraph::has_arc(Vertex tail, Vertex head) const {
  if (tail >= order() || head >= order()) return false;
  return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
}

namespace {

std::vector<Arc> strip(const std::vector<ColoredArc>& arcs) {
  std::vector<Arc> out;
  out.reserve(arcs.size());
  for (const auto& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

}  // namespace

ColoredOrientation::ColoredOrientation(std::size_t n,
                                       std::vector<ColoredArc> arcs)
    : arcs_(std::move(arcs)), graph_(n, strip(arcs_)) {
  std::sort(arcs_.begin(), arcs_.end());
}

ColoredOrientation::ColoredOrientation(const EdgeColoredGraph& host,
                                       std::vector<ColoredArc> arcs)
    : ColoredOrientation(host.order(), std::move(arcs)) {
  for (const auto& a : arcs_) {
    auto c = host.color(a.tail, a.head);
    if (!c || *c != a.c)
      throw std::invalid_argument("arc " + std::to_string(a.tail) + "->" +
                                  std::to_string(a.head) +
                                  " does not match a host edge color");
  }
}

std::optional<Color> ColoredOrientation::color(Vertex tail, Vertex head) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(),
                             ColoredArc{tail, head, 0});
  if (it == arcs_.end() || it->tail != tail || it->head != head)
    return std::nullopt;
  return it->c;
}

std::vector<Color> ColoredOrientation::in_colors(Vertex v) const {
  std::vector<Color> out;
  for (const auto& a : arcs_)
    if (a.head == v) out.push_back(a.c);
  sort_unique(out);
  return out;
}

std::vector<Color> ColoredOrientation::out_colors(Vertex v) const {
  std::vector<Color> out;
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), ColoredArc{v, 0, 0});
  for (; it != arcs_.end() && it->tail == v; ++it) out.push_back(it->c);
  sort_unique(out);
  return out;
}

std::vector<Color> color_set(const EdgeColoredGraph& g, Vertex v) {
  std::vector<Color> out;
  for (const auto& nb : g.neighbors(v)) out.push_back(nb.c);
  sort_unique(out);
  return out;
}

std::size_t color_degree(const EdgeColoredGraph& g, Vertex v) {
  return color_set(g, v).size();
}

std::size_t min_color_degree(const EdgeColoredGraph& g) {
  if (g.order() == 0) throw std::invalid_argument("empty graph");
  std::size_t best = color_degree(g, 0);
  for (Vertex v = 1; v < g.order(); ++v)
    best = std::min(best, color_degree(g, v));
  return best;
}

std::size_t total_color_degree(const EdgeColoredGraph& g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += color_degree(g, v);
  return total;
}

std::size_t mono_degree(const EdgeColoredGraph& g, Vertex v) {
  std::vector<Color> colors;
  for (const auto& nb : g.neighbors(v)) colors.push_back(nb.c);
  std::sort(colors.begin(), colors.end());
  std::size_t best = 0;
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    best = std::max(best, j - i);
    i = j;
  }
  return best;
}

std::size_t mono_degree_max(const EdgeColoredGraph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, mono_degree(g, v));
  return best;
}

std::vector<Color> color_set_between(const EdgeColoredGraph& g,
                                     std::span<const Vertex> a,
                                     std::span<const Vertex> b) {
  std::vector<char> in_b(g.order(), 0);
  for (Vertex v : b) {
    if (v >= g.order()) throw std::out_of_range("vertex out of range");
    in_b[v] = 1;
  }
  for (Vertex v : a) {
    if (v >= g.order()) throw std::out_of_range("vertex out of range");
    if (in_b[v]) throw std::invalid_argument("vertex sets overlap");
  }
  std::vector<Color> out;
  for (Vertex u : a)
    for (const auto& nb : g.neighbors(u))
      if (in_b[nb.v]) out.push_back(nb.c);
  sort_unique(out);
  return out;
}

namespace {

void check_membership(const EdgeColoredGraph& g, std::span<const Edge> edges) {
  for (const auto& e : edges) {
    if (e.u >= g.order() || e.v >= g.order())
      throw std::invalid_argument("edge " + edge_text(e) + " is not in the graph");
    auto c = g.color(e.u, e.v);
    if (!c || *c != e.c)
      throw std::invalid_argument("edge " + edge_text(e) + " is not in the graph");
  }
}

}  // namespace

bool is_properly_colored(const EdgeColoredGraph& g, std::span<const Edge> edges) {
  check_membership(g, edges);
  std::set<std::pair<Vertex, Color>> seen;
  for (const auto& e : edges) {
    if (!seen.insert({e.u, e.c}).second) return false;
    if (!seen.insert({e.v, e.c}).second) return false;
  }
  return true;
}

bool is_rainbow(const EdgeColoredGraph& g, std::span<const Edge> edges) {
  check_membership(g, edges);
  std::set<Color> seen;
  for (const auto& e : edges)
    if (!seen.insert(e.c).second) return false;
  return true;
}

EdgeColoredGraph side_proper_subgraph(const EdgeColoredGraph& g, Side side) {
  if (!g.has_bipartition())
    throw std::invalid_argument("side_proper_subgraph requires a bipartition");
  std::vector<Edge> kept;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.side(u) != side) continue;
    // Neighbors are sorted by id, so the first edge seen per color is the
    // one to the smallest neighbor.
    std::set<Color> seen;
    for (const auto& nb : g.neighbors(u))
      if (seen.insert(nb.c).second) kept.push_back({u, nb.v, nb.c});
  }
  return EdgeColoredGraph(g.order(), std::move(kept), g.sides());
}

EdgeColoredGraph edge_critical_core(const EdgeColoredGraph& g) {
  // Multiplicity of each color at each vertex. An edge is deletable iff its
  // color appears at least twice at both endpoints. Deletions only lower
  // multiplicities, so an edge found non-deletable stays so and a single
  // ascending pass equals the restart-after-deletion scan.
  std::vector<std::map<Color, std::size_t>> mult(g.order());
  for (const auto& e : g.edges()) {
    ++mult[e.u][e.c];
    ++mult[e.v][e.c];
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (mult[e.u][e.c] >= 2 && mult[e.v][e.c] >= 2) {
      --mult[e.u][e.c];
      --mult[e.v][e.c];
    } else {
      kept.push_back(e);
    }
  }
  return EdgeColoredGraph(g.order(), std::move(kept), g.sides());
}

EdgeColoredGraph spanning_subgraph(const EdgeColoredGraph& g,
                                   std::vector<Edge> edges) {
  check_membership(g, edges);
  return EdgeColoredGraph(g.order(), std::move(edges), g.sides());
}

}  // namespace chroma
