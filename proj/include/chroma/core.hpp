#ifndef CHROMA_CORE_HPP
#define CHROMA_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace chroma {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// An undirected edge {u, v} carrying one color. Stored graphs keep u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Color c = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct ColoredArc {
  Vertex tail = 0;
  Vertex head = 0;
  Color c = 0;

  friend auto operator<=>(const ColoredArc&, const ColoredArc&) = default;
};

struct Neighbor {
  Vertex v = 0;
  Color c = 0;

  friend auto operator<=>(const Neighbor&, const Neighbor&) = default;
};

enum class Side : std::uint8_t { first = 0, second = 1 };

inline Side other(Side s) {
  return s == Side::first ? Side::second : Side::first;
}

/// Simple undirected graph with one color per edge and an optional
/// bipartition. Immutable once built; the constructor validates every
/// invariant and throws std::invalid_argument on violation.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  explicit EdgeColoredGraph(std::size_t n, std::vector<Edge> edges = {},
                            std::optional<std::vector<Side>> sides = {});

  /// Bipartition where vertices [0, k) form the first side.
  static EdgeColoredGraph with_prefix_bipartition(std::size_t n,
                                                  std::vector<Edge> edges,
                                                  std::size_t k);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  /// Edges sorted ascending by (u, v) with u < v.
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbors of v sorted by neighbor id.
  std::span<const Neighbor> neighbors(Vertex v) const;

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::optional<Color> color(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return color(u, v).has_value(); }

  bool has_bipartition() const { return sides_.has_value(); }
  Side side(Vertex v) const;
  const std::optional<std::vector<Side>>& sides() const { return sides_; }
  std::vector<Vertex> side_vertices(Side s) const;

  /// Length of the first-side prefix when the bipartition has the form
  /// [0, k) | [k, n); nullopt otherwise or without bipartition.
  std::optional<std::size_t> prefix_split() const;

  std::optional<Color> max_color() const;

  friend bool operator==(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
    return a.edges_ == b.edges_ && a.sides_ == b.sides_ &&
           a.order() == b.order();
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::optional<std::vector<Side>> sides_;
};

/// Loop-free digraph with no anti-parallel pair and no repeated arc.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  explicit OrientedGraph(std::size_t n, std::vector<Arc> arcs = {});

  std::size_t order() const { return out_.size(); }
  std::size_t size() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }
  bool has_arc(Vertex tail, Vertex head) const;

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.order() == b.order() && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Orientation of (a subgraph of) an edge-colored host; arcs keep the
/// host edge colors.
class ColoredOrientation {
 public:
  ColoredOrientation() = default;
  /// Checks the orientation invariants only (used when no host is at hand).
  ColoredOrientation(std::size_t n, std::vector<ColoredArc> arcs);
  /// Additionally checks every arc against an edge of `host` with the
  /// same color.
  ColoredOrientation(const EdgeColoredGraph& host, std::vector<ColoredArc> arcs);

  std::size_t order() const { return graph_.order(); }
  std::size_t size() const { return arcs_.size(); }
  std::span<const ColoredArc> arcs() const { return arcs_; }
  const OrientedGraph& digraph() const { return graph_; }
  std::size_t out_degree(Vertex v) const { return graph_.out_degree(v); }
  std::optional<Color> color(Vertex tail, Vertex head) const;

  std::vector<Color> in_colors(Vertex v) const;
  std::vector<Color> out_colors(Vertex v) const;

  friend bool operator==(const ColoredOrientation& a,
                         const ColoredOrientation& b) {
    return a.order() == b.order() && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<ColoredArc> arcs_;
  OrientedGraph graph_;
};

// Color-degree metrics. All throw std::out_of_range on a bad vertex id.

std::size_t color_degree(const EdgeColoredGraph& g, Vertex v);
/// Throws std::invalid_argument on an empty graph.
std::size_t min_color_degree(const EdgeColoredGraph& g);
std::size_t total_color_degree(const EdgeColoredGraph& g);
std::size_t mono_degree(const EdgeColoredGraph& g, Vertex v);
std::size_t mono_degree_max(const EdgeColoredGraph& g);

/// Sorted distinct colors at v.
std::vector<Color> color_set(const EdgeColoredGraph& g, Vertex v);
/// Sorted distinct colors on edges between two disjoint vertex sets.
std::vector<Color> color_set_between(const EdgeColoredGraph& g,
                                     std::span<const Vertex> a,
                                     std::span<const Vertex> b);

/// Both predicates throw std::invalid_argument when an edge is not in g
/// with the given color.
bool is_properly_colored(const EdgeColoredGraph& g, std::span<const Edge> edges);
bool is_rainbow(const EdgeColoredGraph& g, std::span<const Edge> edges);

/// Keeps, for every vertex on `side`, one edge per incident color (the one
/// to the smallest neighbor id). Requires a bipartition.
EdgeColoredGraph side_proper_subgraph(const EdgeColoredGraph& g, Side side);

/// Deletes edges whose removal keeps both endpoint color degrees, scanning
/// ascending edge order and restarting after each deletion.
EdgeColoredGraph edge_critical_core(const EdgeColoredGraph& g);

/// Spanning subgraph on the same vertex set (and bipartition) keeping only
/// the given edges; the edges must belong to g.
EdgeColoredGraph spanning_subgraph(const EdgeColoredGraph& g,
                                   std::vector<Edge> edges);

}  // namespace chroma

#endif  // CHROMA_CORE_HPP
