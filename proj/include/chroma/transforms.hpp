#ifndef CHROMA_TRANSFORMS_HPP
#define CHROMA_TRANSFORMS_HPP

#include <cstddef>

#include "chroma/core.hpp"

namespace chroma {

/// Underlying graph of d with every edge colored by the head of its arc.
EdgeColoredGraph signature(const OrientedGraph& d);

/// Vertex numbering of the dual graph: v^(1) = v, v^(2) = n + v.
struct DualVertexMap {
  std::size_t n = 0;

  Vertex first(Vertex v) const { return v; }
  Vertex second(Vertex v) const { return static_cast<Vertex>(n + v); }
  /// Original vertex of a dual vertex.
  Vertex original(Vertex x) const {
    return x < n ? x : static_cast<Vertex>(x - n);
  }
  bool is_first(Vertex x) const { return x < n; }
};

/// Bipartite double on 2n vertices: each edge uv of color c becomes
/// u^(1)v^(2) and v^(1)u^(2), both colored c. First side is [0, n).
EdgeColoredGraph dual_graph(const EdgeColoredGraph& g);

/// Replaces vertex i by the block {k*i, ..., k*i + k - 1} and each arc
/// (i, j) by all arcs from block i to block j. Requires k >= 1.
OrientedGraph blow_up(const OrientedGraph& d, std::size_t k);

}  // namespace chroma

#endif  // CHROMA_TRANSFORMS_HPP
