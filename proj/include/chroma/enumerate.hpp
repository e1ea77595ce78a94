#ifndef CHROMA_ENUMERATE_HPP
#define CHROMA_ENUMERATE_HPP

#include <cstddef>
#include <vector>

#include "chroma/core.hpp"

namespace chroma {

// Exhaustive enumerators for small graphs, used as ground truth by the
// verification suites. Exponential; intended for n <= ~10.

/// Every simple cycle of the underlying graph with at most max_len vertices,
/// once each: starting at its smallest vertex, oriented so that the second
/// vertex is smaller than the last.
std::vector<std::vector<Vertex>> enumerate_cycles(const EdgeColoredGraph& g,
                                                  std::size_t max_len);

/// Every directed cycle, once each, starting at its smallest vertex.
std::vector<std::vector<Vertex>> enumerate_directed_cycles(const OrientedGraph& d,
                                                           std::size_t max_len);

/// Rotates/reflects a cycle into the canonical form used above.
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

bool is_triangle_free(const EdgeColoredGraph& g);

}  // namespace chroma

#endif  // CHROMA_ENUMERATE_HPP
