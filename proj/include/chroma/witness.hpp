#ifndef CHROMA_WITNESS_HPP
#define CHROMA_WITNESS_HPP

#include <string_view>
#include <vector>

#include "chroma/core.hpp"

namespace chroma {

enum class WitnessKind {
  pc_kst,
  rainbow_kst,
  pc_cycle,
  rainbow_cycle,
  directed_cycle,
  disjoint_cycles,
};

std::string_view to_string(WitnessKind kind);

/// A found structure with its vertex and edge lists.
///
/// Layout of `vertices` by kind:
///   - pc_kst / rainbow_kst: {S, T}; `edges` holds all |S|*|T| edges.
///   - pc_cycle / rainbow_cycle / directed_cycle: {cycle order}; `edges`
///     lists the cycle edges in traversal order, closing edge last. For
///     directed cycles each entry is (tail, head, color) and the color is 0
///     when the source digraph is uncolored.
///   - disjoint_cycles: one list per cycle; `edges` concatenates them.
struct Witness {
  WitnessKind kind = WitnessKind::pc_cycle;
  std::vector<std::vector<Vertex>> vertices;
  std::vector<Edge> edges;
};

/// Builds the cycle witness for a vertex sequence of g (edges looked up in
/// g). Throws std::invalid_argument if a consecutive pair is not adjacent.
Witness cycle_witness(const EdgeColoredGraph& g, std::vector<Vertex> cycle,
                      WitnessKind kind = WitnessKind::pc_cycle);
Witness kst_witness(const EdgeColoredGraph& g, std::vector<Vertex> s_side,
                    std::vector<Vertex> t_side,
                    WitnessKind kind = WitnessKind::pc_kst);

/// Re-checks the claimed property against the host. The edge-colored
/// overload rejects directed-cycle witnesses; the digraph overload accepts
/// only those.
bool verify(const EdgeColoredGraph& g, const Witness& w);
bool verify(const OrientedGraph& d, const Witness& w);

}  // namespace chroma

#endif  // CHROMA_WITNESS_HPP
