#include "chroma/transforms.hpp"

#include <stdexcept>

namespace chroma {

EdgeColoredGraph signature(const OrientedGraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.size());
  for (const auto& a : d.arcs()) edges.push_back({a.tail, a.head, a.head});
  return EdgeColoredGraph(d.order(), std::move(edges));
}

EdgeColoredGraph dual_graph(const EdgeColoredGraph& g) {
  DualVertexMap map{g.order()};
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const auto& e : g.edges()) {
    edges.push_back({map.first(e.u), map.second(e.v), e.c});
    edges.push_back({map.first(e.v), map.second(e.u), e.c});
  }
  return EdgeColoredGraph::with_prefix_bipartition(2 * g.order(), std::move(edges),
                                                   g.order());
}

OrientedGraph blow_up(const OrientedGraph& d, std::size_t k) {
  if (k == 0) throw std::invalid_argument("blow-up factor must be >= 1");
  std::vector<Arc> arcs;
  arcs.reserve(d.size() * k * k);
  for (const auto& a : d.arcs())
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y)
        arcs.push_back({static_cast<Vertex>(k * a.tail + x),
                        static_cast<Vertex>(k * a.head + y)});
  return OrientedGraph(d.order() * k, std::move(arcs));
}

}  // namespace chroma
