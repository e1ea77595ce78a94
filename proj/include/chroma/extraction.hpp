#ifndef CHROMA_EXTRACTION_HPP
#define CHROMA_EXTRACTION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "chroma/core.hpp"

namespace chroma {

/// s * ((t-1)/(s-1)!)^(1/s). Requires 2 <= s <= t.
double sigma(int s, int t);

/// (s-1) * ((t-1)/(s-1)!)^(1/s) * n2^(1-1/s): the neighbor threshold that
/// balances the two deletion counts of the extraction.
double default_threshold(int s, int t, std::size_t n2);

struct ExtractionParams {
  int s = 2;
  int t = 2;
  /// Overrides the default neighbor threshold; must be finite and > 0.
  std::optional<double> x;
};

/// Saturation bookkeeping. Per-vertex vectors are indexed by graph vertex
/// id and only meaningful for second-side vertices.
struct SaturationState {
  /// The grown set U = [v_1, ..., v_l] in insertion order.
  std::vector<Vertex> order;
  /// 1-based index i at which v became saturated, or l if it never did.
  std::vector<std::size_t> sat_index;
  std::vector<bool> saturated;
  /// Colors between v and U_{i_v}, sorted.
  std::vector<std::vector<Color>> kept_colors;
};

struct ExtractionResult {
  EdgeColoredGraph proper;  ///< first-side proper subgraph G0
  EdgeColoredGraph h;       ///< extracted spanning subgraph
  SaturationState state;
  /// d^c_G(u) - d^c_H(u) for first-side u; 0 elsewhere.
  std::vector<std::size_t> deltas;
  double x = 0;
  std::size_t threshold = 0;  ///< ceil(x), minimum 1
  std::size_t n2 = 0;
  double sigma = 0;
  /// sigma * n2^(1-1/s): the per-vertex loss bound when no properly colored
  /// K_{s,t} exists.
  double delta_bound = 0;
  /// (s-1) * n2 / x; |U| never exceeds it.
  double size_bound = 0;
};

/// Saturation-greedy extraction on a bipartite graph (first side V1,
/// second side V2). The result always has d^c_H(v) <= s-1 on V2; when g has
/// no properly colored K_{s,t} every V1 vertex loses at most delta_bound
/// colors. Throws std::invalid_argument on a missing bipartition, bad s/t,
/// or a non-finite/non-positive x.
ExtractionResult lemma1_extract(const EdgeColoredGraph& g,
                                const ExtractionParams& params);

struct OrientationOptions {
  int s = 2;
  int t = 2;
  std::optional<double> x;
};

struct VertexBound {
  std::size_t dplus = 0;
  std::size_t dc = 0;
  double bound = 0;   ///< d^c_G(v) - sigma * N^(1-1/s) - s
  double margin = 0;  ///< dplus - bound; positive whenever the input has no
                      ///< properly colored K_{s,t}
};

struct LemmaRun {
  std::size_t n2 = 0;
  std::size_t l = 0;
  double x = 0;
  std::size_t threshold = 0;
};

struct OrientationReport {
  int s = 2;
  int t = 2;
  double sigma = 0;
  bool bipartite = false;
  std::vector<LemmaRun> runs;
  std::vector<VertexBound> vertices;
};

struct OrientationResult {
  EdgeColoredGraph h;
  ColoredOrientation d;
  OrientationReport report;
};

/// Orients a spanning subgraph H of g so that at every vertex in-arc and
/// out-arc colors are disjoint (so every directed cycle is properly
/// colored), in-arc colors number at most s-1, and no pair is
/// anti-parallel. Requires 2 <= s <= t < n.
OrientationResult construct_orientation(const EdgeColoredGraph& g,
                                        const OrientationOptions& options);

/// Same construction with the extraction run separately on the two halves
/// of the dual graph; the bound at v in side i uses the size of the other
/// side. Requires a bipartition and 2 <= s <= t.
OrientationResult construct_orientation_bipartite(const EdgeColoredGraph& g,
                                                  const OrientationOptions& options);

}  // namespace chroma

#endif  // CHROMA_EXTRACTION_HPP
