#ifndef CHROMA_CONSTRUCTIONS_HPP
#define CHROMA_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "chroma/core.hpp"

namespace chroma {

/// Arcs i -> j for all i < j. Requires n >= 1.
OrientedGraph transitive_tournament(std::size_t n);

/// Rotational tournament with min(delta+, delta-) = floor((n-1)/2): arcs
/// i -> i+j (mod n) for j = 1..(n-1)/2, and for even n additionally
/// i -> i+n/2 when i < n/2. Requires n >= 3.
OrientedGraph circulant_tournament(std::size_t n);

/// Arcs i -> i+1 (mod r). Requires r >= 3; r = 2 would be an anti-parallel
/// pair.
OrientedGraph directed_cycle(std::size_t r);

/// signature(blow_up(directed_cycle(r), k)); for even r the bipartition
/// puts even-numbered blocks on the first side.
EdgeColoredGraph blow_up_signature(std::size_t r, std::size_t k);

/// 6k vertices, minimum color degree k+1, no properly colored C4.
EdgeColoredGraph extremal_no_pc_c4(std::size_t k);
/// 5k vertices, triangle-free, minimum color degree k+1, no rainbow C4.
EdgeColoredGraph extremal_no_rainbow_c4_trianglefree(std::size_t k);

/// Each pair present with probability p, direction by a fair coin.
OrientedGraph random_oriented_graph(std::size_t n, double p, std::uint64_t seed);
/// Each pair present with probability p, color uniform in [0, colors).
EdgeColoredGraph random_edge_colored_graph(std::size_t n, double p, std::size_t colors,
                                           std::uint64_t seed);
/// Bipartite variant: first side [0, n1), second side [n1, n1 + n2).
EdgeColoredGraph random_bipartite_edge_colored(std::size_t n1, std::size_t n2, double p,
                                               std::size_t colors, std::uint64_t seed);

/// K_{s,T} (side S = [0, s), side B = [s, s+T)) colored (i + j) mod max(s, T),
/// then colors renamed through a seeded random injection.
EdgeColoredGraph random_proper_complete_bipartite(std::size_t s, std::size_t big_t,
                                                  std::uint64_t seed);

struct RecolorParams {
  std::size_t n = 20;
  int s = 3;
  int t = 7;
  double gamma = 0.1;
  std::uint64_t seed = 0;
  std::size_t max_tries = 1000;
  /// Random (s+t)-subsets checked per attempt when n > 25.
  std::size_t sampled_subsets = 100'000;
  /// Reject attempts where some vertex keeps too few recolored in-edges.
  bool check_degree_floor = true;

  int density_cap() const { return s * t - s - t; }
  double exponent() const;       ///< (s+t)/(st-s-t)
  double p() const;              ///< 8 gamma n^(-(s+t)/(st-s-t))
  double degree_floor() const;   ///< gamma n^(1-(s+t)/(st-s-t))
  /// st > 2(s+t), the range in which the construction is claimed.
  bool within_hypothesis() const { return s * t > 2 * (s + t); }
};

struct RecolorStats {
  std::size_t attempts = 0;
  std::size_t rejected_density = 0;
  std::size_t rejected_degree = 0;
  bool exhaustive_density_check = true;
  std::size_t subsets_checked_per_attempt = 0;
  bool within_hypothesis = true;
};

struct RecolorResult {
  EdgeColoredGraph graph;
  OrientedGraph tournament;
  /// The sampled pairs (u < v) that received fresh colors.
  std::vector<Edge> recolored;
  RecolorStats stats;
};

class RecolorExhausted : public std::runtime_error {
 public:
  explicit RecolorExhausted(RecolorStats stats)
      : std::runtime_error("recoloring rejected every attempt"), stats_(stats) {}
  const RecolorStats& stats() const { return stats_; }

 private:
  RecolorStats stats_;
};

/// Rejection-sampled recoloring of the circulant tournament's signature.
/// An attempt samples G(n, p) and is accepted when (a) no (s+t)-vertex
/// subset spans density_cap or more sampled pairs and (b) every vertex has
/// more than degree_floor sampled pairs into its in-neighborhood; accepted
/// pairs get fresh colors above the signature's palette, ranked by pair
/// order. gamma = 0 returns the plain signature after one attempt. Throws
/// std::invalid_argument for st - s - t <= 0, p > 1 or n < 3, and
/// RecolorExhausted after max_tries rejections.
RecolorResult recolored_tournament(const RecolorParams& params);

/// Exact: true iff every k-subset of [0, n) spans fewer than `cap` pairs.
bool subsets_sparse(std::size_t n, std::span<const Edge> pairs, std::size_t k,
                    std::size_t cap);

/// Predicate (b) for a tournament and the sampled pairs.
bool degree_floor_holds(const OrientedGraph& tournament, std::span<const Edge> pairs,
                        double floor);

}  // namespace chroma

#endif  // CHROMA_CONSTRUCTIONS_HPP
