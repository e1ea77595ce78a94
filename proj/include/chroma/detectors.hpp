#ifndef CHROMA_DETECTORS_HPP
#define CHROMA_DETECTORS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "chroma/core.hpp"
#include "chroma/witness.hpp"

namespace chroma {

struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;
  std::chrono::milliseconds time_limit{60'000};
};

enum class SearchStatus { found, exhausted_none, budget_exceeded };

std::string_view to_string(SearchStatus status);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{};
};

/// Result of a bounded search. `found` always carries a witness that has
/// been re-verified against the input; `exhausted_none` means the whole
/// search space was covered.
struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted_none;
  std::optional<Witness> witness;
  SearchStats stats;
  /// Cycles collected by disjoint_pc_cycles when fewer than k were found.
  std::vector<Witness> partial;
};

/// Searches for disjoint S (|S| = s), T (|T| = t) spanning a complete
/// bipartite subgraph in which every S-vertex sees t distinct colors and
/// every T-vertex sees s distinct colors. Requires s, t >= 1.
SearchOutcome find_pc_kst(const EdgeColoredGraph& g, int s, int t,
                          const SearchBudget& budget = {});
/// As find_pc_kst with all s*t colors pairwise distinct.
SearchOutcome find_rainbow_kst(const EdgeColoredGraph& g, int s, int t,
                               const SearchBudget& budget = {});

/// Shortest properly colored cycle of length <= r (r >= 3); among cycles of
/// that length, the lexicographically first vertex sequence starting at
/// its smallest vertex.
SearchOutcome find_pc_cycle_upto(const EdgeColoredGraph& g, std::size_t r,
                                 const SearchBudget& budget = {});

SearchOutcome find_rainbow_c4(const EdgeColoredGraph& g,
                              const SearchBudget& budget = {});

/// Exact shortest directed cycle by BFS from every vertex, O(n(n+m)).
/// Never budget-limited.
SearchOutcome shortest_directed_cycle(const OrientedGraph& d);

struct PipelineOutcome {
  SearchOutcome outcome;
  /// Stage that produced the witness: 1 (PC C4), 2 (orientation), 3 (DFS);
  /// 0 when nothing was found.
  int stage = 0;
  /// Minimum out-degree of the constructed orientation (absent when the
  /// orientation stage could not run, n < 3).
  std::optional<std::size_t> min_out_degree;
  std::optional<std::size_t> directed_girth;
  std::size_t conjectured_bound = 0;  ///< ceil(n / r)
  std::optional<long long> margin;    ///< min_out_degree - conjectured_bound
};

/// Short properly colored cycle search: a PC C4 via find_pc_kst(2,2), then
/// a directed cycle of the s=t=2 orientation mapped back to g, then
/// find_pc_cycle_upto(g, r). Requires r >= 4.
PipelineOutcome pc_short_cycle_pipeline(const EdgeColoredGraph& g, std::size_t r,
                                        const SearchBudget& budget = {});

/// Greedy packing of vertex-disjoint properly colored cycles: repeatedly
/// take a PC C4 or else a shortest PC cycle (bounded above by the
/// orientation's shortest directed cycle) and delete its vertices.
/// A heuristic: `exhausted_none` means the greedy could not reach k, with
/// the cycles collected so far in `partial`. Requires k >= 1.
SearchOutcome disjoint_pc_cycles(const EdgeColoredGraph& g, std::size_t k,
                                 const SearchBudget& budget = {});

/// Greedy rainbow K_{s,t} inside a properly colored complete bipartite
/// graph g[S, B] with |B| >= t + s(t-1)(s-1): grows B* one vertex at a time,
/// always taking the smallest vertex whose edges to S avoid the colors
/// already used. Throws std::invalid_argument on a violated precondition.
Witness extract_rainbow_kst(const EdgeColoredGraph& g, std::vector<Vertex> s_side,
                            std::vector<Vertex> b_side, int t);

struct ThresholdCheck {
  bool holds = false;
  double total = 0;      ///< measured sum of color degrees
  double threshold = 0;  ///< right-hand side
  double margin = 0;     ///< total - threshold
  bool bipartite_form = false;
};

/// Total color degree condition forcing a properly colored K_{s,t}:
/// sum d^c > n^2/2 + sigma n^(2-1/s) + s n, or with a bipartition
/// sum d^c > n1 n2 + sigma (n1 n2^(1-1/s) + n2 n1^(1-1/s)) + s (n1 + n2).
ThresholdCheck check_total_degree_threshold(const EdgeColoredGraph& g, int s, int t);

}  // namespace chroma

#endif  // CHROMA_DETECTORS_HPP
