#ifndef CHROMA_SRC_BUDGET_HPP
#define CHROMA_SRC_BUDGET_HPP

#include <chrono>
#include <cstdint>

#include "chroma/detectors.hpp"

namespace chroma::detail {

/// Counts search nodes against a budget; the clock is read every 4096
/// nodes.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; false once the budget is spent.
  bool tick() {
    if (exceeded_) return false;
    ++nodes_;
    if (nodes_ > budget_.max_nodes) exceeded_ = true;
    if ((nodes_ & 4095) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.time_limit)
      exceeded_ = true;
    return !exceeded_;
  }

  bool exceeded() const { return exceeded_; }
  std::uint64_t nodes() const { return nodes_; }
  std::chrono::duration<double> elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }

  /// Budget left for a nested search.
  SearchBudget remaining() const {
    SearchBudget b;
    b.max_nodes = nodes_ >= budget_.max_nodes ? 0 : budget_.max_nodes - nodes_;
    auto used = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    b.time_limit = used >= budget_.time_limit ? std::chrono::milliseconds{0}
                                              : budget_.time_limit - used;
    return b;
  }

  /// Folds the node count of a nested search into this meter.
  void absorb(const SearchStats& stats) {
    nodes_ += stats.nodes;
    if (nodes_ > budget_.max_nodes) exceeded_ = true;
  }

  SearchStats stats() const { return {nodes_, elapsed()}; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

}  // namespace chroma::detail

#endif  // CHROMA_SRC_BUDGET_HPP
