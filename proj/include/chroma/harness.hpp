#ifndef CHROMA_HARNESS_HPP
#define CHROMA_HARNESS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chroma/constructions.hpp"
#include "chroma/core.hpp"
#include "chroma/detectors.hpp"
#include "chroma/extraction.hpp"
#include "chroma/witness.hpp"

namespace chroma {

using json = nlohmann::json;

inline constexpr int kReportSchema = 1;

struct FailureExample {
  std::size_t trial = 0;
  std::uint64_t seed = 0;    ///< per-trial seed (suite seed XOR trial index)
  std::uint64_t digest = 0;  ///< instance digest
  std::string assertion;
};

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<FailureExample> examples;  ///< first few failures
  double elapsed_seconds = 0;
  /// FNV-1a over the per-trial instance digests in trial order.
  std::uint64_t stream_digest = 0;
  json config = json::object();
  /// Summed per-trial counters (instances certified, accepted, ...).
  json counters = json::object();

  bool passed() const { return failures == 0; }
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs `trials` seeded trials of a verification suite. Trial i uses the
/// seed `seed ^ i`, so the outcome does not depend on scheduling. Suites
/// over fixed instance families (pipeline, extremal) run the first
/// min(trials, family size) members. Throws std::invalid_argument for an
/// unknown suite.
SuiteReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed,
                      const SearchBudget& budget = {}, unsigned workers = 0);

/// Re-runs one trial; an empty result means the trial passed.
std::vector<std::string> replay_trial(std::string_view name, std::size_t trial,
                                      std::uint64_t seed,
                                      const SearchBudget& budget = {});

/// Summary metrics and threshold evaluations with margins.
json analyze(const EdgeColoredGraph& g);

json to_json(const Witness& w);
json to_json(const SearchOutcome& o);
json to_json(const PipelineOutcome& o);
json to_json(const OrientationReport& r);
json to_json(const SuiteReport& r);
json to_json(const RecolorStats& s);

/// Integral doubles become JSON integers.
json number(double x);

}  // namespace chroma

#endif  // CHROMA_HARNESS_HPP
