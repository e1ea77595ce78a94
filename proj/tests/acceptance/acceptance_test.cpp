// Acceptance run: every criterion at its stated trial count and time limit,
// one PASS/FAIL line each. Exit status 0 iff all pass.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "chroma/harness.hpp"

using namespace chroma;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  std::size_t trials;
  double limit_seconds;
  /// Extra conditions on the report beyond zero failures; returns an empty
  /// string when satisfied.
  std::function<std::string(const SuiteReport&)> extra;
};

std::uint64_t counter(const SuiteReport& r, const std::string& key) {
  return r.counters.contains(key) ? r.counters[key].get<std::uint64_t>() : 0;
}

std::string require_counter(const SuiteReport& r, const std::string& key) {
  return counter(r, key) > 0 ? "" : "no instance reached the '" + key + "' stage";
}

}  // namespace

int main() {
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("CHROMA_SEED")) seed = std::stoull(env, nullptr, 0);

  const std::vector<Criterion> criteria = {
      {1, "signature laws", "signature-laws", 500, 30,
       [](const SuiteReport& r) { return require_counter(r, "enumerated_instances"); }},
      {2, "duality", "duality", 300, 60, nullptr},
      {3, "extraction", "lemma1", 300, 60,
       [](const SuiteReport& r) { return require_counter(r, "certified"); }},
      {4, "orientation invariants", "orientation", 500, 30, nullptr},
      {5, "orientation degree bound", "orientation-bound", 500, 60,
       [](const SuiteReport& r) { return require_counter(r, "certified"); }},
      {6, "short cycle pipeline", "pipeline", 56, 60,
       [](const SuiteReport& r) {
         return r.trials == 56 ? std::string() : std::string("family incomplete");
       }},
      {7, "rainbow extraction", "proposition12", 100, 10, nullptr},
      {8, "total color degree threshold", "thresholds", 100, 120, nullptr},
      {9, "extremal constructions", "extremal", 6, 30,
       [](const SuiteReport& r) {
         return r.trials == 6 ? std::string() : std::string("family incomplete");
       }},
      {10, "recolored construction", "recolor", 20, 120,
       // Needs outputs that pass both rejection predicates. At n = 20 the two
       // predicates pull p in opposite directions, so this is expected to fail;
       // density-only outputs are checked by the suite but do not count here.
       [](const SuiteReport& r) {
         if (counter(r, "full_accepted") > 0) return std::string();
         return "no output passed both rejection predicates (" +
                std::to_string(counter(r, "full_exhausted")) + " of " +
                std::to_string(r.trials) + " runs exhausted " +
                std::to_string(counter(r, "full_attempts")) +
                " attempts); density-only mode accepted " +
                std::to_string(counter(r, "density_only_accepted"));
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = run_suite(c.suite, c.trials, seed);
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string why;
    if (report.failures > 0)
      why = std::to_string(report.failures) + " failures, first: " +
            report.examples.front().assertion + " (trial " +
            std::to_string(report.examples.front().trial) + ")";
    else if (wall >= c.limit_seconds)
      why = "time limit exceeded";
    else if (c.extra)
      why = c.extra(report);
    const bool pass = why.empty();
    all &= pass;

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << ", "
         << c.suite << "): trials " << report.trials << ", failures " << report.failures
         << ", " << wall << "s of " << c.limit_seconds << "s";
    if (!report.counters.empty()) line << ", counters " << report.counters.dump();
    if (!pass) line << " -- " << why;
    std::cout << line.str() << std::endl;
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
