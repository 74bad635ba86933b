#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankmatch {

struct Failure {
  std::string space_text;
  std::string expected;
  std::string got;
};

// Outcome of a verification suite. fail == 0 iff the suite passes.
struct VerificationReport {
  static constexpr std::size_t kMaxRecordedFailures = 20;

  std::string suite;
  std::vector<std::pair<std::string, std::uint64_t>> params;
  std::int64_t pass = 0;
  std::int64_t fail = 0;
  std::int64_t skip = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::int64_t> stats;
  std::vector<std::string> warnings;

  bool passed() const noexcept { return fail == 0; }
  void record_failure(Failure f);
};

enum class Outcome { pass, fail, skip };

struct TrialResult {
  Outcome outcome = Outcome::pass;
  std::optional<Failure> failure;
  std::map<std::string, std::int64_t> stats;
  std::vector<std::string> warnings;

  // Marks the trial failed unless ok; only the first failure is kept.
  bool expect(bool ok, const std::string& space_text, std::string expected, std::string got);
};

// Runs trial(0..trials-1), possibly on several threads, and merges the results
// in trial order so the report is independent of the worker count. A
// HypothesisViolation thrown by a trial becomes a skip, any other library
// error a failure.
VerificationReport run_trials(std::string suite, std::vector<std::pair<std::string, std::uint64_t>> params,
                              std::int64_t trials, unsigned workers,
                              const std::function<TrialResult(std::int64_t)>& trial);

std::string to_text(const VerificationReport& r);
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& reports);

}  // namespace rankmatch
