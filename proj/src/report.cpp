#include "rankmatch/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "rankmatch/errors.hpp"

namespace rankmatch {

void VerificationReport::record_failure(Failure f) {
  ++fail;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(f));
}

bool TrialResult::expect(bool ok, const std::string& space_text, std::string expected, std::string got) {
  if (ok) return true;
  if (outcome != Outcome::fail) {
    outcome = Outcome::fail;
    failure = Failure{space_text, std::move(expected), std::move(got)};
  }
  return false;
}

VerificationReport run_trials(std::string suite, std::vector<std::pair<std::string, std::uint64_t>> params,
                              std::int64_t trials, unsigned workers,
                              const std::function<TrialResult(std::int64_t)>& trial) {
  std::vector<TrialResult> results(static_cast<std::size_t>(std::max<std::int64_t>(trials, 0)));
  auto run_one = [&](std::int64_t i) {
    TrialResult r;
    try {
      r = trial(i);
    } catch (const HypothesisViolation& e) {
      r.outcome = Outcome::skip;
      r.warnings.push_back("trial " + std::to_string(i) + " skipped: " + e.what() +
                           (e.detail().empty() ? "" : "\n" + e.detail()));
    } catch (const Error& e) {
      r.outcome = Outcome::fail;
      r.failure = Failure{"", "no error", e.what()};
    }
    results[static_cast<std::size_t>(i)] = std::move(r);
  };
  workers = std::max(1u, workers);
  if (workers == 1 || trials < 2) {
    for (std::int64_t i = 0; i < trials; ++i) run_one(i);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (auto i = next++; i < trials; i = next++) run_one(i);
      });
    for (auto& t : pool) t.join();
  }
  VerificationReport report;
  report.suite = std::move(suite);
  report.params = std::move(params);
  for (auto& r : results) {
    switch (r.outcome) {
      case Outcome::pass: ++report.pass; break;
      case Outcome::skip: ++report.skip; break;
      case Outcome::fail: report.record_failure(r.failure.value_or(Failure{})); break;
    }
    for (const auto& [k, v] : r.stats) report.stats[k] += v;
    for (auto& w : r.warnings) report.warnings.push_back(std::move(w));
  }
  return report;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << ":";
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  os << "\n  " << (r.passed() ? "PASS" : "FAIL") << "  pass=" << r.pass << " fail=" << r.fail << " skip=" << r.skip
     << "\n";
  for (const auto& [k, v] : r.stats) os << "  " << k << " = " << v << "\n";
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  for (const auto& f : r.failures) {
    os << "  failure: expected " << f.expected << ", got " << f.got << "\n";
    if (!f.space_text.empty()) {
      std::istringstream lines(f.space_text);
      for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
    }
  }
  return os.str();
}

namespace {

nlohmann::ordered_json json_value(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["pass"] = r.pass;
  j["fail"] = r.fail;
  j["skip"] = r.skip;
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures)
    failures.push_back(nlohmann::ordered_json{{"space_text", f.space_text}, {"expected", f.expected}, {"got", f.got}});
  j["failures"] = failures;
  auto stats = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.stats) stats[k] = v;
  j["stats"] = stats;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

std::string to_json(const VerificationReport& r) { return json_value(r).dump(2); }

std::string to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json j;
  j["suite"] = "all";
  std::int64_t fail = 0;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    fail += r.fail;
    arr.push_back(json_value(r));
  }
  j["fail"] = fail;
  j["reports"] = arr;
  return j.dump(2);
}

}  // namespace rankmatch
