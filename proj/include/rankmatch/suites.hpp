#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rankmatch/report.hpp"
#include "rankmatch/space.hpp"

namespace rankmatch {

struct SuiteParams {
  int n = 5;
  int k = 2;
  int p = 3;
  int d = 4;
  std::int64_t trials = 200;
  std::uint64_t seed = 42;
  std::uint64_t cap = kDefaultOracleCap;
  unsigned workers = 1;
};

// Random weakly symmetric affine spaces over GF(p), p >= 3 (generator kinds
// rotate by trial, the base cycles through uniform, structured and zero): the witness search reaches rank >= mu(G_S)
// inside its grid, the oracle agrees where feasible, and the coefficient of
// prod x_i^{delta_i} is nonzero whenever mu <= 5.
VerificationReport verify_thm1(const SuiteParams& params);
// Random alternating affine spaces over any GF(p), witness in {0,1}^t, and the
// x_1...x_t Pfaffian coefficient against its closed form whenever t <= 4.
VerificationReport verify_thm2(const SuiteParams& params);
// Symmetric affine spaces over GF(2) and their alternating doubles:
// 2 rho(S) = rho(S') >= mu(G_S') = 2 nu(G_S') >= 2 nu(G_S). Instances with
// nu(G_S') > nu(G_S) are counted in stats["nu_equality_violations"].
VerificationReport verify_cor3(const SuiteParams& params);
VerificationReport verify_counterexamples_f2();
// Extremal tightness at (n, k) plus the dimension bound on random spaces.
VerificationReport verify_thm4(const SuiteParams& params);
VerificationReport verify_thm5(const SuiteParams& params);
// Exhaustive for loopless n <= 6 and loop graphs n <= 5, sampled above.
VerificationReport verify_erdos_gallai(int n, bool loops, std::int64_t trials, std::uint64_t seed);

// The two GF(2) spaces where the matching bound fails for symmetric matrices.
AffineSpace counterexample_f2(int which);

inline constexpr std::string_view kSuiteIds[] = {"counterexamples", "thm1", "thm2", "cor3",
                                                  "thm4",            "thm5", "erdos-gallai"};

bool is_suite_id(std::string_view id);
SuiteParams default_params(std::string_view suite);
// "erdos-gallai" yields two reports (loopless and with loops); "all" runs every
// suite on its defaults, taking only trials, seed, cap and workers from params.
std::vector<VerificationReport> run_suite(std::string_view id, const SuiteParams& params);

}  // namespace rankmatch
