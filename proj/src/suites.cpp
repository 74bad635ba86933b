#include "rankmatch/suites.hpp"

#include <algorithm>
#include <cmath>

#include "rankmatch/errors.hpp"
#include "rankmatch/rng.hpp"
#include "rankmatch/theorem.hpp"

namespace rankmatch {

namespace {

using Params = std::vector<std::pair<std::string, std::uint64_t>>;

// Member budget for the random-space halves of the dimension-bound suites.
constexpr std::uint64_t kRandomEnumerationBudget = 20'000;
constexpr std::size_t kDetCoefficientMaxOrder = 5;
constexpr std::size_t kPfCoefficientMaxPairs = 4;

std::string str(std::int64_t v) { return std::to_string(v); }

// Largest d with p^d <= budget.
std::size_t max_enumerable_dim(std::uint32_t p, std::uint64_t budget) {
  std::size_t d = 0;
  std::uint64_t total = 1;
  while (total <= budget / p) {
    total *= p;
    ++d;
  }
  return d;
}

Matrix random_invertible(FieldSpec f, int n, SplitMix64& rng) {
  for (;;) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.set(i, j, static_cast<std::int64_t>(rng.below(f.modulus())));
    if (!det(m).is_zero()) return m;
  }
}

// A random affine subspace of P U P^T for an extremal space U, so that the
// rank stays at most k while the dimension is large.
AffineSpace conjugated_extremal_subspace(ExtremalKind kind, FieldSpec f, int n, int k, std::size_t max_d,
                                         SplitMix64& rng) {
  const auto u = extremal(kind, f, n, k);
  const auto big = u.basis().size();
  const auto d = static_cast<std::size_t>(rng.below(std::min(big, max_d) + 1));
  const auto p = f.modulus();
  Matrix coeff(f, d, big);
  do {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < big; ++c) coeff.set(r, c, static_cast<std::int64_t>(rng.below(p)));
  } while (rank(coeff) < d);
  const auto conj = random_invertible(f, n, rng);
  const auto conj_t = conj.transpose();
  auto congruent = [&](const Matrix& x) { return conj * x * conj_t; };
  std::vector<Matrix> gens;
  for (std::size_t r = 0; r < d; ++r) {
    Matrix g(f, n, n);
    for (std::size_t c = 0; c < big; ++c) g.add_scaled(u.basis()[c], coeff(r, c));
    gens.push_back(congruent(g));
  }
  Matrix base(f, n, n);
  for (const auto& b : u.basis()) base.add_scaled(b, static_cast<std::uint32_t>(rng.below(p)));
  return AffineSpace(congruent(base), std::move(gens), u.kind());
}

// Replaces each selected B_r by c B_r + (combination of basis elements with
// colex-smaller leading cells); the leading cells, and so the matching, are
// unchanged while the entries become generic.
Pencil perturbed_pencil(const AffineSpace& canonical, const MatchingSelection& sel, SplitMix64& rng) {
  const auto f = canonical.spec();
  const auto p = f.modulus();
  std::vector<Matrix> gens;
  for (auto r : sel.chosen) {
    Matrix g = canonical.basis()[r].scaled(static_cast<std::uint32_t>(1 + rng.below(p - 1)));
    for (std::size_t s = r + 1; s < canonical.basis().size(); ++s)
      g.add_scaled(canonical.basis()[s], static_cast<std::uint32_t>(rng.below(p)));
    gens.push_back(std::move(g));
  }
  return restrict_pencil(canonical.base(), gens, sel.matching);
}

TrialResult extremal_tightness(ExtremalKind kind, FieldSpec f, int n, int k, std::uint64_t cap) {
  TrialResult r;
  const auto u = extremal(kind, f, n, k);
  const auto text = serialize_space(u);
  const auto label = std::string(to_string(kind));
  const auto dim = static_cast<std::int64_t>(dimension(u));
  r.expect(dim == extremal_dimension(kind, n, k), text, label + " dim " + str(extremal_dimension(kind, n, k)),
           str(dim));
  const auto g = leading_graph(u);
  r.expect(static_cast<std::int64_t>(g.size()) == dim, text, "|G_S| = dim S", str(static_cast<std::int64_t>(g.size())));
  r.expect(mu(g) == k, text, label + " mu(G_S) = k = " + str(k), str(mu(g)));
  const auto member = extremal_max_rank_member(kind, f, n, k);
  r.expect(rank(member) == static_cast<std::size_t>(k), text, label + " explicit member rank " + str(k),
           str(static_cast<std::int64_t>(rank(member))));
  auto with_member = u.basis();
  with_member.push_back(member);
  r.expect(dimension(AffineSpace(u.base(), with_member, SpaceKind::general)) == u.basis().size(), text,
           label + " explicit member lies in the space", "member outside the span");
  const auto bound = term_rank_bound(u);
  r.expect(bound <= static_cast<std::size_t>(k), text, label + " structural rank bound <= " + str(k),
           str(static_cast<std::int64_t>(bound)));
  if (member_count(u) <= cap) {
    const auto rho = max_rank_oracle(u, cap);
    r.expect(rho == static_cast<std::size_t>(k), text, label + " oracle rho = " + str(k),
             str(static_cast<std::int64_t>(rho)));
    r.stats["tightness_oracle_checks"] += 1;
  }
  r.stats["tightness_checks"] += 1;
  return r;
}

Params common_params(const SuiteParams& p, std::initializer_list<const char*> keys) {
  Params out;
  for (std::string_view key : keys) {
    if (key == "n") out.emplace_back("n", p.n);
    if (key == "k") out.emplace_back("k", p.k);
    if (key == "p") out.emplace_back("p", p.p);
    if (key == "d") out.emplace_back("d", p.d);
  }
  out.emplace_back("trials", static_cast<std::uint64_t>(p.trials));
  out.emplace_back("seed", p.seed);
  out.emplace_back("cap", p.cap);
  return out;
}

void require_order(int n, int max) {
  if (n < 1 || n > max) throw DomainError("n must be in [1, " + std::to_string(max) + "]");
}

}  // namespace

AffineSpace counterexample_f2(int which) {
  const FieldSpec f2(2);
  if (which == 1) return AffineSpace(Matrix(f2, {{0, 0}, {0, 1}}), {Matrix(f2, {{1, 1}, {1, 0}})}, SpaceKind::symmetric);
  if (which == 2)
    return AffineSpace(Matrix(f2, 3, 3),
                       {Matrix(f2, {{1, 1, 0}, {1, 0, 0}, {0, 0, 0}}), Matrix(f2, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}})},
                       SpaceKind::symmetric);
  throw DomainError("counterexample_f2: which must be 1 or 2");
}

VerificationReport verify_counterexamples_f2() {
  return run_trials("counterexamples", {}, 2, 1, [](std::int64_t i) {
    TrialResult r;
    const auto s = counterexample_f2(static_cast<int>(i) + 1);
    const auto text = serialize_space(s);
    const int want_mu = i == 0 ? 2 : 3;
    const std::size_t want_rho = i == 0 ? 1 : 2;
    const auto g = leading_graph(s);
    const auto m = mu(g);
    const auto v = nu(g);
    const auto rho = max_rank_oracle(s);
    r.expect(m == want_mu, text, "mu(G_S) = " + str(want_mu), str(m));
    r.expect(rho == want_rho, text, "rho(S) = " + str(static_cast<std::int64_t>(want_rho)),
             str(static_cast<std::int64_t>(rho)));
    r.expect(static_cast<std::size_t>(v) == rho, text, "nu(G_S) = rho(S)", str(v));
    r.expect(static_cast<std::size_t>(m) > rho, text, "mu(G_S) > rho(S) over GF(2)", "mu <= rho");
    return r;
  });
}

VerificationReport verify_thm1(const SuiteParams& params) {
  if (params.p < 3) throw DomainError("thm1 requires |F| >= 3; the bound rho >= mu fails over GF(2)");
  require_order(params.n, 12);
  if (params.d < 0) throw DomainError("d must be nonnegative");
  const FieldSpec f(static_cast<std::uint32_t>(params.p));
  constexpr RandomKind kinds[] = {RandomKind::disjoint_support_ws, RandomKind::symmetric, RandomKind::alternating};
  return run_trials("thm1", common_params(params, {"n", "p", "d"}), params.trials, params.workers, [&](std::int64_t i) {
    TrialResult r;
    SplitMix64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(i)));
    const auto kind = kinds[i % 3];
    const auto d = std::min<std::size_t>(static_cast<std::size_t>(params.d), ambient_dimension(kind, params.n));
    // A uniform base is almost always nonsingular already; the structured and
    // zero bases make the witness do the work.
    constexpr BaseMode bases[] = {BaseMode::uniform, BaseMode::structured, BaseMode::zero};
    const auto base = bases[(i / 3) % 3];
    const auto s = random_space(kind, params.n, d, f, rng.next(), base);
    const auto text = serialize_space(s);
    r.stats[std::string("kind_") + std::string(to_string(kind))] += 1;
    r.stats[std::string("base_") + (base == BaseMode::uniform ? "uniform" : base == BaseMode::zero ? "zero" : "structured")] += 1;
    const auto w = witness_search_ws(s);
    r.stats["witness_evaluations"] += static_cast<std::int64_t>(w.search_size);
    r.expect(w.found, text, "nonzero determinant inside the grid", "none after " + str(static_cast<std::int64_t>(w.search_size)));
    r.expect(w.achieved_rank >= static_cast<std::size_t>(w.mu), text, "witness rank >= mu = " + str(w.mu),
             str(static_cast<std::int64_t>(w.achieved_rank)));
    if (member_count(s) <= params.cap) {
      const auto rho = max_rank_oracle(s, params.cap);
      r.expect(rho >= static_cast<std::size_t>(w.mu), text, "rho(S) >= mu(G_S) = " + str(w.mu),
               str(static_cast<std::int64_t>(rho)));
      r.expect(w.achieved_rank <= rho, text, "witness rank <= rho(S)", str(static_cast<std::int64_t>(w.achieved_rank)));
      r.stats["oracle_checks"] += 1;
    }
    if (w.mu >= 1 && static_cast<std::size_t>(w.mu) <= kDetCoefficientMaxOrder) {
      const auto canonical = canonicalize(s);
      const auto pencil = perturbed_pencil(canonical, w.selection, rng);
      const auto poly = det_polynomial(pencil);
      std::vector<unsigned> exps(w.selection.deltas.begin(), w.selection.deltas.end());
      const auto coeff = poly.coefficient(exps);
      r.expect(coeff != 0, text, "nonzero coefficient of prod x_i^delta_i", "0 in " + poly.to_string());
      r.expect(poly.total_degree() <= w.mu, text, "deg f <= mu", str(poly.total_degree()));
      r.stats["det_coefficient_checks"] += 1;
    }
    return r;
  });
}

VerificationReport verify_thm2(const SuiteParams& params) {
  require_order(params.n, 12);
  if (params.d < 0) throw DomainError("d must be nonnegative");
  const FieldSpec f(static_cast<std::uint32_t>(params.p));
  return run_trials("thm2", common_params(params, {"n", "p", "d"}), params.trials, params.workers, [&](std::int64_t i) {
    TrialResult r;
    SplitMix64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(i)));
    const auto d = std::min<std::size_t>(static_cast<std::size_t>(params.d), ambient_dimension(RandomKind::alternating, params.n));
    const auto s = random_space(RandomKind::alternating, params.n, d, f, rng.next(), BaseMode::structured);
    const auto text = serialize_space(s);
    const auto w = witness_search_alt(s);
    r.stats["witness_evaluations"] += static_cast<std::int64_t>(w.search_size);
    r.expect(w.found, text, "nonzero Pfaffian inside {0,1}^t", "none");
    r.expect(w.achieved_rank >= static_cast<std::size_t>(w.mu), text, "witness rank >= mu = " + str(w.mu),
             str(static_cast<std::int64_t>(w.achieved_rank)));
    if (member_count(s) <= params.cap) {
      const auto rho = max_rank_oracle(s, params.cap);
      r.expect(rho >= static_cast<std::size_t>(w.mu), text, "rho(S) >= mu(G_S) = " + str(w.mu),
               str(static_cast<std::int64_t>(rho)));
      r.expect(w.achieved_rank <= rho, text, "witness rank <= rho(S)", str(static_cast<std::int64_t>(w.achieved_rank)));
      r.stats["oracle_checks"] += 1;
    }
    const auto t = w.selection.chosen.size();
    if (t >= 1 && t <= kPfCoefficientMaxPairs) {
      const auto canonical = canonicalize(s);
      const auto c = coeff_check_pf(perturbed_pencil(canonical, w.selection, rng));
      r.expect(!c.coefficient.is_zero(), text, "nonzero coefficient of x_1...x_t", "0");
      r.expect(c.coefficient == c.closed_form, text, "coefficient = closed form " + str(c.closed_form.value()),
               str(c.coefficient.value()));
      r.stats["pf_coefficient_checks"] += 1;
    }
    return r;
  });
}

VerificationReport verify_cor3(const SuiteParams& params) {
  require_order(params.n, 10);
  if (params.d < 0) throw DomainError("d must be nonnegative");
  const FieldSpec f2(2);
  auto report_params = common_params(params, {"n", "d"});
  return run_trials("cor3", report_params, params.trials, params.workers, [&](std::int64_t i) {
    TrialResult r;
    SplitMix64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(i)));
    const auto d = std::min<std::size_t>(static_cast<std::size_t>(params.d), ambient_dimension(RandomKind::symmetric, params.n));
    const auto s = random_space(RandomKind::symmetric, params.n, d, f2, rng.next(), BaseMode::structured);
    const auto text = serialize_space(s);
    if (member_count(s) > params.cap) {
      r.outcome = Outcome::skip;
      r.warnings.push_back("trial " + str(i) + " skipped: 2^d exceeds cap");
      return r;
    }
    const auto doubled = double_symmetric(s);
    const auto g = leading_graph(s);
    const auto g2 = leading_graph(doubled);
    const auto rho = static_cast<int>(max_rank_oracle(s, params.cap));
    const auto rho2 = static_cast<int>(max_rank_oracle(doubled, params.cap));
    const auto nu1 = nu(g);
    const auto nu2 = nu(g2);
    const auto mu2 = mu(g2);
    LoopGraph mapped(2 * params.n);
    for (const auto& e : g.edges()) mapped.add_edge(Edge::make(e.a, e.b + params.n));
    r.expect(g2 == mapped, text, "leading cells (i, j) -> (i, j + n)", format_edges(g2.edges()));
    r.expect(rho2 == 2 * rho, text, "rho(S') = 2 rho(S) = " + str(2 * rho), str(rho2));
    r.expect(rho2 >= mu2, text, "rho(S') >= mu(G_S') = " + str(mu2), str(rho2));
    r.expect(mu2 == 2 * nu2, text, "mu(G_S') = 2 nu(G_S') = " + str(2 * nu2), str(mu2));
    // A matching of G_S maps to one of G_S', not conversely: equality fails
    // e.g. when G_S is a triangle. Only the inequality is asserted.
    r.expect(nu2 >= nu1, text, "nu(G_S') >= nu(G_S) = " + str(nu1), str(nu2));
    if (nu2 != nu1) {
      r.stats["nu_equality_violations"] += 1;
      r.warnings.push_back("trial " + str(i) + ": nu(G_S') = " + str(nu2) + " > nu(G_S) = " + str(nu1));
    } else {
      r.stats["nu_equality_violations"] += 0;
    }
    r.expect(rho >= nu1, text, "rho(S) >= nu(G_S) = " + str(nu1), str(rho));
    const auto w = witness_search_alt(doubled);
    r.expect(w.found && w.achieved_rank >= static_cast<std::size_t>(mu2), text,
             "witness on S' of rank >= " + str(mu2), str(static_cast<std::int64_t>(w.achieved_rank)));
    r.stats["chain_checks"] += 1;
    return r;
  });
}

VerificationReport verify_thm4(const SuiteParams& params) {
  const int n = params.n;
  const int k = params.k;
  require_order(n, 12);
  if (k < 0 || k >= n || k % 2 != 0) throw DomainError("thm4 requires an even k with 0 <= k < n");
  const FieldSpec f(static_cast<std::uint32_t>(params.p));
  const auto budget = std::min(params.cap, kRandomEnumerationBudget);
  const auto max_d = max_enumerable_dim(f.modulus(), budget);
  constexpr std::int64_t kFixed = 3;
  return run_trials("thm4", common_params(params, {"n", "k", "p"}), kFixed + params.trials, params.workers,
                    [&](std::int64_t i) {
    if (i == 0) return extremal_tightness(ExtremalKind::u1a, f, n, k, params.cap);
    if (i == 1) return extremal_tightness(ExtremalKind::u2a, f, n, k, params.cap);
    TrialResult r;
    if (i == 2) {
      const auto best = std::max(extremal_dimension(ExtremalKind::u1a, n, k), extremal_dimension(ExtremalKind::u2a, n, k));
      r.expect(best == u_a(n, k), "", "u_a(n,k) = max dim U1, U2 = " + str(best), str(u_a(n, k)));
      return r;
    }
    SplitMix64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(i - kFixed)));
    std::optional<AffineSpace> s;
    if (i % 2 == 0) {
      const auto d = static_cast<std::size_t>(rng.below(std::min(max_d, ambient_dimension(RandomKind::alternating, n)) + 1));
      s = random_space(RandomKind::alternating, n, d, f, rng.next(), BaseMode::structured);
      r.stats["random_plain"] += 1;
    } else {
      const auto kind = rng.below(2) == 0 ? ExtremalKind::u1a : ExtremalKind::u2a;
      int kk = 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 1) / 2 + 1)));
      s = conjugated_extremal_subspace(kind, f, n, kk, max_d, rng);
      r.stats["random_extremal_subspace"] += 1;
    }
    const auto text = serialize_space(*s);
    const auto rho = static_cast<int>(max_rank_oracle(*s, params.cap));
    const auto g = leading_graph(*s);
    const auto dim = static_cast<std::int64_t>(g.size());
    r.expect(mu(g) <= rho, text, "mu(G_S) <= rho(S) = " + str(rho), str(mu(g)));
    if (rho < n) {
      r.expect(dim <= u_a(n, rho), text, "dim S <= u_a(n, rho) = " + str(u_a(n, rho)), str(dim));
      r.stats["bound_checks"] += 1;
      if (rho == k) r.stats["bound_checks_at_k"] += 1;
    }
    return r;
  });
}

VerificationReport verify_thm5(const SuiteParams& params) {
  const int n = params.n;
  const int k = params.k;
  require_order(n, 12);
  if (params.p < 3) throw DomainError("thm5 requires |F| >= 3 (the GF(2) case is not covered by this method)");
  if (k < 0 || k > n) throw DomainError("thm5 requires 0 <= k <= n");
  const FieldSpec f(static_cast<std::uint32_t>(params.p));
  const auto budget = std::min(params.cap, kRandomEnumerationBudget);
  const auto max_d = max_enumerable_dim(f.modulus(), budget);
  constexpr std::int64_t kFixed = 3;
  return run_trials("thm5", common_params(params, {"n", "k", "p"}), kFixed + params.trials, params.workers,
                    [&](std::int64_t i) {
    if (i == 0) return extremal_tightness(ExtremalKind::u1s, f, n, k, params.cap);
    if (i == 1) return extremal_tightness(ExtremalKind::u2s, f, n, k, params.cap);
    TrialResult r;
    if (i == 2) {
      const auto best = std::max(extremal_dimension(ExtremalKind::u1s, n, k), extremal_dimension(ExtremalKind::u2s, n, k));
      r.expect(best == u_s(n, k), "", "u_s(n,k) = max dim U1, U2 = " + str(best), str(u_s(n, k)));
      return r;
    }
    SplitMix64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(i - kFixed)));
    std::optional<AffineSpace> s;
    switch (i % 3) {
      case 0: {
        const auto d = static_cast<std::size_t>(rng.below(std::min(max_d, ambient_dimension(RandomKind::symmetric, n)) + 1));
        s = random_space(RandomKind::symmetric, n, d, f, rng.next(), BaseMode::uniform);
        r.stats["random_symmetric"] += 1;
        break;
      }
      case 1: {
        const auto d = static_cast<std::size_t>(rng.below(std::min(max_d, ambient_dimension(RandomKind::disjoint_support_ws, n)) + 1));
        s = random_space(RandomKind::disjoint_support_ws, n, d, f, rng.next(), BaseMode::uniform);
        r.stats["random_weakly_symmetric"] += 1;
        break;
      }
      default: {
        const auto kind = rng.below(2) == 0 ? ExtremalKind::u1s : ExtremalKind::u2s;
        const int kk = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        s = conjugated_extremal_subspace(kind, f, n, kk, max_d, rng);
        r.stats["random_extremal_subspace"] += 1;
      }
    }
    const auto text = serialize_space(*s);
    const auto rho = static_cast<int>(max_rank_oracle(*s, params.cap));
    const auto g = leading_graph(*s);
    const auto dim = static_cast<std::int64_t>(g.size());
    r.expect(mu(g) <= rho, text, "mu(G_S) <= rho(S) = " + str(rho), str(mu(g)));
    r.expect(dim <= u_s(n, rho), text, "dim S <= u_s(n, rho) = " + str(u_s(n, rho)), str(dim));
    r.stats["bound_checks"] += 1;
    if (rho == k) r.stats["bound_checks_at_k"] += 1;
    return r;
  });
}

namespace {

// Edge sets of the two extremal graph families at matching parameter k.
std::vector<LoopGraph> extremal_graphs(int n, int k, bool loops) {
  const int t = k / 2;
  std::vector<LoopGraph> out;
  LoopGraph corner(n), hubs(n);
  for (const auto& e : candidate_edges(n, loops)) {
    if (loops ? e.b < k : e.b < k + 1) corner.add_edge(e);
    if (e.a < t || (loops && k % 2 == 1 && e.a == t && e.b == t)) hubs.add_edge(e);
  }
  if (loops || k + 1 <= n) out.push_back(corner);
  out.push_back(hubs);
  return out;
}

}  // namespace

VerificationReport verify_erdos_gallai(int n, bool loops, std::int64_t trials, std::uint64_t seed) {
  require_order(n, kMaxGraphOrder);
  const bool exhaustive = loops ? n <= 5 : n <= 6;
  VerificationReport report;
  report.suite = loops ? "erdos-gallai-loops" : "erdos-gallai";
  report.params = {{"n", static_cast<std::uint64_t>(n)}, {"loops", loops ? 1u : 0u}, {"exhaustive", exhaustive ? 1u : 0u}};
  if (!exhaustive) {
    report.params.emplace_back("trials", static_cast<std::uint64_t>(trials));
    report.params.emplace_back("seed", seed);
  }
  auto bound = [&](int k) { return loops ? u_s(n, k) : u_a(n, k); };
  auto applicable = [&](int k) { return loops || k < n; };
  std::vector<std::int64_t> max_edges(static_cast<std::size_t>(n) + 1, -1);

  auto check = [&](const LoopGraph& g) {
    const int k = mu(g);
    const auto size = static_cast<std::int64_t>(g.size());
    max_edges[k] = std::max(max_edges[k], size);
    if (!applicable(k)) {
      ++report.pass;
      return;
    }
    if (size <= bound(k)) {
      ++report.pass;
    } else {
      report.record_failure({serialize_graph(g), "|G| <= " + std::to_string(bound(k)) + " at mu = " + std::to_string(k),
                             std::to_string(size)});
    }
  };

  if (exhaustive) {
    for_each_graph(n, loops, check);
  } else {
    const auto cand = candidate_edges(n, loops);
    for (std::int64_t i = 0; i < trials; ++i) {
      SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      LoopGraph g(n);
      if (i % 2 == 0) {
        const auto density = rng.below(9);
        for (const auto& e : cand)
          if (rng.below(8) < density) g.add_edge(e);
      } else {
        const int kk = loops ? static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1))
                             : 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 1) / 2 + 1)));
        const auto family = extremal_graphs(n, kk, loops);
        const auto& source = family[rng.below(family.size())];
        for (const auto& e : source.edges())
          if (rng.below(4) != 0) g.add_edge(e);
      }
      check(g);
    }
  }

  // Tightness: the extremal families attain the bound for every feasible k.
  for (int k = 0; k <= n; ++k) {
    if (!applicable(k) || (!loops && k % 2 != 0)) continue;
    std::int64_t best = -1;
    for (const auto& g : extremal_graphs(n, k, loops)) {
      if (mu(g) != k)
        report.record_failure({serialize_graph(g), "extremal graph with mu = " + std::to_string(k), std::to_string(mu(g))});
      best = std::max(best, static_cast<std::int64_t>(g.size()));
    }
    if (best != bound(k))
      report.record_failure({"", "extremal graphs attain " + std::to_string(bound(k)) + " at k = " + std::to_string(k),
                             std::to_string(best)});
    if (exhaustive && max_edges[k] != bound(k))
      report.record_failure({"", "exhaustive maximum |G| = " + std::to_string(bound(k)) + " at mu = " + std::to_string(k),
                             std::to_string(max_edges[k])});
    report.stats["tight_k_checked"] += 1;
  }
  report.stats["graphs_checked"] = exhaustive ? static_cast<std::int64_t>(graph_count(n, loops)) : trials;
  return report;
}

bool is_suite_id(std::string_view id) {
  return id == "all" || std::find(std::begin(kSuiteIds), std::end(kSuiteIds), id) != std::end(kSuiteIds);
}

SuiteParams default_params(std::string_view suite) {
  SuiteParams p;
  if (suite == "thm1") p = {.n = 5, .k = 2, .p = 3, .d = 4};
  else if (suite == "thm2") p = {.n = 6, .k = 2, .p = 2, .d = 5};
  else if (suite == "cor3") p = {.n = 4, .k = 2, .p = 2, .d = 3};
  else if (suite == "thm4") p = {.n = 5, .k = 2, .p = 2, .d = 0};
  else if (suite == "thm5") p = {.n = 5, .k = 3, .p = 3, .d = 0};
  else if (suite == "erdos-gallai") p = {.n = 5, .k = 0, .p = 2, .d = 0};
  return p;
}

std::vector<VerificationReport> run_suite(std::string_view id, const SuiteParams& params) {
  if (id == "all") {
    std::vector<VerificationReport> out;
    for (auto suite : kSuiteIds) {
      auto p = default_params(suite);
      p.trials = params.trials;
      p.seed = params.seed;
      p.cap = params.cap;
      p.workers = params.workers;
      for (auto& r : run_suite(suite, p)) out.push_back(std::move(r));
    }
    return out;
  }
  if (id == "counterexamples") return {verify_counterexamples_f2()};
  if (id == "thm1") return {verify_thm1(params)};
  if (id == "thm2") return {verify_thm2(params)};
  if (id == "cor3") return {verify_cor3(params)};
  if (id == "thm4") return {verify_thm4(params)};
  if (id == "thm5") return {verify_thm5(params)};
  if (id == "erdos-gallai")
    return {verify_erdos_gallai(params.n, false, params.trials, params.seed),
            verify_erdos_gallai(params.n, true, params.trials, params.seed)};
  throw DomainError("unknown suite '" + std::string(id) + "'");
}

}  // namespace rankmatch
