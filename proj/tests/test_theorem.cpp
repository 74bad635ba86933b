#include <doctest.h>

#include "oracles.hpp"
#include "rankmatch/errors.hpp"
#include "rankmatch/rng.hpp"
#include "rankmatch/suites.hpp"
#include "rankmatch/theorem.hpp"

using namespace rankmatch;

namespace {

const FieldSpec f2(2);
const FieldSpec f3(3);

AffineSpace gf2_linear_space(FieldSpec f) {
  return AffineSpace(Matrix(f, 3, 3),
                     {Matrix(f, {{1, 1, 0}, {1, 0, 0}, {0, 0, 0}}), Matrix(f, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}})},
                     SpaceKind::symmetric);
}

Matrix j2(FieldSpec f) { return Matrix(f, {{0, 1}, {-1, 0}}); }

std::vector<std::uint32_t> random_point(std::size_t t, std::uint32_t p, SplitMix64& rng) {
  std::vector<std::uint32_t> pt(t);
  for (auto& v : pt) v = static_cast<std::uint32_t>(rng.below(p));
  return pt;
}

}  // namespace

TEST_CASE("determinant polynomial of the 3x3 GF(3) example") {
  const auto s = canonicalize(gf2_linear_space(f3));
  const auto sel = select_matching(s, {Edge{0, 1}, Edge{2, 2}});
  CHECK(sel.deltas == std::vector<int>{2, 1});
  const auto pencil = restrict_pencil(s, sel);
  const auto f = det_polynomial(pencil);
  Polynomial expected(f3, 2);
  const unsigned x2y[] = {2, 1}, xy2[] = {1, 2};
  expected.add_term(Monomial::from_exponents(x2y), 2);
  expected.add_term(Monomial::from_exponents(xy2), 2);
  CHECK(f == expected);
  CHECK(coeff_check_det(s, sel).value() == 2);
  const int deltas[] = {2, 1};
  CHECK(coeff_check_det(pencil, deltas).value() == 2);
  const int bad[] = {1, 1};
  CHECK_THROWS_AS(coeff_check_det(pencil, bad), DomainError);
}

TEST_CASE("determinant polynomial edge cases") {
  const Pencil constant{Matrix::identity(f3, 2), {}, {0, 1}};
  CHECK(det_polynomial(constant) == Polynomial::constant(f3, 0, 1));
  const Pencil linear{Matrix(f3, {{2}}), {Matrix(f3, {{1}})}, {0}};
  const int one[] = {1};
  CHECK(coeff_check_det(linear, one).value() == 1);
}

TEST_CASE("symbolic determinant and Pfaffian agree with evaluation") {
  SplitMix64 rng(41);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t n = 1 + rng.below(5);
      const std::size_t t = rng.below(4);
      Pencil pen{Matrix(f, n, n), {}, {}};
      for (std::size_t i = 0; i < n; ++i) {
        pen.vertices.push_back(i);
        for (std::size_t j = 0; j < n; ++j) pen.base.set(i, j, static_cast<std::int64_t>(rng.below(p)));
      }
      for (std::size_t g = 0; g < t; ++g) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<std::int64_t>(rng.below(p)));
        pen.generators.push_back(m);
      }
      const auto poly = det_polynomial(pen);
      for (int k = 0; k < 5; ++k) {
        const auto pt = random_point(t, p, rng);
        CHECK(poly.evaluate(pt).value() == oracle::leibniz_det(pen.at(pt)));
      }
      CHECK(poly.total_degree() <= static_cast<int>(n));

      const std::size_t m = 2 * (1 + rng.below(3));
      auto alt = [&]() {
        Matrix a(f, m, m);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i + 1; j < m; ++j) {
            const auto v = static_cast<std::int64_t>(rng.below(p));
            a.set(i, j, v);
            a.set(j, i, -v);
          }
        return a;
      };
      Pencil apen{alt(), {}, {}};
      for (std::size_t i = 0; i < m; ++i) apen.vertices.push_back(i);
      for (std::size_t g = 0; g < t; ++g) apen.generators.push_back(alt());
      const auto pf = pf_polynomial(apen);
      for (int k = 0; k < 5; ++k) {
        const auto pt = random_point(t, p, rng);
        CHECK(pf.evaluate(pt).value() == oracle::matching_pfaffian(apen.at(pt)));
      }
      CHECK(pf * pf == det_polynomial(apen));
    }
  }
}

TEST_CASE("Pfaffian polynomial examples") {
  // pf [[0, 1 + x], [1 + x, 0]] = 1 + x over GF(2).
  const Pencil pen{Matrix(f2, {{0, 1}, {1, 0}}), {Matrix(f2, {{0, 1}, {1, 0}})}, {0, 1}};
  auto expected = Polynomial::constant(f2, 1, 1) + Polynomial::variable(f2, 1, 0);
  CHECK(pf_polynomial(pen) == expected);
  CHECK_THROWS_AS(pf_polynomial(Pencil{Matrix(f3, {{1, 0}, {0, 0}}), {}, {0, 1}}), DomainError);
}

TEST_CASE("Pfaffian leading coefficient") {
  for (auto f : {f2, f3, FieldSpec(5)}) {
    Matrix base(f, 2, 2);
    base.set(0, 1, 2);
    base.set(1, 0, -2);
    const auto c = coeff_check_pf(Pencil{base, {j2(f)}, {0, 1}});
    CHECK(c.coefficient.value() == 1);
    CHECK(c.closed_form.value() == 1);
  }
  // Matching {1,2} {3,4} with unit leading entries and zero base.
  Matrix b1(f3, 4, 4), b2(f3, 4, 4);
  b1.set(0, 1, 1);
  b1.set(1, 0, -1);
  b2.set(2, 3, 1);
  b2.set(3, 2, -1);
  const auto c = coeff_check_pf(Pencil{Matrix(f3, 4, 4), {b2, b1}, {0, 1, 2, 3}});
  CHECK(c.coefficient.value() == 1);
  CHECK(c.closed_form.value() == 1);
  CHECK(c.order == std::vector<std::size_t>{1, 0});
  // Leading cells {1,3} {2,4}: sign -1, scaled entries 2 and 2.
  Matrix c1(f3, 4, 4), c2(f3, 4, 4);
  c1.set(0, 2, 2);
  c1.set(2, 0, -2);
  c1.set(0, 1, 1);
  c1.set(1, 0, -1);
  c2.set(1, 3, 2);
  c2.set(3, 1, -2);
  c2.set(2, 3, 0);
  const auto d = coeff_check_pf(Pencil{Matrix(f3, 4, 4), {c1, c2}, {0, 1, 2, 3}});
  CHECK(d.closed_form.value() == oracle::modp(-4, 3));
  CHECK(d.coefficient == d.closed_form);
}

TEST_CASE("witness search over GF(3) on the 3x3 example") {
  const auto w = witness_search_ws(gf2_linear_space(f3));
  CHECK(w.found);
  CHECK(w.mu == 3);
  CHECK(w.point == std::vector<std::uint32_t>{1, 1});
  CHECK(w.achieved_rank == 3);
  CHECK(rank(w.matrix) == 3);
  CHECK(w.search_size == 4);
  CHECK_THROWS_AS(witness_search_ws(gf2_linear_space(f2)), DomainError);
}

TEST_CASE("witness search on full spaces") {
  const auto h3 = random_space(RandomKind::symmetric, 3, 6, FieldSpec(5), 3);
  const auto w = witness_search_ws(h3);
  CHECK(w.mu == 3);
  CHECK(w.achieved_rank == 3);
  const auto a4 = random_space(RandomKind::alternating, 4, 6, f2, 3, BaseMode::structured);
  const auto v = witness_search_alt(a4);
  CHECK(v.mu == 4);
  CHECK(v.achieved_rank == 4);
}

TEST_CASE("alternating witness search") {
  const auto w = witness_search_alt(AffineSpace(j2(f2), {j2(f2)}, SpaceKind::alternating));
  CHECK(w.found);
  CHECK(w.point == std::vector<std::uint32_t>{0});
  CHECK(w.achieved_rank == 2);
  const auto z = witness_search_alt(AffineSpace(Matrix(f2, 2, 2), {j2(f2)}, SpaceKind::alternating));
  CHECK(z.point == std::vector<std::uint32_t>{1});
  const AffineSpace two(Matrix(f2, {{0, 1}, {1, 0}}), {Matrix(f2, {{0, 1}, {1, 0}})}, SpaceKind::alternating);
  CHECK(witness_search_alt(two).mu == 2);
  CHECK(max_rank_oracle(two) == 2);
  CHECK_THROWS_AS(witness_search_alt(gf2_linear_space(f3)), HypothesisViolation);
  CHECK_THROWS_AS(witness_search_alt(AffineSpace(Matrix::identity(f3, 2), {j2(f3)}, SpaceKind::alternating)),
                  HypothesisViolation);
}

TEST_CASE("witness searches on random spaces reach mu and never exceed the oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FieldSpec f(seed % 2 ? 3 : 5);
    const auto kind = seed % 3 == 0 ? RandomKind::disjoint_support_ws
                                    : (seed % 3 == 1 ? RandomKind::symmetric : RandomKind::alternating);
    const auto s = random_space(kind, 4, 3, f, seed);
    const auto w = witness_search_ws(s);
    REQUIRE(w.found);
    CHECK(w.achieved_rank >= static_cast<std::size_t>(w.mu));
    CHECK(w.achieved_rank <= oracle::max_rank(s));
    CHECK(oracle::member_set(s).count({w.matrix.values().begin(), w.matrix.values().end()}) == 1);

    const auto a = random_space(RandomKind::alternating, 5, 3, seed % 2 ? f2 : f3, seed, BaseMode::structured);
    const auto v = witness_search_alt(a);
    REQUIRE(v.found);
    CHECK(v.achieved_rank >= static_cast<std::size_t>(v.mu));
    CHECK(v.achieved_rank <= oracle::max_rank(a));
  }
}

TEST_CASE("GF(2) counterexamples") {
  for (int which : {1, 2}) {
    const auto s = counterexample_f2(which);
    const auto g = leading_graph(s);
    CHECK(mu(g) == which + 1);
    CHECK(oracle::max_rank(s) == static_cast<std::size_t>(which));
    CHECK(nu(g) == which);
  }
  const auto r = verify_counterexamples_f2();
  CHECK(r.pass == 2);
  CHECK(r.passed());
}

TEST_CASE("suites run clean on small parameters") {
  SuiteParams p;
  p.trials = 30;
  p.n = 4;
  p.d = 3;
  p.p = 3;
  CHECK(verify_thm1(p).passed());
  p.p = 2;
  CHECK(verify_thm2(p).passed());
  CHECK(verify_cor3(p).passed());
  p.k = 2;
  CHECK(verify_thm4(p).passed());
  p.p = 3;
  p.k = 3;
  CHECK(verify_thm5(p).passed());
  CHECK(verify_erdos_gallai(4, false, 0, 1).passed());
  CHECK(verify_erdos_gallai(4, true, 0, 1).passed());
  CHECK(verify_erdos_gallai(8, false, 200, 1).passed());
}

TEST_CASE("suite parameter validation") {
  SuiteParams p;
  p.p = 2;
  CHECK_THROWS_AS(verify_thm1(p), DomainError);
  p.p = 3;
  p.k = 3;
  CHECK_THROWS_AS(verify_thm4(p), DomainError);
  p.p = 2;
  CHECK_THROWS_AS(verify_thm5(p), DomainError);
  p.p = 4;
  CHECK_THROWS_AS(verify_thm2(p), DomainError);
  CHECK_THROWS_AS(run_suite("nope", p), DomainError);
}

TEST_CASE("reports do not depend on the worker count") {
  SuiteParams p = default_params("thm2");
  p.trials = 40;
  p.workers = 1;
  const auto one = to_json(verify_thm2(p));
  p.workers = 4;
  CHECK(to_json(verify_thm2(p)) == one);
}

TEST_CASE("trial runner classifies outcomes") {
  const auto r = run_trials("demo", {{"n", 1}}, 4, 2, [](std::int64_t i) {
    TrialResult t;
    if (i == 1) throw HypothesisViolation("not applicable");
    if (i == 2) throw DomainError("broken");
    t.expect(i != 3, "", "i != 3", "3");
    return t;
  });
  CHECK(r.pass == 1);
  CHECK(r.skip == 1);
  CHECK(r.fail == 2);
  CHECK_FALSE(r.passed());
  CHECK(r.failures.size() == 2);
}
