#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scld/count.hpp"
#include "scld/model.hpp"

using namespace scld;

namespace {

std::vector<Alpha> alphas_of(std::initializer_list<const char*> vals) {
  std::vector<Alpha> out;
  for (const char* v : vals) out.push_back(parse_alpha(v));
  return out;
}

}  // namespace

TEST_CASE("tau profile and critical dimension for alpha = 0.3") {
  auto prof = critical_profile(alphas_of({"0.3"}), 5);
  CHECK(prof.q == 1);
  REQUIRE(prof.tau.size() == 5);
  CHECK(*prof.tau[0] == Rational(17, 10));
  CHECK(*prof.tau[1] == Rational(21, 10));
  CHECK(*prof.tau[2] == Rational(11, 5));
  CHECK(*prof.tau[3] == Rational(2));
  CHECK(*prof.tau[4] == Rational(3, 2));
  REQUIRE(prof.k_star.has_value());
  CHECK(*prof.k_star == 3);
  // k* maximizes tau
  for (const auto& t : prof.tau) CHECK(*t <= *prof.tau[*prof.k_star - 1]);
  CHECK(prof.subcritical[2]);   // k = 3
  CHECK(!prof.subcritical[3]);  // k = 4: 4 * 0.3 > 1
}

TEST_CASE("boundary equality yields no critical dimension") {
  auto prof = critical_profile(alphas_of({"0.2"}), 4);
  CHECK(*prof.tau[3] == Rational(3));  // tau_4 = 5 - 10*0.2
  CHECK(!prof.k_star.has_value());
  CHECK(prof.degenerate_boundary);
}

TEST_CASE("all-zero alphas are rejected") {
  CHECK_THROWS_WITH_AS(critical_profile(alphas_of({"0", "0"}), 3),
                       doctest::Contains("NoPositiveExponent"), Error);
}

TEST_CASE("extra condition flags") {
  // 3 a1 + 4 a2 = 1.03 >= 1 violates the k = 3 condition at k0 = 2
  auto prof = critical_profile(alphas_of({"0.05", "0.22"}), 3);
  CHECK(prof.extra_condition[1]);   // k = 2: a1 + a2 < 1
  CHECK(!prof.extra_condition[2]);  // k = 3
}

TEST_CASE("betti-tail condition") {
  // alpha = (0.2, 0.3): k* = 2, lhs - 1 = 0.5 >= 2 alpha_1 = 0.4
  auto yes = critical_profile(alphas_of({"0.2", "0.3"}), 3);
  REQUIRE(yes.k_star.has_value());
  CHECK(*yes.k_star == 2);
  CHECK(yes.betti_condition);
  // alpha = (0.3): k* = 3, lhs - 1 = 0.2 < 2.5 alpha_1 = 0.75
  auto no = critical_profile(alphas_of({"0.3"}), 5);
  CHECK(!no.betti_condition);
}

TEST_CASE("infinite alphas") {
  auto prof = critical_profile(alphas_of({"0", "inf"}), 3);
  CHECK(prof.q == 2);
  CHECK(prof.tau[0].has_value());
  CHECK(!prof.tau[1].has_value());  // -inf
  CHECK(!prof.k_star.has_value());
}

TEST_CASE("deterministic sampling with all-or-nothing probabilities") {
  auto complete = sample(ModelParams::from_probs(4, {1.0, 1.0}), 99);
  CHECK(complete.simplex_counts() == std::vector<std::int64_t>{4, 6, 4});

  auto vertices_only = sample(ModelParams::from_probs(7, {0.0, 1.0}), 99);
  CHECK(vertices_only.simplex_counts() == std::vector<std::int64_t>{7});

  // p2 = 0 stops everything above dimension 1
  auto graph_only = sample(ModelParams::from_probs(5, {1.0, 0.0, 1.0}), 1);
  CHECK(graph_only.simplex_counts() == std::vector<std::int64_t>{5, 10});
}

TEST_CASE("sampling is reproducible and seed-sensitive") {
  ModelParams params = ModelParams::from_alphas(16, alphas_of({"0.4"}), 2);
  auto a = sample(params, 12345);
  auto b = sample(params, 12345);
  CHECK(a == b);
  auto c = sample(params, 12346);
  CHECK(a.simplex_counts() != c.simplex_counts());  // overwhelmingly likely
}

TEST_CASE("sampled faces always have their boundary present") {
  ModelParams params = ModelParams::from_probs(10, {0.6, 0.7, 0.5});
  for (std::uint64_t s = 0; s < 20; ++s) {
    auto K = sample(params, s);
    for (int d = 1; d <= K.dimension(); ++d)
      for (const Face& f : K.faces(d))
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
          Face sub;
          for (std::size_t i = 0; i < f.size(); ++i)
            if (i != skip) sub.push_back(f[i]);
          CHECK(K.contains(sub));
        }
  }
}

TEST_CASE("per-face uniforms are stable and order-independent") {
  double u = face_uniform(42, 1, {3, 7});
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
  CHECK(u == face_uniform(42, 1, {3, 7}));
  CHECK(u != face_uniform(43, 1, {3, 7}));
  CHECK(u != face_uniform(42, 2, {3, 7}));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
}

TEST_CASE("empirical edge count matches the binomial mean") {
  // n = 20, p1 = 0.5: mean edges = C(20,2)/2 = 95
  ModelParams params = ModelParams::from_probs(20, {0.5});
  const int trials = 10000;
  double total = 0, total_sq = 0;
  for (int t = 0; t < trials; ++t) {
    auto K = sample(params, derive_seed(777, t));
    double e = static_cast<double>(K.count(1));
    total += e;
    total_sq += e * e;
  }
  double mean = total / trials;
  double var = total_sq / trials - mean * mean;
  double se = std::sqrt(var / trials);
  CHECK(std::abs(mean - 95.0) <= 3.0 * se);
}

TEST_CASE("empirical face counts match the product mean across dimensions") {
  // E s_j = C(n, j+1) prod_{i<=j} p_i^{C(j+1,i+1)}
  ModelParams params = ModelParams::from_alphas(12, alphas_of({"0.3"}), 3);
  const int trials = 4000;
  std::vector<double> total(4, 0), total_sq(4, 0);
  for (int t = 0; t < trials; ++t) {
    auto K = sample(params, derive_seed(31337, t));
    for (int j = 1; j <= 3; ++j) {
      double c = static_cast<double>(K.count(j));
      total[j] += c;
      total_sq[j] += c * c;
    }
  }
  for (int j = 1; j <= 3; ++j) {
    double p1 = params.prob(1);
    double expected = to_double(Rational(binomial(12, j + 1))) *
                      std::pow(p1, to_double(Rational(binomial(j + 1, 2))));
    double mean = total[j] / trials;
    double var = total_sq[j] / trials - mean * mean;
    double se = std::sqrt(var / trials);
    CHECK(std::abs(mean - expected) <= 4.0 * se + 1e-9);
  }
}

TEST_CASE("model parameter validation") {
  CHECK_THROWS_AS(ModelParams::from_probs(5, {1.5}), Error);
  CHECK_THROWS_AS(ModelParams::from_probs(-1, {0.5}), Error);
  CHECK_THROWS_AS(ModelParams::from_alphas(5, alphas_of({"0.1", "0.2"}), 1), Error);
  ModelParams p = ModelParams::from_alphas(5, alphas_of({"0.5"}), 3);
  CHECK(p.prob(2) == 1.0);  // alpha defaults to 0 beyond the vector
  CHECK(p.prob(1) == doctest::Approx(std::pow(5.0, -0.5)));
}
