#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "scld/mstar.hpp"

using namespace scld;

namespace {

SimplicialComplex edge_pattern() {
  return SimplicialComplex::from_facets(2, {{0, 1}});
}

std::vector<Alpha> alphas_of(std::initializer_list<const char*> vals) {
  std::vector<Alpha> out;
  for (const char* v : vals) out.push_back(parse_alpha(v));
  return out;
}

// largest m with (s*m)^den <= n^num, by integer arithmetic
std::int64_t threshold_by_roots(std::int64_t n, std::int64_t s, long num, long den) {
  BigInt rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(num));
  std::int64_t lo = 0, hi = 2;
  auto ok = [&](std::int64_t m) {
    BigInt lhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(s * m),
                  static_cast<unsigned long>(den));
    return lhs <= rhs;
  };
  while (ok(hi)) hi *= 2;
  lo = hi / 2;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) lo = mid; else hi = mid;
  }
  return lo;
}

}  // namespace

TEST_CASE("edge threshold closed form, boundary equality included") {
  // K for the edge: largest m <= C(n,2) with m <= n^{2-alpha};
  // n = 100, alpha = 0.5 gives exactly 1000
  ModelParams params = ModelParams::from_alphas(100, alphas_of({"0.5"}), 1);
  auto kh = k_h_threshold(params, edge_pattern(), edge_pattern());
  CHECK(kh.value == 1000);
  CHECK(!kh.capped);
}

TEST_CASE("q-skeleton thresholds match the closed form") {
  // H = q-skeleton of sigma_k: K_H = floor(n^{q+1-C(k,q) alpha_q} / C(k+1,q+1))
  struct Case { int k, q; std::int64_t n; const char* alpha; long num, den; };
  // exponent q+1 - C(k,q) alpha_q as num/den; bounds scale s = C(k+1,q+1)
  for (auto [k, q, n, alpha, num, den] :
       {Case{3, 2, 50, "0.2", 12, 5},    // 3 - 3*(1/5) = 12/5
        Case{2, 1, 80, "0.2", 8, 5},     // 2 - 2*(1/5) = 8/5
        Case{3, 1, 40, "0.2", 7, 5}}) {  // 2 - 3*(1/5) = 7/5
    std::vector<Alpha> alphas;
    for (int i = 1; i < q; ++i) alphas.push_back(Alpha::of(0));
    alphas.push_back(parse_alpha(alpha));
    ModelParams params = ModelParams::from_alphas(n, alphas, k);
    SimplicialComplex G = full_simplex(k);
    SimplicialComplex H = complete_complex(k + 1, q);
    auto kh = k_h_threshold(params, G, H);
    BigInt coeff = binomial(k + 1, q + 1);
    std::int64_t s = mpz_get_si(coeff.get_mpz_t());
    CHECK(kh.value == threshold_by_roots(n, s, num, den));
  }
}

TEST_CASE("subcomplexes below q saturate at the cap") {
  // alpha_1 = 0: Psi_edge = n^2 while gamma <= 2 ln n, so K_edge = C(n,3)
  ModelParams params = ModelParams::from_alphas(10, alphas_of({"0", "0.1"}), 2);
  auto kh = k_h_threshold(params, full_simplex(2), edge_pattern());
  CHECK(kh.value == 120);  // C(10,3)
  CHECK(kh.capped);
}

TEST_CASE("mstar for the edge") {
  ModelParams params = ModelParams::from_alphas(100, alphas_of({"0.5"}), 1);
  auto r = mstar(params, edge_pattern());
  CHECK(r.value == 1000);
  CHECK(are_isomorphic(r.argmin, edge_pattern()));
  CHECK(!r.no_positive_alpha);
  CHECK(r.per_h.size() == 1);
}

TEST_CASE("mstar for the triangle picks the 1-skeleton") {
  ModelParams params = ModelParams::from_alphas(60, alphas_of({"0.2", "0.1"}), 2);
  auto r = mstar(params, full_simplex(2));
  // path and hollow triangle tie at floor(n^{1.6}/3); the richer H wins
  auto hollow = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(are_isomorphic(r.argmin, hollow));
  CHECK(r.value == threshold_by_roots(60, 3, 8, 5));
  CHECK(r.per_h.size() == 4);
}

TEST_CASE("mstar with no positive exponent warns and caps") {
  ModelParams params = ModelParams::from_alphas(10, alphas_of({"0"}), 1);
  auto r = mstar(params, edge_pattern());
  CHECK(r.no_positive_alpha);
  CHECK(r.value == 45);  // C(10,2) / s_1
}

TEST_CASE("oracle and surrogate thresholds agree within the bracket") {
  ModelParams params = ModelParams::from_alphas(6, alphas_of({"0.5"}), 1);
  auto lp = k_h_threshold(params, edge_pattern(), edge_pattern());
  auto oracle = k_h_threshold(params, edge_pattern(), edge_pattern(),
                              MStarMode::oracle_exact);
  CHECK(lp.value == 14);
  CHECK(oracle.value == 14);
  double factor = 4.0 * 2.0;  // s0^{s0} * Aut for the edge
  CHECK(static_cast<double>(oracle.value) <=
        factor * static_cast<double>(lp.value) + 1);
  CHECK(static_cast<double>(lp.value) <=
        factor * static_cast<double>(oracle.value) + 1);
}

TEST_CASE("threshold predicate is monotone in m") {
  // scan a small window around the reported threshold with direct solves
  ModelParams params = ModelParams::from_alphas(30, alphas_of({"0.4"}), 2);
  SimplicialComplex G = full_simplex(2);
  for (const auto& H : enumerate_subcomplexes(G)) {
    auto kh = k_h_threshold(params, G, H);
    auto psi_h = psi(params, H);
    REQUIRE(psi_h.exact_log.has_value());
    const auto sG = G.simplex_counts();
    auto holds = [&](std::int64_t m) {
      std::vector<std::int64_t> b{params.n};
      for (int i = 1; i <= H.dimension(); ++i) b.push_back(m * sG[i]);
      auto sol = solve_gamma_exact(H, log_bounds_of_integers(b));
      return sol.gamma_exact.compare(*psi_h.exact_log) <= 0;
    };
    if (!kh.capped) CHECK(!holds(kh.value + 1));
    CHECK(holds(std::max<std::int64_t>(1, kh.value)));
    CHECK(holds(std::max<std::int64_t>(1, kh.value / 2)));
  }
}

TEST_CASE("predicted exponents") {
  CHECK(predicted_exponent(1, 1, Rational(2, 5)) == Rational(8, 5));
  CHECK(predicted_exponent(2, 1, Rational(1, 5)) == Rational(8, 5));
  CHECK(predicted_exponent(3, 3, Rational(1, 10)) == Rational(39, 10));
  CHECK_THROWS_AS(predicted_exponent(1, 2, Rational(1, 2)), Error);
}

TEST_CASE("edge exponent fit") {
  auto fit = exponent_fit(edge_pattern(), alphas_of({"0.5"}), {50, 100, 200, 400});
  CHECK(fit.predicted == doctest::Approx(1.5));
  CHECK(std::abs(fit.slope - 1.5) <= 0.02);
  CHECK(fit.subcritical_ok);
  CHECK(fit.extra_condition_ok);
}

TEST_CASE("fit still runs when the extra condition fails") {
  // 3 a1 + 4 a2 >= 1 violates the k = 3 extra condition
  auto fit = exponent_fit(full_simplex(3), alphas_of({"0.05", "0.22"}),
                          {16, 24, 32, 40});
  CHECK(!fit.extra_condition_ok);
  CHECK(fit.subcritical_ok);
  CHECK(std::isfinite(fit.slope));
  CHECK_THROWS_AS(exponent_fit(edge_pattern(), alphas_of({"0.5"}), {50, 100}), Error);
}

TEST_CASE("sweep emits one row per grid point") {
  auto rows = sweep(edge_pattern(), alphas_of({"0.5"}), {50, 100});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 50);
  CHECK(rows[1].mstar_value == 1000);
  std::string csv = sweep_to_csv(rows);
  CHECK(csv.find("# scld-sweep-v1") == 0);
  CHECK(csv.find("n,mstar,ln_n,ln_mstar,predicted_exponent,argmin_H") != std::string::npos);
}
