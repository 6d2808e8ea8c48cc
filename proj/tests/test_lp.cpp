#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "scld/count.hpp"
#include "scld/lp.hpp"

using namespace scld;

namespace {

SimplicialComplex edge_pattern() {
  return SimplicialComplex::from_facets(2, {{0, 1}});
}

SimplicialComplex random_pattern(std::mt19937_64& rng, int max_n, int max_dim) {
  while (true) {
    int n = 2 + static_cast<int>(rng() % (max_n - 1));
    std::vector<Face> facets;
    int m = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < m; ++t) {
      int sz = 2 + static_cast<int>(rng() % std::min(n - 1, max_dim));
      std::vector<std::int32_t> all(n);
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      facets.push_back(Face(all.begin(), all.begin() + sz));
    }
    auto K = SimplicialComplex::from_facets(n, facets);
    if (K.dimension() >= 1) return K;
  }
}

// primal/dual feasibility and objective equality checked from the raw
// vectors, independent of the solver's own bookkeeping
void verify_certificates_exact(const SimplicialComplex& G,
                               const std::vector<LogValue>& log_bounds,
                               const LPSolution& sol) {
  const int nv = G.vertex_count();
  for (int v = 0; v < nv; ++v) {
    CHECK(sol.primal_exact[v].sign() >= 0);
    CHECK(sol.primal_exact[v].compare(log_bounds[0]) <= 0);
    CHECK(sol.dual_vertex_exact[v] >= 0);
  }
  for (int d = 1; d <= G.dimension(); ++d)
    for (std::size_t f = 0; f < G.faces(d).size(); ++f) {
      LogValue sum;
      for (std::int32_t v : G.faces(d)[f]) sum += sol.primal_exact[v];
      CHECK(sum.sign() >= 0);
      CHECK(sum.compare(log_bounds[d]) <= 0);
      CHECK(sol.dual_face_exact[d - 1][f] >= 0);
    }
  // dual feasibility: y_v + sum_{faces containing v} z >= 1
  for (int v = 0; v < nv; ++v) {
    Rational total = sol.dual_vertex_exact[v];
    for (int d = 1; d <= G.dimension(); ++d)
      for (std::size_t f = 0; f < G.faces(d).size(); ++f) {
        const Face& face = G.faces(d)[f];
        if (std::binary_search(face.begin(), face.end(), v))
          total += sol.dual_face_exact[d - 1][f];
      }
    CHECK(total >= 1);
  }
  // strong duality, exactly
  LogValue dual_obj;
  for (int v = 0; v < nv; ++v)
    dual_obj.add_scaled(sol.dual_vertex_exact[v], log_bounds[0]);
  for (int d = 1; d <= G.dimension(); ++d)
    for (std::size_t f = 0; f < G.faces(d).size(); ++f)
      dual_obj.add_scaled(sol.dual_face_exact[d - 1][f], log_bounds[d]);
  CHECK(dual_obj.compare(sol.gamma_exact) == 0);
}

}  // namespace

TEST_CASE("gamma for the edge") {
  auto sol = solve_gamma_exact(edge_pattern(), log_bounds_of_integers({10, 4}));
  CHECK(sol.gamma_exact.compare(LogValue::log_of_integer(BigInt(4))) == 0);
  CHECK(sol.gamma == doctest::Approx(std::log(4.0)));

  auto flt = solve_gamma(edge_pattern(), {10.0, 4.0});
  CHECK(flt.gamma == doctest::Approx(std::log(4.0)));
  CHECK(flt.duality_gap <= 1e-9 * (1 + std::abs(flt.gamma)));
}

TEST_CASE("gamma for the full triangle with a binding triple constraint") {
  auto sol = solve_gamma_exact(full_simplex(2), log_bounds_of_integers({10, 100, 5}));
  CHECK(sol.gamma_exact.compare(LogValue::log_of_integer(BigInt(5))) == 0);
  // the symmetric point is optimal but the simplex may return another
  // vertex of the optimal face; the objective is what is pinned
  auto flt = solve_gamma(full_simplex(2), {10.0, 100.0, 5.0});
  CHECK(flt.gamma == doctest::Approx(std::log(5.0)));
}

TEST_CASE("all-ones bounds force gamma to zero") {
  auto sol = solve_gamma_exact(full_simplex(2), log_bounds_of_integers({1, 1, 1}));
  CHECK(sol.gamma_exact.is_zero());
  auto path = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
  auto sol2 = solve_gamma_exact(path, log_bounds_of_integers({1, 1}));
  CHECK(sol2.gamma_exact.is_zero());
}

TEST_CASE("q-skeleton closed form in exponent mode") {
  // G = q-skeleton of sigma_k, bounds (n, m C(k+1,2), ..., m C(k+1,q+1))
  // with C(k+1,q+1) m <= n^{q+1}: gamma = (k+1)/(q+1) ln(m C(k+1,q+1))
  struct Case { int k, q; std::int64_t n, m; };
  for (auto [k, q, n, m] : {Case{3, 2, 16, 4}, Case{2, 1, 9, 3}, Case{3, 1, 25, 5},
                            Case{4, 2, 10, 6}}) {
    SimplicialComplex G = complete_complex(k + 1, q);
    std::vector<std::int64_t> bounds{n};
    for (int i = 1; i <= q; ++i) {
      BigInt coeff = binomial(k + 1, i + 1);
      bounds.push_back(m * mpz_get_si(coeff.get_mpz_t()));
    }
    // regime check: C(k+1,q+1) m <= n^{q+1}
    BigInt lhs = binomial(k + 1, q + 1) * BigInt(static_cast<long>(m));
    BigInt rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(n),
                  static_cast<unsigned long>(q + 1));
    REQUIRE(lhs <= rhs);

    auto sol = solve_gamma_exact(G, log_bounds_of_integers(bounds));
    LogValue expect = LogValue::log_of_integer(BigInt(bounds[q]));
    expect *= Rational(k + 1, q + 1);
    CHECK(sol.gamma_exact.compare(expect) == 0);
  }
}

TEST_CASE("exact solutions agree with the vertex-enumeration oracle") {
  // exponent mode: all bounds are powers of one base, so the oracle can
  // work in pure rationals
  std::mt19937_64 rng(404);
  for (int t = 0; t < 30; ++t) {
    auto G = random_pattern(rng, 4, 3);
    const std::uint64_t base = 7;
    std::vector<Rational> beta;
    for (int d = 0; d <= G.dimension(); ++d) {
      Rational b(static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 3));
      b.canonicalize();
      beta.push_back(b);
    }
    auto sol = solve_gamma_exact(G, log_bounds_of_exponents(base, beta));
    auto expected = oracle::lp_vertex_enumeration(G, beta);
    REQUIRE(expected.has_value());
    auto got = sol.gamma_exact.as_multiple_of_log(BigInt(static_cast<unsigned long>(base)));
    REQUIRE(got.has_value());
    CHECK(*got == *expected);
  }
}

TEST_CASE("random instances have exact certificates") {
  std::mt19937_64 rng(505);
  for (int t = 0; t < 40; ++t) {
    auto G = random_pattern(rng, 6, 3);
    std::vector<std::int64_t> bounds;
    for (int d = 0; d <= G.dimension(); ++d)
      bounds.push_back(1 + static_cast<std::int64_t>(rng() % 400));
    auto lb = log_bounds_of_integers(bounds);
    auto sol = solve_gamma_exact(G, lb);
    verify_certificates_exact(G, lb, sol);

    std::vector<double> fb(bounds.begin(), bounds.end());
    auto flt = solve_gamma(G, fb);
    CHECK(flt.duality_gap <= 1e-9 * (1.0 + std::abs(flt.gamma)));
    CHECK(flt.gamma == doctest::Approx(sol.gamma).epsilon(1e-9));
  }
}

TEST_CASE("gamma is monotone in every bound") {
  std::mt19937_64 rng(606);
  for (int t = 0; t < 15; ++t) {
    auto G = random_pattern(rng, 5, 2);
    std::vector<std::int64_t> bounds;
    for (int d = 0; d <= G.dimension(); ++d)
      bounds.push_back(1 + static_cast<std::int64_t>(rng() % 50));
    auto base_sol = solve_gamma_exact(G, log_bounds_of_integers(bounds));
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      auto larger = bounds;
      larger[i] += 1 + static_cast<std::int64_t>(rng() % 20);
      auto sol = solve_gamma_exact(G, log_bounds_of_integers(larger));
      CHECK(sol.gamma_exact.compare(base_sol.gamma_exact) >= 0);
    }
  }
}

TEST_CASE("sandwich bounds for the edge") {
  auto sb = n_hat_bounds(edge_pattern(), {10, 4});
  CHECK(sb.upper == doctest::Approx(16.0));  // s0^s0 e^gamma = 4*4
  // true N for the edge is min(C(m0,2), m1) = 4
  std::int64_t n_true = 4;
  CHECK(brute_force_N(edge_pattern(), {6, 4}) == 4);  // oracle agrees in range
  CHECK(static_cast<double>(n_true) <= sb.upper + 1e-9);
  CHECK(sb.lower <= static_cast<double>(n_true) + 1e-9);
}

TEST_CASE("sandwich bounds degenerate when s exceeds m") {
  auto sb = n_hat_bounds(full_simplex(2), {3, 2, 1});
  CHECK(sb.lower == 0.0);
  CHECK(sb.upper == 0.0);
}

TEST_CASE("oracle examples") {
  CHECK(brute_force_N(edge_pattern(), {3, 3}) == 3);
  CHECK(brute_force_N(edge_pattern(), {2, 1}) == 1);
  CHECK(brute_force_N(full_simplex(2), {4, 2, 1}) == 0);
  CHECK_THROWS_WITH_AS(brute_force_N(edge_pattern(), {7, 3}),
                       doctest::Contains("OracleTooLarge"), Error);
  CHECK_THROWS_WITH_AS(brute_force_N(full_simplex(3), {5, 9, 9, 9}),
                       doctest::Contains("OracleTooLarge"), Error);
}

TEST_CASE("oracle monotonicity in the bounds") {
  auto path = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}});
  std::int64_t base = brute_force_N(path, {4, 3});
  CHECK(brute_force_N(path, {5, 3}) >= base);
  CHECK(brute_force_N(path, {4, 4}) >= base);
  std::int64_t tri = brute_force_N(full_simplex(2), {4, 4, 1});
  CHECK(brute_force_N(full_simplex(2), {4, 4, 2}) >= tri);
}

TEST_CASE("sandwich property on randomized oracle-solvable queries") {
  std::mt19937_64 rng(707);
  int done = 0;
  while (done < 25) {
    auto G = random_pattern(rng, 4, 2);
    const auto s = G.simplex_counts();
    std::vector<std::int64_t> bounds;
    bounds.push_back(s[0] + static_cast<std::int64_t>(rng() % (7 - s[0])));
    for (std::size_t d = 1; d < s.size(); ++d)
      bounds.push_back(s[d] + static_cast<std::int64_t>(rng() % 6));
    if (bounds[0] > 6) continue;
    auto sb = n_hat_bounds(G, bounds);
    std::int64_t n_true = brute_force_N(G, bounds);
    CHECK(sb.lower <= static_cast<double>(n_true) * (1 + 1e-9) + 1e-9);
    CHECK(static_cast<double>(n_true) <= sb.upper * (1 + 1e-9) + 1e-9);
    ++done;
  }
}

TEST_CASE("blow-up witness constructions") {
  // edge with x = (ln 2, ln 2), c = 1: complete bipartite 2x2
  LPSolution sol;
  sol.mode = LPMode::exact;
  sol.primal_exact = {LogValue::log_of_integer(BigInt(2)),
                      LogValue::log_of_integer(BigInt(2))};
  auto F = blowup_witness(edge_pattern(), sol, Rational(1), {4, 4});
  CHECK(F.simplex_counts() == std::vector<std::int64_t>{4, 4});
  CHECK(count_unordered(F, edge_pattern()) == 4);

  // zero solution, c = 1: F isomorphic to G
  LPSolution zero;
  zero.mode = LPMode::exact;
  zero.primal_exact.assign(3, LogValue{});
  auto F2 = blowup_witness(full_simplex(2), zero, Rational(1), {3, 3, 1});
  CHECK(are_isomorphic(F2, full_simplex(2)));
  CHECK(count_unordered(F2, full_simplex(2)) == 1);

  // unequal blocks: s_2(F) is the product of the block sizes
  LPSolution uneven;
  uneven.mode = LPMode::exact;
  uneven.primal_exact = {LogValue{}, LogValue::log_of_integer(BigInt(2)),
                         LogValue::log_of_integer(BigInt(3))};
  auto F3 = blowup_witness(full_simplex(2), uneven, Rational(1), {6, 11, 6});
  CHECK(F3.count(2) == 6);
  CHECK(F3.count(1) == 11);

  // bound violations name the dimension
  CHECK_THROWS_WITH_AS(blowup_witness(full_simplex(2), uneven, Rational(1), {6, 11, 5}),
                       doctest::Contains("dimension 2"), Error);
}

TEST_CASE("witness validity on solved instances") {
  std::mt19937_64 rng(808);
  for (int t = 0; t < 20; ++t) {
    auto G = random_pattern(rng, 4, 2);
    const auto s = G.simplex_counts();
    std::vector<std::int64_t> bounds;
    for (std::size_t d = 0; d < s.size(); ++d)
      bounds.push_back(s[d] + static_cast<std::int64_t>(rng() % 40));
    auto lb = log_bounds_of_integers(bounds);
    auto sol = solve_gamma_exact(G, lb);
    Rational c = witness_constant(G, bounds);
    auto F = blowup_witness(G, sol, c, bounds);
    auto sf = F.simplex_counts();
    for (std::size_t d = 0; d < sf.size(); ++d) CHECK(sf[d] <= bounds[d]);
    double lower = n_hat_bounds(G, bounds).lower;
    CHECK(static_cast<double>(count_unordered(F, G)) >= lower * (1 - 1e-9) - 1e-9);
  }
}

TEST_CASE("comparison-lemma gap") {
  // G = H = edge, k = 1, m0 = 10, m1 = 2, m2 = 8
  auto g = compare_lemma_gap(edge_pattern(), edge_pattern(), 10, 2, 8);
  CHECK(g.gamma1 == doctest::Approx(std::log(2.0)));
  CHECK(g.gamma2 == doctest::Approx(std::log(8.0)));
  CHECK(g.gap == doctest::Approx(std::log(2.0)));
  CHECK(g.sign == 1);

  auto same = compare_lemma_gap(edge_pattern(), edge_pattern(), 10, 5, 5);
  CHECK(same.sign == 0);
  CHECK(same.gap == doctest::Approx(0.0));

  auto tri = compare_lemma_gap(full_simplex(2), full_simplex(2), 10, 1, 8);
  CHECK(tri.sign >= 0);

  CHECK_THROWS_WITH_AS(compare_lemma_gap(edge_pattern(), edge_pattern(), 3, 2, 100),
                       doctest::Contains("InvalidRange"), Error);
  CHECK_THROWS_WITH_AS(compare_lemma_gap(edge_pattern(), edge_pattern(), 3, 0, 2),
                       doctest::Contains("InvalidRange"), Error);
}

TEST_CASE("comparison-lemma gap is nonnegative on random admissible triples") {
  std::mt19937_64 rng(909);
  auto subs = enumerate_subcomplexes(full_simplex(2));
  int done = 0;
  while (done < 40) {
    auto G = full_simplex(2);
    const auto& H = subs[rng() % subs.size()];
    if (H.dimension() != G.dimension()) continue;
    std::int64_t m0 = 2 + static_cast<std::int64_t>(rng() % 30);
    std::int64_t cap = m0 * m0 * m0 / G.count(2);
    if (cap < 2) continue;
    std::int64_t m2 = 2 + static_cast<std::int64_t>(rng() % (cap - 1));
    std::int64_t m1 = 1 + static_cast<std::int64_t>(rng() % m2);
    auto g = compare_lemma_gap(G, H, m0, m1, m2);
    CHECK(g.sign >= 0);
    ++done;
  }
}
