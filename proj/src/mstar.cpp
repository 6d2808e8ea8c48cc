#include "scld/mstar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "scld/harness.hpp"

namespace scld {

namespace {

std::int64_t cap_binomial(std::int32_t n, int k) {
  BigInt cap = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k + 1));
  if (!cap.fits_slong_p())
    fail(errc::invalid_argument, "C(n,k+1) exceeds the searchable range");
  return mpz_get_si(cap.get_mpz_t());
}

// Truncate the bound template (n, m s_1(G), ..., m s_k(G)) at dim(H): the
// extremal problem for H ignores dimensions above dim(H).
std::vector<std::int64_t> bounds_at(const ModelParams& params,
                                    const std::vector<std::int64_t>& sG,
                                    std::int64_t m, int dim_h) {
  std::vector<std::int64_t> b{params.n};
  for (int i = 1; i <= dim_h; ++i) b.push_back(m * sG[i]);
  return b;
}

}  // namespace

KThreshold k_h_threshold(const ModelParams& params, const SimplicialComplex& G,
                         const SimplicialComplex& H, MStarMode mode) {
  const int k = G.dimension();
  if (k < 1) fail(errc::invalid_argument, "pattern must have dimension >= 1");
  if (H.vertex_count() == 0 || H.dimension() < 1)
    fail(errc::invalid_subcomplex, "H must contain a positive-dimension face");
  if (count_ordered(G, H) == 0)
    fail(errc::invalid_subcomplex, "H is not a subcomplex of the pattern");
  if (params.n < 1) fail(errc::invalid_argument, "need n >= 1");

  const auto sG = G.simplex_counts();
  const int dim_h = H.dimension();
  const std::int64_t cap = cap_binomial(params.n, k);

  LogQuantity psi_h = psi(params, H);

  KThreshold out;
  if (psi_h.zero) {
    out.value = 0;
    out.empty = true;
    return out;
  }

  auto predicate = [&](std::int64_t m) -> bool {
    if (mode == MStarMode::oracle_exact) {
      std::int64_t N = brute_force_N(H, bounds_at(params, sG, m, dim_h));
      if (N == 0) return true;
      if (psi_h.exact_log) {
        return LogValue::log_of_integer(BigInt(static_cast<long>(N)))
                   .compare(*psi_h.exact_log) <= 0;
      }
      return std::log(static_cast<double>(N)) <= psi_h.log_value + 1e-12;
    }
    if (psi_h.exact_log) {
      LPSolution sol = solve_gamma_exact(
          H, log_bounds_of_integers(bounds_at(params, sG, m, dim_h)));
      return sol.gamma_exact.compare(*psi_h.exact_log) <= 0;
    }
    std::vector<std::int64_t> b = bounds_at(params, sG, m, dim_h);
    std::vector<double> fb(b.begin(), b.end());
    LPSolution sol = solve_gamma(H, fb);
    return sol.gamma <= psi_h.log_value + 1e-9 * (1.0 + std::abs(psi_h.log_value));
  };

  if (!predicate(1)) {
    out.value = 0;
    out.empty = true;
    return out;
  }
  if (predicate(cap)) {
    out.value = cap;
    out.capped = true;
    return out;
  }
  // largest m with predicate true; invariant lo true, hi false
  std::int64_t lo = 1, hi = cap;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (predicate(mid))
      lo = mid;
    else
      hi = mid;
  }
  out.value = lo;
  return out;
}

MStarResult mstar(const ModelParams& params, const SimplicialComplex& G,
                  MStarMode mode, int threads) {
  const int k = G.dimension();
  if (k < 1) fail(errc::invalid_argument, "pattern must have dimension >= 1");
  if (k > params.k_max) fail(errc::invalid_argument, "pattern dimension exceeds k_max");

  MStarResult out;
  out.mode = mode;

  // q undefined (all p_i = 1): every K_H saturates; flag it.
  bool any_positive = false;
  for (int i = 1; i <= k; ++i) {
    if (params.exponent_form() ? params.alpha(i).positive() : params.prob(i) < 1.0)
      any_positive = true;
  }
  out.no_positive_alpha = !any_positive;

  std::vector<SimplicialComplex> classes = enumerate_subcomplexes(G);
  std::vector<KThreshold> thresholds(classes.size());
  parallel_for(static_cast<std::int64_t>(classes.size()), threads,
               [&](std::int64_t i) {
                 thresholds[i] = k_h_threshold(params, G, classes[i], mode);
               });

  const auto sG = G.simplex_counts();
  std::int64_t cap_total = cap_binomial(params.n, k) / sG[k];

  std::size_t best = 0;
  auto better = [&](std::size_t a, std::size_t b) {
    // prefer smaller K_H; ties prefer more faces, then higher dimension
    if (thresholds[a].value != thresholds[b].value)
      return thresholds[a].value < thresholds[b].value;
    if (classes[a].total_faces() != classes[b].total_faces())
      return classes[a].total_faces() > classes[b].total_faces();
    if (classes[a].dimension() != classes[b].dimension())
      return classes[a].dimension() > classes[b].dimension();
    return classes[a].canonical_key() < classes[b].canonical_key();
  };
  for (std::size_t i = 1; i < classes.size(); ++i)
    if (better(i, best)) best = i;

  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (thresholds[i].empty) out.empty = true;
    out.per_h.emplace_back(classes[i], thresholds[i]);
  }
  out.argmin = classes[best];
  out.argmin_key = classes[best].canonical_key();
  out.value = std::min(thresholds[best].value, cap_total);
  out.capped = thresholds[best].value > cap_total;
  if (out.empty) out.value = 0;
  return out;
}

std::string MStarResult::to_json() const {
  nlohmann::json j;
  j["value"] = value;
  j["capped"] = capped;
  j["empty"] = empty;
  j["no_positive_alpha"] = no_positive_alpha;
  j["mode"] = mode == MStarMode::lp_surrogate ? "lp-surrogate" : "oracle-exact";
  j["argmin"] = nlohmann::json::parse(argmin.to_json());
  nlohmann::json per = nlohmann::json::array();
  for (const auto& [H, kh] : per_h) {
    nlohmann::json row;
    row["subcomplex"] = nlohmann::json::parse(H.to_json());
    row["k_h"] = kh.value;
    row["capped"] = kh.capped;
    row["empty"] = kh.empty;
    per.push_back(row);
  }
  j["per_h"] = per;
  return j.dump();
}

Rational predicted_exponent(int k, int q, const Rational& alpha_q) {
  if (q > k || q < 1) fail(errc::invalid_argument, "need 1 <= q <= k");
  if (alpha_q <= 0) fail(errc::invalid_argument, "alpha_q must be positive");
  return Rational(q + 1) - Rational(binomial(k, q)) * alpha_q;
}

std::vector<SweepRow> sweep(const SimplicialComplex& G,
                            const std::vector<Alpha>& alphas,
                            const std::vector<std::int32_t>& n_grid, int threads) {
  const int k = G.dimension();
  if (k < 1) fail(errc::invalid_argument, "pattern must have dimension >= 1");
  int k_max = std::max(k, static_cast<int>(alphas.size()));

  int q = 0;
  for (int i = 1; i <= static_cast<int>(alphas.size()); ++i)
    if (alphas[i - 1].positive()) {
      q = i;
      break;
    }
  double predicted = std::numeric_limits<double>::quiet_NaN();
  if (q >= 1 && q <= k && !alphas[q - 1].infinite)
    predicted = to_double(predicted_exponent(k, q, alphas[q - 1].value));

  std::vector<SweepRow> rows(n_grid.size());
  parallel_for(static_cast<std::int64_t>(n_grid.size()), threads, [&](std::int64_t i) {
    std::int32_t n = n_grid[i];
    ModelParams params = ModelParams::from_alphas(n, alphas, k_max);
    MStarResult r = mstar(params, G, MStarMode::lp_surrogate, 1);
    SweepRow row;
    row.n = n;
    row.mstar_value = r.value;
    row.ln_n = std::log(static_cast<double>(n));
    row.ln_mstar = r.value > 0 ? std::log(static_cast<double>(r.value))
                               : std::numeric_limits<double>::quiet_NaN();
    row.predicted = predicted;
    row.argmin_key = r.argmin_key;
    rows[i] = row;
  });
  return rows;
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "# scld-sweep-v1\n";
  os << "n,mstar,ln_n,ln_mstar,predicted_exponent,argmin_H\n";
  for (const SweepRow& r : rows) {
    os << r.n << ',' << r.mstar_value << ',' << format_double(r.ln_n) << ','
       << format_double(r.ln_mstar) << ',' << format_double(r.predicted) << ",\""
       << r.argmin_key << "\"\n";
  }
  return os.str();
}

FitResult exponent_fit(const SimplicialComplex& G, const std::vector<Alpha>& alphas,
                       const std::vector<std::int32_t>& n_grid, int threads) {
  if (n_grid.size() < 4)
    fail(errc::invalid_argument, "need at least 4 grid points");
  FitResult out;
  out.rows = sweep(G, alphas, n_grid, threads);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::int64_t m = 0;
  for (const SweepRow& r : out.rows) {
    if (!std::isfinite(r.ln_mstar)) continue;
    sx += r.ln_n;
    sy += r.ln_mstar;
    sxx += r.ln_n * r.ln_n;
    sxy += r.ln_n * r.ln_mstar;
    ++m;
  }
  if (m < 2) fail(errc::invalid_argument, "not enough finite M* values to fit");
  double denom = m * sxx - sx * sx;
  out.slope = (m * sxy - sx * sy) / denom;
  out.intercept = (sy - out.slope * sx) / m;
  double ss = 0;
  for (const SweepRow& r : out.rows) {
    if (!std::isfinite(r.ln_mstar)) continue;
    double e = r.ln_mstar - (out.slope * r.ln_n + out.intercept);
    ss += e * e;
  }
  out.residual = std::sqrt(ss / m);
  out.predicted = out.rows.empty() ? 0.0 : out.rows.front().predicted;
  out.deviation = std::abs(out.slope - out.predicted);

  const int k = G.dimension();
  try {
    CriticalProfile prof = critical_profile(alphas, std::max(k, 1));
    out.subcritical_ok = k >= 1 && prof.subcritical[k - 1];
    out.extra_condition_ok = k >= 1 && prof.extra_condition[k - 1];
  } catch (const Error&) {
    out.subcritical_ok = false;
    out.extra_condition_ok = false;
  }
  return out;
}

}  // namespace scld
