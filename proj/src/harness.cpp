#include "scld/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "scld/homology.hpp"
#include "scld/mstar.hpp"
#include "scld/parallel.hpp"

namespace scld {

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials) {
  if (trials <= 0) fail(errc::invalid_argument, "trials must be positive");
  const double z = 1.959963984540054;  // 97.5% normal quantile
  double n = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (phat + z2 / (2 * n)) / denom;
  double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double exact_edge_tail(std::int32_t n, double p, double threshold) {
  const std::int64_t M = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (p <= 0.0) return 0.0 >= threshold ? 1.0 : 0.0;
  if (p >= 1.0) return static_cast<double>(2 * M) >= threshold ? 1.0 : 0.0;
  long double lp = std::log(static_cast<long double>(p));
  long double lq = std::log1p(static_cast<long double>(-p));
  long double tail = 0.0L;
  for (std::int64_t j = M; j >= 0; --j) {
    if (static_cast<double>(2 * j) < threshold) break;  // same event as the MC side
    long double lc = std::lgamma(static_cast<long double>(M + 1)) -
                     std::lgamma(static_cast<long double>(j + 1)) -
                     std::lgamma(static_cast<long double>(M - j + 1));
    tail += std::exp(lc + j * lp + (M - j) * lq);
  }
  return static_cast<double>(std::min(tail, 1.0L));
}

// --- config ------------------------------------------------------------------

namespace {

TailTarget parse_target(const std::string& s) {
  if (s == "ordered-count") return TailTarget::ordered_count;
  if (s == "simplex-count") return TailTarget::simplex_count;
  if (s == "betti") return TailTarget::betti;
  fail(errc::parse_error, "unknown target '" + s + "'");
}

const char* target_name(TailTarget t) {
  switch (t) {
    case TailTarget::ordered_count: return "ordered-count";
    case TailTarget::simplex_count: return "simplex-count";
    case TailTarget::betti: return "betti";
  }
  return "?";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TailConfig TailConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad config JSON: ") + e.what());
  }
  TailConfig cfg;
  try {
    std::int32_t n = j.at("n").get<std::int32_t>();
    if (j.contains("alpha")) {
      std::vector<Alpha> alphas;
      for (const auto& a : j.at("alpha"))
        alphas.push_back(a.is_string() ? parse_alpha(a.get<std::string>())
                                       : parse_alpha(nlohmann::to_string(a)));
      int kmax = j.value("kmax", static_cast<int>(alphas.size()));
      cfg.params = ModelParams::from_alphas(n, std::move(alphas), kmax);
    } else if (j.contains("p")) {
      cfg.params = ModelParams::from_probs(n, j.at("p").get<std::vector<double>>());
    } else {
      fail(errc::parse_error, "config needs \"alpha\" or \"p\"");
    }
    const auto& pat = j.at("pattern");
    cfg.pattern = pat.is_string() ? SimplicialComplex::read_file(pat.get<std::string>())
                                  : SimplicialComplex::from_json(pat.dump());
    cfg.epsilon = j.at("epsilon").get<double>();
    cfg.trials = j.at("trials").get<std::int64_t>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.target = parse_target(j.value("target", "ordered-count"));
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("bad config JSON: ") + e.what());
  }
  if (cfg.epsilon <= 0) fail(errc::invalid_argument, "epsilon must be > 0");
  if (cfg.trials < 1) fail(errc::invalid_argument, "trials must be >= 1");
  return cfg;
}

std::string TailConfig::to_json() const {
  nlohmann::json j;
  j["n"] = params.n;
  if (params.exponent_form()) {
    nlohmann::json a = nlohmann::json::array();
    for (const Alpha& al : params.alphas) a.push_back(alpha_to_string(al));
    j["alpha"] = a;
    j["kmax"] = params.k_max;
  } else {
    j["p"] = params.probs;
  }
  j["pattern"] = nlohmann::json::parse(pattern.to_json());
  j["epsilon"] = epsilon;
  j["trials"] = trials;
  j["seed"] = seed;
  j["target"] = target_name(target);
  return j.dump();
}

// --- tail experiment -----------------------------------------------------------

namespace {

bool is_single_edge(const SimplicialComplex& G) {
  auto s = G.simplex_counts();
  return s.size() == 2 && s[0] == 2 && s[1] == 1;
}

bool is_full_simplex(const SimplicialComplex& G) {
  int d = G.dimension();
  if (d < 0 || G.vertex_count() != d + 1) return false;
  for (int j = 0; j <= d; ++j)
    if (BigInt(static_cast<long>(G.count(j))) != binomial(d + 1, j + 1)) return false;
  return true;
}

}  // namespace

TailRecord tail_estimate(const TailConfig& config, int threads) {
  config.params.validate();
  if (config.epsilon <= 0) fail(errc::invalid_argument, "epsilon must be > 0");
  if (config.trials < 1) fail(errc::invalid_argument, "trials must be >= 1");

  const SimplicialComplex& G = config.pattern;
  const ModelParams& params = config.params;
  const int k = G.dimension();

  TailRecord rec;
  rec.config = config;

  double mean = 0.0;
  std::optional<int> betti_dim;
  if (config.target == TailTarget::ordered_count) {
    LogQuantity mu = expected_ordered(params, G);
    if (mu.zero || mu.value <= 0) fail(errc::degenerate_mean, "mu_{o,n}(G) = 0");
    mean = mu.value;
  } else if (config.target == TailTarget::simplex_count) {
    LogQuantity mu = expected_unordered(params, G);
    if (mu.zero || mu.value <= 0) fail(errc::degenerate_mean, "mu_n(G) = 0");
    mean = mu.value;
  } else {
    if (!params.exponent_form())
      fail(errc::invalid_argument, "betti target needs the exponent form");
    CriticalProfile prof = critical_profile(params.alphas, params.k_max);
    if (!prof.k_star)
      fail(errc::invalid_argument, "no critical dimension for these alphas");
    betti_dim = *prof.k_star;
    auto tau = prof.tau[*prof.k_star - 1];
    if (!tau) fail(errc::degenerate_mean, "tau at k* is -inf");
    mean = std::exp(to_double(*tau) * std::log(static_cast<double>(params.n))) /
           to_double(Rational(factorial(*prof.k_star + 1)));
  }
  const double threshold = (1.0 + config.epsilon) * mean;

  rec.counts.assign(config.trials, 0.0);
  std::vector<char> exceed(config.trials, 0);
  parallel_for(config.trials, threads, [&](std::int64_t t) {
    SimplicialComplex K = sample(params, derive_seed(config.seed, t));
    double c = 0.0;
    switch (config.target) {
      case TailTarget::ordered_count:
        c = static_cast<double>(count_ordered(K, G));
        break;
      case TailTarget::simplex_count:
        c = static_cast<double>(K.count(k));
        break;
      case TailTarget::betti: {
        auto b = betti_vector(K, 2);
        int d = *betti_dim;
        c = d < static_cast<int>(b.size()) ? static_cast<double>(b[d]) : 0.0;
        break;
      }
    }
    rec.counts[t] = c;
    exceed[t] = c >= threshold ? 1 : 0;
  });
  rec.exceed.assign(exceed.begin(), exceed.end());

  TailSummary& s = rec.summary;
  s.threshold = threshold;
  s.mean_expected = mean;
  double total = 0.0;
  std::int64_t hits = 0;
  for (std::int64_t t = 0; t < config.trials; ++t) {
    total += rec.counts[t];
    hits += exceed[t];
  }
  s.empirical_mean = total / static_cast<double>(config.trials);
  s.exceed_count = hits;
  s.tail_frequency = static_cast<double>(hits) / static_cast<double>(config.trials);
  auto [lo, hi] = wilson_interval(hits, config.trials);
  s.wilson_low = lo;
  s.wilson_high = hi;
  if (hits > 0) s.log_probability = std::log(s.tail_frequency);

  if (config.target == TailTarget::ordered_count && is_single_edge(G))
    s.exact_binomial_tail = exact_edge_tail(params.n, params.prob(1), threshold);

  if (params.exponent_form()) {
    try {
      CriticalProfile prof = critical_profile(params.alphas, std::max(params.k_max, k));
      int dim_for_exp = config.target == TailTarget::betti ? *betti_dim : k;
      if (prof.q >= 1 && prof.q <= dim_for_exp) {
        Alpha aq = params.alpha(prof.q);
        if (!aq.infinite) {
          s.predicted_exponent =
              to_double(predicted_exponent(dim_for_exp, prof.q, aq.value));
          bool sub = dim_for_exp >= 1 && dim_for_exp <= static_cast<int>(prof.subcritical.size()) &&
                     prof.subcritical[dim_for_exp - 1];
          bool extra = dim_for_exp >= 1 &&
                       dim_for_exp <= static_cast<int>(prof.extra_condition.size()) &&
                       prof.extra_condition[dim_for_exp - 1];
          s.conditions_ok = sub && extra &&
                            (config.target != TailTarget::betti || prof.betti_condition);
        }
      }
    } catch (const Error&) {
      // no positive exponent: no prediction
    }
  }
  return rec;
}

std::string TailRecord::to_csv() const {
  std::ostringstream os;
  os << "# scld-tail-v1\n";
  os << "trial,count,exceed\n";
  for (std::size_t t = 0; t < counts.size(); ++t)
    os << t << ',' << format_double(counts[t]) << ',' << (exceed[t] ? 1 : 0) << '\n';
  return os.str();
}

std::string TailRecord::summary_json() const {
  nlohmann::json j;
  j["threshold"] = summary.threshold;
  j["mean_expected"] = summary.mean_expected;
  j["empirical_mean"] = summary.empirical_mean;
  j["exceed_count"] = summary.exceed_count;
  j["tail_frequency"] = summary.tail_frequency;
  j["wilson_low"] = summary.wilson_low;
  j["wilson_high"] = summary.wilson_high;
  if (summary.log_probability) j["log_probability"] = *summary.log_probability;
  else j["log_probability"] = nullptr;
  if (summary.exact_binomial_tail) j["exact_binomial_tail"] = *summary.exact_binomial_tail;
  if (summary.predicted_exponent) j["predicted_exponent"] = *summary.predicted_exponent;
  j["conditions_ok"] = summary.conditions_ok;
  j["trials"] = static_cast<std::int64_t>(counts.size());
  return j.dump();
}

// --- mean check ------------------------------------------------------------------

MeanCheck mean_check(const ModelParams& params, const SimplicialComplex& pattern,
                     std::int64_t trials, std::uint64_t seed, int threads) {
  if (trials < 100) fail(errc::invalid_argument, "need at least 100 trials");
  LogQuantity mu = expected_ordered(params, pattern);

  std::vector<double> counts(trials, 0.0);
  parallel_for(trials, threads, [&](std::int64_t t) {
    SimplicialComplex K = sample(params, derive_seed(seed, t));
    counts[t] = static_cast<double>(count_ordered(K, pattern));
  });

  MeanCheck out;
  out.trials = trials;
  out.expected = mu.zero ? 0.0 : mu.value;
  double total = 0.0;
  for (double c : counts) total += c;
  out.empirical = total / static_cast<double>(trials);
  double ss = 0.0;
  for (double c : counts) ss += (c - out.empirical) * (c - out.empirical);
  double variance = trials > 1 ? ss / static_cast<double>(trials - 1) : 0.0;
  out.std_error = std::sqrt(variance / static_cast<double>(trials));
  double diff = std::abs(out.empirical - out.expected);
  out.z = out.std_error > 0 ? diff / out.std_error
                            : (diff == 0 ? 0.0 : std::numeric_limits<double>::infinity());

  if (params.exponent_form() && is_full_simplex(pattern)) {
    int j = pattern.dimension();
    auto tau = tau_exponent(params.alphas, j);
    if (tau) {
      double pred = std::exp(to_double(*tau) * std::log(static_cast<double>(params.n))) /
                    to_double(Rational(factorial(j + 1)));
      out.tau_prediction = pred;
      double unordered = out.empirical / to_double(Rational(factorial(j + 1)));
      out.tau_ratio = pred > 0 ? unordered / pred : 0.0;
    }
  }
  return out;
}

std::string MeanCheck::to_json() const {
  nlohmann::json j;
  j["expected"] = expected;
  j["empirical"] = empirical;
  j["std_error"] = std_error;
  j["z"] = z;
  j["trials"] = trials;
  if (tau_prediction) j["tau_prediction"] = *tau_prediction;
  if (tau_ratio) j["tau_ratio"] = *tau_ratio;
  return j.dump();
}

// --- exponent report ---------------------------------------------------------------

ExponentReport exponent_report(const SimplicialComplex& pattern,
                               const std::vector<Alpha>& alphas,
                               const std::vector<std::int32_t>& n_grid,
                               double epsilon, bool betti_mode, int threads) {
  if (epsilon <= 0) fail(errc::invalid_argument, "epsilon must be > 0");
  if (alphas.empty()) fail(errc::invalid_argument, "need an exponent vector");
  const int k = pattern.dimension();
  if (k < 1) fail(errc::invalid_argument, "pattern must have dimension >= 1");

  ExponentReport rep;
  rep.betti_mode = betti_mode;

  CriticalProfile prof = critical_profile(alphas, std::max(k, static_cast<int>(alphas.size()) + 1));
  rep.subcritical_ok = k <= static_cast<int>(prof.subcritical.size()) && prof.subcritical[k - 1];
  rep.extra_condition_ok =
      k <= static_cast<int>(prof.extra_condition.size()) && prof.extra_condition[k - 1];
  rep.betti_condition_ok = prof.betti_condition;

  int exp_dim = k;
  if (betti_mode) {
    if (!prof.k_star) fail(errc::invalid_argument, "no critical dimension for these alphas");
    exp_dim = *prof.k_star;
  }
  double e = std::numeric_limits<double>::quiet_NaN();
  if (prof.q >= 1 && prof.q <= exp_dim && !alphas[prof.q - 1].infinite)
    e = to_double(predicted_exponent(exp_dim, prof.q, alphas[prof.q - 1].value));

  // -ln(prod p_j) = (sum_j alpha_j) ln n over 1..k
  Rational alpha_sum = 0;
  bool alpha_sum_finite = true;
  for (int i = 1; i <= k; ++i) {
    Alpha a = i <= static_cast<int>(alphas.size()) ? alphas[i - 1] : Alpha::of(0);
    if (a.infinite) alpha_sum_finite = false;
    else alpha_sum += a.value;
  }

  rep.rows.resize(n_grid.size());
  parallel_for(static_cast<std::int64_t>(n_grid.size()), threads, [&](std::int64_t i) {
    std::int32_t n = n_grid[i];
    ModelParams params =
        ModelParams::from_alphas(n, alphas, std::max(k, static_cast<int>(alphas.size())));
    MStarResult r = mstar(params, pattern, MStarMode::lp_surrogate, 1);
    ExponentReportRow row;
    row.n = n;
    row.mstar_value = r.value;
    double ln_n = std::log(static_cast<double>(n));
    row.upper_rate = static_cast<double>(r.value);
    row.lower_rate = alpha_sum_finite
                         ? static_cast<double>(r.value) * to_double(alpha_sum) * ln_n
                         : std::numeric_limits<double>::infinity();
    row.ldp_upper = std::isnan(e) ? e : std::exp(e * ln_n);
    row.ldp_lower = std::isnan(e) ? e : std::exp(e * ln_n) * ln_n;
    row.predicted = e;
    row.unverified_regime = !rep.extra_condition_ok ||
                            (betti_mode && !rep.betti_condition_ok);
    rep.rows[i] = row;
  });
  return rep;
}

std::string ExponentReport::to_csv() const {
  std::ostringstream os;
  os << "# scld-exponent-report-v1\n";
  os << "n,mstar,upper_rate,lower_rate,ldp_upper,ldp_lower,predicted_exponent,unverified\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.mstar_value << ',' << format_double(r.upper_rate) << ','
       << format_double(r.lower_rate) << ',' << format_double(r.ldp_upper) << ','
       << format_double(r.ldp_lower) << ',' << format_double(r.predicted) << ','
       << (r.unverified_regime ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string ExponentReport::to_json() const {
  nlohmann::json j;
  j["subcritical_ok"] = subcritical_ok;
  j["extra_condition_ok"] = extra_condition_ok;
  j["betti_mode"] = betti_mode;
  j["betti_condition_ok"] = betti_condition_ok;
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["n"] = r.n;
    row["mstar"] = r.mstar_value;
    row["upper_rate"] = r.upper_rate;
    row["lower_rate"] = r.lower_rate;
    row["ldp_upper"] = r.ldp_upper;
    row["ldp_lower"] = r.ldp_lower;
    row["predicted_exponent"] = r.predicted;
    row["unverified_regime"] = r.unverified_regime;
    rows_json.push_back(row);
  }
  j["rows"] = rows_json;
  return j.dump();
}

}  // namespace scld
