#ifndef SCLD_HARNESS_HPP
#define SCLD_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scld/complex.hpp"
#include "scld/count.hpp"
#include "scld/model.hpp"
#include "scld/parallel.hpp"

namespace scld {

enum class TailTarget { ordered_count, simplex_count, betti };

struct TailConfig {
  ModelParams params;
  SimplicialComplex pattern;
  double epsilon = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  TailTarget target = TailTarget::ordered_count;

  static TailConfig from_json(const std::string& text);
  std::string to_json() const;
};

struct TailSummary {
  double threshold = 0.0;
  double mean_expected = 0.0;       // the comparison mean for the target
  double empirical_mean = 0.0;
  std::int64_t exceed_count = 0;
  double tail_frequency = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
  std::optional<double> log_probability;     // absent when frequency is 0
  std::optional<double> exact_binomial_tail; // edge pattern only
  std::optional<double> predicted_exponent;  // exponent form, conditions ok
  bool conditions_ok = false;
};

struct TailRecord {
  TailConfig config;
  std::vector<double> counts;   // per trial
  std::vector<bool> exceed;
  TailSummary summary;

  std::string to_csv() const;       // schema-tagged, byte-stable
  std::string summary_json() const;
};

TailRecord tail_estimate(const TailConfig& config, int threads = 1);

/// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(std::int64_t successes,
                                          std::int64_t trials);

/// Exact P(2 Bin(C(n,2), p1) >= threshold): the closed-form tail for the
/// edge pattern used as the Monte Carlo oracle.
double exact_edge_tail(std::int32_t n, double p1, double threshold);

struct MeanCheck {
  double expected = 0.0;
  double empirical = 0.0;
  double std_error = 0.0;
  double z = 0.0;                        // |empirical - expected| / SE
  std::optional<double> tau_prediction;  // n^{tau_j}/(j+1)! for simplex patterns
  std::optional<double> tau_ratio;
  std::int64_t trials = 0;
  std::string to_json() const;
};

/// Empirical mean of count_ordered against mu_{o,n}; needs trials >= 100.
MeanCheck mean_check(const ModelParams& params,
                     const SimplicialComplex& pattern, std::int64_t trials,
                     std::uint64_t seed, int threads = 1);

struct ExponentReportRow {
  std::int32_t n = 0;
  std::int64_t mstar_value = 0;
  double upper_rate = 0.0;        // M*, the upper-bound rate up to a constant
  double lower_rate = 0.0;        // M* ln(prod p_j)^{-1}
  double ldp_upper = 0.0;         // n^e
  double ldp_lower = 0.0;         // n^e ln n
  double predicted = 0.0;
  bool unverified_regime = false; // extra condition violated
};

struct ExponentReport {
  std::vector<ExponentReportRow> rows;
  bool subcritical_ok = false;
  bool extra_condition_ok = false;
  bool betti_mode = false;
  bool betti_condition_ok = false;
  std::string to_csv() const;
  std::string to_json() const;
};

/// Prediction table (no simulation): per n, M* and the bracketing rates.
ExponentReport exponent_report(const SimplicialComplex& pattern,
                               const std::vector<Alpha>& alphas,
                               const std::vector<std::int32_t>& n_grid,
                               double epsilon, bool betti_mode = false,
                               int threads = 1);

}  // namespace scld

#endif
