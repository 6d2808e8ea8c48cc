#ifndef SCLD_MSTAR_HPP
#define SCLD_MSTAR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scld/complex.hpp"
#include "scld/count.hpp"
#include "scld/lp.hpp"
#include "scld/model.hpp"

namespace scld {

enum class MStarMode { lp_surrogate, oracle_exact };

struct KThreshold {
  std::int64_t value = 0;   // 0 when even m = 1 fails the predicate
  bool capped = false;      // hit the C(n, k+1) ceiling
  bool empty = false;       // no admissible m
};

/// K_H: largest m <= C(n, k+1) with N~(n, m s_1(G), ..., m s_k(G); H) <=
/// Psi_{H,n}, found by binary search (the predicate is monotone in m).
/// Surrogate N~ = e^gamma; oracle mode uses brute_force_N on tiny instances.
KThreshold k_h_threshold(const ModelParams& params,
                         const SimplicialComplex& G,
                         const SimplicialComplex& H,
                         MStarMode mode = MStarMode::lp_surrogate);

struct MStarResult {
  std::int64_t value = 0;
  bool capped = false;               // the C(n,k+1)/s_k(G) ceiling was the min
  bool empty = false;                // some K_H had no admissible m
  bool no_positive_alpha = false;    // q undefined: value is the cap
  std::string argmin_key;            // canonical key of the minimizing H
  SimplicialComplex argmin;
  std::vector<std::pair<SimplicialComplex, KThreshold>> per_h;
  MStarMode mode = MStarMode::lp_surrogate;
  std::string to_json() const;
};

/// min over subcomplex classes H of K_H, capped at floor(C(n,k+1)/s_k(G)).
/// Ties prefer the H with more faces, then higher dimension.
MStarResult mstar(const ModelParams& params, const SimplicialComplex& G,
                  MStarMode mode = MStarMode::lp_surrogate, int threads = 1);

/// q+1 - C(k,q) alpha_q.
Rational predicted_exponent(int k, int q, const Rational& alpha_q);

struct SweepRow {
  std::int32_t n = 0;
  std::int64_t mstar_value = 0;
  double ln_n = 0.0;
  double ln_mstar = 0.0;
  double predicted = 0.0;
  std::string argmin_key;
};

std::vector<SweepRow> sweep(const SimplicialComplex& G,
                            const std::vector<Alpha>& alphas,
                            const std::vector<std::int32_t>& n_grid,
                            int threads = 1);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;       // RMS residual of the in-log fit
  double predicted = 0.0;
  double deviation = 0.0;      // |slope - predicted|
  bool subcritical_ok = false;
  bool extra_condition_ok = false;
  std::vector<SweepRow> rows;
};

/// Least-squares slope of ln M*(n) against ln n on the grid; condition
/// violations are reported in the flags, the fit is still computed.
FitResult exponent_fit(const SimplicialComplex& G,
                       const std::vector<Alpha>& alphas,
                       const std::vector<std::int32_t>& n_grid,
                       int threads = 1);

}  // namespace scld

#endif
