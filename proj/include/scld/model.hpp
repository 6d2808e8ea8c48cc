#ifndef SCLD_MODEL_HPP
#define SCLD_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scld/complex.hpp"
#include "scld/rational.hpp"

namespace scld {

/// Parameters of the multi-parameter random complex: n plus either a
/// probability vector (p_1..p_kmax) or an exponent vector (alpha_1..alpha_kmax)
/// with p_i = n^{-alpha_i}. Exponent form keeps exact rationals around for
/// the threshold machinery.
struct ModelParams {
  std::int32_t n = 0;
  int k_max = 1;
  std::vector<double> probs;   // used when alphas empty
  std::vector<Alpha> alphas;   // exponent form; wins when nonempty

  static ModelParams from_probs(std::int32_t n, std::vector<double> probs);
  static ModelParams from_alphas(std::int32_t n, std::vector<Alpha> alphas,
                                 int k_max);

  bool exponent_form() const { return !alphas.empty(); }
  /// p_i for 1 <= i; entries beyond the tracked vector are 1 in exponent
  /// form (alpha = 0) and 0 in probability form.
  double prob(int i) const;
  /// alpha_i, defaulting to 0 beyond the supplied vector.
  Alpha alpha(int i) const;

  void validate() const;
};

/// Exponent diagnostics: q, the tau_j profile, the critical dimension when
/// the strict inequalities pin one down, and the side-condition flags.
struct CriticalProfile {
  int q = 0;  // 0 when no positive exponent (invalid)
  std::vector<std::optional<Rational>> tau;  // tau_1..tau_kmax; nullopt = -inf
  std::optional<int> k_star;
  bool degenerate_boundary = false;         // an equality blocked k*
  std::vector<bool> subcritical;            // index j-1 <=> dimension j
  std::vector<bool> extra_condition;        // per dimension, vacuous if q==k
  bool betti_condition = false;             // defined only when k* exists
  std::string to_json() const;
};

CriticalProfile critical_profile(const std::vector<Alpha>& alphas, int k_max);

/// tau_j = j+1 - sum_{i=1}^{j} C(j+1, i+1) alpha_i; +inf alphas make it -inf,
/// reported via the optional.
std::optional<Rational> tau_exponent(const std::vector<Alpha>& alphas, int j);

/// Draw K(n; p) with the recursive construction: level i faces are kept with
/// probability p_i among candidates whose full boundary survived level i-1.
/// Deterministic in (params, seed); per-face randomness is keyed by
/// (seed, dimension, face tuple) so decisions are order-independent.
SimplicialComplex sample(const ModelParams& params, std::uint64_t seed);

/// Stable per-face uniform in [0,1); exposed for tests.
double face_uniform(std::uint64_t seed, int dim, const Face& face);

/// Injective per-trial seed derivation for Monte Carlo runs.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace scld

#endif
