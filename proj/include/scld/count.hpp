#ifndef SCLD_COUNT_HPP
#define SCLD_COUNT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "scld/complex.hpp"
#include "scld/logvalue.hpp"
#include "scld/model.hpp"

namespace scld {

/// Number of injective vertex maps pattern -> host carrying every i-face of
/// the pattern onto an i-face of the host.
std::uint64_t count_ordered(const SimplicialComplex& host,
                            const SimplicialComplex& pattern);

/// count_ordered / #Aut(pattern).
std::uint64_t count_unordered(const SimplicialComplex& host,
                              const SimplicialComplex& pattern);

/// A positive quantity carried both as a double and, in exponent form, as an
/// exact logarithm. zero == true short-circuits everything (some p_i = 0).
/// In probability form the exact rational product is kept as well (every
/// double probability is a dyadic rational).
struct LogQuantity {
  bool zero = false;
  double value = 0.0;
  double log_value = 0.0;
  std::optional<LogValue> exact_log;     // exponent form
  std::optional<Rational> exact_value;   // probability form
};

/// mu_{o,n}(G) = (n)_{s0} prod p_i^{s_i}; `unordered` divides by #Aut(G).
LogQuantity expected_ordered(const ModelParams& params,
                             const SimplicialComplex& pattern);
LogQuantity expected_unordered(const ModelParams& params,
                               const SimplicialComplex& pattern);

/// Psi_{G,n} = n^{s0} prod p_i^{s_i}; in exponent form its log is the exact
/// rational multiple (s0 - sum s_i alpha_i) of ln n.
LogQuantity psi(const ModelParams& params, const SimplicialComplex& pattern);

struct SubcomplexOptions {
  bool include_isolated_vertices = false;  // vertex-padded variants
  bool labeled = false;                    // emit every labeled subcomplex
  int max_vertices_guard = 10;
};

/// Nonempty downward-closed families of the pattern's faces containing at
/// least one positive-dimension face. Default output is one representative
/// per isomorphism class with isolated vertices dropped.
std::vector<SimplicialComplex> enumerate_subcomplexes(
    const SimplicialComplex& pattern, const SubcomplexOptions& opts = {});

}  // namespace scld

#endif
