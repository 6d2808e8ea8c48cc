#ifndef SCLD_LP_HPP
#define SCLD_LP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scld/complex.hpp"
#include "scld/logvalue.hpp"

namespace scld {

enum class LPMode { exact, floating };

/// The vertex-weight program for a pattern G and per-dimension face bounds:
/// maximize sum x_v subject to 0 <= sum_{v in sigma} x_v <= log m_i for
/// every i-face sigma, i = 0..dim(G). Bounds enter as logarithms so the
/// exact mode can keep them symbolic.
struct LPSolution {
  LPMode mode = LPMode::floating;
  double gamma = 0.0;
  LogValue gamma_exact;                       // exact mode only
  std::vector<double> primal;                 // per vertex of G
  std::vector<LogValue> primal_exact;         // exact mode only
  std::vector<double> dual_vertex;            // y_v
  std::vector<Rational> dual_vertex_exact;
  // z_sigma flattened in face order per dimension 1..k.
  std::vector<std::vector<double>> dual_face;
  std::vector<std::vector<Rational>> dual_face_exact;
  double duality_gap = 0.0;                   // |primal - dual| float mode
};

/// Float mode: bounds are the m_i themselves (all >= 1).
LPSolution solve_gamma(const SimplicialComplex& pattern,
                       const std::vector<double>& bounds);

/// Exact mode: bounds given as exact logarithms (each >= 0).
LPSolution solve_gamma_exact(const SimplicialComplex& pattern,
                             const std::vector<LogValue>& log_bounds);

/// log bounds for the common cases.
std::vector<LogValue> log_bounds_of_integers(
    const std::vector<std::int64_t>& bounds);
/// m_i = base^{beta_i}.
std::vector<LogValue> log_bounds_of_exponents(std::uint64_t base,
                                              const std::vector<Rational>& beta);

struct SandwichBounds {
  double lower = 0.0;   // (c^{s0} / #Aut) e^gamma
  double upper = 0.0;   // s0^{s0} e^gamma
  Rational witness_c = 0;
  double gamma = 0.0;
};

/// Proof-explicit sandwich around the extremal parameter N. Integer bounds;
/// returns (0,0) when some s_i(G) > m_i.
SandwichBounds n_hat_bounds(const SimplicialComplex& pattern,
                            const std::vector<std::int64_t>& bounds,
                            LPMode mode = LPMode::exact);

/// Largest admissible blow-up constant from the per-dimension formulas, all
/// verified with exact rational arithmetic.
Rational witness_constant(const SimplicialComplex& pattern,
                          const std::vector<std::int64_t>& bounds);

/// Blocks of size ceil(c e^{x_v}); a j-face across blocks iff the underlying
/// vertices form a j-face of the pattern. Throws witness_bound_violated
/// (naming the dimension) if some s_j(F) exceeds m_j.
SimplicialComplex blowup_witness(const SimplicialComplex& pattern,
                                 const LPSolution& solution, const Rational& c,
                                 const std::vector<std::int64_t>& bounds);

/// Exact maximum of count_unordered(F, G) over downward-closed F with
/// s_i(F) <= m_i. Guarded: m_0 <= 6 and dim(G) <= 2.
std::int64_t brute_force_N(const SimplicialComplex& pattern,
                           const std::vector<std::int64_t>& bounds);

struct LemmaGap {
  double gap = 0.0;
  int sign = 0;  // exact sign of the gap
  double gamma1 = 0.0;
  double gamma2 = 0.0;
};

/// gamma_2 - gamma_1 - ln(m2/m1)/(k+1) for bounds (m0, m_j s_1(G), ...,
/// m_j s_k(G)) solved on H; nonnegative by the comparison lemma.
LemmaGap compare_lemma_gap(const SimplicialComplex& G,
                           const SimplicialComplex& H, std::int64_t m0,
                           std::int64_t m1, std::int64_t m2);

}  // namespace scld

#endif
