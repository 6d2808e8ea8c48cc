#include "scld/scld.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "scld/complex.hpp"
#include "scld/count.hpp"
#include "scld/harness.hpp"
#include "scld/homology.hpp"
#include "scld/lp.hpp"
#include "scld/mstar.hpp"

struct scld_complex {
  scld::SimplicialComplex value;
};

struct scld_model {
  scld::ModelParams value;
};

namespace {

thread_local std::string g_last_error;

scld_status status_of(scld::errc code) {
  using scld::errc;
  switch (code) {
    case errc::pattern_too_large:
    case errc::oracle_too_large:
      return SCLD_ERROR_GUARD;
    case errc::io_error:
      return SCLD_ERROR_IO;
    case errc::nonconvergent_float:
    case errc::internal:
      return SCLD_ERROR_INTERNAL;
    default:
      return SCLD_ERROR_INVALID_INPUT;
  }
}

template <class Fn>
scld_status wrap(Fn&& fn) {
  try {
    fn();
    return SCLD_OK;
  } catch (const scld::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SCLD_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SCLD_ERROR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* what) {
  if (!cond) scld::fail(scld::errc::invalid_argument, what);
}

std::vector<scld::Alpha> parse_alphas(const char* const* alphas, int32_t n_alphas) {
  require(alphas != nullptr || n_alphas == 0, "null alpha array");
  std::vector<scld::Alpha> out;
  out.reserve(n_alphas);
  for (int32_t i = 0; i < n_alphas; ++i) out.push_back(scld::parse_alpha(alphas[i]));
  return out;
}

nlohmann::json gamma_solution_json(const scld::SimplicialComplex& G,
                                   const scld::LPSolution& sol) {
  nlohmann::json j;
  j["mode"] = sol.mode == scld::LPMode::exact ? "exact" : "float";
  j["gamma"] = sol.gamma;
  j["primal"] = sol.primal;
  nlohmann::json dual;
  dual["vertices"] = sol.dual_vertex;
  nlohmann::json faces = nlohmann::json::object();
  for (int d = 1; d <= G.dimension(); ++d)
    faces[std::to_string(d)] = sol.dual_face[d - 1];
  dual["faces"] = faces;
  j["dual"] = dual;
  j["duality_gap"] = sol.duality_gap;
  return j;
}

}  // namespace

extern "C" {

const char* scld_status_name(scld_status status) {
  switch (status) {
    case SCLD_OK: return "ok";
    case SCLD_ERROR_INTERNAL: return "internal-error";
    case SCLD_ERROR_INVALID_INPUT: return "invalid-input";
    case SCLD_ERROR_GUARD: return "guard-exceeded";
    case SCLD_ERROR_IO: return "io-error";
  }
  return "unknown";
}

const char* scld_last_error(void) { return g_last_error.c_str(); }

void scld_string_free(char* text) { delete[] text; }

scld_status scld_complex_from_facets(int32_t n, const int32_t* vertices,
                                     const int32_t* facet_sizes,
                                     int32_t n_facets, scld_complex** out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    require(n_facets == 0 || (vertices != nullptr && facet_sizes != nullptr),
            "null facet data");
    std::vector<scld::Face> facets;
    const int32_t* cursor = vertices;
    for (int32_t f = 0; f < n_facets; ++f) {
      require(facet_sizes[f] >= 0, "negative facet size");
      facets.emplace_back(cursor, cursor + facet_sizes[f]);
      cursor += facet_sizes[f];
    }
    *out = new scld_complex{scld::SimplicialComplex::from_facets(n, facets)};
  });
}

scld_status scld_complex_from_json(const char* text, scld_complex** out) {
  return wrap([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new scld_complex{scld::SimplicialComplex::from_json(text)};
  });
}

scld_status scld_complex_read_file(const char* path, scld_complex** out) {
  return wrap([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new scld_complex{scld::SimplicialComplex::read_file(path)};
  });
}

scld_status scld_complex_write_file(const scld_complex* K, const char* path) {
  return wrap([&] {
    require(K != nullptr && path != nullptr, "null argument");
    K->value.write_file(path);
  });
}

scld_status scld_complex_to_json(const scld_complex* K, char** out) {
  return wrap([&] {
    require(K != nullptr && out != nullptr, "null argument");
    *out = dup_string(K->value.to_json());
  });
}

void scld_complex_free(scld_complex* K) { delete K; }

int32_t scld_complex_vertex_count(const scld_complex* K) {
  return K ? K->value.vertex_count() : -1;
}

int32_t scld_complex_dimension(const scld_complex* K) {
  return K ? K->value.dimension() : -2;
}

scld_status scld_complex_counts(const scld_complex* K, int64_t* counts,
                                int32_t capacity, int32_t* written) {
  return wrap([&] {
    require(K != nullptr && counts != nullptr && written != nullptr, "null argument");
    auto s = K->value.simplex_counts();
    require(capacity >= static_cast<int32_t>(s.size()), "capacity too small");
    for (std::size_t i = 0; i < s.size(); ++i) counts[i] = s[i];
    *written = static_cast<int32_t>(s.size());
  });
}

scld_status scld_complex_skeleton(const scld_complex* K, int32_t dim,
                                  scld_complex** out) {
  return wrap([&] {
    require(K != nullptr && out != nullptr, "null argument");
    *out = new scld_complex{K->value.skeleton(dim)};
  });
}

scld_status scld_automorphism_count(const scld_complex* K, uint64_t* out) {
  return wrap([&] {
    require(K != nullptr && out != nullptr, "null argument");
    *out = K->value.automorphism_count();
  });
}

scld_status scld_are_isomorphic(const scld_complex* a, const scld_complex* b,
                                int32_t* out) {
  return wrap([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = scld::are_isomorphic(a->value, b->value) ? 1 : 0;
  });
}

scld_status scld_model_from_probs(int32_t n, const double* probs, int32_t k_max,
                                  scld_model** out) {
  return wrap([&] {
    require(probs != nullptr && out != nullptr && k_max >= 1, "bad arguments");
    std::vector<double> p(probs, probs + k_max);
    *out = new scld_model{scld::ModelParams::from_probs(n, std::move(p))};
  });
}

scld_status scld_model_from_alphas(int32_t n, const char* const* alphas,
                                   int32_t n_alphas, int32_t k_max,
                                   scld_model** out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    *out = new scld_model{
        scld::ModelParams::from_alphas(n, parse_alphas(alphas, n_alphas), k_max)};
  });
}

void scld_model_free(scld_model* m) { delete m; }

scld_status scld_sample(const scld_model* m, uint64_t seed, scld_complex** out) {
  return wrap([&] {
    require(m != nullptr && out != nullptr, "null argument");
    *out = new scld_complex{scld::sample(m->value, seed)};
  });
}

scld_status scld_critical_profile_json(const char* const* alphas,
                                       int32_t n_alphas, int32_t k_max,
                                       char** out) {
  return wrap([&] {
    require(out != nullptr, "null output");
    auto profile = scld::critical_profile(parse_alphas(alphas, n_alphas), k_max);
    *out = dup_string(profile.to_json());
  });
}

scld_status scld_count_ordered(const scld_complex* host,
                               const scld_complex* pattern, uint64_t* out) {
  return wrap([&] {
    require(host != nullptr && pattern != nullptr && out != nullptr, "null argument");
    *out = scld::count_ordered(host->value, pattern->value);
  });
}

scld_status scld_count_unordered(const scld_complex* host,
                                 const scld_complex* pattern, uint64_t* out) {
  return wrap([&] {
    require(host != nullptr && pattern != nullptr && out != nullptr, "null argument");
    *out = scld::count_unordered(host->value, pattern->value);
  });
}

scld_status scld_mean_json(const scld_model* m, const scld_complex* pattern,
                           char** out) {
  return wrap([&] {
    require(m != nullptr && pattern != nullptr && out != nullptr, "null argument");
    auto mu_o = scld::expected_ordered(m->value, pattern->value);
    auto mu = scld::expected_unordered(m->value, pattern->value);
    auto psi_v = scld::psi(m->value, pattern->value);
    nlohmann::json j;
    j["mu_ordered"] = mu_o.zero ? 0.0 : mu_o.value;
    j["mu_ordered_log"] = mu_o.log_value;
    j["mu_unordered"] = mu.zero ? 0.0 : mu.value;
    j["psi"] = psi_v.zero ? 0.0 : psi_v.value;
    j["psi_log"] = psi_v.log_value;
    j["aut"] = pattern->value.automorphism_count();
    if (psi_v.exact_log && m->value.n >= 2) {
      auto mult = psi_v.exact_log->as_multiple_of_log(
          scld::BigInt(static_cast<unsigned long>(m->value.n)));
      if (mult) j["psi_exponent"] = scld::rational_to_string(*mult);
    }
    *out = dup_string(j.dump());
  });
}

scld_status scld_gamma_json(const scld_complex* pattern, const double* bounds,
                            int32_t n_bounds, char** out) {
  return wrap([&] {
    require(pattern != nullptr && bounds != nullptr && out != nullptr, "null argument");
    std::vector<double> b(bounds, bounds + n_bounds);
    auto sol = scld::solve_gamma(pattern->value, b);
    nlohmann::json j = gamma_solution_json(pattern->value, sol);
    // sandwich bounds when the bounds are integers
    bool integral = true;
    std::vector<std::int64_t> ib;
    for (double m : b) {
      if (m != static_cast<double>(static_cast<std::int64_t>(m))) integral = false;
      ib.push_back(static_cast<std::int64_t>(m));
    }
    if (integral) {
      auto s = pattern->value.simplex_counts();
      bool admissible = true;
      for (std::size_t d = 0; d < s.size(); ++d)
        if (s[d] > ib[d]) admissible = false;
      auto sb = admissible
                    ? scld::n_hat_bounds(pattern->value, ib, scld::LPMode::floating)
                    : scld::SandwichBounds{};
      j["nhat_lower"] = sb.lower;
      j["nhat_upper"] = sb.upper;
    }
    *out = dup_string(j.dump());
  });
}

scld_status scld_gamma_exponent_json(const scld_complex* pattern, int64_t base,
                                     const char* const* betas, int32_t n_bounds,
                                     char** out) {
  return wrap([&] {
    require(pattern != nullptr && betas != nullptr && out != nullptr, "null argument");
    require(base >= 1, "exponent base must be >= 1");
    std::vector<scld::Rational> beta;
    for (int32_t i = 0; i < n_bounds; ++i)
      beta.push_back(scld::parse_rational(betas[i]));
    auto lb = scld::log_bounds_of_exponents(static_cast<std::uint64_t>(base), beta);
    auto sol = scld::solve_gamma_exact(pattern->value, lb);
    nlohmann::json j = gamma_solution_json(pattern->value, sol);
    scld::BigInt base_z(static_cast<long>(base));
    if (auto mult = sol.gamma_exact.as_multiple_of_log(base_z))
      j["gamma_exponent"] = scld::rational_to_string(*mult);
    nlohmann::json primal_exp = nlohmann::json::array();
    bool all_rational = true;
    for (const auto& x : sol.primal_exact) {
      auto mult = x.as_multiple_of_log(base_z);
      if (mult) primal_exp.push_back(scld::rational_to_string(*mult));
      else all_rational = false;
    }
    if (all_rational) j["primal_exponents"] = primal_exp;
    nlohmann::json dual_exact;
    nlohmann::json yv = nlohmann::json::array();
    for (const auto& y : sol.dual_vertex_exact) yv.push_back(scld::rational_to_string(y));
    dual_exact["vertices"] = yv;
    nlohmann::json zfaces = nlohmann::json::object();
    for (int d = 1; d <= pattern->value.dimension(); ++d) {
      nlohmann::json zd = nlohmann::json::array();
      for (const auto& z : sol.dual_face_exact[d - 1])
        zd.push_back(scld::rational_to_string(z));
      zfaces[std::to_string(d)] = zd;
    }
    dual_exact["faces"] = zfaces;
    j["dual_exact"] = dual_exact;
    *out = dup_string(j.dump());
  });
}

scld_status scld_oracle_n(const scld_complex* pattern, const int64_t* bounds,
                          int32_t n_bounds, int64_t* out) {
  return wrap([&] {
    require(pattern != nullptr && bounds != nullptr && out != nullptr, "null argument");
    std::vector<std::int64_t> b(bounds, bounds + n_bounds);
    *out = scld::brute_force_N(pattern->value, b);
  });
}

scld_status scld_mstar_json(const scld_model* m, const scld_complex* pattern,
                            int32_t oracle_mode, int32_t threads, char** out) {
  return wrap([&] {
    require(m != nullptr && pattern != nullptr && out != nullptr, "null argument");
    auto mode = oracle_mode ? scld::MStarMode::oracle_exact
                            : scld::MStarMode::lp_surrogate;
    auto result = scld::mstar(m->value, pattern->value, mode, threads);
    *out = dup_string(result.to_json());
  });
}

scld_status scld_sweep_csv(const scld_complex* pattern,
                           const char* const* alphas, int32_t n_alphas,
                           const int32_t* n_grid, int32_t grid_len,
                           int32_t threads, char** out) {
  return wrap([&] {
    require(pattern != nullptr && n_grid != nullptr && out != nullptr, "null argument");
    std::vector<std::int32_t> grid(n_grid, n_grid + grid_len);
    auto rows = scld::sweep(pattern->value, parse_alphas(alphas, n_alphas), grid,
                            threads);
    *out = dup_string(scld::sweep_to_csv(rows));
  });
}

scld_status scld_betti(const scld_complex* K, int32_t field_char, int64_t* betti,
                       int32_t capacity, int32_t* written) {
  return wrap([&] {
    require(K != nullptr && betti != nullptr && written != nullptr, "null argument");
    auto b = scld::betti_vector(K->value, field_char);
    require(capacity >= static_cast<int32_t>(b.size()), "capacity too small");
    for (std::size_t i = 0; i < b.size(); ++i) betti[i] = b[i];
    *written = static_cast<int32_t>(b.size());
  });
}

scld_status scld_free_count(const scld_complex* K, int32_t dim, int64_t* out) {
  return wrap([&] {
    require(K != nullptr && out != nullptr, "null argument");
    *out = scld::free_count(K->value, dim);
  });
}

scld_status scld_tail_mc(const char* config_json, int32_t threads,
                         char** csv_out, char** summary_json_out) {
  return wrap([&] {
    require(config_json != nullptr, "null config");
    auto config = scld::TailConfig::from_json(config_json);
    auto record = scld::tail_estimate(config, threads);
    if (csv_out) *csv_out = dup_string(record.to_csv());
    if (summary_json_out) *summary_json_out = dup_string(record.summary_json());
  });
}

scld_status scld_mean_check_json(const scld_model* m,
                                 const scld_complex* pattern, int64_t trials,
                                 uint64_t seed, int32_t threads, char** out) {
  return wrap([&] {
    require(m != nullptr && pattern != nullptr && out != nullptr, "null argument");
    auto chk = scld::mean_check(m->value, pattern->value, trials, seed, threads);
    *out = dup_string(chk.to_json());
  });
}

scld_status scld_exponent_report(const scld_complex* pattern,
                                 const char* const* alphas, int32_t n_alphas,
                                 const int32_t* n_grid, int32_t grid_len,
                                 double epsilon, int32_t betti_mode,
                                 int32_t threads, int32_t csv_format,
                                 char** out) {
  return wrap([&] {
    require(pattern != nullptr && n_grid != nullptr && out != nullptr, "null argument");
    std::vector<std::int32_t> grid(n_grid, n_grid + grid_len);
    auto rep = scld::exponent_report(pattern->value, parse_alphas(alphas, n_alphas),
                                     grid, epsilon, betti_mode != 0, threads);
    *out = dup_string(csv_format ? rep.to_csv() : rep.to_json());
  });
}

}  // extern "C"
