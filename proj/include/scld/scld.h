/* C interface to the simplicial-complex large-deviations toolkit.
 *
 * All functions return scld_status; outputs are written through pointers.
 * Returned strings are heap-allocated and must be released with
 * scld_string_free. Handles are opaque and freed with their *_free call.
 * On failure, scld_last_error() describes the most recent error on the
 * calling thread.
 */
#ifndef SCLD_H
#define SCLD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scld_status {
  SCLD_OK = 0,
  SCLD_ERROR_INTERNAL = 1,
  SCLD_ERROR_INVALID_INPUT = 2, /* malformed input or violated precondition */
  SCLD_ERROR_GUARD = 3,         /* enumeration guard exceeded */
  SCLD_ERROR_IO = 4
} scld_status;

typedef struct scld_complex scld_complex;
typedef struct scld_model scld_model;

const char* scld_status_name(scld_status status);
const char* scld_last_error(void);
void scld_string_free(char* text);

/* ---- complexes ----------------------------------------------------- */

/* vertices holds the facet lists back to back; facet_sizes gives each
 * facet's length. The complex is the downward closure plus all n vertices. */
scld_status scld_complex_from_facets(int32_t n, const int32_t* vertices,
                                     const int32_t* facet_sizes,
                                     int32_t n_facets, scld_complex** out);
scld_status scld_complex_from_json(const char* text, scld_complex** out);
scld_status scld_complex_read_file(const char* path, scld_complex** out);
scld_status scld_complex_write_file(const scld_complex* K, const char* path);
scld_status scld_complex_to_json(const scld_complex* K, char** out);
void scld_complex_free(scld_complex* K);

int32_t scld_complex_vertex_count(const scld_complex* K);
int32_t scld_complex_dimension(const scld_complex* K);
/* writes s_0..s_dim; fails if capacity < dim+1 */
scld_status scld_complex_counts(const scld_complex* K, int64_t* counts,
                                int32_t capacity, int32_t* written);
scld_status scld_complex_skeleton(const scld_complex* K, int32_t dim,
                                  scld_complex** out);
scld_status scld_automorphism_count(const scld_complex* K, uint64_t* out);
scld_status scld_are_isomorphic(const scld_complex* a, const scld_complex* b,
                                int32_t* out);

/* ---- random model --------------------------------------------------- */

scld_status scld_model_from_probs(int32_t n, const double* probs, int32_t k_max,
                                  scld_model** out);
/* alphas are decimal/fraction strings, "inf" allowed */
scld_status scld_model_from_alphas(int32_t n, const char* const* alphas,
                                   int32_t n_alphas, int32_t k_max,
                                   scld_model** out);
void scld_model_free(scld_model* m);
scld_status scld_sample(const scld_model* m, uint64_t seed, scld_complex** out);
scld_status scld_critical_profile_json(const char* const* alphas,
                                       int32_t n_alphas, int32_t k_max,
                                       char** out);

/* ---- subcomplex counting -------------------------------------------- */

scld_status scld_count_ordered(const scld_complex* host,
                               const scld_complex* pattern, uint64_t* out);
scld_status scld_count_unordered(const scld_complex* host,
                                 const scld_complex* pattern, uint64_t* out);
/* mu_o, mu, Psi and their logs as JSON */
scld_status scld_mean_json(const scld_model* m, const scld_complex* pattern,
                           char** out);

/* ---- extremal linear program ----------------------------------------- */

/* float mode; JSON carries gamma, primal, dual and, for integer bounds,
 * the sandwich around the extremal parameter */
scld_status scld_gamma_json(const scld_complex* pattern, const double* bounds,
                            int32_t n_bounds, char** out);
/* exact exponent mode: bounds are base^{beta_i} with rational beta strings */
scld_status scld_gamma_exponent_json(const scld_complex* pattern, int64_t base,
                                     const char* const* betas, int32_t n_bounds,
                                     char** out);
/* exhaustive extremal parameter on tiny instances */
scld_status scld_oracle_n(const scld_complex* pattern, const int64_t* bounds,
                          int32_t n_bounds, int64_t* out);

/* ---- thresholds ------------------------------------------------------ */

scld_status scld_mstar_json(const scld_model* m, const scld_complex* pattern,
                            int32_t oracle_mode, int32_t threads, char** out);
scld_status scld_sweep_csv(const scld_complex* pattern,
                           const char* const* alphas, int32_t n_alphas,
                           const int32_t* n_grid, int32_t grid_len,
                           int32_t threads, char** out);

/* ---- homology --------------------------------------------------------- */

scld_status scld_betti(const scld_complex* K, int32_t field_char,
                       int64_t* betti, int32_t capacity, int32_t* written);
scld_status scld_free_count(const scld_complex* K, int32_t dim, int64_t* out);

/* ---- Monte Carlo harness ---------------------------------------------- */

/* config_json mirrors the tail experiment configuration; csv_out gets the
 * per-trial table, summary_json_out the aggregate summary */
scld_status scld_tail_mc(const char* config_json, int32_t threads,
                         char** csv_out, char** summary_json_out);
scld_status scld_mean_check_json(const scld_model* m,
                                 const scld_complex* pattern, int64_t trials,
                                 uint64_t seed, int32_t threads, char** out);
/* csv_format != 0 emits the CSV table, otherwise JSON */
scld_status scld_exponent_report(const scld_complex* pattern,
                                 const char* const* alphas, int32_t n_alphas,
                                 const int32_t* n_grid, int32_t grid_len,
                                 double epsilon, int32_t betti_mode,
                                 int32_t threads, int32_t csv_format,
                                 char** out);

#ifdef __cplusplus
}
#endif

#endif /* SCLD_H */
