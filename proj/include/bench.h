/* C interface to the benchmark-function suite: catalog access, point
 * evaluation, finite-difference tools, the optimum audit, the separability
 * probe, landscape grids and the optimizer harness.
 *
 * All functions return a bench_status; outputs are written through pointer
 * arguments. Strings returned via char** are heap-allocated and must be
 * released with bench_string_free(). A thread-local message describing the
 * most recent failure is available from bench_last_error().
 */
#ifndef BENCH_H
#define BENCH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bench_catalog bench_catalog; /* opaque */

typedef enum bench_status {
  BENCH_OK = 0,
  BENCH_E_UNKNOWN_FUNCTION = 1,
  BENCH_E_DIMENSION = 2,
  BENCH_E_DOMAIN = 3,
  BENCH_E_INVALID = 4,
  BENCH_E_NONFINITE = 5,
  BENCH_E_IO = 6,
  BENCH_E_INTERNAL = 7
} bench_status;

typedef enum bench_noise {
  BENCH_NOISE_SUPPRESS = 0,
  BENCH_NOISE_SAMPLE = 1
} bench_noise;

const char* bench_version(void);
const char* bench_last_error(void);
void bench_string_free(char* s);

bench_catalog* bench_catalog_create(void);
void bench_catalog_free(bench_catalog* cat);
int bench_catalog_size(const bench_catalog* cat);

/* Resolves a slug or decimal index to the function index (1-based). */
bench_status bench_lookup(const bench_catalog* cat, const char* key, int* index_out);

/* One catalog record (same schema as the JSON export). */
bench_status bench_spec_json(const bench_catalog* cat, int index, char** json_out);

/* Full catalog document; format is "json" or "csv". */
bench_status bench_catalog_export(const bench_catalog* cat, const char* format, char** out);

/* criteria_json: object with optional keys continuity, differentiability,
 * separability, scalability, modality (enum strings) and dimension (int,
 * matching fixed-dimension functions). Returns a JSON array of indices. */
bench_status bench_filter(const bench_catalog* cat, const char* criteria_json, char** out);

bench_status bench_default_dimension(const bench_catalog* cat, int index, int* dim_out);
bench_status bench_dimension_ok(const bench_catalog* cat, int index, int dim);
bench_status bench_bounds(const bench_catalog* cat, int index, int dim, double* lower,
                          double* upper);

bench_status bench_evaluate(const bench_catalog* cat, int index, const double* x, int dim,
                            uint64_t seed, bench_noise noise, double* value_out);

/* xs holds npoints*dim coordinates, point-major. statuses_out may be NULL;
 * element failures yield NaN values and per-element BENCH_E_DOMAIN. */
bench_status bench_evaluate_batch(const bench_catalog* cat, int index, const double* xs,
                                  int npoints, int dim, uint64_t seed, bench_noise noise,
                                  double* values_out, int* statuses_out);

/* step <= 0 selects the default (1e-6, scaled per coordinate). */
bench_status bench_fd_gradient(const bench_catalog* cat, int index, const double* x, int dim,
                               double step, double* grad_out);
bench_status bench_stationarity(const bench_catalog* cat, int index, const double* x, int dim,
                                double* residual_out);

/* dimension/samples/tol <= 0 select defaults (catalog default dimension, 64
 * samples, 1e-6). Returns a JSON verdict object. */
bench_status bench_separability_probe(const bench_catalog* cat, int index, int dimension,
                                      int samples, uint64_t seed, double tol, char** out);

/* tol <= 0 selects the per-claim default tolerances. Returns the audit
 * records for one function ("json" or "csv"). */
bench_status bench_check_minimum(const bench_catalog* cat, int index, double tol,
                                 const char* format, char** out);

/* Full-catalog audit report. */
bench_status bench_audit_all(const bench_catalog* cat, double tol, const char* format,
                             char** out);

/* Machine-readable errata ledger (JSON). */
bench_status bench_errata_ledger(const bench_catalog* cat, double tol, char** out);

/* Compares the Discrepant set of a full audit against an expected-errata
 * document (JSON array of {fn, reason}). *match_out is 1 on equality; the
 * human-readable difference is returned via diff_out (may be NULL). */
bench_status bench_check_expected(const bench_catalog* cat, double tol,
                                  const char* expected_json, int* match_out, char** diff_out);

/* Inclusive lattice CSV ("x1,x2,f"); the function must accept dimension 2. */
bench_status bench_grid_csv(const bench_catalog* cat, int index, double x1_lo, double x1_hi,
                            double x2_lo, double x2_hi, int resolution, char** out);

/* Runs a manifest (JSON object: functions, optimizers, dimensions, budget,
 * seeds, thresholds). format selects "json" or "csv" results; summary_out
 * (optional) receives the per-function success table. */
bench_status bench_run_manifest(const bench_catalog* cat, const char* manifest_json,
                                const char* format, char** results_out, char** summary_out);

/* Shortest round-trip decimal formatting shared with every text output.
 * buf must hold at least 32 bytes. */
void bench_format_double(double value, char* buf, size_t buflen);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BENCH_H */
