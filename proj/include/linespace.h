/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef LINESPACE_H
#define LINESPACE_H

/*
 * C interface to liblinespace: coordinates on the space of oriented lines in
 * R^3 (xi, eta), surfaces given by their normal lines, sample grids and the
 * verification suites.
 *
 * Every fallible call returns an lsp_status. On failure the outputs are left
 * untouched and lsp_last_error() describes the failure; the message is
 * thread-local and valid until the next failing call on the same thread.
 *
 * Handles (lsp_section, lsp_grid, lsp_samples, lsp_report) are immutable
 * once created and may be shared between threads. Free them with the
 * matching *_free function; passing NULL to *_free is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LINESPACE_BUILDING)
#    define LSP_API __declspec(dllexport)
#  else
#    define LSP_API __declspec(dllimport)
#  endif
#else
#  define LSP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lsp_status {
  LSP_OK = 0,
  LSP_ERR_INVALID_ARGUMENT = 1,
  LSP_ERR_NORMALIZATION = 2,       /* direction vector not of unit length */
  LSP_ERR_UNDEFINED_TRANSITION = 3,/* chart transition at coordinate 0 */
  LSP_ERR_DOMAIN = 4,
  LSP_ERR_BRANCH_POINT = 5,        /* torus evaluated at a pole */
  LSP_ERR_PARAMETER = 6,
  LSP_ERR_DEGENERATE = 7,          /* degenerate surface parametrization */
  LSP_ERR_IO = 8,
  LSP_ERR_INTERNAL = 99
} lsp_status;

typedef enum lsp_chart {
  LSP_CHART_STANDARD = 1, /* coordinate xi */
  LSP_CHART_INVERTED = 2  /* coordinate w = 1/xi, fiber -eta/xi^2 */
} lsp_chart;

typedef enum lsp_branch { LSP_BRANCH_PLUS = 1, LSP_BRANCH_MINUS = -1 } lsp_branch;

typedef enum lsp_grid_kind {
  LSP_GRID_DISK = 0,
  LSP_GRID_ANNULUS = 1,
  LSP_GRID_TWO_CHART = 2
} lsp_grid_kind;

typedef struct lsp_complex {
  double re;
  double im;
} lsp_complex;

/* A point of the extended complex plane; `value` is ignored when infinite. */
typedef struct lsp_ext_complex {
  int is_infinite;
  lsp_complex value;
} lsp_ext_complex;

/* Tangent vector of R^3 = C + R: vz = vx + i vy, and vt. */
typedef struct lsp_vector {
  lsp_complex vz;
  double vt;
} lsp_vector;

typedef struct lsp_point {
  double x;
  double y;
  double t;
} lsp_point;

typedef struct lsp_chart_point {
  lsp_chart chart;
  lsp_complex coord;
} lsp_chart_point;

/* Oriented line; xi and eta are coordinates in `chart`. */
typedef struct lsp_line {
  lsp_chart chart;
  lsp_complex xi;
  lsp_complex eta;
} lsp_line;

typedef struct lsp_line_point {
  lsp_line line;
  double r;
} lsp_line_point;

typedef struct lsp_grid_spec {
  lsp_grid_kind kind;
  int radial_count;
  int angular_count;
  double max_modulus;
  double min_modulus; /* annulus only */
  double jitter;      /* 0..1, fraction of half the angular spacing */
  uint64_t seed;
} lsp_grid_spec;

typedef struct lsp_sample_row {
  lsp_chart_point xi;
  int skipped; /* branch point; remaining fields are NaN */
  lsp_complex eta;
  double r;
  lsp_point point;
} lsp_sample_row;

typedef struct lsp_check {
  const char* suite;
  const char* name;
  double max_residual; /* +inf when the check raised an error */
  double tolerance;
  int passed;
  double wall_seconds;
  const char* detail; /* empty unless the check raised an error */
} lsp_check;

typedef struct lsp_section lsp_section;
typedef struct lsp_grid lsp_grid;
typedef struct lsp_samples lsp_samples;
typedef struct lsp_report lsp_report;

LSP_API const char* lsp_version(void);
LSP_API const char* lsp_status_string(lsp_status status);
LSP_API const char* lsp_last_error(void);

/* ---- coordinate maps ---------------------------------------------------- */

LSP_API lsp_status lsp_dir_from_xi(lsp_ext_complex xi, lsp_vector* out);
LSP_API lsp_status lsp_dir_from_chart_point(lsp_chart_point xi, lsp_vector* out);
/* Fails with LSP_ERR_NORMALIZATION when | |v| - 1 | > tol. */
LSP_API lsp_status lsp_xi_from_dir(lsp_vector v, double tol, lsp_ext_complex* out);
LSP_API lsp_status lsp_point_on_line(const lsp_line_point* lp, lsp_point* out);
LSP_API lsp_status lsp_foot_point(const lsp_line* line, lsp_point* out);
LSP_API lsp_status lsp_perp_displacement(const lsp_line* line, lsp_vector* out);
LSP_API double lsp_inner(lsp_vector u, lsp_vector v);
/* Finite xi gives a standard-chart line, infinity the inverted chart. */
LSP_API lsp_status lsp_lines_through_point(lsp_point p, lsp_ext_complex xi,
                                           lsp_line_point* out);
LSP_API lsp_status lsp_lines_through_point_chart(lsp_point p, lsp_chart_point xi,
                                                 lsp_line_point* out);
LSP_API lsp_status lsp_incidence_r(lsp_point p, lsp_ext_complex xi, double* out);
LSP_API lsp_status lsp_chart_transition(const lsp_line* line, lsp_line* out);

/* ---- sections ------------------------------------------------------------ */

/* Lines through `center`, with r offset by `radius` (0: the point itself). */
LSP_API lsp_status lsp_section_point_sphere(lsp_point center, double radius, lsp_section** out);
/* Squared semi-axes: x^2/a1 + y^2/a2 + t^2/a3 = 1. */
LSP_API lsp_status lsp_section_ellipsoid(double a1, double a2, double a3, lsp_section** out);
/* Centre-circle radius a, tube radius b. */
LSP_API lsp_status lsp_section_torus(double a, double b, lsp_branch branch, lsp_section** out);
LSP_API void lsp_section_free(lsp_section* section);

LSP_API const char* lsp_section_name(const lsp_section* section);
/* Line and parameter at xi; eta is in the chart of xi. */
LSP_API lsp_status lsp_section_eval(const lsp_section* section, lsp_chart_point xi,
                                    lsp_line_point* out);
LSP_API lsp_status lsp_section_eval_ext(const lsp_section* section, lsp_ext_complex xi,
                                        lsp_line_point* out);
/* Pointwise reconstruction of n samples. Per-sample failures go to
 * `statuses` (required) and leave the matching point NaN; the call itself
 * returns LSP_OK unless the arguments are invalid. */
LSP_API lsp_status lsp_section_reconstruct(const lsp_section* section,
                                           const lsp_chart_point* samples, size_t n,
                                           lsp_point* points, lsp_status* statuses);
LSP_API lsp_status lsp_verify_normality(const lsp_section* section, lsp_chart_point xi,
                                        double h, double* out);

LSP_API lsp_status lsp_implicit_residual_ellipsoid(double a1, double a2, double a3, lsp_point p,
                                                   double* out);
LSP_API lsp_status lsp_implicit_residual_torus(double a, double b, lsp_point p, double* out);

/* ---- grids and sampling -------------------------------------------------- */

LSP_API lsp_status lsp_grid_create(const lsp_grid_spec* spec, lsp_grid** out);
LSP_API void lsp_grid_free(lsp_grid* grid);
LSP_API size_t lsp_grid_size(const lsp_grid* grid);
LSP_API lsp_status lsp_grid_at(const lsp_grid* grid, size_t index, lsp_chart_point* out);

/* Rows come back in grid order. */
LSP_API lsp_status lsp_sample(const lsp_section* section, const lsp_grid* grid,
                              lsp_samples** out);
LSP_API void lsp_samples_free(lsp_samples* samples);
LSP_API size_t lsp_samples_size(const lsp_samples* samples);
LSP_API lsp_status lsp_samples_row(const lsp_samples* samples, size_t index,
                                   lsp_sample_row* out);
/* CSV header: xi_re,xi_im,chart,eta_re,eta_im,r,x,y,t,skipped */
LSP_API lsp_status lsp_samples_write_csv(const lsp_samples* samples, const char* path);
/* `v x y t` per non-skipped row. */
LSP_API lsp_status lsp_samples_write_obj(const lsp_samples* samples, const char* path);

/* ---- verification -------------------------------------------------------- */

/* suite: core, spheres, ellipsoid, torus or all. A NaN tolerance_override
 * keeps each check's default tolerance. */
LSP_API lsp_status lsp_verify(const char* suite, uint64_t seed, double tolerance_override,
                              lsp_report** out);
LSP_API void lsp_report_free(lsp_report* report);
LSP_API size_t lsp_report_size(const lsp_report* report);
/* Strings in `out` live as long as the report. */
LSP_API lsp_status lsp_report_check(const lsp_report* report, size_t index, lsp_check* out);
LSP_API int lsp_report_passed(const lsp_report* report);
LSP_API lsp_status lsp_report_write_json(const lsp_report* report, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* LINESPACE_H */
