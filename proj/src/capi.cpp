/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "linespace.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "export.hpp"
#include "grid.hpp"
#include "suites.hpp"

struct lsp_section {
  linespace::LineSection section;
};

struct lsp_grid {
  std::vector<linespace::ChartPoint> samples;
};

struct lsp_samples {
  std::vector<linespace::SampleRow> rows;
};

struct lsp_report {
  linespace::RunReport report;
};

namespace {

using namespace linespace;

thread_local std::string g_last_error;

lsp_status fail(lsp_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

lsp_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return LSP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kNormalization:
      return LSP_ERR_NORMALIZATION;
    case ErrorCode::kUndefinedTransition:
      return LSP_ERR_UNDEFINED_TRANSITION;
    case ErrorCode::kDomain:
      return LSP_ERR_DOMAIN;
    case ErrorCode::kBranchPoint:
      return LSP_ERR_BRANCH_POINT;
    case ErrorCode::kParameter:
      return LSP_ERR_PARAMETER;
    case ErrorCode::kDegenerate:
      return LSP_ERR_DEGENERATE;
    case ErrorCode::kIo:
      return LSP_ERR_IO;
  }
  return LSP_ERR_INTERNAL;
}

template <typename F>
lsp_status guarded(F&& body) {
  try {
    body();
    return LSP_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(LSP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LSP_ERR_INTERNAL, "unknown error");
  }
}

lsp_status null_argument(const char* what) {
  return fail(LSP_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

Complex from_c(lsp_complex c) { return {c.re, c.im}; }
lsp_complex to_c(Complex c) { return {c.real(), c.imag()}; }

ExtComplex from_c(lsp_ext_complex e) {
  return e.is_infinite ? ExtComplex::infinity() : ExtComplex(from_c(e.value));
}
lsp_ext_complex to_c(const ExtComplex& e) {
  if (e.is_infinite()) return {1, {0.0, 0.0}};
  return {0, to_c(e.value())};
}

Chart from_c(lsp_chart c) {
  if (c == LSP_CHART_STANDARD) return Chart::kStandard;
  if (c == LSP_CHART_INVERTED) return Chart::kInverted;
  throw Error(ErrorCode::kInvalidArgument, "chart must be 1 (standard) or 2 (inverted)");
}
lsp_chart to_c(Chart c) { return c == Chart::kStandard ? LSP_CHART_STANDARD : LSP_CHART_INVERTED; }

ChartPoint from_c(lsp_chart_point p) { return {from_c(p.chart), from_c(p.coord)}; }
lsp_chart_point to_c(const ChartPoint& p) { return {to_c(p.chart), to_c(p.coord)}; }

Vector3 from_c(lsp_vector v) { return {from_c(v.vz), v.vt}; }
lsp_vector to_c(const Vector3& v) { return {to_c(v.vz), v.vt}; }

EuclideanPoint from_c(lsp_point p) { return EuclideanPoint::from_xyz(p.x, p.y, p.t); }
lsp_point to_c(const EuclideanPoint& p) { return {p.x(), p.y(), p.t}; }

OrientedLine from_c(const lsp_line& l) { return {from_c(l.chart), from_c(l.xi), from_c(l.eta)}; }
lsp_line to_c(const OrientedLine& l) { return {to_c(l.chart), to_c(l.xi), to_c(l.eta)}; }

LinePoint from_c(const lsp_line_point& lp) { return {from_c(lp.line), lp.r}; }
lsp_line_point to_c(const LinePoint& lp) { return {to_c(lp.line), lp.r}; }

lsp_status make_section(lsp_section** out, auto make) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new lsp_section{make()}; });
}

}  // namespace

extern "C" {

const char* lsp_version(void) { return "1.0.0"; }

const char* lsp_status_string(lsp_status status) {
  switch (status) {
    case LSP_OK:
      return "ok";
    case LSP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case LSP_ERR_NORMALIZATION:
      return "normalization error";
    case LSP_ERR_UNDEFINED_TRANSITION:
      return "undefined chart transition";
    case LSP_ERR_DOMAIN:
      return "outside domain";
    case LSP_ERR_BRANCH_POINT:
      return "branch point";
    case LSP_ERR_PARAMETER:
      return "parameter error";
    case LSP_ERR_DEGENERATE:
      return "degenerate parametrization";
    case LSP_ERR_IO:
      return "i/o error";
    case LSP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* lsp_last_error(void) { return g_last_error.c_str(); }

lsp_status lsp_dir_from_xi(lsp_ext_complex xi, lsp_vector* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(dir_from_xi(from_c(xi))); });
}

lsp_status lsp_dir_from_chart_point(lsp_chart_point xi, lsp_vector* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(dir_from_xi(from_c(xi))); });
}

lsp_status lsp_xi_from_dir(lsp_vector v, double tol, lsp_ext_complex* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(xi_from_dir(from_c(v), tol)); });
}

lsp_status lsp_point_on_line(const lsp_line_point* lp, lsp_point* out) {
  if (!lp) return null_argument("lp");
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(line_point(from_c(*lp))); });
}

lsp_status lsp_foot_point(const lsp_line* line, lsp_point* out) {
  if (!line) return null_argument("line");
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(foot_point(from_c(*line))); });
}

lsp_status lsp_perp_displacement(const lsp_line* line, lsp_vector* out) {
  if (!line) return null_argument("line");
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(perp_displacement(from_c(*line))); });
}

double lsp_inner(lsp_vector u, lsp_vector v) { return inner(from_c(u), from_c(v)); }

lsp_status lsp_lines_through_point(lsp_point p, lsp_ext_complex xi, lsp_line_point* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(lines_through_point(from_c(p), from_c(xi))); });
}

lsp_status lsp_lines_through_point_chart(lsp_point p, lsp_chart_point xi, lsp_line_point* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(lines_through_point(from_c(p), from_c(xi))); });
}

lsp_status lsp_incidence_r(lsp_point p, lsp_ext_complex xi, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = incidence_r(from_c(p), from_c(xi)); });
}

lsp_status lsp_chart_transition(const lsp_line* line, lsp_line* out) {
  if (!line) return null_argument("line");
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(chart_transition(from_c(*line))); });
}

lsp_status lsp_section_point_sphere(lsp_point center, double radius, lsp_section** out) {
  return make_section(out, [&] { return point_sphere_section(from_c(center), radius); });
}

lsp_status lsp_section_ellipsoid(double a1, double a2, double a3, lsp_section** out) {
  return make_section(out, [&] { return ellipsoid_section({a1, a2, a3}); });
}

lsp_status lsp_section_torus(double a, double b, lsp_branch branch, lsp_section** out) {
  return make_section(out, [&] {
    if (branch != LSP_BRANCH_PLUS && branch != LSP_BRANCH_MINUS) {
      throw Error(ErrorCode::kParameter, "torus branch must be +1 or -1");
    }
    return torus_section({a, b, branch == LSP_BRANCH_PLUS ? Branch::kPlus : Branch::kMinus});
  });
}

void lsp_section_free(lsp_section* section) { delete section; }

const char* lsp_section_name(const lsp_section* section) {
  return section ? section->section.name().c_str() : "";
}

lsp_status lsp_section_eval(const lsp_section* section, lsp_chart_point xi, lsp_line_point* out) {
  if (!section) return null_argument("section");
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(section->section.line_at(from_c(xi))); });
}

lsp_status lsp_section_eval_ext(const lsp_section* section, lsp_ext_complex xi,
                                lsp_line_point* out) {
  if (!section) return null_argument("section");
  if (!out) return null_argument("out");
  return guarded([&] { *out = to_c(section->section.line_at(ChartPoint::from(from_c(xi)))); });
}

lsp_status lsp_section_reconstruct(const lsp_section* section, const lsp_chart_point* samples,
                                   size_t n, lsp_point* points, lsp_status* statuses) {
  if (!section) return null_argument("section");
  if (n > 0 && (!samples || !points || !statuses)) return null_argument("samples/points/statuses");
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  for (size_t i = 0; i < n; ++i) {
    // Keep going after a failure; each sample stands alone.
    const lsp_status s = guarded([&] {
      points[i] = to_c(section->section.surface_point(from_c(samples[i])));
    });
    statuses[i] = s;
    if (s != LSP_OK) points[i] = {nan, nan, nan};
  }
  return LSP_OK;
}

lsp_status lsp_verify_normality(const lsp_section* section, lsp_chart_point xi, double h,
                                double* out) {
  if (!section) return null_argument("section");
  if (!out) return null_argument("out");
  return guarded([&] { *out = verify_normality(section->section, from_c(xi), h); });
}

lsp_status lsp_implicit_residual_ellipsoid(double a1, double a2, double a3, lsp_point p,
                                           double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const EllipsoidParams params{a1, a2, a3};
    params.validate();
    *out = implicit_residual_ellipsoid(params, from_c(p));
  });
}

lsp_status lsp_implicit_residual_torus(double a, double b, lsp_point p, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const TorusParams params{a, b, Branch::kPlus};
    params.validate();
    *out = implicit_residual_torus(params, from_c(p));
  });
}

lsp_status lsp_grid_create(const lsp_grid_spec* spec, lsp_grid** out) {
  if (!spec) return null_argument("spec");
  if (!out) return null_argument("out");
  return guarded([&] {
    GridSpec g;
    switch (spec->kind) {
      case LSP_GRID_DISK:
        g.kind = GridKind::kDisk;
        break;
      case LSP_GRID_ANNULUS:
        g.kind = GridKind::kAnnulus;
        break;
      case LSP_GRID_TWO_CHART:
        g.kind = GridKind::kTwoChart;
        break;
      default:
        throw Error(ErrorCode::kParameter, "unknown grid kind");
    }
    g.radial_count = spec->radial_count;
    g.angular_count = spec->angular_count;
    g.max_modulus = spec->max_modulus;
    g.min_modulus = spec->min_modulus;
    g.jitter = spec->jitter;
    g.seed = spec->seed;
    *out = new lsp_grid{build_grid(g)};
  });
}

void lsp_grid_free(lsp_grid* grid) { delete grid; }

size_t lsp_grid_size(const lsp_grid* grid) { return grid ? grid->samples.size() : 0; }

lsp_status lsp_grid_at(const lsp_grid* grid, size_t index, lsp_chart_point* out) {
  if (!grid) return null_argument("grid");
  if (!out) return null_argument("out");
  if (index >= grid->samples.size()) return fail(LSP_ERR_INVALID_ARGUMENT, "grid index out of range");
  *out = to_c(grid->samples[index]);
  return LSP_OK;
}

lsp_status lsp_sample(const lsp_section* section, const lsp_grid* grid, lsp_samples** out) {
  if (!section) return null_argument("section");
  if (!grid) return null_argument("grid");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new lsp_samples{sample_section(section->section, grid->samples)}; });
}

void lsp_samples_free(lsp_samples* samples) { delete samples; }

size_t lsp_samples_size(const lsp_samples* samples) { return samples ? samples->rows.size() : 0; }

lsp_status lsp_samples_row(const lsp_samples* samples, size_t index, lsp_sample_row* out) {
  if (!samples) return null_argument("samples");
  if (!out) return null_argument("out");
  if (index >= samples->rows.size()) {
    return fail(LSP_ERR_INVALID_ARGUMENT, "sample index out of range");
  }
  const SampleRow& row = samples->rows[index];
  out->xi = to_c(row.xi);
  out->skipped = row.skipped ? 1 : 0;
  if (row.skipped) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    out->eta = {nan, nan};
    out->r = nan;
    out->point = {nan, nan, nan};
  } else {
    out->eta = to_c(row.eta);
    out->r = row.r;
    out->point = to_c(row.point);
  }
  return LSP_OK;
}

lsp_status lsp_samples_write_csv(const lsp_samples* samples, const char* path) {
  if (!samples) return null_argument("samples");
  if (!path) return null_argument("path");
  return guarded([&] { write_samples_csv(std::string(path), samples->rows); });
}

lsp_status lsp_samples_write_obj(const lsp_samples* samples, const char* path) {
  if (!samples) return null_argument("samples");
  if (!path) return null_argument("path");
  return guarded([&] { write_samples_obj(std::string(path), samples->rows); });
}

lsp_status lsp_verify(const char* suite, uint64_t seed, double tolerance_override,
                      lsp_report** out) {
  if (!suite) return null_argument("suite");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::optional<double> tol;
    if (!std::isnan(tolerance_override)) tol = tolerance_override;
    *out = new lsp_report{run_suite(suite, seed, tol)};
  });
}

void lsp_report_free(lsp_report* report) { delete report; }

size_t lsp_report_size(const lsp_report* report) {
  return report ? report->report.checks.size() : 0;
}

lsp_status lsp_report_check(const lsp_report* report, size_t index, lsp_check* out) {
  if (!report) return null_argument("report");
  if (!out) return null_argument("out");
  if (index >= report->report.checks.size()) {
    return fail(LSP_ERR_INVALID_ARGUMENT, "check index out of range");
  }
  const CheckResult& c = report->report.checks[index];
  *out = {c.suite.c_str(), c.name.c_str(), c.max_residual, c.tolerance,
          c.passed ? 1 : 0, c.wall_seconds, c.detail.c_str()};
  return LSP_OK;
}

int lsp_report_passed(const lsp_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

lsp_status lsp_report_write_json(const lsp_report* report, const char* path) {
  if (!report) return null_argument("report");
  if (!path) return null_argument("path");
  return guarded([&] {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorCode::kIo, std::string("cannot open ") + path + " for writing");
    os << report_to_json(report->report) << '\n';
    if (!os) throw Error(ErrorCode::kIo, std::string("failed writing ") + path);
  });
}

}  // extern "C"
