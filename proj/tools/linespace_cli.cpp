/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// linespace: convert between oriented-line coordinates and points, sample
// normal-line sections of surfaces, and run the verification suites.
//
// Exit status: 0 success, 1 verification failed, 2 usage error,
// 3 parameter or runtime error.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_parse.hpp"
#include "linespace.h"

namespace {

using namespace linespace_cli;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

class RuntimeFailure : public std::runtime_error {
 public:
  RuntimeFailure(lsp_status status, const std::string& context)
      : std::runtime_error(context + ": " + lsp_status_string(status) + " (" + lsp_last_error() +
                           ")") {}
};

void check(lsp_status status, const char* context) {
  if (status != LSP_OK) throw RuntimeFailure(status, context);
}

struct SectionDeleter {
  void operator()(lsp_section* s) const { lsp_section_free(s); }
};
struct GridDeleter {
  void operator()(lsp_grid* g) const { lsp_grid_free(g); }
};
struct SamplesDeleter {
  void operator()(lsp_samples* s) const { lsp_samples_free(s); }
};
struct ReportDeleter {
  void operator()(lsp_report* r) const { lsp_report_free(r); }
};

struct ConvertArgs {
  std::string xi;
  std::string eta = "0";
  double r = 0.0;
  std::string point;
};

struct SampleArgs {
  std::string surface;
  std::string point = "0,0,0";
  double radius = 0.0;
  double a1 = 1.0, a2 = 1.0, a3 = 1.0;
  double a = 3.0, b = 1.0;
  std::string branch = "+";
  std::string grid = "disk";
  int radial = 4;
  int angular = 4;
  double max_modulus = 1.0;
  double min_modulus = 0.5;
  double jitter = 0.0;
  std::uint64_t seed = 0;
  std::string out_csv;
  std::string out_obj;
};

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::string report_json;
};

int run_convert(const ConvertArgs& args) {
  const lsp_ext_complex xi = parse_ext_complex(args.xi);
  nlohmann::ordered_json out;
  if (!args.point.empty()) {
    lsp_line_point lp{};
    check(lsp_lines_through_point(parse_point(args.point), xi, &lp), "lines through point");
    out["chart"] = static_cast<int>(lp.line.chart);
    out["xi_re"] = lp.line.xi.re;
    out["xi_im"] = lp.line.xi.im;
    out["eta_re"] = lp.line.eta.re;
    out["eta_im"] = lp.line.eta.im;
    out["r"] = lp.r;
  } else {
    lsp_line_point lp{};
    lp.line.chart = xi.is_infinite ? LSP_CHART_INVERTED : LSP_CHART_STANDARD;
    lp.line.xi = xi.is_infinite ? lsp_complex{0.0, 0.0} : xi.value;
    lp.line.eta = parse_complex(args.eta);
    lp.r = args.r;
    lsp_point p{};
    check(lsp_point_on_line(&lp, &p), "line point");
    out["x"] = p.x;
    out["y"] = p.y;
    out["t"] = p.t;
  }
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_sample(const SampleArgs& args) {
  // Everything is validated before any output file is touched.
  lsp_section* raw_section = nullptr;
  if (args.surface == "sphere") {
    check(lsp_section_point_sphere(parse_point(args.point), args.radius, &raw_section),
          "sphere section");
  } else if (args.surface == "ellipsoid") {
    check(lsp_section_ellipsoid(args.a1, args.a2, args.a3, &raw_section), "ellipsoid section");
  } else {
    check(lsp_section_torus(args.a, args.b, parse_branch(args.branch), &raw_section),
          "torus section");
    if (args.b >= args.a) {
      std::cerr << "warning: tube radius b >= centre radius a, the torus self-intersects\n";
    }
  }
  std::unique_ptr<lsp_section, SectionDeleter> section(raw_section);

  lsp_grid_spec spec{};
  spec.kind = parse_grid_kind(args.grid);
  spec.radial_count = args.radial;
  spec.angular_count = args.angular;
  spec.max_modulus = args.max_modulus;
  spec.min_modulus = args.min_modulus;
  spec.jitter = args.jitter;
  spec.seed = args.seed;
  lsp_grid* raw_grid = nullptr;
  check(lsp_grid_create(&spec, &raw_grid), "grid");
  std::unique_ptr<lsp_grid, GridDeleter> grid(raw_grid);

  lsp_samples* raw_samples = nullptr;
  check(lsp_sample(section.get(), grid.get(), &raw_samples), "sampling");
  std::unique_ptr<lsp_samples, SamplesDeleter> samples(raw_samples);

  const std::string csv = args.out_csv.empty() ? "/dev/stdout" : args.out_csv;
  check(lsp_samples_write_csv(samples.get(), csv.c_str()), "csv output");
  if (!args.out_obj.empty()) {
    check(lsp_samples_write_obj(samples.get(), args.out_obj.c_str()), "obj output");
  }
  if (!args.out_csv.empty()) {
    std::cerr << "wrote " << lsp_samples_size(samples.get()) << " rows to " << args.out_csv
              << '\n';
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  lsp_report* raw = nullptr;
  const double tol = args.tol.value_or(std::numeric_limits<double>::quiet_NaN());
  check(lsp_verify(args.suite.c_str(), args.seed, tol, &raw), "verify");
  std::unique_ptr<lsp_report, ReportDeleter> report(raw);

  const std::size_t n = lsp_report_size(report.get());
  std::size_t failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lsp_check c{};
    check(lsp_report_check(report.get(), i, &c), "report");
    if (!c.passed) ++failures;
    std::printf("%s  %-10s %-30s max_residual=%-12.4g tol=%-8.1e %.3fs%s%s\n",
                c.passed ? "PASS" : "FAIL", c.suite, c.name, c.max_residual, c.tolerance,
                c.wall_seconds, *c.detail ? "  " : "", c.detail);
  }
  std::printf("%zu checks, %zu failed (suite %s, seed %llu)\n", n, failures, args.suite.c_str(),
              static_cast<unsigned long long>(args.seed));
  if (!args.report_json.empty()) {
    check(lsp_report_write_json(report.get(), args.report_json.c_str()), "json report");
  }
  return lsp_report_passed(report.get()) ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented lines in R^3 as the tangent bundle of the 2-sphere"};
  app.set_config("--config", "", "TOML/INI file with default flag values; flags take precedence");
  app.require_subcommand(1);

  ConvertArgs conv;
  auto* convert = app.add_subcommand("convert", "Line (xi, eta, r) to point, or point to line");
  convert->option_defaults()->always_capture_default();
  convert->add_option("--xi", conv.xi, "Direction coordinate: a+bi, re,im or inf")->required();
  convert->add_option("--eta", conv.eta, "Fiber coordinate (inverted chart when --xi inf)");
  convert->add_option("--r", conv.r, "Affine parameter along the line");
  convert->add_option("--point", conv.point, "Point x,y,t; prints the line through it");
  convert->get_option("--point")->excludes(convert->get_option("--eta"));
  convert->get_option("--point")->excludes(convert->get_option("--r"));

  SampleArgs samp;
  auto* sample = app.add_subcommand("sample", "Sample a surface section over a grid");
  sample->option_defaults()->always_capture_default();
  sample->add_option("--surface", samp.surface, "sphere, ellipsoid or torus")
      ->required()
      ->check(CLI::IsMember({"sphere", "ellipsoid", "torus"}));
  sample->add_option("--point", samp.point, "Sphere centre x,y,t");
  sample->add_option("--radius", samp.radius, "Sphere radius (0: lines through the point)");
  sample->add_option("--a1", samp.a1, "Ellipsoid squared semi-axis along x");
  sample->add_option("--a2", samp.a2, "Ellipsoid squared semi-axis along y");
  sample->add_option("--a3", samp.a3, "Ellipsoid squared semi-axis along t");
  sample->add_option("--a", samp.a, "Torus centre-circle radius");
  sample->add_option("--b", samp.b, "Torus tube radius");
  sample->add_option("--branch", samp.branch, "Torus branch: + or -");
  sample->add_option("--grid", samp.grid, "disk, annulus or two-chart")
      ->check(CLI::IsMember({"disk", "annulus", "two-chart"}));
  sample->add_option("--radial", samp.radial, "Number of rings");
  sample->add_option("--angular", samp.angular, "Samples per ring");
  sample->add_option("--max-modulus", samp.max_modulus, "Outer |xi| (per chart)");
  sample->add_option("--min-modulus", samp.min_modulus, "Inner |xi| of an annulus");
  sample->add_option("--jitter", samp.jitter, "Seeded phase jitter, 0..1");
  sample->add_option("--seed", samp.seed, "Seed for the jitter");
  sample->add_option("--out-csv", samp.out_csv, "CSV output (default stdout)");
  sample->add_option("--out-obj", samp.out_obj, "OBJ point-cloud output");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->option_defaults()->always_capture_default();
  verify->add_option("suite", ver.suite, "core, spheres, ellipsoid, torus or all")
      ->required()
      ->check(CLI::IsMember({"core", "spheres", "ellipsoid", "torus", "all"}));
  verify->add_option("--seed", ver.seed, "Sampler seed");
  verify->add_option("--tol", ver.tol, "Tolerance applied to every check");
  verify->add_option("--report-json", ver.report_json, "Write a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*convert) return run_convert(conv);
    if (*sample) return run_sample(samp);
    if (*verify) return run_verify(ver);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RuntimeFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
