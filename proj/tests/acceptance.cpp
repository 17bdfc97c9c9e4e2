/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <path-to-linespace-cli> <work-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "linespace.h"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  double worst = 0.0;
  bool ok = true;
  std::string note;

  void observe(double v) {
    if (!std::isfinite(v)) {
      ok = false;
      worst = INFINITY;
    } else {
      worst = std::max(worst, v);
    }
  }
  void fail(const std::string& why) {
    ok = false;
    if (note.empty()) note = why;
  }
};

int g_failures = 0;

void report(int id, const char* name, const Outcome& o, double tol, double seconds,
            double time_limit = 0.0) {
  bool passed = o.ok && o.worst <= tol;
  std::string extra;
  if (time_limit > 0.0) {
    passed = passed && seconds <= time_limit;
    char buf[64];
    std::snprintf(buf, sizeof buf, " time=%.3fs (limit %gs)", seconds, time_limit);
    extra = buf;
  }
  if (!o.note.empty()) extra += " [" + o.note + "]";
  std::printf("%s criterion %d %s: max=%.3e tol=%.0e%s\n", passed ? "PASS" : "FAIL", id, name,
              o.worst, tol, extra.c_str());
  std::fflush(stdout);
  if (!passed) ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  bool coin() { return std::uniform_int_distribution<int>(0, 1)(engine_) == 1; }
  lsp_complex polar(double lo, double hi) {
    const double m = log_uniform(lo, hi);
    const double a = uniform(-M_PI, M_PI);
    return {m * std::cos(a), m * std::sin(a)};
  }
  lsp_complex box(double half) { return {uniform(-half, half), uniform(-half, half)}; }
  lsp_point point(double half) {
    return {uniform(-half, half), uniform(-half, half), uniform(-half, half)};
  }

 private:
  std::mt19937_64 engine_;
};

lsp_ext_complex ext(lsp_complex c) { return {0, c}; }

// Half of the direction samples fill the coordinate box, half are log-spread in modulus.
lsp_complex random_xi(Rng& rng, double half) {
  return rng.coin() ? rng.box(half) : rng.polar(1e-6, half);
}

double norm(lsp_point p) { return std::sqrt(p.x * p.x + p.y * p.y + p.t * p.t); }

void criterion_round_trip() {
  Rng rng(101);
  Outcome o;
  const auto start = Clock::now();
  for (int i = 0; i < 10000; ++i) {
    const lsp_point p = rng.point(1e3);
    const lsp_ext_complex xi = ext(random_xi(rng, 1e3));
    lsp_line_point lp{};
    lsp_point q{};
    if (lsp_lines_through_point(p, xi, &lp) != LSP_OK || lsp_point_on_line(&lp, &q) != LSP_OK) {
      o.fail(lsp_last_error());
      continue;
    }
    o.observe(std::max({std::abs(q.x - p.x), std::abs(q.y - p.y), std::abs(q.t - p.t)}));
  }
  report(1, "round_trip", o, 1e-9, seconds_since(start), 1.0);
}

void criterion_orthogonality() {
  Rng rng(202);
  Outcome o;
  const auto start = Clock::now();
  for (int i = 0; i < 10000; ++i) {
    lsp_line line{rng.coin() ? LSP_CHART_STANDARD : LSP_CHART_INVERTED, random_xi(rng, 1e3),
                  rng.box(1e3)};
    lsp_vector perp{};
    lsp_vector dir{};
    if (lsp_perp_displacement(&line, &perp) != LSP_OK ||
        lsp_dir_from_chart_point({line.chart, line.xi}, &dir) != LSP_OK) {
      o.fail(lsp_last_error());
      continue;
    }
    o.observe(std::abs(lsp_inner(perp, dir)));
  }
  report(2, "orthogonality", o, 1e-12, seconds_since(start));
}

void criterion_minimal_distance() {
  Rng rng(303);
  Outcome o;
  const auto start = Clock::now();
  for (int i = 0; i < 10000; ++i) {
    const lsp_point p = rng.point(1e2);
    lsp_line_point lp{};
    lsp_point foot{};
    if (lsp_lines_through_point(p, ext(random_xi(rng, 1e3)), &lp) != LSP_OK ||
        lsp_foot_point(&lp.line, &foot) != LSP_OK) {
      o.fail(lsp_last_error());
      continue;
    }
    const double f = norm(foot);
    const double q = norm(p);
    o.observe(std::abs(lp.r * lp.r + f * f - q * q));
  }
  // Along every line no sampled point is closer to the origin than the foot point.
  for (int i = 0; i < 100; ++i) {
    lsp_line line{LSP_CHART_STANDARD, random_xi(rng, 1e2), rng.box(1e2)};
    lsp_point foot{};
    if (lsp_foot_point(&line, &foot) != LSP_OK) {
      o.fail(lsp_last_error());
      continue;
    }
    const double f = norm(foot);
    for (int j = 0; j < 100; ++j) {
      const double s = rng.coin() ? rng.uniform(-1e2, 1e2) : rng.uniform(-1e-3, 1e-3);
      lsp_line_point lp{line, s};
      lsp_point q{};
      lsp_point_on_line(&lp, &q);
      if (norm(q) < f * (1.0 - 1e-15)) o.fail("offset closer than foot");
    }
  }
  report(3, "minimal_distance", o, 1e-9, seconds_since(start));
}

lsp_chart_point two_chart_sample(Rng& rng) {
  return {rng.coin() ? LSP_CHART_STANDARD : LSP_CHART_INVERTED, rng.polar(1e-4, 1.0)};
}

void criterion_ellipsoid() {
  Rng rng(404);
  Outcome o;
  const auto start = Clock::now();
  for (int k = 0; k < 20; ++k) {
    const double a1 = rng.log_uniform(0.1, 10.0);
    const double a2 = rng.log_uniform(0.1, 10.0);
    const double a3 = rng.log_uniform(0.1, 10.0);
    lsp_section* s = nullptr;
    if (lsp_section_ellipsoid(a1, a2, a3, &s) != LSP_OK) {
      o.fail(lsp_last_error());
      continue;
    }
    std::vector<lsp_chart_point> xs(500);
    for (auto& x : xs) x = two_chart_sample(rng);
    std::vector<lsp_point> pts(xs.size());
    std::vector<lsp_status> st(xs.size());
    lsp_section_reconstruct(s, xs.data(), xs.size(), pts.data(), st.data());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double res = INFINITY;
      if (st[i] != LSP_OK ||
          lsp_implicit_residual_ellipsoid(a1, a2, a3, pts[i], &res) != LSP_OK) {
        o.fail(lsp_status_string(st[i]));
      }
      o.observe(std::abs(res));
    }
    lsp_section_free(s);
  }
  // Equal axes reduce to a round sphere about the origin.
  for (int k = 0; k < 20; ++k) {
    const double a = rng.log_uniform(0.1, 10.0);
    lsp_section* s = nullptr;
    lsp_section_ellipsoid(a, a, a, &s);
    for (int i = 0; i < 50; ++i) {
      lsp_line_point lp{};
      if (lsp_section_eval(s, two_chart_sample(rng), &lp) != LSP_OK) {
        o.fail(lsp_last_error());
        continue;
      }
      const double dev = std::max(std::hypot(lp.line.eta.re, lp.line.eta.im),
                                  std::abs(lp.r - std::sqrt(a)));
      if (dev > 1e-10) o.fail("sphere degeneration off by " + std::to_string(dev));
    }
    lsp_section_free(s);
  }
  report(4, "ellipsoid_residual", o, 1e-8, seconds_since(start));
}

void criterion_ellipsoid_global() {
  Rng rng(505);
  Outcome o;
  const auto start = Clock::now();
  for (int k = 0; k < 20; ++k) {
    const double a1 = rng.log_uniform(0.1, 10.0);
    const double a2 = rng.log_uniform(0.1, 10.0);
    const double a3 = rng.log_uniform(0.1, 10.0);
    lsp_section* s = nullptr;
    lsp_section_ellipsoid(a1, a2, a3, &s);
    const lsp_chart_point pole{LSP_CHART_INVERTED, {0.0, 0.0}};
    lsp_line_point lp{};
    lsp_point p{};
    lsp_status st{};
    double res = INFINITY;
    if (lsp_section_eval(s, pole, &lp) != LSP_OK ||
        !(std::isfinite(lp.r) && std::isfinite(lp.line.eta.re) &&
          std::isfinite(lp.line.eta.im)) ||
        lsp_section_reconstruct(s, &pole, 1, &p, &st) != LSP_OK || st != LSP_OK ||
        lsp_implicit_residual_ellipsoid(a1, a2, a3, p, &res) != LSP_OK) {
      o.fail("non-finite evaluation at the inverted-chart origin");
    }
    o.observe(std::abs(res));
    lsp_section_free(s);
  }
  report(5, "ellipsoid_global_section", o, 1e-8, seconds_since(start));
}

void criterion_torus() {
  Rng rng(606);
  Outcome o;
  const auto start = Clock::now();
  const double params[][2] = {{3.0, 1.0}, {2.0, 0.5}, {1.0, 3.0}};
  for (const auto& ab : params) {
    const double a = ab[0];
    const double b = ab[1];
    for (lsp_branch branch : {LSP_BRANCH_PLUS, LSP_BRANCH_MINUS}) {
      lsp_section* s = nullptr;
      lsp_section_torus(a, b, branch, &s);
      std::vector<lsp_chart_point> xs(500);
      for (auto& x : xs) {
        x = {rng.coin() ? LSP_CHART_STANDARD : LSP_CHART_INVERTED, rng.polar(1e-3, 1.0)};
      }
      std::vector<lsp_point> pts(xs.size());
      std::vector<lsp_status> st(xs.size());
      lsp_section_reconstruct(s, xs.data(), xs.size(), pts.data(), st.data());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        double res = INFINITY;
        if (st[i] != LSP_OK || lsp_implicit_residual_torus(a, b, pts[i], &res) != LSP_OK) {
          o.fail(lsp_status_string(st[i]));
        }
        o.observe(std::abs(res));
      }
      const double sign = branch == LSP_BRANCH_PLUS ? 1.0 : -1.0;
      for (int i = 0; i < 64; ++i) {
        const double phi = 2.0 * M_PI * i / 64.0;
        lsp_line_point lp{};
        if (lsp_section_eval(s, {LSP_CHART_STANDARD, {std::cos(phi), std::sin(phi)}}, &lp) !=
            LSP_OK) {
          o.fail(lsp_last_error());
          continue;
        }
        const double dev = std::max(std::hypot(lp.line.eta.re, lp.line.eta.im),
                                    std::abs(lp.r - (b + sign * a)));
        if (dev > 1e-12) o.fail("equator off by " + std::to_string(dev));
      }
      lsp_section_free(s);
    }
  }
  report(6, "torus_residual_and_equators", o, 1e-8, seconds_since(start));
}

void criterion_normality() {
  Rng rng(707);
  Outcome o;
  const auto start = Clock::now();
  auto run = [&](lsp_section* s, const std::function<lsp_chart_point()>& draw) {
    for (int i = 0; i < 50; ++i) {
      double res = INFINITY;
      if (lsp_verify_normality(s, draw(), 1e-5, &res) != LSP_OK) o.fail(lsp_last_error());
      o.observe(res);
    }
    lsp_section_free(s);
  };
  auto disk = [&] { return two_chart_sample(rng); };
  auto annulus = [&] {
    return lsp_chart_point{rng.coin() ? LSP_CHART_STANDARD : LSP_CHART_INVERTED,
                           rng.polar(0.05, 1.0)};
  };
  lsp_section* s = nullptr;
  lsp_section_point_sphere(rng.point(5.0), rng.uniform(0.5, 5.0), &s);
  run(s, disk);
  lsp_section_ellipsoid(1.0, 4.0, 9.0, &s);
  run(s, disk);
  lsp_section_torus(3.0, 1.0, LSP_BRANCH_PLUS, &s);
  run(s, annulus);
  lsp_section_torus(3.0, 1.0, LSP_BRANCH_MINUS, &s);
  run(s, annulus);
  report(7, "normality", o, 1e-6, seconds_since(start), 5.0);
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

int run_cli(const std::string& cli, const std::string& args) {
  const int rc = std::system((quote(cli) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion_cli(const std::string& cli, const std::filesystem::path& work) {
  Outcome o;
  const auto start = Clock::now();
  std::filesystem::create_directories(work);
  const std::string args =
      "sample --surface ellipsoid --a1 1 --a2 4 --a3 9 --grid two-chart --radial 6 "
      "--angular 11 --jitter 0.4 --seed 1234 --out-csv ";
  const auto a = work / "run_a.csv";
  const auto b = work / "run_b.csv";
  if (run_cli(cli, args + quote(a.string())) != 0 ||
      run_cli(cli, args + quote(b.string())) != 0) {
    o.fail("sample exited nonzero");
  } else {
    const std::string ta = slurp(a);
    const std::string tb = slurp(b);
    if (ta.empty() || ta != tb) o.fail("CSV output differs between runs");
  }
  const int rc = run_cli(cli, "verify all");
  if (rc != 0) o.fail("verify all exited " + std::to_string(rc));
  report(8, "cli_determinism", o, 0.0, seconds_since(start));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <linespace-cli> <work-dir>\n", argv[0]);
    return 2;
  }
  criterion_round_trip();
  criterion_orthogonality();
  criterion_minimal_distance();
  criterion_ellipsoid();
  criterion_ellipsoid_global();
  criterion_torus();
  criterion_normality();
  criterion_cli(argv[1], argv[2]);
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
