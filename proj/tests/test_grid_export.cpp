/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "export.hpp"
#include "grid.hpp"

using namespace linespace;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("grid sizes and ordering") {
  GridSpec disk;
  disk.kind = GridKind::kDisk;
  disk.radial_count = 4;
  disk.angular_count = 4;
  disk.max_modulus = 2.0;
  const auto d = build_grid(disk);
  REQUIRE(d.size() == 16);
  CHECK(std::abs(d.front().coord) == doctest::Approx(0.5));
  CHECK(std::abs(d.back().coord) == doctest::Approx(2.0));
  for (const auto& cp : d) CHECK(cp.chart == Chart::kStandard);

  GridSpec ann = disk;
  ann.kind = GridKind::kAnnulus;
  ann.radial_count = 3;
  ann.min_modulus = 0.5;
  ann.max_modulus = 1.5;
  const auto a = build_grid(ann);
  REQUIRE(a.size() == 12);
  CHECK(std::abs(a[0].coord) == doctest::Approx(0.5));
  CHECK(std::abs(a[4].coord) == doctest::Approx(1.0));
  CHECK(std::abs(a[11].coord) == doctest::Approx(1.5));

  GridSpec two = disk;
  two.kind = GridKind::kTwoChart;
  two.max_modulus = 1.0;
  const auto t = build_grid(two);
  REQUIRE(t.size() == 2 * (1 + 16));
  CHECK(t[0].chart == Chart::kStandard);
  CHECK(std::abs(t[0].coord) == 0.0);
  CHECK(t[17].chart == Chart::kInverted);
  CHECK(std::abs(t[17].coord) == 0.0);
  for (const auto& cp : t) CHECK(std::abs(cp.coord) <= 1.0 + 1e-15);
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.radial_count = 0;
  CHECK_THROWS_AS(build_grid(g), Error);
  g = GridSpec{};
  g.max_modulus = -1.0;
  CHECK_THROWS_AS(build_grid(g), Error);
  g = GridSpec{};
  g.kind = GridKind::kAnnulus;
  g.min_modulus = 2.0;
  g.max_modulus = 1.0;
  CHECK_THROWS_AS(build_grid(g), Error);
  g.min_modulus = 1.0;
  CHECK_THROWS_AS(build_grid(g), Error);
  g = GridSpec{};
  g.jitter = 1.5;
  CHECK_THROWS_AS(build_grid(g), Error);
}

TEST_CASE("jittered grids depend only on the seed") {
  GridSpec g;
  g.jitter = 0.5;
  g.seed = 42;
  const auto a = build_grid(g);
  const auto b = build_grid(g);
  g.seed = 43;
  const auto c = build_grid(g);
  REQUIRE(a.size() == b.size());
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].coord == b[i].coord);
    any_diff = any_diff || a[i].coord != c[i].coord;
  }
  CHECK(any_diff);
}

TEST_CASE("grid kind names") {
  for (GridKind k : {GridKind::kDisk, GridKind::kAnnulus, GridKind::kTwoChart}) {
    CHECK(parse_grid_kind(grid_kind_name(k)) == k);
  }
  CHECK_FALSE(parse_grid_kind("square").has_value());
}

TEST_CASE("number format round-trips doubles") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(5.0) == "5");
  CHECK(format_number(0.1) == "0.10000000000000001");
  for (double v : {1.0 / 3.0, -2.718281828459045, 1e-300, 6.02214076e23}) {
    CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("sphere samples: constant point, exact CSV header") {
  GridSpec g;
  g.radial_count = 4;
  g.angular_count = 4;
  const auto rows = sample_section(point_sphere_section({0.0, 1.0}), build_grid(g));
  std::ostringstream csv;
  write_samples_csv(csv, rows);
  const auto table = parse_csv(csv.str());
  REQUIRE(table.size() == 17);
  CHECK(csv.str().rfind("xi_re,xi_im,chart,eta_re,eta_im,r,x,y,t,skipped\n", 0) == 0);
  for (std::size_t i = 1; i < table.size(); ++i) {
    REQUIRE(table[i].size() == 10);
    CHECK(std::abs(std::strtod(table[i][6].c_str(), nullptr)) <= 1e-15);
    CHECK(std::abs(std::strtod(table[i][7].c_str(), nullptr)) <= 1e-15);
    CHECK(std::strtod(table[i][8].c_str(), nullptr) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(table[i][9] == "0");
  }
}

TEST_CASE("ellipsoid two-chart samples satisfy the implicit equation") {
  GridSpec g;
  g.kind = GridKind::kTwoChart;
  g.radial_count = 6;
  g.angular_count = 9;
  const EllipsoidParams p{1.0, 4.0, 9.0};
  const auto rows = sample_section(ellipsoid_section(p), build_grid(g));
  std::ostringstream csv;
  write_samples_csv(csv, rows);
  const auto table = parse_csv(csv.str());
  REQUIRE(table.size() == rows.size() + 1);
  bool saw_inverted = false;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const double x = std::strtod(table[i][6].c_str(), nullptr);
    const double y = std::strtod(table[i][7].c_str(), nullptr);
    const double t = std::strtod(table[i][8].c_str(), nullptr);
    CHECK(std::abs(x * x / 1.0 + y * y / 4.0 + t * t / 9.0 - 1.0) <= 1e-8);
    saw_inverted = saw_inverted || table[i][2] == "2";
  }
  CHECK(saw_inverted);
}

TEST_CASE("torus annulus samples: equator radii and skipped poles") {
  GridSpec g;
  g.kind = GridKind::kAnnulus;
  g.radial_count = 3;
  g.angular_count = 8;
  g.min_modulus = 0.5;
  g.max_modulus = 1.5;
  for (Branch branch : {Branch::kPlus, Branch::kMinus}) {
    const auto rows = sample_section(torus_section({1.0, 3.0, branch}), build_grid(g));
    for (const SampleRow& row : rows) {
      if (std::abs(std::abs(row.xi.coord) - 1.0) > 1e-12) continue;
      CHECK(std::abs(row.point.t) <= 1e-12);
      CHECK(std::abs(row.point.z) == doctest::Approx(branch == Branch::kPlus ? 4.0 : 2.0));
    }
  }

  GridSpec two;
  two.kind = GridKind::kTwoChart;
  const auto rows = sample_section(torus_section({3.0, 1.0, Branch::kPlus}), build_grid(two));
  std::size_t skipped = 0;
  for (const auto& r : rows) skipped += r.skipped ? 1 : 0;
  CHECK(skipped == 2);
  std::ostringstream csv;
  write_samples_csv(csv, rows);
  const auto table = parse_csv(csv.str());
  CHECK(table[1][9] == "1");
  CHECK(table[1][6] == "nan");
}

TEST_CASE("OBJ vertices equal the CSV point columns row for row") {
  GridSpec g;
  g.kind = GridKind::kTwoChart;
  g.radial_count = 3;
  g.angular_count = 5;
  const auto rows = sample_section(torus_section({3.0, 1.0, Branch::kMinus}), build_grid(g));
  std::ostringstream csv, obj;
  write_samples_csv(csv, rows);
  write_samples_obj(obj, rows);
  const auto table = parse_csv(csv.str());
  std::istringstream in(obj.str());
  std::string line;
  std::size_t row = 1;
  std::size_t vertices = 0;
  while (std::getline(in, line)) {
    while (row < table.size() && table[row][9] == "1") ++row;
    REQUIRE(row < table.size());
    CHECK(line == "v " + table[row][6] + " " + table[row][7] + " " + table[row][8]);
    ++row;
    ++vertices;
  }
  CHECK(vertices == rows.size() - 2);
}

TEST_CASE("file writers report i/o failures") {
  const std::vector<SampleRow> rows(1);
  try {
    write_samples_csv(std::string("/nonexistent-dir/x.csv"), rows);
    FAIL("expected an i/o error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIo);
  }
}
