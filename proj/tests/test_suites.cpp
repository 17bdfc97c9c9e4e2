/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>
#include <set>

#include <json.hpp>

#include "error.hpp"
#include "suites.hpp"

using namespace linespace;

TEST_CASE("every suite passes at default tolerances") {
  for (const char* suite : {"core", "spheres", "ellipsoid", "torus"}) {
    CAPTURE(suite);
    const RunReport report = run_suite(suite, 7);
    CHECK_FALSE(report.checks.empty());
    for (const CheckResult& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.max_residual);
      CHECK(c.passed);
      CHECK(c.suite == suite);
      CHECK(c.passed == (c.max_residual <= c.tolerance));
    }
    CHECK(report.passed());
  }
}

TEST_CASE("all runs every check once") {
  const RunReport report = run_suite("all", 1);
  CHECK(report.checks.size() >= 8);
  std::set<std::string> names;
  for (const auto& c : report.checks) names.insert(c.name);
  CHECK(names.size() == report.checks.size());
  CHECK(report.passed());
}

TEST_CASE("checks see the same samples in every suite") {
  const RunReport all = run_suite("all", 99);
  const RunReport torus = run_suite("torus", 99);
  for (const CheckResult& t : torus.checks) {
    for (const CheckResult& a : all.checks) {
      if (a.name == t.name) CHECK(a.max_residual == t.max_residual);
    }
  }
}

TEST_CASE("an unattainable tolerance fails") {
  const RunReport report = run_suite("torus", 1, 1e-20);
  CHECK_FALSE(report.passed());
  for (const auto& c : report.checks) CHECK(c.tolerance == 1e-20);
}

TEST_CASE("unknown suite") {
  CHECK_FALSE(is_known_suite("everything"));
  CHECK_THROWS_AS(run_suite("everything", 1), Error);
}

TEST_CASE("json report") {
  const RunReport report = run_suite("spheres", 3);
  const auto doc = nlohmann::json::parse(report_to_json(report));
  CHECK(doc["suite"] == "spheres");
  CHECK(doc["seed"] == 3);
  CHECK(doc["passed"] == true);
  REQUIRE(doc["checks"].size() == report.checks.size());
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("max_residual"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("wall_seconds"));
    CHECK(c["passed"] == (c["max_residual"].get<double>() <= c["tolerance"].get<double>()));
  }
}
