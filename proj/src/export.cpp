/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "export.hpp"

#include <cstdio>
#include <fstream>

namespace linespace {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_samples_csv(std::ostream& os, std::span<const SampleRow> rows) {
  os << kCsvHeader << '\n';
  for (const SampleRow& row : rows) {
    os << format_number(row.xi.coord.real()) << ',' << format_number(row.xi.coord.imag()) << ','
       << static_cast<int>(row.xi.chart) << ',';
    if (row.skipped) {
      os << "nan,nan,nan,nan,nan,nan,1\n";
      continue;
    }
    os << format_number(row.eta.real()) << ',' << format_number(row.eta.imag()) << ','
       << format_number(row.r) << ',' << format_number(row.point.x()) << ','
       << format_number(row.point.y()) << ',' << format_number(row.point.t) << ",0\n";
  }
}

void write_samples_obj(std::ostream& os, std::span<const SampleRow> rows) {
  for (const SampleRow& row : rows) {
    if (row.skipped) continue;
    os << "v " << format_number(row.point.x()) << ' ' << format_number(row.point.y()) << ' '
       << format_number(row.point.t) << '\n';
  }
}

namespace {

template <typename Writer>
void write_file(const std::string& path, std::span<const SampleRow> rows, Writer writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  writer(out, rows);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "failed writing " + path);
}

}  // namespace

void write_samples_csv(const std::string& path, std::span<const SampleRow> rows) {
  write_file(path, rows, [](std::ostream& os, std::span<const SampleRow> r) {
    write_samples_csv(os, r);
  });
}

void write_samples_obj(const std::string& path, std::span<const SampleRow> rows) {
  write_file(path, rows, [](std::ostream& os, std::span<const SampleRow> r) {
    write_samples_obj(os, r);
  });
}

}  // namespace linespace
