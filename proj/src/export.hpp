/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <ostream>
#include <span>
#include <string>

#include "grid.hpp"

namespace linespace {

inline constexpr const char* kCsvHeader = "xi_re,xi_im,chart,eta_re,eta_im,r,x,y,t,skipped";

/// 17 significant digits ("%.17g"), enough to round-trip any double.
std::string format_number(double v);

/// Header line, then one row per sample. Skipped rows carry `nan` in every
/// value column and skipped=1.
void write_samples_csv(std::ostream& os, std::span<const SampleRow> rows);

/// `v x y t` for each non-skipped row, same number format as the CSV.
void write_samples_obj(std::ostream& os, std::span<const SampleRow> rows);

/// File variants; throw kIo when the file cannot be written.
void write_samples_csv(const std::string& path, std::span<const SampleRow> rows);
void write_samples_obj(const std::string& path, std::span<const SampleRow> rows);

}  // namespace linespace
