/*
 * Copyright 2026 The linespace authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

// Argument parsing for the linespace CLI.

#include <cerrno>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "linespace.h"

namespace linespace_cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double parse_double(const std::string& text) {
  if (text.empty()) throw UsageError("empty number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE) {
    throw UsageError("malformed number '" + text + "'");
  }
  return v;
}

inline std::string strip_spaces(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

/// Accepts `inf`, `re,im`, or algebraic forms such as `2`, `-i`, `0.3+0.7i`,
/// `1e-3-2.5e2i`.
inline lsp_ext_complex parse_ext_complex(const std::string& raw) {
  const std::string s = strip_spaces(raw);
  if (s == "inf" || s == "infinity" || s == "Inf" || s == "oo") return {1, {0.0, 0.0}};
  if (s.find(',') != std::string::npos) {
    const auto parts = split(s, ',');
    if (parts.size() != 2) throw UsageError("complex pair must be 're,im': '" + raw + "'");
    return {0, {parse_double(parts[0]), parse_double(parts[1])}};
  }
  if (s.empty()) throw UsageError("empty complex number");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {0, {parse_double(s), 0.0}};

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split_at = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  auto imag_part = [](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split_at == std::string::npos) return {0, {0.0, imag_part(body)}};
  return {0, {parse_double(body.substr(0, split_at)), imag_part(body.substr(split_at))}};
}

inline lsp_complex parse_complex(const std::string& raw) {
  const lsp_ext_complex e = parse_ext_complex(raw);
  if (e.is_infinite) throw UsageError("infinity is not allowed here");
  return e.value;
}

/// `x,y,t`.
inline lsp_point parse_point(const std::string& raw) {
  const auto parts = split(strip_spaces(raw), ',');
  if (parts.size() != 3) throw UsageError("point must be 'x,y,t': '" + raw + "'");
  return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
}

inline lsp_branch parse_branch(const std::string& raw) {
  if (raw == "+" || raw == "plus" || raw == "+1" || raw == "1") return LSP_BRANCH_PLUS;
  if (raw == "-" || raw == "minus" || raw == "-1") return LSP_BRANCH_MINUS;
  throw UsageError("branch must be + or -: '" + raw + "'");
}

inline lsp_grid_kind parse_grid_kind(const std::string& raw) {
  if (raw == "disk") return LSP_GRID_DISK;
  if (raw == "annulus") return LSP_GRID_ANNULUS;
  if (raw == "two-chart") return LSP_GRID_TWO_CHART;
  throw UsageError("grid must be disk, annulus or two-chart: '" + raw + "'");
}

}  // namespace linespace_cli
