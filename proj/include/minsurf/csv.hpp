// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Deterministic CSV writing: fixed "%.17g" formatting (lossless for double),
/// '\n' line endings, no locale dependence. Byte-identical output for
/// identical inputs is a requirement of the audit, not a nicety.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "minsurf/errors.hpp"

namespace minsurf {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path, const std::vector<std::string>& header)
      : out_(path, std::ios::binary) {
    if (!out_) throw ConfigError("cannot open CSV output file: " + path);
    write_strings(header);
  }

  void row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) line += ',';
      line += format_double(values[i]);
    }
    line += '\n';
    out_ << line;
  }

  void row_with_label(const std::string& label, const std::vector<double>& values) {
    std::string line = label;
    for (double v : values) {
      line += ',';
      line += format_double(v);
    }
    line += '\n';
    out_ << line;
  }

 private:
  void write_strings(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += ',';
      line += cells[i];
    }
    line += '\n';
    out_ << line;
  }

  std::ofstream out_;
};

}  // namespace minsurf
