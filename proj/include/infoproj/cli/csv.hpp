#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "infoproj/data_model.hpp"

namespace infoproj::cli {

struct CsvOptions {
  bool has_header = false;
  bool label_last = false;  // trailing column is a label, kept as text
  bool center = true;
};

struct CsvTable {
  DataMatrix data;
  std::vector<std::string> header;  // empty when the file has none
  std::vector<std::string> labels;  // one per row when label_last
};

/// Comma-separated numeric table, LF or CRLF, optional single header line.
/// Ragged rows and non-numeric or non-finite cells raise ParseError with the
/// 1-based line number.
CsvTable parse_csv(std::string_view text, const CsvOptions& opts);
CsvTable load_csv(const std::string& path, const CsvOptions& opts);

/// 17 significant digits, so the text reads back to the identical double.
std::string format_double(double v);

/// Writes a header line (if non-empty) then one row per matrix row; appends a
/// label column when `labels` is non-empty.
void write_csv(std::ostream& out, const Matrix& values, const std::vector<std::string>& header,
               const std::vector<std::string>& labels = {});

}  // namespace infoproj::cli
