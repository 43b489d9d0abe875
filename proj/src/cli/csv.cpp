#include "infoproj/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "infoproj/errors.hpp"

namespace infoproj::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                            : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_number(std::string_view cell, std::size_t line) {
  std::string_view s = cell;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("non-numeric cell '" + std::string(cell) + "'", line);
  }
  if (!std::isfinite(value)) throw ParseError("non-finite cell '" + std::string(cell) + "'", line);
  return value;
}

}  // namespace

CsvTable parse_csv(std::string_view text, const CsvOptions& opts) {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> header;
  std::vector<std::string> labels;
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_pending = opts.has_header;

  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;
    if (trim(line).empty()) continue;

    const auto cells = split(line);
    if (header_pending) {
      header_pending = false;
      for (auto c : cells) header.emplace_back(c);
      width = cells.size();
      continue;
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " columns, found " +
                           std::to_string(cells.size()),
                       line_no);
    }
    const std::size_t numeric = opts.label_last ? width - 1 : width;
    if (numeric == 0) throw ParseError("no numeric columns", line_no);
    std::vector<double> row;
    row.reserve(numeric);
    for (std::size_t k = 0; k < numeric; ++k) row.push_back(parse_number(cells[k], line_no));
    if (opts.label_last) labels.emplace_back(cells.back());
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no data rows", line_no == 0 ? 1 : line_no);

  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto d = static_cast<Eigen::Index>(rows.front().size());
  Matrix values(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) values(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  DataMatrix data(std::move(values));
  if (opts.center) data = center(data);
  return {std::move(data), std::move(header), std::move(labels)};
}

CsvTable load_csv(const std::string& path, const CsvOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), opts);
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc()) throw InvalidInput("cannot format number");
  return {buf, ptr};
}

void write_csv(std::ostream& out, const Matrix& values, const std::vector<std::string>& header,
               const std::vector<std::string>& labels) {
  if (!header.empty()) {
    for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
    out << '\n';
  }
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index j = 0; j < values.cols(); ++j) {
      out << (j ? "," : "") << format_double(values(i, j));
    }
    if (!labels.empty()) out << ',' << labels[static_cast<std::size_t>(i)];
    out << '\n';
  }
}

}  // namespace infoproj::cli
