// Text format for Cayley tables: the first significant line holds the
// order k, the next k significant lines hold k whitespace-separated
// 0-based entries each. A line whose first non-blank character is '#' is
// a comment; blank lines are skipped.

#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "semiconj/cayley_table.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

namespace detail {

inline bool comment_or_blank(const std::string& line) {
  for (const char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

inline bool next_significant_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!comment_or_blank(line)) return true;
  }
  return false;
}

}  // namespace detail

// Largest accepted order; parsing is the only place a hostile k can show
// up, everything downstream assumes sane sizes.
inline constexpr long long kMaxParsedOrder = 4096;

// Reads one table from the stream and validates it. The stream may hold
// further content after the table.
inline CayleyTable parse_table(std::istream& in) {
  std::string line;
  if (!detail::next_significant_line(in, line)) {
    throw SemiconjError(Errc::parse_error, "missing order line", {});
  }
  long long order = 0;
  {
    std::istringstream fields(line);
    if (!(fields >> order)) {
      throw SemiconjError(Errc::parse_error,
                          "order line is not an integer: '" + line + "'", {});
    }
    std::string extra;
    if (fields >> extra) {
      throw SemiconjError(Errc::parse_error,
                          "unexpected content after the order: '" + extra +
                              "'",
                          {});
    }
  }
  if (order < 1) {
    throw SemiconjError(Errc::parse_error,
                        "order must be positive, got " +
                            std::to_string(order),
                        {order});
  }
  if (order > kMaxParsedOrder) {
    throw SemiconjError(Errc::parse_error,
                        "order " + std::to_string(order) + " exceeds " +
                            std::to_string(kMaxParsedOrder),
                        {order});
  }
  std::vector<std::vector<long long>> rows;
  rows.reserve(static_cast<std::size_t>(order));
  for (long long i = 0; i < order; ++i) {
    if (!detail::next_significant_line(in, line)) {
      throw SemiconjError(Errc::parse_error,
                          "expected " + std::to_string(order) +
                              " rows, got " + std::to_string(i),
                          {order, i});
    }
    std::istringstream fields(line);
    std::vector<long long> row;
    long long value = 0;
    while (fields >> value) row.push_back(value);
    if (!fields.eof()) {
      throw SemiconjError(Errc::parse_error,
                          "row " + std::to_string(i) +
                              " holds a non-integer token: '" + line + "'",
                          {i});
    }
    if (row.size() != static_cast<std::size_t>(order)) {
      throw SemiconjError(Errc::parse_error,
                          "row " + std::to_string(i) + " holds " +
                              std::to_string(row.size()) +
                              " entries, expected " + std::to_string(order),
                          {i, static_cast<long long>(row.size()), order});
    }
    rows.push_back(std::move(row));
  }
  return validate_table(static_cast<std::size_t>(order), rows);
}

// Reads exactly one table from a file; anything but comments and blank
// lines after it is an error.
inline CayleyTable parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SemiconjError(Errc::parse_error, "cannot open '" + path + "'", {});
  }
  CayleyTable table = parse_table(in);
  std::string line;
  if (detail::next_significant_line(in, line)) {
    throw SemiconjError(Errc::parse_error,
                        "unexpected content after the table: '" + line + "'",
                        {});
  }
  return table;
}

// Renders a table in the text format; the result re-parses to an equal
// table.
inline std::string format_table(const CayleyTable& s) {
  const std::size_t k = s.order();
  std::string out = std::to_string(k) + "\n";
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(
          s.product(static_cast<element_id>(i), static_cast<element_id>(j)));
    }
    out += '\n';
  }
  return out;
}

}  // namespace semiconj
