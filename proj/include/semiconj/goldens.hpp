// Golden-counts fixture: a plain-text table of `order, filter, count`
// rows (filter "iso" counts one table per isomorphism class, "labeled"
// counts all tables) plus key/value lines describing the smallest order
// where ~p fails transitivity. Generated by `verify --regen-goldens` and
// asserted against on later runs; never hand-edited.

#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "semiconj/errors.hpp"
#include "semiconj/table_io.hpp"

namespace semiconj {

struct GoldenFixture {
  std::map<std::pair<std::size_t, std::string>, std::size_t> counts;
  std::optional<std::size_t> smallest_nontransitive_order;
  std::optional<std::size_t> count_at_that_order;
  std::optional<std::size_t> nontransitive_searched_up_to;

  std::optional<std::size_t> count(std::size_t order,
                                   const std::string& filter) const {
    const auto it = counts.find({order, filter});
    if (it == counts.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const GoldenFixture&, const GoldenFixture&) = default;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return s.substr(lo, hi - lo);
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (const char ch : line) {
    if (ch == ',') {
      fields.push_back(trim(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  fields.push_back(trim(current));
  return fields;
}

inline std::size_t parse_count(const std::string& token,
                               const std::string& line) {
  std::istringstream in(token);
  long long value = 0;
  std::string extra;
  if (!(in >> value) || (in >> extra) || value < 0) {
    throw SemiconjError(Errc::parse_error,
                        "bad number '" + token + "' in goldens line: '" +
                            line + "'",
                        {});
  }
  return static_cast<std::size_t>(value);
}

}  // namespace detail

inline GoldenFixture load_goldens(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw SemiconjError(Errc::parse_error,
                        "cannot open goldens file '" + path + "'", {});
  }
  GoldenFixture fixture;
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (detail::comment_or_blank(line)) continue;
    const std::vector<std::string> fields = detail::split_fields(line);
    if (!saw_header) {
      if (fields.size() != 3 || fields[0] != "order" ||
          fields[1] != "filter" || fields[2] != "count") {
        throw SemiconjError(Errc::parse_error,
                            "goldens must start with 'order, filter, count', "
                            "got: '" +
                                line + "'",
                            {});
      }
      saw_header = true;
      continue;
    }
    if (fields.size() == 3) {
      const std::size_t order = detail::parse_count(fields[0], line);
      const std::size_t count = detail::parse_count(fields[2], line);
      if (fields[1] != "iso" && fields[1] != "labeled") {
        throw SemiconjError(Errc::parse_error,
                            "unknown goldens filter '" + fields[1] + "'", {});
      }
      fixture.counts[{order, fields[1]}] = count;
    } else if (fields.size() == 2) {
      const std::size_t value = detail::parse_count(fields[1], line);
      if (fields[0] == "smallest_nontransitive_order") {
        fixture.smallest_nontransitive_order = value;
      } else if (fields[0] == "count_at_that_order") {
        fixture.count_at_that_order = value;
      } else if (fields[0] == "nontransitive_searched_up_to") {
        fixture.nontransitive_searched_up_to = value;
      } else {
        throw SemiconjError(Errc::parse_error,
                            "unknown goldens key '" + fields[0] + "'", {});
      }
    } else {
      throw SemiconjError(Errc::parse_error,
                          "malformed goldens line: '" + line + "'", {});
    }
  }
  if (!saw_header) {
    throw SemiconjError(Errc::parse_error,
                        "goldens file '" + path + "' holds no header", {});
  }
  return fixture;
}

inline void save_goldens(const std::string& path,
                         const GoldenFixture& fixture) {
  std::ofstream out(path);
  if (!out) {
    throw SemiconjError(Errc::parse_error,
                        "cannot write goldens file '" + path + "'", {});
  }
  out << "# Machine-generated golden counts; regenerate with "
         "'semiconj verify --regen-goldens'.\n";
  out << "order, filter, count\n";
  for (const auto& [key, count] : fixture.counts) {
    out << key.first << ", " << key.second << ", " << count << "\n";
  }
  if (fixture.smallest_nontransitive_order) {
    out << "smallest_nontransitive_order, "
        << *fixture.smallest_nontransitive_order << "\n";
  }
  if (fixture.count_at_that_order) {
    out << "count_at_that_order, " << *fixture.count_at_that_order << "\n";
  }
  if (fixture.nontransitive_searched_up_to) {
    out << "nontransitive_searched_up_to, "
        << *fixture.nontransitive_searched_up_to << "\n";
  }
  if (!out) {
    throw SemiconjError(Errc::parse_error,
                        "failed writing goldens file '" + path + "'", {});
  }
}

}  // namespace semiconj
