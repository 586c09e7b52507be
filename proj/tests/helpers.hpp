// Builders for the standard small semigroups the tests exercise, shared
// by the unit suite and the acceptance runner.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semiconj/semiconj.hpp"

namespace helpers {

using semiconj::CayleyTable;
using semiconj::element_id;

inline CayleyTable from_rows(const std::vector<std::vector<long long>>& rows) {
  return semiconj::validate_table(rows.size(), rows);
}

inline CayleyTable left_zero(std::size_t k) {
  std::vector<std::vector<long long>> rows(k, std::vector<long long>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = static_cast<long long>(i);
  }
  return semiconj::validate_table(k, rows);
}

inline CayleyTable right_zero(std::size_t k) {
  std::vector<std::vector<long long>> rows(k, std::vector<long long>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) rows[i][j] = static_cast<long long>(j);
  }
  return semiconj::validate_table(k, rows);
}

inline CayleyTable null_semigroup(std::size_t k) {
  const std::vector<std::vector<long long>> rows(
      k, std::vector<long long>(k, 0));
  return semiconj::validate_table(k, rows);
}

inline CayleyTable cyclic_group(std::size_t m) {
  std::vector<std::vector<long long>> rows(m, std::vector<long long>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      rows[i][j] = static_cast<long long>((i + j) % m);
    }
  }
  return semiconj::validate_table(m, rows);
}

inline CayleyTable klein_four() {
  std::vector<std::vector<long long>> rows(4, std::vector<long long>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      rows[i][j] = static_cast<long long>(i ^ j);
    }
  }
  return semiconj::validate_table(4, rows);
}

// Permutations of {0, 1, 2} in lexicographic order, composed so that the
// right factor acts first: (p * q)(t) = p(q(t)).
inline CayleyTable symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const auto index_of = [&](const std::array<int, 3>& q) -> long long {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (perms[i] == q) return static_cast<long long>(i);
    }
    throw std::logic_error("permutation missing from the index");
  };
  std::vector<std::vector<long long>> rows(6, std::vector<long long>(6));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<int, 3> composed{};
      for (int t = 0; t < 3; ++t) {
        composed[static_cast<std::size_t>(t)] =
            perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(t)])];
      }
      rows[i][j] = index_of(composed);
    }
  }
  return semiconj::validate_table(6, rows);
}

inline std::vector<std::pair<std::string, CayleyTable>> small_groups() {
  return {
      {"C2", cyclic_group(2)}, {"C3", cyclic_group(3)},
      {"C4", cyclic_group(4)}, {"V4", klein_four()},
      {"C5", cyclic_group(5)}, {"C6", cyclic_group(6)},
      {"S3", symmetric_group_3()},
  };
}

inline std::string data_path(const std::string& relative) {
  return std::string(SEMICONJ_DATA_DIR) + "/" + relative;
}

// Runs fn expecting a SemiconjError; anything else fails the caller.
template <typename Fn>
semiconj::SemiconjError capture_error(Fn&& fn) {
  try {
    fn();
  } catch (const semiconj::SemiconjError& e) {
    return e;
  }
  throw std::logic_error("expected a SemiconjError, none was thrown");
}

}  // namespace helpers
