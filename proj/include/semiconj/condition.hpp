// Evaluation of the identity xy in {yx, (xy)^n} over all ordered pairs.
//
// Each pair is classified by which equality holds: COMMUTE (xy = yx),
// POWER (xy = (xy)^n), BOTH, or NEITHER. The identity holds on the table
// exactly when no pair is NEITHER.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiconj/cayley_table.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

enum class Branch : unsigned char { commute, power, both, neither };

inline const char* branch_name(Branch b) {
  switch (b) {
    case Branch::commute:
      return "COMMUTE";
    case Branch::power:
      return "POWER";
    case Branch::both:
      return "BOTH";
    case Branch::neither:
      return "NEITHER";
  }
  return "UNKNOWN";
}

struct ConditionReport {
  long long n = 0;
  bool holds = false;
  std::size_t order = 0;
  std::vector<Branch> branches;  // row-major by ordered pair (x, y)
  std::optional<std::pair<element_id, element_id>> first_failure;

  Branch branch(element_id x, element_id y) const {
    return branches[static_cast<std::size_t>(x) * order + y];
  }

  std::size_t count(Branch b) const {
    return static_cast<std::size_t>(
        std::count(branches.begin(), branches.end(), b));
  }
};

// Evaluates both branch equalities for every ordered pair; n must exceed 1.
inline ConditionReport satisfies_condition(const CayleyTable& s, long long n) {
  if (n <= 1) {
    throw SemiconjError(Errc::bad_exponent,
                        "condition exponent must exceed 1, got " +
                            std::to_string(n),
                        {n});
  }
  const std::size_t k = s.order();
  ConditionReport report;
  report.n = n;
  report.order = k;
  report.holds = true;
  report.branches.resize(k * k);
  for (element_id x = 0; x < k; ++x) {
    for (element_id y = 0; y < k; ++y) {
      const element_id xy = s.product(x, y);
      const bool commutes = xy == s.product(y, x);
      const bool powers = xy == power(s, xy, n);
      Branch b = Branch::neither;
      if (commutes && powers) {
        b = Branch::both;
      } else if (commutes) {
        b = Branch::commute;
      } else if (powers) {
        b = Branch::power;
      } else if (!report.first_failure) {
        report.holds = false;
        report.first_failure = {x, y};
      }
      report.branches[static_cast<std::size_t>(x) * k + y] = b;
    }
  }
  return report;
}

// Smallest n in 2..n_max for which the condition holds. No monotonicity in
// n is assumed; every candidate is checked independently.
inline std::optional<long long> smallest_condition_n(const CayleyTable& s,
                                                     long long n_max) {
  if (n_max < 2) {
    throw SemiconjError(Errc::bad_exponent,
                        "n_max must be at least 2, got " +
                            std::to_string(n_max),
                        {n_max});
  }
  for (long long n = 2; n <= n_max; ++n) {
    if (satisfies_condition(s, n).holds) return n;
  }
  return std::nullopt;
}

}  // namespace semiconj
