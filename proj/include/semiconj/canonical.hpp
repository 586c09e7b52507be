// Canonical forms under relabeling, and isomorphism testing.
//
// The canonical form of a table is the lexicographically least row-major
// flattening over all relabelings by permutations of 0..k-1. Two tables are
// isomorphic exactly when their canonical forms are equal. The full k!
// orbit is scanned; intended for k <= 7.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "semiconj/cayley_table.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

// Renames element i to perm[i]. Relabeling preserves associativity.
inline CayleyTable relabel(const CayleyTable& s,
                           const std::vector<element_id>& perm) {
  const std::size_t k = s.order();
  if (perm.size() != k) {
    throw SemiconjError(Errc::bad_shape,
                        "permutation has " + std::to_string(perm.size()) +
                            " entries, expected " + std::to_string(k));
  }
  std::vector<bool> seen(k, false);
  for (const element_id p : perm) {
    if (p >= k || seen[p]) {
      throw SemiconjError(Errc::bad_shape,
                          "relabeling is not a permutation of 0.." +
                              std::to_string(k - 1));
    }
    seen[p] = true;
  }
  const auto& t = s.entries();
  std::vector<element_id> out(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out[static_cast<std::size_t>(perm[i]) * k + perm[j]] = perm[t[i * k + j]];
    }
  }
  return CayleyTable::unchecked(k, std::move(out));
}

namespace detail {

// Shared orbit scan. With best == nullptr answers "is s already minimal in
// its orbit"; otherwise lowers *best to the orbit minimum.
inline bool scan_orbit(const CayleyTable& s, std::vector<element_id>* best) {
  const std::size_t k = s.order();
  const auto& t = s.entries();
  std::vector<element_id> perm(k);
  std::iota(perm.begin(), perm.end(), element_id{0});
  std::vector<element_id> inv(k);
  const std::vector<element_id>& reference = best ? *best : t;
  do {
    for (std::size_t i = 0; i < k; ++i) inv[perm[i]] = static_cast<element_id>(i);
    int cmp = 0;
    for (std::size_t i = 0; i < k && cmp == 0; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        const element_id v =
            perm[t[static_cast<std::size_t>(inv[i]) * k + inv[j]]];
        const element_id r = reference[i * k + j];
        if (v != r) {
          cmp = v < r ? -1 : 1;
          break;
        }
      }
    }
    if (cmp < 0) {
      if (!best) return false;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          (*best)[i * k + j] =
              perm[t[static_cast<std::size_t>(inv[i]) * k + inv[j]]];
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

}  // namespace detail

// True iff s equals its own canonical form. Cheaper than materializing the
// form: each relabeling is compared lazily with early exit.
inline bool is_canonical(const CayleyTable& s) {
  return detail::scan_orbit(s, nullptr);
}

inline CayleyTable canonical_form(const CayleyTable& s) {
  std::vector<element_id> best = s.entries();
  detail::scan_orbit(s, &best);
  return CayleyTable::unchecked(s.order(), std::move(best));
}

inline bool is_isomorphic(const CayleyTable& s, const CayleyTable& t) {
  if (s.order() != t.order()) return false;
  return canonical_form(s) == canonical_form(t);
}

}  // namespace semiconj
