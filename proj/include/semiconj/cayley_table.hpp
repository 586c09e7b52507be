// Finite semigroups as validated k x k multiplication tables.
//
// Elements are positional ids 0..k-1: the entry at row i, column j is the
// product i*j. Validation checks closure and all k^3 associativity triples
// by brute force; everything downstream may then assume both invariants.

#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiconj/errors.hpp"

namespace semiconj {

// Positional element id. A MonoidView over a table of order k may add id k
// for the adjoined identity.
using element_id = std::uint32_t;

// Anything with an order and a binary product on ids 0..order()-1.
template <typename S>
concept Multiplicative = requires(const S& s, element_id a, element_id b) {
  { s.order() } -> std::convertible_to<std::size_t>;
  { s.product(a, b) } -> std::same_as<element_id>;
};

// A Multiplicative carrier that also knows its two-sided identity.
template <typename S>
concept UnitalMultiplicative = Multiplicative<S> && requires(const S& s) {
  { s.identity() } -> std::same_as<element_id>;
};

class CayleyTable {
 public:
  CayleyTable() = default;

  std::size_t order() const noexcept { return order_; }

  element_id product(element_id a, element_id b) const {
    if (a >= order_ || b >= order_) {
      throw SemiconjError(Errc::bad_element,
                          "element id outside table of order " +
                              std::to_string(order_),
                          {static_cast<long long>(a >= order_ ? a : b)});
    }
    return entries_[static_cast<std::size_t>(a) * order_ + b];
  }

  // Row-major flattening; the sequence compared by canonical forms.
  const std::vector<element_id>& entries() const noexcept { return entries_; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend auto operator<=>(const CayleyTable&, const CayleyTable&) = default;

  // Trusted constructor for tables whose invariants hold by construction
  // (relabelings, enumeration output). Entries are row-major.
  static CayleyTable unchecked(std::size_t order,
                               std::vector<element_id> entries) {
    CayleyTable t;
    t.order_ = order;
    t.entries_ = std::move(entries);
    return t;
  }

 private:
  std::size_t order_ = 0;
  std::vector<element_id> entries_;
};

// Builds a CayleyTable from a raw grid, checking shape, closure and
// associativity. Reports the first out-of-range entry or the first
// violating triple in row-major (i, j, l) scan order.
inline CayleyTable validate_table(std::size_t order,
                                  const std::vector<std::vector<long long>>& raw) {
  if (order < 1) {
    throw SemiconjError(Errc::bad_shape, "order must be at least 1",
                        {static_cast<long long>(order)});
  }
  if (raw.size() != order) {
    throw SemiconjError(Errc::bad_shape,
                        "grid has " + std::to_string(raw.size()) +
                            " rows, expected " + std::to_string(order));
  }
  std::vector<element_id> entries(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    if (raw[i].size() != order) {
      throw SemiconjError(Errc::bad_shape,
                          "row " + std::to_string(i) + " has " +
                              std::to_string(raw[i].size()) +
                              " entries, expected " + std::to_string(order));
    }
    for (std::size_t j = 0; j < order; ++j) {
      const long long v = raw[i][j];
      if (v < 0 || v >= static_cast<long long>(order)) {
        throw SemiconjError(Errc::out_of_range,
                            "entry " + std::to_string(v) + " at row " +
                                std::to_string(i) + ", col " +
                                std::to_string(j) + " is outside 0.." +
                                std::to_string(order - 1),
                            {v, static_cast<long long>(i),
                             static_cast<long long>(j)});
      }
      entries[i * order + j] = static_cast<element_id>(v);
    }
  }
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      const std::size_t ij = entries[i * order + j];
      for (std::size_t l = 0; l < order; ++l) {
        const std::size_t jl = entries[j * order + l];
        if (entries[ij * order + l] != entries[i * order + jl]) {
          throw SemiconjError(
              Errc::not_associative,
              "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" +
                  std::to_string(l) + " != " + std::to_string(i) + "*(" +
                  std::to_string(j) + "*" + std::to_string(l) + ")",
              {static_cast<long long>(i), static_cast<long long>(j),
               static_cast<long long>(l)});
        }
      }
    }
  }
  return CayleyTable::unchecked(order, std::move(entries));
}

// The (necessarily unique) two-sided identity, if the table has one.
inline std::optional<element_id> find_identity(const CayleyTable& s) {
  const std::size_t k = s.order();
  for (element_id e = 0; e < k; ++e) {
    bool ok = true;
    for (element_id x = 0; x < k && ok; ++x) {
      ok = s.product(e, x) == x && s.product(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

inline bool is_commutative(const CayleyTable& s) {
  const std::size_t k = s.order();
  for (element_id i = 0; i < k; ++i) {
    for (element_id j = i + 1; j < k; ++j) {
      if (s.product(i, j) != s.product(j, i)) return false;
    }
  }
  return true;
}

// Left-associated iterated product a^m. In a bare semigroup m must be
// positive; a carrier with an identity also accepts m = 0 (empty product).
template <Multiplicative S>
element_id power(const S& s, element_id a, long long m) {
  if (a >= s.order()) {
    throw SemiconjError(Errc::bad_element,
                        "element id " + std::to_string(a) +
                            " outside carrier of order " +
                            std::to_string(s.order()),
                        {a});
  }
  if (m < 0) {
    throw SemiconjError(Errc::bad_exponent, "negative exponent", {m});
  }
  if (m == 0) {
    if constexpr (UnitalMultiplicative<S>) {
      return s.identity();
    } else {
      throw SemiconjError(Errc::zero_power_in_semigroup,
                          "a^0 requires an identity element");
    }
  }
  element_id acc = a;
  for (long long i = 1; i < m; ++i) acc = s.product(acc, a);
  return acc;
}

}  // namespace semiconj
