// Reflexive symmetric boolean relations on element ids, their transitive
// closure, and the partition induced by a closed relation.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiconj/cayley_table.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

// A reflexive symmetric relation on 0..order-1. Reflexivity is established
// at construction and add() keeps the grid symmetric, so both invariants
// hold for every reachable value. The closed flag records whether the
// relation is known to be transitively closed; it is metadata and does not
// take part in equality.
class Relation {
 public:
  explicit Relation(std::size_t order)
      : order_(order), bits_(order * order, 0) {
    for (std::size_t i = 0; i < order; ++i) bits_[i * order + i] = 1;
  }

  std::size_t order() const noexcept { return order_; }

  bool contains(element_id i, element_id j) const {
    check(i);
    check(j);
    return bits_[static_cast<std::size_t>(i) * order_ + j] != 0;
  }

  // Records i ~ j; the symmetric pair is set as well.
  void add(element_id i, element_id j) {
    check(i);
    check(j);
    bits_[static_cast<std::size_t>(i) * order_ + j] = 1;
    bits_[static_cast<std::size_t>(j) * order_ + i] = 1;
    closed_ = false;
  }

  bool closed() const noexcept { return closed_; }

  // Least transitive relation containing this one (Warshall over the
  // boolean grid). Idempotent; the result carries the closed flag.
  Relation closure() const {
    Relation out = *this;
    const std::size_t k = order_;
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t i = 0; i < k; ++i) {
        if (!out.bits_[i * k + m]) continue;
        for (std::size_t j = 0; j < k; ++j) {
          out.bits_[i * k + j] =
              static_cast<std::uint8_t>(out.bits_[i * k + j] |
                                        out.bits_[m * k + j]);
        }
      }
    }
    out.closed_ = true;
    return out;
  }

  std::size_t pair_count() const {
    std::size_t n = 0;
    for (const auto b : bits_) n += b != 0;
    return n;
  }

  // Bitwise equality; the closed flag is deliberately excluded.
  friend bool operator==(const Relation& a, const Relation& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  void check(element_id i) const {
    if (i >= order_) {
      throw SemiconjError(Errc::bad_element,
                          "element id " + std::to_string(i) +
                              " outside relation of order " +
                              std::to_string(order_),
                          {i});
    }
  }

  std::size_t order_ = 0;
  std::vector<std::uint8_t> bits_;
  bool closed_ = false;
};

inline Relation transitive_closure(const Relation& r) { return r.closure(); }

// First (a, b, c) in row-major order with a ~ b and b ~ c but not a ~ c,
// absent when r is transitive.
inline std::optional<std::array<element_id, 3>> find_violating_triple(
    const Relation& r) {
  const element_id k = static_cast<element_id>(r.order());
  for (element_id a = 0; a < k; ++a) {
    for (element_id b = 0; b < k; ++b) {
      if (!r.contains(a, b)) continue;
      for (element_id c = 0; c < k; ++c) {
        if (r.contains(b, c) && !r.contains(a, c)) {
          return std::array<element_id, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

// Equivalence classes of a closed relation, keyed by least member.
struct Partition {
  std::size_t order = 0;
  std::vector<element_id> class_of;  // least member of each element's class

  std::vector<std::vector<element_id>> classes() const {
    std::vector<std::vector<element_id>> out;
    for (element_id rep = 0; rep < order; ++rep) {
      if (class_of[rep] != rep) continue;
      std::vector<element_id> members;
      for (element_id i = rep; i < order; ++i) {
        if (class_of[i] == rep) members.push_back(i);
      }
      out.push_back(std::move(members));
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

// Partition induced by r; closes r first if it is not yet known closed.
inline Partition partition_from(const Relation& r) {
  const Relation closed = r.closed() ? r : r.closure();
  Partition p;
  p.order = closed.order();
  p.class_of.resize(p.order);
  for (element_id i = 0; i < p.order; ++i) {
    for (element_id j = 0; j <= i; ++j) {
      if (closed.contains(i, j)) {
        p.class_of[i] = j;
        break;
      }
    }
  }
  return p;
}

}  // namespace semiconj
