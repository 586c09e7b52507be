// S^1: a semigroup viewed as a monoid.
//
// If the base table already has a two-sided identity the view is the table
// itself; otherwise one identity element with id k is adjoined and its
// products are computed on the fly, never stored. The view borrows the base
// table, which must outlive it.

#pragma once

#include <cstddef>
#include <string>

#include "semiconj/cayley_table.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

class MonoidView {
 public:
  explicit MonoidView(const CayleyTable& base) : base_(&base) {
    const auto e = find_identity(base);
    adjoined_ = !e.has_value();
    identity_ = e.value_or(static_cast<element_id>(base.order()));
  }

  std::size_t order() const noexcept {
    return base_->order() + (adjoined_ ? 1 : 0);
  }

  element_id identity() const noexcept { return identity_; }

  bool adjoined() const noexcept { return adjoined_; }

  const CayleyTable& base() const noexcept { return *base_; }

  element_id product(element_id a, element_id b) const {
    const std::size_t n = order();
    if (a >= n || b >= n) {
      throw SemiconjError(Errc::bad_element,
                          "element id outside S^1 of order " +
                              std::to_string(n),
                          {static_cast<long long>(a >= n ? a : b)});
    }
    if (adjoined_) {
      if (a == identity_) return b;
      if (b == identity_) return a;
    }
    return base_->product(a, b);
  }

 private:
  const CayleyTable* base_;
  element_id identity_;
  bool adjoined_;
};

// S^1 per the standard convention: S itself when S is a monoid, S with one
// adjoined identity otherwise.
inline MonoidView adjoin_identity(const CayleyTable& s) {
  return MonoidView(s);
}

}  // namespace semiconj
