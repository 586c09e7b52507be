// Primary conjugacy: a ~p b iff a = uv and b = vu for some u, v in S^1.
// Provides witness search, the ~p relation and its closure, class
// partitioning, the witness composer behind transitivity, and group
// conjugacy as a cross-check oracle.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiconj/cayley_table.hpp"
#include "semiconj/condition.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/monoid_view.hpp"
#include "semiconj/relation.hpp"

namespace semiconj {

// Certifies a ~p b through u·v = a and v·u = b. The ids live in S^1, so
// either may name the adjoined identity.
struct Witness {
  element_id u = 0;
  element_id v = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

// First witness for a ~p b in row-major (u, v) order over S^1, absent if
// none exists. The scan order makes the result reproducible.
inline std::optional<Witness> p_related(const CayleyTable& s, element_id a,
                                        element_id b) {
  const std::size_t k = s.order();
  for (const element_id e : {a, b}) {
    if (e >= k) {
      throw SemiconjError(Errc::bad_element,
                          "element id " + std::to_string(e) +
                              " outside semigroup of order " +
                              std::to_string(k),
                          {e});
    }
  }
  const MonoidView m = adjoin_identity(s);
  const element_id n1 = static_cast<element_id>(m.order());
  for (element_id u = 0; u < n1; ++u) {
    for (element_id v = 0; v < n1; ++v) {
      if (m.product(u, v) == a && m.product(v, u) == b) return Witness{u, v};
    }
  }
  return std::nullopt;
}

// The ~p relation on S: relates uv to vu for every u, v in S^1 whose two
// products both land in S. Reflexive (take v = 1) and symmetric by the
// symmetry of the defining pair; not closed in general.
inline Relation p_relation(const CayleyTable& s) {
  const std::size_t k = s.order();
  Relation r(k);
  const MonoidView m = adjoin_identity(s);
  const element_id n1 = static_cast<element_id>(m.order());
  for (element_id u = 0; u < n1; ++u) {
    for (element_id v = 0; v < n1; ++v) {
      const element_id uv = m.product(u, v);
      const element_id vu = m.product(v, u);
      if (uv < k && vu < k) r.add(uv, vu);
    }
  }
  return r;
}

inline bool is_p_transitive(const CayleyTable& s) {
  const Relation r = p_relation(s);
  return r == r.closure();
}

// Classes of the transitive closure ~p*.
inline Partition conjugacy_classes(const CayleyTable& s) {
  return partition_from(p_relation(s).closure());
}

// Composes witnesses along a chain a ~p b ~p c into a witness for a ~p c,
// assuming xy ∈ {yx, (xy)^n} holds in S. The endpoints are read off the
// inputs: a = u₁v₁, b = v₁u₁ = u₂v₂, c = v₂u₂. Degenerate chains pass a
// witness through unchanged; otherwise x = u₁u₂ and y = v₂·b^(n-2)·v₁,
// where b^0 is the identity of S^1 (which subsumes the n = 2 case). The
// result is re-verified by multiplication before being returned.
inline Witness compose_witnesses(const CayleyTable& s, int n,
                                 const Witness& w_ab, const Witness& w_bc) {
  const ConditionReport rep = satisfies_condition(s, n);
  if (!rep.holds) {
    const auto [fx, fy] = *rep.first_failure;
    throw SemiconjError(
        Errc::condition_violated,
        "pair (" + std::to_string(fx) + ", " + std::to_string(fy) +
            ") satisfies neither branch for n = " + std::to_string(n),
        {fx, fy, n});
  }

  const MonoidView m = adjoin_identity(s);
  const std::size_t k = s.order();
  for (const element_id e : {w_ab.u, w_ab.v, w_bc.u, w_bc.v}) {
    if (e >= m.order()) {
      throw SemiconjError(Errc::bad_witness,
                          "witness id " + std::to_string(e) +
                              " outside S^1 of order " +
                              std::to_string(m.order()),
                          {e});
    }
  }

  const element_id a = m.product(w_ab.u, w_ab.v);
  const element_id b = m.product(w_ab.v, w_ab.u);
  const element_id b_again = m.product(w_bc.u, w_bc.v);
  const element_id c = m.product(w_bc.v, w_bc.u);
  if (b != b_again) {
    throw SemiconjError(Errc::bad_witness,
                        "chain middle disagrees: v1*u1 = " + std::to_string(b) +
                            " but u2*v2 = " + std::to_string(b_again),
                        {b, b_again});
  }
  for (const element_id e : {a, b, c}) {
    if (e >= k) {
      throw SemiconjError(Errc::bad_witness,
                          "witness products must land in S, got the adjoined "
                          "identity",
                          {e});
    }
  }

  if (a == b) return w_bc;
  if (b == c) return w_ab;

  const element_id x = m.product(w_ab.u, w_bc.u);
  const element_id b_pow = power(m, b, n - 2);
  const element_id y = m.product(w_bc.v, m.product(b_pow, w_ab.v));
  if (m.product(x, y) != a || m.product(y, x) != c) {
    throw SemiconjError(Errc::composition_failed,
                        "composed witness (" + std::to_string(x) + ", " +
                            std::to_string(y) + ") fails re-verification",
                        {x, y, a, c});
  }
  return Witness{x, y};
}

// Group conjugacy: relates a to b iff a = g⁻¹bg for some g. Checks that S
// really is a group first. On groups this coincides with ~p.
inline Relation group_conjugacy(const CayleyTable& s) {
  const std::size_t k = s.order();
  const std::optional<element_id> e = find_identity(s);
  if (!e) {
    throw SemiconjError(Errc::not_a_group, "no identity element", {});
  }
  std::vector<element_id> inv(k);
  for (element_id x = 0; x < k; ++x) {
    bool found = false;
    for (element_id g = 0; g < k && !found; ++g) {
      if (s.product(x, g) == *e && s.product(g, x) == *e) {
        inv[x] = g;
        found = true;
      }
    }
    if (!found) {
      throw SemiconjError(Errc::not_a_group,
                          "element " + std::to_string(x) +
                              " has no two-sided inverse",
                          {x});
    }
  }
  Relation r(k);
  for (element_id b = 0; b < k; ++b) {
    for (element_id g = 0; g < k; ++g) {
      r.add(s.product(s.product(inv[g], b), g), b);
    }
  }
  return r;
}

}  // namespace semiconj
