// Exhaustive generation of semigroups of a given order by backtracking
// over Cayley-table cells with incremental associativity pruning, optional
// isomorphism rejection, filter predicates, whole-space verification that
// the condition xy ∈ {yx, (xy)^n} forces ~p to be transitive, and search
// for the smallest semigroups where ~p fails transitivity.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "semiconj/canonical.hpp"
#include "semiconj/cayley_table.hpp"
#include "semiconj/condition.hpp"
#include "semiconj/conjugacy.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/relation.hpp"

namespace semiconj {

enum class Filter { all, commutative, condition, condition_any };

inline const char* filter_name(Filter f) {
  switch (f) {
    case Filter::all: return "all";
    case Filter::commutative: return "commutative";
    case Filter::condition: return "condition";
    case Filter::condition_any: return "condition_any";
  }
  return "?";
}

struct EnumerationConfig {
  std::size_t order = 1;
  Filter filter = Filter::all;
  int n = 2;      // exponent for Filter::condition
  int n_max = 6;  // bound for Filter::condition_any
  bool dedup = true;
  unsigned jobs = 1;
  std::optional<std::size_t> order_cap;  // overrides the default cap

  // Default caps: the full labeled space is only tractable to order 5;
  // with isomorphism rejection order 6 stays reasonable.
  std::size_t effective_cap() const {
    if (order_cap) return *order_cap;
    return dedup ? 6 : 5;
  }
};

namespace detail {

inline constexpr element_id kUnset = std::numeric_limits<element_id>::max();

// Checks the triple (x, y, z) against (xy)z = x(yz) if every cell the two
// sides read is assigned; an undecidable triple passes vacuously.
inline bool triple_ok(const std::vector<element_id>& t, std::size_t k,
                      std::size_t x, std::size_t y, std::size_t z) {
  const element_id xy = t[x * k + y];
  const element_id yz = t[y * k + z];
  if (xy == kUnset || yz == kUnset) return true;
  const element_id lhs = t[static_cast<std::size_t>(xy) * k + z];
  const element_id rhs = t[x * k + yz];
  if (lhs == kUnset || rhs == kUnset) return true;
  return lhs == rhs;
}

// Every triple whose evaluation reads cell (a, b) falls into one of four
// families; rechecking exactly those after the cell is assigned keeps the
// invariant that all fully-determined triples have been verified.
inline bool associativity_ok_after(const std::vector<element_id>& t,
                                   std::size_t k, std::size_t a,
                                   std::size_t b) {
  for (std::size_t z = 0; z < k; ++z) {
    if (!triple_ok(t, k, a, b, z)) return false;  // (a, b) is the (x, y) pair
  }
  for (std::size_t x = 0; x < k; ++x) {
    if (!triple_ok(t, k, x, a, b)) return false;  // (a, b) is the (y, z) pair
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const element_id v = t[i * k + j];
      if (v == kUnset) continue;
      // (i, j, b): the left side (ij)b reads cell (a, b) when ij = a.
      if (v == a && !triple_ok(t, k, i, j, b)) return false;
      // (a, i, j): the right side a(ij) reads cell (a, b) when ij = b.
      if (v == b && !triple_ok(t, k, a, i, j)) return false;
    }
  }
  return true;
}

// Depth-first search over cells in row-major order starting at `cell`;
// cells before it must already be assigned and checked. Calls the sink for
// every completed associative table, in lexicographic order.
template <typename Sink>
void search_from(std::vector<element_id>& t, std::size_t k, std::size_t cell,
                 Sink&& sink) {
  if (cell == k * k) {
    sink(t);
    return;
  }
  const std::size_t a = cell / k;
  const std::size_t b = cell % k;
  for (element_id c = 0; c < k; ++c) {
    t[cell] = c;
    if (associativity_ok_after(t, k, a, b)) {
      search_from(t, k, cell + 1, sink);
    }
  }
  t[cell] = kUnset;
}

inline bool passes_filter(const CayleyTable& s, const EnumerationConfig& cfg) {
  switch (cfg.filter) {
    case Filter::all:
      return true;
    case Filter::commutative:
      return is_commutative(s);
    case Filter::condition:
      return satisfies_condition(s, cfg.n).holds;
    case Filter::condition_any:
      return smallest_condition_n(s, cfg.n_max).has_value();
  }
  return false;
}

// Runs fn(0), ..., fn(count-1) on `jobs` threads, pulling indices from a
// shared counter. The first exception is captured and rethrown after all
// workers join. fn must only touch per-index state.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&]() {
    try {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);  // drain remaining work
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// Emits every associative order-k table that passes the filter, in the
// lexicographic order of their row-major flattening; with dedup on, only
// tables equal to their own canonical form are emitted, so each
// isomorphism class appears exactly once. The emitted stream is identical
// for every jobs setting: parallel runs split the search on first-row
// prefixes and merge buffered results in prefix order. Returns the number
// of tables emitted.
inline std::size_t enumerate_tables(
    const EnumerationConfig& cfg,
    const std::function<void(const CayleyTable&)>& consumer) {
  const std::size_t k = cfg.order;
  if (k < 1) {
    throw SemiconjError(Errc::bad_shape, "order must be at least 1",
                        {static_cast<long long>(k)});
  }
  if (k > cfg.effective_cap()) {
    throw SemiconjError(Errc::order_cap_exceeded,
                        "order " + std::to_string(k) + " exceeds the cap of " +
                            std::to_string(cfg.effective_cap()),
                        {static_cast<long long>(k),
                         static_cast<long long>(cfg.effective_cap())});
  }
  if (cfg.filter == Filter::condition && cfg.n <= 1) {
    throw SemiconjError(Errc::bad_exponent, "condition filter needs n > 1",
                        {cfg.n});
  }
  if (cfg.filter == Filter::condition_any && cfg.n_max < 2) {
    throw SemiconjError(Errc::bad_exponent,
                        "condition_any filter needs n_max >= 2", {cfg.n_max});
  }

  auto accept = [&](const std::vector<element_id>& flat)
      -> std::optional<CayleyTable> {
    CayleyTable tbl = CayleyTable::unchecked(k, flat);
    if (!detail::passes_filter(tbl, cfg)) return std::nullopt;
    if (cfg.dedup && !is_canonical(tbl)) return std::nullopt;
    return tbl;
  };

  std::size_t count = 0;
  if (cfg.jobs <= 1 || k == 1) {
    std::vector<element_id> t(k * k, detail::kUnset);
    detail::search_from(t, k, 0, [&](const std::vector<element_id>& flat) {
      if (const auto tbl = accept(flat)) {
        consumer(*tbl);
        ++count;
      }
    });
    return count;
  }

  // One work unit per assignment of row 0 (k^k of them). Unit p explores
  // the subtree under the prefix whose digits are p written in base k,
  // most significant digit first, so ascending p matches the sequential
  // search order.
  std::size_t prefix_count = 1;
  for (std::size_t i = 0; i < k; ++i) prefix_count *= k;
  std::vector<std::vector<CayleyTable>> buffers(prefix_count);
  detail::parallel_for(prefix_count, cfg.jobs, [&](std::size_t p) {
    std::vector<element_id> t(k * k, detail::kUnset);
    std::vector<element_id> digits(k);
    std::size_t rem = p;
    for (std::size_t cell = k; cell-- > 0;) {
      digits[cell] = static_cast<element_id>(rem % k);
      rem /= k;
    }
    // Replay the prefix through the same incremental checks the
    // sequential search performs, so infeasible prefixes prune here.
    for (std::size_t cell = 0; cell < k; ++cell) {
      t[cell] = digits[cell];
      if (!detail::associativity_ok_after(t, k, 0, cell)) return;
    }
    detail::search_from(t, k, k, [&](const std::vector<element_id>& flat) {
      if (const auto tbl = accept(flat)) buffers[p].push_back(*tbl);
    });
  });
  for (const auto& buffer : buffers) {
    for (const CayleyTable& tbl : buffer) {
      consumer(tbl);
      ++count;
    }
  }
  return count;
}

// One theorem violation: a semigroup that satisfies the condition at n yet
// either has a non-transitive ~p (composition = false, with a violating
// triple) or produced a composed witness that failed re-verification
// (composition = true, with the chain endpoints).
struct TheoremViolation {
  CayleyTable table;
  int n = 0;
  element_id a = 0;
  element_id b = 0;
  element_id c = 0;
  bool composition = false;

  friend bool operator==(const TheoremViolation&,
                         const TheoremViolation&) = default;
};

struct VerificationReport {
  std::vector<std::size_t> orders_checked;
  std::vector<std::size_t> semigroups_per_order;  // aligned with orders_checked
  // condition_satisfiers[order index][n - 2] counts semigroups of that
  // order satisfying the condition at that n.
  std::vector<std::vector<std::size_t>> condition_satisfiers;
  std::size_t transitivity_failures = 0;
  std::size_t witness_compositions_checked = 0;
  std::size_t witness_compositions_failed = 0;
  std::vector<TheoremViolation> violations;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

namespace detail {

struct TableVerdict {
  std::vector<int> holds_ns;
  bool transitive = true;
  std::size_t compositions = 0;
  std::vector<TheoremViolation> violations;
};

// Checks one semigroup: which n it satisfies the condition for, whether
// ~p is transitive, and whether every witness chain a ~p b ~p c composes
// into a verified witness for a ~p c.
inline TableVerdict verify_one(const CayleyTable& s, int n_max) {
  TableVerdict verdict;
  for (int n = 2; n <= n_max; ++n) {
    if (satisfies_condition(s, n).holds) verdict.holds_ns.push_back(n);
  }
  if (verdict.holds_ns.empty()) return verdict;

  const Relation rel = p_relation(s);
  verdict.transitive = (rel == rel.closure());
  if (!verdict.transitive) {
    const auto triple = *find_violating_triple(rel);
    for (const int n : verdict.holds_ns) {
      verdict.violations.push_back(
          {s, n, triple[0], triple[1], triple[2], false});
    }
  }

  const element_id k = static_cast<element_id>(s.order());
  std::vector<std::optional<Witness>> witness(static_cast<std::size_t>(k) * k);
  for (element_id a = 0; a < k; ++a) {
    for (element_id b = 0; b < k; ++b) {
      witness[static_cast<std::size_t>(a) * k + b] = p_related(s, a, b);
    }
  }
  const MonoidView m = adjoin_identity(s);
  for (const int n : verdict.holds_ns) {
    for (element_id a = 0; a < k; ++a) {
      for (element_id b = 0; b < k; ++b) {
        const auto& w_ab = witness[static_cast<std::size_t>(a) * k + b];
        if (!w_ab) continue;
        for (element_id c = 0; c < k; ++c) {
          const auto& w_bc = witness[static_cast<std::size_t>(b) * k + c];
          if (!w_bc) continue;
          ++verdict.compositions;
          try {
            const Witness w = compose_witnesses(s, n, *w_ab, *w_bc);
            if (m.product(w.u, w.v) != a || m.product(w.v, w.u) != c) {
              verdict.violations.push_back({s, n, a, b, c, true});
            }
          } catch (const SemiconjError& err) {
            if (err.code() != Errc::composition_failed) throw;
            verdict.violations.push_back({s, n, a, b, c, true});
          }
        }
      }
    }
  }
  return verdict;
}

inline void check_search_bounds(std::size_t max_order, std::size_t cap) {
  if (max_order < 1) {
    throw SemiconjError(Errc::bad_shape, "max_order must be at least 1",
                        {static_cast<long long>(max_order)});
  }
  if (max_order > cap) {
    throw SemiconjError(Errc::order_cap_exceeded,
                        "max_order " + std::to_string(max_order) +
                            " exceeds the cap of " + std::to_string(cap),
                        {static_cast<long long>(max_order),
                         static_cast<long long>(cap)});
  }
}

inline std::vector<CayleyTable> all_tables_of_order(std::size_t order,
                                                    unsigned jobs) {
  EnumerationConfig cfg;
  cfg.order = order;
  cfg.dedup = true;
  cfg.jobs = jobs;
  std::vector<CayleyTable> tables;
  enumerate_tables(cfg, [&](const CayleyTable& t) { tables.push_back(t); });
  return tables;
}

}  // namespace detail

// Machine-checks the theorem over every semigroup of order <= max_order
// (one per isomorphism class) and every n in 2..n_max: among condition
// satisfiers there must be no transitivity failure and no composition
// failure. Violations are returned in the report, never thrown. The
// report is independent of jobs.
inline VerificationReport verify_theorem(std::size_t max_order, int n_max,
                                         unsigned jobs = 1) {
  if (n_max < 2) {
    throw SemiconjError(Errc::bad_exponent, "n_max must be at least 2",
                        {n_max});
  }
  detail::check_search_bounds(max_order, EnumerationConfig{}.effective_cap());
  VerificationReport report;
  for (std::size_t order = 1; order <= max_order; ++order) {
    const std::vector<CayleyTable> tables =
        detail::all_tables_of_order(order, jobs);
    report.orders_checked.push_back(order);
    report.semigroups_per_order.push_back(tables.size());
    report.condition_satisfiers.emplace_back(
        static_cast<std::size_t>(n_max - 1), 0);
    std::vector<detail::TableVerdict> verdicts(tables.size());
    detail::parallel_for(tables.size(), jobs, [&](std::size_t i) {
      verdicts[i] = detail::verify_one(tables[i], n_max);
    });
    auto& satisfiers = report.condition_satisfiers.back();
    for (const auto& verdict : verdicts) {
      for (const int n : verdict.holds_ns) {
        ++satisfiers[static_cast<std::size_t>(n - 2)];
      }
      report.witness_compositions_checked += verdict.compositions;
      for (const auto& violation : verdict.violations) {
        if (violation.composition) {
          ++report.witness_compositions_failed;
        } else {
          ++report.transitivity_failures;
        }
        report.violations.push_back(violation);
      }
    }
  }
  return report;
}

struct NontransitiveItem {
  CayleyTable table;
  element_id a = 0;
  element_id b = 0;
  element_id c = 0;

  friend bool operator==(const NontransitiveItem&,
                         const NontransitiveItem&) = default;
};

struct NontransitiveResult {
  std::vector<std::size_t> orders_scanned;
  std::optional<std::size_t> smallest_order;
  std::vector<NontransitiveItem> items;  // everything at smallest_order

  friend bool operator==(const NontransitiveResult&,
                         const NontransitiveResult&) = default;
};

// Scans orders 1, 2, ... up to max_order (one table per isomorphism
// class) for semigroups where ~p is not transitive; stops at the first
// order with failures and returns all of them, each with its first
// violating triple, re-verified through the witness search before return.
inline NontransitiveResult find_nontransitive(std::size_t max_order,
                                              unsigned jobs = 1) {
  detail::check_search_bounds(max_order, EnumerationConfig{}.effective_cap());
  NontransitiveResult result;
  for (std::size_t order = 1; order <= max_order; ++order) {
    const std::vector<CayleyTable> tables =
        detail::all_tables_of_order(order, jobs);
    result.orders_scanned.push_back(order);
    std::vector<std::optional<std::array<element_id, 3>>> triples(
        tables.size());
    detail::parallel_for(tables.size(), jobs, [&](std::size_t i) {
      triples[i] = find_violating_triple(p_relation(tables[i]));
    });
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (!triples[i]) continue;
      const auto [a, b, c] = *triples[i];
      if (!p_related(tables[i], a, b) || !p_related(tables[i], b, c) ||
          p_related(tables[i], a, c)) {
        throw SemiconjError(Errc::composition_failed,
                            "violating triple failed re-verification",
                            {a, b, c});
      }
      result.items.push_back({tables[i], a, b, c});
    }
    if (!result.items.empty()) {
      result.smallest_order = order;
      break;
    }
  }
  return result;
}

}  // namespace semiconj
