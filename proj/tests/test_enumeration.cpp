#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "semiconj/semiconj.hpp"

using semiconj::CayleyTable;
using semiconj::EnumerationConfig;
using semiconj::Errc;
using semiconj::Filter;
using semiconj::NontransitiveResult;
using semiconj::VerificationReport;
using semiconj::canonical_form;
using semiconj::element_id;
using semiconj::enumerate_tables;
using semiconj::find_nontransitive;
using semiconj::is_canonical;
using semiconj::is_commutative;
using semiconj::is_p_transitive;
using semiconj::p_related;
using semiconj::satisfies_condition;
using semiconj::smallest_condition_n;
using semiconj::validate_table;
using semiconj::verify_theorem;

namespace {

std::vector<CayleyTable> collect(EnumerationConfig cfg) {
  std::vector<CayleyTable> out;
  enumerate_tables(cfg, [&](const CayleyTable& s) { out.push_back(s); });
  return out;
}

std::size_t count_only(EnumerationConfig cfg) {
  return enumerate_tables(cfg, [](const CayleyTable&) {});
}

// Every k x k grid over 0..k-1, checked directly against validate_table.
// Tractable for k <= 3.
std::vector<CayleyTable> brute_force_tables(std::size_t k) {
  std::vector<CayleyTable> out;
  std::size_t total = 1;
  for (std::size_t c = 0; c < k * k; ++c) total *= k;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<long long>> rows(k, std::vector<long long>(k));
    std::size_t rem = code;
    for (std::size_t c = k * k; c-- > 0;) {
      rows[c / k][c % k] = static_cast<long long>(rem % k);
      rem /= k;
    }
    try {
      out.push_back(validate_table(k, rows));
    } catch (const semiconj::SemiconjError&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration counts match the published table", "[enumeration]") {
  CHECK(count_only({.order = 1, .dedup = true}) == 1);
  CHECK(count_only({.order = 1, .dedup = false}) == 1);
  CHECK(count_only({.order = 2, .dedup = true}) == 5);
  CHECK(count_only({.order = 2, .dedup = false}) == 8);
  CHECK(count_only({.order = 3, .dedup = true}) == 24);
  CHECK(count_only({.order = 3, .dedup = false}) == 113);
  CHECK(count_only({.order = 4, .dedup = true}) == 188);
}

TEST_CASE("enumeration matches brute force over all grids", "[enumeration]") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::vector<CayleyTable> brute = brute_force_tables(k);
    const std::vector<CayleyTable> searched =
        collect({.order = k, .dedup = false});
    CHECK(searched == brute);
  }
}

TEST_CASE("the emitted stream is sorted and valid", "[enumeration]") {
  for (std::size_t k = 2; k <= 3; ++k) {
    const std::vector<CayleyTable> tables = collect({.order = k, .dedup = false});
    for (std::size_t i = 0; i + 1 < tables.size(); ++i) {
      CHECK(tables[i].entries() < tables[i + 1].entries());
    }
    for (const CayleyTable& s : tables) {
      std::vector<std::vector<long long>> rows(k, std::vector<long long>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          rows[i][j] = static_cast<long long>(s.entries()[i * k + j]);
        }
      }
      CHECK(validate_table(k, rows) == s);
    }
  }
}

TEST_CASE("dedup keeps one representative per isomorphism class",
          "[enumeration]") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::vector<CayleyTable> all = collect({.order = k, .dedup = false});
    const std::vector<CayleyTable> reps = collect({.order = k, .dedup = true});

    for (const CayleyTable& s : reps) CHECK(is_canonical(s));

    std::set<std::vector<element_id>> canon_of_all;
    for (const CayleyTable& s : all) {
      canon_of_all.insert(canonical_form(s).entries());
    }
    std::set<std::vector<element_id>> rep_entries;
    for (const CayleyTable& s : reps) rep_entries.insert(s.entries());
    CHECK(rep_entries.size() == reps.size());
    CHECK(rep_entries == canon_of_all);
  }
}

TEST_CASE("filters agree with per-table evaluation", "[enumeration]") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::vector<CayleyTable> all = collect({.order = k, .dedup = false});

    std::vector<CayleyTable> expected_commutative;
    std::vector<CayleyTable> expected_condition;
    std::vector<CayleyTable> expected_any;
    for (const CayleyTable& s : all) {
      if (is_commutative(s)) expected_commutative.push_back(s);
      if (satisfies_condition(s, 2).holds) expected_condition.push_back(s);
      if (smallest_condition_n(s, 6)) expected_any.push_back(s);
    }

    CHECK(collect({.order = k, .filter = Filter::commutative,
                   .dedup = false}) == expected_commutative);
    CHECK(collect({.order = k, .filter = Filter::condition, .n = 2,
                   .dedup = false}) == expected_condition);
    CHECK(collect({.order = k, .filter = Filter::condition_any, .n_max = 6,
                   .dedup = false}) == expected_any);
  }
}

TEST_CASE("parallel enumeration emits the sequential stream",
          "[enumeration]") {
  const EnumerationConfig labeled3{.order = 3, .dedup = false};
  EnumerationConfig labeled3_par = labeled3;
  labeled3_par.jobs = 4;
  CHECK(collect(labeled3) == collect(labeled3_par));

  const EnumerationConfig classes4{.order = 4, .dedup = true};
  EnumerationConfig classes4_par = classes4;
  classes4_par.jobs = 4;
  CHECK(collect(classes4) == collect(classes4_par));
}

TEST_CASE("enumeration rejects orders beyond the cap", "[enumeration]") {
  const auto labeled = helpers::capture_error(
      [] { count_only({.order = 6, .dedup = false}); });
  CHECK(labeled.code() == Errc::order_cap_exceeded);
  CHECK(labeled.details() == std::vector<long long>{6, 5});

  CHECK(helpers::capture_error(
            [] { count_only({.order = 7, .dedup = true}); })
            .code() == Errc::order_cap_exceeded);

  // A configured cap overrides the default in both directions.
  CHECK(helpers::capture_error(
            [] { count_only({.order = 4, .dedup = true, .order_cap = 3}); })
            .code() == Errc::order_cap_exceeded);
  CHECK(count_only({.order = 2, .dedup = false, .order_cap = 2}) == 8);

  CHECK(helpers::capture_error([] { count_only({.order = 0}); }).code() ==
        Errc::bad_shape);
}

TEST_CASE("filter exponents are validated up front", "[enumeration]") {
  CHECK(helpers::capture_error([] {
          count_only({.order = 2, .filter = Filter::condition, .n = 1});
        }).code() == Errc::bad_exponent);
  CHECK(helpers::capture_error([] {
          count_only(
              {.order = 2, .filter = Filter::condition_any, .n_max = 1});
        }).code() == Errc::bad_exponent);
}

TEST_CASE("theorem verification on the trivial order", "[enumeration]") {
  const VerificationReport report = verify_theorem(1, 2);
  CHECK(report.orders_checked == std::vector<std::size_t>{1});
  CHECK(report.semigroups_per_order == std::vector<std::size_t>{1});
  CHECK(report.transitivity_failures == 0);
  CHECK(report.witness_compositions_failed == 0);
  CHECK(report.witness_compositions_checked >= 1);
  CHECK(report.violations.empty());
}

TEST_CASE("theorem verification through order 3", "[enumeration]") {
  const VerificationReport report = verify_theorem(3, 6);
  CHECK(report.orders_checked == std::vector<std::size_t>{1, 2, 3});
  CHECK(report.semigroups_per_order == std::vector<std::size_t>{1, 5, 24});
  CHECK(report.transitivity_failures == 0);
  CHECK(report.witness_compositions_failed == 0);
  CHECK(report.witness_compositions_checked > 0);
  CHECK(report.violations.empty());

  REQUIRE(report.condition_satisfiers.size() == 3);
  for (const auto& row : report.condition_satisfiers) {
    CHECK(row.size() == 5);  // n = 2..6
  }
  CHECK(report.condition_satisfiers[0] ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(report.condition_satisfiers[1] ==
        std::vector<std::size_t>{5, 5, 5, 5, 5});

  // Satisfier counts match a filtered enumeration run per exponent.
  for (std::size_t order = 1; order <= 3; ++order) {
    for (int n = 2; n <= 6; ++n) {
      const std::size_t expected = count_only(
          {.order = order, .filter = Filter::condition, .n = n, .dedup = true});
      CHECK(report.condition_satisfiers[order - 1][n - 2] == expected);
    }
  }
}

TEST_CASE("theorem verification is deterministic across jobs",
          "[enumeration]") {
  CHECK(verify_theorem(3, 6, 1) == verify_theorem(3, 6, 4));
}

TEST_CASE("verification rejects bad bounds", "[enumeration]") {
  CHECK(helpers::capture_error([] { verify_theorem(2, 1); }).code() ==
        Errc::bad_exponent);
  CHECK(helpers::capture_error([] { verify_theorem(99, 6); }).code() ==
        Errc::order_cap_exceeded);
  CHECK(helpers::capture_error([] { find_nontransitive(99); }).code() ==
        Errc::order_cap_exceeded);
}

TEST_CASE("no intransitive examples exist at tiny orders", "[enumeration]") {
  const NontransitiveResult at1 = find_nontransitive(1);
  CHECK(at1.orders_scanned == std::vector<std::size_t>{1});
  CHECK_FALSE(at1.smallest_order.has_value());
  CHECK(at1.items.empty());

  const NontransitiveResult at2 = find_nontransitive(2);
  CHECK(at2.orders_scanned == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(at2.smallest_order.has_value());
  CHECK(at2.items.empty());

  CHECK(find_nontransitive(2, 4) == at2);
}

TEST_CASE("intransitive search results re-verify", "[enumeration]") {
  const NontransitiveResult result = find_nontransitive(5);
  if (result.smallest_order) {
    CHECK(result.orders_scanned.back() == *result.smallest_order);
    CHECK_FALSE(result.items.empty());
    for (const auto& item : result.items) {
      CHECK(item.table.order() == *result.smallest_order);
      CHECK_FALSE(is_p_transitive(item.table));
      CHECK(p_related(item.table, item.a, item.b).has_value());
      CHECK(p_related(item.table, item.b, item.c).has_value());
      CHECK_FALSE(p_related(item.table, item.a, item.c).has_value());
    }
  } else {
    CHECK(result.orders_scanned == std::vector<std::size_t>{1, 2, 3, 4, 5});
    CHECK(result.items.empty());
  }
}
