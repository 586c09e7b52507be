#include <cstddef>
#include <optional>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "semiconj/semiconj.hpp"

using semiconj::CayleyTable;
using semiconj::Errc;
using semiconj::element_id;
using semiconj::find_identity;
using semiconj::is_commutative;
using semiconj::power;
using semiconj::validate_table;

namespace {

// Naive associativity check, independent of validate_table's loop order.
bool grid_is_associative(const std::vector<std::vector<long long>>& rows) {
  const std::size_t k = rows.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        const auto ij = static_cast<std::size_t>(rows[i][j]);
        const auto jl = static_cast<std::size_t>(rows[j][l]);
        if (rows[ij][l] != rows[i][jl]) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate_table accepts associative tables", "[algebra]") {
  const CayleyTable trivial = helpers::from_rows({{0}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.product(0, 0) == 0);

  const CayleyTable lz2 = helpers::left_zero(2);
  CHECK(lz2.order() == 2);
  CHECK(lz2.product(0, 1) == 0);
  CHECK(lz2.product(1, 0) == 1);
}

TEST_CASE("validate_table rejects out-of-range entries", "[algebra]") {
  const auto e = helpers::capture_error(
      [] { validate_table(2, {{0, 1}, {1, 2}}); });
  CHECK(e.code() == Errc::out_of_range);
  CHECK(e.details() == std::vector<long long>{2, 1, 1});
}

TEST_CASE("validate_table rejects non-associative tables", "[algebra]") {
  const auto e = helpers::capture_error(
      [] { validate_table(2, {{0, 1}, {0, 0}}); });
  CHECK(e.code() == Errc::not_associative);
  CHECK(e.details() == std::vector<long long>{1, 0, 1});
}

TEST_CASE("validate_table rejects malformed shapes", "[algebra]") {
  CHECK(helpers::capture_error([] { validate_table(0, {}); }).code() ==
        Errc::bad_shape);
  CHECK(helpers::capture_error([] { validate_table(2, {{0, 1}}); }).code() ==
        Errc::bad_shape);
  CHECK(helpers::capture_error(
            [] { validate_table(2, {{0, 1}, {0}}); })
            .code() == Errc::bad_shape);
  CHECK(helpers::capture_error(
            [] { validate_table(1, {{0, 0}}); })
            .code() == Errc::bad_shape);
}

TEST_CASE("product rejects out-of-range operands", "[algebra]") {
  const CayleyTable lz2 = helpers::left_zero(2);
  const auto e = helpers::capture_error([&] { lz2.product(2, 0); });
  CHECK(e.code() == Errc::bad_element);
  CHECK(e.details() == std::vector<long long>{2});
  CHECK(helpers::capture_error([&] { lz2.product(0, 7); }).code() ==
        Errc::bad_element);
}

TEST_CASE("power iterates the product", "[algebra]") {
  const CayleyTable null2 = helpers::null_semigroup(2);
  const CayleyTable c3 = helpers::cyclic_group(3);

  CHECK(power(null2, 1, 1) == 1);
  CHECK(power(null2, 1, 2) == 0);
  CHECK(power(c3, 1, 1) == 1);
  CHECK(power(c3, 1, 2) == 2);
  CHECK(power(c3, 1, 3) == 0);
  CHECK(power(c3, 2, 3) == 0);
}

TEST_CASE("power rejects bad inputs", "[algebra]") {
  const CayleyTable c3 = helpers::cyclic_group(3);

  const auto zero = helpers::capture_error([&] { power(c3, 1, 0); });
  CHECK(zero.code() == Errc::zero_power_in_semigroup);

  const auto negative = helpers::capture_error([&] { power(c3, 1, -1); });
  CHECK(negative.code() == Errc::bad_exponent);
  CHECK(negative.details() == std::vector<long long>{-1});

  const auto element = helpers::capture_error([&] { power(c3, 5, 2); });
  CHECK(element.code() == Errc::bad_element);
  CHECK(element.details() == std::vector<long long>{5});
}

TEST_CASE("find_identity locates two-sided identities", "[algebra]") {
  CHECK(find_identity(helpers::cyclic_group(3)) == element_id{0});
  CHECK(find_identity(helpers::from_rows({{0}})) == element_id{0});
  CHECK_FALSE(find_identity(helpers::left_zero(2)).has_value());
  CHECK_FALSE(find_identity(helpers::null_semigroup(2)).has_value());
}

TEST_CASE("is_commutative checks every ordered pair", "[algebra]") {
  CHECK(is_commutative(helpers::cyclic_group(3)));
  CHECK(is_commutative(helpers::null_semigroup(2)));
  CHECK_FALSE(is_commutative(helpers::left_zero(2)));
  CHECK_FALSE(is_commutative(helpers::symmetric_group_3()));
}

TEST_CASE("validation agrees with a naive associativity scan", "[algebra]") {
  std::size_t valid = 0;
  // All 16 binary operations on a two-element set.
  for (int code = 0; code < 16; ++code) {
    const std::vector<std::vector<long long>> rows = {
        {(code >> 3) & 1, (code >> 2) & 1},
        {(code >> 1) & 1, code & 1},
    };
    bool accepted = true;
    try {
      validate_table(2, rows);
    } catch (const semiconj::SemiconjError&) {
      accepted = false;
    }
    CHECK(accepted == grid_is_associative(rows));
    if (accepted) ++valid;
  }
  CHECK(valid == 8);
}
