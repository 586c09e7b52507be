#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "semiconj/semiconj.hpp"

using semiconj::Errc;
using semiconj::GoldenFixture;
using semiconj::load_goldens;
using semiconj::save_goldens;

namespace {

std::string scratch_file(const std::string& name) {
  return std::string(SEMICONJ_SCRATCH_DIR) + "/" + name;
}

GoldenFixture load_text(const std::string& name, const std::string& text) {
  const std::string path = scratch_file(name);
  std::ofstream(path) << text;
  return load_goldens(path);
}

}  // namespace

TEST_CASE("fixtures survive a save and load round trip", "[goldens]") {
  GoldenFixture fixture;
  fixture.counts[{1, "iso"}] = 1;
  fixture.counts[{2, "iso"}] = 5;
  fixture.counts[{2, "labeled"}] = 8;
  fixture.smallest_nontransitive_order = 4;
  fixture.count_at_that_order = 3;
  fixture.nontransitive_searched_up_to = 4;

  const std::string path = scratch_file("goldens_roundtrip.txt");
  save_goldens(path, fixture);
  CHECK(load_goldens(path) == fixture);

  GoldenFixture no_failure;
  no_failure.counts[{1, "iso"}] = 1;
  save_goldens(path, no_failure);
  const GoldenFixture reloaded = load_goldens(path);
  CHECK(reloaded == no_failure);
  CHECK_FALSE(reloaded.smallest_nontransitive_order.has_value());
}

TEST_CASE("fixture lookups distinguish filters", "[goldens]") {
  const GoldenFixture fixture = load_text("goldens_lookup.txt",
                                          "# comment\n"
                                          "order, filter, count\n"
                                          "2, iso, 5\n"
                                          "2, labeled, 8\n");
  CHECK(fixture.count(2, "iso") == 5);
  CHECK(fixture.count(2, "labeled") == 8);
  CHECK_FALSE(fixture.count(3, "iso").has_value());
  CHECK_FALSE(fixture.count(2, "other").has_value());
}

TEST_CASE("goldens parsing rejects malformed files", "[goldens]") {
  CHECK(helpers::capture_error([] {
          load_goldens("/nonexistent/goldens.txt");
        }).code() == Errc::parse_error);

  const auto expect_parse_error = [](const std::string& name,
                                     const std::string& text) {
    const std::string path = scratch_file(name);
    std::ofstream(path) << text;
    CHECK(helpers::capture_error([&] { load_goldens(path); }).code() ==
          Errc::parse_error);
  };

  expect_parse_error("goldens_empty.txt", "");
  expect_parse_error("goldens_no_header.txt", "2, iso, 5\n");
  expect_parse_error("goldens_bad_filter.txt",
                     "order, filter, count\n2, weird, 5\n");
  expect_parse_error("goldens_bad_count.txt",
                     "order, filter, count\n2, iso, five\n");
  expect_parse_error("goldens_bad_key.txt",
                     "order, filter, count\nunknown_key, 5\n");
  expect_parse_error("goldens_wide_row.txt",
                     "order, filter, count\n2, iso, 5, 9\n");
  expect_parse_error("goldens_negative.txt",
                     "order, filter, count\n2, iso, -5\n");
}
