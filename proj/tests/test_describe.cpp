#include <doctest.h>

#include "knotmosaic/describe.hpp"
#include "support.hpp"

using namespace knotmosaic;

namespace {
nlohmann::json describe(std::string_view matrix) { return describe_mosaic(parse_matrix(matrix), kmtest::index()); }
}  // namespace

TEST_SUITE("describe") {
  TEST_CASE("trefoil") {
    const auto j = describe(kmtest::kTrefoil);
    CHECK(j["valid"] == true);
    CHECK(j["kind"] == "knot");
    CHECK(j["nonblank"] == 12);
    CHECK(j["crossings"] == 3);
    CHECK(j["dt"] == nlohmann::json::array({-4, -6, -2}));
    CHECK(j["knot"] == "3_1");
    CHECK(j["invariants"]["jones"] == "1*t^1 + 1*t^3 - 1*t^4");
    CHECK(j["invariants"]["alexander"] == "1*t^0 - 1*t^1 + 1*t^2");
    CHECK(j["invariants"]["determinant"] == 3);
    CHECK(j["errors"].empty());
  }

  TEST_CASE("blank mosaic has no strand") {
    const auto j = describe_mosaic(MosaicGrid(4), kmtest::index());
    CHECK(j["valid"] == true);
    CHECK(j["errors"] == nlohmann::json::array({"no strand"}));
    CHECK(j["knot"].is_null());
  }

  TEST_CASE("link") {
    const auto j = describe("2 1 2 1 / 3 4 3 4 / 0 0 0 0 / 0 0 0 0");
    CHECK(j["valid"] == true);
    CHECK(j["kind"] == "link");
    CHECK(j["knot"].is_null());
    CHECK(j["dt"].is_null());
  }

  TEST_CASE("crossing-free unknot") {
    const auto j = describe("2 1 / 3 4");
    CHECK(j["kind"] == "knot");
    CHECK(j["knot"] == "unknot");
    CHECK(j["dt"].is_null());
    CHECK(j["invariants"]["jones"] == "1*t^0");
  }

  TEST_CASE("invalid mosaics list every defect") {
    const auto j = describe("0 0 0 / 0 2 0 / 0 0 0");
    CHECK(j["valid"] == false);
    CHECK(j["kind"] == "invalid");
    CHECK(j["errors"].size() == 2);
    const auto boundary = describe("5 0 / 0 0");
    CHECK(boundary["valid"] == false);
    CHECK(boundary["errors"].dump().find("faces the boundary") != std::string::npos);
  }

  TEST_CASE("composite knots are unknown") {
    const auto j = describe("0 2 1 0 0 / 2 9 10 1 0 / 3 10 8 9 1 / 0 3 9 10 4 / 0 0 3 4 0");
    CHECK(j["kind"] == "knot");
    CHECK(j["knot"] == "unknown");
    CHECK(j["invariants"]["determinant"] == 9);
  }

  TEST_CASE("tile metadata") {
    const auto j = tile_metadata();
    REQUIRE(j["tiles"].size() == 11);
    CHECK(j["tiles"][2]["connections"] == nlohmann::json::array({"Right", "Bottom"}));
    CHECK(j["tiles"][0]["connections"].empty());
    CHECK(j["tiles"][7]["strands"].size() == 2);
    CHECK(j["tiles"][9]["over"] == "vertical");
    CHECK(j["tiles"][10]["over"] == "horizontal");
    CHECK(tile_metadata().dump() == j.dump());
  }
}
