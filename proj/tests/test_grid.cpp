#include <doctest.h>

#include <nlohmann/json.hpp>
#include <random>
#include <algorithm>

#include "knotmosaic/grid.hpp"
#include "support.hpp"

using namespace knotmosaic;

namespace {

MosaicGrid random_grid(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> kind(0, 10);
  MosaicGrid g(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g.set({r, c}, Tile(kind(rng)));
  return g;
}

}  // namespace

TEST_SUITE("grid") {
  TEST_CASE("parse accepts slashes, newlines and commas") {
    const MosaicGrid a = parse_matrix(kmtest::kTrefoil);
    const MosaicGrid b = parse_matrix("0 2 1 0\n2 10 9 1\n3 9 8 4\n0 3 4 0\n");
    const MosaicGrid c = parse_matrix("0,2,1,0\n2,10,9,1\n3,9,8,4\n0,3,4,0");
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a.size() == 4);
    CHECK(a.at({1, 1}) == Tile(10));
    CHECK(a.at({2, 2}) == Tile(8));
  }

  TEST_CASE("serialization") {
    const MosaicGrid g = parse_matrix(kmtest::kTrefoil);
    CHECK(serialize_matrix(g) == "0 2 1 0\n2 10 9 1\n3 9 8 4\n0 3 4 0");
    CHECK(serialize_matrix_inline(g) == kmtest::kTrefoil);
  }

  TEST_CASE("round trip property") {
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
      const MosaicGrid g = random_grid(rng, 1 + i % 8);
      CHECK(parse_matrix(serialize_matrix(g)) == g);
      CHECK(parse_matrix(serialize_matrix_inline(g)) == g);
      CHECK(grid_from_json(grid_to_json(g)) == g);
    }
  }

  TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
    CHECK_THROWS_AS(parse_matrix("0 2\n1"), ParseError);
    try {
      parse_matrix("0 2 1 0 / 2 11 9 1 / 3 9 8 4 / 0 3 4 0");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.row() == 2);
      CHECK(e.col() == 2);
    }
    try {
      parse_matrix("0 2\n1 x");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.row() == 2);
      CHECK(e.col() == 2);
    }
  }

  TEST_CASE("json errors") {
    CHECK_THROWS_AS(grid_from_json(nlohmann::json::array()), ParseError);
    CHECK_THROWS_AS(grid_from_json({{"n", 2}, {"cells", {{0, 0}, {0}}}}), ParseError);
    CHECK_THROWS_AS(grid_from_json({{"n", 3}, {"cells", {{0, 0}, {0, 0}}}}), ParseError);
    CHECK_THROWS_AS(grid_from_json({{"cells", {{0, "a"}, {0, 0}}}}), ParseError);
    CHECK(grid_from_json({{"cells", {{2, 1}, {3, 4}}}}).size() == 2);
  }

  TEST_CASE("suitable connectivity") {
    CHECK(is_suitably_connected(parse_matrix(kmtest::kTrefoil)));
    CHECK(is_suitably_connected(MosaicGrid(3)));
    CHECK(is_suitably_connected(parse_matrix("2 1 / 3 4")));

    // T5 on the left boundary points off the grid.
    const auto boundary = connection_defects(parse_matrix("5 0 / 0 0"));
    REQUIRE(boundary.size() == 2);
    CHECK(std::any_of(boundary.begin(), boundary.end(), [](const EdgeDefect& d) { return d.boundary; }));

    // T2 facing a blank neighbor.
    const auto inner = connection_defects(parse_matrix("0 0 0 / 0 2 0 / 0 0 0"));
    CHECK(inner.size() == 2);
    for (const auto& d : inner) CHECK_FALSE(d.boundary);
  }

  TEST_CASE("counts") {
    const MosaicGrid g = parse_matrix(kmtest::kTrefoil);
    CHECK(nonblank_count(g) == 12);
    CHECK(crossing_count(g) == 3);
    CHECK(nonblank_count(MosaicGrid(5)) == 0);
  }

  TEST_CASE("symmetries preserve connectivity") {
    const MosaicGrid g = parse_matrix(kmtest::kTrefoil);
    CHECK(rotate_half_turn(rotate_half_turn(g)) == g);
    CHECK(reflect_left_right(reflect_left_right(g)) == g);
    CHECK(is_suitably_connected(rotate_half_turn(g)));
    CHECK(is_suitably_connected(reflect_left_right(g)));
  }

  TEST_CASE("neighbors") {
    CHECK(neighbor({1, 1}, Side::Top) == CellCoord{0, 1});
    CHECK(neighbor({1, 1}, Side::Left) == CellCoord{1, 0});
    CHECK_FALSE(MosaicGrid(2).contains(neighbor({0, 0}, Side::Top)));
  }
}
