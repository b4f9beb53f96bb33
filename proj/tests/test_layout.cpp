#include <doctest.h>

#include <algorithm>
#include <set>

#include "knotmosaic/layout.hpp"
#include "support.hpp"

using namespace knotmosaic;

namespace {

const char* kShell4 = "0 2 1 0 / 2 * * 1 / 3 * * 4 / 0 3 4 0";
const char* kFig8Shell = "0 2 1 0 0 / 2 * * 1 0 / 3 * * * 1 / 0 3 * * 4 / 0 0 3 4 0";

std::vector<std::uint8_t> fill_of(const Layout& layout, const MosaicGrid& g) {
  std::vector<std::uint8_t> out;
  for (CellCoord c : layout.wildcards()) out.push_back(static_cast<std::uint8_t>(g.at(c).kind()));
  return out;
}

int wildcard_crossings(const Layout& layout, const MosaicGrid& g) {
  int n = 0;
  for (CellCoord c : layout.wildcards()) n += g.at(c).is_crossing();
  return n;
}

}  // namespace

TEST_SUITE("layout") {
  TEST_CASE("count_candidates equals brute force over fill vectors") {
    for (int n = 0; n <= 10; ++n) {
      std::vector<std::uint64_t> by_crossings(n + 1, 0);
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << (2 * n)); ++v) {
        int crossings = 0;
        for (int i = 0; i < n; ++i) crossings += ((v >> (2 * i)) & 3) >= 2;
        ++by_crossings[crossings];
      }
      for (int m = 0; m <= n; ++m) {
        std::uint64_t expected = 0;
        for (int i = m; i <= n; ++i) expected += by_crossings[i];
        CHECK_MESSAGE(count_candidates(n, m) == expected, "n=" << n << " m=" << m);
      }
      CHECK(count_candidates(n, n + 1) == 0);
    }
  }

  TEST_CASE("published count for 13 wildcards") { CHECK(count_candidates(13, 9) == 8953856); }

  TEST_CASE("count_candidates argument checks") {
    CHECK_THROWS_AS(count_candidates(32, 0), std::invalid_argument);
    CHECK_THROWS_AS(count_candidates(3, -1), std::invalid_argument);
    CHECK(count_candidates(31, 0) == (std::uint64_t{1} << 62));
  }

  TEST_CASE("parse and serialize") {
    const Layout layout = parse_layout(kShell4, "shell4");
    CHECK(layout.size() == 4);
    CHECK(layout.wildcard_count() == 4);
    CHECK(layout.id() == "shell4");
    CHECK(layout.is_wildcard({1, 2}));
    CHECK_FALSE(layout.is_wildcard({0, 1}));
    CHECK(parse_layout(serialize_layout(layout)).wildcards() == layout.wildcards());
    CHECK(layout.base().at({1, 1}) == Tile(9));
  }

  TEST_CASE("invalid layouts") {
    CHECK_THROWS_AS(parse_layout("* 0 / 0 0"), LayoutError);
    CHECK_THROWS_AS(parse_layout("0 2 1 0 / 2 * * 1 / 3 * * 4 / 0 3 5 0"), LayoutError);
    CHECK_THROWS_AS(parse_layout("0 2 1 0 / 2 * ? 1 / 3 * * 4 / 0 3 4 0"), ParseError);
    CHECK_THROWS_AS(parse_layout("0 2 1 / 2 * * 1"), ParseError);
    CHECK_THROWS_AS(load_layout_file("/nonexistent/layout.txt"), std::runtime_error);
  }

  TEST_CASE("layout file id is the file stem") {
    const Layout layout = load_layout_file((kmtest::data_dir() / "layouts" / "shell4.txt").string());
    CHECK(layout.id() == "shell4");
    CHECK(layout.wildcard_count() == 4);
  }

  TEST_CASE("4-shell enumeration sizes") {
    const Layout layout = parse_layout(kShell4);
    const auto all = enumerate_fills(layout, 0);
    CHECK(all.size() == 256);
    std::set<std::string> distinct;
    for (const auto& g : all) distinct.insert(serialize_matrix_inline(g));
    CHECK(distinct.size() == 256);
    for (const auto& g : all) CHECK(is_suitably_connected(g));
    const auto three = enumerate_fills(layout, 3);
    CHECK(three.size() == 80);
    for (const auto& g : three) CHECK(wildcard_crossings(layout, g) >= 3);
    CHECK(enumerate_fills(layout, 5).empty());
  }

  TEST_CASE("enumeration equals naive nested loops and is lexicographic") {
    for (const char* text : {kShell4, kFig8Shell}) {
      const Layout layout = parse_layout(text);
      const int n = layout.wildcard_count();
      for (int m = 0; m <= n + 1; ++m) {
        std::vector<std::vector<std::uint8_t>> naive;
        std::vector<std::uint8_t> v(n, 7);
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << (2 * n)); ++code) {
          int crossings = 0;
          for (int i = 0; i < n; ++i) {
            v[i] = static_cast<std::uint8_t>(7 + ((code >> (2 * (n - 1 - i))) & 3));
            crossings += v[i] >= 9;
          }
          if (crossings >= m) naive.push_back(v);
        }
        std::vector<std::vector<std::uint8_t>> got;
        for (const auto& g : enumerate_fills(layout, m)) got.push_back(fill_of(layout, g));
        CHECK_MESSAGE(got == naive, "m=" << m);
        CHECK(got.size() == count_candidates(n, m));
      }
    }
  }

  TEST_CASE("first candidate is 7s then 9s on the suffix") {
    const Layout layout = parse_layout(kFig8Shell);
    FillEnumerator fills(layout, 7);
    REQUIRE(fills.next());
    CHECK(std::vector<std::uint8_t>(fills.fill().begin(), fills.fill().end()) ==
          std::vector<std::uint8_t>{9, 9, 9, 9, 9, 9, 9});
    FillEnumerator low(layout, 2);
    REQUIRE(low.next());
    CHECK(std::vector<std::uint8_t>(low.fill().begin(), low.fill().end()) ==
          std::vector<std::uint8_t>{7, 7, 7, 7, 7, 9, 9});
  }

  TEST_CASE("shards partition the candidates") {
    const Layout layout = parse_layout(kFig8Shell);
    for (int m : {0, 4}) {
      std::vector<std::string> all;
      for (const auto& g : enumerate_fills(layout, m)) all.push_back(serialize_matrix_inline(g));
      for (int total : {1, 2, 3, 5, 64}) {
        std::vector<std::string> joined;
        for (int i = 0; i < total; ++i) {
          for (const auto& g : shard_fills(layout, m, i, total)) joined.push_back(serialize_matrix_inline(g));
        }
        CHECK(joined.size() == all.size());
        std::sort(joined.begin(), joined.end());
        std::vector<std::string> sorted_all = all;
        std::sort(sorted_all.begin(), sorted_all.end());
        CHECK(joined == sorted_all);
      }
    }
    CHECK_THROWS_AS(shard_fills(layout, 0, 2, 2), std::invalid_argument);
  }

  TEST_CASE("resume from a prefix index continues the sequence") {
    const Layout layout = parse_layout(kFig8Shell);
    std::vector<std::pair<std::uint64_t, std::string>> full;
    FillEnumerator all(layout, 3);
    while (all.next()) full.emplace_back(all.prefix_index(), serialize_matrix_inline(all.grid()));
    for (std::uint64_t start : {0ull, 1ull, 17ull, 63ull, 64ull}) {
      std::vector<std::string> resumed;
      FillEnumerator fills(layout, 3, 0, 1, start);
      while (fills.next()) resumed.push_back(serialize_matrix_inline(fills.grid()));
      std::vector<std::string> expected;
      for (const auto& [p, s] : full) {
        if (p >= start) expected.push_back(s);
      }
      CHECK(resumed == expected);
    }
  }

  TEST_CASE("layout without wildcards yields its base once") {
    const Layout layout = parse_layout(kmtest::kTrefoil);
    const auto fills = enumerate_fills(layout, 0);
    REQUIRE(fills.size() == 1);
    CHECK(fills.front() == parse_matrix(kmtest::kTrefoil));
    CHECK(enumerate_fills(layout, 1).empty());
  }

  TEST_CASE("fill validates its input") {
    const Layout layout = parse_layout(kShell4);
    const std::vector<std::uint8_t> short_fill{7, 7};
    const std::vector<std::uint8_t> bad{7, 7, 7, 6};
    CHECK_THROWS_AS(layout.fill(short_fill), std::invalid_argument);
    CHECK_THROWS_AS(layout.fill(bad), std::invalid_argument);
  }
}
