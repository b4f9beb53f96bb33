#pragma once

#include <filesystem>
#include <numeric>
#include <stdlib.h>
#include <string>
#include <vector>

#include "knotmosaic/catalog.hpp"
#include "knotmosaic/grid.hpp"
#include "knotmosaic/invariants.hpp"
#include "knotmosaic/pd.hpp"

namespace kmtest {

inline const std::string kTrefoil = "0 2 1 0 / 2 10 9 1 / 3 9 8 4 / 0 3 4 0";

inline std::filesystem::path data_dir() { return KNOTMOSAIC_DATA_DIR; }
inline std::filesystem::path test_data_dir() { return KNOTMOSAIC_TEST_DATA_DIR; }
inline std::filesystem::path catalog_path() { return data_dir() / "catalog" / "prime_knots_10.txt"; }

inline const knotmosaic::Catalog& catalog() {
  static const knotmosaic::Catalog c = knotmosaic::Catalog::load(catalog_path());
  return c;
}

inline const knotmosaic::FingerprintIndex& index() {
  static const knotmosaic::FingerprintIndex i = knotmosaic::bootstrap_fingerprints(catalog());
  return i;
}

// Scratch directory, removed on destruction.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    std::string tmpl = (std::filesystem::temp_directory_path() / ("knotmosaic-" + tag + "-XXXXXX")).string();
    path = ::mkdtemp(tmpl.data());
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

// Sum over all 2^c smoothings, independent of the contraction order used by
// kauffman_bracket.
inline knotmosaic::LaurentPoly naive_bracket(const knotmosaic::PDCode& pd) {
  using knotmosaic::LaurentPoly;
  const int c = pd.crossing_count();
  if (c == 0) return LaurentPoly(1);
  const LaurentPoly d = knotmosaic::loop_value();
  LaurentPoly total;
  for (unsigned long state = 0; state < (1ul << c); ++state) {
    std::vector<int> parent(2 * c + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    int a_count = 0;
    for (int i = 0; i < c; ++i) {
      const auto& arcs = pd.crossings()[i].arcs;
      if (state >> i & 1) {
        unite(arcs[0], arcs[3]);
        unite(arcs[1], arcs[2]);
      } else {
        ++a_count;
        unite(arcs[0], arcs[1]);
        unite(arcs[2], arcs[3]);
      }
    }
    int loops = 0;
    for (int x = 1; x <= 2 * c; ++x) loops += find(x) == x;
    LaurentPoly term = LaurentPoly::monomial(1, a_count - (c - a_count));
    for (int k = 1; k < loops; ++k) term = term * d;
    total += term;
  }
  return total;
}

}  // namespace kmtest
