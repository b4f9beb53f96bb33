#include "knotmosaic/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

namespace knotmosaic {

LaurentPoly loop_value() {
  LaurentPoly d;
  d.add_term(-1, 2);
  d.add_term(-1, -2);
  return d;
}

namespace {

// Arc labels of a PD mapped to 0..m-1.
struct CompactArcs {
  std::vector<std::array<int, 4>> crossings;
  int arc_count = 0;
};

CompactArcs compact(const PDCode& pd) {
  std::unordered_map<int, int> index;
  CompactArcs out;
  for (const PDCrossing& x : pd.crossings()) {
    std::array<int, 4> c{};
    for (std::size_t i = 0; i < 4; ++i) {
      auto [it, inserted] = index.try_emplace(x.arcs[i], out.arc_count);
      if (inserted) ++out.arc_count;
      c[i] = it->second;
    }
    out.crossings.push_back(c);
  }
  return out;
}

// Frontier-greedy contraction order: repeatedly take the crossing sharing the
// most arc ends with what has already been processed.
std::vector<std::size_t> contraction_order(const CompactArcs& arcs) {
  const std::size_t c = arcs.crossings.size();
  std::vector<int> touched(static_cast<std::size_t>(arcs.arc_count), 0);
  std::vector<bool> done(c, false);
  std::vector<std::size_t> order;
  order.reserve(c);
  for (std::size_t step = 0; step < c; ++step) {
    std::size_t best = c;
    int best_score = -1;
    for (std::size_t i = 0; i < c; ++i) {
      if (done[i]) continue;
      int score = 0;
      for (int a : arcs.crossings[i]) score += touched[static_cast<std::size_t>(a)] == 1 ? 1 : 0;
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    done[best] = true;
    order.push_back(best);
    for (int a : arcs.crossings[best]) ++touched[static_cast<std::size_t>(a)];
  }
  return order;
}

// Path bookkeeping for one smoothing state: partner[a] is the far end of the
// open path ending at arc a, or -1.
struct PathState {
  std::vector<int> partner;
  std::vector<int> degree;
  int loops = 0;

  void join(int x, int y) {
    auto ux = static_cast<std::size_t>(x);
    auto uy = static_cast<std::size_t>(y);
    if (x == y) {
      ++loops;
      degree[ux] += 2;
      return;
    }
    if (degree[ux] == 1 && degree[uy] == 1 && partner[ux] == y) {
      ++loops;
      partner[ux] = partner[uy] = -1;
    } else {
      const int far_x = degree[ux] == 1 ? partner[ux] : x;
      const int far_y = degree[uy] == 1 ? partner[uy] : y;
      if (degree[ux] == 1) partner[ux] = -1;
      if (degree[uy] == 1) partner[uy] = -1;
      partner[static_cast<std::size_t>(far_x)] = far_y;
      partner[static_cast<std::size_t>(far_y)] = far_x;
    }
    ++degree[ux];
    ++degree[uy];
  }
};

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& pd) {
  if (pd.empty()) return LaurentPoly(1);
  const CompactArcs arcs = compact(pd);
  const auto m = static_cast<std::size_t>(arcs.arc_count);
  const LaurentPoly d = loop_value();
  std::vector<LaurentPoly> d_powers{LaurentPoly(1)};
  auto d_pow = [&](int k) -> const LaurentPoly& {
    while (static_cast<int>(d_powers.size()) <= k) d_powers.push_back(d_powers.back() * d);
    return d_powers[static_cast<std::size_t>(k)];
  };

  // Key: partner of every frontier arc, frontier listed in increasing arc order.
  using Key = std::vector<std::int32_t>;
  std::vector<int> degree(m, 0);
  std::map<Key, LaurentPoly> states;
  states.emplace(Key{}, LaurentPoly(1));

  for (std::size_t xi : contraction_order(arcs)) {
    const auto& [a, b, c, e] = arcs.crossings[xi];
    std::vector<int> frontier;
    for (std::size_t i = 0; i < m; ++i)
      if (degree[i] == 1) frontier.push_back(static_cast<int>(i));

    std::map<Key, LaurentPoly> next;
    for (const auto& [key, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        PathState s{std::vector<int>(m, -1), degree, 0};
        for (std::size_t i = 0; i < frontier.size(); ++i) s.partner[static_cast<std::size_t>(frontier[i])] = key[i];
        if (smoothing == 0) {
          s.join(a, b);
          s.join(c, e);
        } else {
          s.join(a, e);
          s.join(b, c);
        }
        Key out;
        for (std::size_t i = 0; i < m; ++i)
          if (s.degree[i] == 1) out.push_back(s.partner[i]);
        LaurentPoly term = poly.scaled(1, smoothing == 0 ? 1 : -1);
        if (s.loops > 0) term *= d_pow(s.loops);
        next[std::move(out)] += term;
      }
    }
    for (int arc : arcs.crossings[xi]) ++degree[static_cast<std::size_t>(arc)];
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    states = std::move(next);
  }
  LaurentPoly total;
  for (const auto& [key, poly] : states) total += poly;
  return total.divide_exact(d);
}

int writhe(const PDCode& pd) {
  int w = 0;
  for (const PDCrossing& x : pd.crossings()) w += x.sign;
  return w;
}

LaurentPoly jones(const PDCode& pd) {
  const int w = writhe(pd);
  const LaurentPoly f = kauffman_bracket(pd).scaled(w % 2 == 0 ? 1 : -1, -3 * w);
  return f.substitute_power(-1);
}

namespace {

LaurentPoly bareiss_determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return LaurentPoly();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      }
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

LaurentPoly alexander(const PDCode& pd) {
  if (pd.crossing_count() <= 1) return LaurentPoly(1);
  const CompactArcs arcs = compact(pd);
  // Wirtinger generators: arcs joined through over-crossings.
  std::vector<int> parent(static_cast<std::size_t>(arcs.arc_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (const auto& x : arcs.crossings) parent[static_cast<std::size_t>(find(x[1]))] = find(x[3]);
  std::map<int, std::size_t> generator;
  for (int a = 0; a < arcs.arc_count; ++a) generator.try_emplace(find(a), generator.size());
  const std::size_t c = arcs.crossings.size();
  if (generator.size() != c) throw InvalidPDError("diagram has a strand with no under-crossing");

  LaurentPoly one_minus_t(1);
  one_minus_t.add_term(-1, 1);
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly minus_one(-1);

  std::vector<std::vector<LaurentPoly>> matrix(c, std::vector<LaurentPoly>(c));
  for (std::size_t row = 0; row < c; ++row) {
    const auto& x = arcs.crossings[row];
    const bool positive = pd.crossings()[row].sign > 0;
    const std::size_t over = generator.at(find(x[1]));
    const std::size_t in = generator.at(find(x[0]));
    const std::size_t out = generator.at(find(x[2]));
    matrix[row][over] += one_minus_t;
    matrix[row][in] += positive ? t : minus_one;
    matrix[row][out] += positive ? minus_one : t;
  }
  matrix.pop_back();
  for (auto& r : matrix) r.pop_back();
  const LaurentPoly det = bareiss_determinant(std::move(matrix));
  if (det.is_zero()) throw InvalidPDError("Alexander matrix is singular");
  return det.normalized();
}

BigInt determinant(const PDCode& pd) { return abs(alexander(pd).evaluate(-1)); }

std::string Fingerprint::serialize() const {
  return jones.to_string("q") + " | " + alexander.to_string("t") + " | " + determinant.str();
}

Fingerprint Fingerprint::parse(std::string_view text) {
  const auto bar1 = text.find('|');
  const auto bar2 = bar1 == std::string_view::npos ? bar1 : text.find('|', bar1 + 1);
  if (bar2 == std::string_view::npos) throw std::invalid_argument("fingerprint needs three '|' separated fields");
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  Fingerprint fp;
  fp.jones = LaurentPoly::parse(trim(text.substr(0, bar1)), "q");
  fp.alexander = LaurentPoly::parse(trim(text.substr(bar1 + 1, bar2 - bar1 - 1)), "t");
  fp.determinant = BigInt(std::string(trim(text.substr(bar2 + 1))));
  return fp;
}

Fingerprint Fingerprint::mirrored() const { return {jones.substitute_power(-1), alexander, determinant}; }

std::string Fingerprint::canonical_key() const { return std::min(serialize(), mirrored().serialize()); }

bool Fingerprint::is_unknot() const {
  return jones == LaurentPoly(1) && alexander == LaurentPoly(1) && determinant == 1;
}

Fingerprint fingerprint(const PDCode& pd) {
  Fingerprint fp{jones(pd), alexander(pd), 0};
  fp.determinant = abs(fp.alexander.evaluate(-1));
  return fp;
}

}  // namespace knotmosaic
