#include "knotmosaic/pd.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace knotmosaic {

void PDCode::validate() const {
  std::map<int, std::array<int, 2>> ends;  // arc -> {times entering, times leaving}
  for (const PDCrossing& x : crossings_) {
    if (x.sign != 1 && x.sign != -1) throw InvalidPDError("crossing sign must be +1 or -1");
    ends[x.arcs[0]][0] += 1;
    ends[x.arcs[2]][1] += 1;
    ends[x.over_in()][0] += 1;
    ends[x.over_out()][1] += 1;
  }
  for (const auto& [arc, count] : ends) {
    if (count[0] != 1 || count[1] != 1) {
      throw InvalidPDError("arc " + std::to_string(arc) + " must enter and leave exactly one crossing each");
    }
  }
  if (ends.size() != 2 * crossings_.size()) {
    throw InvalidPDError("expected " + std::to_string(2 * crossings_.size()) + " arcs, found " +
                         std::to_string(ends.size()));
  }
}

int PDCode::component_count() const {
  if (crossings_.empty()) return 1;
  // Arc label -> the arc that follows it along the strand.
  std::map<int, int> next;
  for (const PDCrossing& x : crossings_) {
    next[x.arcs[0]] = x.arcs[2];
    next[x.over_in()] = x.over_out();
  }
  std::map<int, bool> seen;
  int components = 0;
  for (const auto& [start, unused] : next) {
    if (seen[start]) continue;
    ++components;
    for (int a = start; !seen[a]; a = next.at(a)) seen[a] = true;
  }
  return components;
}

PDCode mirror(const PDCode& pd) {
  std::vector<PDCrossing> out;
  out.reserve(pd.crossings().size());
  for (const PDCrossing& x : pd.crossings()) {
    const auto& [a, b, c, d] = x.arcs;
    // The old over strand becomes the under strand; start at its entering arc.
    if (x.sign > 0) {
      out.push_back({{d, a, b, c}, -1});
    } else {
      out.push_back({{b, c, d, a}, +1});
    }
  }
  return PDCode(std::move(out));
}

std::string format_pd(const PDCode& pd) {
  std::string out = "PD[";
  bool first = true;
  for (const PDCrossing& x : pd.crossings()) {
    if (!first) out += ',';
    first = false;
    out += '(';
    for (int i = 0; i < 4; ++i) {
      if (i > 0) out += ',';
      out += std::to_string(x.arcs[static_cast<std::size_t>(i)]);
    }
    out += ')';
    out += x.sign > 0 ? '+' : '-';
  }
  out += ']';
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_space();
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  bool at_end() {
    skip_space();
    return pos_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidPDError("malformed PD code at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PDCode parse_pd(std::string_view text) {
  Cursor cur(text);
  cur.expect('P');
  cur.expect('D');
  cur.expect('[');
  std::vector<PDCrossing> crossings;
  if (!cur.accept(']')) {
    do {
      PDCrossing x;
      cur.expect('(');
      for (int i = 0; i < 4; ++i) {
        if (i > 0) cur.expect(',');
        x.arcs[static_cast<std::size_t>(i)] = cur.integer();
      }
      cur.expect(')');
      if (cur.accept('+')) {
        x.sign = 1;
      } else if (cur.accept('-')) {
        x.sign = -1;
      } else {
        cur.fail("expected crossing sign '+' or '-'");
      }
      crossings.push_back(x);
    } while (cur.accept(','));
    cur.expect(']');
  }
  if (!cur.at_end()) cur.fail("trailing characters");
  PDCode pd(std::move(crossings));
  pd.validate();
  return pd;
}

PDCode pd_from_sequential_tuples(const std::vector<std::array<int, 4>>& tuples) {
  const int arcs = 2 * static_cast<int>(tuples.size());
  if (arcs < 4) throw InvalidPDError("sign inference needs at least two crossings");
  std::vector<PDCrossing> crossings;
  crossings.reserve(tuples.size());
  for (const auto& t : tuples) {
    const int step = ((t[1] - t[3]) % arcs + arcs) % arcs;
    if (step == 1) {
      crossings.push_back({t, +1});
    } else if (step == arcs - 1) {
      crossings.push_back({t, -1});
    } else {
      throw InvalidPDError("over-strand arcs " + std::to_string(t[3]) + " and " + std::to_string(t[1]) +
                           " are not consecutive");
    }
  }
  PDCode pd(std::move(crossings));
  pd.validate();
  return pd;
}

}  // namespace knotmosaic
