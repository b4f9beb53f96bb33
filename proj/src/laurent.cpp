#include "knotmosaic/laurent.hpp"

#include <cctype>
#include <charconv>

namespace knotmosaic {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.emplace(0, BigInt(c));
}

LaurentPoly LaurentPoly::monomial(BigInt coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
  return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::leading_coefficient() const {
  return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

void LaurentPoly::add_term(const BigInt& coefficient, int exponent) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(c, e);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(-c, e);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::scaled(const BigInt& coefficient, int shift) const {
  LaurentPoly out;
  if (coefficient == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c * coefficient);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int factor) const {
  if (factor == 0) return LaurentPoly::monomial(coefficient_sum(), 0);
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * factor, c);
  return out;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  LaurentPoly remainder = *this;
  LaurentPoly quotient;
  const int d_top = divisor.max_exponent();
  const BigInt& d_lead = divisor.terms_.rbegin()->second;
  const int span = divisor.max_exponent() - divisor.min_exponent();
  while (!remainder.is_zero()) {
    if (remainder.max_exponent() - remainder.min_exponent() < span) {
      throw std::domain_error("polynomial division is not exact");
    }
    const auto& [r_top, r_lead] = *remainder.terms_.rbegin();
    if (r_lead % d_lead != 0) throw std::domain_error("polynomial division is not exact");
    const BigInt q = r_lead / d_lead;
    const int shift = r_top - d_top;
    quotient.add_term(q, shift);
    remainder -= divisor.scaled(q, shift);
  }
  return quotient;
}

BigInt LaurentPoly::evaluate(long long x) const {
  if (terms_.empty()) return 0;
  if (x == 0) {
    if (min_exponent() < 0) throw std::domain_error("negative exponent evaluated at zero");
    return coefficient(0);
  }
  // Horner over non-negative exponents; negative ones handled by scaling with
  // x^(-min) and dividing at the end.
  const int low = std::min(0, min_exponent());
  BigInt acc = 0;
  int e = max_exponent();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; e > it->first; --e) acc *= x;
    acc += it->second;
  }
  for (; e > low; --e) acc *= x;
  BigInt denom = 1;
  for (int i = 0; i < -low; ++i) denom *= x;
  if (acc % denom != 0) throw std::domain_error("value is not an integer");
  return acc / denom;
}

BigInt LaurentPoly::coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::normalized() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coefficient() < 0 ? BigInt(-1) : BigInt(1), -min_exponent());
}

bool LaurentPoly::is_palindromic() const {
  const int lo = min_exponent();
  const int hi = max_exponent();
  for (const auto& [e, c] : terms_)
    if (coefficient(lo + hi - e) != c) return false;
  return true;
}

std::string LaurentPoly::to_string(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      out += c.str();
    } else {
      out += c < 0 ? " - " : " + ";
      out += (c < 0 ? BigInt(-c) : c).str();
    }
    first = false;
    out += '*';
    out += variable;
    out += '^';
    out += std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view variable) {
  LaurentPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("malformed polynomial at offset ") + std::to_string(i) + ": " + what);
  };
  skip();
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail("expected a coefficient");
    BigInt c(std::string(text.substr(start, i - start)));
    if (text.substr(i, 1) != "*" || text.substr(i + 1, variable.size()) != variable) fail("expected '*<var>'");
    i += 1 + variable.size();
    if (text.substr(i, 1) != "^") fail("expected '^'");
    ++i;
    int e = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), e);
    if (ec != std::errc()) fail("expected an exponent");
    i = static_cast<std::size_t>(ptr - text.data());
    out.add_term(sign * c, e);
  }
  return out;
}

}  // namespace knotmosaic
