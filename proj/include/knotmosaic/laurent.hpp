#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotmosaic {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial with integer coefficients. Zero coefficients
/// are never stored; the zero polynomial has no terms.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigInt>;

  LaurentPoly() = default;
  /// Constant polynomial.
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(BigInt coefficient, int exponent);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Lowest and highest exponents; zero polynomial -> 0.
  int min_exponent() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_exponent() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  BigInt coefficient(int exponent) const;
  BigInt leading_coefficient() const;

  void add_term(const BigInt& coefficient, int exponent);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Multiplies by coefficient * x^shift.
  LaurentPoly scaled(const BigInt& coefficient, int shift) const;
  /// Substitutes x -> x^factor (factor may be negative).
  LaurentPoly substitute_power(int factor) const;
  /// Exact quotient; throws std::domain_error when `divisor` does not divide
  /// this polynomial over the integers.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;
  /// Value at an integer point; requires x != 0 when negative exponents exist.
  BigInt evaluate(long long x) const;
  BigInt coefficient_sum() const;
  /// Lowest exponent shifted to 0, highest coefficient made positive.
  LaurentPoly normalized() const;
  bool is_palindromic() const;

  /// "c1*v^e1 + c2*v^e2 - ..." in increasing exponent order; "0" when zero.
  std::string to_string(std::string_view variable) const;
  static LaurentPoly parse(std::string_view text, std::string_view variable);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

}  // namespace knotmosaic
