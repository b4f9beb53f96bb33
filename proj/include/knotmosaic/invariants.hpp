#pragma once

#include <string>

#include "knotmosaic/laurent.hpp"
#include "knotmosaic/pd.hpp"

namespace knotmosaic {

/// d = -A^2 - A^-2, the value of a trivial loop.
LaurentPoly loop_value();

/// Kauffman bracket in A, normalized so the crossing-free unknot is 1.
/// Smoothing convention for crossing (a,b,c,d): the A-smoothing joins a-b and
/// c-d, the B-smoothing joins a-d and b-c.
///
/// Crossings are contracted one at a time in a frontier-greedy order; the
/// partial state is the pairing of open arc ends, so the cost grows with the
/// frontier width rather than with 2^c.
LaurentPoly kauffman_bracket(const PDCode& pd);

int writhe(const PDCode& pd);

/// Jones polynomial in q with exponents stored multiplied by 4:
/// (-A^3)^(-writhe) * bracket, then A = q^(-1/4).
LaurentPoly jones(const PDCode& pd);

/// Alexander polynomial in t from the Wirtinger presentation, normalized to
/// lowest exponent 0 and positive top coefficient. Throws InvalidPDError when
/// the presentation matrix is singular.
LaurentPoly alexander(const PDCode& pd);

/// |alexander(-1)|
BigInt determinant(const PDCode& pd);

struct Fingerprint {
  LaurentPoly jones;  // exponents x4
  LaurentPoly alexander;
  BigInt determinant;

  /// "<jones> | <alexander> | <determinant>", jones in q, alexander in t.
  std::string serialize() const;
  static Fingerprint parse(std::string_view text);
  /// Invariants of the mirror image: q -> q^-1 in the Jones polynomial.
  Fingerprint mirrored() const;
  /// Lexicographically smaller of this and the mirrored serialization;
  /// equal for a knot and its mirror.
  std::string canonical_key() const;
  bool is_unknot() const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PDCode& pd);

}  // namespace knotmosaic
