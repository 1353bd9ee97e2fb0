#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kegel {

/// Arbitrary-precision rational. Arithmetic results are in lowest terms; the
/// two-argument constructor is not, so build fractions with ratio().
using Rational = mpq_class;

/// Raised when a weight vector or probability leaves its admissible range.
class WeightError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on incompatible matrix or distribution shapes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a sequence that must be ascending is not.
class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" and "2^-k" / "2^k". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// p/q in lowest terms. Throws std::invalid_argument when q is zero.
Rational ratio(long p, long q);

/// 2^exponent for any (possibly negative) exponent.
Rational pow2(long exponent);

inline Rational zero() { return Rational(0); }
inline Rational one() { return Rational(1); }

/// Probability in [0,1] with exact rational value.
class Prob {
 public:
  Prob() = default;
  explicit Prob(Rational value);
  /// Shorthand for p/q; the fraction is canonicalized.
  Prob(long p, unsigned long q);

  const Rational& value() const { return value_; }
  Prob complement() const;

  friend bool operator==(const Prob& a, const Prob& b) { return a.value_ == b.value_; }

 private:
  Rational value_{0};
};

inline std::string to_string(const Prob& p) { return to_string(p.value()); }

}  // namespace kegel
