#include "kegel/rational.hpp"

#include <cctype>

namespace kegel {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
  if (start == digits.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  std::string s(digits[0] == '+' ? digits.substr(1) : digits);
  return mpz_class(s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.starts_with("2^")) {
    mpz_class e = parse_integer(text.substr(2), text);
    if (!e.fits_slong_p()) throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
    return pow2(e.get_si());
  }
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ratio(long p, long q) {
  if (q == 0) throw std::invalid_argument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational pow2(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  Rational r(mpz_class(1), p);
  r.canonicalize();
  return r;
}

Prob::Prob(Rational value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ < 0 || value_ > 1) throw WeightError("probability out of [0,1]: " + to_string(value_));
}

Prob::Prob(long p, unsigned long q) : Prob(Rational(p, q)) {}

Prob Prob::complement() const { return Prob(Rational(1) - value_); }

}  // namespace kegel
