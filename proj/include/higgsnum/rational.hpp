#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace higgsnum {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed or inconsistent user input (bad dimensions, bad flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when data parses but violates a mathematical invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0
/// and gcd(p, q) = 1.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Parses "p", "-p" or "p/q". Throws InputError on anything else.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw InputError("empty rational literal");
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw InputError("malformed rational literal '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace higgsnum
