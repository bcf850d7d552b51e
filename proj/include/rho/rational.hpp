#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rho {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every scalar in the library is an exact arbitrary-precision rational.
// No floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" (q > 0 after canonicalization). Rejects anything else.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" or "p/q".
std::string to_string(const Rational& q);

}  // namespace rho
