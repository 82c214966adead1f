#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "cfw/errors.hpp"

namespace cfw {

// Exact nonnegative rational, always reduced with positive denominator.
// Exponent comparisons (e.g. against 7/3) must never round.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
};

}  // namespace cfw
