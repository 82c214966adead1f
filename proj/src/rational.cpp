#include "cfw/rational.hpp"

#include <numeric>

namespace cfw {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) {
    throw DomainError("rational must be nonnegative with positive denominator");
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace cfw
