#pragma once

#include <cstdint>
#include <limits>

namespace hypconj {

constexpr long long kSaturated = std::numeric_limits<long long>::max();

constexpr long long sat_add(long long a, long long b) {
  if (a == kSaturated || b == kSaturated) return kSaturated;
  if (a > kSaturated - b) return kSaturated;
  return a + b;
}

constexpr long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  if (a == kSaturated || b == kSaturated) return kSaturated;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

constexpr long long sat_pow(long long base, long long exp) {
  if (exp <= 0) return 1;
  if (base == 0) return 0;
  if (base == 1) return 1;
  long long result = 1;
  for (long long i = 0; i < exp; ++i) {
    result = sat_mul(result, base);
    if (result == kSaturated) return kSaturated;
  }
  return result;
}

// Floor/ceil division for possibly negative numerators, positive divisors.
constexpr long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr long long ceil_div(long long a, long long b) {
  return -floor_div(-a, b);
}

constexpr long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace hypconj
