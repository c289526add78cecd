// Integer helpers shared by the semigroup, field and classification code.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace maxff {

/// Raised when a 64-bit intermediate would overflow.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Mathematical remainder in [0, n).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_pow(std::int64_t base, unsigned exp);

/// Trial division. Returns (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_prime(std::int64_t n);

struct PrimePower {
  std::int64_t p;
  int h;
};

/// q = p^h with p prime, or nullopt.
std::optional<PrimePower> as_prime_power(std::int64_t q);

}  // namespace maxff
