#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace powcom::arith {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// value = product of prime^exponent over `factors`, primes strictly increasing.
struct PrimeFactorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  std::vector<std::uint64_t> primes() const;
};

/// Trial division. factorize(1) has no factors. Throws InvalidArgument on 0.
PrimeFactorization factorize(std::uint64_t r);

bool is_prime(std::uint64_t p);

struct ExtGcd {
  std::int64_t gcd;
  std::int64_t u;
  std::int64_t v;
  friend bool operator==(const ExtGcd&, const ExtGcd&) = default;
};

/// g = gcd(a, b) > 0 with u*a + v*b = g. Throws BothZero.
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
inline bool coprime(std::uint64_t m, std::uint64_t n) { return gcd(m, n) == 1; }

/// Integers coefficients[i] with sum coefficients[i] * inputs[i] = gcd.
struct BezoutCertificate {
  std::vector<std::uint64_t> inputs;
  std::uint64_t gcd = 0;
  std::vector<std::int64_t> coefficients;

  /// Recomputes the linear combination and the divisibility claims.
  bool verify() const;
};

/// Left fold of ext_gcd with back-substitution; coefficients are not
/// minimized. Throws InvalidArgument on an empty list or a zero input.
BezoutCertificate multi_bezout(std::span<const std::uint64_t> q);

}  // namespace powcom::arith
