#include "powcom/arith.hpp"

#include "powcom/error.hpp"

namespace powcom::arith {

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::vector<std::uint64_t> PrimeFactorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

PrimeFactorization factorize(std::uint64_t r) {
  if (r == 0) throw Error(ErrorKind::InvalidArgument, "cannot factorize 0");
  PrimeFactorization result{r, {}};
  for (std::uint64_t p = 2; p * p <= r; ++p) {
    if (r % p != 0) continue;
    unsigned exponent = 0;
    while (r % p == 0) {
      r /= p;
      ++exponent;
    }
    result.factors.push_back({p, exponent});
  }
  if (r > 1) result.factors.push_back({r, 1});
  return result;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

// Non-negative inputs; egcd(a, 0) = (a, 1, 0).
ExtGcd egcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  const ExtGcd inner = egcd(b, a % b);
  return {inner.gcd, inner.v, inner.u - (a / b) * inner.v};
}

}  // namespace

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw Error(ErrorKind::BothZero, "gcd(0, 0) is undefined");
  ExtGcd r = egcd(a < 0 ? -a : a, b < 0 ? -b : b);
  if (a < 0) r.u = -r.u;
  if (b < 0) r.v = -r.v;
  return r;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {
__extension__ using Wide = __int128;
}  // namespace

bool BezoutCertificate::verify() const {
  if (inputs.empty() || inputs.size() != coefficients.size() || gcd == 0) return false;
  Wide sum = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i] % gcd != 0) return false;
    sum += static_cast<Wide>(coefficients[i]) * static_cast<Wide>(inputs[i]);
  }
  return sum == static_cast<Wide>(gcd);
}

BezoutCertificate multi_bezout(std::span<const std::uint64_t> q) {
  if (q.empty()) throw Error(ErrorKind::InvalidArgument, "multi_bezout needs at least one input");
  BezoutCertificate cert;
  cert.inputs.assign(q.begin(), q.end());
  for (std::uint64_t x : q) {
    if (x == 0) throw Error(ErrorKind::InvalidArgument, "multi_bezout inputs must be positive");
  }
  // Invariant: sum coefficients[i] * q[i] = g over the prefix folded so far.
  auto g = static_cast<std::int64_t>(q[0]);
  cert.coefficients.push_back(1);
  for (std::size_t i = 1; i < q.size(); ++i) {
    const ExtGcd step = ext_gcd(g, static_cast<std::int64_t>(q[i]));
    for (auto& c : cert.coefficients) c *= step.u;
    cert.coefficients.push_back(step.v);
    g = step.gcd;
  }
  cert.gcd = static_cast<std::uint64_t>(g);
  return cert;
}

}  // namespace powcom::arith
