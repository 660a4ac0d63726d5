#include "powcom/property.hpp"

#include <algorithm>
#include <chrono>

#include "powcom/arith.hpp"
#include "powcom/error.hpp"

namespace powcom {

namespace {

Element power_u(const FiniteGroup& g, Element a, std::uint64_t k) {
  Element result = kIdentity;
  while (k != 0) {
    if (k & 1U) result = g.mul(result, a);
    a = g.mul(a, a);
    k >>= 1U;
  }
  return result;
}

}  // namespace

PowerCommuteResult power_commute(const FiniteGroup& g, std::uint64_t m) {
  const std::size_t n = g.order();
  std::vector<Element> powers(n);
  std::vector<bool> in_image(n, false);
  for (Element a = 0; a < n; ++a) {
    powers[a] = power_u(g, a, m);
    in_image[powers[a]] = true;
  }
  PowerCommuteResult result;
  for (Element x = 0; x < n; ++x) {
    if (in_image[x]) result.image.push_back(x);
  }
  const auto& image = result.image;
  for (std::size_t i = 0; i < image.size() && result.holds; ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (g.mul(image[i], image[j]) != g.mul(image[j], image[i])) {
        result.holds = false;
        break;
      }
    }
  }
  if (result.holds) return result;

  // Only reached on failure: the first violating pair over all of G x G.
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (g.mul(powers[a], powers[b]) != g.mul(powers[b], powers[a])) {
        result.witness = PowerWitness{a, b, m};
        return result;
      }
    }
  }
  return result;
}

PropertyReport satisfies_p(const FiniteGroup& g, std::uint64_t m, std::uint64_t n,
                           bool allow_non_coprime) {
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidArgument, "exponents must be positive");
  const bool coprime = arith::coprime(m, n);
  if (!coprime && !allow_non_coprime) {
    throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) +
                                           ") = " + std::to_string(arith::gcd(m, n)));
  }
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report;
  report.group = g.name();
  report.order = g.order();
  report.m = m;
  report.n = n;
  report.theorems_applicable = coprime;

  const PowerCommuteResult first = power_commute(g, m);
  if (!first.holds) {
    report.witness = first.witness;
  } else {
    const PowerCommuteResult second = power_commute(g, n);
    if (!second.holds) report.witness = second.witness;
  }
  report.satisfies_p = !report.witness.has_value();
  report.is_abelian = is_abelian(g);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool witness_is_violation(const FiniteGroup& g, const PowerWitness& w) {
  if (w.a >= g.order() || w.b >= g.order()) return false;
  const Element x = power_u(g, w.a, w.exponent);
  const Element y = power_u(g, w.b, w.exponent);
  return g.mul(x, y) != g.mul(y, x);
}

}  // namespace powcom
