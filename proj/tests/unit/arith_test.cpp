#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "powcom/arith.hpp"
#include "powcom/error.hpp"

namespace powcom::arith {
namespace {

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(12).factors, (std::vector<PrimePower>{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).factors.empty());
  EXPECT_EQ(factorize(360).factors, (std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(97).factors, (std::vector<PrimePower>{{97, 1}}));
  EXPECT_EQ(factorize(360).primes(), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_THROW(factorize(0), Error);
}

TEST(Factorize, RoundTripUpTo10000) {
  for (std::uint64_t r = 1; r <= 10000; ++r) {
    const auto f = factorize(r);
    EXPECT_EQ(f.value, r);
    std::uint64_t product = 1;
    std::uint64_t previous = 0;
    for (const auto& pp : f.factors) {
      ASSERT_TRUE(is_prime(pp.prime)) << r;
      ASSERT_GT(pp.prime, previous) << r;
      ASSERT_GE(pp.exponent, 1U);
      previous = pp.prime;
      product *= pp.value();
    }
    ASSERT_EQ(product, r);
  }
}

TEST(IsPrime, SmallValues) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  for (std::uint64_t p = 0; p < 30; ++p) {
    EXPECT_EQ(is_prime(p), std::find(primes.begin(), primes.end(), p) != primes.end()) << p;
  }
}

TEST(ExtGcd, Examples) {
  EXPECT_EQ(ext_gcd(3, 4), (ExtGcd{1, -1, 1}));
  for (std::int64_t k = 1; k < 20; ++k) EXPECT_EQ(ext_gcd(k, 1), (ExtGcd{1, 0, 1}));
  const auto r = ext_gcd(6, 10);
  EXPECT_EQ(r.gcd, 2);
  EXPECT_EQ(r.u * 6 + r.v * 10, 2);
  EXPECT_EQ(ext_gcd(0, 7).gcd, 7);
  EXPECT_EQ(ext_gcd(-7, 0).gcd, 7);
  try {
    ext_gcd(0, 0);
    FAIL() << "expected BothZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BothZero);
  }
}

TEST(ExtGcd, CertificateOnRandomPairs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> pick(-1'000'000, 1'000'000);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t a = pick(rng);
    const std::int64_t b = pick(rng);
    if (a == 0 && b == 0) continue;
    const auto r = ext_gcd(a, b);
    ASSERT_EQ(r.gcd, std::gcd(a, b)) << a << ' ' << b;
    ASSERT_GT(r.gcd, 0);
    ASSERT_EQ(r.u * a + r.v * b, r.gcd) << a << ' ' << b;
  }
}

TEST(Coprime, Examples) {
  EXPECT_TRUE(coprime(2, 3));
  for (std::uint64_t k = 1; k < 30; ++k) EXPECT_TRUE(coprime(1, k));
  EXPECT_FALSE(coprime(6, 10));
  EXPECT_EQ(gcd(0, 9), 9U);
}

TEST(MultiBezout, Examples) {
  const std::vector<std::uint64_t> a{3, 4};
  const auto c = multi_bezout(a);
  EXPECT_EQ(c.gcd, 1U);
  EXPECT_EQ(c.coefficients, (std::vector<std::int64_t>{-1, 1}));

  const std::vector<std::uint64_t> b{6, 10, 15};
  const auto d = multi_bezout(b);
  EXPECT_EQ(d.gcd, 1U);
  EXPECT_TRUE(d.verify());
  EXPECT_EQ(d.coefficients[0] * 6 + d.coefficients[1] * 10 + d.coefficients[2] * 15, 1);

  const std::vector<std::uint64_t> single{5};
  const auto e = multi_bezout(single);
  EXPECT_EQ(e.gcd, 5U);
  EXPECT_EQ(e.coefficients, std::vector<std::int64_t>{1});

  EXPECT_THROW(multi_bezout(std::vector<std::uint64_t>{}), Error);
  EXPECT_THROW(multi_bezout(std::vector<std::uint64_t>{4, 0}), Error);
}

TEST(MultiBezout, VerifyRejectsBadCertificates) {
  BezoutCertificate c{{6, 10}, 2, {2, -1}};
  EXPECT_TRUE(c.verify());
  c.coefficients = {1, 1};
  EXPECT_FALSE(c.verify());
  c = BezoutCertificate{{6, 10}, 4, {4, -2}};
  EXPECT_FALSE(c.verify());
}

std::vector<std::uint64_t> cofactors(std::uint64_t r) {
  std::vector<std::uint64_t> q;
  for (const auto& pp : factorize(r).factors) q.push_back(r / pp.value());
  return q;
}

TEST(MultiBezout, EverySubsetOfCofactorsUpTo5040) {
  for (std::uint64_t r = 1; r <= 5040; ++r) {
    const auto q = cofactors(r);
    for (std::uint32_t mask = 1; mask < (1U << q.size()); ++mask) {
      std::vector<std::uint64_t> subset;
      std::uint64_t expected = 0;
      for (std::size_t i = 0; i < q.size(); ++i) {
        if ((mask >> i) & 1U) {
          subset.push_back(q[i]);
          expected = std::gcd(expected, q[i]);
        }
      }
      const auto cert = multi_bezout(subset);
      ASSERT_EQ(cert.gcd, expected) << r;
      ASSERT_TRUE(cert.verify()) << r;
    }
  }
}

TEST(MultiBezout, CofactorsOfSeveralPrimesAreCoprime) {
  for (std::uint64_t r = 2; r <= 5040; ++r) {
    const auto q = cofactors(r);
    if (q.size() < 2) continue;
    std::uint64_t g = 0;
    for (auto x : q) g = std::gcd(g, x);
    ASSERT_EQ(g, 1U) << r;
    ASSERT_EQ(multi_bezout(q).gcd, 1U) << r;
  }
}

}  // namespace
}  // namespace powcom::arith
