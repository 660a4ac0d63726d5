#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "powcom/catalog.hpp"
#include "powcom/enumerate.hpp"
#include "powcom/error.hpp"
#include "powcom/isomorphism.hpp"
#include "powcom/property.hpp"
#include "powcom/scan.hpp"

namespace powcom {
namespace {

Limits up_to_16() {
  Limits l;
  l.enumeration_cap = 16;
  return l;
}

std::size_t nonabelian_count(const std::vector<FiniteGroup>& groups) {
  return static_cast<std::size_t>(
      std::count_if(groups.begin(), groups.end(), [](const auto& g) { return !is_abelian(g); }));
}

TEST(Enumerate, SmallExamples) {
  EXPECT_EQ(enumerate_order(1).size(), 1U);

  const auto six = enumerate_order(6);
  ASSERT_EQ(six.size(), 2U);
  EXPECT_EQ(nonabelian_count(six), 1U);
  for (const auto& g : six) {
    EXPECT_TRUE(are_isomorphic(g, is_abelian(g) ? cyclic(6) : symmetric(3)));
  }

  const auto eight = enumerate_order(8);
  ASSERT_EQ(eight.size(), 5U);
  EXPECT_EQ(nonabelian_count(eight), 2U);
  int d4 = 0, q8 = 0;
  for (const auto& g : eight) {
    d4 += oracle::isomorphic_by_bijections(g, dihedral(4)) ? 1 : 0;
    q8 += oracle::isomorphic_by_bijections(g, quaternion()) ? 1 : 0;
  }
  EXPECT_EQ(d4, 1);
  EXPECT_EQ(q8, 1);
}

TEST(Enumerate, ClassCountsThrough16) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  const Limits limits = up_to_16();
  for (std::size_t n = 1; n <= 16; ++n) {
    EXPECT_EQ(enumerate_order(n, limits).size(), expected[n - 1]) << "order " << n;
  }
}

TEST(Enumerate, ClassesArePairwiseDistinctAndValid) {
  const Limits limits = up_to_16();
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto classes = enumerate_order(n, limits);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      EXPECT_EQ(classes[i].order(), n);
      EXPECT_FALSE(check_invariants(classes[i]).has_value());
      EXPECT_EQ(classes[i].name(), "G" + std::to_string(n) + "." + std::to_string(i + 1));
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        EXPECT_FALSE(oracle::isomorphic_by_backtracking(classes[i], classes[j])) << n;
      }
    }
  }
}

TEST(Enumerate, MatchesNaiveOracleThrough7) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto naive = oracle::dedup_classes(oracle::all_labelled_tables(n));
    EXPECT_EQ(enumerate_order(n).size(), naive.size()) << "order " << n;
  }
}

TEST(Enumerate, LabelledTableCountThrough6) {
  // Each class with automorphism group A accounts for (n-1)!/|A| labelled
  // tables with identity 0; the naive search finds them all without pruning.
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t factorial = 1;
    for (std::size_t k = 2; k < n; ++k) factorial *= k;
    std::size_t predicted = 0;
    for (const auto& g : enumerate_order(n)) {
      const std::size_t aut = automorphism_count(g);
      ASSERT_EQ(factorial % aut, 0U);
      predicted += factorial / aut;
    }
    EXPECT_EQ(oracle::all_labelled_tables(n).size(), predicted) << "order " << n;
  }
}

TEST(Enumerate, StatsCountSearchWork) {
  EnumerationStats stats;
  const auto classes = enumerate_order(12, {}, &stats);
  EXPECT_GE(stats.tables, classes.size());
  EXPECT_GE(stats.nodes, stats.tables);
}

TEST(Enumerate, CapsAreEnforced) {
  auto kind = [](std::size_t n, const Limits& limits) {
    try {
      enumerate_order(n, limits);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  EXPECT_EQ(kind(13, {}), ErrorKind::OrderCapExceeded);
  Limits high;
  high.enumeration_cap = 40;
  EXPECT_EQ(kind(17, high), ErrorKind::OrderCapExceeded);
}

TEST(Enumerate, NonabelianGroupsFailTheProperty) {
  std::vector<FiniteGroup> all;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& g : enumerate_order(n)) {
      all.push_back(g);
      if (is_abelian(g)) continue;
      const auto r = satisfies_p(g, 2, 3);
      EXPECT_FALSE(r.satisfies_p) << g.name();
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_TRUE(witness_is_violation(g, *r.witness));
    }
  }
  const auto report = scan(all, {{2, 3}});
  EXPECT_TRUE(report.counterexamples.empty());
  EXPECT_EQ(report.summary.p_and_nonabelian, 0U);
}

}  // namespace
}  // namespace powcom
