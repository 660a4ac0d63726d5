// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Runtime bounds are part of the criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "powcom/arith.hpp"
#include "powcom/catalog.hpp"
#include "powcom/cli.hpp"
#include "powcom/enumerate.hpp"
#include "powcom/law.hpp"
#include "powcom/property.hpp"
#include "powcom/scan.hpp"
#include "powcom/subgroup.hpp"
#include "powcom/theorems.hpp"

namespace {

using namespace powcom;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;  // 0 = unbounded
  std::function<Outcome()> body;
};

const std::vector<ExponentPair> kPropertyPairs{{2, 3}, {3, 4}, {2, 5}};
const std::vector<ExponentPair> kScanPairs{{2, 3}, {3, 4}, {2, 5}, {4, 9}};

std::vector<Element> ids(const SubgroupSet& h) { return {h.elements().begin(), h.elements().end()}; }

std::vector<FiniteGroup> enumerated_through(std::size_t max_order) {
  Limits limits;
  limits.enumeration_cap = max_order;
  std::vector<FiniteGroup> out;
  for (std::size_t n = 1; n <= max_order; ++n) {
    for (auto& g : enumerate_order(n, limits)) out.push_back(std::move(g));
  }
  return out;
}

Outcome s3_facts() {
  Outcome o;
  const FiniteGroup s3 = make("S3");
  const auto squares = power_commute(s3, 2);
  o.require(squares.holds, "squares of S3 do not commute");
  o.require(squares.image.size() == 3, "image of squaring has " + std::to_string(squares.image.size()) + " elements");
  const SubgroupSet image(s3, squares.image);
  bool cyclic_by_3_cycle = false;
  for (Element g : squares.image) cyclic_by_3_cycle |= element_order(s3, g) == 3;
  o.require(image.is_subgroup() && cyclic_by_3_cycle, "image of squaring is not generated by a 3-cycle");
  const auto report = satisfies_p(s3, 2, 3);
  o.require(!report.satisfies_p, "S3 reported to satisfy the (2,3) property");
  o.require(report.witness && witness_is_violation(s3, *report.witness), "witness is not a violation");
  o.require(!is_abelian(s3), "S3 reported abelian");
  o.detail = o.pass ? "squares commute, image {" + std::to_string(squares.image.size()) +
                          " elements}, cube witness a=" + std::to_string(report.witness->a) +
                          " b=" + std::to_string(report.witness->b)
                    : o.detail;
  return o;
}

Outcome abelian_decomposition_exhaustive() {
  Outcome o;
  const auto groups = enumerated_through(12);
  const ScanReport report = scan(groups, kScanPairs, 1);
  o.require(report.counterexamples.empty(), "nonabelian group satisfies the property");
  std::size_t satisfiers = 0;
  for (const auto& row : report.rows) {
    if (!row.satisfies_p) continue;
    ++satisfiers;
    for (const auto& g : groups) {
      if (g.name() != row.group) continue;
      const auto v = verify_abelian_decomposition(g, row.m, row.n);
      o.require(v.status == VerdictStatus::Holds && is_abelian(g) &&
                    v.evidence.internal_map_is_isomorphism && v.evidence.external_product_isomorphic,
                "decomposition failed for " + g.name());
    }
  }
  if (o.pass) {
    o.detail = std::to_string(groups.size()) + " classes x " + std::to_string(kScanPairs.size()) +
               " pairs, " + std::to_string(satisfiers) + " satisfiers rebuilt, 0 counterexamples";
  }
  return o;
}

Outcome enumeration_matches_naive() {
  Outcome o;
  std::string counts;
  for (std::size_t n = 1; n <= 8; ++n) {
    const std::size_t pruned = enumerate_order(n).size();
    const std::size_t naive = oracle::dedup_classes(oracle::all_labelled_tables(n)).size();
    o.require(pruned == naive, "order " + std::to_string(n) + ": pruned " + std::to_string(pruned) +
                                   " vs naive " + std::to_string(naive));
    counts += (counts.empty() ? "" : ",") + std::to_string(naive);
  }
  if (o.pass) o.detail = "class counts 1..8 = " + counts;
  return o;
}

Outcome torsion_subgroups() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& g : standard_catalog(24)) {
    if (!satisfies_p(g, 2, 3).satisfies_p) continue;
    for (std::uint64_t k = 1; k <= 24; ++k) {
      if (!arith::coprime(k, 2) && !arith::coprime(k, 3)) continue;
      const auto v = verify_torsion_subgroup(g, k, 2, 3);
      const bool ok = v.status == VerdictStatus::Holds && v.evidence.members.is_subgroup() &&
                      is_normal(g, v.evidence.members) && v.evidence.members.is_abelian() &&
                      ids(v.evidence.members) == oracle::k_torsion(g, k);
      o.require(ok, g.name() + " k=" + std::to_string(k));
      ++checks;
    }
  }
  const FiniteGroup s3 = make("S3");
  const auto squares = k_torsion_set(s3, 2);
  o.require(!squares.closed() && squares.escape.has_value(), "k_torsion_set(S3, 2) reported closed");
  if (squares.escape) {
    const auto [x, y] = *squares.escape;
    o.require(squares.members.contains(x) && squares.members.contains(y) &&
                  !squares.members.contains(s3.mul(x, y)),
              "escape pair does not escape");
  }
  if (o.pass) o.detail = std::to_string(checks) + " (group, k) checks; S3 involutions not closed";
  return o;
}

Outcome sylow_biconditional() {
  Outcome o;
  auto groups = standard_catalog(24);
  for (auto& g : enumerated_through(Limits::kEnumerationCeiling)) groups.push_back(std::move(g));
  std::size_t checks = 0;
  std::size_t unique = 0;
  for (const auto& g : groups) {
    for (const auto p : arith::factorize(g.order()).primes()) {
      const auto v = verify_sylow_criterion(g, p);
      const auto& ev = v.evidence;
      const bool one = ev.sylow_subgroups.size() == 1;
      bool ok = v.status == VerdictStatus::Holds && !ev.sylow_subgroups.empty() &&
                ev.power_set.closed() == one;
      if (one) {
        ok = ok && ids(ev.sylow_subgroups[0]) == oracle::k_torsion(g, ev.power_set.k);
        ++unique;
      }
      o.require(ok, g.name() + " p=" + std::to_string(p));
      ++checks;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(groups.size()) + " groups, " + std::to_string(checks) + " primes, " +
               std::to_string(unique) + " unique cases with P = G_{p^a}";
  }
  return o;
}

Outcome torsion_decomposition() {
  Outcome o;
  std::size_t elements = 0;
  for (const auto& g : standard_catalog(48)) {
    for (Element x = 0; x < g.order(); ++x) {
      const auto d = torsion_decompose(g, x);
      const std::string where = g.name() + " x=" + std::to_string(x);
      std::int64_t bezout = 0;
      Element rebuilt = 0;
      for (const auto& part : d.parts) {
        std::uint64_t pp = 1;
        for (unsigned i = 0; i < part.exponent; ++i) pp *= part.prime;
        o.require(arith::is_prime(part.prime) && pp == part.prime_power &&
                      element_order(g, part.part) == pp && part.cofactor * pp == d.order &&
                      part.part == power(g, x, static_cast<std::int64_t>(part.cofactor)),
                  where + " part order");
        bezout += part.coefficient * static_cast<std::int64_t>(part.cofactor);
        rebuilt = g.mul(rebuilt, power(g, part.part, part.coefficient));
        for (const auto& other : d.parts) {
          o.require(g.mul(part.part, other.part) == g.mul(other.part, part.part), where + " parts commute");
        }
      }
      o.require(d.order == element_order(g, x), where + " order");
      o.require(d.parts.empty() ? d.order == 1 : bezout == 1, where + " Bezout sum");
      o.require(rebuilt == x, where + " reconstruction");
      ++elements;
    }
  }
  if (o.pass) o.detail = std::to_string(elements) + " elements decomposed";
  return o;
}

Outcome law_engine_equivalence() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& g : standard_catalog(24)) {
    for (std::int64_t m = 1; m <= 12; ++m) {
      const auto fast = power_commute(g, static_cast<std::uint64_t>(m));
      const auto slow = holds(g, parse_law("[x^" + std::to_string(m) + ",y^" + std::to_string(m) + "]=1"));
      o.require(fast.holds == slow.holds, g.name() + " m=" + std::to_string(m));
      ++checks;
    }
  }
  if (o.pass) o.detail = std::to_string(checks) + " (group, m) pairs agree";
  return o;
}

Outcome heredity() {
  Outcome o;
  std::size_t subgroups = 0;
  std::size_t quotients = 0;
  for (const auto& g : standard_catalog(24)) {
    for (const auto& [m, n] : kPropertyPairs) {
      if (!satisfies_p(g, m, n).satisfies_p) continue;
      for (const auto& h : all_subgroups(g)) {
        o.require(satisfies_p(subgroup_as_group(h), m, n).satisfies_p, g.name() + " subgroup");
        ++subgroups;
        if (h.is_normal()) {
          o.require(satisfies_p(quotient(g, h), m, n).satisfies_p, g.name() + " quotient");
          ++quotients;
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(subgroups) + " subgroups, " + std::to_string(quotients) + " quotients";
  }
  return o;
}

Outcome scan_regression() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs{
      {"scan", "--max-order", "12", "--pairs", "2,3;3,4;2,5;4,9", "--enumerate"},
      {"scan", "--max-order", "48", "--pairs", "2,3;3,4;2,5;4,9", "--catalog"}};
  for (const auto& args : runs) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    o.require(code == cli::kOk, args.back() + " scan exit " + std::to_string(code));
    o.require(out.str().find("counterexamples: 0\n") != std::string::npos,
              args.back() + " scan reported counterexamples");
  }
  if (o.pass) o.detail = "enumerated and catalog scans exit 0 with no counterexamples";
  return o;
}

std::string format_seconds(double s) {
  char buf[32];
  if (s < 1e-3) {
    std::snprintf(buf, sizeof buf, "%.1f us", s * 1e6);
  } else if (s < 1.0) {
    std::snprintf(buf, sizeof buf, "%.1f ms", s * 1e3);
  } else {
    std::snprintf(buf, sizeof buf, "%.2f s", s);
  }
  return buf;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "S3: squares commute, (2,3) property fails, nonabelian", 1e-3, s3_facts},
      {"AC2", "every (m,n)-satisfier of order <= 12 is abelian and splits into Sylow factors", 60,
       abelian_decomposition_exhaustive},
      {"AC3", "pruned enumeration matches naive enumeration for orders 1-8", 300,
       enumeration_matches_naive},
      {"AC4", "k-torsion sets of (2,3)-satisfiers are normal abelian subgroups", 0, torsion_subgroups},
      {"AC5", "power set is a subgroup iff the Sylow subgroup is unique", 0, sylow_biconditional},
      {"AC6", "prime-power decomposition of every element of order <= 48 groups", 10,
       torsion_decomposition},
      {"AC7", "power_commute agrees with the law engine", 0, law_engine_equivalence},
      {"AC8", "subgroups and quotients inherit the property", 0, heredity},
      {"AC9", "scan harness finds no finite counterexample", 0, scan_regression},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.pass && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.pass = false;
      o.detail = "over budget of " + format_seconds(c.budget_seconds);
    }
    if (!o.pass) ++failures;
    std::printf("%s %s  %s [%s] (%s)\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                format_seconds(seconds).c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
