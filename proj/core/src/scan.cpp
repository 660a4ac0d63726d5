#include "powcom/scan.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "powcom/arith.hpp"
#include "powcom/error.hpp"

namespace powcom {

ScanReport scan(const std::vector<FiniteGroup>& groups, const std::vector<ExponentPair>& pairs,
                unsigned workers) {
  for (const auto& [m, n] : pairs) {
    if (m == 0 || n == 0 || !arith::coprime(m, n)) {
      throw Error(ErrorKind::NotCoprime, "pair (" + std::to_string(m) + ", " + std::to_string(n) +
                                             ") is not a coprime pair of positive integers");
    }
  }
  std::vector<std::size_t> group_order(groups.size());
  std::iota(group_order.begin(), group_order.end(), std::size_t{0});
  std::stable_sort(group_order.begin(), group_order.end(), [&](std::size_t x, std::size_t y) {
    if (groups[x].order() != groups[y].order()) return groups[x].order() < groups[y].order();
    return groups[x].name() < groups[y].name();
  });
  std::vector<ExponentPair> sorted_pairs = pairs;
  std::stable_sort(sorted_pairs.begin(), sorted_pairs.end());

  struct Job {
    std::size_t group;
    ExponentPair pair;
  };
  std::vector<Job> jobs;
  for (std::size_t gi : group_order) {
    for (const auto& pair : sorted_pairs) jobs.push_back({gi, pair});
  }

  ScanReport report;
  report.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      const Job& job = jobs[i];
      report.rows[i] = satisfies_p(groups[job.group], job.pair.first, job.pair.second);
    }
  };
  const unsigned count = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < count; ++t) threads.emplace_back(worker);
  }

  for (const PropertyReport& row : report.rows) {
    ++report.summary.rows;
    if (row.satisfies_p && row.is_abelian) ++report.summary.p_and_abelian;
    if (row.satisfies_p && !row.is_abelian) {
      ++report.summary.p_and_nonabelian;
      report.counterexamples.push_back(row);
    }
    if (!row.satisfies_p && row.is_abelian) ++report.summary.not_p_and_abelian;
    if (!row.satisfies_p && !row.is_abelian) ++report.summary.not_p_and_nonabelian;
  }
  return report;
}

}  // namespace powcom
