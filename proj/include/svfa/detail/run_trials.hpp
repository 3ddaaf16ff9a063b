#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace svfa::detail {

template <class TrialFn>
SuiteReport run_trials(std::string_view id, std::size_t trials, std::uint64_t seed, bool parallel, TrialFn&& fn) {
  std::vector<TrialResult> results(trials);
  auto run_one = [&](std::size_t i) {
    Rng rng = Rng::for_trial(seed, i);
    results[i] = fn(rng);
  };

  const std::size_t workers =
      parallel ? std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), trials)) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < trials; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < trials; i = next++) run_one(i);
      });
    }
  }

  SuiteReport report;
  report.theorem_id = std::string(id);
  report.trials = trials;
  report.seed = seed;
  for (auto& r : results) {
    report.checks += r.checks;
    if (!r.failure) continue;
    if (report.violations++ == 0) report.first_failure = std::move(r.failure);
  }
  return report;
}

}  // namespace svfa::detail
