#include "grassmann/trials.hpp"

#include <exception>

#include <omp.h>

#include "grassmann/random_instances.hpp"

namespace grassmann {

std::vector<TrialResult> run_trials_serial(std::size_t count, std::uint64_t seed, const TrialFn& fn) {
  std::vector<TrialResult> results;
  results.reserve(count);
  for (std::size_t i = 0; i < count; ++i) results.push_back(fn(i, trial_seed(seed, i)));
  return results;
}

std::vector<TrialResult> run_trials_parallel(std::size_t count, std::uint64_t seed, const TrialFn& fn) {
  std::vector<TrialResult> results(count);
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      results[idx] = fn(idx, trial_seed(seed, idx));
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<TrialResult> run_trials(std::size_t count, std::uint64_t seed, const TrialFn& fn, Execution execution) {
  return execution == Execution::Serial ? run_trials_serial(count, seed, fn) : run_trials_parallel(count, seed, fn);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace grassmann
