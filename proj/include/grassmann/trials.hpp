#pragma once

// Seeded trial runner. Every trial derives its own seed from (run seed,
// trial index), so results are identical whichever executor runs them and
// are always returned in trial order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "grassmann/json_io.hpp"

namespace grassmann {

struct TrialResult {
  bool holds = true;
  std::string summary;  // one line, human readable
  Json report;          // full report object
};

using TrialFn = std::function<TrialResult(std::size_t index, std::uint64_t seed)>;

enum class Execution { Serial, Parallel };

// Reference executor: one trial after another on the calling thread.
std::vector<TrialResult> run_trials_serial(std::size_t count, std::uint64_t seed, const TrialFn& fn);

// OpenMP executor. The first exception thrown by a trial (lowest index) is
// rethrown after all trials finish.
std::vector<TrialResult> run_trials_parallel(std::size_t count, std::uint64_t seed, const TrialFn& fn);

std::vector<TrialResult> run_trials(std::size_t count, std::uint64_t seed, const TrialFn& fn,
                                    Execution execution = Execution::Parallel);

int max_threads();

}  // namespace grassmann
