#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grassmann/scalar.hpp"
#include "grassmann/trials.hpp"

namespace grassmann::cli {

enum class Command { Eigenpairs, CheckCh, CheckQuasiInverse, CheckPrech, CheckLeibniz, Demo };

struct RunConfig {
  Command command = Command::Demo;
  DomainKind domain = DomainKind::Integers;
  std::optional<std::string> matrix;  // path or inline JSON
  std::optional<int> n;               // inferred from the matrix, else 3 (5 for demo)
  std::optional<int> trunc;           // default 2n
  std::uint64_t seed = 1;
  int trials = 100;
  bool json = false;
  Execution execution = Execution::Parallel;
};

inline constexpr int kExitHolds = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Writes one line per result (summary text or JSON report) and, in text mode,
// a closing tally. Returns kExitHolds iff every result holds.
int emit(const std::vector<TrialResult>& results, bool json, std::ostream& out);

// Executes a parsed configuration. Returns 0 when every check holds, 1 on a
// theorem violation, 2 on bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (flags --semiring --matrix --n --trunc --seed --trials --json,
// GRASSMANN_SEED as seed fallback) and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grassmann::cli
