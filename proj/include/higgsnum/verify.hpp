#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace higgsnum {

enum class Execution { Serial, Parallel };

struct SuiteResult {
  std::string name;
  std::uint64_t seed = 0;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // message of the lowest-index failing case

  bool passed() const { return failures == 0 && cases > 0; }
};

/// ring, chi, adjunction, olympic, discriminant, partition, hodge
const std::vector<std::string>& suite_names();

constexpr std::uint64_t kDefaultSeed = 20240917;

/// explicit flag > HIGGS_SEED environment variable > kDefaultSeed.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag);

/// Runs one named suite. Cases draw from an RNG keyed on (seed, suite, case
/// index), so serial and parallel runs see identical inputs and report
/// identical results.
SuiteResult run_suite(std::string_view name, std::uint64_t seed, Execution exec = Execution::Parallel);

/// A case returns an error message on failure.
using CaseFn = std::function<std::optional<std::string>(std::uint64_t index)>;

/// Evaluates cases [0, n). Failures are counted; the reported message is the
/// one with the lowest index regardless of scheduling.
SuiteResult run_cases(std::string name, std::uint64_t seed, std::uint64_t n, const CaseFn& fn,
                      Execution exec);

/// Number of partitions of n into at most k parts by the recurrence
/// p(n, ≤k) = p(n−k, ≤k) + p(n, ≤k−1).
std::uint64_t partition_count_recurrence(std::int64_t n, std::int64_t k);

}  // namespace higgsnum
