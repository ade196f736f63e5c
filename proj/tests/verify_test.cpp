#include <doctest.h>

#include <cstdlib>

#include "higgsnum/verify.hpp"
#include "test_support.hpp"

using namespace higgsnum;

namespace {

struct SeedEnv {
  explicit SeedEnv(const char* value) {
    if (const char* old = std::getenv("HIGGS_SEED")) saved = old;
    if (value) {
      setenv("HIGGS_SEED", value, 1);
    } else {
      unsetenv("HIGGS_SEED");
    }
  }
  ~SeedEnv() {
    if (saved) {
      setenv("HIGGS_SEED", saved->c_str(), 1);
    } else {
      unsetenv("HIGGS_SEED");
    }
  }
  std::optional<std::string> saved;
};

}  // namespace

TEST_CASE("every suite passes and serial matches parallel") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto a = run_suite(name, 7, Execution::Serial);
    const auto b = run_suite(name, 7, Execution::Parallel);
    CHECK(a.passed());
    CHECK(b.passed());
    CHECK(a.cases == b.cases);
    CHECK(a.failures == b.failures);
    CHECK(a.first_failure == b.first_failure);
    CHECK(a.seed == 7);
  }
  CHECK(suite_names().size() == 7);
  CHECK_THROWS_AS(run_suite("nope", 1), InputError);
}

TEST_CASE("seed resolution") {
  {
    SeedEnv env(nullptr);
    CHECK(resolve_seed(std::nullopt) == kDefaultSeed);
    CHECK(resolve_seed(5) == 5);
  }
  {
    SeedEnv env("12345");
    CHECK(resolve_seed(std::nullopt) == 12345);
    CHECK(resolve_seed(9) == 9);
  }
  {
    SeedEnv env("not-a-number");
    CHECK_THROWS_AS(resolve_seed(std::nullopt), InputError);
  }
}

TEST_CASE("run_cases reports the lowest failing index") {
  const CaseFn fn = [](std::uint64_t i) -> std::optional<std::string> {
    if (i % 97 == 13) return "bad " + std::to_string(i);
    if (i == 500) throw std::runtime_error("boom");
    return std::nullopt;
  };
  for (auto exec : {Execution::Serial, Execution::Parallel}) {
    const auto r = run_cases("probe", 3, 1000, fn, exec);
    CHECK(r.cases == 1000);
    CHECK(r.failures == 12);
    CHECK(r.first_failure == "bad 13");
    CHECK_FALSE(r.passed());
  }
  const auto ok = run_cases("probe", 3, 10, [](std::uint64_t) { return std::optional<std::string>{}; },
                            Execution::Parallel);
  CHECK(ok.passed());
  CHECK_FALSE(run_cases("probe", 3, 0, [](std::uint64_t) { return std::optional<std::string>{}; },
                        Execution::Serial)
                  .passed());
}

TEST_CASE("partition recurrence") {
  CHECK(partition_count_recurrence(0, 1) == 1);
  CHECK(partition_count_recurrence(5, 5) == 7);
  CHECK(partition_count_recurrence(6, 3) == 7);
  CHECK(partition_count_recurrence(10, 10) == 42);
  CHECK(partition_count_recurrence(3, 2) == 2);
}
