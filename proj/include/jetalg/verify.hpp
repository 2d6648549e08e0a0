#ifndef JETALG_VERIFY_HPP
#define JETALG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jetalg::verify {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct Failure {
    std::string inputs;
    std::string expected;
    std::string actual;
};

struct SuiteResult {
    std::string suite;
    int cases = 0;
    int passed = 0;
    int failed = 0;
    std::optional<Failure> first_failure;

    bool ok() const { return failed == 0; }
};

// The identity suites, in the order they are reported. Each one pins the
// sample counts, bounds and exact-equality checks of the corresponding
// acceptance criterion.
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, std::uint64_t seed);

std::vector<SuiteResult> run_all(std::uint64_t seed);

// One-line human description per suite, for reports.
std::string suite_description(const std::string& name);

} // namespace jetalg::verify

#endif
