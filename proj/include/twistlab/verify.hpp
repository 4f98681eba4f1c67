#pragma once

#include "twistlab/kumjian.hpp"
#include "twistlab/twist.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistlab {

struct Failure {
    std::string case_name;
    std::string witness;
    std::string expected;
    std::string got;
};

/// Suite outcome. Serialization is byte-stable for a fixed
/// (suite, seed, samples) apart from elapsed_ms.
struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<Failure> failures;
    std::map<std::string, long> certificates;
    std::optional<double> max_gap;
    std::int64_t elapsed_ms = 0;

    bool pass() const { return failures.empty(); }
    std::string to_json() const;
};

using Trial = std::function<std::optional<Failure>(std::size_t)>;

/// Runs trials 0..n-1, each seeded independently by its index, and
/// returns the failures in index order. Exceptions escaping a trial are
/// recorded as failures. Parallelized over trials when OpenMP is on.
std::vector<Failure> run_trials(std::size_t n, const Trial& trial);

/// Reference runner with identical semantics, one trial at a time.
std::vector<Failure> run_trials_serial(std::size_t n, const Trial& trial);

const std::vector<std::string>& suite_names();

/// Trial counts the suites run with when none are requested.
std::size_t default_samples(const std::string& suite);

/// Dispatches by name; samples == 0 picks the suite default. Throws
/// UnknownSuite for names outside suite_names().
Report run_suite(const std::string& name, std::uint64_t seed, std::size_t samples);

} // namespace twistlab
