#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qse {

struct SuiteOptions {
    long long trials = 0;  // 0 = suite default
    std::uint64_t seed = 0;
    int jobs = 0;  // 0 = QSE_JOBS env or hardware concurrency
};

struct SuiteResult {
    std::string name;
    long long trials = 0;
    long long failures = 0;
    long long skipped = 0;
    double max_violation = 0.0;  // worst signed violation; <= 0 means clean
    bool advisory = false;       // diagnostic suite: logged, never fails a run
    bool pass = false;
    std::vector<std::pair<std::string, double>> metrics;  // order-stable extras
};

// Randomized/deterministic verification suites, reproducible from
// (seed, trial index) and order-stable under any jobs count:
//   bks          trace inequality on random PSD pairs
//   fock         ladder algebra: commutators, vacuum moments, kernel bounds
//   coulomb      single-particle domination of the Coulomb energy
//   localization gradient bound for the nuclear partition of unity
//   dirac        lattice square identity + chiral projector symmetry
//   lt           negative-spectrum half moments vs V^2 (advisory)
//   projector    trace comparisons under contractions
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace qse
