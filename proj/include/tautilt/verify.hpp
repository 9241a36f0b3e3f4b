#pragma once

// Cross-validation harness: brute-force enumeration against every counting
// formula, self-consistency of the formulas, reference tables and the
// spectral closed forms. Each group reports PASS/FAIL with the first
// counterexample.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "tautilt/count_engine.hpp"

namespace tautilt {

struct VerifyOptions {
    int n_max_lin = 8;
    int r_max_lin = 6;
    int n_max_cyc = 8;
    int r_max_cyc = 5;
    double tol = 1e-8;
    unsigned threads = 1;
    int random_kupisch = 200;
    int random_kupisch_n_max = 10;
    std::uint64_t seed = 20200618;
};

struct GroupResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<GroupResult> groups;
    bool passed() const;
};

/// Runs every group; `log`, when given, receives one line per group as it
/// finishes.
VerifyReport run_verification(const VerifyOptions& options, std::ostream* log = nullptr);

/// Uniformly random choice at each step of a valid linear Kupisch series
/// with n vertices: c_n = 1, c_a drawn from [1, c_{a+1} + 1].
std::vector<int> random_linear_kupisch(std::mt19937_64& rng, int n);

}  // namespace tautilt
