#pragma once

// Reference values of t_lin, s_lin, t_cyc and s_cyc for 1 <= r <= 6 and
// 1 <= n <= 12, cell for cell as published, misprints included.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tautilt/count_engine.hpp"

namespace tautilt {

inline constexpr int kReferenceRMax = 6;
inline constexpr int kReferenceNMax = 12;

struct ReferenceTable {
    Family family;
    std::string caption;
    /// values[r - 1][n - 1]
    std::array<std::array<std::uint64_t, kReferenceNMax>, kReferenceRMax> values;

    std::uint64_t at(int r, int n) const {
        return values[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(n - 1)];
    }
};

/// Published tables in the order t_lin, s_lin, t_cyc, s_cyc.
const std::vector<ReferenceTable>& reference_tables();

/// Published cells known to be misprinted, with the value every
/// independent route (enumeration, both recurrences) produces.
struct ReferenceErratum {
    Family family;
    int r;
    int n;
    std::uint64_t published;
    std::uint64_t corrected;
};

std::span<const ReferenceErratum> reference_errata();

}  // namespace tautilt
