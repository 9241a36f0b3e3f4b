#pragma once

// Exact counting of (support) tau-tilting modules over Nakayama algebras.
//
// Uniform families, for the linear algebra with n vertices and radical
// power r (t_lin, s_lin, ps_lin) and its cyclic counterpart (t_cyc, s_cyc,
// ps_cyc), are memoized by (family, r, n). General linear algebras are
// memoized by Kupisch series. Every value with a second closed form or
// recurrence is computed both ways and compared; a mismatch throws
// InconsistencyError.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tautilt/algebra.hpp"

namespace tautilt {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { TLin, SLin, PsLin, TCyc, SCyc, PsCyc };

/// "t_lin", "s_lin", "ps_lin", "t_cyc", "s_cyc", "ps_cyc".
std::string to_string(Family family);
std::optional<Family> parse_family(std::string_view name);
inline constexpr Family kAllFamilies[] = {Family::TLin, Family::SLin, Family::PsLin,
                                          Family::TCyc, Family::SCyc, Family::PsCyc};

struct CountKey {
    Family family;
    int r;
    int n;

    auto operator<=>(const CountKey&) const = default;
};

/// Two evaluation routes of the same quantity disagreed.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class SelfCheck { On, Off };

class CountEngine {
public:
    explicit CountEngine(SelfCheck checks = SelfCheck::On) : checks_(checks) {}

    CountEngine(const CountEngine&) = delete;
    CountEngine& operator=(const CountEngine&) = delete;

    BigInt catalan(int i);

    BigInt t_lin(int r, int n);
    BigInt s_lin(int r, int n);
    BigInt ps_lin(int r, int n);
    BigInt t_cyc(int r, int n);
    BigInt s_cyc(int r, int n);
    BigInt ps_cyc(int r, int n);

    /// Dispatch on family; cyclic families reject n < 1.
    BigInt count(Family family, int r, int n);

    /// Counts over an arbitrary linear Nakayama algebra, recursing over the
    /// suffix algebras (vertices > i) and prefix algebras (vertices < i).
    BigInt tau_count_general(const AlgebraSpec& algebra);
    BigInt stau_count_general(const AlgebraSpec& algebra);
    BigInt ps_count_general(const AlgebraSpec& algebra);

    /// Support modules having S_1..S_ell as composition factors.
    BigInt v_count(const AlgebraSpec& algebra, int ell);
    /// Support modules over the uniform linear algebra avoiding the
    /// projective summands P_1..P_{n-r+1}; equals t_lin(r, n + 1).
    BigInt x_count(int r, int n);
    BigInt y_count(int r, int n, int ell);
    /// Support modules over the uniform cyclic algebra having
    /// S_n..S_{n-ell+1} but not S_{n-ell} as composition factors.
    BigInt k_count(int r, int n, int ell);

    /// L(1) = 1, L(2) = 3, L(n) = L(n-1) + L(n-2).
    BigInt lucas(int n);

    /// Pre-populates the memo table (cache load). Uniform families only.
    void seed(const CountKey& key, const BigInt& value);
    /// All memoized uniform-family values in key order.
    std::vector<std::pair<CountKey, BigInt>> snapshot() const;
    /// Number of uniform-family values computed (not seeded) so far.
    std::size_t fresh_computations() const;

private:
    struct GeneralCounts {
        BigInt tau;
        BigInt ps;
        BigInt s;
    };

    BigInt catalan_locked(int i);
    BigInt binomial_locked(int top, int bottom);
    BigInt t_lin_locked(int r, int n);
    BigInt s_lin_locked(int r, int n);
    BigInt t_cyc_locked(int r, int n);
    BigInt s_cyc_locked(int r, int n);
    BigInt ps_cyc_locked(int r, int n);
    const GeneralCounts& general_locked(const std::vector<int>& kupisch);

    const BigInt* find_locked(const CountKey& key) const;
    void store_locked(const CountKey& key, BigInt value);
    void require(bool ok, const std::string& what) const;

    SelfCheck checks_;
    mutable std::mutex mutex_;
    std::vector<BigInt> catalan_;
    std::map<CountKey, BigInt> memo_;
    std::map<std::vector<int>, GeneralCounts> general_;
    std::size_t fresh_ = 0;
};

}  // namespace tautilt
