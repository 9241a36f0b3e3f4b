#pragma once

// The characteristic polynomial F_r(X) = X^r - C_0 X^{r-1} - ... - C_{r-1}
// of the tau-tilting recurrence, its complex roots, and numeric checks of
// the symmetric-function closed forms: the complete homogeneous
// polynomial H_n of the roots gives t_lin(r, n) and the power sum P_n gives
// t_cyc(r, n).

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "tautilt/count_engine.hpp"

namespace tautilt {

using Complex = std::complex<long double>;

struct CharPoly {
    int r = 1;
    /// c_0 = 1, c_i = -C_{i-1}; F_r(X) = sum_i c_i X^{r-i}.
    std::vector<BigInt> coeffs;

    long double evaluate_abs(const Complex& x) const { return std::abs(evaluate(x)); }
    Complex evaluate(const Complex& x) const;
    Complex derivative(const Complex& x) const;
    long double max_abs_coeff() const;
};

CharPoly char_poly(int r);

struct RootSet {
    /// Sorted by real part, then imaginary part. Conjugate pairs are exact
    /// conjugates of each other.
    std::vector<Complex> roots;
    /// |F_r(root)| per root.
    std::vector<long double> residuals;
    /// Minimum pairwise distance; infinity for a single root.
    long double min_gap = std::numeric_limits<long double>::infinity();
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, long double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}
    long double best_residual() const { return best_residual_; }

private:
    long double best_residual_;
};

/// Companion-matrix eigenvalues refined by Newton's method in extended
/// precision. Every residual must end up <= tol * max|c_i|.
RootSet find_roots(const CharPoly& poly, double tol = 1e-12);

/// Coefficients of prod_i (X - root_i), leading coefficient first.
std::vector<Complex> expand_roots(const std::vector<Complex>& roots);

/// Max relative error between the coefficients rebuilt from the roots and
/// the exact ones (the elementary symmetric polynomials of the roots are
/// (-1)^i c_i).
double vieta_error(const CharPoly& poly, const RootSet& roots);

struct CheckReport {
    int r = 0;
    int n_max = 0;
    double max_rel_error = 0.0;
    bool skipped = false;
    std::string notice;
};

class CheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// sum_i root_i^n against t_cyc(r, n) for 1 <= n <= n_max. Throws
/// CheckFailure naming the first (r, n) outside tol.
CheckReport power_sum_check(CountEngine& engine, int r, int n_max, double tol = 1e-8);

/// H_n(roots) = sum_i root_i^{n+r-1} / prod_{j != i}(root_i - root_j)
/// against t_lin(r, n) for 0 <= n <= n_max. Skipped (report.skipped) when
/// two roots are closer than kMinRootGap.
CheckReport homog_check(CountEngine& engine, int r, int n_max, double tol = 1e-8);

inline constexpr long double kMinRootGap = 1e-6L;

/// Largest root modulus.
double dominant_growth(int r);

}  // namespace tautilt
