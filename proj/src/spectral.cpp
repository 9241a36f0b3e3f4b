#include "tautilt/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tautilt {

namespace {

long double to_real(const BigInt& x) { return x.convert_to<long double>(); }

Complex ipow(Complex base, int exponent) {
    Complex out = 1;
    for (; exponent > 0; exponent >>= 1) {
        if (exponent & 1) out *= base;
        base *= base;
    }
    return out;
}

std::vector<long double> real_coeffs(const CharPoly& poly) {
    std::vector<long double> out;
    out.reserve(poly.coeffs.size());
    for (const auto& c : poly.coeffs) out.push_back(to_real(c));
    return out;
}

Complex newton_polish(const CharPoly& poly, Complex x) {
    long double best = poly.evaluate_abs(x);
    for (int iter = 0; iter < 100 && best > 0; ++iter) {
        const Complex d = poly.derivative(x);
        if (std::abs(d) == 0) break;
        const Complex next = x - poly.evaluate(x) / d;
        const long double res = poly.evaluate_abs(next);
        if (!(res < best)) break;
        x = next;
        best = res;
    }
    return x;
}

// Snaps numerically real roots onto the axis and makes conjugate partners
// exact mirror images, so sorting is stable across platforms.
void symmetrize(const CharPoly& poly, std::vector<Complex>& roots) {
    std::vector<Complex> upper, lower, real;
    for (const auto& z : roots) {
        const long double scale = std::max<long double>(1, std::abs(z));
        if (std::abs(z.imag()) <= 1e-9L * scale) {
            real.push_back(newton_polish(poly, Complex(z.real(), 0)));
            real.back().imag(0);
        } else if (z.imag() > 0) {
            upper.push_back(z);
        } else {
            lower.push_back(z);
        }
    }
    if (upper.size() != lower.size()) {
        throw ConvergenceError("complex roots do not pair into conjugates", 0);
    }
    std::vector<bool> used(lower.size(), false);
    roots = real;
    for (const auto& z : upper) {
        std::size_t best = lower.size();
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (used[k]) continue;
            if (best == lower.size() || std::abs(lower[k] - std::conj(z)) < std::abs(lower[best] - std::conj(z))) {
                best = k;
            }
        }
        used[best] = true;
        const Complex mid((z.real() + lower[best].real()) / 2, (z.imag() - lower[best].imag()) / 2);
        roots.push_back(mid);
        roots.push_back(std::conj(mid));
    }
}

}  // namespace

Complex CharPoly::evaluate(const Complex& x) const {
    Complex acc = 0;
    for (const auto& c : coeffs) acc = acc * x + to_real(c);
    return acc;
}

Complex CharPoly::derivative(const Complex& x) const {
    Complex acc = 0;
    for (int i = 0; i < r; ++i) acc = acc * x + to_real(coeffs[static_cast<std::size_t>(i)]) * static_cast<long double>(r - i);
    return acc;
}

long double CharPoly::max_abs_coeff() const {
    long double out = 0;
    for (const auto& c : coeffs) out = std::max(out, std::abs(to_real(c)));
    return out;
}

CharPoly char_poly(int r) {
    if (r < 1) throw std::invalid_argument("char_poly needs r >= 1, got " + std::to_string(r));
    CountEngine engine;
    CharPoly poly;
    poly.r = r;
    poly.coeffs.push_back(1);
    for (int i = 1; i <= r; ++i) poly.coeffs.push_back(-engine.catalan(i - 1));
    return poly;
}

RootSet find_roots(const CharPoly& poly, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const int r = poly.r;
    const auto c = real_coeffs(poly);

    // Companion matrix of the monic polynomial: ones on the subdiagonal,
    // last column -c_r, ..., -c_1.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(r, r);
    for (int i = 1; i < r; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < r; ++i) companion(i, r - 1) = -static_cast<double>(c[static_cast<std::size_t>(r - i)]);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue solver failed", -1);

    RootSet out;
    for (int i = 0; i < r; ++i) {
        const auto z = solver.eigenvalues()[i];
        out.roots.push_back(newton_polish(poly, Complex(z.real(), z.imag())));
    }
    symmetrize(poly, out.roots);
    std::sort(out.roots.begin(), out.roots.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    const long double bound = static_cast<long double>(tol) * poly.max_abs_coeff();
    long double worst = 0;
    for (const auto& z : out.roots) {
        out.residuals.push_back(poly.evaluate_abs(z));
        worst = std::max(worst, out.residuals.back());
    }
    if (worst > bound) {
        std::ostringstream msg;
        msg << "root residual " << static_cast<double>(worst) << " exceeds bound " << static_cast<double>(bound)
            << " for r=" << r;
        throw ConvergenceError(msg.str(), worst);
    }
    for (std::size_t i = 0; i < out.roots.size(); ++i) {
        for (std::size_t j = i + 1; j < out.roots.size(); ++j) {
            out.min_gap = std::min(out.min_gap, std::abs(out.roots[i] - out.roots[j]));
        }
    }
    return out;
}

std::vector<Complex> expand_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> poly{1};
    for (const auto& z : roots) {
        poly.push_back(0);
        for (std::size_t k = poly.size() - 1; k >= 1; --k) poly[k] -= z * poly[k - 1];
    }
    return poly;
}

double vieta_error(const CharPoly& poly, const RootSet& roots) {
    const auto rebuilt = expand_roots(roots.roots);
    long double worst = 0;
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
        const long double exact = to_real(poly.coeffs[i]);
        worst = std::max(worst, std::abs(rebuilt[i] - exact) / std::abs(exact));
    }
    return static_cast<double>(worst);
}

CheckReport power_sum_check(CountEngine& engine, int r, int n_max, double tol) {
    CheckReport report{r, n_max, 0.0, false, {}};
    if (n_max < 1) return report;
    const auto roots = find_roots(char_poly(r)).roots;
    std::vector<Complex> powers = roots;
    for (int n = 1; n <= n_max; ++n) {
        Complex sum = 0;
        for (const auto& p : powers) sum += p;
        const long double exact = to_real(engine.t_cyc(r, n));
        const long double rel = std::abs(sum.real() - exact) / exact;
        report.max_rel_error = std::max(report.max_rel_error, static_cast<double>(rel));
        if (rel > tol || std::abs(sum.imag()) > tol * exact) {
            std::ostringstream msg;
            msg << "power sum check failed at r=" << r << ", n=" << n << ": got " << static_cast<double>(sum.real())
                << (sum.imag() < 0 ? "-" : "+") << static_cast<double>(std::abs(sum.imag())) << "i, expected "
                << engine.t_cyc(r, n);
            throw CheckFailure(msg.str());
        }
        for (std::size_t i = 0; i < powers.size(); ++i) powers[i] *= roots[i];
    }
    return report;
}

CheckReport homog_check(CountEngine& engine, int r, int n_max, double tol) {
    CheckReport report{r, n_max, 0.0, false, {}};
    const auto found = find_roots(char_poly(r));
    if (found.min_gap <= kMinRootGap) {
        report.skipped = true;
        std::ostringstream msg;
        msg << "skipped: roots of F_" << r << " closer than " << static_cast<double>(kMinRootGap) << " (min gap "
            << static_cast<double>(found.min_gap) << ")";
        report.notice = msg.str();
        return report;
    }
    const auto& roots = found.roots;
    std::vector<Complex> weights;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Complex denom = 1;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j != i) denom *= roots[i] - roots[j];
        }
        weights.push_back(ipow(roots[i], r - 1) / denom);
    }
    for (int n = 0; n <= n_max; ++n) {
        Complex sum = 0;
        for (std::size_t i = 0; i < roots.size(); ++i) sum += weights[i] * ipow(roots[i], n);
        const long double exact = to_real(engine.t_lin(r, n));
        const long double rel = std::abs(sum.real() - exact) / exact;
        report.max_rel_error = std::max(report.max_rel_error, static_cast<double>(rel));
        if (rel > tol || std::abs(sum.imag()) > tol * exact) {
            std::ostringstream msg;
            msg << "homogeneous check failed at r=" << r << ", n=" << n << ": got "
                << static_cast<double>(sum.real()) << ", expected " << engine.t_lin(r, n);
            throw CheckFailure(msg.str());
        }
    }
    return report;
}

double dominant_growth(int r) {
    const auto roots = find_roots(char_poly(r)).roots;
    long double best = 0;
    for (const auto& z : roots) best = std::max(best, std::abs(z));
    return static_cast<double>(best);
}

}  // namespace tautilt
