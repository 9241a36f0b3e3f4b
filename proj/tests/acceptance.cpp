// Acceptance suite: one PASS/FAIL line per criterion, with the first
// counterexample or the measured figures.
//
//   acceptance [--allow-fail N]...
//
// Exit status is 0 when every failing criterion was named by --allow-fail.
// The FAIL line is printed either way.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/count_engine.hpp"
#include "tautilt/oracle.hpp"
#include "tautilt/reference_tables.hpp"
#include "tautilt/spectral.hpp"
#include "tautilt/table.hpp"
#include "tautilt/verify.hpp"

using namespace tautilt;

namespace {

// Pinned tolerances and budgets.
constexpr double kRelTol = 1e-8;
constexpr double kTableBudgetSeconds = 1.0;
constexpr double kOracleBudgetSeconds = 300.0;
constexpr double kSpectralBudgetSeconds = 1.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

std::string cell(const std::string& what, const AlgebraSpec& a) {
    std::ostringstream out;
    out << what << " on " << to_string(a.shape()) << " [";
    for (int i = 0; i < a.n(); ++i) out << (i ? "," : "") << a.loewy(i + 1);
    out << "]";
    return out.str();
}

template <class A, class B>
void expect_eq(Outcome& o, const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", expected " << want;
        o.fail(msg.str());
    }
}

BigInt binomial(int top, int bottom) {
    BigInt out = 1;
    for (int k = 1; k <= bottom; ++k) out = out * (top - bottom + k) / k;
    return out;
}

// Enumerations shared by criteria 2, 4, 5 and 10.
struct Enumerated {
    AlgebraSpec algebra;
    int r = 0;
    std::vector<ModuleSet> tilting;
    std::vector<SupportPair> pairs;
};

std::vector<Enumerated>& verification_range() {
    static std::vector<Enumerated> range = [] {
        std::vector<Enumerated> out;
        for (int r = 1; r <= 6; ++r) {
            for (int n = 1; n <= 8; ++n) out.push_back({make_uniform(Shape::Linear, n, r), r, {}, {}});
        }
        for (int r = 1; r <= 5; ++r) {
            for (int n = 1; n <= 8; ++n) out.push_back({make_uniform(Shape::Cyclic, n, r), r, {}, {}});
        }
        for (auto& e : out) {
            e.tilting = enumerate_tau_tilting(e.algebra);
            e.pairs = enumerate_support_tau_tilting(e.algebra);
        }
        return out;
    }();
    return range;
}

std::vector<AlgebraSpec> random_algebras(int count, int n_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, n_max);
    std::vector<AlgebraSpec> out;
    for (int i = 0; i < count; ++i) out.push_back(make_linear_kupisch(random_linear_kupisch(rng, size(rng))));
    return out;
}

AlgebraSpec below(const AlgebraSpec& a, int i) {
    VertexSet killed;
    for (int v = i; v <= a.n(); ++v) killed.push_back(v);
    const auto q = quotient_kill(a, killed);
    return q.components.empty() ? AlgebraSpec{} : q.components.front().algebra;
}

AlgebraSpec above(const AlgebraSpec& a, int i) {
    VertexSet killed;
    for (int v = 1; v <= i; ++v) killed.push_back(v);
    const auto q = quotient_kill(a, killed);
    return q.components.empty() ? AlgebraSpec{} : q.components.front().algebra;
}

// ---------------------------------------------------------------------------

Outcome table_reproduction() {
    Outcome o;
    const auto start = Clock::now();
    CountEngine engine;
    std::vector<std::string> mismatches;
    int matched = 0;
    for (const auto& ref : reference_tables()) {
        const auto text = render_table(engine, {ref.family, kReferenceRMax, kReferenceNMax, TableFormat::Markdown});
        std::istringstream in(text);
        std::string line;
        std::getline(in, line);
        std::getline(in, line);
        for (int r = 1; r <= kReferenceRMax; ++r) {
            std::getline(in, line);
            std::vector<std::string> fields;
            std::istringstream row(line);
            for (std::string f; std::getline(row, f, '|');) {
                const auto b = f.find_first_not_of(' ');
                if (b != std::string::npos) fields.push_back(f.substr(b, f.find_last_not_of(' ') - b + 1));
            }
            for (int n = 1; n <= kReferenceNMax; ++n) {
                const std::string got = static_cast<std::size_t>(n) < fields.size() ? fields[static_cast<std::size_t>(n)] : "";
                const std::string want = std::to_string(ref.at(r, n));
                if (got == want) {
                    ++matched;
                } else {
                    mismatches.push_back(to_string(ref.family) + " r=" + std::to_string(r) + " n=" +
                                         std::to_string(n) + ": rendered " + got + ", published " + want);
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream msg;
    msg << matched << "/288 cells match in " << elapsed << " s";
    o.detail = msg.str();
    for (const auto& m : mismatches) {
        o.passed = false;
        o.detail += "; " + m;
    }
    if (!mismatches.empty()) {
        // Independent evidence for every mismatched t_cyc cell.
        for (const auto& e : reference_errata()) {
            if (e.family != Family::TCyc) continue;
            const auto count = enumerate_tau_tilting(make_uniform(Shape::Cyclic, e.n, e.r)).size();
            o.detail += "; brute-force enumeration (cyclic n=" + std::to_string(e.n) + ", r=" + std::to_string(e.r) +
                        ") gives " + std::to_string(count);
        }
    }
    if (elapsed >= kTableBudgetSeconds) o.fail(msg.str() + " exceeds the time budget");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto start = Clock::now();
    auto& range = verification_range();
    CountEngine engine;
    for (const auto& e : range) {
        const bool lin = e.algebra.shape() == Shape::Linear;
        const int n = e.algebra.n();
        expect_eq(o, BigInt(e.tilting.size()), lin ? engine.t_lin(e.r, n) : engine.t_cyc(e.r, n), cell("|tau-tilt|", e.algebra));
        expect_eq(o, BigInt(e.pairs.size()), lin ? engine.s_lin(e.r, n) : engine.s_cyc(e.r, n), cell("|s-tilt|", e.algebra));
    }
    const double elapsed = seconds_since(start);
    if (o.passed) o.detail = std::to_string(range.size()) + " algebras, " + std::to_string(elapsed) + " s";
    if (elapsed >= kOracleBudgetSeconds) o.fail("enumeration took " + std::to_string(elapsed) + " s");
    return o;
}

Outcome four_vertex_example() {
    Outcome o;
    const auto a = make_linear_kupisch({2, 3, 2, 1});
    CountEngine engine;
    const auto pairs = enumerate_support_tau_tilting(a);
    const auto split = filter_proper_np(a, pairs);
    expect_eq(o, enumerate_tau_tilting(a).size(), 7u, "oracle |tau-tilt|");
    expect_eq(o, split.proper.size(), 26u, "oracle |ps-tilt|");
    expect_eq(o, pairs.size(), 33u, "oracle |s-tilt|");
    expect_eq(o, engine.tau_count_general(a), 7, "engine |tau-tilt|");
    expect_eq(o, engine.ps_count_general(a), 26, "engine |ps-tilt|");
    expect_eq(o, engine.stau_count_general(a), 33, "engine |s-tilt|");

    const int tau_below[] = {1, 1, 2, 3};
    const int s_above[] = {14, 5, 2, 1};
    const int s_below[] = {1, 2, 5, 12};
    const int tau_above[] = {5, 2, 1, 1};
    for (int i = 1; i <= 4; ++i) {
        const auto lo = below(a, i);
        const auto hi = above(a, i);
        const auto k = static_cast<std::size_t>(i - 1);
        const std::string at = " at i=" + std::to_string(i);
        expect_eq(o, enumerate_tau_tilting(lo).size(), static_cast<std::size_t>(tau_below[k]), "oracle |tau-tilt <i|" + at);
        expect_eq(o, enumerate_support_tau_tilting(hi).size(), static_cast<std::size_t>(s_above[k]), "oracle |s-tilt >i|" + at);
        expect_eq(o, enumerate_support_tau_tilting(lo).size(), static_cast<std::size_t>(s_below[k]), "oracle |s-tilt <i|" + at);
        expect_eq(o, enumerate_tau_tilting(hi).size(), static_cast<std::size_t>(tau_above[k]), "oracle |tau-tilt >i|" + at);
        expect_eq(o, engine.tau_count_general(lo), tau_below[k], "engine |tau-tilt <i|" + at);
        expect_eq(o, engine.stau_count_general(hi), s_above[k], "engine |s-tilt >i|" + at);
        expect_eq(o, engine.stau_count_general(lo), s_below[k], "engine |s-tilt <i|" + at);
        expect_eq(o, engine.tau_count_general(hi), tau_above[k], "engine |tau-tilt >i|" + at);
    }
    if (o.passed) o.detail = "7 / 26 / 33 and all 16 sub-table cells";
    return o;
}

std::vector<AlgebraSpec> extra_linear() {
    auto out = random_algebras(100, 8, 20240601);
    out.push_back(make_linear_kupisch({2, 3, 2, 1}));
    return out;
}

Outcome bijection_count() {
    Outcome o;
    std::size_t checked = 0;
    auto check = [&](const AlgebraSpec& a, const std::vector<ModuleSet>& tilting, const std::vector<SupportPair>& pairs) {
        expect_eq(o, filter_proper_np(a, pairs).proper_np.size(), tilting.size(), cell("|ps-tilt_np|", a));
        ++checked;
    };
    for (const auto& e : verification_range()) check(e.algebra, e.tilting, e.pairs);
    for (const auto& a : extra_linear()) check(a, enumerate_tau_tilting(a), enumerate_support_tau_tilting(a));
    if (o.passed) o.detail = std::to_string(checked) + " algebras";
    return o;
}

Outcome p1_summand() {
    Outcome o;
    std::size_t modules = 0;
    auto check = [&](const AlgebraSpec& a, const std::vector<ModuleSet>& tilting) {
        for (const auto& m : tilting) {
            ++modules;
            if (!m.contains({1, a.loewy(1)})) o.fail(to_string(m) + " lacks P_1 " + cell("", a));
        }
    };
    for (const auto& e : verification_range()) {
        if (e.algebra.shape() == Shape::Linear) check(e.algebra, e.tilting);
    }
    for (const auto& a : extra_linear()) check(a, enumerate_tau_tilting(a));
    if (o.passed) o.detail = std::to_string(modules) + " tau-tilting modules";
    return o;
}

Outcome two_paths() {
    Outcome o;
    CountEngine engine;
    const int r_max = 6, n_max = 30;
    for (int r = 1; r <= r_max; ++r) {
        auto t = [&](int n) { return n < 0 ? BigInt(0) : engine.t_lin(r, n); };
        auto s = [&](int n) { return n < 0 ? BigInt(0) : engine.s_lin(r, n); };
        auto c = [&](int i) { return engine.catalan(i); };

        // t~ by the weighted sum over t and by its own recurrence.
        std::vector<BigInt> t_sum(n_max + 1), t_rec(n_max + 1);
        for (int n = 1; n <= n_max; ++n) {
            for (int i = 1; i <= r; ++i) t_sum[n] += i * c(i - 1) * t(n - i);
            if (n <= r) {
                t_rec[n] = binomial(2 * n - 1, n - 1);
            } else {
                for (int i = 1; i <= r; ++i) t_rec[n] += c(i - 1) * t_rec[n - i];
            }
            const std::string at = " r=" + std::to_string(r) + " n=" + std::to_string(n);
            expect_eq(o, t_sum[n], t_rec[n], "t_cyc sum vs recurrence" + at);
            expect_eq(o, engine.t_cyc(r, n), t_sum[n], "engine t_cyc" + at);
        }

        // s by its recurrence and by the convolution.
        std::vector<BigInt> s_rec(n_max + 1);
        s_rec[0] = 1;
        for (int n = 1; n <= n_max; ++n) {
            s_rec[n] = 2 * s_rec[n - 1];
            for (int i = 2; i <= r && i <= n; ++i) s_rec[n] += c(i - 1) * s_rec[n - i];
            BigInt conv = t(n);
            for (int i = 1; i <= n; ++i) conv += t(i - 1) * s_rec[n - i];
            const std::string at = " r=" + std::to_string(r) + " n=" + std::to_string(n);
            expect_eq(o, s_rec[n], conv, "s_lin recurrence vs convolution" + at);
            expect_eq(o, engine.s_lin(r, n), s_rec[n], "engine s_lin" + at);
        }

        // s~ as ps~ + t~ and by its recurrence.
        std::vector<BigInt> s_cyc_rec(n_max + 1);
        for (int n = 1; n <= n_max; ++n) {
            BigInt ps = n * t(n - 1);
            for (int i = 1; i <= n - 1; ++i) ps += i * t(i - 1) * s(n - i - 1);
            const BigInt direct = ps + t_sum[n];
            if (n <= r) {
                s_cyc_rec[n] = binomial(2 * n, n);
            } else {
                s_cyc_rec[n] = 2 * s_cyc_rec[n - 1];
                for (int i = 2; i <= r; ++i) s_cyc_rec[n] += c(i - 1) * s_cyc_rec[n - i];
            }
            const std::string at = " r=" + std::to_string(r) + " n=" + std::to_string(n);
            expect_eq(o, direct, s_cyc_rec[n], "s_cyc ps+t vs recurrence" + at);
            expect_eq(o, engine.s_cyc(r, n), direct, "engine s_cyc" + at);
        }
    }

    // Proper support counts of general linear algebras, split at the first
    // missing composition factor from either end.
    std::map<std::vector<int>, std::pair<BigInt, BigInt>> memo;  // (tau, s)
    std::function<std::pair<BigInt, BigInt>(const AlgebraSpec&)> counts = [&](const AlgebraSpec& a) {
        const std::vector<int> key(a.kupisch().begin(), a.kupisch().end());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::pair<BigInt, BigInt> out{1, 1};
        if (a.n() > 0) {
            BigInt tau = 0, ps = 0;
            for (int i = 1; i <= a.loewy(1); ++i) tau += engine.catalan(i - 1) * counts(above(a, i)).first;
            for (int i = 1; i <= a.n(); ++i) ps += counts(below(a, i)).first * counts(above(a, i)).second;
            out = {tau, tau + ps};
        }
        memo.emplace(key, out);
        return out;
    };
    int sequences = 0;
    for (const auto& a : random_algebras(200, 10, 20200618)) {
        BigInt first = 0, third = 0;
        for (int i = 1; i <= a.n(); ++i) {
            first += counts(below(a, i)).first * counts(above(a, i)).second;
            third += counts(below(a, i)).second * counts(above(a, i)).first;
        }
        expect_eq(o, first, third, cell("ps split at tau/s vs s/tau", a));
        expect_eq(o, engine.ps_count_general(a), first, cell("engine ps", a));
        ++sequences;
    }
    if (o.passed) o.detail = "r <= 6, n <= 30 and " + std::to_string(sequences) + " random Kupisch series";
    return o;
}

Outcome catalan_diagonals() {
    Outcome o;
    CountEngine engine;
    int cells = 0;
    for (int n = 0; n <= 14; ++n) {
        for (int r = std::max(n, 1); r <= 14; ++r) {
            const std::string at = " r=" + std::to_string(r) + " n=" + std::to_string(n);
            expect_eq(o, engine.t_lin(r, n), binomial(2 * n, n) / (n + 1), "t_lin" + at);
            expect_eq(o, engine.s_lin(r, n), binomial(2 * n + 2, n + 1) / (n + 2), "s_lin" + at);
            ++cells;
        }
    }
    if (o.passed) o.detail = std::to_string(cells) + " (r, n) pairs";
    return o;
}

Outcome lucas_numbers() {
    Outcome o;
    CountEngine engine;
    const long double phi = (1 + std::sqrt(5.0L)) / 2, psi = (1 - std::sqrt(5.0L)) / 2;
    BigInt prev = 2, cur = 1;  // L(0), L(1)
    double worst = 0;
    for (int n = 1; n <= 30; ++n) {
        if (n > 1) {
            const BigInt next = cur + prev;
            prev = cur;
            cur = next;
        }
        const std::string at = " n=" + std::to_string(n);
        expect_eq(o, engine.t_cyc(2, n), cur, "t_cyc(2, n) vs Lucas" + at);
        expect_eq(o, engine.lucas(n), cur, "engine Lucas" + at);
        const long double closed = std::pow(phi, n) + std::pow(psi, n);
        const long double exact = cur.convert_to<long double>();
        const double rel = static_cast<double>(std::fabs(closed - exact) / exact);
        worst = std::max(worst, rel);
        expect_eq(o, BigInt(std::llround(closed)), cur, "round(phi^n + psi^n)" + at);
        if (rel > kRelTol) o.fail("phi^n + psi^n relative error " + std::to_string(rel) + at);
    }
    if (o.passed) {
        std::ostringstream msg;
        msg << "n <= 30, closed form max relative error " << worst;
        o.detail = msg.str();
    }
    return o;
}

Outcome spectral_checks() {
    Outcome o;
    const auto start = Clock::now();
    CountEngine engine;
    double worst_power = 0, worst_homog = 0, worst_vieta = 0;
    std::string skipped;
    try {
        for (int r = 1; r <= 8; ++r) {
            const auto poly = char_poly(r);
            const double v = vieta_error(poly, find_roots(poly));
            worst_vieta = std::max(worst_vieta, v);
            if (v > kRelTol) o.fail("Vieta error " + std::to_string(v) + " at r=" + std::to_string(r));
        }
        for (int r = 1; r <= 6; ++r) {
            worst_power = std::max(worst_power, power_sum_check(engine, r, 20, kRelTol).max_rel_error);
            const auto h = homog_check(engine, r, 20, kRelTol);
            if (h.skipped) skipped += " r=" + std::to_string(r) + " " + h.notice;
            worst_homog = std::max(worst_homog, h.max_rel_error);
        }
    } catch (const std::exception& e) {
        o.fail(e.what());
    }
    const double elapsed = seconds_since(start);
    if (o.passed) {
        std::ostringstream msg;
        msg << "max relative error: power sums " << worst_power << ", homogeneous " << worst_homog << ", Vieta "
            << worst_vieta << "; " << elapsed << " s";
        if (!skipped.empty()) msg << ";" << skipped;
        o.detail = msg.str();
    }
    if (elapsed >= kSpectralBudgetSeconds) o.fail("spectral checks took " + std::to_string(elapsed) + " s");
    return o;
}

Outcome set_cardinalities() {
    Outcome o;
    CountEngine engine;
    int algebras = 0;
    for (const auto& e : verification_range()) {
        const auto& a = e.algebra;
        const int n = a.n(), r = e.r;
        if (n > 7 || r > 4) continue;
        ++algebras;
        auto t = [&](int m) { return m < 0 ? BigInt(0) : engine.t_lin(r, m); };
        auto s = [&](int m) { return m < 0 ? BigInt(0) : engine.s_lin(r, m); };
        const std::string at = " n=" + std::to_string(n) + " r=" + std::to_string(r);
        if (a.shape() == Shape::Linear) {
            expect_eq(o, BigInt(set_X(n, r, e.pairs).size()), t(n + 1), "|X_n|" + at);
            for (int ell = 0; ell <= n; ++ell) {
                BigInt want = 0;
                for (int i = ell + 1; i <= r; ++i) want += engine.catalan(i - 1) * t(n - i + 1);
                expect_eq(o, BigInt(set_Y(n, r, ell, e.pairs).size()), want, "|Y_{n," + std::to_string(ell) + "}|" + at);
            }
            const auto proper = filter_proper_np(a, e.pairs).proper.size();
            std::size_t w_total = 0;
            for (int i = 1; i <= n; ++i) {
                const auto w = filter_W(a, e.pairs, i).size();
                const auto want = enumerate_tau_tilting(below(a, i)).size() * enumerate_support_tau_tilting(above(a, i)).size();
                expect_eq(o, w, want, "|W_" + std::to_string(i) + "|" + at);
                w_total += w;
            }
            expect_eq(o, w_total, proper, "sum |W_i|" + at);
        } else {
            std::size_t k_total = 0;
            for (int ell = 0; ell <= n - 1; ++ell) {
                BigInt want = t(n - 1);
                for (int i = ell + 1; i <= n - 1; ++i) want += t(i - 1) * s(n - i - 1);
                if (ell == 0) expect_eq(o, want, s(n - 1), "K_{n,0} formula vs s(n-1)" + at);
                const auto k = set_K(n, r, ell, e.pairs).size();
                expect_eq(o, BigInt(k), want, "|K_{n," + std::to_string(ell) + "}|" + at);
                k_total += k;
            }
            expect_eq(o, k_total, filter_proper_np(a, e.pairs).proper.size(), "sum |K_{n,l}|" + at);
        }
    }
    if (o.passed) o.detail = std::to_string(algebras) + " algebras";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> allowed;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--allow-fail" && i + 1 < argc) {
            allowed.insert(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--allow-fail N]...\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"table reproduction", table_reproduction},
        {"oracle equivalence", oracle_equivalence},
        {"four-vertex example", four_vertex_example},
        {"|tau-tilt| = |ps-tilt_np|", bijection_count},
        {"P_1 is a summand", p1_summand},
        {"two-path agreement", two_paths},
        {"Catalan diagonals", catalan_diagonals},
        {"Lucas closed form", lucas_numbers},
        {"spectral checks", spectral_checks},
        {"set cardinalities", set_cardinalities},
    };

    int failed = 0, unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.passed ? "PASS" : "FAIL") << "  " << id << ". " << criteria[i].first << ": " << o.detail
                  << std::endl;
        if (!o.passed) {
            ++failed;
            if (!allowed.count(id)) ++unexpected;
        }
    }
    std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed";
    if (failed > unexpected) std::cout << " (" << failed - unexpected << " failure(s) allowed by --allow-fail)";
    std::cout << '\n';
    return unexpected == 0 ? 0 : 1;
}
