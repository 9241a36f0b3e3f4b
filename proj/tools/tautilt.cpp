// tautilt: count, tabulate and enumerate (support) tau-tilting modules over
// Nakayama algebras.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size guard.

#include "CLI11.hpp"

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/cache.hpp"
#include "tautilt/count_engine.hpp"
#include "tautilt/oracle.hpp"
#include "tautilt/spectral.hpp"
#include "tautilt/table.hpp"
#include "tautilt/verify.hpp"

namespace {

using namespace tautilt;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kSizeGuard = 80;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family require_family(const std::string& name) {
    const auto family = parse_family(name);
    if (!family) throw UsageError("unknown family '" + name + "' (t_lin, s_lin, ps_lin, t_cyc, s_cyc, ps_cyc)");
    return *family;
}

class CacheSession {
public:
    CacheSession(const std::optional<std::string>& flag, CountEngine& engine)
        : path_(resolve_cache_path(flag)), engine_(engine) {
        if (!path_) return;
        const auto loaded = cache_load(*path_, engine_);
        if (!loaded.warning.empty()) std::cerr << "warning: " << loaded.warning << '\n';
    }

    void save() const {
        if (!path_) return;
        try {
            cache_store(*path_, engine_);
        } catch (const std::exception& e) {
            std::cerr << "warning: " << e.what() << '\n';
        }
    }

private:
    std::optional<std::filesystem::path> path_;
    CountEngine& engine_;
};

AlgebraSpec algebra_from_flags(const std::string& shape, const std::string& kupisch, int n, int r) {
    if (shape == "linear") {
        if (!kupisch.empty()) {
            std::vector<int> c;
            std::stringstream in(kupisch);
            std::string item;
            while (std::getline(in, item, ',')) {
                try {
                    std::size_t used = 0;
                    c.push_back(std::stoi(item, &used));
                    if (used != item.size()) throw std::invalid_argument(item);
                } catch (const std::exception&) {
                    throw UsageError("bad kupisch entry '" + item + "'");
                }
            }
            return make_linear_kupisch(std::move(c));
        }
        if (n < 0 || r < 1) throw UsageError("linear algebras need --kupisch or both --n and --r");
        return make_uniform(Shape::Linear, n, r);
    }
    if (shape == "cyclic") {
        if (!kupisch.empty()) throw UsageError("cyclic algebras are uniform: use --n and --r");
        if (n < 0 || r < 1) throw UsageError("cyclic algebras need --n and --r");
        return make_uniform(Shape::Cyclic, n, r);
    }
    throw UsageError("shape must be 'linear' or 'cyclic', got '" + shape + "'");
}

int run_enumerate(const AlgebraSpec& algebra, const std::string& kind, bool force, unsigned threads) {
    int size = 0;
    for (int c : algebra.kupisch()) size += c;
    if (size > kSizeGuard) {
        if (!force) {
            throw SizeGuardError("algebra has " + std::to_string(size) + " indecomposables (guard " +
                                 std::to_string(kSizeGuard) + "); pass --force to enumerate anyway");
        }
        std::cerr << "warning: enumerating " << size << " indecomposables\n";
    }

    std::vector<std::string> lines;
    if (kind == "tau") {
        for (const auto& m : enumerate_tau_tilting(algebra)) lines.push_back(to_string(m));
    } else if (kind == "support" || kind == "proper" || kind == "proper_np") {
        const auto pairs = enumerate_support_tau_tilting(algebra, threads);
        const auto split = filter_proper_np(algebra, pairs);
        const auto& chosen = kind == "support" ? pairs : kind == "proper" ? split.proper : split.proper_np;
        for (const auto& p : chosen) lines.push_back(to_string(p.module));
    } else {
        throw UsageError("kind must be one of tau, support, proper, proper_np");
    }
    for (const auto& line : lines) std::cout << line << '\n';
    std::cout << "count: " << lines.size() << '\n';
    return 0;
}

int run_roots(int r, double tol) {
    const auto poly = char_poly(r);
    const auto roots = find_roots(poly, tol);
    std::cout << "F_" << r << "(X) coefficients:";
    for (const auto& c : poly.coeffs) std::cout << ' ' << c;
    std::cout << '\n' << std::setprecision(15);
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
        const auto& z = roots.roots[i];
        std::cout << "root " << i + 1 << ": " << static_cast<double>(z.real()) << (z.imag() < 0 ? " - " : " + ")
                  << static_cast<double>(std::abs(z.imag())) << "i  residual "
                  << static_cast<double>(roots.residuals[i]) << '\n';
    }
    std::cout << "min gap: " << static_cast<double>(roots.min_gap) << '\n';
    std::cout << "dominant growth: " << dominant_growth(r) << '\n';
    std::cout << "vieta error: " << vieta_error(poly, roots) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts and enumerates (support) tau-tilting modules over Nakayama algebras"};
    app.require_subcommand(1);

    std::optional<std::string> cache_flag;
    app.add_option("--cache", cache_flag, "Count cache file (default: $TAUTILT_CACHE)");

    std::string family_name;
    int r = 0, n = -1;
    auto* count = app.add_subcommand("count", "Print one exact count");
    count->add_option("family", family_name, "t_lin, s_lin, ps_lin, t_cyc, s_cyc or ps_cyc")->required();
    count->add_option("--r", r, "Radical power")->required();
    count->add_option("--n", n, "Number of vertices")->required();

    TableRequest table_req;
    std::string format = "markdown";
    auto* table = app.add_subcommand("table", "Render a table of counts, rows r, columns n");
    table->add_option("family", family_name, "Count family")->required();
    table->add_option("--r-max", table_req.r_max, "Largest r");
    table->add_option("--n-max", table_req.n_max, "Largest n");
    table->add_option("--format", format, "markdown, csv or json")
        ->check(CLI::IsMember({"markdown", "csv", "json"}));

    std::string shape, kupisch, kind = "tau";
    bool force = false;
    unsigned threads = 1;
    int enum_n = -1, enum_r = 0;
    auto* enumerate = app.add_subcommand("enumerate", "List modules over one algebra");
    enumerate->add_option("shape", shape, "linear or cyclic")->required();
    enumerate->add_option("--kupisch", kupisch, "Comma-separated Loewy lengths (linear only)");
    enumerate->add_option("--n", enum_n, "Number of vertices (uniform algebra)");
    enumerate->add_option("--r", enum_r, "Radical power (uniform algebra)");
    enumerate->add_option("--kind", kind, "tau, support, proper or proper_np");
    enumerate->add_flag("--force", force, "Ignore the size guard");
    enumerate->add_option("--threads", threads, "Worker threads for support enumeration");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Cross-check enumeration, formulas and tables");
    verify->add_option("--n-max-lin", verify_opt.n_max_lin, "Largest n for linear algebras");
    verify->add_option("--r-max-lin", verify_opt.r_max_lin, "Largest r for linear algebras");
    verify->add_option("--n-max-cyc", verify_opt.n_max_cyc, "Largest n for cyclic algebras");
    verify->add_option("--r-max-cyc", verify_opt.r_max_cyc, "Largest r for cyclic algebras");
    verify->add_option("--tol", verify_opt.tol, "Relative tolerance for floating-point checks");
    verify->add_option("--threads", verify_opt.threads, "Worker threads for support enumeration");

    int roots_r = 2;
    double roots_tol = 1e-12;
    auto* roots = app.add_subcommand("roots", "Roots of the characteristic polynomial F_r");
    roots->add_option("--r", roots_r, "Degree r")->required();
    roots->add_option("--tol", roots_tol, "Residual tolerance relative to max |coefficient|");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*count) {
            CountEngine engine;
            CacheSession cache(cache_flag, engine);
            const auto value = engine.count(require_family(family_name), r, n);
            std::cout << value << '\n';
            cache.save();
            return 0;
        }
        if (*table) {
            table_req.family = require_family(family_name);
            table_req.format = format == "csv" ? TableFormat::Csv : format == "json" ? TableFormat::Json : TableFormat::Markdown;
            CountEngine engine;
            CacheSession cache(cache_flag, engine);
            std::cout << render_table(engine, table_req);
            cache.save();
            return 0;
        }
        if (*enumerate) {
            return run_enumerate(algebra_from_flags(shape, kupisch, enum_n, enum_r), kind, force, threads);
        }
        if (*verify) {
            const auto report = run_verification(verify_opt, &std::cout);
            const bool ok = report.passed();
            std::cout << (ok ? "all groups passed" : "verification FAILED") << '\n';
            return ok ? 0 : kExitVerifyFailed;
        }
        if (*roots) return run_roots(roots_r, roots_tol);
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return 0;
}
