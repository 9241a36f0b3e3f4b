#include "tautilt/count_engine.hpp"

#include <algorithm>

namespace tautilt {

namespace {

void require_r(int r) {
    if (r < 1) throw std::invalid_argument("radical power r must be >= 1, got " + std::to_string(r));
}

void require_cyclic_n(int n) {
    if (n < 1) {
        throw std::invalid_argument("cyclic counts are defined for n >= 1, got " + std::to_string(n));
    }
}

std::vector<int> suffix_after(const std::vector<int>& c, int i) {
    return {c.begin() + i, c.end()};
}

// Algebra on vertices 1..i-1 with Loewy lengths truncated before vertex i.
std::vector<int> prefix_before(const std::vector<int>& c, int i) {
    std::vector<int> out;
    for (int j = 1; j < i; ++j) out.push_back(std::min(c[static_cast<std::size_t>(j - 1)], i - j));
    return out;
}

}  // namespace

std::string to_string(Family family) {
    switch (family) {
        case Family::TLin: return "t_lin";
        case Family::SLin: return "s_lin";
        case Family::PsLin: return "ps_lin";
        case Family::TCyc: return "t_cyc";
        case Family::SCyc: return "s_cyc";
        case Family::PsCyc: return "ps_cyc";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    for (auto f : kAllFamilies) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

void CountEngine::require(bool ok, const std::string& what) const {
    if (!ok) throw InconsistencyError(what);
}

const BigInt* CountEngine::find_locked(const CountKey& key) const {
    const auto it = memo_.find(key);
    return it == memo_.end() ? nullptr : &it->second;
}

void CountEngine::store_locked(const CountKey& key, BigInt value) {
    memo_.insert_or_assign(key, std::move(value));
    ++fresh_;
}

BigInt CountEngine::binomial_locked(int top, int bottom) {
    if (bottom < 0 || bottom > top) return 0;
    BigInt out = 1;
    for (int k = 1; k <= bottom; ++k) {
        out *= top - bottom + k;
        out /= k;
    }
    return out;
}

BigInt CountEngine::catalan_locked(int i) {
    if (i < 0) throw std::invalid_argument("catalan index must be >= 0, got " + std::to_string(i));
    while (static_cast<int>(catalan_.size()) <= i) {
        const int k = static_cast<int>(catalan_.size());
        BigInt value = binomial_locked(2 * k, k) / (k + 1);
        if (checks_ == SelfCheck::On && k >= 1) {
            BigInt conv = 0;
            for (int j = 1; j <= k; ++j) {
                conv += catalan_[static_cast<std::size_t>(j - 1)] * catalan_[static_cast<std::size_t>(k - j)];
            }
            require(conv == value, "catalan(" + std::to_string(k) + "): binomial and convolution disagree");
        }
        catalan_.push_back(std::move(value));
    }
    return catalan_[static_cast<std::size_t>(i)];
}

BigInt CountEngine::t_lin_locked(int r, int n) {
    require_r(r);
    if (n < 0) return 0;
    if (n == 0) return 1;
    if (const auto* hit = find_locked({Family::TLin, r, n})) return *hit;
    for (int m = 1; m <= n; ++m) {
        if (find_locked({Family::TLin, r, m})) continue;
        BigInt value = 0;
        for (int i = 1; i <= r; ++i) value += catalan_locked(i - 1) * t_lin_locked(r, m - i);
        store_locked({Family::TLin, r, m}, std::move(value));
    }
    return *find_locked({Family::TLin, r, n});
}

BigInt CountEngine::s_lin_locked(int r, int n) {
    require_r(r);
    if (n < 0) return 0;
    if (n == 0) return 1;
    if (const auto* hit = find_locked({Family::SLin, r, n})) return *hit;
    for (int m = 1; m <= n; ++m) {
        if (find_locked({Family::SLin, r, m})) continue;
        BigInt value = 2 * s_lin_locked(r, m - 1);
        for (int i = 2; i <= r; ++i) value += catalan_locked(i - 1) * s_lin_locked(r, m - i);
        if (checks_ == SelfCheck::On) {
            // Split by the first vertex missing from the support.
            BigInt conv = t_lin_locked(r, m);
            for (int i = 1; i <= m; ++i) conv += t_lin_locked(r, i - 1) * s_lin_locked(r, m - i);
            require(conv == value, "s_lin(" + std::to_string(r) + "," + std::to_string(m) +
                                       "): recurrence and convolution disagree");
        }
        store_locked({Family::SLin, r, m}, std::move(value));
    }
    return *find_locked({Family::SLin, r, n});
}

BigInt CountEngine::t_cyc_locked(int r, int n) {
    require_r(r);
    require_cyclic_n(n);
    if (const auto* hit = find_locked({Family::TCyc, r, n})) return *hit;
    for (int m = 1; m <= n; ++m) {
        if (find_locked({Family::TCyc, r, m})) continue;
        BigInt value = 0;
        for (int i = 1; i <= r; ++i) value += i * catalan_locked(i - 1) * t_lin_locked(r, m - i);
        if (checks_ == SelfCheck::On) {
            // Loewy length r >= m: binomial(2m-1, m-1). Beyond that, the
            // cyclic counts obey the linear recurrence; it only reaches
            // back to indices >= 1 once m > r.
            BigInt other = 0;
            if (m <= r) {
                other = binomial_locked(2 * m - 1, m - 1);
            } else {
                for (int i = 1; i <= r; ++i) other += catalan_locked(i - 1) * t_cyc_locked(r, m - i);
            }
            require(other == value, "t_cyc(" + std::to_string(r) + "," + std::to_string(m) +
                                        "): weighted linear sum and cyclic recurrence disagree");
        }
        store_locked({Family::TCyc, r, m}, std::move(value));
    }
    return *find_locked({Family::TCyc, r, n});
}

BigInt CountEngine::ps_cyc_locked(int r, int n) {
    require_r(r);
    require_cyclic_n(n);
    if (const auto* hit = find_locked({Family::PsCyc, r, n})) return *hit;
    BigInt value = n * t_lin_locked(r, n - 1);
    for (int i = 1; i <= n - 1; ++i) value += i * t_lin_locked(r, i - 1) * s_lin_locked(r, n - i - 1);
    store_locked({Family::PsCyc, r, n}, value);
    return value;
}

BigInt CountEngine::s_cyc_locked(int r, int n) {
    require_r(r);
    require_cyclic_n(n);
    if (const auto* hit = find_locked({Family::SCyc, r, n})) return *hit;
    for (int m = 1; m <= n; ++m) {
        if (find_locked({Family::SCyc, r, m})) continue;
        BigInt value = ps_cyc_locked(r, m) + t_cyc_locked(r, m);
        if (checks_ == SelfCheck::On) {
            BigInt other = 0;
            if (m <= r) {
                other = binomial_locked(2 * m, m);
            } else {
                other = 2 * s_cyc_locked(r, m - 1);
                for (int i = 2; i <= r; ++i) other += catalan_locked(i - 1) * s_cyc_locked(r, m - i);
            }
            require(other == value, "s_cyc(" + std::to_string(r) + "," + std::to_string(m) +
                                        "): proper + tau-tilting and recurrence disagree");
        }
        store_locked({Family::SCyc, r, m}, std::move(value));
    }
    return *find_locked({Family::SCyc, r, n});
}

const CountEngine::GeneralCounts& CountEngine::general_locked(const std::vector<int>& c) {
    if (const auto it = general_.find(c); it != general_.end()) return it->second;
    GeneralCounts out;
    const int n = static_cast<int>(c.size());
    if (n == 0) {
        out = {1, 0, 1};
    } else {
        for (int i = 1; i <= c.front(); ++i) {
            out.tau += catalan_locked(i - 1) * general_locked(suffix_after(c, i)).tau;
        }
        // Proper support modules, split by the first missing vertex i.
        for (int i = 1; i <= n; ++i) {
            out.ps += general_locked(prefix_before(c, i)).tau * general_locked(suffix_after(c, i)).s;
        }
        out.s = out.ps + out.tau;
        if (checks_ == SelfCheck::On) {
            // Same split, roles of the two sides exchanged.
            BigInt mirrored = 0;
            for (int i = 1; i <= n; ++i) {
                mirrored += general_locked(prefix_before(c, i)).s * general_locked(suffix_after(c, i)).tau;
            }
            require(mirrored == out.ps, "proper support count: prefix/suffix splits disagree");
            require(mirrored + out.tau == out.s, "support count: the two split formulas disagree");
        }
    }
    return general_.emplace(c, std::move(out)).first->second;
}

namespace {

std::vector<int> linear_kupisch(const AlgebraSpec& algebra) {
    if (algebra.shape() != Shape::Linear) throw std::invalid_argument("general counts require a linear algebra");
    return {algebra.kupisch().begin(), algebra.kupisch().end()};
}

}  // namespace

BigInt CountEngine::catalan(int i) {
    std::lock_guard lock(mutex_);
    return catalan_locked(i);
}

BigInt CountEngine::t_lin(int r, int n) {
    std::lock_guard lock(mutex_);
    return t_lin_locked(r, n);
}

BigInt CountEngine::s_lin(int r, int n) {
    std::lock_guard lock(mutex_);
    return s_lin_locked(r, n);
}

BigInt CountEngine::ps_lin(int r, int n) {
    std::lock_guard lock(mutex_);
    require_r(r);
    if (n < 0) return 0;
    if (const auto* hit = find_locked({Family::PsLin, r, n})) return *hit;
    BigInt value = s_lin_locked(r, n) - t_lin_locked(r, n);
    if (n > 0) store_locked({Family::PsLin, r, n}, value);
    return value;
}

BigInt CountEngine::t_cyc(int r, int n) {
    std::lock_guard lock(mutex_);
    return t_cyc_locked(r, n);
}

BigInt CountEngine::s_cyc(int r, int n) {
    std::lock_guard lock(mutex_);
    return s_cyc_locked(r, n);
}

BigInt CountEngine::ps_cyc(int r, int n) {
    std::lock_guard lock(mutex_);
    return ps_cyc_locked(r, n);
}

BigInt CountEngine::count(Family family, int r, int n) {
    switch (family) {
        case Family::TLin: return t_lin(r, n);
        case Family::SLin: return s_lin(r, n);
        case Family::PsLin: return ps_lin(r, n);
        case Family::TCyc: return t_cyc(r, n);
        case Family::SCyc: return s_cyc(r, n);
        case Family::PsCyc: return ps_cyc(r, n);
    }
    throw std::invalid_argument("unknown family");
}

BigInt CountEngine::tau_count_general(const AlgebraSpec& algebra) {
    const auto c = linear_kupisch(algebra);
    std::lock_guard lock(mutex_);
    return general_locked(c).tau;
}

BigInt CountEngine::stau_count_general(const AlgebraSpec& algebra) {
    const auto c = linear_kupisch(algebra);
    std::lock_guard lock(mutex_);
    return general_locked(c).s;
}

BigInt CountEngine::ps_count_general(const AlgebraSpec& algebra) {
    const auto c = linear_kupisch(algebra);
    std::lock_guard lock(mutex_);
    return general_locked(c).ps;
}

BigInt CountEngine::v_count(const AlgebraSpec& algebra, int ell) {
    const auto c = linear_kupisch(algebra);
    const int n = static_cast<int>(c.size());
    if (ell < 0 || ell > n) throw std::invalid_argument("v_count index out of range: " + std::to_string(ell));
    std::lock_guard lock(mutex_);
    BigInt value = general_locked(c).tau;
    for (int i = ell + 1; i <= n; ++i) {
        value += general_locked(prefix_before(c, i)).tau * general_locked(suffix_after(c, i)).s;
    }
    return value;
}

BigInt CountEngine::x_count(int r, int n) {
    require_r(r);
    if (n < 0) return 0;
    return t_lin(r, n + 1);
}

BigInt CountEngine::y_count(int r, int n, int ell) {
    require_r(r);
    if (ell >= r) return 0;
    std::lock_guard lock(mutex_);
    BigInt value = 0;
    for (int i = ell + 1; i <= r; ++i) value += catalan_locked(i - 1) * t_lin_locked(r, n - i + 1);
    return value;
}

BigInt CountEngine::k_count(int r, int n, int ell) {
    require_r(r);
    require_cyclic_n(n);
    if (ell < 0 || ell > n - 1) throw std::invalid_argument("k_count index out of range: " + std::to_string(ell));
    std::lock_guard lock(mutex_);
    BigInt value = t_lin_locked(r, n - 1);
    for (int i = ell + 1; i <= n - 1; ++i) value += t_lin_locked(r, i - 1) * s_lin_locked(r, n - i - 1);
    return value;
}

BigInt CountEngine::lucas(int n) {
    if (n < 1) throw std::invalid_argument("lucas index must be >= 1, got " + std::to_string(n));
    BigInt prev = 1, cur = 3;  // L(1), L(2)
    if (n == 1) return prev;
    for (int k = 3; k <= n; ++k) {
        BigInt next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

void CountEngine::seed(const CountKey& key, const BigInt& value) {
    require_r(key.r);
    if (key.n < 1) throw std::invalid_argument("seeded entries need n >= 1");
    if (value < 0) throw std::invalid_argument("counts are nonnegative");
    std::lock_guard lock(mutex_);
    memo_.insert_or_assign(key, value);
}

std::vector<std::pair<CountKey, BigInt>> CountEngine::snapshot() const {
    std::lock_guard lock(mutex_);
    return {memo_.begin(), memo_.end()};
}

std::size_t CountEngine::fresh_computations() const {
    std::lock_guard lock(mutex_);
    return fresh_;
}

}  // namespace tautilt
