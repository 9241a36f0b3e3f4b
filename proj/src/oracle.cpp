#include "tautilt/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>

namespace tautilt {

namespace {

std::uint64_t killed_mask(const VertexSet& killed) {
    std::uint64_t mask = 0;
    for (int v : killed) mask |= std::uint64_t{1} << (v - 1);
    return mask;
}

bool self_compatible(const AlgebraSpec& algebra, const Indec& x) {
    const auto tx = tau(algebra, x);
    return !tx || !hom_nonzero(algebra, x, *tx);
}

bool compatible(const AlgebraSpec& algebra, const Indec& x, const Indec& y) {
    const auto tx = tau(algebra, x);
    const auto ty = tau(algebra, y);
    if (ty && hom_nonzero(algebra, x, *ty)) return false;
    if (tx && hom_nonzero(algebra, y, *tx)) return false;
    return true;
}

class CliqueSearch {
public:
    CliqueSearch(const CompatGraph& graph, std::size_t target) : graph_(graph), target_(target) {}

    std::vector<std::vector<std::size_t>> run() {
        boost::dynamic_bitset<> all(graph_.size());
        all.set();
        std::vector<std::size_t> current;
        extend(current, all);
        return std::move(found_);
    }

private:
    void extend(std::vector<std::size_t>& current, const boost::dynamic_bitset<>& candidates) {
        if (current.size() == target_) {
            found_.push_back(current);
            return;
        }
        // Nodes leave the pool once branched on, so each clique is produced
        // exactly once, in increasing node order.
        boost::dynamic_bitset<> pool = candidates;
        std::size_t remaining = pool.count();
        for (auto v = candidates.find_first(); v != boost::dynamic_bitset<>::npos; v = candidates.find_next(v)) {
            if (current.size() + remaining < target_) return;
            pool.reset(v);
            --remaining;
            const boost::dynamic_bitset<> next = pool & graph_.neighbours(v);
            current.push_back(v);
            extend(current, next);
            current.pop_back();
        }
    }

    const CompatGraph& graph_;
    std::size_t target_;
    std::vector<std::vector<std::size_t>> found_;
};

std::vector<SupportPair> support_for_mask(const AlgebraSpec& algebra, std::uint64_t mask) {
    VertexSet killed;
    for (int v = 1; v <= algebra.n(); ++v) {
        if (mask & (std::uint64_t{1} << (v - 1))) killed.push_back(v);
    }
    const auto quotient = quotient_kill(algebra, killed);

    std::vector<std::vector<Indec>> partial{{}};
    for (const auto& component : quotient.components) {
        const auto local = enumerate_tau_tilting(component.algebra);
        std::vector<std::vector<Indec>> next;
        next.reserve(partial.size() * local.size());
        for (const auto& prefix : partial) {
            for (const auto& module : local) {
                auto combined = prefix;
                for (const auto& x : module) combined.push_back(component.lift(x));
                next.push_back(std::move(combined));
            }
        }
        partial = std::move(next);
    }

    std::vector<SupportPair> out;
    out.reserve(partial.size());
    for (auto& items : partial) out.push_back({ModuleSet(std::move(items)), killed});
    std::sort(out.begin(), out.end(), support_order);
    return out;
}

bool has_all(const std::vector<bool>& support, int first, int last) {
    for (int v = first; v <= last; ++v) {
        if (!support[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

template <class Pred>
std::vector<SupportPair> select(std::span<const SupportPair> pairs, Pred pred) {
    std::vector<SupportPair> out;
    for (const auto& p : pairs) {
        if (pred(p)) out.push_back(p);
    }
    return out;
}

}  // namespace

bool support_order(const SupportPair& lhs, const SupportPair& rhs) {
    const auto a = killed_mask(lhs.killed), b = killed_mask(rhs.killed);
    if (a != b) return a < b;
    return lhs.module < rhs.module;
}

CompatGraph::CompatGraph(const AlgebraSpec& algebra) {
    for (const auto& x : indecomposables(algebra)) {
        if (self_compatible(algebra, x)) nodes_.push_back(x);
    }
    adjacency_.assign(nodes_.size(), boost::dynamic_bitset<>(nodes_.size()));
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
            if (compatible(algebra, nodes_[i], nodes_[j])) {
                adjacency_[i].set(j);
                adjacency_[j].set(i);
            }
        }
    }
}

bool is_tau_rigid(const AlgebraSpec& algebra, const ModuleSet& module) {
    const auto& items = module.items();
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!self_compatible(algebra, items[i])) return false;
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            if (!compatible(algebra, items[i], items[j])) return false;
        }
    }
    return true;
}

std::vector<ModuleSet> enumerate_tau_tilting(const AlgebraSpec& algebra) {
    const CompatGraph graph(algebra);
    const auto cliques = CliqueSearch(graph, static_cast<std::size_t>(algebra.n())).run();
    std::vector<ModuleSet> out;
    out.reserve(cliques.size());
    for (const auto& clique : cliques) {
        std::vector<Indec> items;
        items.reserve(clique.size());
        for (auto v : clique) items.push_back(graph.nodes()[v]);
        out.emplace_back(std::move(items));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SupportPair> enumerate_support_tau_tilting(const AlgebraSpec& algebra, unsigned threads) {
    const int n = algebra.n();
    if (n > 30) throw std::invalid_argument("support enumeration limited to n <= 30, got " + std::to_string(n));
    const std::uint64_t masks = std::uint64_t{1} << n;
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(masks)));

    std::vector<std::vector<SupportPair>> per_mask(masks);
    auto work = [&](unsigned worker) {
        for (std::uint64_t mask = worker; mask < masks; mask += threads) {
            per_mask[mask] = support_for_mask(algebra, mask);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::future<void>> jobs;
        for (unsigned w = 0; w < threads; ++w) jobs.push_back(std::async(std::launch::async, work, w));
        for (auto& job : jobs) job.get();
    }

    std::vector<SupportPair> out;
    for (auto& chunk : per_mask) {
        for (auto& p : chunk) out.push_back(std::move(p));
    }
    return out;
}

std::vector<bool> composition_support(const AlgebraSpec& algebra, const ModuleSet& module) {
    std::vector<bool> support(static_cast<std::size_t>(algebra.n()) + 1, false);
    for (const auto& x : module) {
        for (int v : composition_vertices(algebra, x)) support[static_cast<std::size_t>(v)] = true;
    }
    return support;
}

bool is_sincere(const AlgebraSpec& algebra, const ModuleSet& module) {
    return has_all(composition_support(algebra, module), 1, algebra.n());
}

ProperSplit filter_proper_np(const AlgebraSpec& algebra, std::span<const SupportPair> pairs) {
    ProperSplit out;
    for (const auto& p : pairs) {
        if (p.killed.empty()) continue;
        out.proper.push_back(p);
        const bool has_projective = std::any_of(p.module.begin(), p.module.end(),
                                                [&](const Indec& x) { return algebra.is_projective(x); });
        if (!has_projective) out.proper_np.push_back(p);
    }
    return out;
}

std::vector<SupportPair> filter_W(const AlgebraSpec& algebra, std::span<const SupportPair> pairs, int i) {
    if (algebra.shape() != Shape::Linear) throw std::invalid_argument("filter_W requires a linear algebra");
    if (i < 1 || i > algebra.n()) throw std::invalid_argument("filter_W index out of range: " + std::to_string(i));
    return select(pairs, [&](const SupportPair& p) {
        const auto support = composition_support(algebra, p.module);
        return has_all(support, 1, i - 1) && !support[static_cast<std::size_t>(i)];
    });
}

std::vector<SupportPair> filter_W(const AlgebraSpec& algebra, int i) {
    const auto pairs = enumerate_support_tau_tilting(algebra);
    return filter_W(algebra, pairs, i);
}

std::vector<SupportPair> filter_V(const AlgebraSpec& algebra, std::span<const SupportPair> pairs, int ell) {
    if (ell < 0 || ell > algebra.n()) throw std::invalid_argument("filter_V index out of range: " + std::to_string(ell));
    return select(pairs, [&](const SupportPair& p) {
        return has_all(composition_support(algebra, p.module), 1, ell);
    });
}

std::vector<SupportPair> filter_V(const AlgebraSpec& algebra, int ell) {
    const auto pairs = enumerate_support_tau_tilting(algebra);
    return filter_V(algebra, pairs, ell);
}

std::vector<SupportPair> set_X(int n, int r, std::span<const SupportPair> pairs) {
    const auto algebra = make_uniform(Shape::Linear, n, r);
    const int last_excluded = n - r + 1;
    return select(pairs, [&](const SupportPair& p) {
        for (int j = 1; j <= last_excluded; ++j) {
            if (p.module.contains({j, algebra.loewy(j)})) return false;
        }
        return true;
    });
}

std::vector<SupportPair> set_X(int n, int r) {
    const auto pairs = enumerate_support_tau_tilting(make_uniform(Shape::Linear, n, r));
    return set_X(n, r, pairs);
}

std::vector<SupportPair> set_Y(int n, int r, int ell, std::span<const SupportPair> pairs) {
    if (ell < 0 || ell > n) throw std::invalid_argument("set_Y index out of range: " + std::to_string(ell));
    const auto algebra = make_uniform(Shape::Linear, n, r);
    const auto x = set_X(n, r, pairs);
    return select(std::span<const SupportPair>(x), [&](const SupportPair& p) {
        return has_all(composition_support(algebra, p.module), 1, ell);
    });
}

std::vector<SupportPair> set_Y(int n, int r, int ell) {
    const auto pairs = enumerate_support_tau_tilting(make_uniform(Shape::Linear, n, r));
    return set_Y(n, r, ell, pairs);
}

std::vector<SupportPair> set_K(int n, int r, int ell, std::span<const SupportPair> pairs) {
    if (n < 1) throw std::invalid_argument("set_K requires n >= 1");
    if (ell < 0 || ell > n - 1) throw std::invalid_argument("set_K index out of range: " + std::to_string(ell));
    const auto algebra = make_uniform(Shape::Cyclic, n, r);
    return select(pairs, [&](const SupportPair& p) {
        const auto support = composition_support(algebra, p.module);
        if (ell == 0) return !support[static_cast<std::size_t>(n)];
        return has_all(support, n - ell + 1, n) && !support[static_cast<std::size_t>(n - ell)];
    });
}

std::vector<SupportPair> set_K(int n, int r, int ell) {
    const auto pairs = enumerate_support_tau_tilting(make_uniform(Shape::Cyclic, n, r));
    return set_K(n, r, ell, pairs);
}

}  // namespace tautilt
