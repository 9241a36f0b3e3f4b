#include "tautilt/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace tautilt {

std::string to_string(Shape shape) {
    return shape == Shape::Linear ? "linear" : "cyclic";
}

std::string to_string(const Indec& m) {
    return "M(" + std::to_string(m.top) + "," + std::to_string(m.len) + ")";
}

ModuleSet::ModuleSet(std::vector<Indec> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool ModuleSet::contains(const Indec& m) const {
    return std::binary_search(items_.begin(), items_.end(), m);
}

std::string to_string(const ModuleSet& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& x : m) {
        if (!out.empty()) out += '+';
        out += to_string(x);
    }
    return out;
}

int AlgebraSpec::wrap(int vertex) const {
    if (shape_ == Shape::Linear || n() == 0) return vertex;
    const int k = n();
    return ((vertex - 1) % k + k) % k + 1;
}

bool AlgebraSpec::valid(const Indec& m) const {
    return m.top >= 1 && m.top <= n() && m.len >= 1 && m.len <= loewy(m.top);
}

AlgebraSpec make_uniform(Shape shape, int n, int r) {
    if (n < 0) throw std::invalid_argument("vertex count must be >= 0, got " + std::to_string(n));
    if (r < 1) throw std::invalid_argument("radical power r must be >= 1, got " + std::to_string(r));
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a) {
        c[static_cast<std::size_t>(a - 1)] = shape == Shape::Linear ? std::min(r, n - a + 1) : r;
    }
    return AlgebraSpec(shape, std::move(c));
}

AlgebraSpec make_linear_kupisch(std::vector<int> kupisch) {
    const auto n = kupisch.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (kupisch[i] <= 0) {
            throw std::invalid_argument("kupisch entry at index " + std::to_string(i + 1) +
                                        " must be positive, got " + std::to_string(kupisch[i]));
        }
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (kupisch[i] > kupisch[i + 1] + 1) {
            throw std::invalid_argument("kupisch entry at index " + std::to_string(i + 1) + " is " +
                                        std::to_string(kupisch[i]) + ", exceeds next entry + 1 = " +
                                        std::to_string(kupisch[i + 1] + 1));
        }
    }
    if (n > 0 && kupisch.back() != 1) {
        throw std::invalid_argument("kupisch entry at index " + std::to_string(n) +
                                    " (last vertex) must be 1, got " + std::to_string(kupisch.back()));
    }
    return AlgebraSpec(Shape::Linear, std::move(kupisch));
}

std::vector<Indec> indecomposables(const AlgebraSpec& algebra) {
    std::vector<Indec> out;
    for (int a = 1; a <= algebra.n(); ++a) {
        for (int l = 1; l <= algebra.loewy(a); ++l) out.push_back({a, l});
    }
    return out;
}

std::optional<Indec> tau(const AlgebraSpec& algebra, const Indec& m) {
    if (algebra.is_projective(m)) return std::nullopt;
    // c_a <= c_{a+1} + 1 keeps the shifted module inside the algebra; on the
    // linear quiver the last vertex is simple projective so top + 1 <= n.
    return Indec{algebra.wrap(m.top + 1), m.len};
}

int hom_dim(const AlgebraSpec& algebra, const Indec& m, const Indec& n) {
    const int a = m.top, l = m.len, b = n.top, k = n.len;
    if (algebra.shape() == Shape::Linear) {
        return (b <= a && a <= b + k - 1 && a + l >= b + k) ? 1 : 0;
    }
    // A map of image length j identifies the length-j top quotient (a, j)
    // of M with the length-j socle submodule (b + k - j, j) of N, which
    // requires a == b + k - j (mod n).
    const int cycle = algebra.n();
    const int first = ((b + k - a - 1) % cycle + cycle) % cycle + 1;
    const int longest = std::min(l, k);
    if (first > longest) return 0;
    return (longest - first) / cycle + 1;
}

bool hom_nonzero(const AlgebraSpec& algebra, const Indec& m, const Indec& n) {
    return hom_dim(algebra, m, n) > 0;
}

std::vector<int> composition_vertices(const AlgebraSpec& algebra, const Indec& m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m.len));
    for (int j = 0; j < m.len; ++j) out.push_back(algebra.wrap(m.top + j));
    return out;
}

namespace {

QuotientComponent make_segment(const AlgebraSpec& parent, std::vector<int> vertices) {
    const int m = static_cast<int>(vertices.size());
    std::vector<int> c(vertices.size());
    for (int j = 1; j <= m; ++j) {
        c[static_cast<std::size_t>(j - 1)] =
            std::min(parent.loewy(vertices[static_cast<std::size_t>(j - 1)]), m - j + 1);
    }
    return {make_linear_kupisch(std::move(c)), std::move(vertices)};
}

}  // namespace

QuotientResult quotient_kill(const AlgebraSpec& algebra, const VertexSet& killed) {
    const int n = algebra.n();
    std::vector<bool> dead(static_cast<std::size_t>(n) + 1, false);
    for (int v : killed) {
        if (v < 1 || v > n) throw std::invalid_argument("killed vertex " + std::to_string(v) + " out of range");
        dead[static_cast<std::size_t>(v)] = true;
    }

    QuotientResult out;
    const bool none_killed = std::none_of(dead.begin(), dead.end(), [](bool d) { return d; });
    if (algebra.shape() == Shape::Cyclic && none_killed) {
        std::vector<int> identity(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) identity[static_cast<std::size_t>(v - 1)] = v;
        out.components.push_back({algebra, std::move(identity)});
        return out;
    }

    // Walk the quiver in arrow order. On the cyclic quiver start right after
    // a killed vertex so no surviving segment is split by the wrap-around.
    int start = 1;
    if (algebra.shape() == Shape::Cyclic) {
        int first_dead = 1;
        while (!dead[static_cast<std::size_t>(first_dead)]) ++first_dead;
        start = algebra.wrap(first_dead + 1);
    }
    std::vector<int> segment;
    for (int step = 0; step < n; ++step) {
        const int v = algebra.wrap(start + step);
        if (dead[static_cast<std::size_t>(v)]) {
            if (!segment.empty()) out.components.push_back(make_segment(algebra, std::move(segment)));
            segment.clear();
        } else {
            segment.push_back(v);
        }
    }
    if (!segment.empty()) out.components.push_back(make_segment(algebra, std::move(segment)));
    return out;
}

}  // namespace tautilt
