#pragma once

// Combinatorial model of Nakayama algebras.
//
// A Nakayama algebra is determined by the orientation of its quiver
// (linear A_n: 1 -> 2 -> ... -> n, or cyclic: n -> 1 closes the loop) and
// its Kupisch series c_1..c_n, the Loewy lengths of the indecomposable
// projectives. Every indecomposable module is uniserial and is encoded by
// its top vertex and its length; the composition factors of (a, l) are
// S_a, S_{a+1}, ..., S_{a+l-1} (indices mod n on the cyclic quiver).
//
// Vertices are 1-based throughout.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tautilt {

enum class Shape { Linear, Cyclic };

std::string to_string(Shape shape);

/// Indecomposable uniserial module: top vertex and composition length.
struct Indec {
    int top = 1;
    int len = 1;

    auto operator<=>(const Indec&) const = default;
};

/// Renders as "M(top,len)".
std::string to_string(const Indec& m);

/// A basic module: a canonically ordered, duplicate-free set of
/// indecomposables. The empty set is the zero module.
class ModuleSet {
public:
    ModuleSet() = default;
    explicit ModuleSet(std::vector<Indec> items);

    const std::vector<Indec>& items() const { return items_; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    bool contains(const Indec& m) const;

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    auto operator<=>(const ModuleSet&) const = default;

private:
    std::vector<Indec> items_;
};

/// "M(1,1)+M(1,2)", or "0" for the zero module.
std::string to_string(const ModuleSet& m);

/// Sorted list of distinct vertices.
using VertexSet = std::vector<int>;

class AlgebraSpec {
public:
    /// The zero algebra.
    AlgebraSpec() = default;

    Shape shape() const { return shape_; }
    int n() const { return static_cast<int>(kupisch_.size()); }
    std::span<const int> kupisch() const { return kupisch_; }

    /// Loewy length of the projective at vertex a.
    int loewy(int a) const { return kupisch_[static_cast<std::size_t>(a - 1)]; }

    /// Reduces an arbitrary integer vertex label into [1, n] (cyclic only;
    /// identity on linear algebras).
    int wrap(int vertex) const;

    bool valid(const Indec& m) const;
    bool is_projective(const Indec& m) const { return m.len == loewy(m.top); }

    bool operator==(const AlgebraSpec&) const = default;

private:
    friend AlgebraSpec make_uniform(Shape, int, int);
    friend AlgebraSpec make_linear_kupisch(std::vector<int>);

    AlgebraSpec(Shape shape, std::vector<int> kupisch)
        : shape_(shape), kupisch_(std::move(kupisch)) {}

    Shape shape_ = Shape::Linear;
    std::vector<int> kupisch_;
};

/// Linear: c_a = min(r, n - a + 1). Cyclic: c_a = r.
/// Throws std::invalid_argument for n < 0 or r < 1.
AlgebraSpec make_uniform(Shape shape, int n, int r);

/// Validates a linear Kupisch series: c_n = 1, c_a >= 1 and
/// c_a <= c_{a+1} + 1. The diagnostic names the first offending index.
AlgebraSpec make_linear_kupisch(std::vector<int> kupisch);

/// All indecomposables (a, l), 1 <= l <= c_a, ordered by (top, len).
std::vector<Indec> indecomposables(const AlgebraSpec& algebra);

/// Auslander-Reiten translate; nullopt for projectives.
std::optional<Indec> tau(const AlgebraSpec& algebra, const Indec& m);

/// dim Hom(M, N). Linear algebras give 0 or 1; on the cyclic quiver the
/// top-quotient / socle-submodule match can occur once per winding.
int hom_dim(const AlgebraSpec& algebra, const Indec& m, const Indec& n);

bool hom_nonzero(const AlgebraSpec& algebra, const Indec& m, const Indec& n);

/// Composition factors of M as a multiset of vertices, top first.
std::vector<int> composition_vertices(const AlgebraSpec& algebra, const Indec& m);

struct QuotientComponent {
    AlgebraSpec algebra;
    /// vertex_map[j - 1] is the parent vertex of component vertex j.
    std::vector<int> vertex_map;

    Indec lift(const Indec& m) const { return {vertex_map[static_cast<std::size_t>(m.top - 1)], m.len}; }
};

struct QuotientResult {
    std::vector<QuotientComponent> components;
};

/// Quotient by the idempotents of the killed vertices. Surviving vertices
/// split into maximal (cyclically, for the cyclic quiver) contiguous
/// segments, each a linear Nakayama algebra whose Loewy lengths are
/// truncated at the segment end. Killing nothing on a cyclic algebra
/// returns the algebra itself.
QuotientResult quotient_kill(const AlgebraSpec& algebra, const VertexSet& killed);

}  // namespace tautilt
