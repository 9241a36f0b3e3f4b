#pragma once

// Brute-force enumeration of tau-tilting and support tau-tilting modules.
//
// A basic module is tau-rigid exactly when every summand X satisfies
// Hom(X, tau X) = 0 and every pair X, Y satisfies Hom(X, tau Y) = 0 and
// Hom(Y, tau X) = 0. tau-tilting modules are therefore the cliques of size
// n in the compatibility graph on the self-compatible indecomposables.
// Support tau-tilting modules are enumerated by killing every vertex
// subset and taking tau-tilting modules over the quotient.

#include <boost/dynamic_bitset.hpp>

#include <span>
#include <vector>

#include "tautilt/algebra.hpp"

namespace tautilt {

struct SupportPair {
    ModuleSet module;
    VertexSet killed;

    bool operator==(const SupportPair&) const = default;
};

/// Canonical order: killed set as a bitmask (vertex v is bit v-1)
/// ascending, then module.
bool support_order(const SupportPair& lhs, const SupportPair& rhs);

class CompatGraph {
public:
    explicit CompatGraph(const AlgebraSpec& algebra);

    const std::vector<Indec>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i].test(j); }
    const boost::dynamic_bitset<>& neighbours(std::size_t i) const { return adjacency_[i]; }

private:
    std::vector<Indec> nodes_;
    std::vector<boost::dynamic_bitset<>> adjacency_;
};

inline CompatGraph build_compat_graph(const AlgebraSpec& algebra) { return CompatGraph(algebra); }

/// True iff every member is self-compatible and all pairs are compatible.
bool is_tau_rigid(const AlgebraSpec& algebra, const ModuleSet& module);

/// All basic tau-tilting modules, canonically sorted.
std::vector<ModuleSet> enumerate_tau_tilting(const AlgebraSpec& algebra);

/// All support tau-tilting modules with their killed sets, canonically
/// sorted. `threads` > 1 splits the killed sets across workers; the result
/// does not depend on it. Requires n <= 30.
std::vector<SupportPair> enumerate_support_tau_tilting(const AlgebraSpec& algebra, unsigned threads = 1);

/// Vertices occurring as composition factors of the module, as a 1-based
/// membership mask (index 0 unused).
std::vector<bool> composition_support(const AlgebraSpec& algebra, const ModuleSet& module);

bool is_sincere(const AlgebraSpec& algebra, const ModuleSet& module);

struct ProperSplit {
    std::vector<SupportPair> proper;
    /// Proper ones without a summand that is projective over the parent.
    std::vector<SupportPair> proper_np;
};

ProperSplit filter_proper_np(const AlgebraSpec& algebra, std::span<const SupportPair> pairs);

/// Support modules having S_1..S_{i-1} but not S_i as composition factors.
/// Linear algebras only, 1 <= i <= n.
std::vector<SupportPair> filter_W(const AlgebraSpec& algebra, std::span<const SupportPair> pairs, int i);
std::vector<SupportPair> filter_W(const AlgebraSpec& algebra, int i);

/// Support modules having S_1..S_ell as composition factors, 0 <= ell <= n.
std::vector<SupportPair> filter_V(const AlgebraSpec& algebra, std::span<const SupportPair> pairs, int ell);
std::vector<SupportPair> filter_V(const AlgebraSpec& algebra, int ell);

/// Over the uniform linear algebra with n vertices and radical power r:
/// support modules without P_1, ..., P_{n-r+1} as summands.
std::vector<SupportPair> set_X(int n, int r);
std::vector<SupportPair> set_X(int n, int r, std::span<const SupportPair> pairs);

/// Members of set_X having S_1..S_ell as composition factors.
std::vector<SupportPair> set_Y(int n, int r, int ell);
std::vector<SupportPair> set_Y(int n, int r, int ell, std::span<const SupportPair> pairs);

/// Over the uniform cyclic algebra: for ell >= 1 the support modules having
/// S_n, ..., S_{n-ell+1} but not S_{n-ell}; for ell = 0 those avoiding S_n.
/// 0 <= ell <= n - 1.
std::vector<SupportPair> set_K(int n, int r, int ell);
std::vector<SupportPair> set_K(int n, int r, int ell, std::span<const SupportPair> pairs);

}  // namespace tautilt
