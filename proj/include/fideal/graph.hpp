#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fideal/monomial.hpp"

namespace fideal {

/// Simple undirected graph on vertices 1..n, stored as neighbour masks.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] bool has_edge(int i, int j) const noexcept;
    [[nodiscard]] Mask neighbours(int v) const noexcept { return adj_[static_cast<std::size_t>(v - 1)]; }
    [[nodiscard]] int degree(int v) const noexcept;
    [[nodiscard]] std::size_t edge_count() const noexcept;
    /// Edges (i, j) with i < j in ascending order.
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;

    void add_edge(int i, int j);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_;
    std::vector<Mask> adj_;
};

/// tau: x_i x_j in A becomes the edge v_i v_j. A must be homogeneous of degree 2.
[[nodiscard]] Graph to_graph(const MonomialSet& a);
/// Inverse of to_graph.
[[nodiscard]] MonomialSet to_monomials(const Graph& g);

[[nodiscard]] Graph complement(const Graph& g);
[[nodiscard]] bool is_triangle_free(const Graph& g) noexcept;
/// Every vertex degree is strictly below bound.
[[nodiscard]] bool max_degree_below(const Graph& g, int bound) noexcept;

struct Bipartiteness {
    bool bipartite = false;
    /// Connected components as vertex masks, ordered by smallest vertex.
    std::vector<Mask> components;
    /// Per component, the colour class holding its smallest vertex (bipartite case).
    std::vector<Mask> sides;
    /// Vertices of an odd cycle in walk order (non-bipartite case).
    std::vector<int> odd_cycle;

    /// Every global bipartition as the part containing vertex 1, with trivial parts
    /// (empty or all of [n]) left out; 2^(components - 1) candidates before that filter.
    [[nodiscard]] std::vector<Mask> bipartitions(int n) const;
};

[[nodiscard]] Bipartiteness is_bipartite(const Graph& g);

/// Complement-graph conditions for a degree-2 generator set.
struct FCReport {
    bool cond_degree = false;       // every complement degree < n - 1
    bool cond_clique = false;       // complement triangle-free with at least one edge
    bool cond_edgecount = false;    // complement has C(n,2)/2 edges
    bool cond_nonbipartite = false;
    bool satisfies_fc = false;

    /// The first three conditions together: the degree-2 f-ideal criterion.
    [[nodiscard]] bool f_ideal_conditions() const noexcept { return cond_degree && cond_clique && cond_edgecount; }
};

[[nodiscard]] FCReport check_fc(const MonomialSet& a);

enum class IdealType { type_l, c5_exceptional };

struct TypeReport {
    IdealType kind;
    /// min(|B|, n - |B|) for type_l, 0 otherwise.
    int l = 0;
    /// The witness part B containing vertex 1 and its complement (type_l only).
    Mask witness = 0;
    Mask witness_complement = 0;
    /// Odd cycle of the complement graph (c5_exceptional only).
    std::vector<int> odd_cycle;
};

/// Classifies a degree-2 f-ideal by the unique {B, complement of B} with W_B in G(I),
/// or as one of the 5-cycle ideals. Throws InputError on anything else and
/// InconsistencyError if the witness is not unique.
[[nodiscard]] TypeReport detect_type(const Ideal& ideal);

}  // namespace fideal
