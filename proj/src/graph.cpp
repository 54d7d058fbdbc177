#include "fideal/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "fideal/engine.hpp"
#include "fideal/error.hpp"
#include "fideal/perfect.hpp"

namespace fideal {

namespace {

Mask bit_of(int v) { return Mask{1} << (v - 1); }

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) { check_ambient(n); }

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [i, j] : edges) add_edge(i, j);
}

void Graph::add_edge(int i, int j) {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw InputError("edge endpoint outside [1, n]");
    if (i == j) throw InputError("self-loops are not allowed");
    adj_[static_cast<std::size_t>(i - 1)] |= bit_of(j);
    adj_[static_cast<std::size_t>(j - 1)] |= bit_of(i);
}

bool Graph::has_edge(int i, int j) const noexcept {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return (adj_[static_cast<std::size_t>(i - 1)] & bit_of(j)) != 0;
}

int Graph::degree(int v) const noexcept { return std::popcount(adj_[static_cast<std::size_t>(v - 1)]); }

std::size_t Graph::edge_count() const noexcept {
    std::size_t twice = 0;
    for (Mask m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i) {
        for (int j : mask_indices(neighbours(i))) {
            if (j > i) out.emplace_back(i, j);
        }
    }
    return out;
}

Graph to_graph(const MonomialSet& a) {
    Graph g(a.ambient());
    for (const auto& m : a) {
        if (m.degree() != 2) throw InputError("to_graph needs degree-2 monomials, got " + to_string(m));
        auto idx = m.indices();
        g.add_edge(idx[0], idx[1]);
    }
    return g;
}

MonomialSet to_monomials(const Graph& g) {
    std::vector<Mask> members;
    for (auto [i, j] : g.edges()) members.push_back(bit_of(i) | bit_of(j));
    return MonomialSet(g.order(), std::span<const Mask>(members));
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!g.has_edge(i, j)) out.add_edge(i, j);
        }
    }
    return out;
}

bool is_triangle_free(const Graph& g) noexcept {
    for (auto [i, j] : g.edges()) {
        if (g.neighbours(i) & g.neighbours(j)) return false;
    }
    return true;
}

bool max_degree_below(const Graph& g, int bound) noexcept {
    for (int v = 1; v <= g.order(); ++v) {
        if (g.degree(v) >= bound) return false;
    }
    return true;
}

std::vector<Mask> Bipartiteness::bipartitions(int n) const {
    std::vector<Mask> out;
    if (!bipartite || components.empty()) return out;
    const Mask all = full_mask(n);
    const std::size_t free_components = components.size() - 1;
    if (free_components >= 63) throw BudgetExceeded("too many components to list bipartitions");
    for (Mask flips = 0; flips < (Mask{1} << free_components); ++flips) {
        Mask b = sides[0];
        for (std::size_t c = 1; c < components.size(); ++c) {
            bool flip = (flips >> (c - 1)) & 1u;
            b |= flip ? (components[c] & ~sides[c]) : sides[c];
        }
        if (b != 0 && b != all) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Bipartiteness is_bipartite(const Graph& g) {
    const int n = g.order();
    Bipartiteness result;
    result.bipartite = true;
    std::vector<int> colour(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> depth(static_cast<std::size_t>(n) + 1, 0);

    for (int root = 1; root <= n; ++root) {
        if (colour[root] != -1) continue;
        Mask component = 0, side = 0;
        std::deque<int> queue{root};
        colour[root] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            component |= bit_of(u);
            if (colour[u] == 0) side |= bit_of(u);
            for (int v : mask_indices(g.neighbours(u))) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (colour[v] == colour[u] && result.odd_cycle.empty()) {
                    // Climb both BFS-tree paths to their meeting point.
                    std::vector<int> left{u}, right{v};
                    int a = u, b = v;
                    while (a != b) {
                        if (depth[a] >= depth[b]) {
                            a = parent[a];
                            left.push_back(a);
                        } else {
                            b = parent[b];
                            right.push_back(b);
                        }
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    result.odd_cycle = std::move(left);
                    result.bipartite = false;
                }
            }
        }
        result.components.push_back(component);
        result.sides.push_back(side);
    }
    if (!result.bipartite) result.sides.clear();
    return result;
}

FCReport check_fc(const MonomialSet& a) {
    const Graph comp = complement(to_graph(a));
    const int n = a.ambient();
    FCReport r;
    r.cond_degree = max_degree_below(comp, n - 1);
    r.cond_clique = is_triangle_free(comp) && comp.edge_count() > 0;
    r.cond_edgecount = 2 * comp.edge_count() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    r.cond_nonbipartite = !is_bipartite(comp).bipartite;
    r.satisfies_fc = r.cond_degree && r.cond_clique && r.cond_edgecount && r.cond_nonbipartite;
    return r;
}

TypeReport detect_type(const Ideal& ideal) {
    const int n = ideal.ambient();
    if (!ideal.is_homogeneous() || ideal.degree() != 2) {
        throw InputError("type detection needs an ideal generated in degree 2");
    }
    if (!is_f_ideal(ideal).is_f_ideal) throw InputError("type detection needs an f-ideal");

    const Graph comp = complement(to_graph(ideal.generators()));
    const Bipartiteness bp = is_bipartite(comp);
    if (!bp.bipartite) {
        const bool five_cycle = n == 5 && comp.edge_count() == 5 && bp.components.size() == 1 &&
                                max_degree_below(comp, 3) && bp.odd_cycle.size() == 5;
        if (!five_cycle) {
            throw InconsistencyError("typeless degree-2 f-ideal whose complement is not a 5-cycle: " +
                                     to_string(ideal));
        }
        return {IdealType::c5_exceptional, 0, 0, 0, bp.odd_cycle};
    }

    std::vector<Mask> witnesses;
    for (Mask b : bp.bipartitions(n)) {
        if (two_part_construction(n, b).is_subset_of(ideal.generators())) witnesses.push_back(b);
    }
    if (witnesses.size() != 1) {
        throw InconsistencyError("expected exactly one two-part witness, found " + std::to_string(witnesses.size()) +
                                 " for " + to_string(ideal));
    }
    const Mask b = witnesses.front();
    const int size = std::popcount(b);
    return {IdealType::type_l, std::min(size, n - size), b, full_mask(n) & ~b, {}};
}

}  // namespace fideal
