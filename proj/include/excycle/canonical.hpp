#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "excycle/graph.hpp"
#include "excycle/graph6.hpp"

namespace excycle {

inline constexpr int default_canonical_limit = 12;

// Relabeling-invariant encoding: the lexicographically minimal upper-triangle
// bit matrix over admissible vertex orderings. Column t packs the adjacency
// of position t to positions 0..t-1 (earlier position = higher bit), so the
// concatenated columns are exactly the graph6 payload bit order.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint64_t> columns;

    bool operator==(const CanonicalForm&) const = default;

    bool operator<(const CanonicalForm& other) const {
        if (n != other.n) return n < other.n;
        return columns < other.columns;
    }

    Graph to_graph() const {
        std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
        for (int t = 1; t < n; ++t) {
            const std::uint64_t col = columns[static_cast<std::size_t>(t - 1)];
            for (int i = 0; i < t; ++i) {
                if ((col >> (t - 1 - i) & 1) != 0) {
                    adj[static_cast<std::size_t>(i)] |= vertex_bit(t);
                    adj[static_cast<std::size_t>(t)] |= vertex_bit(i);
                }
            }
        }
        return Graph::from_adjacency(n, std::move(adj));
    }

    std::vector<std::pair<int, int>> edges() const { return to_graph().edges(); }

    std::string graph6() const { return g6_encode(to_graph()); }
};

namespace detail {

struct CanonicalSearch {
    const Graph& g;
    int n;
    std::vector<int> sig_class;                // per vertex, index into the sorted signature list
    std::vector<int> class_at_position;        // required signature class per position
    std::vector<int> twin_rep;                 // smallest vertex whose transposition fixes g
    std::vector<std::uint64_t> best;           // best columns found so far (sentinel-max past the frontier)
    std::vector<int> order;
    std::vector<std::uint64_t> run_col;        // running column value per unused vertex
    VertexMask used = 0;

    static constexpr std::uint64_t unset = std::numeric_limits<std::uint64_t>::max();

    explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        build_signatures();
        build_twins();
        best.assign(static_cast<std::size_t>(n > 1 ? n - 1 : 0), unset);
        order.assign(static_cast<std::size_t>(n), -1);
        run_col.assign(static_cast<std::size_t>(n), 0);
    }

    void build_signatures() {
        using Sig = std::pair<int, std::vector<int>>;
        std::vector<Sig> sigs(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> nbr_degs;
            for_each_vertex(g.neighbors(v), [&](int u) { nbr_degs.push_back(g.degree(u)); });
            std::sort(nbr_degs.begin(), nbr_degs.end());
            sigs[static_cast<std::size_t>(v)] = {g.degree(v), std::move(nbr_degs)};
        }
        std::vector<Sig> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Sig> unique_sigs = sorted;
        unique_sigs.erase(std::unique(unique_sigs.begin(), unique_sigs.end()), unique_sigs.end());

        sig_class.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            sig_class[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(unique_sigs.begin(), unique_sigs.end(), sigs[static_cast<std::size_t>(v)]) -
                unique_sigs.begin());
        class_at_position.resize(static_cast<std::size_t>(n));
        for (int t = 0; t < n; ++t)
            class_at_position[static_cast<std::size_t>(t)] = static_cast<int>(
                std::lower_bound(unique_sigs.begin(), unique_sigs.end(), sorted[static_cast<std::size_t>(t)]) -
                unique_sigs.begin());
    }

    // Vertices whose transposition is an automorphism yield identical subtrees;
    // the relation is transitive, so a representative per class suffices.
    void build_twins() {
        twin_rep.assign(static_cast<std::size_t>(n), -1);
        for (int u = 0; u < n; ++u) {
            if (twin_rep[static_cast<std::size_t>(u)] != -1) continue;
            twin_rep[static_cast<std::size_t>(u)] = u;
            for (int v = u + 1; v < n; ++v) {
                if (twin_rep[static_cast<std::size_t>(v)] != -1) continue;
                const VertexMask outside = ~(vertex_bit(u) | vertex_bit(v));
                if ((g.neighbors(u) & outside) == (g.neighbors(v) & outside))
                    twin_rep[static_cast<std::size_t>(v)] = u;
            }
        }
    }

    void place(int t, int v) {
        order[static_cast<std::size_t>(t)] = v;
        used |= vertex_bit(v);
        for (int w = 0; w < n; ++w)
            if ((used >> w & 1) == 0)
                run_col[static_cast<std::size_t>(w)] =
                    run_col[static_cast<std::size_t>(w)] << 1 | (g.has_edge(v, w) ? 1u : 0u);
    }

    void unplace(int t, int v) {
        used &= ~vertex_bit(v);
        for (int w = 0; w < n; ++w)
            if ((used >> w & 1) == 0 && w != v) run_col[static_cast<std::size_t>(w)] >>= 1;
        run_col[static_cast<std::size_t>(v)] = 0;  // rebuilt when its turn comes again
        order[static_cast<std::size_t>(t)] = -1;
    }

    std::uint64_t column_of(int t, int v) const {
        std::uint64_t col = 0;
        for (int i = 0; i < t; ++i)
            col = col << 1 | (g.has_edge(order[static_cast<std::size_t>(i)], v) ? 1u : 0u);
        return col;
    }

    void dfs(int t) {
        if (t == n) return;  // best[] already equals the current columns
        std::vector<std::pair<std::uint64_t, int>> cands;
        VertexMask seen_twin = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v & 1) != 0) continue;
            if (sig_class[static_cast<std::size_t>(v)] != class_at_position[static_cast<std::size_t>(t)])
                continue;
            const int rep = twin_rep[static_cast<std::size_t>(v)];
            if ((seen_twin >> rep & 1) != 0) continue;
            seen_twin |= vertex_bit(rep);
            cands.emplace_back(column_of(t, v), v);
        }
        std::sort(cands.begin(), cands.end());
        for (const auto& [col, v] : cands) {
            if (t > 0) {
                if (col > best[static_cast<std::size_t>(t - 1)]) break;
                if (col < best[static_cast<std::size_t>(t - 1)]) {
                    best[static_cast<std::size_t>(t - 1)] = col;
                    for (std::size_t j = static_cast<std::size_t>(t); j < best.size(); ++j)
                        best[j] = unset;
                }
            }
            place(t, v);
            dfs(t + 1);
            unplace(t, v);
        }
    }
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g, int limit = default_canonical_limit) {
    const int n = g.vertex_count();
    if (n > limit)
        throw Error("canonical form limited to " + std::to_string(limit) + " vertices, got " +
                    std::to_string(n));
    CanonicalForm out;
    out.n = n;
    if (n == 1) return out;
    detail::CanonicalSearch search(g);
    search.dfs(0);
    out.columns = std::move(search.best);
    return out;
}

inline bool is_isomorphic(const Graph& a, const Graph& b, int limit = default_canonical_limit) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a, limit) == canonical_form(b, limit);
}

}  // namespace excycle
