#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace excycle {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One machine word per neighbor set; graphs are capped at 64 vertices.
using VertexMask = std::uint64_t;

constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

constexpr VertexMask low_vertices(int n) {
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

template <typename F>
inline void for_each_vertex(VertexMask m, F&& f) {
    while (m != 0) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

// Immutable simple undirected graph on 1..64 vertices.
class Graph {
public:
    static constexpr int max_vertices = 64;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        check_order(n);
        std::vector<VertexMask> adj(static_cast<std::size_t>(n), 0);
        for (const auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw Error("edge endpoint out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v)
                throw Error("self-loop rejected at vertex " + std::to_string(u));
            adj[static_cast<std::size_t>(u)] |= vertex_bit(v);
            adj[static_cast<std::size_t>(v)] |= vertex_bit(u);
        }
        return Graph(n, std::move(adj));
    }

    static Graph from_adjacency(int n, std::vector<VertexMask> adj) {
        check_order(n);
        if (adj.size() != static_cast<std::size_t>(n))
            throw Error("adjacency size does not match vertex count");
        for (int v = 0; v < n; ++v) {
            if ((adj[static_cast<std::size_t>(v)] & ~low_vertices(n)) != 0)
                throw Error("neighbor index out of range");
            if ((adj[static_cast<std::size_t>(v)] >> v & 1) != 0)
                throw Error("self-loop rejected at vertex " + std::to_string(v));
        }
        for (int v = 0; v < n; ++v)
            for_each_vertex(adj[static_cast<std::size_t>(v)], [&](int u) {
                if ((adj[static_cast<std::size_t>(u)] >> v & 1) == 0)
                    throw Error("adjacency not symmetric");
            });
        return Graph(n, std::move(adj));
    }

    int vertex_count() const { return n_; }

    VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v & 1) != 0; }

    int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for_each_vertex(adj_[static_cast<std::size_t>(u)] & ~low_vertices(u + 1),
                            [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
        std::sort(d.begin(), d.end(), std::greater<int>());
        return d;
    }

    // Value-immutable: adding an edge yields a new graph.
    Graph with_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            throw Error("with_edge: invalid endpoints");
        auto adj = adj_;
        adj[static_cast<std::size_t>(u)] |= vertex_bit(v);
        adj[static_cast<std::size_t>(v)] |= vertex_bit(u);
        return Graph(n_, std::move(adj));
    }

    bool operator==(const Graph&) const = default;

private:
    Graph(int n, std::vector<VertexMask> adj) : n_(n), adj_(std::move(adj)) {}

    static void check_order(int n) {
        if (n < 1 || n > max_vertices)
            throw Error("vertex count must be in 1..64, got " + std::to_string(n));
    }

    int n_;
    std::vector<VertexMask> adj_;
};

inline VertexMask reach_from(const Graph& g, int start, VertexMask allowed) {
    VertexMask seen = vertex_bit(start) & allowed;
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        frontier = next & allowed & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    VertexMask all = low_vertices(g.vertex_count());
    return reach_from(g, 0, all) == all;
}

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<int> coloring;   // one color (0/1) per vertex when bipartite
    std::vector<int> odd_cycle;  // cyclically adjacent vertex sequence of odd length otherwise
};

inline BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));

    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        queue.clear();
        queue.push_back(root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            bool conflict = false;
            int cu = 0, cv = 0;
            for_each_vertex(g.neighbors(u), [&](int v) {
                if (conflict) return;
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(v)] = u;
                    depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    conflict = true;
                    cu = u;
                    cv = v;
                }
            });
            if (conflict) {
                // Close the two BFS-tree paths at their lowest common ancestor.
                std::vector<int> side_u, side_v;
                int x = cu, y = cv;
                while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) {
                    side_u.push_back(x);
                    x = parent[static_cast<std::size_t>(x)];
                }
                while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) {
                    side_v.push_back(y);
                    y = parent[static_cast<std::size_t>(y)];
                }
                while (x != y) {
                    side_u.push_back(x);
                    side_v.push_back(y);
                    x = parent[static_cast<std::size_t>(x)];
                    y = parent[static_cast<std::size_t>(y)];
                }
                BipartiteCheck out;
                out.bipartite = false;
                out.odd_cycle = std::move(side_u);
                out.odd_cycle.push_back(x);
                out.odd_cycle.insert(out.odd_cycle.end(), side_v.rbegin(), side_v.rend());
                return out;
            }
        }
    }
    BipartiteCheck out;
    out.bipartite = true;
    out.coloring = std::move(color);
    return out;
}

// Cut vertices plus the vertex sets of the blocks (maximal 2-connected
// subgraphs and bridge edges) of a connected graph.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;

    std::size_t block_count() const { return blocks.size(); }

    std::vector<int> block_sizes() const {
        std::vector<int> s;
        s.reserve(blocks.size());
        for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
        std::sort(s.begin(), s.end(), std::greater<int>());
        return s;
    }
};

namespace detail {

struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<char> is_cut;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    explicit BlockDfs(const Graph& graph)
        : g(graph),
          disc(static_cast<std::size_t>(graph.vertex_count()), 0),
          low(static_cast<std::size_t>(graph.vertex_count()), 0),
          is_cut(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    void pop_block(int u, int v) {
        VertexMask members = 0;
        while (true) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            members |= vertex_bit(a) | vertex_bit(b);
            if (a == u && b == v) break;
        }
        std::vector<int> verts;
        for_each_vertex(members, [&](int x) { verts.push_back(x); });
        blocks.push_back(std::move(verts));
    }

    void run(int u, int parent) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++timer;
        int children = 0;
        for_each_vertex(g.neighbors(u), [&](int v) {
            if (v == parent) return;
            if (disc[static_cast<std::size_t>(v)] == 0) {
                ++children;
                edge_stack.emplace_back(u, v);
                run(v, u);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                    if (parent != -1 || children > 1) is_cut[static_cast<std::size_t>(u)] = 1;
                    pop_block(u, v);
                }
            } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
                edge_stack.emplace_back(u, v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        });
    }
};

}  // namespace detail

inline BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g)) throw Error("block decomposition requires a connected graph");
    detail::BlockDfs dfs(g);
    dfs.run(0, -1);

    BlockDecomposition out;
    out.blocks = std::move(dfs.blocks);
    for (auto& b : out.blocks) std::sort(b.begin(), b.end());
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() > b.size() : a < b;
              });
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfs.is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    return out;
}

inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    if (!is_connected(g)) return false;
    return block_decomposition(g).block_count() == 1;
}

}  // namespace excycle
