#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cfc {

using Edge = std::pair<int, int>;

struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    // dedups, drops nothing else; throws InputError on self-loops or bad ids
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int m() const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const; // u < v, sorted

    void add_edge(int u, int v); // keeps lists sorted; no-op on duplicates
    int add_vertex();

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

// sorted, duplicate-free
using VertexSet = std::vector<int>;

VertexSet make_set(std::vector<int> v);
bool contains(const VertexSet& s, int v);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
bool has_isolated_vertex(const Graph& g);

// subgraph induced by keep (sorted); map[i] is the original id of new vertex i
Graph induced(const Graph& g, const VertexSet& keep, std::vector<int>* map = nullptr);
Graph remove_vertices(const Graph& g, const VertexSet& drop, std::vector<int>* map = nullptr);

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_forest(const Graph& g);
bool is_fvs(const Graph& g, const VertexSet& x);

struct ExactLimits {
    int vc_max_n = 64;
    int fvs_max_n = 40;
};

VertexSet min_vertex_cover(const Graph& g, const ExactLimits& lim = {});
VertexSet min_fvs(const Graph& g, const ExactLimits& lim = {});

enum class StarKind { star, edge_star, neither };
StarKind classify_star(const Graph& g);
const char* to_string(StarKind k);

} // namespace cfc
