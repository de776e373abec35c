#include "cfc/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "cfc/errors.hpp"

namespace cfc {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges)
{
    if (n < 0)
        throw InputError("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge endpoint out of range");
        if (u == v)
            throw InputError("self-loop on vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

int Graph::m() const
{
    std::size_t s = 0;
    for (auto& a : adj)
        s += a.size();
    return static_cast<int>(s / 2);
}

bool Graph::has_edge(int u, int v) const
{
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v)
                e.emplace_back(u, v);
    return e;
}

void Graph::add_edge(int u, int v)
{
    if (u == v)
        throw InputError("self-loop on vertex " + std::to_string(u));
    auto ins = [](std::vector<int>& a, int x) {
        auto it = std::lower_bound(a.begin(), a.end(), x);
        if (it == a.end() || *it != x)
            a.insert(it, x);
    };
    ins(adj[u], v);
    ins(adj[v], u);
}

int Graph::add_vertex()
{
    adj.emplace_back();
    return n++;
}

VertexSet make_set(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const VertexSet& s, int v)
{
    return std::binary_search(s.begin(), s.end(), v);
}

std::vector<std::vector<int>> components(const Graph& g)
{
    std::vector<int> seen(g.n, 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s])
            continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.adj[comp[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.n > 0 && components(g).size() == 1;
}

bool has_isolated_vertex(const Graph& g)
{
    for (auto& a : g.adj)
        if (a.empty())
            return true;
    return false;
}

Graph induced(const Graph& g, const VertexSet& keep, std::vector<int>* map)
{
    std::vector<int> idx(g.n, -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        idx[keep[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (int w : g.adj[keep[i]])
            if (idx[w] >= 0)
                h.adj[i].push_back(idx[w]);
    if (map)
        *map = keep;
    return h;
}

Graph remove_vertices(const Graph& g, const VertexSet& drop, std::vector<int>* map)
{
    VertexSet keep;
    for (int v = 0; v < g.n; ++v)
        if (!contains(drop, v))
            keep.push_back(v);
    return induced(g, keep, map);
}

bool is_vertex_cover(const Graph& g, const VertexSet& s)
{
    for (auto [u, v] : g.edges())
        if (!contains(s, u) && !contains(s, v))
            return false;
    return true;
}

bool is_forest(const Graph& g)
{
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges()) {
        int a = find(u), b = find(v);
        if (a == b)
            return false;
        parent[a] = b;
    }
    return true;
}

bool is_fvs(const Graph& g, const VertexSet& x)
{
    return is_forest(remove_vertices(g, x));
}

// ---------------------------------------------------------------- vertex cover

namespace {

struct VcSearch {
    int n;
    std::vector<std::uint64_t> nb;
    int best;
    std::uint64_t best_set;

    int deg(int v, std::uint64_t alive) const { return std::popcount(nb[v] & alive); }

    int matching_bound(std::uint64_t alive) const
    {
        int lb = 0;
        std::uint64_t left = alive;
        while (left) {
            int v = std::countr_zero(left);
            left &= left - 1;
            std::uint64_t cand = nb[v] & left;
            if (cand) {
                left &= ~(std::uint64_t(1) << std::countr_zero(cand));
                ++lb;
            }
        }
        return lb;
    }

    void run(std::uint64_t alive, std::uint64_t taken, int size)
    {
        // degree-one rule: taking the neighbour is always safe
        bool again = true;
        while (again) {
            again = false;
            for (std::uint64_t a = alive; a;) {
                int v = std::countr_zero(a);
                a &= a - 1;
                int d = deg(v, alive);
                if (d == 0) {
                    alive &= ~(std::uint64_t(1) << v);
                } else if (d == 1) {
                    int w = std::countr_zero(nb[v] & alive);
                    taken |= std::uint64_t(1) << w;
                    ++size;
                    alive &= ~((std::uint64_t(1) << v) | (std::uint64_t(1) << w));
                    again = true;
                    break;
                }
            }
        }
        if (size >= best)
            return;
        if (!alive) {
            best = size;
            best_set = taken;
            return;
        }
        if (size + matching_bound(alive) >= best)
            return;
        int pick = -1, pd = -1;
        for (std::uint64_t a = alive; a;) {
            int v = std::countr_zero(a);
            a &= a - 1;
            int d = deg(v, alive);
            if (d > pd) {
                pd = d;
                pick = v;
            }
        }
        std::uint64_t bit = std::uint64_t(1) << pick;
        run(alive & ~bit, taken | bit, size + 1);
        std::uint64_t nbs = nb[pick] & alive;
        run(alive & ~bit & ~nbs, taken | nbs, size + pd);
    }
};

} // namespace

VertexSet min_vertex_cover(const Graph& g, const ExactLimits& lim)
{
    if (g.n > lim.vc_max_n || g.n > 64)
        throw ResourceLimit("min_vertex_cover: n=" + std::to_string(g.n) + " exceeds guard " +
                            std::to_string(lim.vc_max_n));
    VcSearch s{g.n, std::vector<std::uint64_t>(g.n, 0), g.n + 1, 0};
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v])
            s.nb[v] |= std::uint64_t(1) << w;
    std::uint64_t all = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    s.run(all, 0, 0);
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (s.best_set >> v & 1)
            out.push_back(v);
    return out;
}

// ------------------------------------------------------------ feedback vertex set
//
// Branching on multigraphs with a set P of undeletable vertices kept independent
// by contraction. Edge multiplicities are capped at 2 (a double edge already is a
// cycle).

namespace {

struct FvsState {
    int n;
    std::vector<std::uint8_t> cnt; // n*n multiplicities, diagonal = self-loops
    std::uint64_t alive = 0, perm = 0;
    std::uint64_t deleted = 0;
    int size = 0;

    std::uint8_t& at(int a, int b) { return cnt[a * n + b]; }
    std::uint8_t at(int a, int b) const { return cnt[a * n + b]; }

    int degree(int v) const
    {
        int d = 0;
        for (std::uint64_t a = alive; a;) {
            int w = std::countr_zero(a);
            a &= a - 1;
            if (w != v)
                d += at(v, w);
        }
        return d;
    }

    void drop(int v) // remove without deleting
    {
        alive &= ~(std::uint64_t(1) << v);
        for (int w = 0; w < n; ++w)
            at(v, w) = at(w, v) = 0;
    }
    void del(int v)
    {
        deleted |= std::uint64_t(1) << v;
        ++size;
        drop(v);
    }
    void add(int a, int b, int k)
    {
        int c = std::min(2, at(a, b) + k);
        at(a, b) = at(b, a) = static_cast<std::uint8_t>(c);
    }
    // merge permanent u into permanent p; false if a cycle through P appears
    bool merge(int p, int u)
    {
        int between = at(p, u);
        for (int w = 0; w < n; ++w) {
            if (w == p || w == u)
                continue;
            if (at(u, w))
                add(p, w, at(u, w));
        }
        if (between >= 2 || at(u, u))
            return false;
        drop(u);
        return true;
    }
    bool isperm(int v) const { return perm >> v & 1; }

    // exhaustively apply safe rules; false means infeasible
    bool reduce()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint64_t a = alive; a;) {
                int v = std::countr_zero(a);
                a &= a - 1;
                if (!(alive >> v & 1))
                    continue;
                if (at(v, v)) {
                    if (isperm(v))
                        return false;
                    del(v);
                    changed = true;
                    continue;
                }
                if (!isperm(v)) {
                    bool dbl = false;
                    for (std::uint64_t p = perm & alive; p;) {
                        int w = std::countr_zero(p);
                        p &= p - 1;
                        if (at(v, w) >= 2)
                            dbl = true;
                    }
                    if (dbl) {
                        del(v);
                        changed = true;
                        continue;
                    }
                }
                int d = degree(v);
                if (d <= 1) {
                    drop(v);
                    changed = true;
                    continue;
                }
                if (d == 2) {
                    int x = -1, y = -1;
                    for (std::uint64_t b = alive; b;) {
                        int w = std::countr_zero(b);
                        b &= b - 1;
                        if (w == v)
                            continue;
                        for (int k = 0; k < at(v, w); ++k)
                            (x < 0 ? x : y) = w;
                    }
                    if (x == y) { // double edge v=x
                        if (isperm(x)) {
                            if (isperm(v))
                                return false;
                            del(v);
                        } else {
                            del(x);
                        }
                        changed = true;
                        continue;
                    }
                    if (!isperm(v) && isperm(x) && isperm(y))
                        continue;
                    drop(v);
                    add(x, y, 1);
                    changed = true;
                }
            }
        }
        return true;
    }

    int cyclomatic() const
    {
        int nv = std::popcount(alive), m = 0;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = nv;
        for (std::uint64_t a = alive; a;) {
            int u = std::countr_zero(a);
            a &= a - 1;
            for (std::uint64_t b = a; b;) {
                int w = std::countr_zero(b);
                b &= b - 1;
                if (at(u, w)) {
                    m += at(u, w);
                    int ru = find(u), rw = find(w);
                    if (ru != rw) {
                        parent[ru] = rw;
                        --comps;
                    }
                }
            }
        }
        return m - nv + comps;
    }
};

struct FvsSearch {
    int best;
    std::uint64_t best_set = 0;

    void run(FvsState s)
    {
        if (!s.reduce() || s.size >= best)
            return;
        if (!s.alive) {
            best = s.size;
            best_set = s.deleted;
            return;
        }
        int pick = -1, pd = -1, maxd = 0;
        for (std::uint64_t a = s.alive & ~s.perm; a;) {
            int v = std::countr_zero(a);
            a &= a - 1;
            int d = s.degree(v);
            maxd = std::max(maxd, d);
            if (d > pd) {
                pd = d;
                pick = v;
            }
        }
        if (pick < 0) // everything permanent yet edges remain: cycle through P
            return;
        int cyc = s.cyclomatic();
        if (cyc > 0) {
            if (maxd < 2)
                return;
            int lb = (cyc + maxd - 2) / (maxd - 1);
            if (s.size + lb >= best)
                return;
        }
        {
            FvsState t = s;
            t.del(pick);
            run(std::move(t));
        }
        {
            FvsState t = std::move(s);
            t.perm |= std::uint64_t(1) << pick;
            for (std::uint64_t p = t.perm & t.alive; p;) {
                int w = std::countr_zero(p);
                p &= p - 1;
                if (w != pick && t.at(pick, w))
                    if (!t.merge(pick, w))
                        return;
            }
            run(std::move(t));
        }
    }
};

} // namespace

VertexSet min_fvs(const Graph& g, const ExactLimits& lim)
{
    if (g.n > lim.fvs_max_n || g.n > 64)
        throw ResourceLimit("min_fvs: n=" + std::to_string(g.n) + " exceeds guard " +
                            std::to_string(lim.fvs_max_n));
    FvsState s;
    s.n = g.n;
    s.cnt.assign(static_cast<std::size_t>(g.n) * g.n, 0);
    for (auto [u, v] : g.edges())
        s.at(u, v) = s.at(v, u) = 1;
    s.alive = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    FvsSearch search{g.n + 1};
    search.run(std::move(s));
    VertexSet out;
    for (int v = 0; v < g.n; ++v)
        if (search.best_set >> v & 1)
            out.push_back(v);
    return out;
}

// ----------------------------------------------------------------- star shapes

StarKind classify_star(const Graph& g)
{
    if (g.n < 2)
        throw InputError("classify_star: need at least two vertices");
    if (!is_connected(g))
        throw InputError("classify_star: graph is disconnected");
    int m = g.m();
    for (int c = 0; c < g.n; ++c)
        if (g.degree(c) == g.n - 1 && m == g.n - 1)
            return StarKind::star;
    for (auto [u, v] : g.edges()) {
        bool ok = true;
        for (int w = 0; w < g.n && ok; ++w) {
            if (w == u || w == v)
                continue;
            ok = g.adj[w] == std::vector<int>{std::min(u, v), std::max(u, v)};
        }
        if (ok)
            return StarKind::edge_star;
    }
    return StarKind::neither;
}

const char* to_string(StarKind k)
{
    switch (k) {
    case StarKind::star:
        return "star";
    case StarKind::edge_star:
        return "edge-star";
    default:
        return "neither";
    }
}

} // namespace cfc
