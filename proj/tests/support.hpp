#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cfc/bounds.hpp"
#include "cfc/convolution.hpp"
#include "cfc/dp.hpp"
#include "cfc/formats.hpp"
#include "cfc/generators.hpp"
#include "cfc/graph.hpp"
#include "cfc/kernel.hpp"

namespace testing {

using namespace cfc;

inline Graph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph cycle(int n)
{
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph complete(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// K_{1,leaves}, center 0
inline Graph star(int leaves)
{
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

// ---- isomorphism-free enumeration -------------------------------------------

using Adj = std::vector<std::uint32_t>; // row bitmasks, n <= 8

inline Adj to_adj(const Graph& g)
{
    Adj a(g.n, 0);
    for (auto [u, v] : g.edges()) {
        a[u] |= 1u << v;
        a[v] |= 1u << u;
    }
    return a;
}

inline Graph from_adj(const Adj& a)
{
    int n = static_cast<int>(a.size());
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a[u] >> v & 1)
                e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

// vertex classes from a few rounds of colour refinement
inline std::vector<int> refine(const Adj& a)
{
    int n = static_cast<int>(a.size());
    std::vector<int> cls(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{cls[v]};
            std::vector<int> nb;
            for (int u = 0; u < n; ++u)
                if (a[v] >> u & 1)
                    nb.push_back(cls[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {s, v};
        }
        std::vector<std::vector<int>> keys;
        for (auto& s : sig)
            keys.push_back(s.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        if (next == cls)
            break;
        cls = next;
    }
    return cls;
}

// canonical upper-triangle bitstring: minimum over class-respecting orders
inline std::uint64_t canonical(const Adj& a)
{
    int n = static_cast<int>(a.size());
    auto cls = refine(a);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return cls[x] != cls[y] ? cls[x] < cls[y] : x < y; });
    // permute only within runs of equal class
    std::vector<std::pair<int, int>> runs;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && cls[order[j]] == cls[order[i]])
            ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t(0);
    auto code = [&] {
        std::uint64_t c = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                c = c << 1 | (a[order[i]] >> order[j] & 1);
        return c;
    };
    auto rec = [&](auto&& self, std::size_t r) -> void {
        if (r == runs.size()) {
            best = std::min(best, code());
            return;
        }
        auto [lo, hi] = runs[r];
        std::sort(order.begin() + lo, order.begin() + hi);
        do
            self(self, r + 1);
        while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

// all graphs on n vertices up to isomorphism, by vertex extension
inline std::vector<Adj> all_graphs(int n)
{
    std::vector<Adj> level{Adj{}};
    for (int k = 1; k <= n; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<Adj> next;
        for (const Adj& a : level)
            for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                Adj b = a;
                b.push_back(nb);
                for (int u = 0; u < k - 1; ++u)
                    if (nb >> u & 1)
                        b[u] |= 1u << (k - 1);
                if (seen.insert(canonical(b)).second)
                    next.push_back(b);
            }
        level = std::move(next);
    }
    return level;
}

inline std::vector<Graph> connected_graphs(int n)
{
    std::vector<Graph> out;
    for (const Adj& a : all_graphs(n)) {
        Graph g = from_adj(a);
        if (is_connected(g))
            out.push_back(std::move(g));
    }
    return out;
}

// ---- naive oracles ----------------------------------------------------------

inline std::vector<std::int64_t> naive_maxsum(const std::vector<std::int64_t>& f,
                                              const std::vector<std::int64_t>& g, int n)
{
    std::vector<std::int64_t> h(std::size_t(1) << n, NEG_INF);
    for (std::uint32_t y = 0; y < h.size(); ++y)
        for (std::uint32_t a = y;; a = (a - 1) & y) {
            if (f[a] != NEG_INF && g[y ^ a] != NEG_INF)
                h[y] = std::max(h[y], f[a] + g[y ^ a]);
            if (a == 0)
                break;
        }
    return h;
}

inline std::vector<std::int64_t> naive_ring(const std::vector<std::int64_t>& f,
                                            const std::vector<std::int64_t>& g, int n)
{
    std::vector<std::int64_t> h(std::size_t(1) << n, 0);
    for (std::uint32_t y = 0; y < h.size(); ++y)
        for (std::uint32_t a = y;; a = (a - 1) & y) {
            h[y] = static_cast<std::int64_t>(static_cast<std::uint64_t>(h[y]) +
                                             static_cast<std::uint64_t>(f[a]) * static_cast<std::uint64_t>(g[y ^ a]));
            if (a == 0)
                break;
        }
    return h;
}

inline bool lit_true(int lit, std::uint32_t assign)
{
    bool v = assign >> (std::abs(lit) - 1) & 1;
    return lit > 0 ? v : !v;
}

inline bool brute_sat(const Cnf& f)
{
    for (std::uint32_t a = 0; a < (1u << f.vars); ++a)
        if (std::all_of(f.clauses.begin(), f.clauses.end(), [&](const Clause& c) {
                return std::any_of(c.begin(), c.end(), [&](int l) { return lit_true(l, a); });
            }))
            return true;
    return false;
}

// monotone clauses; exactly one distinct variable per clause is true
inline bool brute_exact_one(const Cnf& f)
{
    for (std::uint32_t a = 0; a < (1u << f.vars); ++a) {
        bool ok = true;
        for (const Clause& c : f.clauses) {
            std::set<int> on;
            for (int l : c)
                if (a >> (l - 1) & 1)
                    on.insert(l);
            ok = ok && on.size() == 1;
        }
        if (ok)
            return true;
    }
    return false;
}

inline Cnf random_3cnf(int vars, int clauses, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> var(1, vars);
    std::bernoulli_distribution neg(0.5);
    Cnf f{vars, {}};
    for (int j = 0; j < clauses; ++j) {
        Clause c;
        for (int t = 0; t < 3; ++t)
            c.push_back(neg(rng) ? -var(rng) : var(rng));
        f.clauses.push_back(c);
    }
    return f;
}

inline Cnf random_monotone(int vars, int clauses, int max_len, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> var(1, vars), len(1, max_len);
    Cnf f{vars, {}};
    for (int j = 0; j < clauses; ++j) {
        Clause c;
        for (int t = len(rng); t > 0; --t)
            c.push_back(var(rng));
        f.clauses.push_back(c);
    }
    return f;
}

// connected graph with a vertex cover of at most `vc`: cover vertices plus
// outside vertices attached only to the cover
inline Graph random_small_cover(int n, int vc, double p, std::mt19937_64& rng)
{
    vc = std::clamp(vc, 1, n);
    std::uniform_int_distribution<int> pick(0, vc - 1);
    std::bernoulli_distribution coin(p);
    for (;;) {
        std::vector<Edge> e;
        for (int i = 0; i < vc; ++i)
            for (int j = i + 1; j < vc; ++j)
                if (coin(rng))
                    e.emplace_back(i, j);
        for (int v = vc; v < n; ++v) {
            e.emplace_back(v, pick(rng));
            for (int u = 0; u < vc; ++u)
                if (coin(rng))
                    e.emplace_back(v, u);
        }
        Graph g = Graph::from_edges(n, e);
        if (is_connected(g))
            return g;
    }
}

inline bool dp_yes(Neighborhood mode, const Graph& g, int q, const Coloring* pre = nullptr)
{
    if (g.n == 0)
        return true;
    return dp_solve(mode, g, auto_nice(g), q, pre).yes;
}

} // namespace testing
