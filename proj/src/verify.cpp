#include "cfc/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cfc/errors.hpp"

namespace cfc {

bool Coloring::total() const
{
    return std::none_of(color.begin(), color.end(), [](int c) { return c == 0; });
}

int Coloring::distinct() const
{
    std::set<int> s;
    for (int c : color)
        if (c)
            s.insert(c);
    return static_cast<int>(s.size());
}

namespace {

void check_shape(const Graph& g, const Coloring& c)
{
    if (static_cast<int>(c.color.size()) != g.n)
        throw InputError("coloring length differs from vertex count");
    for (int x : c.color)
        if (x < 0 || x > c.q)
            throw InputError("color value out of range");
}

// does some color occur exactly once among the colored members?
template <class It>
bool has_unique(It first, It last, const std::vector<int>& col, std::vector<int>& cnt)
{
    bool found = false;
    for (It i = first; i != last; ++i)
        if (col[*i])
            ++cnt[col[*i]];
    for (It i = first; i != last; ++i)
        if (col[*i] && cnt[col[*i]] == 1)
            found = true;
    for (It i = first; i != last; ++i)
        cnt[col[*i]] = 0;
    return found;
}

bool closed_ok(const Graph& g, int v, const std::vector<int>& col, std::vector<int>& cnt)
{
    bool found = false;
    if (col[v])
        ++cnt[col[v]];
    for (int w : g.adj[v])
        if (col[w])
            ++cnt[col[w]];
    if (col[v] && cnt[col[v]] == 1)
        found = true;
    for (int w : g.adj[v])
        if (col[w] && cnt[col[w]] == 1)
            found = true;
    cnt[col[v]] = 0;
    for (int w : g.adj[v])
        cnt[col[w]] = 0;
    return found;
}

} // namespace

std::optional<int> verify_oncf(const Graph& g, const Coloring& c)
{
    check_shape(g, c);
    if (!c.total())
        throw InputError("verify_oncf needs a total coloring");
    std::vector<int> cnt(c.q + 1, 0);
    for (int v = 0; v < g.n; ++v)
        if (!has_unique(g.adj[v].begin(), g.adj[v].end(), c.color, cnt))
            return v;
    return std::nullopt;
}

std::optional<int> verify_cncf(const Graph& g, const Coloring& c)
{
    check_shape(g, c);
    std::vector<int> cnt(c.q + 1, 0);
    for (int v = 0; v < g.n; ++v)
        if (!closed_ok(g, v, c.color, cnt))
            return v;
    return std::nullopt;
}

bool is_proper(const Graph& g, const Coloring& c)
{
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v])
            return false;
    return true;
}

// ------------------------------------------------------------------ brute force

namespace {

void guard(double base, int free, const BruteLimits& lim)
{
    double nominal = std::pow(base, free);
    if (nominal > lim.max_enum)
        throw ResourceLimit("enumeration of " + std::to_string(nominal) +
                            " colorings exceeds guard " + std::to_string(lim.max_enum));
}

struct Backtrack {
    const Graph& g;
    bool closed;
    int lo, hi; // value range per free vertex
    const Coloring* pre;
    std::vector<std::vector<int>> check_at; // vertices whose neighbourhood completes at index i
    std::vector<int> col, cnt;

    Backtrack(const Graph& g_, bool closed_, int lo_, int hi_, const Coloring* pre_)
        : g(g_), closed(closed_), lo(lo_), hi(hi_), pre(pre_), check_at(g_.n), col(g_.n, 0),
          cnt(hi_ + 2, 0)
    {
        for (int v = 0; v < g.n; ++v) {
            int last = closed ? v : -1;
            for (int w : g.adj[v])
                last = std::max(last, w);
            if (last >= 0)
                check_at[last].push_back(v);
        }
    }

    bool ok_at(int i)
    {
        for (int v : check_at[i]) {
            bool good = closed ? closed_ok(g, v, col, cnt)
                               : has_unique(g.adj[v].begin(), g.adj[v].end(), col, cnt);
            if (!good)
                return false;
        }
        return true;
    }

    bool run(int i)
    {
        if (i == g.n)
            return true;
        int fixed = pre ? pre->color[i] : 0;
        int a = fixed ? fixed : lo, b = fixed ? fixed : hi;
        for (int x = a; x <= b; ++x) {
            col[i] = x;
            if (ok_at(i) && run(i + 1))
                return true;
        }
        col[i] = 0;
        return false;
    }
};

int free_count(const Graph& g, const Coloring* pre)
{
    if (!pre)
        return g.n;
    if (static_cast<int>(pre->color.size()) != g.n)
        throw InputError("precoloring length differs from vertex count");
    return static_cast<int>(std::count(pre->color.begin(), pre->color.end(), 0));
}

} // namespace

std::optional<Coloring> brute_oncf(const Graph& g, int q, const Coloring* pre, const BruteLimits& lim)
{
    if (q < 1)
        return std::nullopt;
    guard(q, free_count(g, pre), lim);
    if (has_isolated_vertex(g))
        return std::nullopt;
    Backtrack bt(g, false, 1, q, pre);
    if (!bt.run(0))
        return std::nullopt;
    return Coloring(q, bt.col);
}

std::optional<Coloring> brute_cncf(const Graph& g, int q, bool partial, const Coloring* pre,
                                   const BruteLimits& lim)
{
    if (q < 1)
        return std::nullopt;
    guard(partial ? q + 1 : q, free_count(g, pre), lim);
    Backtrack bt(g, true, partial ? 0 : 1, q, pre);
    if (!bt.run(0))
        return std::nullopt;
    return Coloring(q, bt.col);
}

std::optional<int> brute_chi_on(const Graph& g, int q_max, const BruteLimits& lim)
{
    guard(q_max, g.n, lim);
    if (has_isolated_vertex(g))
        return std::nullopt;
    for (int q = 1; q <= q_max; ++q)
        if (brute_oncf(g, q, nullptr, lim))
            return q;
    return std::nullopt;
}

std::optional<int> brute_chi_cn(const Graph& g, int q_max, bool partial, const BruteLimits& lim)
{
    guard(partial ? q_max + 1 : q_max, g.n, lim);
    for (int q = 1; q <= q_max; ++q)
        if (brute_cncf(g, q, partial, nullptr, lim))
            return q;
    return std::nullopt;
}

bool brute_extension_cncf(const Graph& g, const VertexSet& s, const Coloring& pre, int q,
                          const BruteLimits& lim)
{
    if (!is_vertex_cover(g, s))
        throw InputError("brute_extension_cncf: s is not a vertex cover");
    if (static_cast<int>(pre.color.size()) != g.n)
        throw InputError("precoloring length differs from vertex count");
    for (int v = 0; v < g.n; ++v)
        if ((pre.color[v] != 0) != contains(s, v))
            throw InputError("precoloring must color exactly the cover");
    return brute_cncf(g, q, false, &pre, lim).has_value();
}

std::optional<Coloring> brute_proper(const Graph& g, int q, const BruteLimits& lim)
{
    if (q < 1)
        return g.n == 0 ? std::optional<Coloring>(Coloring(q, 0)) : std::nullopt;
    guard(q, g.n, lim);
    std::vector<int> col(g.n, 0);
    auto run = [&](auto&& self, int i) -> bool {
        if (i == g.n)
            return true;
        for (int x = 1; x <= q; ++x) {
            bool ok = true;
            for (int w : g.adj[i])
                if (w < i && col[w] == x) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            col[i] = x;
            if (self(self, i + 1))
                return true;
        }
        col[i] = 0;
        return false;
    };
    if (!run(run, 0))
        return std::nullopt;
    return Coloring(q, col);
}

int chromatic_number(const Graph& g)
{
    BruteLimits unlimited{1e300};
    for (int q = 0;; ++q)
        if (brute_proper(g, q, unlimited))
            return q;
}

} // namespace cfc
