#include "cfc/dp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "cfc/convolution.hpp"
#include "cfc/errors.hpp"

namespace cfc {

namespace {

using u64 = std::uint64_t;
constexpr int MAXB = 64;

// key = (colour part << b) | f-mask; the colour part packs (c1, c2) per bag
// position, so sorting a table groups states by colouring
struct Layout {
    int b = 0, bc = 1;
    u64 cmask = 1;

    Layout(int b_, int q) : b(b_)
    {
        bc = std::max(1, static_cast<int>(std::bit_width(static_cast<unsigned>(std::max(q - 1, 0)))));
        cmask = (u64(1) << bc) - 1;
        if (b * (2 * bc + 1) > 64)
            throw ResourceLimit("bag of size " + std::to_string(b) + " does not fit the 64-bit state key for q=" +
                                std::to_string(q));
    }
    u64 fbits() const { return b == 0 ? 0 : (b >= 64 ? ~u64(0) : (u64(1) << b) - 1); }
};

struct St {
    int c1[MAXB], c2[MAXB];
    unsigned char f[MAXB];
};

inline void decode(const Layout& L, u64 key, St& s)
{
    u64 cp = key >> L.b;
    for (int p = 0; p < L.b; ++p) {
        s.f[p] = key >> p & 1;
        s.c1[p] = static_cast<int>(cp & L.cmask);
        cp >>= L.bc;
        s.c2[p] = static_cast<int>(cp & L.cmask);
        cp >>= L.bc;
    }
}

inline u64 encode(const Layout& L, const St& s)
{
    u64 cp = 0, fm = 0;
    for (int p = L.b - 1; p >= 0; --p) {
        cp = (cp << L.bc) | static_cast<u64>(s.c2[p]);
        cp = (cp << L.bc) | static_cast<u64>(s.c1[p]);
    }
    for (int p = 0; p < L.b; ++p)
        fm |= u64(s.f[p]) << p;
    return (cp << L.b) | fm;
}

inline u64 low_bits(int k)
{
    return k >= 64 ? ~u64(0) : (u64(1) << k) - 1;
}

inline u64 insert_field(u64 x, int at, int width, u64 val)
{
    u64 high = at >= 64 ? 0 : x >> at;
    u64 r = (x & low_bits(at)) | (val << at);
    if (at + width < 64)
        r |= high << (at + width);
    return r;
}

inline u64 remove_field(u64 x, int at, int width)
{
    u64 high = at + width >= 64 ? 0 : x >> (at + width);
    return (x & low_bits(at)) | (at >= 64 ? 0 : high << at);
}

int pos_of(const VertexSet& bag, int v)
{
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

void finish(std::vector<u64>& t)
{
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
}

struct Runner {
    Neighborhood mode;
    const Graph& g;
    const NiceTreeDecomposition& nt;
    int q;
    const Coloring* pre;
    const DpOptions& opt;
    DpStats stats;
    std::vector<std::vector<u64>> tables;

    bool closed() const { return mode == Neighborhood::closed; }

    int fixed(int v) const { return pre && pre->color[v] ? pre->color[v] - 1 : -1; }

    // positions adjacent to position p inside the bag
    std::vector<u64> bag_adjacency(const VertexSet& bag) const
    {
        std::vector<u64> m(bag.size(), 0);
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = 0; j < bag.size(); ++j)
                if (i != j && g.has_edge(bag[i], bag[j]))
                    m[i] |= u64(1) << j;
        return m;
    }

    void guard(std::size_t sz, int b)
    {
        if (sz > opt.max_states)
            throw ResourceLimit("DP table of " + std::to_string(sz) + " states exceeds guard " +
                                std::to_string(opt.max_states));
        stats.max_table = std::max(stats.max_table, sz);
        if (static_cast<double>(sz) > std::pow(2.0 * q * q, b))
            stats.within_state_bound = false;
    }

    std::vector<u64> leaf(const NiceNode& x)
    {
        Layout L(1, q);
        int z = x.bag[0];
        std::vector<u64> out;
        St s;
        for (int a = 0; a < q; ++a) {
            if (fixed(z) >= 0 && a != fixed(z))
                continue;
            for (int c = 0; c < q; ++c) {
                s.c1[0] = a;
                s.c2[0] = c;
                s.f[0] = closed() && a == c;
                out.push_back(encode(L, s));
            }
        }
        finish(out);
        return out;
    }

    std::vector<u64> introduce(const NiceNode& x, const std::vector<u64>& child)
    {
        const VertexSet& cb = nt.nodes[x.children[0]].bag;
        Layout Lc(static_cast<int>(cb.size()), q), L(static_cast<int>(x.bag.size()), q);
        int v = x.vertex, p = pos_of(x.bag, v), w2 = 2 * L.bc;
        std::vector<std::pair<int, int>> nb; // (position in bag, position in child bag)
        for (int i = 0; i < L.b; ++i)
            if (i != p && g.has_edge(v, x.bag[i]))
                nb.emplace_back(i, i < p ? i : i - 1);
        std::vector<int> seen1(q);
        std::vector<u64> want2(q);
        std::vector<u64> out;
        out.reserve(child.size() * q);
        for (u64 key : child) {
            u64 cp = key >> Lc.b, fm = key & Lc.fbits();
            std::fill(seen1.begin(), seen1.end(), 0);
            std::fill(want2.begin(), want2.end(), 0);
            for (auto [w, cw] : nb) {
                ++seen1[(cp >> (cw * w2)) & L.cmask];
                want2[(cp >> (cw * w2 + L.bc)) & L.cmask] |= u64(1) << w;
            }
            u64 nf = insert_field(fm, p, 1, 0), ncp = insert_field(cp, p * w2, w2, 0);
            for (int a = 0; a < q; ++a) {
                if (fixed(v) >= 0 && a != fixed(v))
                    continue;
                if (nf & want2[a])
                    continue;
                for (int c = 0; c < q; ++c) {
                    int cnt = seen1[c] + (closed() && a == c);
                    if (cnt >= 2)
                        continue;
                    u64 f = nf | want2[a] | (u64(cnt) << p);
                    u64 col = ncp | ((u64(a) | (u64(c) << L.bc)) << (p * w2));
                    out.push_back((col << L.b) | f);
                }
            }
        }
        finish(out);
        return out;
    }

    std::vector<u64> forget(const NiceNode& x, const std::vector<u64>& child)
    {
        const VertexSet& cb = nt.nodes[x.children[0]].bag;
        Layout Lc(static_cast<int>(cb.size()), q), L(static_cast<int>(x.bag.size()), q);
        int p = pos_of(cb, x.vertex), w2 = 2 * L.bc;
        std::vector<u64> out;
        for (u64 key : child) {
            if (!(key >> p & 1))
                continue;
            u64 cp = remove_field(key >> Lc.b, p * w2, w2), fm = remove_field(key & Lc.fbits(), p, 1);
            out.push_back((cp << L.b) | fm);
        }
        finish(out);
        return out;
    }

    // positions whose c2-colour already occurs exactly once among bag neighbours;
    // both branches have seen that neighbour, so f must be 1 on each side
    u64 doubly_seen(const Layout& L, const std::vector<u64>& adj, u64 cp) const
    {
        St s;
        decode(L, cp << L.b, s);
        u64 d = 0;
        for (int p = 0; p < L.b; ++p) {
            int cnt = closed() && s.c1[p] == s.c2[p];
            for (u64 m = adj[p]; m; m &= m - 1)
                if (s.c1[std::countr_zero(m)] == s.c2[p])
                    ++cnt;
            if (cnt == 1)
                d |= u64(1) << p;
        }
        return d;
    }

    static void merge_naive(const std::vector<u64>& fa, const std::vector<u64>& fb, u64 d,
                            std::vector<u64>& res)
    {
        for (u64 x : fa)
            for (u64 y : fb)
                if (!(x & y & ~d))
                    res.push_back(x | y);
    }

    static void merge_fast(const std::vector<u64>& fa, const std::vector<u64>& fb, u64 d, int b,
                           std::vector<u64>& res)
    {
        std::vector<int> upos;
        for (int p = 0; p < b; ++p)
            if (!(d >> p & 1))
                upos.push_back(p);
        int u = static_cast<int>(upos.size());
        auto squeeze = [&](u64 x) {
            u64 r = 0;
            for (int i = 0; i < u; ++i)
                r |= (x >> upos[i] & 1) << i;
            return r;
        };
        std::vector<std::int64_t> A(std::size_t(1) << u, NEG_INF), B(A);
        for (u64 x : fa)
            A[squeeze(x)] = 0;
        for (u64 y : fb)
            B[squeeze(y)] = 0;
        auto C = subset_convolution_maxsum(A, B, u);
        for (std::size_t z = 0; z < C.size(); ++z) {
            if (C[z] == NEG_INF)
                continue;
            u64 r = d;
            for (int i = 0; i < u; ++i)
                r |= (u64(z) >> i & 1) << upos[i];
            res.push_back(r);
        }
    }

    std::vector<u64> join(const NiceNode& x, const std::vector<u64>& A, const std::vector<u64>& B)
    {
        Layout L(static_cast<int>(x.bag.size()), q);
        auto adj = bag_adjacency(x.bag);
        u64 fm = L.fbits();
        std::vector<u64> out, fa, fb, res, other;
        std::size_t i = 0, j = 0;
        ++stats.joins;
        while (i < A.size() && j < B.size()) {
            u64 ca = A[i] >> L.b, cb = B[j] >> L.b;
            if (ca < cb) {
                ++i;
                continue;
            }
            if (cb < ca) {
                ++j;
                continue;
            }
            u64 d = doubly_seen(L, adj, ca);
            fa.clear();
            fb.clear();
            for (; i < A.size() && (A[i] >> L.b) == ca; ++i)
                if (((A[i] & fm) & d) == d)
                    fa.push_back(A[i] & fm);
            for (; j < B.size() && (B[j] >> L.b) == ca; ++j)
                if (((B[j] & fm) & d) == d)
                    fb.push_back(B[j] & fm);
            if (fa.empty() || fb.empty())
                continue;
            int u = L.b - std::popcount(d);
            bool fast = u > opt.join_cutoff;
            res.clear();
            if (fast) {
                ++stats.fast_joins;
                merge_fast(fa, fb, d, L.b, res);
            } else {
                merge_naive(fa, fb, d, res);
            }
            finish(res);
            if (opt.check_joins) {
                other.clear();
                if (fast)
                    merge_naive(fa, fb, d, other);
                else
                    merge_fast(fa, fb, d, L.b, other);
                finish(other);
                ++stats.join_checks;
                if (other != res)
                    ++stats.join_mismatches;
            }
            for (u64 r : res)
                out.push_back((ca << L.b) | r);
            guard(out.size(), L.b);
        }
        finish(out);
        return out;
    }

    void run(bool keep)
    {
        if (nt.nodes.empty() || nt.root != static_cast<int>(nt.nodes.size()) - 1)
            throw InputError("dp: decomposition must list children before parents, root last");
        if (q < 1)
            throw InputError("dp: q must be positive");
        if (pre) {
            if (static_cast<int>(pre->color.size()) != g.n)
                throw InputError("dp: precoloring length differs from vertex count");
            for (int c : pre->color)
                if (c < 0 || c > q)
                    throw InputError("dp: precolor outside 1..q");
        }
        tables.assign(nt.nodes.size(), {});
        stats.nodes = nt.nodes.size();
        for (std::size_t i = 0; i < nt.nodes.size(); ++i) {
            const NiceNode& x = nt.nodes[i];
            std::vector<u64> t;
            switch (x.kind) {
            case NodeKind::leaf:
                t = leaf(x);
                break;
            case NodeKind::introduce:
                t = introduce(x, tables[x.children[0]]);
                break;
            case NodeKind::forget:
                t = forget(x, tables[x.children[0]]);
                break;
            case NodeKind::join:
                t = join(x, tables[x.children[0]], tables[x.children[1]]);
                break;
            }
            guard(t.size(), static_cast<int>(x.bag.size()));
            if (!keep)
                for (int c : x.children)
                    std::vector<u64>().swap(tables[c]);
            tables[i] = std::move(t);
        }
    }

    bool accepted(u64* root_key = nullptr) const
    {
        for (u64 k : tables[nt.root])
            if (k & 1) {
                if (root_key)
                    *root_key = k;
                return true;
            }
        return false;
    }

    bool present(int node, u64 key) const
    {
        const auto& t = tables[node];
        return std::binary_search(t.begin(), t.end(), key);
    }

    // walk down from the accepted root state, choosing one consistent child state per node
    Coloring trace(u64 root_key)
    {
        Coloring c(q, g.n);
        std::vector<u64> chosen(nt.nodes.size(), 0);
        chosen[nt.root] = root_key;
        St s, cs;
        for (int i = nt.root; i >= 0; --i) {
            const NiceNode& x = nt.nodes[i];
            Layout L(static_cast<int>(x.bag.size()), q);
            u64 key = chosen[i];
            decode(L, key, s);
            for (int p = 0; p < L.b; ++p)
                c.color[x.bag[p]] = s.c1[p] + 1;
            switch (x.kind) {
            case NodeKind::leaf:
                break;
            case NodeKind::introduce: {
                int ch = x.children[0];
                Layout Lc(L.b - 1, q);
                int p = pos_of(x.bag, x.vertex);
                for (int w = 0, j = 0; w < L.b; ++w) {
                    if (w == p)
                        continue;
                    cs.c1[j] = s.c1[w];
                    cs.c2[j] = s.c2[w];
                    cs.f[j] = s.f[w];
                    if (g.has_edge(x.vertex, x.bag[w]) && s.c2[w] == s.c1[p])
                        cs.f[j] = 0;
                    ++j;
                }
                chosen[ch] = encode(Lc, cs);
                if (!present(ch, chosen[ch]))
                    throw InternalError("witness trace lost an introduce predecessor");
                break;
            }
            case NodeKind::forget: {
                int ch = x.children[0];
                Layout Lc(L.b + 1, q);
                int p = pos_of(nt.nodes[ch].bag, x.vertex);
                bool hit = false;
                for (int a = 0; a < q && !hit; ++a)
                    for (int b2 = 0; b2 < q && !hit; ++b2) {
                        for (int w = 0, j = 0; w < Lc.b; ++w) {
                            if (w == p) {
                                cs.c1[w] = a;
                                cs.c2[w] = b2;
                                cs.f[w] = 1;
                                continue;
                            }
                            cs.c1[w] = s.c1[j];
                            cs.c2[w] = s.c2[j];
                            cs.f[w] = s.f[j];
                            ++j;
                        }
                        u64 k = encode(Lc, cs);
                        if (present(ch, k)) {
                            chosen[ch] = k;
                            hit = true;
                        }
                    }
                if (!hit)
                    throw InternalError("witness trace lost a forget predecessor");
                break;
            }
            case NodeKind::join: {
                auto adj = bag_adjacency(x.bag);
                u64 cp = key >> L.b, fm = L.fbits(), want = key & fm;
                u64 d = doubly_seen(L, adj, cp);
                const auto& A = tables[x.children[0]];
                const auto& B = tables[x.children[1]];
                auto ra = std::equal_range(A.begin(), A.end(), cp << L.b,
                                           [&](u64 l, u64 r) { return (l >> L.b) < (r >> L.b); });
                auto rb = std::equal_range(B.begin(), B.end(), cp << L.b,
                                           [&](u64 l, u64 r) { return (l >> L.b) < (r >> L.b); });
                bool hit = false;
                for (auto ia = ra.first; ia != ra.second && !hit; ++ia) {
                    u64 fa = *ia & fm;
                    if ((fa & d) != d || (fa & ~want))
                        continue;
                    for (auto ib = rb.first; ib != rb.second; ++ib) {
                        u64 fb = *ib & fm;
                        if ((fb & d) == d && !(fa & fb & ~d) && (fa | fb) == want) {
                            chosen[x.children[0]] = *ia;
                            chosen[x.children[1]] = *ib;
                            hit = true;
                            break;
                        }
                    }
                }
                if (!hit)
                    throw InternalError("witness trace lost a join predecessor");
                break;
            }
            }
        }
        return c;
    }
};

bool isolated_blocks(Neighborhood mode, const Graph& g)
{
    return mode == Neighborhood::open && has_isolated_vertex(g);
}

} // namespace

DpResult dp_solve(Neighborhood mode, const Graph& g, const NiceTreeDecomposition& t, int q,
                  const Coloring* pre, const DpOptions& opt)
{
    DpResult r;
    if (isolated_blocks(mode, g)) {
        r.reason = "isolated vertex";
        return r;
    }
    Runner run{mode, g, t, q, pre, opt, {}, {}};
    run.run(false);
    r.yes = run.accepted();
    r.stats = run.stats;
    return r;
}

DpResult dp_oncf(const Graph& g, const NiceTreeDecomposition& t, int q, const Coloring* pre,
                 const DpOptions& opt)
{
    return dp_solve(Neighborhood::open, g, t, q, pre, opt);
}

DpResult dp_cncf(const Graph& g, const NiceTreeDecomposition& t, int q, const Coloring* pre,
                 const DpOptions& opt)
{
    return dp_solve(Neighborhood::closed, g, t, q, pre, opt);
}

std::optional<Coloring> extract_witness(Neighborhood mode, const Graph& g,
                                        const NiceTreeDecomposition& t, int q, const Coloring* pre,
                                        const DpOptions& opt)
{
    if (isolated_blocks(mode, g))
        return std::nullopt;
    Runner run{mode, g, t, q, pre, opt, {}, {}};
    run.run(true);
    u64 root_key = 0;
    if (!run.accepted(&root_key))
        return std::nullopt;
    return run.trace(root_key);
}

NiceTreeDecomposition auto_nice(const Graph& g)
{
    return make_nice(g, heuristic_td(g));
}

} // namespace cfc
