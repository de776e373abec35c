#include "cfc/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cfc/errors.hpp"

namespace cfc {

int TreeDecomposition::width() const
{
    std::size_t w = 0;
    for (auto& b : bags)
        w = std::max(w, b.size());
    return static_cast<int>(w) - 1;
}

TdReport validate_td(const Graph& g, const TreeDecomposition& t)
{
    auto fail = [](std::string prop, std::string detail) {
        return TdReport{false, std::move(prop), std::move(detail)};
    };
    int nodes = static_cast<int>(t.bags.size());
    if (nodes == 0) {
        if (g.n == 0)
            return {};
        return fail("vertex not covered", "vertex 1 not covered");
    }
    if (static_cast<int>(t.tree.size()) != nodes - 1)
        return fail("tree", "tree has " + std::to_string(t.tree.size()) + " edges for " +
                                std::to_string(nodes) + " nodes");
    std::vector<std::vector<int>> tadj(nodes);
    for (auto [a, b] : t.tree) {
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
            return fail("tree", "bad tree edge");
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    {
        std::vector<char> seen(nodes, 0);
        std::vector<int> st{0};
        seen[0] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : tadj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    st.push_back(y);
                }
        }
        if (cnt != nodes)
            return fail("tree", "tree is not connected");
    }
    std::vector<std::vector<int>> occ(g.n);
    for (int i = 0; i < nodes; ++i)
        for (int v : t.bags[i]) {
            if (v < 0 || v >= g.n)
                return fail("tree", "bag " + std::to_string(i + 1) + " names unknown vertex");
            occ[v].push_back(i);
        }
    for (int v = 0; v < g.n; ++v)
        if (occ[v].empty())
            return fail("vertex not covered", "vertex " + std::to_string(v + 1) + " not covered");
    for (auto [u, v] : g.edges()) {
        bool hit = false;
        for (int i : occ[u])
            if (contains(t.bags[i], v)) {
                hit = true;
                break;
            }
        if (!hit)
            return fail("edge not covered", "edge not covered: " + std::to_string(u + 1) + " " +
                                                std::to_string(v + 1));
    }
    std::vector<int> mark(nodes, -1);
    for (int v = 0; v < g.n; ++v) {
        for (int i : occ[v])
            mark[i] = v;
        std::vector<int> st{occ[v][0]};
        std::size_t reached = 1;
        mark[occ[v][0]] = -2 - v;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : tadj[x])
                if (mark[y] == v) {
                    mark[y] = -2 - v;
                    ++reached;
                    st.push_back(y);
                }
        }
        if (reached != occ[v].size())
            return fail("vertex not connected", "vertex " + std::to_string(v + 1) + " not connected");
    }
    return {};
}

// -------------------------------------------------------------- elimination

TreeDecomposition td_from_ordering(const Graph& g, const std::vector<int>& order)
{
    int n = g.n;
    if (static_cast<int>(order.size()) != n)
        throw InputError("ordering length differs from vertex count");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
            throw InputError("ordering is not a permutation");
        pos[order[i]] = i;
    }
    std::vector<std::set<int>> nb(n);
    for (int v = 0; v < n; ++v)
        nb[v].insert(g.adj[v].begin(), g.adj[v].end());

    std::vector<VertexSet> bag(n);
    std::vector<int> parent(n, -1);
    for (int v : order) {
        VertexSet later(nb[v].begin(), nb[v].end());
        for (int a : later) {
            nb[a].erase(v);
            for (int b : later)
                if (a != b)
                    nb[a].insert(b);
        }
        nb[v].clear();
        int p = -1;
        for (int a : later)
            if (p < 0 || pos[a] < pos[p])
                p = a;
        parent[v] = p;
        later.push_back(v);
        bag[v] = make_set(std::move(later));
    }
    // absorb bags contained in their parent's bag
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::vector<char> gone(n, 0);
    for (int v : order) {
        int p = parent[v];
        if (p >= 0 && std::includes(bag[p].begin(), bag[p].end(), bag[v].begin(), bag[v].end()))
            gone[v] = 1;
    }
    std::function<int(int)> up = [&](int v) {
        int p = parent[v];
        while (p >= 0 && gone[p])
            p = parent[p];
        return p;
    };
    // a removed bag's children hang off the removed bag's first surviving ancestor
    TreeDecomposition t;
    std::vector<int> id(n, -1);
    for (int v : order)
        if (!gone[v]) {
            id[v] = static_cast<int>(t.bags.size());
            t.bags.push_back(bag[v]);
        }
    if (n > 0 && t.bags.empty()) {
        t.bags.push_back({});
    }
    int prev_root = -1;
    for (int v : order) {
        if (gone[v])
            continue;
        int p = up(v);
        if (p >= 0) {
            t.tree.emplace_back(id[v], id[p]);
        } else {
            if (prev_root >= 0)
                t.tree.emplace_back(prev_root, id[v]);
            prev_root = id[v];
        }
    }
    return t;
}

TreeDecomposition heuristic_td(const Graph& g, Elimination h)
{
    int n = g.n;
    std::vector<std::set<int>> nb(n);
    for (int v = 0; v < n; ++v)
        nb[v].insert(g.adj[v].begin(), g.adj[v].end());
    std::vector<char> done(n, 0);
    std::vector<int> order;
    order.reserve(n);
    auto fill = [&](int v) {
        long f = 0;
        for (auto a = nb[v].begin(); a != nb[v].end(); ++a)
            for (auto b = std::next(a); b != nb[v].end(); ++b)
                if (!nb[*a].count(*b))
                    ++f;
        return f;
    };
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long bf = 0;
        std::size_t bd = 0;
        for (int v = 0; v < n; ++v) {
            if (done[v])
                continue;
            std::size_t d = nb[v].size();
            long f = h == Elimination::min_fill ? fill(v) : 0;
            if (best < 0 || f < bf || (f == bf && d < bd)) {
                best = v;
                bf = f;
                bd = d;
            }
        }
        int v = best;
        std::vector<int> later(nb[v].begin(), nb[v].end());
        for (int a : later) {
            nb[a].erase(v);
            for (int b : later)
                if (a != b)
                    nb[a].insert(b);
        }
        nb[v].clear();
        done[v] = 1;
        order.push_back(v);
    }
    return td_from_ordering(g, order);
}

// -------------------------------------------------------------- nice form

int NiceTreeDecomposition::width() const
{
    std::size_t w = 0;
    for (auto& x : nodes)
        w = std::max(w, x.bag.size());
    return static_cast<int>(w) - 1;
}

VertexSet NiceTreeDecomposition::effective_bag(int i) const
{
    const auto& x = nodes[i];
    if (x.anchor_native)
        return x.bag;
    VertexSet b;
    for (int v : x.bag)
        if (v != anchor)
            b.push_back(v);
    return b;
}

namespace {

struct NiceBuilder {
    const TreeDecomposition& t;
    int z;
    std::vector<std::vector<int>> tadj;
    NiceTreeDecomposition out;

    int push(NiceNode node)
    {
        out.nodes.push_back(std::move(node));
        return static_cast<int>(out.nodes.size()) - 1;
    }

    int forget(int child, int v, bool native)
    {
        NiceNode x;
        x.kind = NodeKind::forget;
        x.vertex = v;
        x.children = {child};
        for (int w : out.nodes[child].bag)
            if (w != v)
                x.bag.push_back(w);
        x.anchor_native = native;
        return push(std::move(x));
    }

    int introduce(int child, int v, bool native)
    {
        NiceNode x;
        x.kind = NodeKind::introduce;
        x.vertex = v;
        x.children = {child};
        x.bag = out.nodes[child].bag;
        x.bag.insert(std::lower_bound(x.bag.begin(), x.bag.end(), v), v);
        x.anchor_native = native;
        return push(std::move(x));
    }

    int build(int u, int parent)
    {
        const VertexSet& bu = t.bags[u];
        bool zu = contains(bu, z);
        std::vector<int> tops;
        for (int c : tadj[u]) {
            if (c == parent)
                continue;
            int top = build(c, u);
            const VertexSet& bc = t.bags[c];
            bool zc = contains(bc, z);
            for (int v : bc)
                if (v != z && !contains(bu, v))
                    top = forget(top, v, zc);
            bool introduced = false;
            for (int v : bu)
                if (v != z && !contains(bc, v)) {
                    top = introduce(top, v, zu);
                    introduced = true;
                }
            if (zu && !introduced)
                out.nodes[top].anchor_native = true;
            tops.push_back(top);
        }
        if (tops.empty()) {
            NiceNode leaf;
            leaf.kind = NodeKind::leaf;
            leaf.bag = {z};
            leaf.anchor_native = zu;
            int top = push(std::move(leaf));
            for (int v : bu)
                if (v != z)
                    top = introduce(top, v, zu);
            return top;
        }
        int cur = tops[0];
        for (std::size_t i = 1; i < tops.size(); ++i) {
            NiceNode j;
            j.kind = NodeKind::join;
            j.children = {cur, tops[i]};
            j.bag = out.nodes[cur].bag;
            j.anchor_native = zu;
            cur = push(std::move(j));
        }
        return cur;
    }
};

} // namespace

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& t)
{
    if (g.n == 0)
        throw InputError("make_nice: empty graph has no anchor vertex");
    auto rep = validate_td(g, t);
    if (!rep.ok)
        throw InputError("make_nice: invalid decomposition: " + rep.detail);
    NiceBuilder b{t, 0, std::vector<std::vector<int>>(t.bags.size()), {}};
    for (auto [x, y] : t.tree) {
        b.tadj[x].push_back(y);
        b.tadj[y].push_back(x);
    }
    for (auto& a : b.tadj)
        std::sort(a.begin(), a.end());
    b.out.anchor = 0;
    int top = b.build(0, -1);
    bool zr = contains(t.bags[0], 0);
    for (int v : t.bags[0])
        if (v != 0)
            top = b.forget(top, v, zr);
    b.out.root = top;
    return std::move(b.out);
}

TreeDecomposition as_plain(const NiceTreeDecomposition& nt)
{
    TreeDecomposition t;
    for (std::size_t i = 0; i < nt.nodes.size(); ++i) {
        t.bags.push_back(nt.nodes[i].bag);
        for (int c : nt.nodes[i].children)
            t.tree.emplace_back(c, static_cast<int>(i));
    }
    return t;
}

TreeDecomposition effective_plain(const NiceTreeDecomposition& nt)
{
    TreeDecomposition t = as_plain(nt);
    for (std::size_t i = 0; i < nt.nodes.size(); ++i)
        t.bags[i] = nt.effective_bag(static_cast<int>(i));
    return t;
}

TdReport check_nice(const Graph& g, const NiceTreeDecomposition& nt)
{
    auto fail = [](std::string d) { return TdReport{false, "nice", std::move(d)}; };
    int cnt = static_cast<int>(nt.nodes.size());
    if (cnt == 0 || nt.root != cnt - 1)
        return fail("root must be the last node");
    VertexSet zb{nt.anchor};
    std::vector<int> parents(cnt, 0);
    for (int i = 0; i < cnt; ++i) {
        const auto& x = nt.nodes[i];
        std::string at = "node " + std::to_string(i + 1) + ": ";
        if (x.bag.empty())
            return fail(at + "empty bag");
        if (!contains(x.bag, nt.anchor))
            return fail(at + "anchor missing");
        for (int c : x.children) {
            if (c < 0 || c >= i)
                return fail(at + "child order");
            ++parents[c];
        }
        switch (x.kind) {
        case NodeKind::leaf:
            if (!x.children.empty() || x.bag != zb)
                return fail(at + "bad leaf");
            break;
        case NodeKind::introduce: {
            if (x.children.size() != 1)
                return fail(at + "introduce arity");
            VertexSet want = nt.nodes[x.children[0]].bag;
            if (contains(want, x.vertex))
                return fail(at + "introduced vertex already present");
            want.push_back(x.vertex);
            if (make_set(want) != x.bag)
                return fail(at + "introduce bag relation");
            break;
        }
        case NodeKind::forget: {
            if (x.children.size() != 1)
                return fail(at + "forget arity");
            VertexSet want = x.bag;
            if (contains(want, x.vertex))
                return fail(at + "forgotten vertex still present");
            want.push_back(x.vertex);
            if (make_set(want) != nt.nodes[x.children[0]].bag)
                return fail(at + "forget bag relation");
            break;
        }
        case NodeKind::join:
            if (x.children.size() != 2 || nt.nodes[x.children[0]].bag != x.bag ||
                nt.nodes[x.children[1]].bag != x.bag)
                return fail(at + "join bag relation");
            break;
        }
    }
    for (int i = 0; i < cnt - 1; ++i)
        if (parents[i] != 1)
            return fail("node " + std::to_string(i + 1) + " has " + std::to_string(parents[i]) +
                        " parents");
    if (nt.nodes[nt.root].bag != zb)
        return fail("root bag is not {z}");
    auto r = validate_td(g, as_plain(nt));
    if (!r.ok)
        return r;
    return validate_td(g, effective_plain(nt));
}

} // namespace cfc
