#include "cfc/bounds.hpp"

#include <algorithm>
#include <map>

#include "cfc/dp.hpp"
#include "cfc/errors.hpp"

namespace cfc {

namespace {

void no_isolated(const Graph& g, const char* who)
{
    if (has_isolated_vertex(g))
        throw InputError(std::string(who) + ": graph has an isolated vertex");
}

Coloring checked(const Graph& g, Coloring c, const char* who)
{
    if (auto v = verify_oncf(g, c))
        throw InternalError(std::string(who) + ": produced coloring fails at vertex " +
                            std::to_string(*v + 1));
    return c;
}

// renumber the colors in use to 1..k, in order of first use by vertex index
Coloring compact(Coloring c)
{
    std::map<int, int> id;
    for (int& x : c.color) {
        auto [it, fresh] = id.try_emplace(x, static_cast<int>(id.size()) + 1);
        x = it->second;
    }
    c.q = static_cast<int>(id.size());
    return c;
}

} // namespace

int td_color_budget(const NiceTreeDecomposition& t)
{
    std::size_t w = 0;
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
        w = std::max(w, t.effective_bag(static_cast<int>(i)).size());
    return 2 * std::max<int>(static_cast<int>(w) - 1, 0) + 1;
}

Coloring color_via_td(const Graph& g, const NiceTreeDecomposition& t)
{
    no_isolated(g, "color_via_td");
    if (auto r = check_nice(g, t); !r.ok)
        throw InputError("color_via_td: " + r.message());
    int budget = td_color_budget(t);
    std::vector<int> c(g.n, 0), f(g.n, 0);
    std::vector<char> banned(budget + 1);
    // parents carry larger ids, so descending order walks top-down
    for (int i = static_cast<int>(t.nodes.size()) - 1; i >= 0; --i) {
        VertexSet bag = t.effective_bag(i);
        for (int v : bag) {
            if (c[v])
                continue;
            std::fill(banned.begin(), banned.end(), 0);
            for (int u : bag)
                if (c[u]) {
                    banned[c[u]] = 1;
                    banned[f[u]] = 1;
                }
            int pick = 1;
            while (pick <= budget && banned[pick])
                ++pick;
            if (pick > budget)
                throw InternalError("color_via_td: palette exhausted");
            c[v] = pick;
            for (int u : bag)
                if (u != v && c[u] && g.has_edge(u, v)) {
                    if (!f[u])
                        f[u] = pick;
                    if (!f[v])
                        f[v] = c[u];
                }
        }
    }
    return checked(g, Coloring(budget, c), "color_via_td");
}

Coloring color_via_fvs(const Graph& g, const VertexSet& x)
{
    no_isolated(g, "color_via_fvs");
    if (!is_fvs(g, x))
        throw InputError("color_via_fvs: set is not a feedback vertex set");
    const int R = 1, G = 2, B = 3;
    std::vector<int> cx(g.n, 0); // c_x for x in X
    for (std::size_t i = 0; i < x.size(); ++i)
        cx[x[i]] = 4 + static_cast<int>(i);
    std::vector<char> in_x(g.n, 0), in_l(g.n, 0);
    for (int v : x)
        in_x[v] = 1;
    for (int v : x) {
        bool lonely = std::none_of(g.adj[v].begin(), g.adj[v].end(), [&](int w) { return in_x[w]; });
        in_l[v] = lonely;
    }
    std::vector<int> c(g.n, 0);
    for (int v : x)
        if (!in_l[v])
            c[v] = cx[v];

    std::vector<int> map;
    Graph forest = remove_vertices(g, x, &map);
    for (auto& comp : components(forest)) {
        if (comp.size() == 1) {
            c[map[comp[0]]] = G;
            continue;
        }
        std::vector<int> sub;
        Graph tree = induced(forest, make_set(comp), &sub);
        auto w = extract_witness(Neighborhood::open, tree, auto_nice(tree), 2);
        if (!w)
            throw InternalError("color_via_fvs: tree component without a 2-ONCF-coloring");
        for (int i = 0; i < tree.n; ++i)
            c[map[sub[i]]] = w->color[i] == 1 ? G : B;
    }

    for (bool again = true; again;) {
        again = false;
        for (int u = 0; u < g.n && !again; ++u) {
            if (in_x[u])
                continue;
            if (!std::all_of(g.adj[u].begin(), g.adj[u].end(), [&](int w) { return in_l[w]; }))
                continue;
            for (int w : g.adj[u]) {
                c[w] = cx[w];
                in_l[w] = 0;
            }
            c[u] = cx[g.adj[u].front()];
            again = true;
        }
    }

    std::vector<char> l_color(x.size() + 4, 0); // colors c_y with y in L
    for (int v : x)
        if (in_l[v])
            l_color[cx[v]] = 1;
    for (int v : x) {
        if (!in_l[v])
            continue;
        c[v] = R;
        bool seen = std::any_of(g.adj[v].begin(), g.adj[v].end(), [&](int w) { return l_color[c[w]]; });
        if (!seen)
            c[g.adj[v].front()] = cx[v];
    }
    return checked(g, Coloring(static_cast<int>(x.size()) + 3, c), "color_via_fvs");
}

Coloring color_via_vc(const Graph& g, const VertexSet& s)
{
    if (g.n < 2 || !is_connected(g))
        throw InputError("color_via_vc: graph must be connected with at least two vertices");
    if (!is_vertex_cover(g, s))
        throw InputError("color_via_vc: set is not a vertex cover");
    std::vector<int> c(g.n, 0);
    StarKind kind = classify_star(g);
    if (kind == StarKind::star) {
        int center = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) == g.n - 1) {
                center = v;
                break;
            }
        std::fill(c.begin(), c.end(), 1);
        c[center == 0 ? 1 : 0] = 2;
        return checked(g, compact(Coloring(2, c)), "color_via_vc");
    }
    if (kind == StarKind::edge_star) {
        // the central edge joins the two vertices of degree n-1
        std::vector<int> hub;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) == g.n - 1)
                hub.push_back(v);
        if (g.n == 3)
            hub.resize(2);
        std::fill(c.begin(), c.end(), 3);
        c[hub[0]] = 1;
        c[hub[1]] = 2;
        return checked(g, compact(Coloring(3, c)), "color_via_vc");
    }

    int k = static_cast<int>(s.size());
    std::vector<char> in_s(g.n, 0);
    for (int v : s)
        in_s[v] = 1;
    // own color c_u for u in S is u + 1; compacted at the end
    auto own = [](int u) { return u + 1; };
    Graph gs = induced(g, s);
    std::vector<std::vector<int>> comps;
    for (auto& comp : components(gs)) {
        std::vector<int> orig;
        for (int i : comp)
            orig.push_back(s[i]);
        comps.push_back(make_set(orig));
    }
    std::vector<int> isolated;
    for (auto& comp : comps)
        if (comp.size() == 1)
            isolated.push_back(comp[0]);
    auto first_outside = [&](int u) {
        for (int w : g.adj[u])
            if (!in_s[w])
                return w;
        throw InternalError("color_via_vc: cover vertex without outside neighbor");
    };
    auto do_picks = [&](int skip_a, int skip_b) {
        for (int u : isolated)
            if (u != skip_a && u != skip_b)
                c[first_outside(u)] = own(u);
    };
    auto fill_rest = [&](int col) {
        for (int v = 0; v < g.n; ++v)
            if (!c[v])
                c[v] = col;
    };

    if (k == 2 && comps.size() == 1) {
        int ustar = -1, wstar = -1;
        for (int u : s) {
            for (int w : g.adj[u])
                if (!in_s[w] && g.degree(w) == 1) {
                    wstar = w;
                    break;
                }
            if (wstar >= 0) {
                ustar = u;
                break;
            }
        }
        if (ustar < 0)
            throw InternalError("color_via_vc: two-vertex cover without a pendant vertex");
        std::fill(c.begin(), c.end(), 2);
        c[ustar] = c[wstar] = 1;
        return checked(g, compact(Coloring(k, c)), "color_via_vc");
    }

    for (int u : s)
        c[u] = own(u);

    auto big = std::find_if(comps.begin(), comps.end(), [](auto& cc) { return cc.size() >= 3; });
    if (big != comps.end()) {
        int vstar = -1;
        for (int v : *big) {
            VertexSet rest;
            for (int w : *big)
                if (w != v)
                    rest.push_back(w);
            if (is_connected(induced(g, rest))) {
                vstar = v;
                break;
            }
        }
        do_picks(-1, -1);
        fill_rest(own(vstar));
        return checked(g, compact(Coloring(k, c)), "color_via_vc");
    }

    if (isolated.size() == s.size()) {
        int v = -1;
        for (int y = 0; y < g.n && v < 0; ++y)
            if (!in_s[y] && g.degree(y) >= 2)
                v = y;
        if (v < 0)
            throw InternalError("color_via_vc: no outside vertex joins two cover vertices");
        int ustar = g.adj[v][0], wstar = g.adj[v][1];
        c[v] = own(ustar);
        do_picks(ustar, wstar);
        fill_rest(own(wstar));
        return checked(g, compact(Coloring(k, c)), "color_via_vc");
    }

    // components of size one and two only, at least one of size two
    std::vector<const VertexSet*> pairs;
    for (auto& comp : comps)
        if (comp.size() == 2)
            pairs.push_back(&comp);
    int ustar = (*pairs[0])[0], vstar = (*pairs[0])[1];
    int x = -1;
    for (int y = 0; y < g.n && x < 0; ++y)
        if (!in_s[y] && g.adj[y] == std::vector<int>{ustar, vstar})
            x = y;
    if (x < 0) {
        c[vstar] = own(ustar);
        do_picks(-1, -1);
        fill_rest(own(vstar));
    } else if (pairs.size() >= 2) {
        c[x] = own((*pairs[1])[0]);
        do_picks(-1, -1);
        fill_rest(own(ustar));
    } else {
        // only isolated vertices besides {u*, v*}: one of them supplies the
        // default color and gets its witness from a u*- or v*-colored vertex
        int w = isolated.front();
        std::vector<int> only_u, only_v, both;
        for (int y : g.adj[w]) {
            bool nu = g.has_edge(y, ustar), nv = g.has_edge(y, vstar);
            if (!nv)
                only_u.push_back(y);
            else if (!nu)
                only_v.push_back(y);
            else
                both.push_back(y);
        }
        if (!only_u.empty()) {
            c[only_u.front()] = own(ustar);
        } else if (!only_v.empty()) {
            c[only_v.front()] = own(vstar);
        } else {
            c[both.front()] = own(ustar);
            c[x] = own(vstar);
        }
        do_picks(w, -1);
        fill_rest(own(w));
    }
    return checked(g, compact(Coloring(k, c)), "color_via_vc");
}

} // namespace cfc
