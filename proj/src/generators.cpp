#include "cfc/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cfc/errors.hpp"

namespace cfc {

namespace {

struct Builder {
    int n = 0;
    std::vector<Edge> edges;
    Labels labels;

    int add(const std::string& label = {})
    {
        if (!label.empty())
            labels[label] = n;
        return n++;
    }
    void link(int u, int v) { edges.emplace_back(u, v); }
    void join_all(int u, const std::vector<int>& vs)
    {
        for (int v : vs)
            link(u, v);
    }
    LabeledGraph done() const { return {Graph::from_edges(n, edges), labels}; }
};

// appends a copy of G_k and returns its vertices
std::vector<int> add_gk(Builder& b, int k)
{
    std::vector<int> vs;
    if (k == 1) {
        vs.push_back(b.add());
        return vs;
    }
    if (k == 2) {
        for (int i = 0; i < 5; ++i)
            vs.push_back(b.add());
        b.link(vs[0], vs[1]);
        b.link(vs[0], vs[2]);
        b.link(vs[0], vs[4]);
        b.link(vs[4], vs[3]);
        return vs;
    }
    std::vector<int> clique;
    for (int i = 0; i < k; ++i)
        clique.push_back(b.add());
    vs = clique;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            b.link(clique[i], clique[j]);
    for (int v : clique)
        for (int copy = 0; copy < 2; ++copy) {
            auto sub = add_gk(b, k - 1);
            b.join_all(v, sub);
            vs.insert(vs.end(), sub.begin(), sub.end());
        }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int copy = 0; copy < 2; ++copy) {
                auto sub = add_gk(b, k - 2);
                b.join_all(clique[i], sub);
                b.join_all(clique[j], sub);
                vs.insert(vs.end(), sub.begin(), sub.end());
            }
    return vs;
}

} // namespace

LabeledGraph gen_oncf_gadget()
{
    Builder b;
    for (int i = 1; i <= 10; ++i)
        b.add("g" + std::to_string(i));
    const int e[][2] = {{1, 4}, {2, 4}, {4, 6}, {2, 5}, {3, 5}, {5, 7}, {6, 8}, {7, 8}, {8, 9}, {9, 10}};
    for (auto& p : e)
        b.link(p[0] - 1, p[1] - 1);
    return b.done();
}

LabeledGraph gen_gk(int k)
{
    if (k < 1)
        throw InputError("gen_gk: k must be at least 1");
    Builder b;
    auto vs = add_gk(b, k);
    if (k == 1) {
        b.labels["v"] = vs[0];
    } else if (k == 2) {
        b.labels["center"] = vs[0];
        b.labels["mid"] = vs[4];
        b.labels["leaf1"] = vs[1];
        b.labels["leaf2"] = vs[2];
        b.labels["leaf3"] = vs[3];
    } else {
        for (int i = 0; i < k; ++i)
            b.labels["k" + std::to_string(i + 1)] = vs[i];
    }
    return b.done();
}

LabeledGraph gen_palette(int q)
{
    if (q < 3)
        throw InputError("gen_palette: q must be at least 3");
    Builder b;
    std::vector<int> c(q), cp(q);
    for (int i = 0; i < q; ++i)
        c[i] = b.add("c" + std::to_string(i + 1));
    for (int i = 0; i < q; ++i)
        cp[i] = b.add("c" + std::to_string(i + 1) + "p");
    std::vector<Edge> dist;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            dist.emplace_back(c[i], c[j]);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            if (i != j)
                dist.emplace_back(c[j], cp[i]);
    std::sort(dist.begin(), dist.end());
    for (auto [u, v] : dist) {
        b.link(u, v);
        for (int copy = 0; copy < 2; ++copy) {
            auto sub = add_gk(b, q - 1);
            b.join_all(u, sub);
            b.join_all(v, sub);
        }
    }
    return b.done();
}

Graph gen_subdivided_clique(int q)
{
    if (q < 3)
        throw InputError("gen_subdivided_clique: q must be at least 3");
    std::vector<Edge> e;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            e.emplace_back(i, j);
    return qcol_to_oncf(Graph::from_edges(q, e));
}

LabeledGraph sat_to_2oncf(const Cnf& f)
{
    Builder b;
    int R = b.add("R"), Rp = b.add("R'"), B = b.add("B");
    b.link(R, Rp);
    b.link(Rp, B);
    std::vector<int> u(f.vars), w(f.vars);
    for (int i = 0; i < f.vars; ++i) {
        std::string k = std::to_string(i + 1);
        u[i] = b.add("u" + k);
        int v = b.add("v" + k);
        w[i] = b.add("w" + k);
        b.link(u[i], v);
        b.link(v, w[i]);
    }
    const int e[][2] = {{1, 4}, {2, 4}, {4, 6}, {2, 5}, {3, 5}, {5, 7}, {6, 8}, {7, 8}, {8, 9}, {9, 10}};
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Clause& c = f.clauses[j];
        if (c.size() != 3)
            throw InputError("sat_to_2oncf: clause " + std::to_string(j + 1) + " does not have three literals");
        std::string k = "C" + std::to_string(j + 1) + ".";
        int g0 = b.n;
        for (int i = 1; i <= 10; ++i)
            b.add(k + "g" + std::to_string(i));
        for (auto& p : e)
            b.link(g0 + p[0] - 1, g0 + p[1] - 1);
        b.link(g0 + 9, R);
        for (int t = 0; t < 3; ++t) {
            int s = b.add(k + "s" + std::to_string(t + 1));
            b.link(s, g0 + t);
            int lit = c[t], x = std::abs(lit) - 1;
            if (lit == 0 || x >= f.vars)
                throw InputError("sat_to_2oncf: literal names an unknown variable");
            b.link(s, lit > 0 ? u[x] : w[x]);
        }
    }
    return b.done();
}

Graph qcol_to_oncf(const Graph& g)
{
    auto e = g.edges();
    std::vector<Edge> out;
    for (std::size_t j = 0; j < e.size(); ++j) {
        int s = g.n + static_cast<int>(j);
        out.emplace_back(e[j].first, s);
        out.emplace_back(s, e[j].second);
    }
    return Graph::from_edges(g.n + static_cast<int>(e.size()), out);
}

Graph qcol_to_cncf(const Graph& g, int q)
{
    if (q < 3)
        throw InputError("qcol_to_cncf: q must be at least 3");
    Builder b;
    b.n = g.n;
    for (auto [u, v] : g.edges())
        b.link(u, v);
    for (int v = 0; v < g.n; ++v)
        for (int copy = 0; copy < 2; ++copy)
            b.join_all(v, add_gk(b, q));
    for (auto [u, v] : g.edges())
        for (int copy = 0; copy < 2; ++copy) {
            auto sub = add_gk(b, q - 1);
            b.join_all(u, sub);
            b.join_all(v, sub);
        }
    return b.done().g;
}

ExtensionInstance mes_to_extension(const Cnf& f)
{
    const int red = 1, blue = 2;
    Builder b;
    int R1 = b.add("R1"), R2 = b.add("R2"), B1 = b.add("B1");
    b.link(R1, B1);
    std::vector<int> u, v(f.vars);
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        if (f.clauses[i].empty())
            throw InputError("mes_to_extension: clause " + std::to_string(i + 1) + " is empty");
        u.push_back(b.add("u" + std::to_string(i + 1)));
        b.link(u[i], R1);
    }
    for (int j = 0; j < f.vars; ++j) {
        v[j] = b.add("v" + std::to_string(j + 1));
        b.link(v[j], R2);
    }
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        std::vector<int> vars;
        for (int lit : f.clauses[i]) {
            if (lit <= 0 || lit > f.vars)
                throw InputError("mes_to_extension: clauses must list variables 1.." + std::to_string(f.vars));
            vars.push_back(lit - 1);
        }
        for (int j : make_set(vars)) {
            int w = b.add("w" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            b.link(w, u[i]);
            b.link(w, v[j]);
        }
    }
    ExtensionInstance out;
    auto lg = b.done();
    out.g = std::move(lg.g);
    out.labels = std::move(lg.labels);
    out.pre = Coloring(2, out.g.n);
    out.pre.color[R1] = out.pre.color[R2] = red;
    out.pre.color[B1] = blue;
    std::vector<int> s{R1, R2, B1};
    for (int x : u) {
        out.pre.color[x] = red;
        s.push_back(x);
    }
    for (int x : v) {
        out.pre.color[x] = blue;
        s.push_back(x);
    }
    out.s = make_set(s);
    return out;
}

Graph random_tree(int n, std::mt19937_64& rng)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        e.emplace_back(perm[i], perm[pick(rng)]);
    }
    return Graph::from_edges(n, e);
}

GraphWithTd random_partial_2tree(int n, double keep, std::mt19937_64& rng)
{
    GraphWithTd out;
    std::bernoulli_distribution coin(keep);
    std::vector<Edge> e;
    if (n <= 2) {
        if (n == 2)
            e.emplace_back(0, 1);
        out.g = Graph::from_edges(n, e);
        if (n > 0)
            out.td.bags.push_back(n == 2 ? VertexSet{0, 1} : VertexSet{0});
        return out;
    }
    // edges of the underlying 2-tree and a bag holding each
    std::vector<std::pair<Edge, int>> frame{{{0, 1}, 0}, {{0, 2}, 0}, {{1, 2}, 0}};
    out.td.bags.push_back({0, 1, 2});
    e.emplace_back(0, 1);
    e.emplace_back(0, 2);
    if (coin(rng))
        e.emplace_back(1, 2);
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, frame.size() - 1);
        auto [ab, bag] = frame[pick(rng)];
        auto [a, b] = ab;
        int id = static_cast<int>(out.td.bags.size());
        out.td.bags.push_back(make_set({a, b, v}));
        out.td.tree.emplace_back(bag, id);
        e.emplace_back(a, v);
        if (coin(rng))
            e.emplace_back(b, v);
        frame.push_back({{a, v}, id});
        frame.push_back({{b, v}, id});
    }
    out.g = Graph::from_edges(n, e);
    return out;
}

Graph random_sparse(int n, int extra, std::mt19937_64& rng)
{
    Graph g = random_tree(n, rng);
    if (n < 2)
        return g;
    std::uniform_int_distribution<int> pick(0, n - 1);
    long possible = static_cast<long>(n) * (n - 1) / 2 - g.m();
    for (int added = 0, tries = 0; added < extra && added < possible && tries < 100 * (extra + 1); ++tries) {
        int u = pick(rng), v = pick(rng);
        if (u == v || g.has_edge(u, v))
            continue;
        g.add_edge(u, v);
        ++added;
    }
    return g;
}

Graph random_gnp(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

} // namespace cfc
