#include "cfc/kernel.hpp"

#include <algorithm>
#include <map>

#include "cfc/errors.hpp"

namespace cfc {

VertexSet MarkedGraph::cover() const
{
    std::vector<int> c = s;
    c.insert(c.end(), marked.begin(), marked.end());
    return make_set(std::move(c));
}

namespace {

// keeps up to `per` vertices of each neighbourhood class, lowest ids first
std::vector<int> mark_twins(const Graph& g, const std::vector<int>& candidates, int per)
{
    std::map<std::vector<int>, int> taken;
    std::vector<int> out;
    for (int v : candidates)
        if (taken[g.adj[v]]++ < per)
            out.push_back(v);
    return out;
}

VertexSet remap(const VertexSet& s, const std::vector<int>& map_old_to_new)
{
    std::vector<int> r;
    for (int v : s)
        if (map_old_to_new[v] >= 0)
            r.push_back(map_old_to_new[v]);
    return make_set(std::move(r));
}

MarkedGraph shrink(const Graph& g, const std::vector<int>& original, const VertexSet& keep,
                   const VertexSet& s, const VertexSet& marked)
{
    MarkedGraph mg;
    std::vector<int> map;
    mg.g = induced(g, keep, &map);
    std::vector<int> inv(g.n, -1);
    for (std::size_t i = 0; i < map.size(); ++i) {
        inv[map[i]] = static_cast<int>(i);
        mg.original.push_back(original[map[i]]);
    }
    mg.s = remap(s, inv);
    mg.marked = remap(marked, inv);
    mg.pre = Coloring(2, mg.g.n);
    return mg;
}

std::vector<int> identity(int n)
{
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

Polynomial sum_of(const std::vector<int>& vars)
{
    Polynomial p;
    for (int x : vars)
        p.add_term({x}, 1);
    return p;
}

enum class Step { one = 1, two = 2, three = 3 };

struct Tagged {
    Polynomial p;
    Step step;
    int v; // vertex of mg.g the constraint was created for
};

std::vector<Tagged> build_tagged(const MarkedGraph& mg)
{
    const Graph& g = mg.g;
    auto r = [](int v) { return 2 * v; };
    auto b = [](int v) { return 2 * v + 1; };
    VertexSet cov = mg.cover();
    std::vector<Tagged> out;
    for (int v = 0; v < g.n; ++v)
        out.push_back({sum_of({r(v), b(v)}) - Polynomial::constant(1), Step::one, v});
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> rs{r(v)}, bs{b(v)};
        for (int u : g.adj[v]) {
            rs.push_back(r(u));
            bs.push_back(b(u));
        }
        Polynomial red = sum_of(rs) - Polynomial::constant(1);
        Polynomial blue = sum_of(bs) - Polynomial::constant(1);
        out.push_back({red * blue, Step::two, v});
    }
    for (int v = 0; v < g.n; ++v) {
        if (contains(cov, v))
            continue;
        int d = g.degree(v);
        std::vector<int> rs;
        for (int u : g.adj[v])
            rs.push_back(r(u));
        Polynomial x = sum_of(rs);
        Polynomial p = x * (x - Polynomial::constant(1)) * (x - Polynomial::constant(d - 1)) *
                       (x - Polynomial::constant(d));
        out.push_back({p, Step::three, v});
    }
    return out;
}

std::vector<std::string> var_names(const MarkedGraph& mg)
{
    std::vector<std::string> names;
    for (int v = 0; v < mg.g.n; ++v) {
        names.push_back("r_" + std::to_string(mg.original[v] + 1));
        names.push_back("b_" + std::to_string(mg.original[v] + 1));
    }
    return names;
}

struct Substituted {
    std::vector<std::string> variables;
    std::vector<int> kept; // indices of surviving input constraints
    std::vector<Polynomial> constraints;
};

Substituted substitute(const std::vector<std::string>& names, const std::vector<Polynomial>& cs,
                       const MarkedGraph& mg)
{
    auto index = [&](const std::string& n) {
        auto it = std::find(names.begin(), names.end(), n);
        if (it == names.end())
            throw InputError("csp lacks variable " + n);
        return static_cast<int>(it - names.begin());
    };
    auto id = [&](char kind, int v) {
        return index(std::string(1, kind) + "_" + std::to_string(mg.original[v] + 1));
    };
    VertexSet cov = mg.cover();
    std::vector<std::pair<int, Polynomial>> subs;
    std::vector<char> dropped(names.size(), 0);
    for (int v = 0; v < mg.g.n; ++v) {
        if (contains(cov, v))
            continue;
        int d = mg.g.degree(v);
        if (d < 3)
            throw InternalError("substitution needs degree >= 3 at vertex " +
                                std::to_string(mg.original[v] + 1));
        std::vector<int> rs;
        for (int u : mg.g.adj[v]) {
            if (!contains(mg.s, u))
                throw InternalError("substituted vertex has a neighbor outside the cover");
            rs.push_back(id('r', u));
        }
        Polynomial x = sum_of(rs);
        Polynomial f = (Polynomial::constant(d) - x) * (x - Polynomial::constant(1)) *
                       (Polynomial::constant(d - 2) - x * mpq_class(2));
        mpq_class scale(-1, d * (d - 2));
        scale.canonicalize();
        f *= scale;
        int rv = id('r', v), bv = id('b', v);
        subs.emplace_back(rv, f);
        subs.emplace_back(bv, Polynomial::constant(1) - f);
        dropped[rv] = dropped[bv] = 1;
    }
    Substituted out;
    std::vector<int> newid(names.size(), -1);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!dropped[i]) {
            newid[i] = static_cast<int>(out.variables.size());
            out.variables.push_back(names[i]);
        }
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Polynomial p = cs[i];
        for (auto& [x, f] : subs)
            p = p.substitute(x, f);
        if (p.is_zero())
            continue;
        Polynomial q;
        for (auto& [m, c] : p.terms) {
            Monomial nm;
            for (int y : m) {
                if (newid[y] < 0)
                    throw InternalError("substitution left a removed variable");
                nm.push_back(newid[y]);
            }
            q.add_term(std::move(nm), c);
        }
        out.kept.push_back(static_cast<int>(i));
        out.constraints.push_back(std::move(q));
    }
    return out;
}

} // namespace

MarkedGraph preprocess_mark(const Graph& g, const VertexSet& s)
{
    if (!is_vertex_cover(g, s))
        throw InputError("preprocess_mark: set is not a vertex cover");
    std::vector<int> small;
    for (int v = 0; v < g.n; ++v)
        if (!contains(s, v) && g.degree(v) <= 2)
            small.push_back(v);
    VertexSet marked = make_set(mark_twins(g, small, 3));
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (contains(s, v) || contains(marked, v) || g.degree(v) >= 3)
            keep.push_back(v);
    return shrink(g, identity(g.n), make_set(keep), s, marked);
}

CspInstance build_csp(const MarkedGraph& mg)
{
    CspInstance csp;
    csp.variables = var_names(mg);
    for (auto& t : build_tagged(mg))
        csp.constraints.push_back(std::move(t.p));
    return csp;
}

mpq_class g_eval(const mpq_class& x, int n)
{
    if (n == 0 || n == 2)
        throw InputError("g(x, N) is undefined for N = " + std::to_string(n));
    mpq_class r = -(n - x) * (x - 1) * (n - 2 * (x + 1)) / (mpq_class(n) * (n - 2));
    r.canonicalize();
    return r;
}

CspInstance substitute_outside_vars(const CspInstance& csp, const MarkedGraph& mg)
{
    auto sub = substitute(csp.variables, csp.constraints, mg);
    CspInstance out;
    out.variables = std::move(sub.variables);
    out.constraints = std::move(sub.constraints);
    return out;
}

double KernelPart::bound() const
{
    return reduction_bound(nvars, degree);
}

KernelResult kernelize_2cncf(const Graph& g, const VertexSet& s)
{
    KernelResult res;
    res.marked = preprocess_mark(g, s);
    const MarkedGraph& mg = res.marked;
    auto tagged = build_tagged(mg);
    std::vector<Polynomial> cs;
    for (auto& t : tagged)
        cs.push_back(t.p);
    auto sub = substitute(var_names(mg), cs, mg);
    res.raw_constraints = sub.constraints.size();

    // variables of S' vertices in the reduced numbering
    std::vector<char> of_marked(sub.variables.size(), 0);
    for (int v : mg.marked)
        for (char kind : {'r', 'b'}) {
            std::string n = std::string(1, kind) + "_" + std::to_string(mg.original[v] + 1);
            auto it = std::find(sub.variables.begin(), sub.variables.end(), n);
            of_marked[it - sub.variables.begin()] = 1;
        }

    std::vector<Polynomial> ls, l1, l2;
    for (std::size_t i = 0; i < sub.constraints.size(); ++i) {
        const Tagged& t = tagged[sub.kept[i]];
        const Polynomial& p = sub.constraints[i];
        if (t.step == Step::two && contains(mg.s, t.v)) {
            ls.push_back(p);
            continue;
        }
        auto vars = p.variables();
        bool touches = std::any_of(vars.begin(), vars.end(), [&](int y) { return of_marked[y]; });
        (touches ? l1 : l2).push_back(p);
    }
    auto max_degree = [](const std::vector<Polynomial>& v) {
        int d = 0;
        for (auto& p : v)
            d = std::max(d, p.degree());
        return d;
    };
    int nv_all = static_cast<int>(sub.variables.size());
    int nv_s = 2 * static_cast<int>(mg.s.size());
    auto k1 = reduce_constraint_indices(l1, 2);
    auto k2 = reduce_constraint_indices(l2, 6);
    res.part_s = {ls.size(), ls.size(), nv_all, max_degree(ls)};
    res.part_1 = {l1.size(), k1.size(), nv_all, 2};
    res.part_2 = {l2.size(), k2.size(), nv_s, 6};
    res.csp.variables = sub.variables;
    res.csp.constraints = ls;
    for (int i : k1)
        res.csp.constraints.push_back(l1[i]);
    for (int i : k2)
        res.csp.constraints.push_back(l2[i]);
    return res;
}

long extension_kernel_bound(int k)
{
    return 9L * k * k + 4L * k;
}

ExtensionKernel kernelize_extension(const Graph& g, const VertexSet& s, const Coloring& pre)
{
    if (!is_vertex_cover(g, s))
        throw InputError("kernelize_extension: set is not a vertex cover");
    if (static_cast<int>(pre.color.size()) != g.n)
        throw InputError("kernelize_extension: precoloring length differs from vertex count");
    for (int v = 0; v < g.n; ++v) {
        int c = pre.color[v];
        if (contains(s, v) != (c != 0) || c < 0 || c > 2)
            throw InputError("kernelize_extension: precoloring must color exactly the cover with 1 and 2");
    }
    const int red = 1, blue = 2;
    ExtensionKernel out;
    std::vector<int> col = pre.color;
    auto counts = [&](int v, int& r, int& b) {
        r = b = 0;
        for (int u : g.adj[v]) {
            r += col[u] == red;
            b += col[u] == blue;
        }
    };
    std::vector<int> forced;
    for (int v = 0; v < g.n; ++v) {
        if (contains(s, v) || g.degree(v) < 3)
            continue;
        int r, b;
        counts(v, r, b);
        if (r >= 2 && b >= 2) {
            out.trivial_no = true;
            out.reason = "vertex " + std::to_string(v + 1) + " has two red and two blue neighbors";
            return out;
        }
        forced.push_back(v);
    }
    // the closed neighbourhood of a forced vertex admits exactly one color for it
    for (int v : forced) {
        int r, b;
        counts(v, r, b);
        col[v] = (r == 0 || b == 1) ? red : blue;
    }
    for (int v = 0; v < g.n; ++v) {
        if (!col[v])
            continue;
        int r, b;
        counts(v, r, b);
        r += col[v] == red;
        b += col[v] == blue;
        if (r >= 2 && b >= 2) {
            out.trivial_no = true;
            out.reason = "closed neighborhood of vertex " + std::to_string(v + 1) +
                         " has two red and two blue vertices";
            return out;
        }
    }

    std::vector<char> is_forced(g.n, 0), keep(g.n, 1);
    for (int v : forced)
        is_forced[v] = 1;
    std::vector<int> marked;
    for (int u : s) {
        int r = 0, b = 0;
        for (int v : g.adj[u]) {
            if (!is_forced[v])
                continue;
            if (col[v] == red && r < 2) {
                ++r;
                marked.push_back(v);
            } else if (col[v] == blue && b < 2) {
                ++b;
                marked.push_back(v);
            }
        }
    }
    VertexSet mk = make_set(marked);
    for (int v : forced)
        if (!contains(mk, v))
            keep[v] = 0;

    std::vector<int> rest;
    for (int v = 0; v < g.n; ++v)
        if (keep[v] && !contains(s, v) && !contains(mk, v))
            rest.push_back(v);
    auto twins = mark_twins(g, rest, 3);
    for (int v : rest)
        keep[v] = 0;
    for (int v : twins)
        keep[v] = 1;

    std::vector<int> kept;
    for (int v = 0; v < g.n; ++v)
        if (keep[v])
            kept.push_back(v);
    out.kernel = shrink(g, identity(g.n), make_set(kept), s, mk);
    for (int i = 0; i < out.kernel.g.n; ++i) {
        int v = out.kernel.original[i];
        if (contains(s, v) || contains(mk, v))
            out.kernel.pre.color[i] = col[v];
    }
    return out;
}

} // namespace cfc
