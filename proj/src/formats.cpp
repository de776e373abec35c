#include "cfc/formats.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cfc/errors.hpp"

namespace cfc {

namespace {

[[noreturn]] void bad(int line, const std::string& what)
{
    throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> t;
    std::string w;
    while (in >> w)
        t.push_back(w);
    return t;
}

long to_int(const std::string& s, int line)
{
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        bad(line, "expected an integer, got '" + s + "'");
    }
    if (used != s.size())
        bad(line, "expected an integer, got '" + s + "'");
    return v;
}

// iterate non-blank lines, handing over 1-based line numbers
template <class F>
void each_line(const std::string& text, F&& f)
{
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto t = tokens(line);
        if (t.empty())
            continue;
        f(no, t);
    }
}

} // namespace

Graph parse_graph(const std::string& text)
{
    int n = -1;
    long m = -1, seen = 0;
    std::vector<Edge> edges;
    each_line(text, [&](int no, const std::vector<std::string>& t) {
        if (t[0] == "c")
            return;
        if (t[0] == "p") {
            if (n >= 0)
                bad(no, "second header");
            if (t.size() != 4 || t[1] != "cf")
                bad(no, "malformed header, expected 'p cf <n> <m>'");
            long nn = to_int(t[2], no);
            m = to_int(t[3], no);
            if (nn < 0 || m < 0)
                bad(no, "negative count in header");
            n = static_cast<int>(nn);
            return;
        }
        if (n < 0)
            bad(no, "edge before header");
        if (t.size() != 2)
            bad(no, "expected '<u> <v>'");
        long u = to_int(t[0], no), v = to_int(t[1], no);
        if (u < 1 || v < 1 || u > n || v > n)
            bad(no, "vertex id out of range 1.." + std::to_string(n));
        if (u == v)
            bad(no, "self-loop");
        edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        ++seen;
    });
    if (n < 0)
        throw InputError("missing 'p cf' header");
    if (seen != m)
        throw InputError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
    return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g)
{
    std::ostringstream out;
    auto e = g.edges();
    out << "p cf " << g.n << ' ' << e.size() << '\n';
    for (auto [u, v] : e)
        out << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

TreeDecomposition parse_td(const std::string& text)
{
    TreeDecomposition t;
    long nb = -1;
    std::vector<char> have;
    each_line(text, [&](int no, const std::vector<std::string>& tk) {
        if (tk[0] == "c")
            return;
        if (tk[0] == "s") {
            if (nb >= 0)
                bad(no, "second header");
            if (tk.size() != 5 || tk[1] != "td")
                bad(no, "malformed header, expected 's td <bags> <width+1> <n>'");
            nb = to_int(tk[2], no);
            if (nb < 0)
                bad(no, "negative bag count");
            t.bags.assign(nb, {});
            have.assign(nb, 0);
            return;
        }
        if (nb < 0)
            bad(no, "content before header");
        if (tk[0] == "b") {
            if (tk.size() < 2)
                bad(no, "bag line without id");
            long id = to_int(tk[1], no);
            if (id < 1 || id > nb)
                bad(no, "bag id out of range");
            if (have[id - 1])
                bad(no, "duplicate bag id");
            have[id - 1] = 1;
            std::vector<int> b;
            for (std::size_t i = 2; i < tk.size(); ++i) {
                long v = to_int(tk[i], no);
                if (v < 1)
                    bad(no, "vertex id must be positive");
                b.push_back(static_cast<int>(v - 1));
            }
            t.bags[id - 1] = make_set(std::move(b));
            return;
        }
        if (tk.size() != 2)
            bad(no, "expected tree edge '<i> <j>'");
        long a = to_int(tk[0], no), b = to_int(tk[1], no);
        if (a < 1 || b < 1 || a > nb || b > nb)
            bad(no, "tree edge names unknown bag");
        t.tree.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    });
    if (nb < 0)
        throw InputError("missing 's td' header");
    for (long i = 0; i < nb; ++i)
        if (!have[i])
            throw InputError("bag " + std::to_string(i + 1) + " never listed");
    return t;
}

std::string serialize_td(const TreeDecomposition& t, int n)
{
    std::ostringstream out;
    out << "s td " << t.bags.size() << ' ' << t.width() + 1 << ' ' << n << '\n';
    for (std::size_t i = 0; i < t.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : t.bags[i])
            out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [a, b] : t.tree)
        out << a + 1 << ' ' << b + 1 << '\n';
    return out.str();
}

Coloring parse_coloring(const std::string& text, int n, int q)
{
    Coloring c(q, n);
    each_line(text, [&](int no, const std::vector<std::string>& t) {
        if (t[0] == "c")
            return;
        if (t.size() != 2)
            bad(no, "expected '<v> <color>'");
        long v = to_int(t[0], no), x = to_int(t[1], no);
        if (v < 1 || v > n)
            bad(no, "vertex id out of range");
        if (x < 0 || x > q)
            bad(no, "color out of range 0.." + std::to_string(q));
        c.color[v - 1] = static_cast<int>(x);
    });
    return c;
}

std::string serialize_coloring(const Coloring& c)
{
    std::ostringstream out;
    for (std::size_t v = 0; v < c.color.size(); ++v)
        out << v + 1 << ' ' << c.color[v] << '\n';
    return out.str();
}

VertexSet parse_vertex_set(const std::string& text, int n)
{
    std::vector<int> s;
    each_line(text, [&](int no, const std::vector<std::string>& t) {
        if (t[0] == "c")
            return;
        if (t.size() != 1)
            bad(no, "expected one vertex id");
        long v = to_int(t[0], no);
        if (v < 1 || v > n)
            bad(no, "vertex id out of range");
        s.push_back(static_cast<int>(v - 1));
    });
    return make_set(std::move(s));
}

std::string serialize_vertex_set(const VertexSet& s)
{
    std::ostringstream out;
    for (int v : s)
        out << v + 1 << '\n';
    return out.str();
}

std::string serialize_labels(const Labels& l)
{
    std::vector<std::pair<int, std::string>> byid;
    for (auto& [name, v] : l)
        byid.emplace_back(v, name);
    std::sort(byid.begin(), byid.end());
    std::ostringstream out;
    for (auto& [v, name] : byid)
        out << "l " << name << ' ' << v + 1 << '\n';
    return out.str();
}

Labels parse_labels(const std::string& text)
{
    Labels l;
    each_line(text, [&](int no, const std::vector<std::string>& t) {
        if (t.size() != 3 || t[0] != "l")
            bad(no, "expected 'l <name> <vertex-id>'");
        long v = to_int(t[2], no);
        if (v < 1)
            bad(no, "vertex id must be positive");
        if (!l.emplace(t[1], static_cast<int>(v - 1)).second)
            bad(no, "duplicate label");
    });
    return l;
}

CspInstance parse_csp(const std::string& text)
{
    using nlohmann::json;
    CspInstance csp;
    try {
        json j = json::parse(text);
        for (auto& v : j.at("variables"))
            csp.variables.push_back(v.get<std::string>());
        std::map<std::string, int> idx;
        for (std::size_t i = 0; i < csp.variables.size(); ++i)
            if (!idx.emplace(csp.variables[i], static_cast<int>(i)).second)
                throw InputError("duplicate variable " + csp.variables[i]);
        for (auto& cj : j.at("constraints")) {
            Polynomial p;
            for (auto& term : cj) {
                mpq_class c;
                auto s = term.at("coeff").get<std::string>();
                if (c.set_str(s, 10) != 0)
                    throw InputError("bad coefficient '" + s + "'");
                c.canonicalize();
                std::vector<int> m;
                for (auto& name : term.at("vars")) {
                    auto it = idx.find(name.get<std::string>());
                    if (it == idx.end())
                        throw InputError("unknown variable " + name.get<std::string>());
                    m.push_back(it->second);
                }
                p.add_term(make_set(std::move(m)), c);
            }
            csp.constraints.push_back(std::move(p));
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("csp document: ") + e.what());
    }
    return csp;
}

std::string serialize_csp(const CspInstance& csp)
{
    using nlohmann::json;
    json j;
    j["variables"] = csp.variables;
    j["constraints"] = json::array();
    for (auto& p : csp.constraints) {
        json cj = json::array();
        for (auto& [m, c] : p.terms) {
            json vars = json::array();
            for (int y : m)
                vars.push_back(csp.variables.at(y));
            cj.push_back({{"coeff", c.get_num().get_str() + "/" + c.get_den().get_str()},
                          {"vars", vars}});
        }
        j["constraints"].push_back(std::move(cj));
    }
    return j.dump(1) + "\n";
}

Cnf parse_dimacs(const std::string& text)
{
    Cnf f;
    long announced = -1;
    Clause cur;
    each_line(text, [&](int no, const std::vector<std::string>& t) {
        if (t[0] == "c")
            return;
        if (t[0] == "p") {
            if (t.size() != 4 || t[1] != "cnf")
                bad(no, "malformed header, expected 'p cnf <vars> <clauses>'");
            f.vars = static_cast<int>(to_int(t[2], no));
            announced = to_int(t[3], no);
            return;
        }
        if (announced < 0)
            bad(no, "clause before header");
        for (auto& s : t) {
            long x = to_int(s, no);
            if (x == 0) {
                f.clauses.push_back(cur);
                cur.clear();
                continue;
            }
            if (std::labs(x) > f.vars)
                bad(no, "literal names unknown variable");
            cur.push_back(static_cast<int>(x));
        }
    });
    if (announced < 0)
        throw InputError("missing 'p cnf' header");
    if (!cur.empty())
        throw InputError("last clause not terminated by 0");
    if (static_cast<long>(f.clauses.size()) != announced)
        throw InputError("header announces " + std::to_string(announced) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    return f;
}

std::string serialize_dimacs(const Cnf& f)
{
    std::ostringstream out;
    out << "p cnf " << f.vars << ' ' << f.clauses.size() << '\n';
    for (auto& c : f.clauses) {
        for (int x : c)
            out << x << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputError("cannot write " + path);
}

} // namespace cfc
