#include <CLI11.hpp>

#include <iostream>

#include "cfc/bounds.hpp"
#include "cfc/dp.hpp"
#include "cfc/errors.hpp"
#include "cfc/formats.hpp"
#include "cfc/generators.hpp"
#include "cfc/kernel.hpp"

using namespace cfc;

namespace {

Neighborhood parse_mode(const std::string& m)
{
    return m == "oncf" ? Neighborhood::open : Neighborhood::closed;
}

struct SolveArgs {
    std::string mode = "oncf", td, precolor, witness, graph;
    int q = 2;
    std::size_t max_states = DpOptions{}.max_states;
};

int run_solve(const SolveArgs& a)
{
    Graph g = parse_graph(read_file(a.graph));
    if (g.n == 0) {
        std::cout << "YES\n";
        return 0;
    }
    NiceTreeDecomposition nt =
        a.td.empty() ? auto_nice(g) : make_nice(g, parse_td(read_file(a.td)));
    Coloring pre;
    const Coloring* pp = nullptr;
    if (!a.precolor.empty()) {
        pre = parse_coloring(read_file(a.precolor), g.n, a.q);
        pp = &pre;
    }
    DpOptions opt;
    opt.max_states = a.max_states;
    Neighborhood mode = parse_mode(a.mode);
    if (a.witness.empty()) {
        auto r = dp_solve(mode, g, nt, a.q, pp, opt);
        std::cout << (r.yes ? "YES" : "NO") << '\n';
        if (!r.reason.empty())
            std::cerr << "reason: " << r.reason << '\n';
        return 0;
    }
    auto w = extract_witness(mode, g, nt, a.q, pp, opt);
    std::cout << (w ? "YES" : "NO") << '\n';
    if (w)
        write_file(a.witness, serialize_coloring(*w));
    return 0;
}

struct VerifyArgs {
    std::string mode = "oncf", coloring, graph;
    int q = 2;
};

int run_verify(const VerifyArgs& a)
{
    Graph g = parse_graph(read_file(a.graph));
    Coloring c = parse_coloring(read_file(a.coloring), g.n, a.q);
    auto bad = parse_mode(a.mode) == Neighborhood::open ? verify_oncf(g, c) : verify_cncf(g, c);
    if (bad)
        std::cout << "VIOLATION v=" << *bad + 1 << '\n';
    else
        std::cout << "OK\n";
    return 0;
}

struct BoundArgs {
    std::string method = "vc", set, td, out, graph;
};

int run_bound(const BoundArgs& a)
{
    Graph g = parse_graph(read_file(a.graph));
    Coloring c;
    if (a.method == "tw") {
        NiceTreeDecomposition nt =
            a.td.empty() ? auto_nice(g) : make_nice(g, parse_td(read_file(a.td)));
        c = color_via_td(g, nt);
    } else {
        VertexSet s;
        if (!a.set.empty())
            s = parse_vertex_set(read_file(a.set), g.n);
        else
            s = a.method == "vc" ? min_vertex_cover(g) : min_fvs(g);
        c = a.method == "vc" ? color_via_vc(g, s) : color_via_fvs(g, s);
    }
    std::cout << "COLORS " << c.distinct() << '\n';
    if (!a.out.empty())
        write_file(a.out, serialize_coloring(c));
    return 0;
}

struct KernelArgs {
    std::string problem = "2cncf", set, precolor, out, graph;
};

int run_kernelize(const KernelArgs& a)
{
    Graph g = parse_graph(read_file(a.graph));
    VertexSet s = a.set.empty() ? min_vertex_cover(g) : parse_vertex_set(read_file(a.set), g.n);
    if (a.problem == "2cncf") {
        auto k = kernelize_2cncf(g, s);
        write_file(a.out, serialize_csp(k.csp));
        std::cout << "KERNEL " << a.out << '\n';
        return 0;
    }
    if (a.precolor.empty())
        throw InputError("kernelize --problem 2cncf-ext needs --precolor");
    Coloring pre = parse_coloring(read_file(a.precolor), g.n, 2);
    auto k = kernelize_extension(g, s, pre);
    if (k.trivial_no) {
        std::cout << "NO\n";
        std::cerr << "reason: " << k.reason << '\n';
        return 0;
    }
    write_file(a.out, serialize_graph(k.kernel.g));
    write_file(a.out + ".set", serialize_vertex_set(k.kernel.cover()));
    write_file(a.out + ".col", serialize_coloring(k.kernel.pre));
    std::cout << "KERNEL " << a.out << '\n';
    return 0;
}

struct GenArgs {
    std::string family, param, out;
};

int to_int(const std::string& s)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    } catch (const std::exception&) {
    }
    throw InputError("--param expects an integer, got '" + s + "'");
}

int run_gen(const GenArgs& a)
{
    LabeledGraph lg;
    if (a.family == "oncf-gadget") {
        lg = gen_oncf_gadget();
    } else if (a.family == "gk") {
        lg = gen_gk(to_int(a.param));
    } else if (a.family == "palette") {
        lg = gen_palette(to_int(a.param));
    } else if (a.family == "subdiv-clique") {
        lg.g = gen_subdivided_clique(to_int(a.param));
    } else if (a.family == "sat") {
        lg = sat_to_2oncf(parse_dimacs(read_file(a.param)));
    } else {
        auto inst = mes_to_extension(parse_dimacs(read_file(a.param)));
        lg = {inst.g, inst.labels};
        write_file(a.out + ".set", serialize_vertex_set(inst.s));
        write_file(a.out + ".col", serialize_coloring(inst.pre));
    }
    write_file(a.out, serialize_graph(lg.g));
    if (!lg.labels.empty())
        write_file(a.out + ".labels", serialize_labels(lg.labels));
    std::cout << "GENERATED " << a.out << '\n';
    return 0;
}

struct ChiArgs {
    std::string mode = "oncf", graph;
    bool partial = false;
    int q_max = 8;
    double max_enum = BruteLimits{}.max_enum;
};

int run_chi(const ChiArgs& a)
{
    Graph g = parse_graph(read_file(a.graph));
    BruteLimits lim{a.max_enum};
    std::optional<int> chi = parse_mode(a.mode) == Neighborhood::open
                                 ? brute_chi_on(g, a.q_max, lim)
                                 : brute_chi_cn(g, a.q_max, a.partial, lim);
    if (chi)
        std::cout << "CHI " << *chi << '\n';
    else
        std::cout << "CHI none\n";
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"conflict-free coloring toolkit"};
    app.require_subcommand(1);
    const std::vector<std::string> modes{"oncf", "cncf"};

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "decide q-ONCF / q-CNCF colorability");
    solve->add_option("--mode", sa.mode)->check(CLI::IsMember(modes));
    solve->add_option("--q", sa.q)->required()->check(CLI::Range(1, 1 << 20));
    solve->add_option("--td", sa.td, "tree decomposition (.td)");
    solve->add_option("--precolor", sa.precolor, "partial coloring file");
    solve->add_option("--witness", sa.witness, "write a coloring here on YES");
    solve->add_option("--max-states", sa.max_states, "per-node table guard");
    solve->add_option("graph", sa.graph)->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("--mode", va.mode)->check(CLI::IsMember(modes));
    verify->add_option("--q", va.q)->required()->check(CLI::Range(1, 1 << 20));
    verify->add_option("--coloring", va.coloring)->required();
    verify->add_option("graph", va.graph)->required();

    BoundArgs ba;
    auto* bound = app.add_subcommand("bound", "constructive ONCF-coloring");
    bound->add_option("--method", ba.method)->check(CLI::IsMember({"vc", "fvs", "tw"}));
    bound->add_option("--set", ba.set, "vertex cover or feedback vertex set");
    bound->add_option("--td", ba.td, "tree decomposition for --method tw");
    bound->add_option("--out", ba.out, "write the coloring here");
    bound->add_option("graph", ba.graph)->required();

    KernelArgs ka;
    auto* kern = app.add_subcommand("kernelize", "kernelize 2-CNCF instances");
    kern->add_option("--problem", ka.problem)->check(CLI::IsMember({"2cncf", "2cncf-ext"}));
    kern->add_option("--set", ka.set, "vertex cover");
    kern->add_option("--precolor", ka.precolor, "coloring of the cover (2cncf-ext)");
    kern->add_option("--out", ka.out)->required();
    kern->add_option("graph", ka.graph)->required();

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate gadgets and reductions");
    gen->add_option("--family", ga.family)
        ->required()
        ->check(CLI::IsMember({"oncf-gadget", "gk", "palette", "subdiv-clique", "sat", "mes"}));
    gen->add_option("--param", ga.param, "integer parameter, or a DIMACS file for sat/mes");
    gen->add_option("--out", ga.out)->required();

    ChiArgs ca;
    auto* chi = app.add_subcommand("chi", "exact chromatic number by enumeration");
    chi->add_option("--mode", ca.mode)->check(CLI::IsMember(modes));
    chi->add_flag("--partial", ca.partial, "allow uncolored vertices (cncf only)");
    chi->add_option("--q-max", ca.q_max)->check(CLI::Range(1, 64));
    chi->add_option("--max-enum", ca.max_enum, "enumeration guard");
    chi->add_option("graph", ca.graph)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve)
            return run_solve(sa);
        if (*verify)
            return run_verify(va);
        if (*bound)
            return run_bound(ba);
        if (*kern)
            return run_kernelize(ka);
        if (*gen)
            return run_gen(ga);
        return run_chi(ca);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
