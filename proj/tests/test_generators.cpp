#include <doctest.h>

#include "cfc/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

void check_labels(const LabeledGraph& lg)
{
    std::set<int> ids;
    for (auto& [name, v] : lg.labels) {
        CHECK(v >= 0);
        CHECK(v < lg.g.n);
        ids.insert(v);
    }
    CHECK(ids.size() == lg.labels.size());
}

} // namespace

TEST_CASE("oncf gadget")
{
    auto gd = gen_oncf_gadget();
    CHECK(gd.g.n == 10);
    CHECK(gd.labels.size() == 10);
    check_labels(gd);
    CHECK(gd.g.m() == 10);
}

TEST_CASE("G_k sizes and width")
{
    CHECK(gen_gk(1).g.n == 1);
    auto g2 = gen_gk(2);
    CHECK(g2.g.n == 5);
    CHECK(g2.g.m() == 4);
    CHECK(g2.g.degree(g2.at("center")) == 3);
    CHECK(g2.g.degree(g2.at("mid")) == 2);
    check_labels(g2);
    auto g3 = gen_gk(3);
    CHECK(g3.g.n == 39);
    check_labels(g3);
    CHECK(heuristic_td(g3.g).width() <= 2);
    CHECK(gen_gk(4).g.n == 376);
    CHECK_THROWS_AS(gen_gk(0), InputError);
}

TEST_CASE("palette")
{
    auto pal = gen_palette(3);
    CHECK(pal.g.n == 96);
    CHECK(pal.labels.size() == 6);
    check_labels(pal);
    CHECK(pal.g.has_edge(pal.at("c1"), pal.at("c2p")));
    CHECK_FALSE(pal.g.has_edge(pal.at("c1"), pal.at("c1p")));
    CHECK_THROWS_AS(gen_palette(2), InputError);
}

TEST_CASE("palette precolorings")
{
    auto pal = gen_palette(3);
    Coloring same(3, pal.g.n);
    same.color[pal.at("c1")] = same.color[pal.at("c2")] = 1;
    CHECK_FALSE(dp_yes(Neighborhood::closed, pal.g, 3, &same));
    Coloring ref(3, pal.g.n);
    for (int i = 1; i <= 3; ++i)
        ref.color[pal.at("c" + std::to_string(i))] = ref.color[pal.at("c" + std::to_string(i) + "p")] = i;
    CHECK(dp_yes(Neighborhood::closed, pal.g, 3, &ref));
}

TEST_CASE("subdivided clique")
{
    Graph s3 = gen_subdivided_clique(3);
    CHECK(s3.n == 6);
    CHECK(s3.m() == 6);
    CHECK(brute_chi_on(s3, 4) == 3);
    CHECK_FALSE(dp_yes(Neighborhood::open, gen_subdivided_clique(4), 3));
    CHECK(min_vertex_cover(gen_subdivided_clique(4)).size() == 4);
}

TEST_CASE("sat_to_2oncf")
{
    Cnf one{1, {{1, 1, 1}}};
    auto g1 = sat_to_2oncf(one);
    CHECK(g1.g.n == 3 + 3 + 13);
    check_labels(g1);
    CHECK(dp_yes(Neighborhood::open, g1.g, 2));
    CHECK(brute_oncf(g1.g, 2).has_value());

    Cnf contra{1, {{1, 1, 1}, {-1, -1, -1}}};
    CHECK_FALSE(dp_yes(Neighborhood::open, sat_to_2oncf(contra).g, 2));
    CHECK_THROWS_AS(sat_to_2oncf(Cnf{2, {{1, 2}}}), InputError);
}

TEST_CASE("sat_to_2oncf agrees with SAT enumeration")
{
    std::mt19937_64 rng(73);
    for (int it = 0; it < 20; ++it) {
        Cnf f = random_3cnf(1 + it % 5, 1 + it % 6, rng);
        CHECK(dp_yes(Neighborhood::open, sat_to_2oncf(f).g, 2) == brute_sat(f));
    }
}

TEST_CASE("qcol_to_oncf")
{
    Graph c6 = qcol_to_oncf(complete(3));
    CHECK(c6.n == 6);
    CHECK(c6.m() == 6);
    for (int v = 0; v < 6; ++v)
        CHECK(c6.degree(v) == 2);
    CHECK(is_connected(c6));
    CHECK_FALSE(brute_oncf(qcol_to_oncf(cycle(5)), 2));
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : connected_graphs(n))
            for (int q = 2; q <= 3; ++q)
                CHECK(brute_proper(g, q).has_value() == dp_yes(Neighborhood::open, qcol_to_oncf(g), q));
}

TEST_CASE("qcol_to_cncf")
{
    CHECK(qcol_to_cncf(Graph(1), 3).n == 79);
    CHECK_THROWS_AS(qcol_to_cncf(Graph(1), 2), InputError);
    CHECK(dp_yes(Neighborhood::closed, qcol_to_cncf(complete(3), 3), 3));
    CHECK_FALSE(dp_yes(Neighborhood::closed, qcol_to_cncf(complete(4), 3), 3));
}

TEST_CASE("mes_to_extension")
{
    auto yes = mes_to_extension(Cnf{1, {{1}}});
    check_labels({yes.g, yes.labels});
    CHECK(is_vertex_cover(yes.g, yes.s));
    CHECK(brute_extension_cncf(yes.g, yes.s, yes.pre, 2));

    Cnf f{2, {{1, 2}, {1}, {2}}};
    CHECK_FALSE(brute_exact_one(f));
    auto no = mes_to_extension(f);
    CHECK_FALSE(brute_extension_cncf(no.g, no.s, no.pre, 2));
    CHECK_THROWS_AS(mes_to_extension(Cnf{1, {{}}}), InputError);
}

TEST_CASE("mes_to_extension agrees with exact-one enumeration")
{
    std::mt19937_64 rng(79);
    for (int it = 0; it < 30; ++it) {
        Cnf f = random_monotone(1 + it % 6, 1 + it % 4, 3, rng);
        auto inst = mes_to_extension(f);
        CHECK(brute_extension_cncf(inst.g, inst.s, inst.pre, 2) == brute_exact_one(f));
    }
}

TEST_CASE("random families")
{
    std::mt19937_64 rng(83);
    for (int it = 0; it < 30; ++it) {
        int n = 1 + it;
        Graph t = random_tree(n, rng);
        CHECK(t.m() == n - 1);
        CHECK(is_connected(t));
        Graph s = random_sparse(n, 3, rng);
        CHECK(is_connected(s));
        auto gt = random_partial_2tree(n, 0.5, rng);
        CHECK(validate_td(gt.g, gt.td).ok);
    }
    std::mt19937_64 a(1), b(1);
    CHECK(random_gnp(12, 0.4, a) == random_gnp(12, 0.4, b));
}
