#pragma once

#include <random>

#include "cfc/coloring.hpp"
#include "cfc/decomposition.hpp"
#include "cfc/formats.hpp"

namespace cfc {

struct LabeledGraph {
    Graph g;
    Labels labels;
    int at(const std::string& name) const { return labels.at(name); }
};

// g1..g10; interaction points g1, g2, g3, g10
LabeledGraph gen_oncf_gadget();
LabeledGraph gen_gk(int k);
// c1..cq and c1'..cq' (written c1p..cqp)
LabeledGraph gen_palette(int q);
Graph gen_subdivided_clique(int q);

// clauses must have exactly three literals; R is vertex 0
LabeledGraph sat_to_2oncf(const Cnf& f);
// vertex i keeps id i; the subdivision vertex of the j-th edge (sorted) is n + j
Graph qcol_to_oncf(const Graph& g);
Graph qcol_to_cncf(const Graph& g, int q);

struct ExtensionInstance {
    Graph g;
    VertexSet s;
    Coloring pre; // 1 = red, 2 = blue
    Labels labels;
};
// clauses are lists of positive variable indices 1..vars
ExtensionInstance mes_to_extension(const Cnf& f);

// random families for tests and benchmarks; rng is never used by the CLI
Graph random_tree(int n, std::mt19937_64& rng);
struct GraphWithTd {
    Graph g;
    TreeDecomposition td;
};
// subgraph of a random 2-tree, with the 2-tree's width-2 decomposition
GraphWithTd random_partial_2tree(int n, double keep, std::mt19937_64& rng);
// connected: a random tree plus `extra` random edges
Graph random_sparse(int n, int extra, std::mt19937_64& rng);
Graph random_gnp(int n, double p, std::mt19937_64& rng);

} // namespace cfc
