#pragma once

#include <string>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<Edge> tree; // undirected edges between bag indices

    int width() const;
};

struct TdReport {
    bool ok = true;
    std::string property; // empty when ok
    std::string detail;   // human-readable, 1-indexed ids

    std::string message() const { return ok ? "ok" : detail; }
};

TdReport validate_td(const Graph& g, const TreeDecomposition& t);

enum class Elimination { min_fill, min_degree };

TreeDecomposition td_from_ordering(const Graph& g, const std::vector<int>& order);
TreeDecomposition heuristic_td(const Graph& g, Elimination h = Elimination::min_fill);

enum class NodeKind { leaf, introduce, forget, join };

struct NiceNode {
    NodeKind kind = NodeKind::leaf;
    int vertex = -1;           // introduced / forgotten vertex
    std::vector<int> children; // node ids, always smaller than this node's id
    VertexSet bag;
    // false where the anchor sits in the bag only because of the non-empty-bag
    // augmentation; bags with the anchor dropped at such nodes form a
    // decomposition of the input width
    bool anchor_native = true;
};

struct NiceTreeDecomposition {
    int anchor = -1; // the vertex z in every bag
    int root = -1;
    std::vector<NiceNode> nodes; // children precede parents

    int width() const;
    VertexSet effective_bag(int i) const;
};

// z = lowest vertex; throws InputError on an empty graph or an invalid t
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& t);

TdReport check_nice(const Graph& g, const NiceTreeDecomposition& nt);
TreeDecomposition as_plain(const NiceTreeDecomposition& nt);
TreeDecomposition effective_plain(const NiceTreeDecomposition& nt);

} // namespace cfc
