#pragma once

#include <optional>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

// colors are 1..q; 0 marks an uncolored vertex
struct Coloring {
    int q = 0;
    std::vector<int> color;

    Coloring() = default;
    Coloring(int q_, int n) : q(q_), color(n, 0) {}
    Coloring(int q_, std::vector<int> c) : q(q_), color(std::move(c)) {}

    bool total() const;
    int distinct() const; // number of distinct colors in use
    bool operator==(const Coloring&) const = default;
};

// nullopt means ok; otherwise the lowest violating vertex
std::optional<int> verify_oncf(const Graph& g, const Coloring& c);
std::optional<int> verify_cncf(const Graph& g, const Coloring& c);
bool is_proper(const Graph& g, const Coloring& c);

struct BruteLimits {
    double max_enum = 1e8; // bound on the nominal enumeration count
};

// exhaustive backtracking in lexicographic order (vertex 0 most significant);
// the first hit is the lexicographically least valid coloring
std::optional<Coloring> brute_oncf(const Graph& g, int q, const Coloring* pre = nullptr,
                                   const BruteLimits& lim = {});
std::optional<Coloring> brute_cncf(const Graph& g, int q, bool partial, const Coloring* pre = nullptr,
                                   const BruteLimits& lim = {});

std::optional<int> brute_chi_on(const Graph& g, int q_max, const BruteLimits& lim = {});
std::optional<int> brute_chi_cn(const Graph& g, int q_max, bool partial, const BruteLimits& lim = {});

// pre colors exactly s; s must be a vertex cover
bool brute_extension_cncf(const Graph& g, const VertexSet& s, const Coloring& pre, int q,
                          const BruteLimits& lim = {});

// proper q-colorability, for test oracles and reductions
std::optional<Coloring> brute_proper(const Graph& g, int q, const BruteLimits& lim = {});
int chromatic_number(const Graph& g);

} // namespace cfc
