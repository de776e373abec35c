#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfc/coloring.hpp"
#include "cfc/polynomial.hpp"

namespace cfc {

struct MarkedGraph {
    Graph g;
    std::vector<int> original; // input id of each vertex of g
    VertexSet s;               // cover, ids of g
    VertexSet marked;          // S', ids of g
    Coloring pre;              // extension kernel: colors exactly cover() with 1 = red, 2 = blue
    VertexSet cover() const;   // s united with marked
};

// three marks per X in S with |X| <= 2 among outside vertices with N(v) = X;
// unmarked outside vertices of degree <= 2 are deleted
MarkedGraph preprocess_mark(const Graph& g, const VertexSet& s);

// variables r_v, b_v (1-based input ids) for every vertex of mg.g
CspInstance build_csp(const MarkedGraph& mg);

// -(N-x)(x-1)(N-2(x+1)) / (N(N-2)); throws InputError for N in {0, 2}
mpq_class g_eval(const mpq_class& x, int n);

// replaces r_v by g(sum of r over N(v), |N(v)|) and b_v by 1 minus that, for
// v outside s and marked; zero constraints are dropped
CspInstance substitute_outside_vars(const CspInstance& csp, const MarkedGraph& mg);

struct KernelPart {
    std::size_t before = 0, after = 0;
    int nvars = 0; // variable count entering the n^d + 1 bound
    int degree = 0;
    double bound() const;
};

struct KernelResult {
    CspInstance csp;
    MarkedGraph marked;
    KernelPart part_s, part_1, part_2;
    std::size_t raw_constraints = 0; // after substitution, before reduction
};

KernelResult kernelize_2cncf(const Graph& g, const VertexSet& s);

struct ExtensionKernel {
    bool trivial_no = false;
    std::string reason;
    MarkedGraph kernel; // valid unless trivial_no
};

// pre colors exactly s with colors 1 and 2; the kernel's cover is kernel.cover()
ExtensionKernel kernelize_extension(const Graph& g, const VertexSet& s, const Coloring& pre);

// the vertex ceiling used to audit extension kernels
long extension_kernel_bound(int k);

} // namespace cfc
