#pragma once

#include "cfc/coloring.hpp"
#include "cfc/decomposition.hpp"

namespace cfc {

// Constructive ONCF-colorings. Each result is verified before it is returned;
// a failed verification throws InternalError.

// proper and ONCF, at most 2w+1 colors where w is the width of the anchor-free
// bags of t (the width of the decomposition t was built from)
Coloring color_via_td(const Graph& g, const NiceTreeDecomposition& t);
int td_color_budget(const NiceTreeDecomposition& t);

// x a feedback vertex set; at most |x|+3 colors
Coloring color_via_fvs(const Graph& g, const VertexSet& x);

// g connected, s a vertex cover; at most |s|+1 colors, at most |s| unless g is
// a star or an edge-star
Coloring color_via_vc(const Graph& g, const VertexSet& s);

} // namespace cfc
