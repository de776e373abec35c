#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "cfc/coloring.hpp"
#include "cfc/decomposition.hpp"

namespace cfc {

enum class Neighborhood { open, closed };

struct DpOptions {
    std::size_t max_states = std::size_t(1) << 26; // per node
    int join_cutoff = 8;       // fast convolution only when |bag \ B(f)| exceeds this
    bool check_joins = false;  // also run the other join path and compare
};

struct DpStats {
    std::size_t nodes = 0;
    std::size_t max_table = 0;
    std::size_t joins = 0;
    std::size_t fast_joins = 0;
    std::size_t join_checks = 0;    // join groups compared under check_joins
    std::size_t join_mismatches = 0;
    bool within_state_bound = true; // every table <= (2q^2)^|bag|
};

struct DpResult {
    bool yes = false;
    std::string reason; // set for shortcut answers
    DpStats stats;
};

// t must be a nice decomposition of g (e.g. from make_nice); pre may be partial
DpResult dp_oncf(const Graph& g, const NiceTreeDecomposition& t, int q, const Coloring* pre = nullptr,
                 const DpOptions& opt = {});
DpResult dp_cncf(const Graph& g, const NiceTreeDecomposition& t, int q, const Coloring* pre = nullptr,
                 const DpOptions& opt = {});
DpResult dp_solve(Neighborhood mode, const Graph& g, const NiceTreeDecomposition& t, int q,
                  const Coloring* pre = nullptr, const DpOptions& opt = {});

std::optional<Coloring> extract_witness(Neighborhood mode, const Graph& g,
                                        const NiceTreeDecomposition& t, int q,
                                        const Coloring* pre = nullptr, const DpOptions& opt = {});

// convenience: heuristic decomposition + nice form
NiceTreeDecomposition auto_nice(const Graph& g);

} // namespace cfc
