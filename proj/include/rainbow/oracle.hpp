#pragma once

#include <optional>

#include "rainbow/graph_system.hpp"

namespace rainbow {

// Size caps for the exhaustive searches below; calls on larger instances
// throw unless the cap is raised explicitly.
inline constexpr int kOracleCycleCap = 12;
inline constexpr int kOraclePathCap = 13;

struct OracleOptions {
    // 0 picks the per-operation default cap above.
    int cap = 0;
    // Skip one of the two traversal orientations of each candidate.  Must
    // not change feasibility, only which witness is found first.
    bool prune_symmetry = true;
};

// Exhaustive backtracking search, vertices ascending in the outer branch and
// colours ascending in the inner branch.  nullopt means verified infeasible.
// Every returned certificate is canonical: cycles start at their smallest
// vertex and run toward the smaller neighbour, paths start at the smaller
// endpoint.
std::optional<RainbowCycle> oracle_hamiltonian_cycle(const GraphSystem& sys,
                                                     const OracleOptions& opts = {});
std::optional<RainbowCycle> oracle_cycle_of_length(const GraphSystem& sys, int length,
                                                   const OracleOptions& opts = {});
std::optional<RainbowPath> oracle_hamiltonian_path(const GraphSystem& sys,
                                                   const OracleOptions& opts = {});

// Canonical forms used by the oracle, exposed for comparing certificates
// that may differ only by rotation or traversal direction.
RainbowPath canonical_path(const RainbowPath& path);
RainbowCycle canonical_cycle(const RainbowCycle& cycle);

}  // namespace rainbow
