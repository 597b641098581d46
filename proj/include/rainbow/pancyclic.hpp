#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rainbow/graph_system.hpp"

namespace rainbow {

// Minimum colour degree required by the pancyclicity construction,
// ceil((n+1)/2).
int pancyclic_degree_threshold(int n);

// Rainbow (n-1)-cycle: drop the last vertex of a rainbow Hamiltonian path
// and close the rest using the dropped edge colour at the front and the one
// missing colour at the back.  The degree bound makes the closure certain,
// so failure throws std::runtime_error; a system below the bound throws
// std::invalid_argument.
RainbowCycle find_cycle_n_minus_1(const GraphSystem& sys);

// Short base cycle of length n-2 or n-3 for n >= 6: truncate a rainbow
// Hamiltonian path to its first n-3 vertices, which leaves four spare
// colours; first try to append one external vertex with two spare colours
// (length n-2), otherwise close the truncated path directly (length n-3).
RainbowCycle find_base_cycle(const GraphSystem& sys);

struct CycleSearchStats {
    int fallback_invocations = 0;
};

// Rainbow cycle of the requested length built from a base cycle:
//   identity       length == |base| returns the base unchanged;
//   one external   x plus a run of length-2 consecutive base vertices,
//                  chords in two spare colours;
//   two externals  a, b plus a run of length-3 consecutive base vertices,
//                  three spare colours.
// If every pattern is exhausted and the instance is small, an exhaustive
// search takes over (counted in stats and reported on stderr); otherwise
// nullopt.  Preconditions (valid base, 3 <= length <= |base|+1, at least
// two colours unused on the base) throw std::invalid_argument.
std::optional<RainbowCycle> find_cycle_of_length(const GraphSystem& sys, const RainbowCycle& base,
                                                 int length, CycleSearchStats* stats = nullptr);

// Evidence extracted when the one-external-vertex pattern finds nothing for
// a fixed external vertex x and spare colour pair (c, c_prime): s1 collects
// the base vertices length-2 steps after each c-neighbour of x, s2 the
// c_prime-neighbours of x on the base.  The pattern succeeds exactly when
// the two sets meet, so a failed search certifies s1 and s2 disjoint.
struct PartitionWitness {
    RainbowCycle base_cycle;
    int shift = 0;  // target cycle length
    std::vector<int> s1;
    std::vector<int> s2;
    int external_vertex = -1;
    int c = -1;
    int c_prime = -1;
};

PartitionWitness make_partition_witness(const GraphSystem& sys, const RainbowCycle& base,
                                        int external_vertex, int c, int c_prime, int length);

struct PancyclicResult {
    std::map<int, RainbowCycle> cycles;  // keyed by length, 3..n-1
    std::vector<int> missing_lengths;
    int fallback_invocations = 0;
};

// Realizes every cycle length in [3, n-1]: length n-1 via
// find_cycle_n_minus_1, the rest from one shared base cycle.  Requires a
// square system with n >= 4 and minimum colour degree at least
// pancyclic_degree_threshold(n); otherwise throws std::invalid_argument.
PancyclicResult rainbow_pancyclic(const GraphSystem& sys);

}  // namespace rainbow
