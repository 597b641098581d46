#pragma once

#include <cstdint>

#include "rainbow/graph_system.hpp"

namespace rainbow {

// Every colour class is the complete graph K_n.  Requires n >= 3.
GraphSystem gen_complete(int n);

// Every colour class is K_{n/2,n/2} with parts {0..n/2-1} and {n/2..n-1}.
// Requires even n >= 4.  Minimum colour degree is n/2; only even cycle
// lengths are realizable.
GraphSystem gen_balanced_bipartite(int n);

// Every colour class is complete bipartite with parts {0..n/2-2} of size
// n/2-1 and {n/2-1..n-1} of size n/2+1.  Requires even n >= 6.  Minimum
// colour degree is n/2-1 and no colour class has a Hamiltonian path, which
// makes the instances just below the path threshold infeasible.
GraphSystem gen_unbalanced_bipartite(int n);

// Random square system where every colour class has minimum degree at least
// min_degree: per colour, a shuffled near-perfect matching, then uniform
// random edges until no vertex is deficient, then each remaining non-edge
// independently with probability extra_density.  Same seed, same instance.
GraphSystem gen_random_min_degree(int n, int min_degree, std::uint64_t seed,
                                  double extra_density = 0.1);

}  // namespace rainbow
