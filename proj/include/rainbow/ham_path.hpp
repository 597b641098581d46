#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph_system.hpp"

namespace rainbow {

// Grows the path by one vertex if any endpoint has an unused-colour edge to
// a vertex off the path.  The back endpoint is tried before the front,
// colours ascending, neighbours ascending.  nullopt means the path is
// maximal.  An invalid path throws std::invalid_argument.
std::optional<RainbowPath> extend_path(const GraphSystem& sys, const RainbowPath& path);

// Rainbow Hamiltonian path search for square systems: grow greedily; when
// maximal but short, close the path into a rainbow cycle with two unused
// colours, then reopen the cycle through an edge of a further unused colour
// leaving its vertex set.  Every round gains one vertex, so the loop runs
// at most n times.  Succeeds whenever every colour class has minimum degree
// at least (n-1)/2; below that bound it may return nullopt.
//
// When `length_trace` is non-null it receives the path length after every
// round, for inspection of the growth invariant.
std::optional<RainbowPath> find_rainbow_hamiltonian_path(const GraphSystem& sys,
                                                         std::vector<int>* length_trace = nullptr);

}  // namespace rainbow
