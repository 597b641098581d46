#pragma once

#include <optional>

#include "rainbow/graph_system.hpp"

namespace rainbow {

// Closes a rainbow path v_0..v_{p-1} into a rainbow cycle on the same
// vertex set using two extra colours c and c_prime, neither on the path.
//
// Tried in order:
//   (a) direct closure: one of c, c_prime (smaller first) on the edge
//       v_0..v_{p-1}, keeping every path edge;
//   (b) rotation at the smallest pivot t in [1, p-3]: edges v_0..v_{t+1} in
//       colour c and v_{p-1}..v_t in colour c_prime replace the path edge
//       v_t..v_{t+1}, giving the cycle v_0..v_t, v_{p-1}..v_{t+1}.
//
// Whenever the degree sum d_c(v_0, V(P)) + d_{c_prime}(v_{p-1}, V(P)) is at
// least p, one of the two succeeds.  nullopt means neither applies.
// Precondition violations (invalid path, equal or used colours, p < 3)
// throw std::invalid_argument.
std::optional<RainbowCycle> close_rainbow_cycle(const GraphSystem& sys, const RainbowPath& path,
                                                int c, int c_prime);

}  // namespace rainbow
