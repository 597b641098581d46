#pragma once

#include <array>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "rainbow/graph_system.hpp"

namespace rainbow {

// Colours come in fixed groups of three: group i owns colours 3i, 3i+1,
// 3i+2, one group per pattern path.
struct ColorTriple {
    std::array<int, 3> colors{};
    static ColorTriple group(int index) {
        return ColorTriple{{3 * index, 3 * index + 1, 3 * index + 2}};
    }
};

// Four vertices v1 v2 v3 v4 joined by edges in the group's three colours in
// order.  The middle edge v2..v3 is the seam later replaced when a path is
// absorbed.
struct PatternPath {
    std::array<int, 4> vertices{};
    ColorTriple triple;
};

// Rainbow cycle of length 5t that alternates t pattern paths with t
// connector vertices; connectors[i] joins pattern_paths[i].v4 to
// pattern_paths[(i+1) % t].v1 through two colours outside every group used.
struct AbsorbingCycle {
    RainbowCycle cycle;
    std::vector<PatternPath> pattern_paths;
    std::vector<int> connectors;
};

struct AbsorptionParams {
    int ell = 6;             // colours reserved for pattern groups, multiple of 3
    int build_retries = 20;  // attempts per build or per full pipeline pass
    int sample_retries = 0;  // rejection budget per pattern path draw
};

// ell must be a positive multiple of 3 small enough that the absorbing
// cycle covers at most half the vertices: 10 * (ell/3) <= n.
bool absorption_params_valid(const AbsorptionParams& params, int n);

// ell = 6 below n = 100 and about 3n/50 beyond, clamped down to the largest
// multiple of 3 the size bound allows; n <= 9 admits no valid ell, which
// the returned params then report through absorption_params_valid.
AbsorptionParams default_absorption_params(int n);

// Draws v2 uniformly, then uniform neighbours v1, v3, v4 in the triple's
// colours, rejecting repeated or forbidden vertices, until the retry budget
// runs out (nullopt).
std::optional<PatternPath> sample_pattern_path(const GraphSystem& sys, ColorTriple triple,
                                               std::span<const int> forbidden_vertices,
                                               std::mt19937_64& rng, int sample_retries);

// A pattern path absorbs a path with endpoints x1, x2 and spare colour s
// when the edge x1..v2 exists in colour s and the edge x2..v3 exists in the
// middle pattern colour.  x1 == x2 is allowed (one-vertex paths); either
// endpoint colliding with the pattern vertices throws.
bool is_absorbing_for(const GraphSystem& sys, const PatternPath& pattern, int x1, int x2, int s);

// Structural validation of an AbsorbingCycle against its system: the cycle
// verifies, pattern paths appear consecutively with their group colours,
// connectors sit between them, and both together partition the cycle.
Verdict check_absorbing_cycle(const GraphSystem& sys, const AbsorbingCycle& ac);

// Randomized build: sample one pattern path per group, drop the later of
// any vertex-sharing pair, then link the survivors cyclically through
// connector vertices, spending two spare colours per link.  Retries from
// scratch up to params.build_retries times; nullopt when the budget ends.
std::optional<AbsorbingCycle> build_absorbing_cycle(const GraphSystem& sys,
                                                    const AbsorptionParams& params,
                                                    std::mt19937_64& rng);

// Splices path p (vertex-disjoint and colour-disjoint from the cycle) into
// the first pattern path that absorbs (front(p), back(p), s): the seam edge
// v2..v3 is rerouted as v2 -s- p -middle- v3.  nullopt when no pattern path
// absorbs this triple; the caller's recourse is a rebuilt absorbing cycle.
std::optional<RainbowCycle> absorb(const GraphSystem& sys, const AbsorbingCycle& ac,
                                   const RainbowPath& p, int s);

// Full pipeline: build an absorbing cycle, find a rainbow Hamiltonian path
// on the untouched vertices and colours, then absorb it with the one colour
// left over.  Each failed stage restarts the pipeline, up to
// params.build_retries passes.  Invalid params for this n give nullopt
// immediately: no absorbing cycle fits such a system.
std::optional<RainbowCycle> find_rainbow_hamiltonian_cycle(const GraphSystem& sys,
                                                           const AbsorptionParams& params,
                                                           std::mt19937_64& rng);

}  // namespace rainbow
