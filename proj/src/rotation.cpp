#include "rainbow/rotation.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow {

std::optional<RainbowCycle> close_rainbow_cycle(const GraphSystem& sys, const RainbowPath& path,
                                                int c, int c_prime) {
    const Verdict verdict = verify_rainbow_path(sys, path);
    if (!verdict.ok)
        throw std::invalid_argument("cannot close an invalid path: " + verdict.violation);
    const int p = static_cast<int>(path.vertices.size());
    if (p < 3) throw std::invalid_argument("closing needs a path of at least 3 vertices");
    for (int color : {c, c_prime})
        if (color < 0 || color >= sys.color_count())
            throw std::invalid_argument("closing color " + std::to_string(color)
                                        + " out of range");
    if (c == c_prime) throw std::invalid_argument("closing colors must be distinct");
    for (int color : {c, c_prime})
        if (std::find(path.colors.begin(), path.colors.end(), color) != path.colors.end())
            throw std::invalid_argument("closing color " + std::to_string(color)
                                        + " already used on the path");

    const std::vector<int>& vs = path.vertices;
    for (int closing : {std::min(c, c_prime), std::max(c, c_prime)}) {
        if (sys.adjacent(closing, vs.front(), vs.back())) {
            RainbowCycle cycle{path.vertices, path.colors};
            cycle.colors.push_back(closing);
            return cycle;
        }
    }

    for (int t = 1; t + 2 < p; ++t) {
        if (!sys.adjacent(c, vs[0], vs[t + 1]) || !sys.adjacent(c_prime, vs[p - 1], vs[t]))
            continue;
        RainbowCycle cycle;
        cycle.vertices.reserve(p);
        cycle.colors.reserve(p);
        for (int k = 0; k <= t; ++k) cycle.vertices.push_back(vs[k]);
        for (int k = p - 1; k > t; --k) cycle.vertices.push_back(vs[k]);
        for (int k = 0; k < t; ++k) cycle.colors.push_back(path.colors[k]);
        cycle.colors.push_back(c_prime);
        for (int k = p - 2; k > t; --k) cycle.colors.push_back(path.colors[k]);
        cycle.colors.push_back(c);
        return cycle;
    }
    return std::nullopt;
}

}  // namespace rainbow
