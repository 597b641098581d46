#include "rainbow/ham_path.hpp"

#include <algorithm>
#include <stdexcept>

#include "rainbow/rotation.hpp"

namespace rainbow {

namespace {

std::vector<char> color_mask(const GraphSystem& sys, const std::vector<int>& colors) {
    std::vector<char> used(sys.color_count(), 0);
    for (int c : colors) used[c] = 1;
    return used;
}

std::vector<char> vertex_mask(const GraphSystem& sys, const std::vector<int>& vertices) {
    std::vector<char> used(sys.vertex_count(), 0);
    for (int v : vertices) used[v] = 1;
    return used;
}

}  // namespace

std::optional<RainbowPath> extend_path(const GraphSystem& sys, const RainbowPath& path) {
    const Verdict verdict = verify_rainbow_path(sys, path);
    if (!verdict.ok)
        throw std::invalid_argument("cannot extend an invalid path: " + verdict.violation);

    const std::vector<char> used_c = color_mask(sys, path.colors);
    const std::vector<char> used_v = vertex_mask(sys, path.vertices);
    for (const bool at_back : {true, false}) {
        const int endpoint = at_back ? path.vertices.back() : path.vertices.front();
        for (int c = 0; c < sys.color_count(); ++c) {
            if (used_c[c]) continue;
            for (int v : sys.neighbors(c, endpoint)) {
                if (used_v[v]) continue;
                RainbowPath longer = path;
                if (at_back) {
                    longer.vertices.push_back(v);
                    longer.colors.push_back(c);
                } else {
                    longer.vertices.insert(longer.vertices.begin(), v);
                    longer.colors.insert(longer.colors.begin(), c);
                }
                return longer;
            }
        }
    }
    return std::nullopt;
}

std::optional<RainbowPath> find_rainbow_hamiltonian_path(const GraphSystem& sys,
                                                         std::vector<int>* length_trace) {
    if (!sys.is_square())
        throw std::invalid_argument("Hamiltonian path search needs a square system");
    const int n = sys.vertex_count();

    RainbowPath path{{0}, {}};
    if (length_trace) {
        length_trace->clear();
        length_trace->push_back(1);
    }

    // Each round adds one vertex, by extension or by the close-and-reopen
    // detour, so n rounds suffice.  The extra headroom only feeds the
    // defensive check below.
    for (int round = 0; round < 2 * n + 4; ++round) {
        if (static_cast<int>(path.vertices.size()) == n) return path;

        if (std::optional<RainbowPath> longer = extend_path(sys, path)) {
            path = std::move(*longer);
            if (length_trace) length_trace->push_back(static_cast<int>(path.vertices.size()));
            continue;
        }

        const int p = static_cast<int>(path.vertices.size());
        if (p < 3) return std::nullopt;

        std::vector<int> unused;
        for (int c = 0; c < n; ++c)
            if (std::find(path.colors.begin(), path.colors.end(), c) == path.colors.end())
                unused.push_back(c);
        if (unused.size() < 2) return std::nullopt;

        const std::optional<RainbowCycle> cycle =
            close_rainbow_cycle(sys, path, unused[0], unused[1]);
        if (!cycle) return std::nullopt;

        // Reopen: leave the cycle through an edge of a colour unused on it,
        // dropping the cycle edge after the exit vertex.  The new path picks
        // up one vertex from outside.
        const std::vector<char> on_cycle = vertex_mask(sys, cycle->vertices);
        const std::vector<char> cycle_colors = color_mask(sys, cycle->colors);
        bool reopened = false;
        for (int c2 = 0; c2 < n && !reopened; ++c2) {
            if (cycle_colors[c2]) continue;
            for (int j = 0; j < p && !reopened; ++j) {
                for (int x : sys.neighbors(c2, cycle->vertices[j])) {
                    if (on_cycle[x]) continue;
                    RainbowPath longer;
                    longer.vertices.reserve(p + 1);
                    longer.colors.reserve(p);
                    longer.vertices.push_back(x);
                    longer.colors.push_back(c2);
                    for (int k = j; k >= 0; --k) longer.vertices.push_back(cycle->vertices[k]);
                    for (int k = j - 1; k >= 0; --k) longer.colors.push_back(cycle->colors[k]);
                    if (j + 1 < p) longer.colors.push_back(cycle->colors[p - 1]);
                    for (int k = p - 1; k > j; --k) {
                        longer.vertices.push_back(cycle->vertices[k]);
                        if (k > j + 1) longer.colors.push_back(cycle->colors[k - 1]);
                    }
                    path = std::move(longer);
                    reopened = true;
                    break;
                }
            }
        }
        if (!reopened) return std::nullopt;
        if (length_trace) length_trace->push_back(static_cast<int>(path.vertices.size()));
    }
    throw std::logic_error("path growth stalled, which the round accounting rules out");
}

}  // namespace rainbow
