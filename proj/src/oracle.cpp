#include "rainbow/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow {

namespace {

int effective_cap(const OracleOptions& opts, int fallback) {
    return opts.cap > 0 ? opts.cap : fallback;
}

void check_cap(const GraphSystem& sys, const OracleOptions& opts, int fallback) {
    const int cap = effective_cap(opts, fallback);
    if (sys.vertex_count() > cap)
        throw std::invalid_argument("instance order " + std::to_string(sys.vertex_count())
                                    + " exceeds the exhaustive search cap of "
                                    + std::to_string(cap));
}

struct Search {
    const GraphSystem& sys;
    bool prune;
    std::vector<int> verts;
    std::vector<int> cols;
    std::vector<char> used_v;
    std::vector<char> used_c;

    explicit Search(const GraphSystem& s, bool prune_symmetry)
        : sys(s),
          prune(prune_symmetry),
          used_v(s.vertex_count(), 0),
          used_c(s.color_count(), 0) {}

    void start_at(int s) {
        verts.assign(1, s);
        cols.clear();
        std::fill(used_v.begin(), used_v.end(), 0);
        std::fill(used_c.begin(), used_c.end(), 0);
        used_v[s] = 1;
    }

    // Extends verts to `target` vertices all larger than verts[0], then
    // closes back to verts[0] with one more unused colour.
    bool cycle_dfs(int target, int depth) {
        if (depth == target) {
            if (prune && verts[1] > verts[target - 1]) return false;
            const int u = verts[target - 1];
            for (int c = 0; c < sys.color_count(); ++c) {
                if (!used_c[c] && sys.adjacent(c, u, verts[0])) {
                    cols.push_back(c);
                    return true;
                }
            }
            return false;
        }
        const int u = verts[depth - 1];
        for (int v = verts[0] + 1; v < sys.vertex_count(); ++v) {
            if (used_v[v]) continue;
            for (int c = 0; c < sys.color_count(); ++c) {
                if (used_c[c] || !sys.adjacent(c, u, v)) continue;
                verts.push_back(v);
                cols.push_back(c);
                used_v[v] = used_c[c] = 1;
                if (cycle_dfs(target, depth + 1)) return true;
                used_v[v] = used_c[c] = 0;
                verts.pop_back();
                cols.pop_back();
            }
        }
        return false;
    }

    bool path_dfs(int target, int depth) {
        if (depth == target) return !prune || verts[0] < verts[target - 1];
        const int u = verts[depth - 1];
        for (int v = 0; v < sys.vertex_count(); ++v) {
            if (used_v[v]) continue;
            for (int c = 0; c < sys.color_count(); ++c) {
                if (used_c[c] || !sys.adjacent(c, u, v)) continue;
                verts.push_back(v);
                cols.push_back(c);
                used_v[v] = used_c[c] = 1;
                if (path_dfs(target, depth + 1)) return true;
                used_v[v] = used_c[c] = 0;
                verts.pop_back();
                cols.pop_back();
            }
        }
        return false;
    }
};

void self_check(const GraphSystem& sys, const RainbowCycle& cycle) {
    const Verdict verdict = verify_rainbow_cycle(sys, cycle);
    if (!verdict.ok) throw std::logic_error("exhaustive search emitted a bad cycle: " + verdict.violation);
}

void self_check(const GraphSystem& sys, const RainbowPath& path) {
    const Verdict verdict = verify_rainbow_path(sys, path);
    if (!verdict.ok) throw std::logic_error("exhaustive search emitted a bad path: " + verdict.violation);
}

}  // namespace

RainbowPath canonical_path(const RainbowPath& path) {
    RainbowPath out = path;
    if (!out.vertices.empty() && out.vertices.front() > out.vertices.back()) {
        std::reverse(out.vertices.begin(), out.vertices.end());
        std::reverse(out.colors.begin(), out.colors.end());
    }
    return out;
}

RainbowCycle canonical_cycle(const RainbowCycle& cycle) {
    const int p = static_cast<int>(cycle.vertices.size());
    if (p < 3) return cycle;
    const int pos = static_cast<int>(
        std::min_element(cycle.vertices.begin(), cycle.vertices.end()) - cycle.vertices.begin());
    const bool forward =
        cycle.vertices[(pos + 1) % p] < cycle.vertices[(pos + p - 1) % p];
    RainbowCycle out;
    out.vertices.reserve(p);
    out.colors.reserve(p);
    for (int i = 0; i < p; ++i) {
        if (forward) {
            out.vertices.push_back(cycle.vertices[(pos + i) % p]);
            out.colors.push_back(cycle.colors[(pos + i) % p]);
        } else {
            out.vertices.push_back(cycle.vertices[(pos - i + p) % p]);
            out.colors.push_back(cycle.colors[(pos - 1 - i + 2 * p) % p]);
        }
    }
    return out;
}

std::optional<RainbowCycle> oracle_hamiltonian_cycle(const GraphSystem& sys,
                                                     const OracleOptions& opts) {
    if (!sys.is_square())
        throw std::invalid_argument("exhaustive Hamiltonian search needs a square system");
    if (sys.vertex_count() < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    check_cap(sys, opts, kOracleCycleCap);

    Search search(sys, opts.prune_symmetry);
    search.start_at(0);
    if (!search.cycle_dfs(sys.vertex_count(), 1)) return std::nullopt;
    RainbowCycle cycle = canonical_cycle({search.verts, search.cols});
    self_check(sys, cycle);
    return cycle;
}

std::optional<RainbowCycle> oracle_cycle_of_length(const GraphSystem& sys, int length,
                                                   const OracleOptions& opts) {
    if (length < 3) throw std::invalid_argument("cycles need at least 3 vertices");
    if (length > sys.vertex_count() || length > sys.color_count())
        throw std::invalid_argument("cycle length " + std::to_string(length)
                                    + " does not fit the system");
    check_cap(sys, opts, kOracleCycleCap);

    Search search(sys, opts.prune_symmetry);
    for (int s = 0; s + length <= sys.vertex_count(); ++s) {
        search.start_at(s);
        if (search.cycle_dfs(length, 1)) {
            RainbowCycle cycle = canonical_cycle({search.verts, search.cols});
            self_check(sys, cycle);
            return cycle;
        }
    }
    return std::nullopt;
}

std::optional<RainbowPath> oracle_hamiltonian_path(const GraphSystem& sys,
                                                   const OracleOptions& opts) {
    if (!sys.is_square())
        throw std::invalid_argument("exhaustive Hamiltonian search needs a square system");
    check_cap(sys, opts, kOraclePathCap);
    if (sys.vertex_count() == 1) return RainbowPath{{0}, {}};

    Search search(sys, opts.prune_symmetry);
    for (int s = 0; s < sys.vertex_count(); ++s) {
        search.start_at(s);
        if (search.path_dfs(sys.vertex_count(), 1)) {
            RainbowPath path = canonical_path({search.verts, search.cols});
            self_check(sys, path);
            return path;
        }
    }
    return std::nullopt;
}

}  // namespace rainbow
