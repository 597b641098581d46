#include "rainbow/absorption.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rainbow/ham_path.hpp"
#include "rainbow/rng.hpp"

namespace rainbow {

bool absorption_params_valid(const AbsorptionParams& params, int n) {
    return params.ell >= 3 && params.ell % 3 == 0 && 10 * (params.ell / 3) <= n
           && params.build_retries >= 1 && params.sample_retries >= 1;
}

AbsorptionParams default_absorption_params(int n) {
    AbsorptionParams params;
    params.ell = n < 100 ? 6 : 3 * ((n + 49) / 50);
    while (params.ell > 3 && 10 * (params.ell / 3) > n) params.ell -= 3;
    params.build_retries = 20;
    params.sample_retries = 50 * std::max(n, 1);
    return params;
}

namespace {

void check_triple(const GraphSystem& sys, const ColorTriple& triple) {
    for (int c : triple.colors)
        if (c < 0 || c >= sys.color_count())
            throw std::invalid_argument("pattern color " + std::to_string(c) + " out of range");
    if (triple.colors[0] == triple.colors[1] || triple.colors[0] == triple.colors[2]
        || triple.colors[1] == triple.colors[2])
        throw std::invalid_argument("pattern colors must be distinct");
}

int uniform_neighbor(const GraphSystem& sys, int color, int v, std::mt19937_64& rng) {
    const std::vector<int> candidates = sys.neighbors(color, v);
    if (candidates.empty()) return -1;
    return candidates[uniform_index(rng, static_cast<int>(candidates.size()))];
}

}  // namespace

std::optional<PatternPath> sample_pattern_path(const GraphSystem& sys, ColorTriple triple,
                                               std::span<const int> forbidden_vertices,
                                               std::mt19937_64& rng, int sample_retries) {
    check_triple(sys, triple);
    if (sample_retries < 1) throw std::invalid_argument("sample retry budget must be positive");
    std::vector<char> forbidden(sys.vertex_count(), 0);
    for (int v : forbidden_vertices) {
        if (v < 0 || v >= sys.vertex_count())
            throw std::invalid_argument("forbidden vertex " + std::to_string(v)
                                        + " out of range");
        forbidden[v] = 1;
    }

    for (int attempt = 0; attempt < sample_retries; ++attempt) {
        const int v2 = uniform_index(rng, sys.vertex_count());
        const int v1 = uniform_neighbor(sys, triple.colors[0], v2, rng);
        const int v3 = uniform_neighbor(sys, triple.colors[1], v2, rng);
        if (v1 < 0 || v3 < 0) continue;
        const int v4 = uniform_neighbor(sys, triple.colors[2], v3, rng);
        if (v4 < 0) continue;
        const std::array<int, 4> vs{v1, v2, v3, v4};
        const std::set<int> distinct(vs.begin(), vs.end());
        if (distinct.size() != 4) continue;
        if (forbidden[v1] || forbidden[v2] || forbidden[v3] || forbidden[v4]) continue;
        return PatternPath{vs, triple};
    }
    return std::nullopt;
}

bool is_absorbing_for(const GraphSystem& sys, const PatternPath& pattern, int x1, int x2,
                      int s) {
    check_triple(sys, pattern.triple);
    if (s < 0 || s >= sys.color_count())
        throw std::invalid_argument("spare color " + std::to_string(s) + " out of range");
    for (int c : pattern.triple.colors)
        if (c == s)
            throw std::invalid_argument("spare color collides with a pattern color");
    for (int x : {x1, x2}) {
        if (x < 0 || x >= sys.vertex_count())
            throw std::invalid_argument("endpoint " + std::to_string(x) + " out of range");
        if (std::find(pattern.vertices.begin(), pattern.vertices.end(), x)
            != pattern.vertices.end())
            throw std::invalid_argument("endpoint " + std::to_string(x)
                                        + " collides with the pattern path");
    }
    return sys.adjacent(s, x1, pattern.vertices[1])
           && sys.adjacent(pattern.triple.colors[1], x2, pattern.vertices[2]);
}

Verdict check_absorbing_cycle(const GraphSystem& sys, const AbsorbingCycle& ac) {
    const Verdict cycle_verdict = verify_rainbow_cycle(sys, ac.cycle);
    if (!cycle_verdict.ok) return cycle_verdict;

    const int t = static_cast<int>(ac.pattern_paths.size());
    const int len = static_cast<int>(ac.cycle.vertices.size());
    if (t < 1) return Verdict{false, "no pattern paths"};
    if (static_cast<int>(ac.connectors.size()) != t)
        return Verdict{false, "connector count differs from pattern path count"};
    if (len != 5 * t)
        return Verdict{false, "cycle length " + std::to_string(len) + " is not 5x"
                                  + std::to_string(t)};

    std::vector<int> start_of(t, -1);
    for (int i = 0; i < t; ++i) {
        const PatternPath& q = ac.pattern_paths[i];
        if (q.triple.colors[0] % 3 != 0 || q.triple.colors[1] != q.triple.colors[0] + 1
            || q.triple.colors[2] != q.triple.colors[0] + 2)
            return Verdict{false, "pattern path " + std::to_string(i)
                                      + " does not use one colour group"};
        const auto it = std::find(ac.cycle.vertices.begin(), ac.cycle.vertices.end(),
                                  q.vertices[0]);
        if (it == ac.cycle.vertices.end())
            return Verdict{false, "pattern path " + std::to_string(i) + " not on the cycle"};
        const int k = static_cast<int>(it - ac.cycle.vertices.begin());
        start_of[i] = k;
        for (int step = 0; step < 4; ++step) {
            if (ac.cycle.vertices[(k + step) % len] != q.vertices[step])
                return Verdict{false, "pattern path " + std::to_string(i)
                                          + " is not embedded consecutively"};
            if (step < 3 && ac.cycle.colors[(k + step) % len] != q.triple.colors[step])
                return Verdict{false, "pattern path " + std::to_string(i)
                                          + " edge colours differ from its group"};
        }
    }
    for (int i = 0; i < t; ++i) {
        const int after = (start_of[i] + 4) % len;
        if (ac.cycle.vertices[after] != ac.connectors[i])
            return Verdict{false, "connector " + std::to_string(i)
                                      + " does not follow its pattern path"};
        if (ac.cycle.vertices[(after + 1) % len] != ac.pattern_paths[(i + 1) % t].vertices[0])
            return Verdict{false, "connector " + std::to_string(i)
                                      + " does not reach the next pattern path"};
    }

    std::set<int> covered;
    for (const PatternPath& q : ac.pattern_paths)
        covered.insert(q.vertices.begin(), q.vertices.end());
    for (int u : ac.connectors) covered.insert(u);
    if (static_cast<int>(covered.size()) != len)
        return Verdict{false, "pattern paths and connectors do not partition the cycle"};
    return Verdict{};
}

std::optional<AbsorbingCycle> build_absorbing_cycle(const GraphSystem& sys,
                                                    const AbsorptionParams& params,
                                                    std::mt19937_64& rng) {
    if (!sys.is_square())
        throw std::invalid_argument("absorbing cycle construction needs a square system");
    if (!absorption_params_valid(params, sys.vertex_count()))
        throw std::invalid_argument("absorption parameters invalid for n = "
                                    + std::to_string(sys.vertex_count()));
    const int groups = params.ell / 3;

    for (int attempt = 0; attempt < params.build_retries; ++attempt) {
        std::vector<PatternPath> sampled;
        bool sampling_failed = false;
        for (int i = 0; i < groups && !sampling_failed; ++i) {
            std::optional<PatternPath> q = sample_pattern_path(
                sys, ColorTriple::group(i), {}, rng, params.sample_retries);
            if (!q)
                sampling_failed = true;
            else
                sampled.push_back(*q);
        }
        if (sampling_failed) continue;

        // Keep the earlier path of every vertex-sharing pair.
        std::vector<char> alive(sampled.size(), 1);
        for (std::size_t i = 0; i < sampled.size(); ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < sampled.size(); ++j) {
                if (!alive[j]) continue;
                bool overlap = false;
                for (int u : sampled[i].vertices)
                    for (int v : sampled[j].vertices) overlap = overlap || u == v;
                if (overlap) alive[j] = 0;
            }
        }
        std::vector<PatternPath> paths;
        for (std::size_t i = 0; i < sampled.size(); ++i)
            if (alive[i]) paths.push_back(sampled[i]);
        const int t = static_cast<int>(paths.size());

        std::vector<char> vertex_taken(sys.vertex_count(), 0);
        std::vector<char> color_taken(sys.color_count(), 0);
        for (const PatternPath& q : paths) {
            for (int v : q.vertices) vertex_taken[v] = 1;
            for (int c : q.triple.colors) color_taken[c] = 1;
        }

        // Link path i to path i+1 through a free vertex and two free
        // colours, scanning vertices then colour pairs ascending.
        std::vector<int> connectors;
        std::vector<std::array<int, 2>> link_colors;
        bool linking_failed = false;
        for (int i = 0; i < t && !linking_failed; ++i) {
            const int from = paths[i].vertices[3];
            const int to = paths[(i + 1) % t].vertices[0];
            bool linked = false;
            for (int u = 0; u < sys.vertex_count() && !linked; ++u) {
                if (vertex_taken[u]) continue;
                for (int ca = 0; ca < sys.color_count() && !linked; ++ca) {
                    if (color_taken[ca] || !sys.adjacent(ca, from, u)) continue;
                    for (int cb = 0; cb < sys.color_count() && !linked; ++cb) {
                        if (cb == ca || color_taken[cb] || !sys.adjacent(cb, u, to)) continue;
                        connectors.push_back(u);
                        link_colors.push_back({ca, cb});
                        vertex_taken[u] = 1;
                        color_taken[ca] = color_taken[cb] = 1;
                        linked = true;
                    }
                }
            }
            linking_failed = !linked;
        }
        if (linking_failed) continue;

        AbsorbingCycle ac;
        ac.pattern_paths = paths;
        ac.connectors = connectors;
        for (int i = 0; i < t; ++i) {
            for (int step = 0; step < 4; ++step)
                ac.cycle.vertices.push_back(paths[i].vertices[step]);
            ac.cycle.vertices.push_back(connectors[i]);
            for (int c : paths[i].triple.colors) ac.cycle.colors.push_back(c);
            ac.cycle.colors.push_back(link_colors[i][0]);
            ac.cycle.colors.push_back(link_colors[i][1]);
        }

        const Verdict verdict = check_absorbing_cycle(sys, ac);
        if (!verdict.ok)
            throw std::logic_error("assembled absorbing cycle is malformed: " + verdict.violation);
        return ac;
    }
    return std::nullopt;
}

std::optional<RainbowCycle> absorb(const GraphSystem& sys, const AbsorbingCycle& ac,
                                   const RainbowPath& p, int s) {
    const Verdict cycle_verdict = check_absorbing_cycle(sys, ac);
    if (!cycle_verdict.ok)
        throw std::invalid_argument("absorbing cycle is malformed: " + cycle_verdict.violation);
    const Verdict path_verdict = verify_rainbow_path(sys, p);
    if (!path_verdict.ok)
        throw std::invalid_argument("path to absorb does not verify: " + path_verdict.violation);
    if (s < 0 || s >= sys.color_count())
        throw std::invalid_argument("spare color out of range");
    for (int v : p.vertices)
        if (std::find(ac.cycle.vertices.begin(), ac.cycle.vertices.end(), v)
            != ac.cycle.vertices.end())
            throw std::invalid_argument("path vertex " + std::to_string(v)
                                        + " already on the absorbing cycle");
    for (int c : p.colors)
        if (std::find(ac.cycle.colors.begin(), ac.cycle.colors.end(), c)
            != ac.cycle.colors.end())
            throw std::invalid_argument("path color " + std::to_string(c)
                                        + " already on the absorbing cycle");
    if (std::find(p.colors.begin(), p.colors.end(), s) != p.colors.end()
        || std::find(ac.cycle.colors.begin(), ac.cycle.colors.end(), s)
               != ac.cycle.colors.end())
        throw std::invalid_argument("spare color is not fresh");

    const int x1 = p.vertices.front();
    const int x2 = p.vertices.back();
    for (const PatternPath& q : ac.pattern_paths) {
        if (!is_absorbing_for(sys, q, x1, x2, s)) continue;

        const int pos = static_cast<int>(
            std::find(ac.cycle.vertices.begin(), ac.cycle.vertices.end(), q.vertices[1])
            - ac.cycle.vertices.begin());
        RainbowCycle out;
        out.vertices.assign(ac.cycle.vertices.begin(), ac.cycle.vertices.begin() + pos + 1);
        out.vertices.insert(out.vertices.end(), p.vertices.begin(), p.vertices.end());
        out.vertices.insert(out.vertices.end(), ac.cycle.vertices.begin() + pos + 1,
                            ac.cycle.vertices.end());
        out.colors.assign(ac.cycle.colors.begin(), ac.cycle.colors.begin() + pos);
        out.colors.push_back(s);
        out.colors.insert(out.colors.end(), p.colors.begin(), p.colors.end());
        out.colors.push_back(q.triple.colors[1]);
        out.colors.insert(out.colors.end(), ac.cycle.colors.begin() + pos + 1,
                          ac.cycle.colors.end());
        if (out.vertices[(pos + static_cast<int>(p.vertices.size()) + 1)
                         % static_cast<int>(out.vertices.size())]
            != q.vertices[2])
            throw std::logic_error("absorbing seam does not continue at v3");
        return out;
    }
    return std::nullopt;
}

std::optional<RainbowCycle> find_rainbow_hamiltonian_cycle(const GraphSystem& sys,
                                                           const AbsorptionParams& params,
                                                           std::mt19937_64& rng) {
    if (!sys.is_square())
        throw std::invalid_argument("Hamiltonian cycle search needs a square system");
    const int n = sys.vertex_count();
    if (!absorption_params_valid(params, n)) return std::nullopt;

    for (int attempt = 0; attempt < params.build_retries; ++attempt) {
        const std::optional<AbsorbingCycle> ac = build_absorbing_cycle(sys, params, rng);
        if (!ac) continue;

        std::vector<char> on_cycle(n, 0);
        std::vector<char> cycle_color(n, 0);
        for (int v : ac->cycle.vertices) on_cycle[v] = 1;
        for (int c : ac->cycle.colors) cycle_color[c] = 1;
        std::vector<int> keep_vertices;
        std::vector<int> keep_colors;
        for (int v = 0; v < n; ++v)
            if (!on_cycle[v]) keep_vertices.push_back(v);
        for (int c = 0; c < n; ++c)
            if (!cycle_color[c]) keep_colors.push_back(c);

        const Subsystem sub = induced_subsystem(sys, keep_vertices, keep_colors);
        const std::optional<RainbowPath> inner = find_rainbow_hamiltonian_path(sub.system);
        if (!inner) continue;
        const RainbowPath lifted = lift_path(sub, *inner);

        int spare = -1;
        for (int c : keep_colors)
            if (std::find(lifted.colors.begin(), lifted.colors.end(), c) == lifted.colors.end())
                spare = c;
        if (spare < 0) throw std::logic_error("no colour left over for the seam");

        const std::optional<RainbowCycle> closed = absorb(sys, *ac, lifted, spare);
        if (!closed) continue;

        if (static_cast<int>(closed->vertices.size()) != n
            || !verify_rainbow_cycle(sys, *closed).ok)
            throw std::logic_error("absorption produced a non-Hamiltonian result");
        return closed;
    }
    return std::nullopt;
}

}  // namespace rainbow
