#include "rainbow/graph_system.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

std::string id_error(const char* what, int color, int u, int v) {
    return std::string(what) + " (color " + std::to_string(color) + ", vertices "
           + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

GraphSystem::GraphSystem(int vertex_count, int color_count)
    : vertex_count_(vertex_count),
      color_count_(color_count),
      row_words_((vertex_count + 63) / 64) {
    if (vertex_count < 1)
        throw std::invalid_argument("graph system needs at least one vertex");
    if (color_count < 1)
        throw std::invalid_argument("graph system needs at least one color");
    bits_.assign(static_cast<std::size_t>(color_count_) * vertex_count_ * row_words_, 0);
}

void GraphSystem::check_ids(int color, int u, int v) const {
    if (color < 0 || color >= color_count_)
        throw std::invalid_argument(id_error("color out of range", color, u, v));
    if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
        throw std::invalid_argument(id_error("vertex out of range", color, u, v));
    if (u == v)
        throw std::invalid_argument(id_error("self-loop rejected", color, u, v));
}

void GraphSystem::add_edge(int color, int u, int v) {
    check_ids(color, u, v);
    bits_[word_index(color, u, v)] |= std::uint64_t{1} << (static_cast<unsigned>(v) & 63u);
    bits_[word_index(color, v, u)] |= std::uint64_t{1} << (static_cast<unsigned>(u) & 63u);
}

std::vector<int> GraphSystem::neighbors(int color, int v) const {
    check_ids(color, v, v == 0 ? 1 : 0);
    std::vector<int> out;
    const std::size_t base = (static_cast<std::size_t>(color) * vertex_count_ + v) * row_words_;
    for (int w = 0; w < row_words_; ++w) {
        std::uint64_t word = bits_[base + w];
        while (word != 0) {
            const int bit = std::countr_zero(word);
            out.push_back(w * 64 + bit);
            word &= word - 1;
        }
    }
    return out;
}

int GraphSystem::color_degree(int color, int v) const {
    check_ids(color, v, v == 0 ? 1 : 0);
    const std::size_t base = (static_cast<std::size_t>(color) * vertex_count_ + v) * row_words_;
    int deg = 0;
    for (int w = 0; w < row_words_; ++w) deg += std::popcount(bits_[base + w]);
    return deg;
}

int GraphSystem::color_degree(int color, int v, std::span<const int> within) const {
    check_ids(color, v, v == 0 ? 1 : 0);
    int deg = 0;
    for (int u : within) {
        if (u == v) continue;
        if (u < 0 || u >= vertex_count_)
            throw std::invalid_argument("restriction set contains vertex " + std::to_string(u)
                                        + " outside the system");
        deg += adjacent(color, v, u) ? 1 : 0;
    }
    return deg;
}

std::vector<int> GraphSystem::colors_between(int u, int v) const {
    check_ids(0, u, v);
    std::vector<int> out;
    for (int c = 0; c < color_count_; ++c)
        if (adjacent(c, u, v)) out.push_back(c);
    return out;
}

int GraphSystem::min_color_degree(int color) const {
    int best = vertex_count_;
    for (int v = 0; v < vertex_count_; ++v) best = std::min(best, color_degree(color, v));
    return best;
}

std::size_t GraphSystem::edge_count() const {
    std::size_t total = 0;
    for (const std::uint64_t word : bits_) total += std::popcount(word);
    return total / 2;
}

std::vector<EdgeTriple> GraphSystem::edges() const {
    std::vector<EdgeTriple> out;
    for (int c = 0; c < color_count_; ++c)
        for (int u = 0; u < vertex_count_; ++u)
            for (int v : neighbors(c, u))
                if (u < v) out.push_back({c, u, v});
    return out;
}

GraphSystem build_system(int n, std::span<const EdgeTriple> edges) {
    if (n < 1) throw std::invalid_argument("system order must be positive");
    GraphSystem sys(n, n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const EdgeTriple& e = edges[i];
        try {
            sys.add_edge(e.color, e.u, e.v);
        } catch (const std::invalid_argument& err) {
            throw std::invalid_argument("edge " + std::to_string(i) + ": " + err.what());
        }
    }
    return sys;
}

namespace {

Verdict fail(std::string message) { return Verdict{false, std::move(message)}; }

// Shared body of the two verifiers.  `closed` switches between path and
// cycle edge counting; every check reports the first offending index.
Verdict verify_sequence(const GraphSystem& sys, const std::vector<int>& vertices,
                        const std::vector<int>& colors, bool closed) {
    const std::size_t p = vertices.size();
    if (closed && p < 3)
        return fail("cycle needs at least 3 vertices, got " + std::to_string(p));
    if (!closed && p < 1) return fail("path needs at least 1 vertex");

    const std::size_t want_colors = closed ? p : p - 1;
    if (colors.size() != want_colors)
        return fail("color count mismatch: " + std::to_string(colors.size()) + " colors for "
                    + std::to_string(p) + " vertices");

    std::set<int> seen_v;
    for (std::size_t k = 0; k < p; ++k) {
        const int v = vertices[k];
        if (v < 0 || v >= sys.vertex_count())
            return fail("vertex id out of range at index " + std::to_string(k));
        if (!seen_v.insert(v).second)
            return fail("duplicate vertex " + std::to_string(v) + " at index "
                        + std::to_string(k));
    }

    std::set<int> seen_c;
    for (std::size_t k = 0; k < colors.size(); ++k) {
        const int c = colors[k];
        if (c < 0 || c >= sys.color_count())
            return fail("color id out of range at index " + std::to_string(k));
        if (!seen_c.insert(c).second)
            return fail("duplicate color " + std::to_string(c) + " at index "
                        + std::to_string(k));
    }

    for (std::size_t k = 0; k < colors.size(); ++k) {
        const int u = vertices[k];
        const int v = vertices[(k + 1) % p];
        if (!sys.adjacent(colors[k], u, v))
            return fail("missing edge at index " + std::to_string(k) + ": " + std::to_string(u)
                        + "-" + std::to_string(v) + " not in color " + std::to_string(colors[k]));
    }
    return Verdict{};
}

}  // namespace

Verdict verify_rainbow_path(const GraphSystem& sys, const RainbowPath& path) {
    return verify_sequence(sys, path.vertices, path.colors, /*closed=*/false);
}

Verdict verify_rainbow_cycle(const GraphSystem& sys, const RainbowCycle& cycle) {
    return verify_sequence(sys, cycle.vertices, cycle.colors, /*closed=*/true);
}

Subsystem induced_subsystem(const GraphSystem& sys, std::span<const int> keep_vertices,
                            std::span<const int> keep_colors) {
    std::set<int> vset(keep_vertices.begin(), keep_vertices.end());
    std::set<int> cset(keep_colors.begin(), keep_colors.end());
    if (vset.empty()) throw std::invalid_argument("induced subsystem needs at least one vertex");
    if (cset.empty()) throw std::invalid_argument("induced subsystem needs at least one color");
    for (int v : vset)
        if (v < 0 || v >= sys.vertex_count())
            throw std::invalid_argument("kept vertex " + std::to_string(v) + " out of range");
    for (int c : cset)
        if (c < 0 || c >= sys.color_count())
            throw std::invalid_argument("kept color " + std::to_string(c) + " out of range");

    Subsystem sub{GraphSystem(static_cast<int>(vset.size()), static_cast<int>(cset.size())),
                  std::vector<int>(vset.begin(), vset.end()),
                  std::vector<int>(cset.begin(), cset.end())};
    for (std::size_t c = 0; c < sub.color_to_parent.size(); ++c)
        for (std::size_t u = 0; u < sub.vertex_to_parent.size(); ++u)
            for (std::size_t v = u + 1; v < sub.vertex_to_parent.size(); ++v)
                if (sys.adjacent(sub.color_to_parent[c], sub.vertex_to_parent[u],
                                 sub.vertex_to_parent[v]))
                    sub.system.add_edge(static_cast<int>(c), static_cast<int>(u),
                                        static_cast<int>(v));
    return sub;
}

namespace {

std::vector<int> map_ids(const std::vector<int>& ids, const std::vector<int>& to_parent,
                         const char* what) {
    std::vector<int> out;
    out.reserve(ids.size());
    for (int id : ids) {
        if (id < 0 || id >= static_cast<int>(to_parent.size()))
            throw std::invalid_argument(std::string(what) + " id " + std::to_string(id)
                                        + " not in subsystem");
        out.push_back(to_parent[id]);
    }
    return out;
}

}  // namespace

RainbowPath lift_path(const Subsystem& sub, const RainbowPath& path) {
    return RainbowPath{map_ids(path.vertices, sub.vertex_to_parent, "vertex"),
                       map_ids(path.colors, sub.color_to_parent, "color")};
}

RainbowCycle lift_cycle(const Subsystem& sub, const RainbowCycle& cycle) {
    return RainbowCycle{map_ids(cycle.vertices, sub.vertex_to_parent, "vertex"),
                        map_ids(cycle.colors, sub.color_to_parent, "color")};
}

}  // namespace rainbow
