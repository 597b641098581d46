#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rainbow {

// One edge of a graph system: the pair {u,v} placed in colour class `color`.
struct EdgeTriple {
    int color = 0;
    int u = 0;
    int v = 0;
};

// A system of colour classes over a shared vertex set: colour c is a simple
// undirected graph on vertices 0..vertex_count-1.  Stored as one bit matrix
// per colour so adjacency tests are O(1).  Instances are built up front and
// treated as read-only by every solver, which makes const queries safe to
// share across threads.
class GraphSystem {
public:
    GraphSystem(int vertex_count, int color_count);

    int vertex_count() const { return vertex_count_; }
    int color_count() const { return color_count_; }

    // Square systems (one colour per vertex) are what the Hamiltonicity
    // solvers operate on; induced subsystems may be rectangular.
    bool is_square() const { return vertex_count_ == color_count_; }

    bool adjacent(int color, int u, int v) const {
        return (bits_[word_index(color, u, v)] >> (static_cast<unsigned>(v) & 63u)) & 1u;
    }

    // Inserts {u,v} into colour class `color`.  Duplicate insertion is a
    // no-op; self-loops and out-of-range ids throw std::invalid_argument.
    void add_edge(int color, int u, int v);

    // Neighbours of v in colour class `color`, ascending.
    std::vector<int> neighbors(int color, int v) const;

    // Degree of v in colour class `color`.
    int color_degree(int color, int v) const;

    // Degree of v in colour `color` counted only within `within`.
    int color_degree(int color, int v, std::span<const int> within) const;

    // Colours whose class contains the edge {u,v}, ascending.  u == v throws.
    std::vector<int> colors_between(int u, int v) const;

    // Minimum degree over all vertices inside colour class `color`.
    int min_color_degree(int color) const;

    std::size_t edge_count() const;

    // Every edge triple, sorted by (color, u, v) with u < v.
    std::vector<EdgeTriple> edges() const;

private:
    std::size_t word_index(int color, int u, int v) const {
        return (static_cast<std::size_t>(color) * vertex_count_ + u) * row_words_
               + (static_cast<unsigned>(v) >> 6u);
    }
    void check_ids(int color, int u, int v) const;

    int vertex_count_;
    int color_count_;
    int row_words_;
    std::vector<std::uint64_t> bits_;
};

// Builds a square system on n vertices and n colours from an edge list.
// Throws std::invalid_argument naming the index of the first bad triple.
GraphSystem build_system(int n, std::span<const EdgeTriple> edges);

// A walk visiting pairwise distinct vertices through pairwise distinct
// colours: colors[k] is the colour of edge vertices[k]..vertices[k+1].
// A single vertex with no colours is a valid path.
struct RainbowPath {
    std::vector<int> vertices;
    std::vector<int> colors;
};

// Closed variant: colors[k] is the colour of vertices[k]..vertices[(k+1)%p],
// so there are exactly as many colours as vertices.  Length must be >= 3.
struct RainbowCycle {
    std::vector<int> vertices;
    std::vector<int> colors;
};

// Outcome of a certificate check.  `violation` holds the first failure in
// scan order (shape, id range, repeated vertex, repeated colour, missing
// edge) and is empty iff ok.
struct Verdict {
    bool ok = true;
    std::string violation;
};

Verdict verify_rainbow_path(const GraphSystem& sys, const RainbowPath& path);
Verdict verify_rainbow_cycle(const GraphSystem& sys, const RainbowCycle& cycle);

// Subsystem induced by vertex and colour subsets, with maps back to the
// parent ids: vertex_to_parent[new_id] == old_id, ascending.
struct Subsystem {
    GraphSystem system;
    std::vector<int> vertex_to_parent;
    std::vector<int> color_to_parent;
};

Subsystem induced_subsystem(const GraphSystem& sys,
                            std::span<const int> keep_vertices,
                            std::span<const int> keep_colors);

// Re-express a subsystem certificate in the parent's ids.
RainbowPath lift_path(const Subsystem& sub, const RainbowPath& path);
RainbowCycle lift_cycle(const Subsystem& sub, const RainbowCycle& cycle);

}  // namespace rainbow
