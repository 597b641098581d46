#include "rainbow/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "rainbow/rng.hpp"

namespace rainbow {

GraphSystem gen_complete(int n) {
    if (n < 3) throw std::invalid_argument("complete system needs n >= 3");
    GraphSystem sys(n, n);
    for (int c = 0; c < n; ++c)
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) sys.add_edge(c, u, v);
    return sys;
}

GraphSystem gen_balanced_bipartite(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("balanced bipartite system needs even n >= 4");
    GraphSystem sys(n, n);
    const int half = n / 2;
    for (int c = 0; c < n; ++c)
        for (int u = 0; u < half; ++u)
            for (int v = half; v < n; ++v) sys.add_edge(c, u, v);
    return sys;
}

GraphSystem gen_unbalanced_bipartite(int n) {
    if (n < 6 || n % 2 != 0)
        throw std::invalid_argument("unbalanced bipartite system needs even n >= 6");
    GraphSystem sys(n, n);
    const int small = n / 2 - 1;
    for (int c = 0; c < n; ++c)
        for (int u = 0; u < small; ++u)
            for (int v = small; v < n; ++v) sys.add_edge(c, u, v);
    return sys;
}

GraphSystem gen_random_min_degree(int n, int min_degree, std::uint64_t seed,
                                  double extra_density) {
    if (n < 2) throw std::invalid_argument("random system needs n >= 2");
    if (min_degree < 0 || min_degree > n - 1)
        throw std::invalid_argument("min degree must lie in [0, n-1]");
    if (extra_density < 0.0 || extra_density > 1.0)
        throw std::invalid_argument("extra density must lie in [0, 1]");

    GraphSystem sys(n, n);
    std::mt19937_64 rng(seed);
    std::vector<int> degree(n);
    std::vector<int> perm(n);

    for (int c = 0; c < n; ++c) {
        std::iota(perm.begin(), perm.end(), 0);
        shuffle_in_place(perm, rng);
        std::fill(degree.begin(), degree.end(), 0);
        for (int i = 0; i + 1 < n; i += 2) {
            sys.add_edge(c, perm[i], perm[i + 1]);
            ++degree[perm[i]];
            ++degree[perm[i + 1]];
        }

        // Top up the first deficient vertex with a uniform random missing
        // neighbour until the whole class meets the bound.
        for (int u = 0; u < n; ++u) {
            while (degree[u] < min_degree) {
                std::vector<int> candidates;
                for (int v = 0; v < n; ++v)
                    if (v != u && !sys.adjacent(c, u, v)) candidates.push_back(v);
                const int v = candidates[uniform_index(rng, static_cast<int>(candidates.size()))];
                sys.add_edge(c, u, v);
                ++degree[u];
                ++degree[v];
            }
        }

        // Sprinkle extra edges over the non-edges present at this point.
        std::vector<std::pair<int, int>> absent;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!sys.adjacent(c, u, v)) absent.emplace_back(u, v);
        for (const auto& [u, v] : absent)
            if (uniform_real01(rng) < extra_density) sys.add_edge(c, u, v);
    }

    for (int c = 0; c < n; ++c)
        if (sys.min_color_degree(c) < min_degree)
            throw std::logic_error("generator broke its degree bound in color "
                                   + std::to_string(c));
    return sys;
}

}  // namespace rainbow
