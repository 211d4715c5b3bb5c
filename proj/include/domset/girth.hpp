#pragma once

#include "domset/graph.hpp"

#include <queue>

namespace domset {

// Length of a shortest cycle; empty optional for forests.
struct GirthInfo {
    std::optional<int> girth;

    bool infinite() const { return !girth.has_value(); }

    std::string to_string() const {
        return infinite() ? std::string("inf") : std::to_string(*girth);
    }

    friend bool operator==(const GirthInfo&, const GirthInfo&) = default;
};

// BFS from every vertex; the first non-tree edge seen from some root lying
// on a shortest cycle yields its exact length, and every closed walk found
// this way is at least as long as the girth.
inline GirthInfo girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int r = 0; r < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(r);
        dist[r] = 0;
        parent[r] = -1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (2 * dist[u] >= best) break; // no shorter cycle reachable from here
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return {};
    return {best};
}

} // namespace domset
