#pragma once

#include "domset/graph.hpp"

namespace domset {

// Ordering in which every vertex has at most k neighbors of larger position,
// with k the degeneracy of the graph.
struct DegeneracyOrdering {
    int k = 0;
    std::vector<int> order;    // position -> vertex
    std::vector<int> position; // vertex -> position
};

// Repeated minimum-degree removal with bucketed degrees; linear time.
// Deterministic for a given input graph.
inline DegeneracyOrdering degeneracy_ordering(const Graph& g) {
    const int n = g.vertex_count();
    DegeneracyOrdering out;
    out.order.resize(n);
    out.position.resize(n);
    if (n == 0) return out;

    const int maxd = g.max_degree();
    std::vector<int> deg(n), pos(n), vert(n), bin(maxd + 2, 0);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        ++bin[deg[v]];
    }
    int startv = 0;
    for (int d = 0; d <= maxd + 1; ++d) {
        int c = bin[d];
        bin[d] = startv;
        startv += c;
    }
    for (int v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (int d = maxd; d >= 1; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    int k = 0;
    for (int i = 0; i < n; ++i) {
        int v = vert[i];
        k = std::max(k, deg[v]);
        out.order[i] = v;
        out.position[v] = i;
        for (int u : g.neighbors(v)) {
            // Stored degrees never fall below deg[v], so this test also
            // excludes already-removed neighbors.
            if (deg[u] > deg[v]) {
                int du = deg[u], pu = pos[u];
                int pw = bin[du], w = vert[pw];
                if (u != w) {
                    vert[pu] = w;
                    vert[pw] = u;
                    pos[u] = pw;
                    pos[w] = pu;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    out.k = k;
    return out;
}

// Isomorphic copy whose index order is the given ordering; labels map back
// to the original graph's labels.
inline Graph relabel(const Graph& g, const DegeneracyOrdering& ord) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.edge_count()));
    for (int v = 0; v < n; ++v)
        for (int w : g.larger_neighbors(v))
            edges.emplace_back(ord.position[v] + 1, ord.position[w] + 1);
    std::vector<int> labels(n);
    for (int p = 0; p < n; ++p) labels[p] = g.label(ord.order[p]);
    return Graph::from_edges(n, edges).with_labels(std::move(labels));
}

} // namespace domset
