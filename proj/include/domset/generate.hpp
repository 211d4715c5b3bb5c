#pragma once

// Deterministic graph generators for fixtures and benchmark corpora.

#include "domset/degeneracy.hpp"
#include "domset/girth.hpp"
#include "domset/graph.hpp"

#include <random>

namespace domset {

// Bounded draws on top of mt19937_64; avoids std::uniform_int_distribution
// so the output is identical everywhere for a fixed seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t below(uint64_t n) { // uniform in [0, n)
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    bool chance(double p) { return static_cast<double>(below(1u << 30)) < p * (1u << 30); }

private:
    std::mt19937_64 eng_;
};

inline Graph make_path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(n, 1);
    return Graph::from_edges(n, e);
}

inline Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

// Vertex 1 is the center.
inline Graph make_star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
    return Graph::from_edges(n, e);
}

// Every vertex attaches to min(k, i-1) distinct uniformly chosen earlier
// vertices, so the reverse index order witnesses degeneracy <= k.
inline Graph generate_kdeg(int n, int k, uint64_t seed) {
    if (n < 1 || k < 1) throw std::invalid_argument("kdeg needs n >= 1 and k >= 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> e;
    std::vector<int> picked;
    for (int i = 2; i <= n; ++i) {
        int t = std::min(k, i - 1);
        picked.clear();
        while (static_cast<int>(picked.size()) < t) {
            int u = static_cast<int>(rng.below(i - 1)) + 1;
            if (std::find(picked.begin(), picked.end(), u) == picked.end()) picked.push_back(u);
        }
        for (int u : picked) e.emplace_back(u, i);
    }
    Graph g = Graph::from_edges(n, e);
    if (degeneracy_ordering(g).k > k) throw std::logic_error("kdeg generator degeneracy bound");
    return g;
}

// Uniform random labeled tree by Pruefer decoding.
inline std::vector<std::pair<int, int>> random_tree_edges(int n, Rng& rng) {
    std::vector<std::pair<int, int>> e;
    if (n <= 1) return e;
    if (n == 2) return {{1, 2}};
    std::vector<int> seq(n - 2), deg(n + 1, 1);
    for (int& s : seq) {
        s = static_cast<int>(rng.below(n)) + 1;
        ++deg[s];
    }
    int ptr = 1;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        e.emplace_back(leaf, s);
        if (--deg[s] == 1 && s < ptr)
            leaf = s;
        else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    e.emplace_back(leaf, n);
    return e;
}

// Uniform random tree plus random chords, each accepted only when its
// endpoints are at distance >= g-1 in the current graph, which keeps every
// created cycle at length >= g. Density is whatever the attempt budget
// yields; infeasible targets just produce fewer chords.
inline Graph generate_girth(int n, int g, uint64_t seed) {
    if (n < 1 || g < 3) throw std::invalid_argument("girth generator needs n >= 1 and g >= 3");
    Rng rng(seed);
    auto edges = random_tree_edges(n, rng);
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto distance_at_least = [&](int from, int to, int bound) {
        // BFS truncated at depth bound-1.
        std::vector<int> dist(n + 1, -1);
        std::vector<int> queue{from};
        dist[from] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (dist[u] + 1 >= bound) break;
            for (int w : adj[u]) {
                if (dist[w] >= 0) continue;
                if (w == to) return false;
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
        return true;
    };
    long attempts = 3l * n;
    for (long a = 0; a < attempts && n >= 2; ++a) {
        int u = static_cast<int>(rng.below(n)) + 1;
        int v = static_cast<int>(rng.below(n)) + 1;
        if (u == v) continue;
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
        if (!distance_at_least(u, v, g - 1)) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        edges.emplace_back(u, v);
    }
    Graph out = Graph::from_edges(n, edges);
    GirthInfo gi = girth(out);
    if (!gi.infinite() && *gi.girth < g) throw std::logic_error("girth generator bound");
    return out;
}

// G(n, p) with a fixed seed; test corpora helper.
inline Graph random_gnp(int n, double p, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.chance(p)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

} // namespace domset
