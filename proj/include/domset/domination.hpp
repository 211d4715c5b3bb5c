#pragma once

// Definitional operations on dominating sets. These are the reference
// semantics; the enumeration engines never call them on their hot paths.

#include "domset/graph.hpp"

#include <stdexcept>

namespace domset {

namespace detail {

// |N[w] cap X| for every w, given X as 1-based indices.
inline std::vector<int> closed_cover_counts(const Graph& g, const std::vector<int>& x) {
    std::vector<int> cnt(g.vertex_count(), 0);
    for (int label : x) {
        int v = label - 1;
        ++cnt[v];
        for (int w : g.neighbors(v)) ++cnt[w];
    }
    return cnt;
}

} // namespace detail

// True iff every vertex is in X or adjacent to a member of X. X is given as
// 1-based vertex indices of g.
inline bool is_dominating(const Graph& g, const std::vector<int>& x) {
    auto cnt = detail::closed_cover_counts(g, x);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (cnt[v] == 0) return false;
    return true;
}

// Minimum-index vertex outside X (1-based). The root X = V has none.
inline int parent_vertex(const Graph& g, const std::vector<int>& x) {
    std::vector<uint8_t> in(g.vertex_count(), 0);
    for (int label : x) in[label - 1] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in[v]) return v + 1;
    throw std::invalid_argument("parent_vertex: X = V has no parent vertex");
}

// X together with its parent vertex; dominating whenever X is.
inline std::vector<int> parent(const Graph& g, const std::vector<int>& x) {
    int pv = parent_vertex(g, x);
    std::vector<int> out = x;
    out.insert(std::lower_bound(out.begin(), out.end(), pv), pv);
    return out;
}

// cand(X) = { v in X : X \ {v} is dominating and the parent of X \ {v} is X }.
// The parent condition amounts to v < min(V \ X), vacuous for X = V.
// Reference implementation, computed from the definition.
inline std::vector<int> candidate_set_naive(const Graph& g, const std::vector<int>& x) {
    const int n = g.vertex_count();
    auto cnt = detail::closed_cover_counts(g, x);
    bool dominating = true;
    for (int v = 0; v < n; ++v)
        if (cnt[v] == 0) dominating = false;

    int pv = n; // min(V \ X), internal id; n means X = V
    {
        std::vector<uint8_t> in(n, 0);
        for (int label : x) in[label - 1] = 1;
        for (int v = 0; v < n; ++v)
            if (!in[v]) {
                pv = v;
                break;
            }
    }

    std::vector<int> out;
    if (!dominating) return out;
    for (int label : x) {
        int v = label - 1;
        if (v >= pv) continue;
        bool removable = cnt[v] >= 2;
        for (int w : g.neighbors(v))
            if (cnt[w] < 2) removable = false;
        if (removable) out.push_back(label);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace domset
