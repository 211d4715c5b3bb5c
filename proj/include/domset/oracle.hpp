#pragma once

// Ground-truth brute force and structural validators. Everything here is
// definitional and independent of the enumeration engines it checks.

#include "domset/domination.hpp"
#include "domset/enumerate.hpp"
#include "domset/graph.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace domset {

class GraphTooLarge : public std::runtime_error {
public:
    explicit GraphTooLarge(int n)
        : std::runtime_error("graph too large for exhaustive scan: n = " + std::to_string(n)) {}
};

// Order-independent summary of a solution set. Counts and hashes always;
// the canonical sorted list is kept for small instances so hash equality
// can be confirmed exactly.
struct SolutionSetDigest {
    uint64_t count = 0;
    uint64_t hash = 0;
    bool materialized = false;
    std::vector<std::vector<int>> solutions; // sorted list of sorted label sets

    static uint64_t hash_solution(const std::vector<int>& sol) {
        uint64_t h = 1469598103934665603ull;
        for (int v : sol) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ull;
        }
        h ^= sol.size();
        h *= 1099511628211ull;
        return h;
    }

    void add(const std::vector<int>& sol, bool keep) {
        ++count;
        hash += hash_solution(sol); // commutative combine
        if (keep) solutions.push_back(sol);
    }

    void finish() {
        std::sort(solutions.begin(), solutions.end());
        materialized = !solutions.empty() || count == 0;
    }

    static SolutionSetDigest from_solutions(std::vector<std::vector<int>> sols, bool keep = true) {
        SolutionSetDigest d;
        for (auto& s : sols) {
            std::vector<int> sorted = s;
            std::sort(sorted.begin(), sorted.end());
            d.add(sorted, keep);
        }
        d.finish();
        return d;
    }

    friend bool operator==(const SolutionSetDigest& a, const SolutionSetDigest& b) {
        if (a.count != b.count || a.hash != b.hash) return false;
        if (a.materialized && b.materialized && a.solutions != b.solutions) return false;
        return true;
    }
};

inline constexpr int kBruteForceCap = 25;
inline constexpr int kMaterializeCap = 15;

// All X subseteq V with N[X] = V, by exhaustive subset scan. Solutions carry
// the graph's original labels.
inline SolutionSetDigest brute_force(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kBruteForceCap) throw GraphTooLarge(n);

    std::vector<uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        uint32_t m = 1u << v;
        for (int w : g.neighbors(v)) m |= 1u << w;
        closed[v] = m;
    }
    const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    const bool keep = n <= kMaterializeCap;

    SolutionSetDigest d;
    std::vector<int> sol;
    for (uint64_t mask = 0; mask <= (n == 0 ? 0 : (1ull << n) - 1); ++mask) {
        uint32_t cover = 0;
        uint32_t rest = static_cast<uint32_t>(mask);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cover |= closed[v];
        }
        if (cover != full) continue;
        sol.clear();
        rest = static_cast<uint32_t>(mask);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            sol.push_back(g.label(v));
        }
        std::sort(sol.begin(), sol.end());
        d.add(sol, keep);
    }
    d.finish();
    return d;
}

struct FamilyTreeReport {
    bool ok = true;
    uint64_t nodes = 0;
    uint64_t edges = 0;
    std::string error;

    static FamilyTreeReport fail(std::string msg) {
        FamilyTreeReport r;
        r.ok = false;
        r.error = std::move(msg);
        return r;
    }
};

namespace detail {

inline std::string mask_to_string(uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int v = 0; v < 32; ++v)
        if (mask >> v & 1) {
            if (!first) s += ',';
            s += std::to_string(v + 1);
            first = false;
        }
    return s + "}";
}

} // namespace detail

// Structural checks over an emitted solution set: every set dominates, the
// parent chain reaches V within n steps, parent edges form a tree with
// count - 1 edges, and every child arises by deleting a member of its
// parent's candidate set. Solutions are 1-based indices of g, which must be
// the graph the engine actually ran on.
inline FamilyTreeReport validate_family_tree(const Graph& g,
                                             const std::vector<std::vector<int>>& solutions) {
    const int n = g.vertex_count();
    if (n > kMaterializeCap) throw GraphTooLarge(n);

    std::vector<uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        uint32_t m = 1u << v;
        for (int w : g.neighbors(v)) m |= 1u << w;
        closed[v] = m;
    }
    const uint32_t full = n == 0 ? 0 : (1u << n) - 1;
    auto dominating = [&](uint32_t mask) {
        uint32_t cover = 0;
        uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cover |= closed[v];
        }
        return cover == full;
    };

    std::unordered_set<uint32_t> seen;
    std::vector<uint32_t> masks;
    for (const auto& sol : solutions) {
        uint32_t mask = 0;
        for (int label : sol) mask |= 1u << (label - 1);
        if (!seen.insert(mask).second)
            return FamilyTreeReport::fail("duplicate solution " + detail::mask_to_string(mask));
        masks.push_back(mask);
    }

    FamilyTreeReport rep;
    rep.nodes = masks.size();
    for (uint32_t mask : masks) {
        if (!dominating(mask))
            return FamilyTreeReport::fail("emitted set is not dominating: " +
                                          detail::mask_to_string(mask));
        // Parent chain terminates at V within n applications.
        uint32_t cur = mask;
        int steps = 0;
        while (cur != full) {
            if (++steps > n)
                return FamilyTreeReport::fail("parent chain exceeds n steps from " +
                                              detail::mask_to_string(mask));
            cur |= 1u << std::countr_zero(~cur); // add the parent vertex
        }
        if (mask != full) {
            int pv = std::countr_zero(~mask); // smallest vertex outside X
            uint32_t parent_mask = mask | (1u << pv);
            if (!seen.count(parent_mask))
                return FamilyTreeReport::fail("parent of " + detail::mask_to_string(mask) +
                                              " was not emitted");
            std::vector<int> parent_sol;
            for (int v = 0; v < n; ++v)
                if (parent_mask >> v & 1) parent_sol.push_back(v + 1);
            auto cand = candidate_set_naive(g, parent_sol);
            if (!std::binary_search(cand.begin(), cand.end(), pv + 1))
                return FamilyTreeReport::fail(
                    "deleted vertex " + std::to_string(pv + 1) +
                    " is not in the parent's candidate set for " + detail::mask_to_string(mask));
            ++rep.edges;
        }
    }
    if (rep.nodes > 0 && !seen.count(full))
        return FamilyTreeReport::fail("root V was not emitted");
    if (rep.nodes > 0 && rep.edges != rep.nodes - 1)
        return FamilyTreeReport::fail("parent relation has " + std::to_string(rep.edges) +
                                      " edges for " + std::to_string(rep.nodes) + " nodes");
    return rep;
}

struct CrossCheckResult {
    bool ok = true;
    std::string message;
};

// All three engines against the exhaustive scan. Digests are over original
// labels, so the degenerate engine's internal reordering is invisible here.
inline CrossCheckResult cross_check(const Graph& g) {
    if (g.vertex_count() > kMaterializeCap) throw GraphTooLarge(g.vertex_count());
    SolutionSetDigest expected = brute_force(g);

    auto describe_diff = [&](const SolutionSetDigest& got, const char* name) {
        std::string msg = std::string(name) + " digest mismatch (" + std::to_string(got.count) +
                          " vs " + std::to_string(expected.count) + " solutions)";
        std::vector<std::vector<int>> missing, extra;
        std::set_difference(expected.solutions.begin(), expected.solutions.end(),
                            got.solutions.begin(), got.solutions.end(),
                            std::back_inserter(missing));
        std::set_difference(got.solutions.begin(), got.solutions.end(),
                            expected.solutions.begin(), expected.solutions.end(),
                            std::back_inserter(extra));
        auto list = [](const std::vector<std::vector<int>>& sols) {
            std::string s;
            for (size_t i = 0; i < sols.size() && i < 4; ++i) {
                s += " {";
                for (size_t j = 0; j < sols[i].size(); ++j)
                    s += (j ? " " : "") + std::to_string(sols[i][j]);
                s += "}";
            }
            if (sols.size() > 4) s += " ...";
            return s;
        };
        if (!missing.empty()) msg += "; missing:" + list(missing);
        if (!extra.empty()) msg += "; extra:" + list(extra);
        return msg;
    };

    for (Algo algo : {Algo::Basic, Algo::Degenerate, Algo::Girth}) {
        CollectingVisitor vis;
        EnumerateConfig cfg;
        cfg.algo = algo;
        cfg.force = true;
        enumerate(g, cfg, vis);
        SolutionSetDigest got = SolutionSetDigest::from_solutions(std::move(vis.solutions));
        if (!(got == expected)) return {false, describe_diff(got, algo_name(algo))};
    }
    return {};
}

} // namespace domset
