#pragma once

// O(k)-per-solution engine for graphs given in degeneracy order.
//
// Children of X are generated largest-candidate-first. Removing v splits the
// lost candidates into
//   del1 = { u < v in cand(X) : N[u] cap X = {u,v} }
//   del2 = { u < v in cand(X) : some w outside X \ {v} has N[w] cap X = {u,v} }
//   del3 = cand(X) above v, dropped implicitly by the iteration order.
// Per-vertex dominated lists D_u (u's neighbors in X \ cand(X), restricted to
// smaller neighbors when u is in X) make the del1/del2 tests O(1) per probe:
// a node-entry sweep over the candidates snapshots |D_u|, counts candidate-
// candidate adjacencies and larger X-neighbors, and collects the witness
// pairs for del2. Between consecutive children the lists are updated by the
// symmetric difference of the sibling candidate sets, never rebuilt. All
// mutations are journaled and undone on backtrack.

#include "domset/candidate_list.hpp"
#include "domset/degeneracy.hpp"
#include "domset/domination.hpp"
#include "domset/engine_basic.hpp" // RollbackMismatch
#include "domset/graph.hpp"
#include "domset/visitor.hpp"
#include "domset/work.hpp"

#include <cassert>
#include <functional>

namespace domset {

struct DeltaSets {
    std::vector<int> del1, del2, del3; // 1-based, ascending
};

// Definitional del decomposition for X and v (1-based indices of g). Test
// oracle; the engine never calls this.
inline DeltaSets compute_del_sets(const Graph& g, const std::vector<int>& x, int v_label) {
    const int n = g.vertex_count();
    std::vector<uint8_t> in_x(n, 0);
    for (int label : x) in_x[label - 1] = 1;
    auto cand = candidate_set_naive(g, x);
    std::vector<uint8_t> in_cand(n, 0);
    for (int label : cand) in_cand[label - 1] = 1;
    const int v = v_label - 1;

    auto closed_x = [&](int w) {
        std::vector<int> out;
        if (in_x[w]) out.push_back(w);
        for (int z : g.neighbors(w))
            if (in_x[z]) out.push_back(z);
        return out;
    };

    DeltaSets d;
    for (int label : cand) {
        int u = label - 1;
        if (u >= v) {
            d.del3.push_back(label);
            continue;
        }
        auto nu = closed_x(u);
        std::sort(nu.begin(), nu.end());
        if (nu == std::vector<int>{u, v}) d.del1.push_back(label);
    }
    for (int w = 0; w < n; ++w) {
        if (in_x[w] && w != v) continue; // witness ranges over (V \ X) + {v}
        auto nw = closed_x(w);
        if (nw.size() != 2) continue;
        if (nw[0] != v && nw[1] != v) continue;
        int u = nw[0] == v ? nw[1] : nw[0];
        if (u != v && u < v && in_cand[u]) d.del2.push_back(u + 1);
    }
    std::sort(d.del2.begin(), d.del2.end());
    d.del2.erase(std::unique(d.del2.begin(), d.del2.end()), d.del2.end());
    return d;
}

class DegenerateEngine {
public:
    explicit DegenerateEngine(const Graph& g) : g_(g) {}

    uint64_t max_solutions = 0;
    bool validate_rollback = false;
    std::function<void(const DegenerateEngine&)> on_emit;
    // Fires once per generated child with the removed vertex and the engine's
    // del1-union-del2 set, all as 1-based indices of the ordered graph.
    std::function<void(const DegenerateEngine&, int, const std::vector<int>&)> on_child;

    template <SolutionVisitor Vis>
    EnumerationStats run(Vis&& vis) {
        init();
        std::vector<int> all = g_.labels();
        std::sort(all.begin(), all.end());
        vis.on_initial(all);
        emit_bookkeeping();

        std::vector<Frame> stack;
        if (!stopped_) {
            stack.emplace_back();
            enter_node(stack.back());
        }

        while (!stack.empty() && !stopped_) {
            Frame& f = stack.back();
            if (f.awaiting) {
                f.awaiting = false;
                if (validate_rollback && checksum() != f.cksum) throw RollbackMismatch();
                state_.cand.rollback(f.iter_mark);
                state_.restore(f.v);
                vis.on_restore(g_.label(f.v));
                f.prev_delta.swap(f.cur_delta);
                f.cur_delta.clear();
                f.v_prev = f.v;
                f.v = state_.cand.pred(f.v);
            } else if (f.v == -2) {
                f.v = state_.cand.max();
            }
            if (f.v == -1) {
                exit_node(f);
                stack.pop_back();
                continue;
            }

            int v = f.v;
            state_.cand.unlink(v); // del3: everything >= v is already gone
            compute_child_candidates(f);
            f.iter_mark = state_.cand.mark();
            for (int u : f.cur_delta) state_.cand.unlink(u);
            transform_dominated_lists(f);
            state_.remove(v);
            vis.on_remove(g_.label(v));
            if (on_child) {
                std::vector<int> del;
                for (int u : f.cur_delta) del.push_back(u + 1);
                std::sort(del.begin(), del.end());
                on_child(*this, v + 1, del);
            }
            emit_bookkeeping();
            if (stopped_) break;
            if (validate_rollback) f.cksum = checksum();
            f.awaiting = true;
            stack.emplace_back();
            enter_node(stack.back());
        }

        EnumerationStats st;
        st.solutions = count_.value;
        st.touches = work_.touches;
        st.saturated = count_.saturated;
        st.truncated = stopped_ && max_solutions != 0;
        return st;
    }

    // Inspection for tests and definitional oracles.
    const Graph& graph() const { return g_; }
    const SolutionState& state() const { return state_; }
    int dominated_size(int v) const { return dsize_[v]; }
    std::vector<int> dominated_list(int v) const {
        std::vector<int> out;
        for (long s = g_.slot_begin(v); s < g_.slot_end(v); ++s)
            if (dbit_[s]) out.push_back(g_.slot_target(s) + 1);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    struct Saved {
        int v;
        int snap_d, smaller_cand, larger_x, adj_head, pair_head;
    };
    struct Frame {
        int v = -2;
        int v_prev = -1;
        bool awaiting = false;
        size_t entry_cand_mark = 0, entry_d_mark = 0, iter_mark = 0;
        uint64_t cksum = 0;
        std::vector<int> prev_delta, cur_delta;
        std::vector<Saved> saved;
        std::vector<std::pair<int, int>> adj_pool;  // (vertex, next index)
        std::vector<std::pair<int, int>> pair_pool; // (vertex, next index)
    };

    void init() {
        const int n = g_.vertex_count();
        work_ = WorkCounter{};
        count_ = SolutionCounter{};
        stopped_ = false;
        std::vector<int> root_cand;
        for (int v = 0; v < n; ++v)
            if (g_.degree(v) >= 1) root_cand.push_back(v);
        state_.init_full(n, root_cand, work_);
        dbit_.assign(g_.slot_count(), 0);
        dsize_.assign(n, 0);
        djournal_.clear();
        snap_d_.assign(n, 0);
        smaller_cand_.assign(n, 0);
        larger_x_.assign(n, 0);
        adj_head_.assign(n, -1);
        pair_head_.assign(n, -1);
        wit_count_.assign(n, 0);
        wit_first_.assign(n, -1);
        wit_second_.assign(n, -1);
        scratch_.assign(n, 0);
    }

    void emit_bookkeeping() {
        count_.increment();
        if (on_emit) on_emit(*this);
        if (max_solutions != 0 && count_.value >= max_solutions) stopped_ = true;
    }

    // --- dominated lists -------------------------------------------------

    void dlist_add(long slot) {
        assert(!dbit_[slot]);
        dbit_[slot] = 1;
        ++dsize_[g_.slot_owner(slot)];
        djournal_.push_back(slot << 1 | 1);
        work_.tick(2);
    }
    void dlist_remove(long slot) {
        assert(dbit_[slot]);
        dbit_[slot] = 0;
        --dsize_[g_.slot_owner(slot)];
        djournal_.push_back(slot << 1);
        work_.tick(2);
    }
    void dlist_rollback(size_t mark) {
        while (djournal_.size() > mark) {
            long e = djournal_.back();
            djournal_.pop_back();
            long slot = e >> 1;
            if (e & 1) {
                dbit_[slot] = 0;
                --dsize_[g_.slot_owner(slot)];
            } else {
                dbit_[slot] = 1;
                ++dsize_[g_.slot_owner(slot)];
            }
            work_.tick(1);
        }
    }

    // --- node entry / exit ------------------------------------------------

    // Per-node sweep over cand(X): snapshot |D_u|, count candidate-candidate
    // adjacencies and larger X-neighbors, build the candidate adjacency
    // chains, and record del2 witness pairs (w outside X dominated by exactly
    // two candidates and nothing else).
    void enter_node(Frame& f) {
        f.entry_cand_mark = state_.cand.mark();
        f.entry_d_mark = djournal_.size();
        std::vector<int>& dirty = wit_dirty_;
        dirty.clear();
        for (int v = state_.cand.first(); v != -1; v = state_.cand.succ(v)) {
            f.saved.push_back(
                {v, snap_d_[v], smaller_cand_[v], larger_x_[v], adj_head_[v], pair_head_[v]});
            snap_d_[v] = dsize_[v];
            smaller_cand_[v] = 0;
            larger_x_[v] = 0;
            adj_head_[v] = -1;
            pair_head_[v] = -1;
            work_.tick(1);
        }
        for (int a = state_.cand.first(); a != -1; a = state_.cand.succ(a)) {
            for (long s = g_.slot_split(a); s < g_.slot_end(a); ++s) {
                int w = g_.slot_target(s);
                work_.tick(1);
                if (state_.in_x[w]) {
                    ++larger_x_[a];
                    if (state_.cand.contains(w)) {
                        ++smaller_cand_[w];
                        adj_push(f, a, w);
                        adj_push(f, w, a);
                    }
                } else {
                    if (wit_count_[w] == 0) {
                        dirty.push_back(w);
                        wit_first_[w] = a;
                    } else if (wit_count_[w] == 1) {
                        wit_second_[w] = a;
                    }
                    ++wit_count_[w];
                }
            }
        }
        for (int w : dirty) {
            if (wit_count_[w] == 2 && dsize_[w] == 0) {
                // N[w] cap X = {a, b}: removing b makes a deletable only
                // with b, so (b -> a) fires when b is the removed vertex.
                int a = wit_first_[w], b = wit_second_[w];
                pair_push(f, b, a);
            }
            wit_count_[w] = 0;
            wit_first_[w] = wit_second_[w] = -1;
            work_.tick(1);
        }
    }

    void exit_node(Frame& f) {
        dlist_rollback(f.entry_d_mark);
        state_.cand.rollback(f.entry_cand_mark);
        for (auto it = f.saved.rbegin(); it != f.saved.rend(); ++it) {
            snap_d_[it->v] = it->snap_d;
            smaller_cand_[it->v] = it->smaller_cand;
            larger_x_[it->v] = it->larger_x;
            adj_head_[it->v] = it->adj_head;
            pair_head_[it->v] = it->pair_head;
            work_.tick(1);
        }
    }

    void adj_push(Frame& f, int of, int nbr) {
        f.adj_pool.emplace_back(nbr, adj_head_[of]);
        adj_head_[of] = static_cast<int>(f.adj_pool.size()) - 1;
        work_.tick(1);
    }
    void pair_push(Frame& f, int of, int u) {
        f.pair_pool.emplace_back(u, pair_head_[of]);
        pair_head_[of] = static_cast<int>(f.pair_pool.size()) - 1;
        work_.tick(1);
    }

    // --- child candidate computation (del1 and del2) -----------------------

    void compute_child_candidates(Frame& f) {
        const int v = f.v;
        auto& del = f.cur_delta;
        del.clear();
        auto push = [&](int u) {
            if (!scratch_[u]) {
                scratch_[u] = 1;
                del.push_back(u);
            }
        };
        // del1: candidates below v dominated exactly by themselves and v.
        for (int idx = adj_head_[v]; idx != -1; idx = f.adj_pool[idx].second) {
            int u = f.adj_pool[idx].first;
            work_.tick(1);
            if (u < v && snap_d_[u] == 0 && smaller_cand_[u] == 0 && larger_x_[u] == 1) push(u);
        }
        // del2 via witnesses outside X.
        for (int idx = pair_head_[v]; idx != -1; idx = f.pair_pool[idx].second) {
            work_.tick(1);
            push(f.pair_pool[idx].first);
        }
        // del2 with v itself as witness: N(v) cap X = {u} for a single
        // candidate u below v.
        if (snap_d_[v] + smaller_cand_[v] + larger_x_[v] == 1 && smaller_cand_[v] == 1) {
            for (int idx = adj_head_[v]; idx != -1; idx = f.adj_pool[idx].second) {
                int u = f.adj_pool[idx].first;
                work_.tick(1);
                if (u < v) {
                    push(u);
                    break;
                }
            }
        }
        for (int u : del) scratch_[u] = 0;
    }

    // --- dominated-list transform between consecutive siblings -------------

    // Baseline is the previous child W = X \ {v_prev} (X itself for the first
    // child, with an empty previous delta). P and Q are the del1/del2 sets of
    // the previous and the current child.
    void transform_dominated_lists(Frame& f) {
        const int v = f.v;
        const auto& p = f.prev_delta;
        const auto& q = f.cur_delta;
        for (int u : p) scratch_[u] |= 1;
        for (int u : q) scratch_[u] |= 2;
        bool v_in_p = (scratch_[v] & 1) != 0;

        if (f.v_prev != -1) {
            // v_prev rejoined X as a permanent non-candidate: it enters its
            // larger neighbors' lists, and its own list sheds the larger-side
            // X entries it gained when it was removed.
            int vp = f.v_prev;
            for (long s = g_.slot_split(vp); s < g_.slot_end(vp); ++s) {
                work_.tick(1);
                dlist_add(g_.mate(s));
                if (state_.in_x[g_.slot_target(s)]) dlist_remove(s);
            }
        }
        for (int u : p) {
            if (u == v || (scratch_[u] & 2)) continue;
            toggle_all_larger(u, false); // candidate again: leaves the lists
        }
        for (int u : q) {
            if (scratch_[u] & 1) continue;
            toggle_all_larger(u, true); // newly lost: enters the lists
        }
        for (long s = g_.slot_split(v); s < g_.slot_end(v); ++s) {
            work_.tick(1);
            if (v_in_p) dlist_remove(g_.mate(s));
            if (state_.in_x[g_.slot_target(s)]) dlist_add(s); // D_v gains N(v)^{v<} cap X
        }
        for (int u : p) scratch_[u] = 0;
        for (int u : q) scratch_[u] = 0;
    }

    void toggle_all_larger(int u, bool add) {
        for (long s = g_.slot_split(u); s < g_.slot_end(u); ++s) {
            work_.tick(1);
            if (add)
                dlist_add(g_.mate(s));
            else
                dlist_remove(g_.mate(s));
        }
    }

    uint64_t checksum() const {
        uint64_t h = state_.cand.checksum();
        auto mix = [&](uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        };
        for (uint8_t b : state_.in_x) mix(b);
        for (uint8_t b : dbit_) mix(b);
        for (int c : dsize_) mix(static_cast<uint64_t>(c));
        return h;
    }

    const Graph& g_;
    SolutionState state_;
    std::vector<uint8_t> dbit_;
    std::vector<int> dsize_;
    std::vector<long> djournal_;
    std::vector<int> snap_d_, smaller_cand_, larger_x_, adj_head_, pair_head_;
    std::vector<int> wit_count_, wit_first_, wit_second_, wit_dirty_;
    std::vector<uint8_t> scratch_;
    WorkCounter work_;
    SolutionCounter count_;
    bool stopped_ = false;
};

// Relabels by a degeneracy ordering internally (unless told otherwise);
// emitted events carry the original labels either way.
template <SolutionVisitor Vis>
inline EnumerationStats enumerate_degenerate(const Graph& g, Vis&& vis,
                                             bool use_degeneracy_order = true,
                                             uint64_t max_solutions = 0) {
    if (use_degeneracy_order) {
        Graph ordered = relabel(g, degeneracy_ordering(g));
        DegenerateEngine e(ordered);
        e.max_solutions = max_solutions;
        return e.run(vis);
    }
    DegenerateEngine e(g);
    e.max_solutions = max_solutions;
    return e.run(vis);
}

} // namespace domset
