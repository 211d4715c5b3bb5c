#pragma once

// Constant-amortized engine for graphs of large girth.
//
// Instead of global candidate maintenance it keeps the local structure: the
// induced subgraph on vertices dominated only by candidates (plus the
// candidates themselves), with per-vertex flags f marking vertices that have
// a dominator outside the candidate prefix. Lost candidates are recognized
// purely from local degrees and flags:
//   del1: live X-neighbor u of v with f(u) false and v its only live
//         X-neighbor,
//   del2: live non-X neighbor u of v with exactly two live X-neighbors
//         {w, v} witnesses w, and v itself witnesses its unique live
//         X-neighbor when f(v) is false.
// Vertex deletions unlink the vertex from all live neighbors' lists and are
// journaled for bit-exact restore. The girth >= 9 precondition buys the
// amortized bound, not correctness; force runs on any graph.

#include "domset/candidate_list.hpp"
#include "domset/engine_basic.hpp" // RollbackMismatch
#include "domset/girth.hpp"
#include "domset/graph.hpp"
#include "domset/visitor.hpp"
#include "domset/work.hpp"

#include <cassert>
#include <functional>

namespace domset {

class GirthTooSmall : public std::runtime_error {
public:
    GirthTooSmall(int g, int needed)
        : std::runtime_error("girth " + std::to_string(g) + " is below the required " +
                             std::to_string(needed) + "; pass force to run anyway") {}
};

class GirthEngine {
public:
    explicit GirthEngine(const Graph& g) : g_(g) {}

    uint64_t max_solutions = 0;
    bool validate_rollback = false;
    std::function<void(const GirthEngine&)> on_emit;

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
                // Undo the X-membership flip of v, then the descent prep.
                bump_live_xdeg(f.v, +1);
                state_.restore(f.v);
                vis.on_restore(g_.label(f.v));
                local_rollback(f.iter_local_mark);
                state_.cand.rollback(f.iter_cand_mark);
                sibling_bookkeeping(f.v);
                f.v = state_.cand.pred(f.v);
            } else if (f.v == -2) {
                f.v = state_.cand.max();
            }
            if (f.v == -1) {
                if (validate_rollback && f.pendants > f.cand_size_at_entry)
                    throw std::logic_error("pendant budget exceeded");
                local_rollback(f.entry_local_mark);
                state_.cand.rollback(f.entry_cand_mark);
                stack.pop_back();
                continue;
            }

            int v = f.v;
            f.iter_cand_mark = state_.cand.mark();
            f.iter_local_mark = journal_.size();
            cand_g(f);
            state_.remove(v);
            bump_live_xdeg(v, -1);
            vis.on_remove(g_.label(v));
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
    bool alive(int v) const { return alive_[v] != 0; }
    bool flag(int v) const { return f_[v] != 0; }
    int live_degree(int v) const { return deg_[v]; }
    int live_x_degree(int v) const { return xdeg_[v]; }
    std::vector<int> live_neighbors(int v) const {
        std::vector<int> out;
        for (long s = head_[v]; s != -1; s = lnext_[s]) out.push_back(g_.slot_target(s));
        return out;
    }

private:
    struct Frame {
        int v = -2;
        bool awaiting = false;
        size_t entry_cand_mark = 0, entry_local_mark = 0;
        size_t iter_cand_mark = 0, iter_local_mark = 0;
        uint64_t cksum = 0;
        int cand_size_at_entry = 0;
        int pendants = 0;
        std::vector<int> del;
    };

    enum : long { kFlagSet = -1 };

    void init() {
        const int n = g_.vertex_count();
        work_ = WorkCounter{};
        count_ = SolutionCounter{};
        stopped_ = false;

        std::vector<int> root_cand;
        for (int v = 0; v < n; ++v)
            if (g_.degree(v) >= 1) root_cand.push_back(v);
        state_.init_full(n, root_cand, work_);

        // Isolated vertices dominate themselves from outside every candidate
        // set, so they are never live.
        alive_.assign(n, 0);
        f_.assign(n, 0);
        deg_.assign(n, 0);
        xdeg_.assign(n, 0);
        head_.assign(n, -1);
        lnext_.assign(g_.slot_count(), -1);
        lprev_.assign(g_.slot_count(), -1);
        for (int v = 0; v < n; ++v) {
            if (g_.degree(v) == 0) continue;
            alive_[v] = 1;
            deg_[v] = g_.degree(v);
            xdeg_[v] = g_.degree(v);
            long prev = -1;
            for (long s = g_.slot_begin(v); s < g_.slot_end(v); ++s) {
                if (prev == -1)
                    head_[v] = s;
                else
                    lnext_[prev] = s;
                lprev_[s] = prev;
                prev = s;
            }
            if (prev != -1) lnext_[prev] = -1;
        }
        journal_.clear();
        scratch_.assign(n, 0);
    }

    void emit_bookkeeping() {
        count_.increment();
        if (on_emit) on_emit(*this);
        if (max_solutions != 0 && count_.value >= max_solutions) stopped_ = true;
    }

    void enter_node(Frame& f) {
        f.entry_cand_mark = state_.cand.mark();
        f.entry_local_mark = journal_.size();
        f.cand_size_at_entry = state_.cand.size();
    }

    // --- local structure --------------------------------------------------

    void set_flag(int u) {
        if (f_[u]) return;
        f_[u] = 1;
        journal_.push_back(kFlagSet);
        journal_.push_back(u);
        work_.tick(2);
    }

    // Remove w from every live neighbor's list. w's own list is left frozen;
    // restoring relinks the mates it names, which is exact under LIFO undo.
    void delete_vertex(int w) {
        assert(alive_[w]);
        bool wx = state_.in_x[w] != 0;
        for (long s = head_[w]; s != -1; s = lnext_[s]) {
            int z = g_.slot_target(s);
            long m = g_.mate(s);
            if (lprev_[m] == -1)
                head_[z] = lnext_[m];
            else
                lnext_[lprev_[m]] = lnext_[m];
            if (lnext_[m] != -1) lprev_[lnext_[m]] = lprev_[m];
            --deg_[z];
            if (wx) --xdeg_[z];
            work_.tick(2);
        }
        alive_[w] = 0;
        journal_.push_back(wx ? (static_cast<long>(w) << 1 | 1) : (static_cast<long>(w) << 1));
        work_.tick(1);
    }

    void undelete_vertex(int w, bool wx) {
        for (long s = head_[w]; s != -1; s = lnext_[s]) {
            int z = g_.slot_target(s);
            long m = g_.mate(s);
            if (lprev_[m] == -1)
                head_[z] = m;
            else
                lnext_[lprev_[m]] = m;
            if (lnext_[m] != -1) lprev_[lnext_[m]] = m;
            ++deg_[z];
            if (wx) ++xdeg_[z];
            work_.tick(2);
        }
        alive_[w] = 1;
    }

    // Records are either [kFlagSet, u] or a single deletion code, so the
    // entry below a record's last word is kFlagSet exactly for flag records;
    // marks never split a record.
    void local_rollback(size_t mark) {
        while (journal_.size() > mark) {
            long e = journal_.back();
            journal_.pop_back();
            if (!journal_.empty() && journal_.back() == kFlagSet) {
                journal_.pop_back();
                f_[e] = 0;
                work_.tick(1);
            } else {
                undelete_vertex(static_cast<int>(e >> 1), (e & 1) != 0);
            }
        }
    }

    // xdeg bookkeeping for v's own X-membership flip; symmetric around the
    // child call, so it is not journaled. If v left the local structure its
    // deletion already settled the counts.
    void bump_live_xdeg(int v, int delta) {
        if (!alive_[v]) return;
        for (long s = head_[v]; s != -1; s = lnext_[s]) {
            xdeg_[g_.slot_target(s)] += delta;
            work_.tick(1);
        }
    }

    // --- child computation --------------------------------------------------

    void cand_g(Frame& f) {
        const int v = f.v;
        auto& del = f.del;
        del.clear();
        assert(alive_[v]);
        auto push = [&](int u) {
            if (!scratch_[u]) {
                scratch_[u] = 1;
                del.push_back(u);
            }
        };

        for (long s = head_[v]; s != -1; s = lnext_[s]) {
            int u = g_.slot_target(s);
            work_.tick(1);
            if (state_.in_x[u]) {
                if (!f_[u] && xdeg_[u] == 1) push(u); // del1
            } else if (xdeg_[u] == 2) {
                // u witnesses the other live X-neighbor besides v.
                for (long t = head_[u]; t != -1; t = lnext_[t]) {
                    int w = g_.slot_target(t);
                    work_.tick(1);
                    if (w != v && state_.in_x[w]) {
                        push(w); // del2
                        break;
                    }
                }
            }
        }
        if (!f_[v] && xdeg_[v] == 1) {
            // v itself as witness: its unique live X-neighbor.
            for (long s = head_[v]; s != -1; s = lnext_[s]) {
                int u = g_.slot_target(s);
                work_.tick(1);
                if (state_.in_x[u]) {
                    push(u); // del2, witness v
                    break;
                }
            }
        }

        if (validate_rollback) {
            for (int u : del)
                if (deg_[u] == 1) ++f.pendants;
            if (deg_[v] == 1) ++f.pendants;
        }

        state_.cand.unlink(v);
        for (int u : del) state_.cand.unlink(u);
        for (int u : del) scratch_[u] = 0;

        // Flags first over the pre-deletion neighborhoods, then deletions.
        for (int d : del) {
            set_flag(d);
            for (long s = head_[d]; s != -1; s = lnext_[s]) {
                work_.tick(1);
                set_flag(g_.slot_target(s));
            }
        }
        for (int d : del) {
            long s = head_[d];
            while (s != -1) {
                long next = lnext_[s]; // before the target's deletion unlinks s
                int z = g_.slot_target(s);
                work_.tick(1);
                if (alive_[z] && !state_.cand.contains(z)) delete_vertex(z);
                s = next;
            }
            if (alive_[d]) delete_vertex(d);
        }
        if (alive_[v] && f_[v]) delete_vertex(v);
    }

    // After v's subtree: v stays in X as a non-candidate for every later
    // sibling, so flagged candidates keep their new dominator and all other
    // live neighbors of v leave the local structure, as does v.
    void sibling_bookkeeping(int v) {
        for (long s = head_[v]; s != -1;) {
            long next = lnext_[s];
            int u = g_.slot_target(s);
            work_.tick(1);
            if (state_.cand.contains(u))
                set_flag(u);
            else
                delete_vertex(u);
            s = next;
        }
        delete_vertex(v);
        state_.cand.unlink(v);
    }

    uint64_t checksum() const {
        uint64_t h = state_.cand.checksum();
        auto mix = [&](uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        };
        for (uint8_t b : state_.in_x) mix(b);
        for (uint8_t b : alive_) mix(b);
        for (uint8_t b : f_) mix(b);
        for (int d : deg_) mix(static_cast<uint64_t>(d));
        for (int d : xdeg_) mix(static_cast<uint64_t>(d));
        for (int v = 0; v < g_.vertex_count(); ++v)
            for (long s = head_[v]; s != -1; s = lnext_[s]) mix(static_cast<uint64_t>(s) + 7);
        return h;
    }

    const Graph& g_;
    SolutionState state_;
    std::vector<uint8_t> alive_, f_, scratch_;
    std::vector<int> deg_, xdeg_;
    std::vector<long> head_, lnext_, lprev_, journal_;
    WorkCounter work_;
    SolutionCounter count_;
    bool stopped_ = false;
};

inline constexpr int kGirthRequirement = 9;

// Refuses graphs of girth below nine unless forced: the amortized bound
// needs the girth, correctness does not.
template <SolutionVisitor Vis>
inline EnumerationStats enumerate_girth(const Graph& g, Vis&& vis, bool force = false,
                                        uint64_t max_solutions = 0) {
    if (!force) {
        GirthInfo gi = girth(g);
        if (!gi.infinite() && *gi.girth < kGirthRequirement)
            throw GirthTooSmall(*gi.girth, kGirthRequirement);
    }
    GirthEngine e(g);
    e.max_solutions = max_solutions;
    return e.run(vis);
}

} // namespace domset
