#pragma once

// Baseline reverse-search engine. Children of X are the sets X \ {v} for
// v in cand(X), generated in decreasing order of v so the output stream is
// identical across engines. Child candidate sets are obtained by filtering
// the parent's candidates against closed-neighborhood cover counts.

#include "domset/candidate_list.hpp"
#include "domset/graph.hpp"
#include "domset/visitor.hpp"
#include "domset/work.hpp"

#include <functional>

namespace domset {

class RollbackMismatch : public std::logic_error {
public:
    RollbackMismatch() : std::logic_error("state checksum differs after subtree return") {}
};

class BasicEngine {
public:
    explicit BasicEngine(const Graph& g) : g_(g) {}

    uint64_t max_solutions = 0;    // 0 = unlimited
    bool validate_rollback = false;
    std::function<void(const BasicEngine&)> on_emit; // test hook, fires per solution

    template <SolutionVisitor Vis>
    EnumerationStats run(Vis&& vis) {
        const int n = g_.vertex_count();
        work_ = WorkCounter{};
        count_ = SolutionCounter{};
        stopped_ = false;

        domcnt_.assign(n, 0);
        std::vector<int> root_cand;
        for (int v = 0; v < n; ++v) {
            domcnt_[v] = g_.degree(v) + 1;
            if (g_.degree(v) >= 1) root_cand.push_back(v);
        }
        state_.init_full(n, root_cand, work_);

        std::vector<int> all = g_.labels();
        std::sort(all.begin(), all.end());
        vis.on_initial(all);
        emit_bookkeeping();

        std::vector<Frame> stack;
        if (!stopped_) stack.push_back(Frame{-2, state_.cand.mark(), 0, 0, false});

        while (!stack.empty() && !stopped_) {
            Frame& f = stack.back();
            if (f.awaiting) {
                f.awaiting = false;
                if (validate_rollback && checksum() != f.cksum) throw RollbackMismatch();
                state_.cand.rollback(f.iter_mark);
                int v = f.v;
                state_.restore(v);
                bump_cover(v, +1);
                vis.on_restore(g_.label(v));
                f.v = state_.cand.pred(v);
            } else if (f.v == -2) {
                f.v = state_.cand.max();
            }
            if (f.v == -1) {
                state_.cand.rollback(f.entry_mark);
                stack.pop_back();
                continue;
            }

            // Descend into X \ {v}.
            int v = f.v;
            state_.cand.unlink(v);
            state_.remove(v);
            bump_cover(v, -1);
            f.iter_mark = state_.cand.mark();
            trim_candidates();
            vis.on_remove(g_.label(v));
            emit_bookkeeping();
            if (stopped_) break;
            if (validate_rollback) f.cksum = checksum();
            f.awaiting = true;
            stack.push_back(Frame{-2, state_.cand.mark(), 0, 0, false});
        }

        EnumerationStats st;
        st.solutions = count_.value;
        st.touches = work_.touches;
        st.saturated = count_.saturated;
        st.truncated = stopped_ && max_solutions != 0;
        return st;
    }

    const Graph& graph() const { return g_; }
    const SolutionState& state() const { return state_; }

private:
    struct Frame {
        int v;             // -2 before the first child, else current candidate
        size_t entry_mark; // candidate-list journal mark at node entry
        size_t iter_mark;  // mark before the current child's trim
        uint64_t cksum;
        bool awaiting;
    };

    void emit_bookkeeping() {
        count_.increment();
        if (on_emit) on_emit(*this);
        if (max_solutions != 0 && count_.value >= max_solutions) stopped_ = true;
    }

    void bump_cover(int v, int delta) {
        domcnt_[v] += delta;
        work_.tick();
        for (int w : g_.neighbors(v)) {
            domcnt_[w] += delta;
            work_.tick();
        }
    }

    // Keep u iff X' \ {u} still dominates, i.e. nothing in N[u] is covered
    // exactly once. All remaining members are below the removed vertex.
    void trim_candidates() {
        int u = state_.cand.first();
        while (u != -1) {
            int next = state_.cand.succ(u);
            bool keep = domcnt_[u] >= 2;
            work_.tick();
            if (keep) {
                for (int w : g_.neighbors(u)) {
                    work_.tick();
                    if (domcnt_[w] < 2) {
                        keep = false;
                        break;
                    }
                }
            }
            if (!keep) state_.cand.unlink(u);
            u = next;
        }
    }

    uint64_t checksum() const {
        uint64_t h = state_.cand.checksum();
        auto mix = [&](uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        };
        for (uint8_t b : state_.in_x) mix(b);
        for (int c : domcnt_) mix(static_cast<uint64_t>(c));
        return h;
    }

    const Graph& g_;
    SolutionState state_;
    std::vector<int> domcnt_;
    WorkCounter work_;
    SolutionCounter count_;
    bool stopped_ = false;
};

template <SolutionVisitor Vis>
inline EnumerationStats enumerate_basic(const Graph& g, Vis&& vis, uint64_t max_solutions = 0) {
    BasicEngine e(g);
    e.max_solutions = max_solutions;
    return e.run(vis);
}

} // namespace domset
