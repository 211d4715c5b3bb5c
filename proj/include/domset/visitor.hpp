#pragma once

// Solution-stream contract shared by all engines.
//
// A run emits one INITIAL event carrying the full vertex set, then REMOVE(v)
// / RESTORE(v) deltas as the family tree is walked depth-first. Every REMOVE
// announces the solution X \ {v} relative to the previous state, so the
// per-solution output cost stays O(1); materializing full sets is an opt-in
// adapter. Events carry original 1-based vertex labels.

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace domset {

enum class EventKind { Initial, Remove, Restore };

template <class V>
concept SolutionVisitor = requires(V v, const std::vector<int>& all, int label) {
    v.on_initial(all);
    v.on_remove(label);
    v.on_restore(label);
};

struct NullVisitor {
    void on_initial(const std::vector<int>&) {}
    void on_remove(int) {}
    void on_restore(int) {}
};

// Materializes every solution as a sorted label vector. Intended for tests
// and small graphs; costs O(|X|) per solution.
struct CollectingVisitor {
    std::vector<std::vector<int>> solutions;
    std::vector<int> current;

    void on_initial(const std::vector<int>& all) {
        current = all;
        solutions.push_back(current);
    }
    void on_remove(int label) {
        auto it = std::lower_bound(current.begin(), current.end(), label);
        current.erase(it);
        solutions.push_back(current);
    }
    void on_restore(int label) {
        auto it = std::lower_bound(current.begin(), current.end(), label);
        current.insert(it, label);
    }
};

// Writes the delta format: "I v1 v2 ... vn", "R v" (a solution), "U v".
class DeltaWriter {
public:
    explicit DeltaWriter(std::ostream& out) : out_(out) {}

    void on_initial(const std::vector<int>& all) {
        out_ << 'I';
        for (int v : all) out_ << ' ' << v;
        out_ << '\n';
    }
    void on_remove(int label) { out_ << "R " << label << '\n'; }
    void on_restore(int label) { out_ << "U " << label << '\n'; }

private:
    std::ostream& out_;
};

// Writes one solution per line, labels ascending. Membership is kept in a
// doubly-linked list over labels; REMOVE unlinks and RESTORE relinks in
// place, which is exact because restores arrive in reverse removal order.
class FullWriter {
public:
    explicit FullWriter(std::ostream& out) : out_(out) {}

    void on_initial(const std::vector<int>& all) {
        int n = all.empty() ? 0 : all.back();
        next_.assign(n + 2, 0);
        prev_.assign(n + 2, 0);
        int prev = 0; // head sentinel
        for (int v : all) {
            next_[prev] = v;
            prev_[v] = prev;
            prev = v;
        }
        next_[prev] = n + 1;
        prev_[n + 1] = prev;
        tail_ = n + 1;
        emit();
    }
    void on_remove(int v) {
        next_[prev_[v]] = next_[v];
        prev_[next_[v]] = prev_[v];
        emit();
    }
    void on_restore(int v) {
        next_[prev_[v]] = v;
        prev_[next_[v]] = v;
    }

private:
    void emit() {
        bool first = true;
        for (int v = next_[0]; v != tail_; v = next_[v]) {
            if (!first) out_ << ' ';
            out_ << v;
            first = false;
        }
        out_ << '\n';
    }

    std::ostream& out_;
    std::vector<int> next_, prev_;
    int tail_ = 1;
};

// Drives a visitor from delta-format text; the test-side inverse of
// DeltaWriter.
template <SolutionVisitor V>
inline void replay_delta(std::istream& in, V&& vis) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        char tag;
        ss >> tag;
        if (tag == 'I') {
            std::vector<int> all;
            int v;
            while (ss >> v) all.push_back(v);
            vis.on_initial(all);
        } else if (tag == 'R') {
            int v;
            ss >> v;
            vis.on_remove(v);
        } else if (tag == 'U') {
            int v;
            ss >> v;
            vis.on_restore(v);
        }
    }
}

inline std::string replay_delta_to_full(const std::string& delta_text) {
    std::istringstream in(delta_text);
    std::ostringstream out;
    FullWriter w(out);
    replay_delta(in, w);
    return out.str();
}

} // namespace domset
