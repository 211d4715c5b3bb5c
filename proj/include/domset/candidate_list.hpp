#pragma once

#include "domset/work.hpp"

#include <cstdint>
#include <vector>

namespace domset {

// Sorted doubly-linked list over vertex ids with O(1) unlink and O(1)
// relink-in-place. Every unlink is journaled; rolling back to a mark relinks
// in reverse order, which restores the list bit-exactly because an unlinked
// node keeps its old neighbor pointers.
class CandidateList {
public:
    void init(int n, const std::vector<int>& members_ascending, WorkCounter& work) {
        n_ = n;
        head_ = n;
        tail_ = n + 1;
        next_.assign(n + 2, -1);
        prev_.assign(n + 2, -1);
        present_.assign(n, 0);
        journal_.clear();
        work_ = &work;
        int prev = head_;
        for (int v : members_ascending) {
            next_[prev] = v;
            prev_[v] = prev;
            present_[v] = 1;
            prev = v;
        }
        next_[prev] = tail_;
        prev_[tail_] = prev;
        size_ = static_cast<int>(members_ascending.size());
    }

    bool contains(int v) const { return present_[v] != 0; }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    // Largest member, or -1 when empty.
    int max() const { return prev_[tail_] == head_ ? -1 : prev_[tail_]; }
    // Largest member smaller than v; v need not be linked (its pointers are
    // still valid after an unlink). -1 when none.
    int pred(int v) const { return prev_[v] == head_ ? -1 : prev_[v]; }
    int succ(int v) const { return next_[v] == tail_ ? -1 : next_[v]; }
    int first() const { return next_[head_] == tail_ ? -1 : next_[head_]; }

    void unlink(int v) {
        next_[prev_[v]] = next_[v];
        prev_[next_[v]] = prev_[v];
        present_[v] = 0;
        --size_;
        journal_.push_back(v);
        work_->tick(2); // link change + journal entry
    }

    size_t mark() const { return journal_.size(); }

    void rollback(size_t mark) {
        while (journal_.size() > mark) {
            int v = journal_.back();
            journal_.pop_back();
            next_[prev_[v]] = v;
            prev_[next_[v]] = v;
            present_[v] = 1;
            ++size_;
            work_->tick(1);
        }
    }

    std::vector<int> contents() const {
        std::vector<int> out;
        out.reserve(size_);
        for (int v = next_[head_]; v != tail_; v = next_[v]) out.push_back(v);
        return out;
    }

    uint64_t checksum() const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        for (int v = next_[head_]; v != tail_; v = next_[v]) mix(static_cast<uint64_t>(v) + 1);
        for (int v = 0; v < n_; ++v) mix(present_[v]);
        mix(static_cast<uint64_t>(size_));
        return h;
    }

private:
    int n_ = 0, head_ = 0, tail_ = 1, size_ = 0;
    std::vector<int> next_, prev_;
    std::vector<uint8_t> present_;
    std::vector<int> journal_;
    WorkCounter* work_ = nullptr;
};

// Membership state of the current solution X plus its candidate list.
struct SolutionState {
    std::vector<uint8_t> in_x;
    int size = 0;
    CandidateList cand;

    void init_full(int n, const std::vector<int>& candidates, WorkCounter& work) {
        in_x.assign(n, 1);
        size = n;
        cand.init(n, candidates, work);
    }

    void remove(int v) {
        in_x[v] = 0;
        --size;
    }
    void restore(int v) {
        in_x[v] = 1;
        ++size;
    }
};

} // namespace domset
