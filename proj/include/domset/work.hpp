#pragma once

#include <cstdint>

namespace domset {

// Count of elementary operations: adjacency elements visited, list links and
// unlinks, flag writes, journal entries. Monotone during a run; the empirical
// vehicle for the per-solution cost bounds.
struct WorkCounter {
    uint64_t touches = 0;

    void tick(uint64_t k = 1) { touches += k; }
};

// 64-bit solution counter; saturates instead of wrapping.
struct SolutionCounter {
    uint64_t value = 0;
    bool saturated = false;

    void increment() {
        if (value == UINT64_MAX)
            saturated = true;
        else
            ++value;
    }
};

struct EnumerationStats {
    uint64_t solutions = 0;
    uint64_t touches = 0;
    bool saturated = false;
    bool truncated = false; // stopped by a solution limit
};

} // namespace domset
