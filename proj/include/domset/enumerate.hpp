#pragma once

#include "domset/engine_basic.hpp"
#include "domset/engine_degenerate.hpp"
#include "domset/engine_girth.hpp"

namespace domset {

enum class Algo { Basic, Degenerate, Girth };

inline std::optional<Algo> parse_algo(std::string_view s) {
    if (s == "basic") return Algo::Basic;
    if (s == "deg") return Algo::Degenerate;
    if (s == "girth") return Algo::Girth;
    return std::nullopt;
}

inline const char* algo_name(Algo a) {
    switch (a) {
        case Algo::Basic: return "basic";
        case Algo::Degenerate: return "deg";
        case Algo::Girth: return "girth";
    }
    return "?";
}

struct EnumerateConfig {
    Algo algo = Algo::Basic;
    bool force = false; // run the girth engine below its girth bound
    // Relabel by a degeneracy ordering before enumerating. Unset picks the
    // engine default: on for the degenerate engine, off otherwise. Emitted
    // labels are the original ones either way.
    std::optional<bool> relabel_degeneracy;
    uint64_t max_solutions = 0;
};

template <SolutionVisitor Vis>
inline EnumerationStats enumerate(const Graph& g, const EnumerateConfig& cfg, Vis&& vis) {
    bool reorder = cfg.relabel_degeneracy.value_or(cfg.algo == Algo::Degenerate);
    if (cfg.algo == Algo::Girth && !cfg.force) {
        GirthInfo gi = girth(g);
        if (!gi.infinite() && *gi.girth < kGirthRequirement)
            throw GirthTooSmall(*gi.girth, kGirthRequirement);
    }

    auto run_on = [&](const Graph& h) -> EnumerationStats {
        switch (cfg.algo) {
            case Algo::Basic: {
                BasicEngine e(h);
                e.max_solutions = cfg.max_solutions;
                return e.run(vis);
            }
            case Algo::Degenerate: {
                DegenerateEngine e(h);
                e.max_solutions = cfg.max_solutions;
                return e.run(vis);
            }
            case Algo::Girth: {
                GirthEngine e(h);
                e.max_solutions = cfg.max_solutions;
                return e.run(vis);
            }
        }
        return {};
    };

    if (reorder) {
        Graph ordered = relabel(g, degeneracy_ordering(g));
        return run_on(ordered);
    }
    return run_on(g);
}

} // namespace domset
