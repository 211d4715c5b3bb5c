#pragma once

// Immutable simple undirected graph with index-sorted adjacency.
//
// Vertex ids are 0-based internally. Everything user-visible (text formats,
// emitted solution labels, error messages) is 1-based; the parser and the
// serializer are the boundary.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace domset {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

class Graph {
public:
    Graph() = default;

    // Edges are given with 1-based endpoints. Rejects self-loops, duplicate
    // edges and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        std::vector<std::pair<int, int>> internal;
        internal.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::invalid_argument("vertex index out of range");
            if (u == v) throw std::invalid_argument("self-loop");
            internal.emplace_back(u - 1, v - 1);
        }
        return build(n, std::move(internal));
    }

    int vertex_count() const { return n_; }
    long edge_count() const { return m_; }

    int degree(int v) const { return off_[v + 1] - off_[v]; }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    // Neighbors of v, strictly ascending.
    std::span<const int> neighbors(int v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }

    // Neighbors with smaller / larger index than v. The split point is
    // precomputed so the larger-side view costs O(1) to obtain.
    std::span<const int> smaller_neighbors(int v) const {
        return {adj_.data() + off_[v], adj_.data() + split_[v]};
    }
    std::span<const int> larger_neighbors(int v) const {
        return {adj_.data() + split_[v], adj_.data() + off_[v + 1]};
    }

    bool has_edge(int u, int v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Flat adjacency slots. Slot s holds the directed pair (owner, target);
    // mate(s) is the slot of the reverse direction. D-lists and the local
    // structure key their per-edge state by slot.
    long slot_count() const { return static_cast<long>(adj_.size()); }
    long slot_begin(int v) const { return off_[v]; }
    long slot_end(int v) const { return off_[v + 1]; }
    long slot_split(int v) const { return split_[v]; } // first larger-neighbor slot
    int slot_target(long s) const { return adj_[s]; }
    int slot_owner(long s) const { return owner_[s]; }
    long mate(long s) const { return mate_[s]; }

    // Original 1-based label of an internal vertex. Identity for graphs that
    // were not relabeled.
    int label(int v) const { return orig_[v]; }
    const std::vector<int>& labels() const { return orig_; }

    Graph with_labels(std::vector<int> labels) const {
        Graph g = *this;
        g.orig_ = std::move(labels);
        return g;
    }

private:
    friend Graph relabel(const Graph&, const struct DegeneracyOrdering&);

    static Graph build(int n, std::vector<std::pair<int, int>> edges) {
        Graph g;
        g.n_ = n;
        g.m_ = static_cast<long>(edges.size());
        g.off_.assign(n + 1, 0);
        for (const auto& [u, v] : edges) {
            ++g.off_[u + 1];
            ++g.off_[v + 1];
        }
        for (int v = 0; v < n; ++v) g.off_[v + 1] += g.off_[v];
        g.adj_.resize(2 * edges.size());
        std::vector<int> cursor(g.off_.begin(), g.off_.end() - 1);
        for (const auto& [u, v] : edges) {
            g.adj_[cursor[u]++] = v;
            g.adj_[cursor[v]++] = u;
        }
        for (int v = 0; v < n; ++v) {
            auto b = g.adj_.begin() + g.off_[v], e = g.adj_.begin() + g.off_[v + 1];
            std::sort(b, e);
            if (std::adjacent_find(b, e) != e) throw std::invalid_argument("duplicate edge");
        }
        g.finish();
        return g;
    }

    void finish() {
        split_.resize(n_);
        owner_.resize(adj_.size());
        mate_.resize(adj_.size());
        for (int v = 0; v < n_; ++v) {
            auto nb = neighbors(v);
            split_[v] = off_[v] + static_cast<int>(std::upper_bound(nb.begin(), nb.end(), v) -
                                                   nb.begin());
            for (long s = off_[v]; s < off_[v + 1]; ++s) owner_[s] = v;
        }
        // mate(s): position of the reverse edge, found by walking both
        // endpoints' sorted lists in lockstep via per-vertex cursors.
        std::vector<int> cursor(off_.begin(), off_.end() - 1);
        for (int v = 0; v < n_; ++v) {
            for (long s = off_[v]; s < off_[v + 1]; ++s) {
                int w = adj_[s];
                if (w < v) continue;
                long t = cursor[w]++;
                mate_[s] = t;
                mate_[t] = s;
            }
        }
        if (orig_.empty()) {
            orig_.resize(n_);
            for (int v = 0; v < n_; ++v) orig_[v] = v + 1;
        }
    }

    int n_ = 0;
    long m_ = 0;
    std::vector<int> off_;
    std::vector<int> adj_;
    std::vector<int> split_;
    std::vector<int> owner_;
    std::vector<long> mate_;
    std::vector<int> orig_;
};

namespace detail {

inline bool blank_or_comment(std::string_view line, char comment) {
    size_t i = line.find_first_not_of(" \t\r");
    return i == std::string_view::npos || line[i] == comment;
}

struct LineReader {
    std::istream& in;
    long lineno = 0;
    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++lineno;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            return true;
        }
        return false;
    }
};

inline bool parse_two_ints(const std::string& line, long& a, long& b) {
    std::istringstream ss(line);
    std::string rest;
    if (!(ss >> a >> b)) return false;
    if (ss >> rest) return false;
    return true;
}

} // namespace detail

// Canonical edge-list format: '#' comments, header "n m", then exactly m
// lines "u v" with 1 <= u,v <= n and u != v. DIMACS-like: 'c' comments,
// "p edge n m", "e u v". The format is detected from the first significant
// line. Malformed input raises ParseError with the offending line number.
inline Graph parse_graph(std::istream& in) {
    detail::LineReader rd{in};
    std::string line;

    // Skip leading blank lines and '#' comments to find the first
    // significant line, which decides the format.
    long header_line = 0;
    bool have = false;
    while (rd.next(line)) {
        if (detail::blank_or_comment(line, '#')) continue;
        have = true;
        header_line = rd.lineno;
        break;
    }
    if (!have) throw ParseError("empty input, expected graph header", rd.lineno + 1);

    size_t i = line.find_first_not_of(" \t");
    char c = line[i];
    bool dimacs = (c == 'c' || c == 'p' || c == 'e');
    if (!dimacs && !(c >= '0' && c <= '9'))
        throw ParseError("unrecognized header", header_line);

    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<uint64_t> seen;
    long edge_lines = 0;

    auto add_edge = [&](long u, long v, long lineno) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError("vertex index out of range: " + std::to_string(u) + " " +
                                 std::to_string(v),
                             lineno);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), lineno);
        auto [a, b] = std::minmax(u, v);
        uint64_t key = static_cast<uint64_t>(a) * (static_cast<uint64_t>(n) + 1) +
                       static_cast<uint64_t>(b);
        if (!seen.insert(key).second)
            throw ParseError("duplicate edge " + std::to_string(a) + " " + std::to_string(b),
                             lineno);
        edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
    };

    if (dimacs) {
        // Re-process from the detected line onwards.
        do {
            size_t j = line.find_first_not_of(" \t");
            if (j == std::string_view::npos) continue;
            char k = line[j];
            if (k == 'c') continue;
            std::istringstream ss(line);
            std::string tag;
            ss >> tag;
            if (tag == "p") {
                if (n >= 0) throw ParseError("duplicate problem line", rd.lineno);
                std::string kind;
                if (!(ss >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
                    throw ParseError("malformed problem line, expected 'p edge n m'", rd.lineno);
            } else if (tag == "e") {
                if (n < 0) throw ParseError("edge before problem line", rd.lineno);
                long u, v;
                if (!(ss >> u >> v)) throw ParseError("malformed edge line", rd.lineno);
                ++edge_lines;
                add_edge(u, v, rd.lineno);
            } else {
                throw ParseError("unrecognized line tag '" + tag + "'", rd.lineno);
            }
        } while (rd.next(line));
        if (n < 0) throw ParseError("missing problem line", rd.lineno);
    } else {
        if (!detail::parse_two_ints(line, n, m) || n < 0 || m < 0)
            throw ParseError("malformed header, expected 'n m'", header_line);
        while (rd.next(line)) {
            if (detail::blank_or_comment(line, '#')) continue;
            if (edge_lines == m)
                throw ParseError("unexpected extra edge line (header declared " +
                                     std::to_string(m) + " edges)",
                                 rd.lineno);
            long u, v;
            if (!detail::parse_two_ints(line, u, v))
                throw ParseError("malformed edge line, expected 'u v'", rd.lineno);
            ++edge_lines;
            add_edge(u, v, rd.lineno);
        }
    }
    if (edge_lines != m)
        throw ParseError("header declared " + std::to_string(m) + " edges but found " +
                             std::to_string(edge_lines),
                         rd.lineno + 1);
    if (n > std::numeric_limits<int>::max() - 2) throw ParseError("vertex count too large", header_line);

    std::vector<std::pair<int, int>> ext;
    ext.reserve(edges.size());
    for (auto [u, v] : edges) ext.emplace_back(u + 1, v + 1);
    return Graph::from_edges(static_cast<int>(n), ext);
}

inline Graph parse_graph(std::string_view text) {
    std::istringstream ss{std::string(text)};
    return parse_graph(ss);
}

// Canonical format, edges sorted lexicographically.
inline void serialize_graph(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int w : g.larger_neighbors(v)) out << v + 1 << ' ' << w + 1 << '\n';
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream ss;
    serialize_graph(g, ss);
    return ss.str();
}

} // namespace domset
