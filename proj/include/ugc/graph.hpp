#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ugc/common.hpp"

namespace ugc {

// Simple labeled graph stored as a bit-packed upper triangle. The canonical
// linearization is row-major over the strict upper triangle:
// (0,1), (0,2), ..., (0,n-1), (1,2), ..., (n-2,n-1)  [0-based vertices].
// Symmetry and the zero diagonal are structural: only i < j is stored.
class LabeledGraph {
public:
    explicit LabeledGraph(std::size_t n) : n_(n), bits_((ugc::pair_count(n) + 63) / 64, 0) {
        if (n == 0) throw std::invalid_argument("vertex count must be positive");
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t pair_count() const { return ugc::pair_count(n_); }

    // Row-major upper-triangle index of the unordered pair {i,j}, i != j.
    std::size_t pair_index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return i * n_ - i * (i + 1) / 2 + (j - i - 1);
    }

    // A_ij: symmetric, zero on the diagonal. Total over valid indices.
    bool edge(std::size_t i, std::size_t j) const {
        check_vertex(i);
        check_vertex(j);
        if (i == j) return false;
        return bit(pair_index(i, j));
    }

    void set_edge(std::size_t i, std::size_t j, bool present) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) {
            if (present) throw std::invalid_argument("self-loops are not representable");
            return;
        }
        const std::size_t idx = pair_index(i, j);
        const std::uint64_t mask = std::uint64_t{1} << (idx & 63);
        if (present)
            bits_[idx >> 6] |= mask;
        else
            bits_[idx >> 6] &= ~mask;
    }

    // Bit of the canonical linearization.
    bool bit(std::size_t idx) const { return (bits_[idx >> 6] >> (idx & 63)) & 1u; }

    std::size_t edge_count() const {
        std::size_t c = 0;
        for (std::uint64_t w : bits_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check_vertex(std::size_t v) const {
        if (v >= n_) throw std::out_of_range("vertex index out of range");
    }

    std::size_t n_;
    std::vector<std::uint64_t> bits_;
};

enum class VertexIndexing { autodetect, zero_based, one_based };

struct EdgeListStats {
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

namespace detail {

inline std::uint64_t parse_vertex_token(std::string_view tok, std::size_t line_no) {
    std::uint64_t v = 0;
    if (!tok.empty() && tok.front() == '-')
        throw Error("edge list line " + std::to_string(line_no) + ": negative vertex id");
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error("edge list line " + std::to_string(line_no) + ": expected integer, got '" +
                    std::string(tok) + "'");
    return v;
}

} // namespace detail

// Reads whitespace-separated integer pairs, one edge per line. Lines whose
// first non-blank character is '#' or '%' are comments; a "# n=<count>"
// comment pins the vertex count (how write_edgelist preserves isolated
// trailing vertices). Vertex ids are taken as 0-based when a 0 appears
// anywhere (override with `indexing`). Duplicate edges and self-loops are
// dropped and counted in `stats`.
inline LabeledGraph load_edgelist(std::istream& in,
                                  VertexIndexing indexing = VertexIndexing::autodetect,
                                  EdgeListStats* stats = nullptr) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::uint64_t max_id = 0;
    std::uint64_t header_n = 0;
    bool saw_zero = false;
    bool saw_edge = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv(line);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' || sv.front() == '\r'))
            sv.remove_prefix(1);
        while (!sv.empty() && (sv.back() == ' ' || sv.back() == '\t' || sv.back() == '\r'))
            sv.remove_suffix(1);
        if (sv.empty()) continue;
        if (sv.front() == '#' || sv.front() == '%') {
            sv.remove_prefix(1);
            while (!sv.empty() && sv.front() == ' ') sv.remove_prefix(1);
            if (sv.starts_with("n=")) {
                sv.remove_prefix(2);
                std::uint64_t v = 0;
                auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
                if (ec == std::errc{} && ptr == sv.data() + sv.size()) header_n = std::max(header_n, v);
            }
            continue;
        }

        std::string_view tok[2];
        std::size_t ntok = 0;
        std::size_t pos = 0;
        while (pos < sv.size()) {
            while (pos < sv.size() && (sv[pos] == ' ' || sv[pos] == '\t')) ++pos;
            if (pos >= sv.size()) break;
            std::size_t end = pos;
            while (end < sv.size() && sv[end] != ' ' && sv[end] != '\t') ++end;
            if (ntok >= 2)
                throw Error("edge list line " + std::to_string(line_no) + ": expected two vertex ids");
            tok[ntok++] = sv.substr(pos, end - pos);
            pos = end;
        }
        if (ntok != 2)
            throw Error("edge list line " + std::to_string(line_no) + ": expected two vertex ids");

        const std::uint64_t u = detail::parse_vertex_token(tok[0], line_no);
        const std::uint64_t v = detail::parse_vertex_token(tok[1], line_no);
        if (indexing == VertexIndexing::one_based && (u == 0 || v == 0))
            throw Error("edge list line " + std::to_string(line_no) + ": vertex id 0 with 1-based indexing");
        saw_zero = saw_zero || u == 0 || v == 0;
        saw_edge = true;
        max_id = std::max({max_id, u, v});
        raw.emplace_back(u, v);
    }

    const bool zero_based = indexing == VertexIndexing::zero_based ||
                            (indexing == VertexIndexing::autodetect && saw_zero);
    std::uint64_t n = header_n;
    if (saw_edge) n = std::max(n, zero_based ? max_id + 1 : max_id);
    if (n == 0) throw Error("edge list is empty and carries no '# n=' header");

    LabeledGraph g(static_cast<std::size_t>(n));
    EdgeListStats local;
    for (auto [u, v] : raw) {
        if (!zero_based) {
            --u;
            --v;
        }
        if (u == v) {
            ++local.self_loops;
            continue;
        }
        if (g.edge(u, v)) {
            ++local.duplicate_edges;
            continue;
        }
        g.set_edge(u, v, true);
    }
    if (stats) *stats = local;
    return g;
}

// 1-indexed upper-triangle edges in canonical order, preceded by "# n=<n>"
// so the round trip through load_edgelist is exact for every graph.
inline void write_edgelist(const LabeledGraph& g, std::ostream& out) {
    const std::size_t n = g.vertex_count();
    out << "# n=" << n << '\n';
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.edge(i, j)) out << (i + 1) << ' ' << (j + 1) << '\n';
}

} // namespace ugc
