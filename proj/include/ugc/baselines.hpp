#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "ugc/common.hpp"
#include "ugc/graph.hpp"

namespace ugc {

// Upper-triangle-only CSR size accounting: (n+1) offsets of
// ceil(log2(e+1)) bits plus e neighbor ids of ceil(log2 n) bits, where e
// is the edge count; field widths never drop below one bit.
inline std::uint64_t csr_size_bits(const LabeledGraph& g) {
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t e = g.edge_count();
    const std::uint64_t offset_bits = std::max<std::uint32_t>(1, ceil_log2(e + 1));
    const std::uint64_t neighbor_bits = std::max<std::uint32_t>(1, ceil_log2(n));
    return (n + 1) * offset_bits + e * neighbor_bits;
}

// Hilbert curve over a side x side grid, side a power of two. Step t maps
// to a cell; consecutive cells are Manhattan-adjacent and the whole curve
// visits every cell exactly once.
struct HilbertOrder {
    std::uint64_t side = 1;

    static HilbertOrder covering(std::uint64_t n) {
        HilbertOrder h;
        while (h.side < n) h.side <<= 1;
        return h;
    }

    std::pair<std::uint64_t, std::uint64_t> cell(std::uint64_t t) const {
        std::uint64_t x = 0, y = 0;
        for (std::uint64_t s = 1; s < side; s <<= 1) {
            const std::uint64_t rx = 1 & (t / 2);
            const std::uint64_t ry = 1 & (t ^ rx);
            if (ry == 0) {
                if (rx == 1) {
                    x = s - 1 - x;
                    y = s - 1 - y;
                }
                std::swap(x, y);
            }
            x += s * rx;
            y += s * ry;
            t /= 4;
        }
        return {x, y};
    }
};

// Reads the full adjacency matrix (zero-padded to the next power-of-two
// side) along the Hilbert curve.
inline std::vector<bool> hilbert_linearize(const LabeledGraph& g) {
    const std::uint64_t n = g.vertex_count();
    const HilbertOrder order = HilbertOrder::covering(n);
    std::vector<bool> seq(static_cast<std::size_t>(order.side * order.side), false);
    for (std::uint64_t t = 0; t < order.side * order.side; ++t) {
        const auto [x, y] = order.cell(t);
        if (x < n && y < n && x != y) seq[static_cast<std::size_t>(t)] = g.edge(x, y);
    }
    return seq;
}

// LZ78 over a bit sequence. Each phrase extends a previous one (index 0 is
// the empty phrase) by one literal bit; the index is written in
// max(1, ceil(log2(P+1))) bits where P counts phrases emitted so far. A
// final phrase that ends exactly on a dictionary entry is emitted as a
// bare index, recognizable because it exhausts the stream.
inline std::vector<bool> lz78_encode_bits(const std::vector<bool>& input) {
    std::vector<bool> out;
    // children[node] = {next node for 0, next node for 1}; 0 = root/empty.
    std::vector<std::array<std::uint32_t, 2>> children{{0, 0}};

    const auto emit_index = [&](std::uint32_t index) {
        const std::uint32_t phrases = static_cast<std::uint32_t>(children.size()) - 1;
        const std::uint32_t width = std::max<std::uint32_t>(1, ceil_log2(phrases + 1));
        for (std::uint32_t b = width; b-- > 0;) out.push_back((index >> b) & 1u);
    };

    std::uint32_t node = 0;
    for (bool bit : input) {
        const std::uint32_t child = children[node][bit ? 1 : 0];
        if (child != 0) {
            node = child;
            continue;
        }
        emit_index(node);
        out.push_back(bit);
        children[node][bit ? 1 : 0] = static_cast<std::uint32_t>(children.size());
        children.push_back({0, 0});
        node = 0;
    }
    if (node != 0) emit_index(node); // incomplete final phrase
    return out;
}

inline std::uint64_t lz78_size_bits(const std::vector<bool>& input) {
    return lz78_encode_bits(input).size();
}

inline std::vector<bool> lz78_decode_bits(const std::vector<bool>& code) {
    std::vector<bool> out;
    // phrase[i] = (parent, bit); phrase 0 is empty.
    std::vector<std::pair<std::uint32_t, bool>> phrases{{0, false}};
    std::size_t pos = 0;

    const auto append_phrase = [&](std::uint32_t index) {
        std::vector<bool> tail;
        for (std::uint32_t p = index; p != 0; p = phrases[p].first) tail.push_back(phrases[p].second);
        out.insert(out.end(), tail.rbegin(), tail.rend());
    };

    while (pos < code.size()) {
        const std::uint32_t count = static_cast<std::uint32_t>(phrases.size());
        const std::uint32_t width = std::max<std::uint32_t>(1, ceil_log2(count));
        if (code.size() - pos < width) throw Error("lz78: truncated index");
        std::uint32_t index = 0;
        for (std::uint32_t b = 0; b < width; ++b) index = (index << 1) | (code[pos++] ? 1u : 0u);
        if (index >= count) throw Error("lz78: phrase index out of range");
        append_phrase(index);
        if (pos == code.size()) break; // bare final index
        const bool literal = code[pos++];
        out.push_back(literal);
        phrases.emplace_back(index, literal);
    }
    return out;
}

} // namespace ugc
