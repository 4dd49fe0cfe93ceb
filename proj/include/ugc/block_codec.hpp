#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ugc/common.hpp"
#include "ugc/graph.hpp"

namespace ugc {

// k x k block decomposition of the adjacency matrix. If k does not divide
// n, the matrix is implicitly zero-padded to n_padded = k*ceil(n/k); the
// padding is invisible once n_original is known.
//
// Off-diagonal blocks strictly above the block diagonal form the `ut`
// sequence in the order B12, B13, B23, B14, B24, B34, ... (column-major
// over the block upper triangle); diagonal blocks form `diag` as B11,
// B22, ..., each carrying its redundant mirrored lower half and zero
// diagonal. Symbols pack the block bits row-major, first bit most
// significant, so values lie in [0, 2^(k*k)).
struct BlockSymbolSequences {
    std::size_t n_original = 0;
    std::size_t n_padded = 0;
    std::uint32_t k = 1;
    std::uint64_t m = 2; // alphabet size 2^(k*k)
    std::vector<std::uint64_t> ut;
    std::vector<std::uint64_t> diag;

    std::size_t block_rows() const { return n_padded / k; }
};

namespace detail {

inline std::uint32_t check_block_side(std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("block side k must be >= 1");
    if (k > 7) throw std::invalid_argument("block side k must be <= 7 (64-bit symbols)");
    return k;
}

inline bool padded_edge(const LabeledGraph& g, std::size_t i, std::size_t j) {
    const std::size_t n = g.vertex_count();
    if (i >= n || j >= n) return false;
    return g.edge(i, j);
}

} // namespace detail

// Row-major, MSB-first packing of a k x k binary block.
inline std::uint64_t block_to_symbol(std::span<const std::uint8_t> row_major_bits) {
    std::uint64_t sym = 0;
    for (std::uint8_t b : row_major_bits) {
        if (b > 1) throw std::invalid_argument("block entries must be 0 or 1");
        sym = (sym << 1) | b;
    }
    return sym;
}

inline void symbol_to_block(std::uint64_t symbol, std::uint32_t k,
                            std::span<std::uint8_t> row_major_bits) {
    detail::check_block_side(k);
    const std::uint32_t n_bits = k * k;
    if (row_major_bits.size() != n_bits) throw std::invalid_argument("block buffer size mismatch");
    if (symbol >> n_bits) throw std::invalid_argument("symbol out of range for block side");
    for (std::uint32_t t = 0; t < n_bits; ++t)
        row_major_bits[t] = static_cast<std::uint8_t>((symbol >> (n_bits - 1 - t)) & 1u);
}

// Streams the off-diagonal block symbols in sequence order without
// materializing them; f(symbol) is called once per block.
template <typename F>
void visit_ut_symbols(const LabeledGraph& g, std::uint32_t k, F&& f) {
    detail::check_block_side(k);
    const std::size_t nb = (g.vertex_count() + k - 1) / k;
    for (std::size_t bj = 1; bj < nb; ++bj) {
        for (std::size_t bi = 0; bi < bj; ++bi) {
            std::uint64_t sym = 0;
            for (std::uint32_t r = 0; r < k; ++r)
                for (std::uint32_t c = 0; c < k; ++c)
                    sym = (sym << 1) | (detail::padded_edge(g, bi * k + r, bj * k + c) ? 1u : 0u);
            f(sym);
        }
    }
}

template <typename F>
void visit_diag_symbols(const LabeledGraph& g, std::uint32_t k, F&& f) {
    detail::check_block_side(k);
    const std::size_t nb = (g.vertex_count() + k - 1) / k;
    for (std::size_t bi = 0; bi < nb; ++bi) {
        std::uint64_t sym = 0;
        for (std::uint32_t r = 0; r < k; ++r)
            for (std::uint32_t c = 0; c < k; ++c)
                sym = (sym << 1) |
                      (r != c && detail::padded_edge(g, bi * k + r, bi * k + c) ? 1u : 0u);
        f(sym);
    }
}

inline BlockSymbolSequences decompose(const LabeledGraph& g, std::uint32_t k) {
    detail::check_block_side(k);
    BlockSymbolSequences seqs;
    seqs.n_original = g.vertex_count();
    seqs.n_padded = (g.vertex_count() + k - 1) / k * k;
    seqs.k = k;
    seqs.m = std::uint64_t{1} << (k * k);
    const std::size_t nb = seqs.block_rows();
    seqs.ut.reserve(nb * (nb - 1) / 2);
    seqs.diag.reserve(nb);
    visit_ut_symbols(g, k, [&](std::uint64_t s) { seqs.ut.push_back(s); });
    visit_diag_symbols(g, k, [&](std::uint64_t s) { seqs.diag.push_back(s); });
    return seqs;
}

// Rebuilds a graph from block symbols fed back in sequence order; the
// inverse of the visitors above. Validates symbol ranges and the
// structural invariants of diagonal blocks.
class BlockMatrixWriter {
public:
    BlockMatrixWriter(std::size_t n_original, std::uint32_t k)
        : k_(detail::check_block_side(k)),
          n_(n_original),
          nb_((n_original + k - 1) / k),
          graph_(n_original) {}

    std::size_t ut_symbol_count() const { return nb_ * (nb_ - 1) / 2; }
    std::size_t diag_symbol_count() const { return nb_; }

    void put_ut(std::uint64_t symbol) {
        if (ut_done_ >= ut_symbol_count()) throw Error("too many off-diagonal block symbols");
        check_symbol(symbol);
        const std::uint32_t nbits = k_ * k_;
        for (std::uint32_t r = 0; r < k_; ++r) {
            for (std::uint32_t c = 0; c < k_; ++c) {
                const bool bit = (symbol >> (nbits - 1 - (r * k_ + c))) & 1u;
                set_padded(cur_bi_ * k_ + r, cur_bj_ * k_ + c, bit);
            }
        }
        ++ut_done_;
        if (++cur_bi_ == cur_bj_) { // next block, column-major order
            cur_bi_ = 0;
            ++cur_bj_;
        }
    }

    void put_diag(std::uint64_t symbol) {
        if (diag_done_ >= nb_) throw Error("too many diagonal block symbols");
        check_symbol(symbol);
        const std::uint32_t nbits = k_ * k_;
        const std::size_t base = diag_done_ * k_;
        for (std::uint32_t r = 0; r < k_; ++r) {
            for (std::uint32_t c = 0; c < k_; ++c) {
                const bool bit = (symbol >> (nbits - 1 - (r * k_ + c))) & 1u;
                if (r == c) {
                    if (bit) throw Error("diagonal block has nonzero diagonal entry");
                } else if (r < c) {
                    set_padded(base + r, base + c, bit);
                } else {
                    const bool mirror = (symbol >> (nbits - 1 - (c * k_ + r))) & 1u;
                    if (bit != mirror) throw Error("diagonal block is not symmetric");
                }
            }
        }
        ++diag_done_;
    }

    LabeledGraph take() {
        if (ut_done_ != ut_symbol_count() || diag_done_ != nb_)
            throw Error("block symbol sequences incomplete");
        return std::move(graph_);
    }

private:
    void check_symbol(std::uint64_t symbol) const {
        if (symbol >> (k_ * k_)) throw Error("block symbol out of range");
    }

    void set_padded(std::size_t i, std::size_t j, bool bit) {
        if (i >= n_ || j >= n_) return; // padding cells carry no information
        graph_.set_edge(i, j, bit);
    }

    std::uint32_t k_;
    std::size_t n_;
    std::size_t nb_;
    LabeledGraph graph_;
    std::size_t ut_done_ = 0;
    std::size_t diag_done_ = 0;
    std::size_t cur_bi_ = 0;
    std::size_t cur_bj_ = 1;
};

inline LabeledGraph recompose(const BlockSymbolSequences& seqs) {
    BlockMatrixWriter writer(seqs.n_original, seqs.k);
    if (seqs.ut.size() != writer.ut_symbol_count() || seqs.diag.size() != writer.diag_symbol_count())
        throw Error("block symbol sequences have wrong lengths");
    for (std::uint64_t s : seqs.ut) writer.put_ut(s);
    for (std::uint64_t s : seqs.diag) writer.put_diag(s);
    return writer.take();
}

} // namespace ugc
