#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

#include "ugc/arithmetic_coder.hpp"
#include "ugc/block_codec.hpp"
#include "ugc/common.hpp"
#include "ugc/graph.hpp"
#include "ugc/prob_model.hpp"

namespace ugc {

// On-disk container (all integers little-endian):
//
//   offset  size  field
//        0     4  magic "UGC1"
//        4     1  version (1)
//        5     1  flags (bit0: 0 = KT, 1 = Laplace; others reserved)
//        6     8  n_original
//       14     4  k
//       18     8  ut_stream_len (bytes)
//       26     8  d_stream_len  (bytes)
//       34     -  ut_stream, then d_stream
//
// The two streams are coded independently with fresh models. For k = 1 the
// diagonal sequence is identically zero, so d_stream_len = 0.
inline constexpr std::size_t kContainerHeaderBytes = 34;
inline constexpr std::uint8_t kContainerVersion = 1;

struct ContainerInfo {
    std::uint64_t n_original = 0;
    std::uint32_t k = 0;
    ProbMode mode = ProbMode::kt;
    std::uint64_t ut_stream_bytes = 0;
    std::uint64_t d_stream_bytes = 0;
};

namespace detail {

inline void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, std::size_t n_bytes) {
    for (std::size_t i = 0; i < n_bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline std::uint64_t get_le(std::span<const std::uint8_t> in, std::size_t offset, std::size_t n_bytes) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n_bytes; ++i) v |= std::uint64_t{in[offset + i]} << (8 * i);
    return v;
}

inline std::uint32_t check_container_k(std::uint32_t k) {
    if (k < 1 || k > 4) throw std::invalid_argument("block size k must be in [1,4]");
    return k;
}

} // namespace detail

inline ContainerInfo read_container_info(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kContainerHeaderBytes) throw Error("container truncated: header incomplete");
    if (std::memcmp(bytes.data(), "UGC1", 4) != 0) throw Error("container: bad magic");
    if (bytes[4] != kContainerVersion) throw Error("container: unsupported version");
    if (bytes[5] > 1) throw Error("container: unsupported flags");
    ContainerInfo info;
    info.mode = bytes[5] & 1u ? ProbMode::laplace : ProbMode::kt;
    info.n_original = detail::get_le(bytes, 6, 8);
    info.k = static_cast<std::uint32_t>(detail::get_le(bytes, 14, 4));
    info.ut_stream_bytes = detail::get_le(bytes, 18, 8);
    info.d_stream_bytes = detail::get_le(bytes, 26, 8);
    if (info.n_original == 0) throw Error("container: vertex count must be positive");
    if (info.k < 1 || info.k > 4) throw Error("container: block size out of range");
    if (info.k == 1 && info.d_stream_bytes != 0)
        throw Error("container: k=1 must carry no diagonal stream");
    if (bytes.size() != kContainerHeaderBytes + info.ut_stream_bytes + info.d_stream_bytes)
        throw Error("container truncated: stream lengths disagree with payload");
    return info;
}

inline std::vector<std::uint8_t> compress(const LabeledGraph& g, std::uint32_t k, ProbMode mode) {
    detail::check_container_k(k);
    const std::uint64_t m = std::uint64_t{1} << (k * k);

    ArithmeticEncoder ut_enc(m, mode);
    visit_ut_symbols(g, k, [&](std::uint64_t s) { ut_enc.encode_symbol(s); });
    const EncodedStream ut = ut_enc.finish();

    EncodedStream diag;
    if (k > 1) {
        ArithmeticEncoder d_enc(m, mode);
        visit_diag_symbols(g, k, [&](std::uint64_t s) { d_enc.encode_symbol(s); });
        diag = d_enc.finish();
    }

    std::vector<std::uint8_t> out;
    out.reserve(kContainerHeaderBytes + ut.bytes.size() + diag.bytes.size());
    out.insert(out.end(), {'U', 'G', 'C', '1'});
    out.push_back(kContainerVersion);
    out.push_back(mode == ProbMode::laplace ? 1 : 0);
    detail::put_le(out, g.vertex_count(), 8);
    detail::put_le(out, k, 4);
    detail::put_le(out, ut.bytes.size(), 8);
    detail::put_le(out, diag.bytes.size(), 8);
    out.insert(out.end(), ut.bytes.begin(), ut.bytes.end());
    out.insert(out.end(), diag.bytes.begin(), diag.bytes.end());
    return out;
}

inline LabeledGraph decompress(std::span<const std::uint8_t> bytes) {
    const ContainerInfo info = read_container_info(bytes);
    const std::uint64_t m = std::uint64_t{1} << (info.k * info.k);
    const auto ut_bytes = bytes.subspan(kContainerHeaderBytes, info.ut_stream_bytes);
    const auto d_bytes =
        bytes.subspan(kContainerHeaderBytes + info.ut_stream_bytes, info.d_stream_bytes);

    BlockMatrixWriter writer(static_cast<std::size_t>(info.n_original), info.k);
    {
        ArithmeticDecoder dec(ut_bytes, m, info.mode);
        const std::size_t count = writer.ut_symbol_count();
        for (std::size_t i = 0; i < count; ++i) writer.put_ut(dec.decode_symbol());
    }
    if (info.k == 1) {
        const std::size_t count = writer.diag_symbol_count();
        for (std::size_t i = 0; i < count; ++i) writer.put_diag(0);
    } else {
        ArithmeticDecoder dec(d_bytes, m, info.mode);
        const std::size_t count = writer.diag_symbol_count();
        for (std::size_t i = 0; i < count; ++i) writer.put_diag(dec.decode_symbol());
    }
    return writer.take();
}

// Block size rule max(1, floor(sqrt(0.5 log2 n))), capped at 4; larger k
// would need 2^(k^2) model states.
inline std::uint32_t default_k(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    const double target = std::sqrt(0.5 * std::log2(static_cast<double>(n)));
    const auto k = static_cast<std::uint32_t>(target);
    return std::max<std::uint32_t>(1, std::min<std::uint32_t>(4, k));
}

} // namespace ugc
