#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ugc/bitstream.hpp"
#include "ugc/common.hpp"
#include "ugc/prob_model.hpp"

namespace ugc {

struct EncodedStream {
    std::vector<std::uint8_t> bytes;
    std::uint64_t bit_length = 0;
};

// m-ary adaptive arithmetic coder over the exact KT/Laplace model weights.
// Integer range coder: 32 bits of active precision inside 64-bit registers,
// carry handled by the pending-bits (underflow) counter. The interval is
// renormalized whenever it leaves the half/middle regions, so its width
// never drops below a quarter of the range and subranges stay nonempty for
// any model total below 2^31.
class ArithmeticEncoder {
public:
    ArithmeticEncoder(std::uint64_t m, ProbMode mode) : model_(m, mode) {}

    void encode_symbol(std::uint64_t symbol) {
        const std::uint64_t total = model_.total_weight();
        const std::uint64_t cum_lo = model_.cum_weight(symbol);
        const std::uint64_t cum_hi = cum_lo + model_.weight(symbol);
        const std::uint64_t range = high_ - low_ + 1;
        high_ = low_ + range * cum_hi / total - 1;
        low_ = low_ + range * cum_lo / total;
        renormalize();
        model_.update(symbol);
        ++symbols_;
    }

    // Flushes the final interval: one disambiguating quarter-bit plus any
    // pending underflow bits. Call exactly once. Zero padding from the byte
    // boundary keeps the decoder inside the final interval.
    EncodedStream finish() {
        ++pending_;
        emit(low_ >= kQuarter);
        EncodedStream out;
        out.bit_length = writer_.bit_count();
        out.bytes = writer_.take_bytes();
        return out;
    }

    std::uint64_t symbols_encoded() const { return symbols_; }

private:
    static constexpr std::uint64_t kTop = std::uint64_t{1} << 32;
    static constexpr std::uint64_t kHalf = kTop >> 1;
    static constexpr std::uint64_t kQuarter = kTop >> 2;
    static constexpr std::uint64_t kThreeQuarters = kHalf + kQuarter;

    void emit(bool bit) {
        writer_.put(bit);
        for (; pending_ > 0; --pending_) writer_.put(!bit);
    }

    void renormalize() {
        while (true) {
            if (high_ < kHalf) {
                emit(false);
            } else if (low_ >= kHalf) {
                emit(true);
                low_ -= kHalf;
                high_ -= kHalf;
            } else if (low_ >= kQuarter && high_ < kThreeQuarters) {
                ++pending_;
                low_ -= kQuarter;
                high_ -= kQuarter;
            } else {
                break;
            }
            low_ <<= 1;
            high_ = (high_ << 1) | 1;
        }
    }

    AdaptiveModel model_;
    BitWriter writer_;
    std::uint64_t low_ = 0;
    std::uint64_t high_ = kTop - 1;
    std::uint64_t pending_ = 0;
    std::uint64_t symbols_ = 0;
};

class ArithmeticDecoder {
public:
    ArithmeticDecoder(std::span<const std::uint8_t> bytes, std::uint64_t m, ProbMode mode)
        : model_(m, mode), reader_(bytes, /*slack=*/32) {
        for (int i = 0; i < 32; ++i) code_ = (code_ << 1) | (reader_.get() ? 1u : 0u);
    }

    std::uint64_t decode_symbol() {
        const std::uint64_t total = model_.total_weight();
        const std::uint64_t range = high_ - low_ + 1;
        // Cumulative target mirroring the encoder's subdivision exactly.
        const std::uint64_t target = ((code_ - low_ + 1) * total - 1) / range;
        std::uint64_t cum_lo = 0;
        const std::uint64_t symbol = model_.find(target, &cum_lo);
        const std::uint64_t cum_hi = cum_lo + model_.weight(symbol);
        high_ = low_ + range * cum_hi / total - 1;
        low_ = low_ + range * cum_lo / total;
        renormalize();
        model_.update(symbol);
        return symbol;
    }

private:
    static constexpr std::uint64_t kTop = std::uint64_t{1} << 32;
    static constexpr std::uint64_t kHalf = kTop >> 1;
    static constexpr std::uint64_t kQuarter = kTop >> 2;
    static constexpr std::uint64_t kThreeQuarters = kHalf + kQuarter;

    void renormalize() {
        while (true) {
            if (high_ < kHalf) {
                // nothing
            } else if (low_ >= kHalf) {
                low_ -= kHalf;
                high_ -= kHalf;
                code_ -= kHalf;
            } else if (low_ >= kQuarter && high_ < kThreeQuarters) {
                low_ -= kQuarter;
                high_ -= kQuarter;
                code_ -= kQuarter;
            } else {
                break;
            }
            low_ <<= 1;
            high_ = (high_ << 1) | 1;
            code_ = (code_ << 1) | (reader_.get() ? 1u : 0u);
        }
    }

    AdaptiveModel model_;
    BitReader reader_;
    std::uint64_t low_ = 0;
    std::uint64_t high_ = kTop - 1;
    std::uint64_t code_ = 0;
};

// Whole-sequence helpers.
inline EncodedStream encode(std::span<const std::uint64_t> symbols, std::uint64_t m, ProbMode mode) {
    ArithmeticEncoder enc(m, mode);
    for (std::uint64_t s : symbols) enc.encode_symbol(s);
    return enc.finish();
}

inline std::vector<std::uint64_t> decode(std::span<const std::uint8_t> bytes, std::uint64_t m,
                                         ProbMode mode, std::uint64_t n_symbols) {
    std::vector<std::uint64_t> out;
    out.reserve(static_cast<std::size_t>(n_symbols));
    ArithmeticDecoder dec(bytes, m, mode);
    for (std::uint64_t i = 0; i < n_symbols; ++i) out.push_back(dec.decode_symbol());
    return out;
}

} // namespace ugc
