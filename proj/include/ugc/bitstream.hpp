#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ugc/common.hpp"

namespace ugc {

// Bit writer, most significant bit first within each byte; the final
// partial byte is zero-padded.
class BitWriter {
public:
    void put(bool bit) {
        if (fill_ == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - fill_));
        fill_ = (fill_ + 1) & 7;
        ++bit_count_;
    }

    std::uint64_t bit_count() const { return bit_count_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take_bytes() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint32_t fill_ = 0;
    std::uint64_t bit_count_ = 0;
};

// Matching reader. Reads past the end yield zeros for up to `slack` bits
// (an arithmetic decoder legitimately looks a register width ahead);
// anything beyond that is a truncated stream.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes, std::uint64_t slack = 64)
        : bytes_(bytes), slack_(slack) {}

    bool get() {
        const std::uint64_t total = static_cast<std::uint64_t>(bytes_.size()) * 8;
        if (pos_ >= total) {
            if (++overrun_ > slack_) throw Error("bit stream truncated");
            return false;
        }
        const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return bit;
    }

    std::uint64_t bits_consumed() const { return pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint64_t slack_;
    std::uint64_t pos_ = 0;
    std::uint64_t overrun_ = 0;
};

} // namespace ugc
