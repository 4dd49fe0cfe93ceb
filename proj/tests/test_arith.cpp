#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "ugc/arithmetic_coder.hpp"

using namespace ugc;

namespace {

constexpr double kSlackBits = 32.0;

std::vector<std::uint64_t> random_sequence(std::mt19937_64& rng, std::uint64_t m, std::size_t n,
                                           bool skewed) {
    std::vector<std::uint64_t> seq(n);
    for (auto& s : seq) {
        if (skewed && uniform01(rng) < 0.9)
            s = 0;
        else
            s = rng() % m;
    }
    return seq;
}

void check_round_trip_and_length(const std::vector<std::uint64_t>& seq, std::uint64_t m,
                                 ProbMode mode) {
    const EncodedStream code = encode(seq, m, mode);
    const std::vector<std::uint64_t> back = decode(code.bytes, m, mode, seq.size());
    REQUIRE(back == seq);
    const double ideal = ideal_code_length_bits(seq, m, mode);
    CHECK(static_cast<double>(code.bit_length) <= std::ceil(ideal) + 1.0 + kSlackBits);
}

} // namespace

TEST_CASE("single symbol stream") {
    const std::vector<std::uint64_t> seq{0};
    const EncodedStream code = encode(seq, 2, ProbMode::kt);
    CHECK(decode(code.bytes, 2, ProbMode::kt, 1) == seq);
    // ideal is exactly one bit
    CHECK(static_cast<double>(code.bit_length) <= 2.0 + kSlackBits);
}

TEST_CASE("constant stream costs what the exact marginal says") {
    const std::vector<std::uint64_t> seq(8, 1);
    const BigRational q = marginal(seq, 2, ProbMode::kt);
    CHECK(q.num * BigInt(10321920) == q.den * BigInt(2027025)); // 15!!/(2*4*...*16)
    const double ideal = -log2_value(q);
    CHECK(ideal == Catch::Approx(2.348).margin(5e-4));
    const EncodedStream code = encode(seq, 2, ProbMode::kt);
    CHECK(decode(code.bytes, 2, ProbMode::kt, 8) == seq);
    CHECK(static_cast<double>(code.bit_length) <= std::ceil(ideal) + 1.0 + kSlackBits);
}

TEST_CASE("empty input emits the fixed one-byte terminator") {
    const EncodedStream code = encode({}, 2, ProbMode::kt);
    CHECK(code.bytes.size() == 1);
    CHECK(decode(code.bytes, 2, ProbMode::kt, 0).empty());
}

TEST_CASE("encoding is deterministic") {
    std::mt19937_64 rng(5);
    const auto seq = random_sequence(rng, 16, 300, false);
    const EncodedStream a = encode(seq, 16, ProbMode::laplace);
    const EncodedStream b = encode(seq, 16, ProbMode::laplace);
    CHECK(a.bytes == b.bytes);
    CHECK(a.bit_length == b.bit_length);
}

TEST_CASE("round trips across alphabet sizes and modes") {
    std::mt19937_64 rng(17);
    for (ProbMode mode : {ProbMode::kt, ProbMode::laplace}) {
        for (std::uint64_t m : {std::uint64_t{2}, std::uint64_t{16}, std::uint64_t{512},
                                std::uint64_t{65536}}) {
            const int trials = m <= 16 ? 40 : (m <= 512 ? 10 : 3);
            for (int t = 0; t < trials; ++t) {
                const std::size_t n = 1 + rng() % 2000;
                check_round_trip_and_length(random_sequence(rng, m, n, t % 2 == 0), m, mode);
            }
        }
    }
}

TEST_CASE("all-same m=2 degenerate input round-trips") {
    for (ProbMode mode : {ProbMode::kt, ProbMode::laplace}) {
        const std::vector<std::uint64_t> seq(1500, 1);
        check_round_trip_and_length(seq, 2, mode);
    }
}

TEST_CASE("mean excess over the ideal is tiny for long streams") {
    std::mt19937_64 rng(23);
    double excess_sum = 0.0;
    int cases = 0;
    for (std::uint64_t m : {std::uint64_t{4}, std::uint64_t{16}}) {
        for (int t = 0; t < 3; ++t) {
            const auto seq = random_sequence(rng, m, 10000 + t, false);
            const EncodedStream code = encode(seq, m, ProbMode::kt);
            REQUIRE(decode(code.bytes, m, ProbMode::kt, seq.size()) == seq);
            const double ideal = ideal_code_length_bits(seq, m, ProbMode::kt);
            excess_sum += (static_cast<double>(code.bit_length) - ideal) / ideal;
            ++cases;
        }
    }
    CHECK(excess_sum / cases <= 0.001);
}

TEST_CASE("trailing garbage is ignored") {
    std::mt19937_64 rng(31);
    const auto seq = random_sequence(rng, 16, 400, true);
    EncodedStream code = encode(seq, 16, ProbMode::kt);
    code.bytes.push_back(0xFF);
    code.bytes.push_back(0xAB);
    CHECK(decode(code.bytes, 16, ProbMode::kt, seq.size()) == seq);
}

TEST_CASE("a heavily truncated stream raises an error") {
    std::mt19937_64 rng(37);
    std::vector<std::uint64_t> seq(3000);
    for (auto& s : seq) s = rng() % 256;
    EncodedStream code = encode(seq, 256, ProbMode::kt);
    REQUIRE(code.bytes.size() > 64);
    const std::vector<std::uint8_t> cut(code.bytes.begin(),
                                        code.bytes.begin() + static_cast<long>(code.bytes.size() / 2));
    CHECK_THROWS_AS(decode(cut, 256, ProbMode::kt, seq.size()), Error);
}

TEST_CASE("model rejects out-of-range symbols") {
    CHECK_THROWS_AS(encode(std::vector<std::uint64_t>{4}, 4, ProbMode::kt), std::invalid_argument);
}

TEST_CASE("single-symbol alphabets are disallowed") {
    CHECK_THROWS_AS(encode(std::vector<std::uint64_t>{0}, 1, ProbMode::kt), std::invalid_argument);
    CHECK_THROWS_AS(AdaptiveModel(1, ProbMode::laplace), std::invalid_argument);
}
