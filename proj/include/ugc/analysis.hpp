#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ugc/common.hpp"
#include "ugc/container.hpp"
#include "ugc/sbm.hpp"

namespace ugc {

enum class OrderingKind { horizontal, vertical, diagonal };

inline const char* to_string(OrderingKind kind) {
    switch (kind) {
        case OrderingKind::horizontal: return "horizontal";
        case OrderingKind::vertical: return "vertical";
        default: return "diagonal";
    }
}

// The sequence of unordered pairs obtained by listing the upper triangle
// row-wise, column-wise, or diagonal-by-diagonal (wrapping).
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> ordering_pairs(OrderingKind kind,
                                                                           std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seq;
    seq.reserve(pair_count(n));
    switch (kind) {
        case OrderingKind::horizontal:
            for (std::uint32_t i = 0; i + 1 < n; ++i)
                for (std::uint32_t j = i + 1; j < n; ++j) seq.emplace_back(i, j);
            break;
        case OrderingKind::vertical:
            for (std::uint32_t j = 1; j < n; ++j)
                for (std::uint32_t i = 0; i < j; ++i) seq.emplace_back(i, j);
            break;
        case OrderingKind::diagonal:
            for (std::uint32_t d = 1; d <= n / 2; ++d) {
                const std::uint32_t len = (2 * d == n) ? n / 2 : static_cast<std::uint32_t>(n);
                for (std::uint32_t i = 0; i < len; ++i) {
                    const auto a = i;
                    const auto b = static_cast<std::uint32_t>((i + d) % n);
                    seq.emplace_back(std::min(a, b), std::max(a, b));
                }
            }
            break;
    }
    return seq;
}

struct EdgeConstraint {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    bool value = false;
};

// Exact P(A_{i1 j1} = b1, ...) by summing over all L^n community
// assignments; guarded to n <= 12.
inline double joint_probability(const SbmParams& params, std::span<const EdgeConstraint> constraints) {
    params.validate();
    if (params.n > 12) throw std::invalid_argument("joint probability guarded to n <= 12");
    for (const auto& c : constraints)
        if (c.i >= params.n || c.j >= params.n || c.i == c.j)
            throw std::invalid_argument("constraint references an invalid pair");

    std::size_t n_assign = 1;
    for (std::size_t i = 0; i < params.n; ++i) n_assign *= params.L;

    double total = 0.0;
    std::vector<std::uint32_t> x(params.n);
    for (std::size_t code = 0; code < n_assign; ++code) {
        std::size_t c = code;
        double px = 1.0;
        for (std::size_t i = 0; i < params.n; ++i) {
            x[i] = static_cast<std::uint32_t>(c % params.L);
            c /= params.L;
            px *= params.p[x[i]];
        }
        for (const auto& cons : constraints) {
            const double w = params.w[x[cons.i]][x[cons.j]];
            px *= cons.value ? w : 1.0 - w;
        }
        total += px;
    }
    return total;
}

struct WindowGap {
    OrderingKind ordering;
    std::size_t pos_a = 0; // window start positions (0-based)
    std::size_t pos_b = 0;
    std::uint32_t pattern = 0; // bit pattern with the largest probability gap
    double prob_a = 0.0;
    double prob_b = 0.0;
    double gap = 0.0;
};

struct NonstationarityReport {
    std::size_t window = 0;
    std::vector<WindowGap> rows; // one per ordering
};

// For each ordering, the pair of window positions whose length-`window`
// marginal distributions differ the most (gap 0 means no stationarity
// violation was detectable at this window length).
inline NonstationarityReport nonstationarity_report(const SbmParams& params, std::size_t window = 3) {
    params.validate();
    if (window < 1 || window > 16) throw std::invalid_argument("window length out of range");
    NonstationarityReport report;
    report.window = window;

    for (OrderingKind kind :
         {OrderingKind::horizontal, OrderingKind::vertical, OrderingKind::diagonal}) {
        const auto seq = ordering_pairs(kind, params.n);
        const std::size_t positions = seq.size() >= window ? seq.size() - window + 1 : 0;
        const std::uint32_t patterns = 1u << window;

        std::vector<std::vector<double>> dist(positions, std::vector<double>(patterns, 0.0));
        std::vector<EdgeConstraint> cons(window);
        for (std::size_t s = 0; s < positions; ++s) {
            for (std::uint32_t pat = 0; pat < patterns; ++pat) {
                for (std::size_t t = 0; t < window; ++t)
                    cons[t] = EdgeConstraint{seq[s + t].first, seq[s + t].second,
                                             ((pat >> t) & 1u) != 0};
                dist[s][pat] = joint_probability(params, cons);
            }
        }

        WindowGap best{kind, 0, 0, 0, 0.0, 0.0, 0.0};
        for (std::size_t a = 0; a < positions; ++a) {
            for (std::size_t b = a + 1; b < positions; ++b) {
                for (std::uint32_t pat = 0; pat < patterns; ++pat) {
                    const double gap = std::abs(dist[a][pat] - dist[b][pat]);
                    if (gap > best.gap) {
                        best = WindowGap{kind, a, b, pat, dist[a][pat], dist[b][pat], gap};
                    }
                }
            }
        }
        report.rows.push_back(best);
    }
    return report;
}

struct UniversalityPoint {
    std::size_t n = 0;
    double mean_length_bits = 0.0;
    double std_error_bits = 0.0;
    double h_cond_bits = 0.0;
    double ratio = 0.0; // infinity sentinel when h_cond is zero
};

// Monte-Carlo E[len(C_k)] against the conditional-entropy denominator for
// each parameter set. Per-trial seeds are seed + trial index.
inline std::vector<UniversalityPoint> universality_curve(std::span<const SbmParams> params_list,
                                                         std::uint32_t k, ProbMode mode,
                                                         std::uint32_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::vector<UniversalityPoint> out;
    for (const SbmParams& params : params_list) {
        params.validate();
        double sum = 0.0, sum_sq = 0.0;
        for (std::uint32_t t = 0; t < trials; ++t) {
            const SbmSample sample = sample_sbm(params, seed + t);
            const double bits = static_cast<double>(compress(sample.graph, k, mode).size()) * 8.0;
            sum += bits;
            sum_sq += bits * bits;
        }
        UniversalityPoint pt;
        pt.n = params.n;
        pt.mean_length_bits = sum / trials;
        pt.std_error_bits =
            trials > 1 ? std::sqrt(std::max(0.0, (sum_sq / trials - pt.mean_length_bits * pt.mean_length_bits) /
                                                     (trials - 1)))
                       : 0.0;
        pt.h_cond_bits = conditional_entropy_bits(params);
        pt.ratio = pt.h_cond_bits > 0.0 ? pt.mean_length_bits / pt.h_cond_bits
                                        : std::numeric_limits<double>::infinity();
        out.push_back(pt);
    }
    return out;
}

// BC entropy of a Poisson(lambda) Galton-Watson tree: (lambda/2) log2(e/lambda).
inline double gwt_bc_entropy_bits(double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("mean degree must be positive");
    return lambda / 2.0 * std::log2(std::numbers::e / lambda);
}

struct GapPoint {
    std::size_t n = 0;
    double statistic = 0.0; // (mean length - m log2 n) / n
    double std_error = 0.0; // of the statistic
    double mean_length_bits = 0.0;
    double lambda = 0.0;
};

// Second-order statistic for a sparse SBM with W = Q/n: subtracts the
// m log2(n) first-order term (m = expected edge count) and normalizes
// by n. Comparable against gwt_bc_entropy_bits(lambda).
inline GapPoint second_order_gap(const SbmParams& params, std::uint32_t k, ProbMode mode,
                                 std::uint32_t trials, std::uint64_t seed) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const double n = static_cast<double>(params.n);
    const double lambda = n * params.edge_density();
    const double expected_edges = static_cast<double>(pair_count(params.n)) * lambda / n;

    double sum = 0.0, sum_sq = 0.0;
    for (std::uint32_t t = 0; t < trials; ++t) {
        const SbmSample sample = sample_sbm(params, seed + t);
        const double bits = static_cast<double>(compress(sample.graph, k, mode).size()) * 8.0;
        sum += bits;
        sum_sq += bits * bits;
    }
    const double mean = sum / trials;
    const double var = trials > 1 ? std::max(0.0, (sum_sq / trials - mean * mean) / (trials - 1)) : 0.0;

    GapPoint pt;
    pt.n = params.n;
    pt.lambda = lambda;
    pt.mean_length_bits = mean;
    pt.statistic = (mean - expected_edges * std::log2(n)) / n;
    pt.std_error = std::sqrt(var) / n;
    return pt;
}

// CSV emitters (one row per entry, header included).
inline void write_csv(const NonstationarityReport& report, std::ostream& out) {
    out << "ordering,window,pos_a,pos_b,pattern,prob_a,prob_b,gap\n";
    for (const WindowGap& row : report.rows) {
        out << to_string(row.ordering) << ',' << report.window << ',' << row.pos_a << ','
            << row.pos_b << ',' << row.pattern << ',' << row.prob_a << ',' << row.prob_b << ','
            << row.gap << '\n';
    }
}

inline void write_csv(std::span<const UniversalityPoint> points, std::ostream& out) {
    out << "n,mean_length_bits,std_error_bits,h_cond_bits,ratio\n";
    for (const UniversalityPoint& pt : points) {
        out << pt.n << ',' << pt.mean_length_bits << ',' << pt.std_error_bits << ','
            << pt.h_cond_bits << ',' << pt.ratio << '\n';
    }
}

inline void write_csv(std::span<const GapPoint> points, std::ostream& out) {
    out << "n,lambda,mean_length_bits,statistic,std_error\n";
    for (const GapPoint& pt : points) {
        out << pt.n << ',' << pt.lambda << ',' << pt.mean_length_bits << ',' << pt.statistic << ','
            << pt.std_error << '\n';
    }
}

} // namespace ugc
