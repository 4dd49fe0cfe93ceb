// Acceptance suite: runs the project-level criteria end to end and prints
// one PASS/FAIL line per criterion (SKIP for the optional dataset check
// when the dataset is not present). Exit code = number of failures.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ugc/analysis.hpp"
#include "ugc/arithmetic_coder.hpp"
#include "ugc/bench.hpp"
#include "ugc/block_codec.hpp"
#include "ugc/container.hpp"
#include "ugc/sbm.hpp"

using namespace ugc;

namespace {

struct Line {
    int criterion;
    int status; // 0 pass, 1 fail, 2 skip
    std::string detail;
};

std::vector<Line> lines;

void report(int criterion, bool pass, const std::string& detail) {
    lines.push_back({criterion, pass ? 0 : 1, detail});
}

void report_skip(int criterion, const std::string& detail) {
    lines.push_back({criterion, 2, detail});
}

SbmParams er_params(std::size_t n, double p) {
    SbmParams params;
    params.n = n;
    params.L = 1;
    params.p = {1.0};
    params.w = {{p}};
    return params;
}

SbmParams two_block(std::size_t n, double win, double wout) {
    SbmParams params;
    params.n = n;
    params.L = 2;
    params.p = {0.5, 0.5};
    params.w = {{win, wout}, {wout, win}};
    return params;
}

struct Moments {
    double mean = 0.0;
    double std_error = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    Moments m;
    for (double x : xs) m.mean += x;
    m.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double var = 0.0;
        for (double x : xs) var += (x - m.mean) * (x - m.mean);
        var /= static_cast<double>(xs.size() - 1);
        m.std_error = std::sqrt(var / static_cast<double>(xs.size()));
    }
    return m;
}

// --- criteria 1 and 3: lossless round trips + coder near-optimality -------

void run_round_trip_criteria() {
    // 500 graphs spanning n in [30, 512] (most n not divisible by 2, 3 or
    // 4), each compressed under every (k, mode) combination.
    std::mt19937_64 seed_gen(20240601);
    const double densities[] = {0.02, 0.05, 0.1, 0.2, 0.35, 0.5};
    const int n_graphs = 500;

    std::size_t graphs_checked = 0;
    std::size_t cases = 0;
    std::size_t bad_round_trips = 0;
    std::size_t bound_violations = 0;
    double excess_sum = 0.0;
    std::size_t long_streams = 0;

    for (int i = 0; i < n_graphs; ++i) {
        const std::size_t n = 30 + static_cast<std::size_t>(i) * 482 / (n_graphs - 1);
        const double d = densities[i % 6];
        const LabeledGraph g = i % 3 == 2
                                   ? sample_sbm(two_block(n, d, d / 4.0), seed_gen()).graph
                                   : sample_sbm(er_params(n, d), seed_gen()).graph;
        ++graphs_checked;
        for (std::uint32_t k : {1u, 2u, 3u, 4u}) {
            for (ProbMode mode : {ProbMode::kt, ProbMode::laplace}) {
                ++cases;
                const std::vector<std::uint8_t> bytes = compress(g, k, mode);
                if (!(decompress(bytes) == g)) {
                    ++bad_round_trips;
                    continue;
                }
                const BlockSymbolSequences seqs = decompose(g, k);
                std::vector<std::vector<std::uint64_t>> streams{seqs.ut};
                if (k > 1) streams.push_back(seqs.diag);
                for (const auto& stream : streams) {
                    const EncodedStream enc = encode(stream, seqs.m, mode);
                    const double ideal = ideal_code_length_bits(stream, seqs.m, mode);
                    if (static_cast<double>(enc.bit_length) > std::ceil(ideal) + 1.0 + 32.0)
                        ++bound_violations;
                    if (stream.size() >= 10000 && ideal > 0.0) {
                        excess_sum += (static_cast<double>(enc.bit_length) - ideal) / ideal;
                        ++long_streams;
                    }
                }
            }
        }
    }

    {
        std::ostringstream detail;
        detail << "lossless round trip on " << graphs_checked << " graphs x 8 (k,mode) combos = "
               << cases << " cases, n in [30,512]: " << bad_round_trips << " mismatches";
        report(1, bad_round_trips == 0 && graphs_checked >= 500, detail.str());
    }
    {
        const double mean_excess = long_streams > 0 ? excess_sum / static_cast<double>(long_streams) : 1.0;
        std::ostringstream detail;
        detail << "per-stream length <= ceil(-log2 q)+1+32 (" << bound_violations
               << " violations); mean excess on " << long_streams
               << " streams with N>=10^4 = " << mean_excess * 100.0 << "%";
        report(3, bound_violations == 0 && long_streams > 0 && mean_excess <= 0.001, detail.str());
    }
}

// --- criterion 2: chain rule vs closed-form marginals ---------------------

void run_marginal_consistency() {
    std::mt19937_64 rng(77);
    const std::uint64_t ms[] = {2, 4, 16};
    std::size_t mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t m = ms[trial % 3];
        const std::size_t n = 1 + rng() % 64;
        std::vector<std::uint64_t> seq(n);
        for (auto& s : seq) s = rng() % m;
        const ProbMode mode = trial % 2 == 0 ? ProbMode::kt : ProbMode::laplace;

        AdaptiveModel model(m, mode);
        BigRational chain{1, 1};
        for (std::uint64_t s : seq) {
            const Rational r = model.conditional(s);
            chain.num *= r.num;
            chain.den *= r.den;
            model.update(s);
        }
        if (!(marginal(seq, m, mode) == chain)) ++mismatches;
    }
    std::ostringstream detail;
    detail << "closed-form marginal equals the product of conditionals exactly on 200 sequences "
              "(N<=64, m in {2,4,16}): "
           << mismatches << " mismatches";
    report(2, mismatches == 0, detail.str());
}

// --- criterion 4: expected-length bounds, measured with the real coder ----

void run_length_bound_criterion() {
    std::mt19937_64 rng(4242);
    const std::uint64_t m = 4;
    const std::size_t n = 1000;
    const int trials = 500;
    double kt_bits = 0.0, laplace_bits = 0.0;
    std::vector<std::uint64_t> seq(n);
    for (int t = 0; t < trials; ++t) {
        for (auto& s : seq) s = rng() % m;
        kt_bits += static_cast<double>(encode(seq, m, ProbMode::kt).bit_length);
        laplace_bits += static_cast<double>(encode(seq, m, ProbMode::laplace).bit_length);
    }
    kt_bits /= trials;
    laplace_bits /= trials;
    const double kt_bound = kt_length_bound_bits(n, m, 2.0);
    const double laplace_bound = laplace_length_bound_bits(n, m, 2.0);
    std::ostringstream detail;
    detail << "iid uniform m=4, N=1000, 500 trials: mean KT length " << kt_bits << " <= "
           << kt_bound << "; mean Laplace length " << laplace_bits << " <= " << laplace_bound;
    report(4, kt_bits <= kt_bound && laplace_bits <= laplace_bound, detail.str());
}

// --- criterion 5: ER entropy-rate reproduction -----------------------------

void run_er_rate_criterion() {
    const SbmParams params = er_params(1024, 0.01);
    const double h = binary_entropy(0.01);
    std::vector<double> rates;
    for (int t = 0; t < 20; ++t) {
        const SbmSample s = sample_sbm(params, 90000 + t);
        const double bits = static_cast<double>(compress(s.graph, 1, ProbMode::kt).size()) * 8.0;
        rates.push_back(bits / static_cast<double>(pair_count(1024)));
    }
    const double mean = moments(rates).mean;
    std::ostringstream detail;
    detail << "ER(1024,0.01), k=1, KT, 20 trials: mean bits/pair = " << mean << ", window ["
           << 0.97 * h << ", " << 1.06 * h << "]";
    report(5, mean >= 0.97 * h && mean <= 1.06 * h, detail.str());
}

// --- criterion 6: universality ratio trend ---------------------------------

void run_universality_trend() {
    std::vector<double> ratios;
    for (std::size_t n : {std::size_t{128}, std::size_t{256}, std::size_t{512}}) {
        const double f = std::log2(static_cast<double>(n)) / static_cast<double>(n);
        const SbmParams params = two_block(n, 3.0 * f, 1.0 * f);
        const std::vector<SbmParams> list{params};
        const auto points = universality_curve(list, 3, ProbMode::kt, 10, 31337);
        ratios.push_back(points[0].ratio);
    }
    std::ostringstream detail;
    detail << "E[len]/H_cond at n in {128,256,512} (k=3, 10 trials): " << ratios[0] << " > "
           << ratios[1] << " > " << ratios[2] << ", final <= 1.30";
    report(6, ratios[0] > ratios[1] && ratios[1] > ratios[2] && ratios[2] <= 1.30, detail.str());
}

// --- criterion 7: ordering counterexamples ---------------------------------

void run_ordering_counterexamples() {
    const SbmParams params = [] {
        SbmParams p;
        p.n = 4;
        p.L = 2;
        p.p = {0.5, 0.5};
        p.w = {{1.0, 0.0}, {0.0, 1.0}};
        return p;
    }();
    const auto P = [&](std::initializer_list<EdgeConstraint> cons) {
        return joint_probability(params, std::vector<EdgeConstraint>(cons));
    };

    const bool horizontal = std::abs(P({{0, 1, true}, {0, 2, false}, {0, 3, true}}) - 0.125) < 1e-12 &&
                            P({{1, 2, true}, {1, 3, false}, {2, 3, true}}) == 0.0;
    const bool vertical = P({{0, 1, true}, {0, 2, false}, {1, 2, true}}) == 0.0 &&
                          std::abs(P({{0, 3, true}, {1, 3, false}, {2, 3, true}}) - 0.125) < 1e-12;
    const bool diagonal = std::abs(P({{0, 1, false}, {1, 2, true}, {2, 3, true}}) - 0.125) < 1e-12 &&
                          P({{2, 3, false}, {0, 3, true}, {0, 2, true}}) == 0.0;

    std::ostringstream detail;
    detail << "window probabilities for the two-clique model: horizontal (1/8 vs 0) "
           << (horizontal ? "ok" : "wrong") << ", vertical " << (vertical ? "ok" : "wrong")
           << ", diagonal " << (diagonal ? "ok" : "wrong");
    report(7, horizontal && vertical && diagonal, detail.str());
}

// --- criterion 8: entropy sandwich ------------------------------------------

void run_entropy_sandwich() {
    std::mt19937_64 rng(808);
    std::size_t violations = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng() % 4; // 2..5
        const SbmParams params = two_block(n, uniform01(rng), uniform01(rng));
        const double lo = conditional_entropy_bits(params);
        const double hi = marginal_entropy_upper_bits(params);
        const double exact = exact_entropy_bruteforce_bits(params);
        if (!(exact >= lo - 1e-9 && exact <= hi + 1e-9)) ++violations;
    }
    std::ostringstream detail;
    detail << "conditional <= brute force <= marginal-upper on 50 random tiny SBMs: " << violations
           << " violations";
    report(8, violations == 0, detail.str());
}

// --- criterion 9: BC-entropy second-order statistic -------------------------

void run_bc_gap_criterion() {
    const double sigma = gwt_bc_entropy_bits(2.0); // 0.442695...
    std::vector<GapPoint> points;
    const std::uint32_t trials = 12;
    for (std::size_t n : {std::size_t{1024}, std::size_t{2048}, std::size_t{4096}}) {
        const SbmParams params =
            two_block(n, 3.0 / static_cast<double>(n), 1.0 / static_cast<double>(n));
        points.push_back(second_order_gap(params, 3, ProbMode::kt, trials, 171700 + n));
    }
    const GapPoint& last = points.back();
    const bool bound_ok = last.statistic <= sigma + 1.0;
    bool monotone_ok = true;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const double tol =
            2.0 * std::sqrt(points[i - 1].std_error * points[i - 1].std_error +
                            points[i].std_error * points[i].std_error);
        if (points[i].statistic > points[i - 1].statistic + tol) monotone_ok = false;
    }
    std::ostringstream detail;
    detail << "(mean len - m log2 n)/n for lambda=2, k=3: " << points[0].statistic << " -> "
           << points[1].statistic << " -> " << points[2].statistic << " (target <= "
           << sigma + 1.0 << " at n=4096, non-increasing within 2 SE)";
    report(9, bound_ok && monotone_ok, detail.str());
}

// --- criterion 10 (optional): dataset regression -----------------------------

void run_dataset_regression(const std::string& datasets_dir) {
    namespace fs = std::filesystem;
    fs::path ppi;
    for (const char* name : {"ppi.el", "ppi.txt", "ppi.edges", "PPI.el"}) {
        const fs::path candidate = fs::path(datasets_dir) / name;
        if (fs::exists(candidate)) {
            ppi = candidate;
            break;
        }
    }
    if (ppi.empty()) {
        report_skip(10, "PPI dataset not present under '" + datasets_dir +
                            "' (optional; fetch manually, see README)");
        return;
    }
    BenchOptions options;
    options.ks = {2};
    options.modes = {ProbMode::kt};
    options.methods = {"ugc"};
    const BenchReport rep = run_bench({ppi.string()}, options);
    const double ratio = rep.entries.at(0).ratio_n2;
    const double target = 0.0226;
    std::ostringstream detail;
    detail << "PPI k=2 KT ratio (n^2 convention) = " << ratio << ", target " << target
           << " +/-15%; deviations from the input-length convention are reported, not failed";
    report(10, std::abs(ratio - target) <= 0.15 * target, detail.str());
}

// --- criterion 11: baseline direction ---------------------------------------

void run_baseline_direction() {
    double ugc_bits = 0.0, lz_bits = 0.0, csr_bits = 0.0;
    const int trials = 3;
    for (int t = 0; t < trials; ++t) {
        const SbmSample s = sample_sbm(er_params(1024, 0.01), 55000 + t);
        ugc_bits += static_cast<double>(compress(s.graph, 1, ProbMode::kt).size()) * 8.0;
        lz_bits += static_cast<double>(lz78_size_bits(hilbert_linearize(s.graph)));
        csr_bits += static_cast<double>(csr_size_bits(s.graph));
    }
    std::ostringstream detail;
    detail << "ER(1024,0.01) mean bits over " << trials << " samples: ugc(k=1) " << ugc_bits / trials
           << " < lz78-hilbert " << lz_bits / trials << " and < csr " << csr_bits / trials;
    report(11, ugc_bits < lz_bits && ugc_bits < csr_bits, detail.str());
}

} // namespace

int main(int argc, char** argv) {
    std::string datasets_dir = "data";
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--datasets-dir") datasets_dir = argv[i + 1];

    run_round_trip_criteria();     // criteria 1 and 3
    run_marginal_consistency();    // criterion 2
    run_length_bound_criterion();  // criterion 4
    run_er_rate_criterion();       // criterion 5
    run_universality_trend();      // criterion 6
    run_ordering_counterexamples(); // criterion 7
    run_entropy_sandwich();        // criterion 8
    run_bc_gap_criterion();        // criterion 9
    run_dataset_regression(datasets_dir); // criterion 10 (optional)
    run_baseline_direction();      // criterion 11

    std::sort(lines.begin(), lines.end(),
              [](const Line& a, const Line& b) { return a.criterion < b.criterion; });
    int failures = 0;
    for (const Line& line : lines) {
        const char* tag = line.status == 0 ? "[PASS]" : line.status == 1 ? "[FAIL]" : "[SKIP]";
        std::cout << tag << " criterion " << line.criterion << ": " << line.detail << '\n';
        if (line.status == 1) ++failures;
    }
    std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILURES")
              << std::endl;
    return failures;
}
