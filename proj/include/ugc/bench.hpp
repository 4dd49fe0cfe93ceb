#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ugc/baselines.hpp"
#include "ugc/common.hpp"
#include "ugc/container.hpp"
#include "ugc/graph.hpp"

namespace ugc {

struct BenchEntry {
    std::string dataset;
    std::string method; // "ugc", "csr", "lz78-hilbert"
    std::uint32_t k = 0; // 0 for baselines
    std::string mode;    // "kt"/"laplace" for ugc, empty otherwise
    std::uint64_t output_bits = 0;
    double ratio_n2 = 0.0;    // output / n^2 bits
    double ratio_pairs = 0.0; // output / (n(n-1)/2) bits
    double ratio_file = 0.0;  // output / (edge-list file size in bits)
    double seconds = 0.0;
    bool verified = true; // round-trip check (ugc entries)
};

struct BenchReport {
    std::vector<BenchEntry> entries;
};

struct BenchOptions {
    std::vector<std::uint32_t> ks{1, 2, 3, 4};
    std::vector<ProbMode> modes{ProbMode::kt};
    std::vector<std::string> methods{"ugc", "csr", "lz78-hilbert"};
};

// Runs every requested method over every dataset. Each UGC measurement is
// preceded by a decompress-and-compare round trip; a mismatch fails the
// run rather than reporting a bogus size. Dataset files are read as edge
// lists; acquisition is manual and documented in the README.
inline BenchReport run_bench(const std::vector<std::string>& dataset_paths,
                             const BenchOptions& options = {}) {
    BenchReport report;
    for (const std::string& path : dataset_paths) {
        std::ifstream in(path);
        if (!in) throw Error("bench: cannot open dataset '" + path + "'");
        std::uintmax_t file_bytes = 0;
        std::error_code ec;
        file_bytes = std::filesystem::file_size(path, ec);
        if (ec) throw Error("bench: cannot stat dataset '" + path + "'");

        LabeledGraph g = [&] {
            try {
                return load_edgelist(in);
            } catch (const Error& e) {
                throw Error("bench: dataset '" + path + "': " + e.what());
            }
        }();

        const double n = static_cast<double>(g.vertex_count());
        const double denom_n2 = n * n;
        const double denom_pairs = static_cast<double>(g.pair_count());
        const double denom_file = static_cast<double>(file_bytes) * 8.0;
        const std::string name = std::filesystem::path(path).filename().string();

        const auto add_entry = [&](BenchEntry entry, std::uint64_t bits, double secs) {
            entry.output_bits = bits;
            entry.ratio_n2 = static_cast<double>(bits) / denom_n2;
            entry.ratio_pairs = denom_pairs > 0 ? static_cast<double>(bits) / denom_pairs : 0.0;
            entry.ratio_file = denom_file > 0 ? static_cast<double>(bits) / denom_file : 0.0;
            entry.seconds = secs;
            report.entries.push_back(std::move(entry));
        };

        for (const std::string& method : options.methods) {
            if (method == "ugc") {
                for (std::uint32_t k : options.ks) {
                    for (ProbMode mode : options.modes) {
                        const auto t0 = std::chrono::steady_clock::now();
                        const std::vector<std::uint8_t> bytes = compress(g, k, mode);
                        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
                        if (!(decompress(bytes) == g))
                            throw Error("bench: round trip failed for '" + path + "' k=" +
                                        std::to_string(k));
                        BenchEntry entry;
                        entry.dataset = name;
                        entry.method = "ugc";
                        entry.k = k;
                        entry.mode = to_string(mode);
                        add_entry(std::move(entry), bytes.size() * 8, dt.count());
                    }
                }
            } else if (method == "csr") {
                const auto t0 = std::chrono::steady_clock::now();
                const std::uint64_t bits = csr_size_bits(g);
                const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
                BenchEntry entry;
                entry.dataset = name;
                entry.method = "csr";
                add_entry(std::move(entry), bits, dt.count());
            } else if (method == "lz78-hilbert") {
                const auto t0 = std::chrono::steady_clock::now();
                const std::uint64_t bits = lz78_size_bits(hilbert_linearize(g));
                const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
                BenchEntry entry;
                entry.dataset = name;
                entry.method = "lz78-hilbert";
                add_entry(std::move(entry), bits, dt.count());
            } else {
                throw Error("bench: unknown method '" + method + "'");
            }
        }
    }
    return report;
}

inline void write_csv(const BenchReport& report, std::ostream& out) {
    out << "dataset,method,k,mode,output_bits,ratio_n2,ratio_pairs,ratio_file,seconds\n";
    for (const BenchEntry& e : report.entries) {
        out << e.dataset << ',' << e.method << ',';
        if (e.k > 0) out << e.k;
        out << ',' << e.mode << ',' << e.output_bits << ',' << e.ratio_n2 << ',' << e.ratio_pairs
            << ',' << e.ratio_file << ',' << e.seconds << '\n';
    }
}

inline void write_table(const BenchReport& report, std::ostream& out) {
    out << std::left << std::setw(20) << "dataset" << std::setw(14) << "method" << std::setw(4)
        << "k" << std::setw(9) << "mode" << std::right << std::setw(14) << "output_bits"
        << std::setw(12) << "ratio_n2" << std::setw(12) << "ratio_pairs" << std::setw(12)
        << "ratio_file" << std::setw(10) << "seconds" << '\n';
    for (const BenchEntry& e : report.entries) {
        std::ostringstream k;
        if (e.k > 0) k << e.k;
        out << std::left << std::setw(20) << e.dataset << std::setw(14) << e.method << std::setw(4)
            << k.str() << std::setw(9) << e.mode << std::right << std::setw(14) << e.output_bits
            << std::setw(12) << std::setprecision(4) << e.ratio_n2 << std::setw(12) << e.ratio_pairs
            << std::setw(12) << e.ratio_file << std::setw(10) << std::setprecision(3) << e.seconds
            << '\n';
    }
}

} // namespace ugc
