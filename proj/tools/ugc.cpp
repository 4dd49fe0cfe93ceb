// Command-line front end: compress/decompress graphs, sample SBM graphs,
// run the benchmark harness, and run the analysis reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ugc/analysis.hpp"
#include "ugc/bench.hpp"
#include "ugc/container.hpp"
#include "ugc/graph.hpp"
#include "ugc/sbm.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ugc::Error("cannot open '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return bytes;
}

void write_file_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ugc::Error("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ugc::Error("write failed for '" + path + "'");
}

ugc::LabeledGraph load_graph_file(const std::string& path, ugc::VertexIndexing indexing,
                                  ugc::EdgeListStats* stats) {
    std::ifstream in(path);
    if (!in) throw ugc::Error("cannot open '" + path + "'");
    return ugc::load_edgelist(in, indexing, stats);
}

ugc::SbmParams load_params_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ugc::Error("cannot open '" + path + "'");
    return ugc::load_sbm_params(in);
}

ugc::ProbMode parse_mode(const std::string& mode) {
    if (mode == "kt") return ugc::ProbMode::kt;
    if (mode == "laplace") return ugc::ProbMode::laplace;
    throw CLI::ValidationError("--mode", "must be 'kt' or 'laplace'");
}

ugc::VertexIndexing parse_indexing(const std::string& s) {
    if (s == "auto") return ugc::VertexIndexing::autodetect;
    if (s == "zero") return ugc::VertexIndexing::zero_based;
    if (s == "one") return ugc::VertexIndexing::one_based;
    throw CLI::ValidationError("--indexing", "must be 'auto', 'zero' or 'one'");
}

void maybe_write_csv_file(const std::string& path, const std::string& content) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw ugc::Error("cannot open '" + path + "' for writing");
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal graph compressor for stochastic block models"};
    app.require_subcommand(1);

    // --- compress ---
    std::string c_input, c_output, c_mode = "kt", c_indexing = "auto";
    std::int64_t c_k = 0; // 0 = pick by default_k(n)
    auto* cmd_compress = app.add_subcommand("compress", "Compress an edge-list file to a .ugc container");
    cmd_compress->add_option("input", c_input, "Input edge-list file")->required();
    cmd_compress->add_option("-o,--output", c_output, "Output .ugc file")->required();
    cmd_compress->add_option("--k", c_k, "Block size (default: rule based on n)")
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{4}));
    cmd_compress->add_option("--mode", c_mode, "Probability assignment: kt|laplace")
        ->check(CLI::IsMember({"kt", "laplace"}));
    cmd_compress->add_option("--indexing", c_indexing, "Vertex id convention: auto|zero|one")
        ->check(CLI::IsMember({"auto", "zero", "one"}));

    // --- decompress ---
    std::string d_input, d_output;
    auto* cmd_decompress = app.add_subcommand("decompress", "Decompress a .ugc container to an edge list");
    cmd_decompress->add_option("input", d_input, "Input .ugc file")->required();
    cmd_decompress->add_option("-o,--output", d_output, "Output edge-list file")->required();

    // --- gen ---
    std::string g_params, g_output;
    std::uint64_t g_seed = 1;
    auto* cmd_gen = app.add_subcommand("gen", "Sample a stochastic block model graph");
    cmd_gen->add_option("--params", g_params, "SBM parameter JSON file (keys n, L, p, W)")->required();
    cmd_gen->add_option("--seed", g_seed, "RNG seed");
    cmd_gen->add_option("-o,--output", g_output, "Output edge-list file")->required();

    // --- bench ---
    std::vector<std::string> b_datasets, b_methods = {"ugc", "csr", "lz78-hilbert"};
    std::vector<std::int64_t> b_ks = {1, 2, 3, 4};
    std::vector<std::string> b_modes = {"kt"};
    std::string b_csv;
    auto* cmd_bench = app.add_subcommand("bench", "Benchmark compressors on edge-list datasets");
    cmd_bench->add_option("--datasets", b_datasets, "Edge-list files")->required()->expected(-1);
    cmd_bench->add_option("--ks", b_ks, "Block sizes for UGC")->delimiter(',')
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{4}));
    cmd_bench->add_option("--modes", b_modes, "Probability assignments")->delimiter(',')
        ->check(CLI::IsMember({"kt", "laplace"}));
    cmd_bench->add_option("--methods", b_methods, "Methods: ugc,csr,lz78-hilbert")->delimiter(',')
        ->check(CLI::IsMember({"ugc", "csr", "lz78-hilbert"}));
    cmd_bench->add_option("--csv", b_csv, "Also write the report as CSV to this path");

    // --- analyze ---
    auto* cmd_analyze = app.add_subcommand("analyze", "Model-facing reports");
    cmd_analyze->require_subcommand(1);

    std::string ns_params, ns_csv;
    std::uint64_t ns_window = 3;
    auto* cmd_nonstat = cmd_analyze->add_subcommand(
        "nonstationarity", "Window-distribution gaps for matrix orderings");
    cmd_nonstat->add_option("--params", ns_params, "SBM parameter JSON file")->required();
    cmd_nonstat->add_option("--window", ns_window, "Window length")->check(CLI::Range(1, 16));
    cmd_nonstat->add_option("--csv", ns_csv, "Also write CSV to this path");

    std::vector<std::string> u_params;
    std::int64_t u_k = 1;
    std::string u_mode = "kt", u_csv;
    std::uint64_t u_trials = 10, u_seed = 1;
    auto* cmd_univ = cmd_analyze->add_subcommand(
        "universality", "Mean code length vs conditional entropy across models");
    cmd_univ->add_option("--params", u_params, "SBM parameter JSON files")->required()->expected(-1);
    cmd_univ->add_option("--k", u_k, "Block size")->required()
        ->check(CLI::Range(std::int64_t{1}, std::int64_t{4}));
    cmd_univ->add_option("--mode", u_mode, "kt|laplace")->check(CLI::IsMember({"kt", "laplace"}));
    cmd_univ->add_option("--trials", u_trials, "Monte-Carlo trials per model")
        ->check(CLI::PositiveNumber);
    cmd_univ->add_option("--seed", u_seed, "Base seed (trial t uses seed+t)");
    cmd_univ->add_option("--csv", u_csv, "Also write CSV to this path");

    double bc_a = 3.0, bc_b = 1.0;
    std::uint64_t bc_L = 2, bc_trials = 10, bc_seed = 1;
    std::vector<std::uint64_t> bc_ns = {1024, 2048, 4096};
    std::int64_t bc_k = 3;
    std::string bc_mode = "kt", bc_csv;
    auto* cmd_bcgap = cmd_analyze->add_subcommand(
        "bc-gap", "Second-order length statistic for sparse symmetric SBMs (W = Q/n)");
    cmd_bcgap->add_option("--a", bc_a, "Within-community Q entry")->check(CLI::NonNegativeNumber);
    cmd_bcgap->add_option("--b", bc_b, "Cross-community Q entry")->check(CLI::NonNegativeNumber);
    cmd_bcgap->add_option("--L", bc_L, "Community count")->check(CLI::PositiveNumber);
    cmd_bcgap->add_option("--ns", bc_ns, "Vertex counts")->delimiter(',');
    cmd_bcgap->add_option("--k", bc_k, "Block size")->check(CLI::Range(std::int64_t{1}, std::int64_t{4}));
    cmd_bcgap->add_option("--mode", bc_mode, "kt|laplace")->check(CLI::IsMember({"kt", "laplace"}));
    cmd_bcgap->add_option("--trials", bc_trials, "Monte-Carlo trials per n")->check(CLI::PositiveNumber);
    cmd_bcgap->add_option("--seed", bc_seed, "Base seed (trial t uses seed+t)");
    cmd_bcgap->add_option("--csv", bc_csv, "Also write CSV to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*cmd_compress) {
            ugc::EdgeListStats stats;
            const ugc::LabeledGraph g = load_graph_file(c_input, parse_indexing(c_indexing), &stats);
            if (stats.duplicate_edges || stats.self_loops)
                std::cerr << "warning: dropped " << stats.duplicate_edges << " duplicate edge(s) and "
                          << stats.self_loops << " self-loop(s)\n";
            const std::uint32_t k =
                c_k > 0 ? static_cast<std::uint32_t>(c_k) : ugc::default_k(g.vertex_count());
            const std::vector<std::uint8_t> bytes = ugc::compress(g, k, parse_mode(c_mode));
            write_file_bytes(c_output, bytes);
            const double n = static_cast<double>(g.vertex_count());
            std::cout << "n=" << g.vertex_count() << " edges=" << g.edge_count() << " k=" << k
                      << " mode=" << c_mode << " bytes=" << bytes.size()
                      << " ratio_n2=" << static_cast<double>(bytes.size()) * 8.0 / (n * n) << '\n';
        } else if (*cmd_decompress) {
            const std::vector<std::uint8_t> bytes = read_file_bytes(d_input);
            const ugc::LabeledGraph g = ugc::decompress(bytes);
            std::ofstream out(d_output);
            if (!out) throw ugc::Error("cannot open '" + d_output + "' for writing");
            ugc::write_edgelist(g, out);
            std::cout << "n=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
        } else if (*cmd_gen) {
            const ugc::SbmParams params = load_params_file(g_params);
            const ugc::SbmSample sample = ugc::sample_sbm(params, g_seed);
            std::ofstream out(g_output);
            if (!out) throw ugc::Error("cannot open '" + g_output + "' for writing");
            ugc::write_edgelist(sample.graph, out);
            std::cout << "n=" << params.n << " edges=" << sample.graph.edge_count()
                      << " seed=" << g_seed << '\n';
        } else if (*cmd_bench) {
            ugc::BenchOptions options;
            options.ks.assign(b_ks.begin(), b_ks.end());
            options.modes.clear();
            for (const std::string& m : b_modes) options.modes.push_back(parse_mode(m));
            options.methods = b_methods;
            const ugc::BenchReport report = ugc::run_bench(b_datasets, options);
            ugc::write_table(report, std::cout);
            std::ostringstream csv;
            ugc::write_csv(report, csv);
            maybe_write_csv_file(b_csv, csv.str());
        } else if (*cmd_nonstat) {
            const ugc::SbmParams params = load_params_file(ns_params);
            const ugc::NonstationarityReport report =
                ugc::nonstationarity_report(params, static_cast<std::size_t>(ns_window));
            for (const ugc::WindowGap& row : report.rows) {
                std::cout << to_string(row.ordering) << ": ";
                if (row.gap > 0.0)
                    std::cout << "max gap " << row.gap << " between windows at positions "
                              << row.pos_a + 1 << " and " << row.pos_b + 1 << " (pattern "
                              << row.pattern << ", probabilities " << row.prob_a << " vs "
                              << row.prob_b << ")\n";
                else
                    std::cout << "no gap found (window distributions identical)\n";
            }
            std::ostringstream csv;
            ugc::write_csv(report, csv);
            maybe_write_csv_file(ns_csv, csv.str());
        } else if (*cmd_univ) {
            std::vector<ugc::SbmParams> params_list;
            for (const std::string& path : u_params) params_list.push_back(load_params_file(path));
            const auto points = ugc::universality_curve(
                params_list, static_cast<std::uint32_t>(u_k), parse_mode(u_mode),
                static_cast<std::uint32_t>(u_trials), u_seed);
            std::ostringstream csv;
            ugc::write_csv(std::span<const ugc::UniversalityPoint>(points), csv);
            std::cout << csv.str();
            maybe_write_csv_file(u_csv, csv.str());
        } else if (*cmd_bcgap) {
            const double lambda = (bc_a + (static_cast<double>(bc_L) - 1) * bc_b) / static_cast<double>(bc_L);
            std::vector<ugc::GapPoint> points;
            for (std::uint64_t n : bc_ns) {
                ugc::SbmParams params;
                params.n = static_cast<std::size_t>(n);
                params.L = static_cast<std::size_t>(bc_L);
                params.p.assign(params.L, 1.0 / static_cast<double>(bc_L));
                params.w.assign(params.L, std::vector<double>(params.L, bc_b / static_cast<double>(n)));
                for (std::size_t l = 0; l < params.L; ++l) params.w[l][l] = bc_a / static_cast<double>(n);
                points.push_back(ugc::second_order_gap(params, static_cast<std::uint32_t>(bc_k),
                                                       parse_mode(bc_mode),
                                                       static_cast<std::uint32_t>(bc_trials), bc_seed));
            }
            std::cout << "lambda=" << lambda
                      << " gwt_bc_entropy_bits=" << ugc::gwt_bc_entropy_bits(lambda) << '\n';
            std::ostringstream csv;
            ugc::write_csv(std::span<const ugc::GapPoint>(points), csv);
            std::cout << csv.str();
            maybe_write_csv_file(bc_csv, csv.str());
        }
    } catch (const ugc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
