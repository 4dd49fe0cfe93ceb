#pragma once

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <vector>

#include <json.hpp>

#include "ugc/common.hpp"
#include "ugc/graph.hpp"

namespace ugc {

// Stochastic block model parameters: community prior p over L communities
// and symmetric edge-probability matrix w (callers that think in terms of a
// scaling f and a base matrix Q pass w = f*Q; only the product matters).
struct SbmParams {
    std::size_t n = 0;
    std::size_t L = 0;
    std::vector<double> p;
    std::vector<std::vector<double>> w;

    void validate() const {
        if (n < 1) throw std::invalid_argument("sbm: n must be >= 1");
        if (L < 1 || p.size() != L || w.size() != L)
            throw std::invalid_argument("sbm: L, p, W dimensions disagree");
        double sum = 0.0;
        for (double pi : p) {
            if (pi < 0.0) throw std::invalid_argument("sbm: negative community probability");
            sum += pi;
        }
        if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("sbm: p must sum to 1");
        for (std::size_t a = 0; a < L; ++a) {
            if (w[a].size() != L) throw std::invalid_argument("sbm: W must be LxL");
            for (std::size_t b = 0; b < L; ++b) {
                if (w[a][b] < 0.0 || w[a][b] > 1.0)
                    throw std::invalid_argument("sbm: W entries must be in [0,1]");
                if (w[a][b] != w[b][a]) throw std::invalid_argument("sbm: W must be symmetric");
            }
        }
    }

    // pᵀWp, the marginal edge probability of any single pair.
    double edge_density() const {
        double s = 0.0;
        for (std::size_t a = 0; a < L; ++a)
            for (std::size_t b = 0; b < L; ++b) s += p[a] * p[b] * w[a][b];
        return s;
    }

    // pᵀh(W)p, the per-pair entropy given the endpoint communities.
    double mixture_conditional_bits() const {
        double s = 0.0;
        for (std::size_t a = 0; a < L; ++a)
            for (std::size_t b = 0; b < L; ++b) s += p[a] * p[b] * binary_entropy(w[a][b]);
        return s;
    }
};

// JSON schema: {"n": 8, "L": 2, "p": [0.5, 0.5], "W": [[0.9, 0.1], [0.1, 0.9]]}
inline SbmParams sbm_params_from_json(const nlohmann::json& j) {
    SbmParams params;
    try {
        params.n = j.at("n").get<std::size_t>();
        params.L = j.at("L").get<std::size_t>();
        params.p = j.at("p").get<std::vector<double>>();
        params.w = j.at("W").get<std::vector<std::vector<double>>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("sbm params: ") + e.what());
    }
    params.validate();
    return params;
}

inline SbmParams load_sbm_params(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("sbm params: ") + e.what());
    }
    return sbm_params_from_json(j);
}

inline nlohmann::json sbm_params_to_json(const SbmParams& params) {
    return nlohmann::json{{"n", params.n}, {"L", params.L}, {"p", params.p}, {"W", params.w}};
}

struct SbmSample {
    LabeledGraph graph;
    std::vector<std::uint32_t> communities;
};

// Draws X^n i.i.d. from p, then an edge for each pair i < j (row-major
// order) with probability W[X_i][X_j]. Fully determined by the seed.
inline SbmSample sample_sbm(const SbmParams& params, std::uint64_t seed) {
    params.validate();
    std::mt19937_64 rng(seed);

    std::vector<double> cum(params.L);
    double acc = 0.0;
    for (std::size_t l = 0; l < params.L; ++l) {
        acc += params.p[l];
        cum[l] = acc;
    }
    cum.back() = 1.0;

    SbmSample out{LabeledGraph(params.n), {}};
    out.communities.resize(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        const double u = uniform01(rng);
        std::uint32_t l = 0;
        while (u >= cum[l]) ++l;
        out.communities[i] = l;
    }
    for (std::size_t i = 0; i + 1 < params.n; ++i) {
        const auto& row = params.w[out.communities[i]];
        for (std::size_t j = i + 1; j < params.n; ++j)
            if (uniform01(rng) < row[out.communities[j]]) out.graph.set_edge(i, j, true);
    }
    return out;
}

// Exact H(A_n | X^n) = C(n,2) · pᵀh(W)p in bits.
inline double conditional_entropy_bits(const SbmParams& params) {
    params.validate();
    return static_cast<double>(pair_count(params.n)) * params.mixture_conditional_bits();
}

// C(n,2) · h(pᵀWp), an upper bound on H(A_n) (entropy is concave, pairs
// are exchangeable).
inline double marginal_entropy_upper_bits(const SbmParams& params) {
    params.validate();
    return static_cast<double>(pair_count(params.n)) * binary_entropy(params.edge_density());
}

// First-order sparse approximation C(n,2) · d · log2(1/d) with d = pᵀWp.
// Only meaningful for d well below 1; undefined at d in {0,1}.
inline double sparse_entropy_approx_bits(const SbmParams& params) {
    params.validate();
    const double d = params.edge_density();
    if (d <= 0.0 || d >= 1.0)
        throw std::invalid_argument("sparse entropy approximation undefined for pTWp in {0,1}");
    return static_cast<double>(pair_count(params.n)) * d * std::log2(1.0 / d);
}

// Exact distribution of the graph by enumeration: P(a) summed over all L^n
// community assignments. Index = canonical upper-triangle bits of a.
// Guarded to n <= 6, L <= 3 (2^C(n,2) · L^n terms).
inline std::vector<double> bruteforce_distribution(const SbmParams& params) {
    params.validate();
    if (params.n > 6 || params.L > 3)
        throw std::invalid_argument("bruteforce distribution limited to n <= 6, L <= 3");
    const std::size_t pairs = pair_count(params.n);
    const std::size_t n_graphs = std::size_t{1} << pairs;
    std::vector<double> dist(n_graphs, 0.0);

    std::size_t n_assign = 1;
    for (std::size_t i = 0; i < params.n; ++i) n_assign *= params.L;

    std::vector<double> edge_prob(pairs);
    std::vector<std::uint32_t> x(params.n);
    for (std::size_t code = 0; code < n_assign; ++code) {
        std::size_t c = code;
        double px = 1.0;
        for (std::size_t i = 0; i < params.n; ++i) {
            x[i] = static_cast<std::uint32_t>(c % params.L);
            c /= params.L;
            px *= params.p[x[i]];
        }
        if (px == 0.0) continue;
        std::size_t t = 0;
        for (std::size_t i = 0; i + 1 < params.n; ++i)
            for (std::size_t j = i + 1; j < params.n; ++j) edge_prob[t++] = params.w[x[i]][x[j]];
        for (std::size_t a = 0; a < n_graphs; ++a) {
            double pa = px;
            for (std::size_t e = 0; e < pairs; ++e)
                pa *= (a >> e) & 1u ? edge_prob[e] : 1.0 - edge_prob[e];
            dist[a] += pa;
        }
    }
    return dist;
}

// H(A_n) = -Σ_a P(a) log2 P(a) from the enumerated distribution.
inline double exact_entropy_bruteforce_bits(const SbmParams& params) {
    const std::vector<double> dist = bruteforce_distribution(params);
    double h = 0.0;
    for (double pa : dist)
        if (pa > 0.0) h -= pa * std::log2(pa);
    return h;
}

} // namespace ugc
