#include "oct/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oct/rng.hpp"

namespace oct {

std::string to_string(Family f) {
    switch (f) {
        case Family::erdos_renyi: return "erdos-renyi";
        case Family::tunable_oct: return "tunable-oct";
        case Family::chung_lu: return "chung-lu";
        case Family::barabasi_albert: return "barabasi-albert";
    }
    return "?";
}

Graph erdos_renyi(int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph tunable_oct(int n, double p, int n_o, double b, uint64_t seed) {
    if (n_o < 0 || n_o > n) throw std::invalid_argument("n_o must be in [0,n]");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    if (b < 0.0 || b > 1.0) throw std::invalid_argument("b must be in [0,1]");
    Rng rng(seed);
    // side: 0 = transversal pool, 1 = left, 2 = right
    std::vector<int> side(n, 0);
    for (int v = n_o; v < n; ++v) side[v] = rng.uniform01() < b ? 1 : 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (side[u] != 0 && side[u] == side[v]) continue;
            if (rng.uniform01() < p) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, std::move(edges));
}

ChungLuResult chung_lu(const std::vector<int>& degrees, uint64_t seed) {
    int n = static_cast<int>(degrees.size());
    long long total = 0;
    for (int d : degrees) {
        if (d < 0) throw std::invalid_argument("negative degree");
        total += d;
    }
    ChungLuResult res;
    if (total == 0) {
        res.graph = Graph::empty(n);
        return res;
    }
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double prob = static_cast<double>(degrees[u]) *
                          static_cast<double>(degrees[v]) /
                          static_cast<double>(total);
            if (prob > 1.0) {
                prob = 1.0;
                ++res.clamped;
            }
            if (rng.uniform01() < prob) edges.emplace_back(u, v);
        }
    res.graph = Graph::from_edges(n, std::move(edges));
    return res;
}

Graph barabasi_albert(int n, int c, uint64_t seed) {
    if (c < 1 || c >= n)
        throw std::invalid_argument("barabasi_albert needs 1 <= c < n");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<long long> deg(n, 0);
    for (int u = 0; u <= c; ++u)
        for (int v = u + 1; v <= c; ++v) {
            edges.emplace_back(u, v);
            ++deg[u];
            ++deg[v];
        }
    std::vector<char> chosen(n, 0);
    for (int v = c + 1; v < n; ++v) {
        // Weights frozen at the start of the step; c distinct targets.
        std::vector<int> picked;
        picked.reserve(c);
        for (int j = 0; j < c; ++j) {
            long long total = 0;
            for (int u = 0; u < v; ++u)
                if (!chosen[u]) total += deg[u];
            long long r = static_cast<long long>(rng.below(static_cast<uint64_t>(total)));
            int target = -1;
            for (int u = 0; u < v; ++u) {
                if (chosen[u]) continue;
                if (r < deg[u]) {
                    target = u;
                    break;
                }
                r -= deg[u];
            }
            chosen[target] = 1;
            picked.push_back(target);
        }
        for (int u : picked) {
            chosen[u] = 0;
            edges.emplace_back(u, v);
            ++deg[u];
            ++deg[v];
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate(const GeneratorConfig& cfg) {
    switch (cfg.family) {
        case Family::erdos_renyi: return erdos_renyi(cfg.n, cfg.p, cfg.seed);
        case Family::tunable_oct:
            return tunable_oct(cfg.n, cfg.p, cfg.n_o, cfg.b, cfg.seed);
        case Family::chung_lu: return chung_lu(cfg.degrees, cfg.seed).graph;
        case Family::barabasi_albert:
            return barabasi_albert(cfg.n, cfg.c, cfg.seed);
    }
    throw std::invalid_argument("unknown generator family");
}

LookalikeConfigs lookalike_configs(const Graph& g, int oct_upper) {
    if (oct_upper < 0 || oct_upper > g.n)
        throw std::invalid_argument("oct_upper must be in [0,n]");
    LookalikeConfigs out;
    double pairs = static_cast<double>(g.n) * (g.n - 1) / 2.0;
    if (g.n >= 2) {
        GeneratorConfig er;
        er.family = Family::erdos_renyi;
        er.n = g.n;
        er.p = static_cast<double>(g.m) / pairs;
        out.er = er;

        GeneratorConfig to = er;
        to.family = Family::tunable_oct;
        to.n_o = oct_upper;
        to.b = 0.5;
        out.tunable = to;
    }
    GeneratorConfig cl;
    cl.family = Family::chung_lu;
    cl.n = g.n;
    cl.degrees.reserve(g.n);
    for (int v = 0; v < g.n; ++v) cl.degrees.push_back(g.degree(v));
    out.chung_lu = cl;
    if (g.n >= 2 && g.m > 0) {
        GeneratorConfig ba;
        ba.family = Family::barabasi_albert;
        ba.n = g.n;
        ba.c = std::max(
            1, static_cast<int>(std::llround(static_cast<double>(g.m) / g.n)));
        if (ba.c < g.n) out.ba = ba;
    }
    return out;
}

} // namespace oct
