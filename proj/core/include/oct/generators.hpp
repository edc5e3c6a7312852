#ifndef OCT_GENERATORS_HPP
#define OCT_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oct/graph.hpp"

namespace oct {

enum class Family { erdos_renyi, tunable_oct, chung_lu, barabasi_albert };

std::string to_string(Family f);

struct GeneratorConfig {
    Family family = Family::erdos_renyi;
    int n = 0;
    double p = 0.0;            // erdos_renyi, tunable_oct
    int n_o = 0;               // tunable_oct
    double b = 0.5;            // tunable_oct
    std::vector<int> degrees;  // chung_lu
    int c = 1;                 // barabasi_albert
    uint64_t seed = 1;
};

// Each pair (u, v) with u < v tried in ascending order with one draw.
Graph erdos_renyi(int n, double p, uint64_t seed);

// First n_o ids form the transversal pool; the rest go left with probability
// b, else right. Pairs inside the same partite set are never offered an edge,
// so OPT <= n_o by construction.
Graph tunable_oct(int n, double p, int n_o, double b, uint64_t seed);

struct ChungLuResult {
    Graph graph;
    long long clamped = 0; // pair probabilities d_u*d_v/sum capped at 1
};

ChungLuResult chung_lu(const std::vector<int>& degrees, uint64_t seed);

// Seed clique on c+1 vertices; every later vertex attaches c edges to
// distinct existing vertices, degree-proportional without replacement.
// Edge count is exactly C(c+1,2) + c*(n-c-1).
Graph barabasi_albert(int n, int c, uint64_t seed);

Graph generate(const GeneratorConfig& cfg);

struct LookalikeConfigs {
    std::optional<GeneratorConfig> er, tunable, chung_lu, ba;
};

// Per-family parameter derivation from a reference graph: ER matches density,
// Tunable-OCT takes n_o = oct_upper and b = 0.5, Chung-Lu copies the degree
// sequence, BA uses c = max(1, round(m/n)). ER/BA need n >= 2; BA needs m > 0.
LookalikeConfigs lookalike_configs(const Graph& g, int oct_upper);

} // namespace oct

#endif
