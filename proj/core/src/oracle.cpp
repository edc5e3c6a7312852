#include "oct/oracle.hpp"

#include <algorithm>
#include <string>

namespace oct {

namespace {

// Lexicographic k-subset enumeration; calls pred(subset) until it returns
// true, reporting the first witness.
template <class Pred>
bool first_k_subset(int n, int k, Pred&& pred, std::vector<int>& witness) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (pred(idx)) {
            witness = idx;
            return true;
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.n > cap)
        throw OracleRefused(std::string(what) + " refused: n=" +
                            std::to_string(g.n) + " exceeds cap " +
                            std::to_string(cap));
}

} // namespace

OracleResult brute_force_oct(const Graph& g, int cap) {
    check_cap(g, cap, "brute_force_oct");
    OracleResult res;
    for (int k = 0; k <= g.n; ++k) {
        std::vector<int> witness;
        auto feasible = [&](const std::vector<int>& s) { return verify_oct(g, s); };
        if (first_k_subset(g.n, k, feasible, witness)) {
            res.opt = k;
            res.witness = witness;
            return res;
        }
    }
    res.opt = g.n; // unreachable: deleting everything is always feasible
    return res;
}

OracleResult brute_force_vc(const Graph& g, int cap) {
    check_cap(g, cap, "brute_force_vc");
    // Bitmask per vertex over edge ids; a set covers iff the union is full.
    auto edges = g.edges();
    int m = static_cast<int>(edges.size());
    int words = (m + 63) / 64;
    std::vector<std::vector<uint64_t>> mask(g.n, std::vector<uint64_t>(words, 0));
    for (int e = 0; e < m; ++e) {
        mask[edges[e].first][e >> 6] |= 1ULL << (e & 63);
        mask[edges[e].second][e >> 6] |= 1ULL << (e & 63);
    }
    std::vector<uint64_t> full(words, 0);
    for (int e = 0; e < m; ++e) full[e >> 6] |= 1ULL << (e & 63);

    OracleResult res;
    std::vector<uint64_t> acc(words);
    for (int k = 0; k <= g.n; ++k) {
        std::vector<int> witness;
        auto covers = [&](const std::vector<int>& s) {
            acc.assign(words, 0);
            for (int v : s)
                for (int w = 0; w < words; ++w) acc[w] |= mask[v][w];
            return acc == full;
        };
        if (first_k_subset(g.n, k, covers, witness)) {
            res.opt = k;
            res.witness = witness;
            return res;
        }
    }
    res.opt = g.n;
    return res;
}

} // namespace oct
