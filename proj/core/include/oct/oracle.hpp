#ifndef OCT_ORACLE_HPP
#define OCT_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "oct/graph.hpp"

namespace oct {

// Ground truth by exhaustive k-ascending subset enumeration. Deliberately
// dumb; every property test in the suite is measured against these.

struct OracleRefused : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    int opt = 0;
    std::vector<int> witness; // lexicographically first optimal set
};

inline constexpr int kOracleDefaultCap = 20;

OracleResult brute_force_oct(const Graph& g, int cap = kOracleDefaultCap);
OracleResult brute_force_vc(const Graph& g, int cap = kOracleDefaultCap);

} // namespace oct

#endif
