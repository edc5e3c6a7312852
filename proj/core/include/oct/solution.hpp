#ifndef OCT_SOLUTION_HPP
#define OCT_SOLUTION_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oct {

enum class Source {
    heuristic_dfs,
    heuristic_bfs,
    heuristic_luby,
    heuristic_mindeg,
    ensemble,
    ic,
    vc,
    ilp,
    oracle,
};

std::string to_string(Source s);

struct OctSolution {
    std::vector<int> vertices; // sorted
    bool verified = false;
    Source source = Source::oracle;

    int size() const { return static_cast<int>(vertices.size()); }
};

enum class Termination { completed, deadline, refused, error };

std::string to_string(Termination t);

struct SolverReport {
    OctSolution solution;
    int lower = 0;
    int upper = 0;
    bool optimal = false;
    double elapsed = 0.0; // seconds
    uint64_t seed = 0;
    Termination termination = Termination::completed;
    long long iterations = 0; // solver-specific work count, replays are exact
};

// Cooperative wall-clock deadline. Solvers check it between work units; an
// empty deadline never expires.
struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;

    static Deadline never() { return Deadline{}; }
    static Deadline after(std::optional<double> seconds) {
        Deadline d;
        if (seconds) {
            d.at = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(*seconds));
        }
        return d;
    }
    bool expired() const {
        return at && std::chrono::steady_clock::now() >= *at;
    }
};

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

} // namespace oct

#endif
