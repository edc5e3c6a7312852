#ifndef OCT_BENCH_HPP
#define OCT_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oct/graph.hpp"
#include "oct/solution.hpp"

namespace oct {

struct InstanceRef {
    std::string dataset;
    std::string name;
    std::string path;
};

// Instances are solved on their reduced graphs; ratios are against OPT of the
// reduced graph. Reference OPT precedence: oracle when small enough, else a
// completed exact solve, else the instance is skipped and flagged.
struct RunMatrix {
    std::vector<InstanceRef> instances;
    std::vector<std::string> solvers; // subset of {"HE","IC","ILP","VC"}
    std::vector<double> timeouts;     // wall-clock mode
    std::vector<uint64_t> seeds = {1};
    bool budget_mode = false;  // fixed work units instead of the clock
    long long budget = 1000;   // per-solver work units in budget mode
    int jobs = 1;
    int oracle_cap = 16;          // reference OPT via oracle up to here
    double exact_timeout = 600.0; // reference OPT fallback solve
    std::string ilp_cmd;          // external solver template; empty = built-in
};

struct BenchTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows; // sorted
    std::vector<std::string> notes;             // skipped/flagged instances
};

// Worst-case approximation ratio per (dataset, solver, timeout) cell, with an
// exactness flag when every run proved optimality.
BenchTable run_heuristic_matrix(const RunMatrix& m);

// Wide view of the heuristic matrix: one row per dataset, one value column
// per (timeout, solver) pair; cells show the worst ratio or "exact".
BenchTable pivot_heuristic_table(const BenchTable& long_table);

// OPT-or-dash per (instance, solver) with elapsed time (or work units in
// budget mode). Solver crashes become error rows; the run continues.
BenchTable run_exact_matrix(const RunMatrix& m);

struct EmitResult {
    std::string csv_path, md_path, manifest_path;
};

// Deterministic CSV (sorted rows, fixed precision), a markdown rendering and
// a manifest recording git revision, seeds and configuration.
EmitResult emit_tables(const BenchTable& table, const RunMatrix& m,
                       const std::string& out_prefix);

std::string table_to_csv(const BenchTable& table);
std::string table_to_markdown(const BenchTable& table);

// Scans a directory for *.graph files; dataset = file stem minus a trailing
// "-<number>".
std::vector<InstanceRef> discover_instances(const std::string& dir);

// Downloads the QUBO corpus (Beasley 50/100-vertex sets and GKA) and writes
// one canonical .graph file per instance. Returns written file count;
// network failures surface in `err`.
int fetch_qubo_corpus(const std::string& dest_dir, std::string* err);

std::string git_revision();

} // namespace oct

#endif
