#ifndef OCT_IO_HPP
#define OCT_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oct/graph.hpp"

namespace oct {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what),
          line(line_) {}
};

struct WeightedEdge {
    std::string u, v;
    long long w = 1;
};

// Pre-sanitization graph: raw labels and weighted edge triples; may contain
// self-loops, duplicates and zero weights. `declared_labels` holds vertices
// announced by the input format (QUBO vertex count, canonical header); plain
// edge lists declare nothing and vertices are implied by surviving edges.
// `ids_canonical` marks labels that already are canonical ids 0..n-1; the
// sanitizer then orders them numerically so canonical files round-trip.
struct RawGraph {
    std::vector<std::string> declared_labels;
    std::vector<WeightedEdge> edges;
    bool ids_canonical = false;
};

// QUBO corpus file: first line is the instance count; each instance is a
// line "n nnz" followed by nnz triples "i j q" with 1-indexed i, j.
std::vector<RawGraph> parse_qubo(std::string_view text);

// Whitespace-separated label pairs, several pairs per line allowed, lines
// starting with '#' ignored. A leading pair is treated as an "n m" header
// when the remaining pair count equals m and all labels are ids below n;
// this makes canonical files (including ones with isolated vertices) parse
// back exactly.
RawGraph parse_edge_list(std::string_view text);

enum class LabelOrder { lexicographic, numeric };

struct SanitizeResult {
    Graph graph;
    std::vector<std::pair<std::string, int>> label_map; // old label -> new id
};

// Drops self-loops, drops edges whose every duplicate has weight zero, merges
// duplicates, relabels 0..n-1 by label order. Declared labels are kept even
// when isolated.
SanitizeResult sanitize(const RawGraph& raw,
                        LabelOrder order = LabelOrder::lexicographic);

// "n m" header plus one "u v" line per edge with u < v, ascending, LF endings.
std::string write_canonical(const Graph& g);

// Auto-detecting loader: a one-token first line means QUBO (instance is
// 1-based), otherwise edge-list/canonical. Applies sanitize.
SanitizeResult load_graph_text(std::string_view text, int instance = 1,
                               LabelOrder order = LabelOrder::lexicographic);
SanitizeResult load_graph_file(const std::string& path, int instance = 1,
                               LabelOrder order = LabelOrder::lexicographic);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace oct

#endif
