#include "oct/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace oct {

namespace {

struct Token {
    std::string text;
    int line;
};

std::vector<Token> tokenize(std::string_view text, bool hash_comments) {
    std::vector<Token> tokens;
    int line = 1;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (hash_comments && ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else {
            size_t start = i;
            while (i < text.size() &&
                   !std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            tokens.push_back({std::string(text.substr(start, i - start)), line});
        }
    }
    return tokens;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

long long to_int(const Token& t, const char* what) {
    if (!is_integer(t.text))
        throw ParseError(t.line, std::string("expected ") + what + ", got '" +
                                     t.text + "'");
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        throw ParseError(t.line, std::string("integer out of range: '") + t.text +
                                     "'");
    }
}

bool is_unsigned_int(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Numeric-aware label comparison: digit-only labels first, ordered by value
// (length, then lexicographic — labels here never exceed a few digits),
// everything else lexicographic.
bool numeric_less(const std::string& a, const std::string& b) {
    bool na = is_unsigned_int(a), nb = is_unsigned_int(b);
    if (na != nb) return na;
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();
    }
    return a < b;
}

} // namespace

std::vector<RawGraph> parse_qubo(std::string_view text) {
    auto tokens = tokenize(text, false);
    size_t pos = 0;
    auto need = [&](const char* what) -> const Token& {
        if (pos >= tokens.size()) {
            int line = tokens.empty() ? 1 : tokens.back().line;
            throw ParseError(line, std::string("unexpected end of file, expected ") +
                                       what);
        }
        return tokens[pos++];
    };

    long long count = to_int(need("instance count"), "instance count");
    if (count < 0) throw ParseError(tokens[0].line, "negative instance count");
    std::vector<RawGraph> out;
    out.reserve(static_cast<size_t>(count));
    for (long long inst = 0; inst < count; ++inst) {
        long long n = to_int(need("vertex count"), "vertex count");
        long long nnz = to_int(need("entry count"), "entry count");
        if (n < 0 || nnz < 0)
            throw ParseError(tokens[pos - 1].line, "negative instance header");
        RawGraph raw;
        raw.declared_labels.reserve(static_cast<size_t>(n));
        for (long long v = 1; v <= n; ++v)
            raw.declared_labels.push_back(std::to_string(v));
        raw.edges.reserve(static_cast<size_t>(nnz));
        for (long long e = 0; e < nnz; ++e) {
            const Token& ti = need("row index");
            long long i = to_int(ti, "row index");
            long long j = to_int(need("column index"), "column index");
            long long q = to_int(need("entry value"), "entry value");
            if (i < 1 || i > n || j < 1 || j > n)
                throw ParseError(ti.line, "index out of range for instance with n=" +
                                              std::to_string(n));
            raw.edges.push_back({std::to_string(i), std::to_string(j), q});
        }
        out.push_back(std::move(raw));
    }
    return out;
}

RawGraph parse_edge_list(std::string_view text) {
    // Token pairs per line; odd token count on any line is an error.
    std::vector<std::pair<Token, Token>> pairs;
    int line = 1;
    size_t i = 0;
    std::vector<Token> linetoks;
    auto flush_line = [&]() {
        if (linetoks.size() % 2 != 0)
            throw ParseError(linetoks.back().line,
                             "odd token count (" + std::to_string(linetoks.size()) +
                                 ") on edge-list line");
        for (size_t k = 0; k + 1 < linetoks.size(); k += 2)
            pairs.emplace_back(linetoks[k], linetoks[k + 1]);
        linetoks.clear();
    };
    while (i <= text.size()) {
        if (i == text.size() || text[i] == '\n') {
            flush_line();
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        } else if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else {
            size_t start = i;
            while (i < text.size() &&
                   !std::isspace(static_cast<unsigned char>(text[i])))
                ++i;
            linetoks.push_back({std::string(text.substr(start, i - start)), line});
        }
    }

    RawGraph raw;
    size_t first = 0;
    // Canonical-header detection: a leading "n m" pair is consumed as a header
    // when exactly m pairs follow and every following label is an id below n.
    if (!pairs.empty() && is_unsigned_int(pairs[0].first.text) &&
        is_unsigned_int(pairs[0].second.text)) {
        long long n = std::stoll(pairs[0].first.text);
        long long m = std::stoll(pairs[0].second.text);
        if (static_cast<long long>(pairs.size()) - 1 == m) {
            bool ids_ok = true;
            for (size_t k = 1; k < pairs.size() && ids_ok; ++k) {
                for (const auto* t : {&pairs[k].first, &pairs[k].second}) {
                    if (!is_unsigned_int(t->text) || std::stoll(t->text) >= n) {
                        ids_ok = false;
                        break;
                    }
                }
            }
            if (ids_ok) {
                first = 1;
                raw.ids_canonical = true;
                raw.declared_labels.reserve(static_cast<size_t>(n));
                for (long long v = 0; v < n; ++v)
                    raw.declared_labels.push_back(std::to_string(v));
            }
        }
    }
    for (size_t k = first; k < pairs.size(); ++k)
        raw.edges.push_back({pairs[k].first.text, pairs[k].second.text, 1});
    return raw;
}

SanitizeResult sanitize(const RawGraph& raw, LabelOrder order) {
    // Merge duplicate label pairs; an edge survives iff any duplicate has a
    // nonzero weight. Self-loops never survive.
    std::map<std::pair<std::string, std::string>, bool> merged;
    for (const auto& e : raw.edges) {
        if (e.u == e.v) continue;
        auto key = e.u < e.v ? std::make_pair(e.u, e.v) : std::make_pair(e.v, e.u);
        merged[key] = merged[key] || (e.w != 0);
    }

    std::vector<std::string> labels = raw.declared_labels;
    for (const auto& [key, nonzero] : merged) {
        if (!nonzero) continue;
        labels.push_back(key.first);
        labels.push_back(key.second);
    }
    bool numeric = order == LabelOrder::numeric || raw.ids_canonical;
    auto less = [&](const std::string& a, const std::string& b) {
        return numeric ? numeric_less(a, b) : a < b;
    };
    std::sort(labels.begin(), labels.end(), less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::map<std::string, int> id_of;
    SanitizeResult res;
    res.label_map.reserve(labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
        id_of[labels[i]] = static_cast<int>(i);
        res.label_map.emplace_back(labels[i], static_cast<int>(i));
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(merged.size());
    for (const auto& [key, nonzero] : merged)
        if (nonzero) edges.emplace_back(id_of[key.first], id_of[key.second]);
    res.graph = Graph::from_edges(static_cast<int>(labels.size()), std::move(edges));
    return res;
}

std::string write_canonical(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

SanitizeResult load_graph_text(std::string_view text, int instance,
                               LabelOrder order) {
    // A single-token first non-comment line marks the QUBO corpus format.
    auto tokens = tokenize(text, true);
    bool qubo = false;
    if (!tokens.empty() && is_integer(tokens[0].text)) {
        int first_line = tokens[0].line;
        qubo = tokens.size() == 1 || tokens[1].line != first_line;
    }
    if (qubo) {
        auto instances = parse_qubo(text);
        if (instance < 1 || instance > static_cast<int>(instances.size()))
            throw ParseError(1, "instance " + std::to_string(instance) +
                                    " out of range, file has " +
                                    std::to_string(instances.size()));
        return sanitize(instances[static_cast<size_t>(instance - 1)], order);
    }
    return sanitize(parse_edge_list(text), order);
}

SanitizeResult load_graph_file(const std::string& path, int instance,
                               LabelOrder order) {
    return load_graph_text(read_file(path), instance, order);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace oct
