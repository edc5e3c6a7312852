#include "oct/solution.hpp"

namespace oct {

std::string to_string(Source s) {
    switch (s) {
        case Source::heuristic_dfs: return "heuristic-dfs";
        case Source::heuristic_bfs: return "heuristic-bfs";
        case Source::heuristic_luby: return "heuristic-luby";
        case Source::heuristic_mindeg: return "heuristic-mindeg";
        case Source::ensemble: return "ensemble";
        case Source::ic: return "ic";
        case Source::vc: return "vc";
        case Source::ilp: return "ilp";
        case Source::oracle: return "oracle";
    }
    return "?";
}

std::string to_string(Termination t) {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::deadline: return "deadline";
        case Termination::refused: return "refused";
        case Termination::error: return "error";
    }
    return "?";
}

} // namespace oct
