#ifndef OCT_ILP_HPP
#define OCT_ILP_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oct/graph.hpp"
#include "oct/solution.hpp"
#include "oct/vc.hpp"

namespace oct {

// All variables binary, all objective coefficients nonnegative.
struct IlpModel {
    struct Constraint {
        std::string name;
        std::vector<std::pair<int, long long>> terms; // (var index, coefficient)
        char sense = '>';                             // '>' means >=, '<' means <=
        long long rhs = 0;
    };

    std::vector<std::string> var_names;
    std::vector<long long> objective; // minimize
    std::vector<Constraint> constraints;
    std::vector<std::string> comments;

    int add_var(const std::string& name, long long obj_coef);
};

// Direct formulation: per edge (u,v), s_u + s_v + c_u + c_v >= 1 and
// s_u + s_v - c_u - c_v <= 1; minimize sum c_v; S = { v : c_v = 1 }.
IlpModel build_oct_model(const Graph& g);

// Plain vertex cover formulation: x_u + x_v >= 1 per edge, minimize sum x_v.
IlpModel build_vc_model(const Graph& g);

std::string render_lp(const IlpModel& model);

std::string export_oct_ilp(const Graph& g);
std::string export_vc_ilp(const Graph& g);

// Parses the dialect render_lp emits (Minimize / Subject To / Binary / End).
IlpModel parse_lp(std::string_view text);

// Anytime exhaustive 0/1 search over a model: depth-first over variables with
// constraint-bound and objective pruning; keeps the best incumbent.
struct EnumResult {
    bool found = false;   // some feasible assignment seen
    bool proven = false;  // search space exhausted
    long long best_obj = 0;
    std::vector<char> assignment; // per variable, when found
    long long nodes = 0;
};

EnumResult enumerate_model(const IlpModel& model,
                           std::optional<double> timeout = std::nullopt,
                           long long node_budget = -1);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrationError : std::runtime_error {
    std::string raw_output;
    IntegrationError(const std::string& what, std::string raw)
        : std::runtime_error(what), raw_output(std::move(raw)) {}
};

// Parsed external-solver solution file: "status" / "objective" lines plus
// one "name value" (or name=value) line per variable.
struct ExternalSolution {
    std::map<std::string, long long> values;
    std::optional<long long> objective;
    bool optimal = false;
    bool feasible = false;
};

// Writes the LP to a temp file, substitutes {input}/{output}/{timeout} into
// the command template, runs it under the deadline (plus a short grace
// period before SIGKILL) and parses the solution file. Throws ConfigError
// when the command cannot start, IntegrationError when output is missing or
// unparseable.
ExternalSolution run_external(const std::string& lp_text,
                              const std::string& cmd_template, double timeout);

enum class IlpForm { oct, vc };

// OCT through an external MIP solver: export (vc form goes through the
// doubled instance), invoke, recover S, verify. On timeout the best parsed
// incumbent becomes the upper bound.
SolverReport ilp_solve_external(const Graph& g, IlpForm form,
                                const std::string& cmd_template,
                                double timeout);

// Same pipeline against the built-in enumerator; `flag_no_incumbent` is set
// when the deadline struck before any feasible assignment, in which case the
// trivial all-vertices solution with upper bound n is reported.
SolverReport ilp_solve_enumerated(const Graph& g, IlpForm form,
                                  std::optional<double> timeout,
                                  long long node_budget = -1,
                                  bool* flag_no_incumbent = nullptr);

} // namespace oct

#endif
