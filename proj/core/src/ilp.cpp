#include "oct/ilp.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

#include <sys/wait.h>
#include <unistd.h>

#include "oct/io.hpp"
#include "oct/reductions.hpp"

namespace oct {

int IlpModel::add_var(const std::string& name, long long obj_coef) {
    var_names.push_back(name);
    objective.push_back(obj_coef);
    return static_cast<int>(var_names.size()) - 1;
}

IlpModel build_oct_model(const Graph& g) {
    IlpModel m;
    m.comments.push_back("odd cycle transversal, direct formulation");
    m.comments.push_back("recover S = { v : c<v> = 1 }");
    std::vector<int> s_var(g.n), c_var(g.n);
    for (int v = 0; v < g.n; ++v) {
        s_var[v] = m.add_var("s" + std::to_string(v), 0);
        c_var[v] = m.add_var("c" + std::to_string(v), 1);
    }
    int e = 0;
    for (auto [u, v] : g.edges()) {
        IlpModel::Constraint lo;
        lo.name = "e" + std::to_string(e) + "a";
        lo.terms = {{s_var[u], 1}, {s_var[v], 1}, {c_var[u], 1}, {c_var[v], 1}};
        lo.sense = '>';
        lo.rhs = 1;
        m.constraints.push_back(std::move(lo));
        IlpModel::Constraint hi;
        hi.name = "e" + std::to_string(e) + "b";
        hi.terms = {{s_var[u], 1}, {s_var[v], 1}, {c_var[u], -1}, {c_var[v], -1}};
        hi.sense = '<';
        hi.rhs = 1;
        m.constraints.push_back(std::move(hi));
        ++e;
    }
    return m;
}

IlpModel build_vc_model(const Graph& g) {
    IlpModel m;
    m.comments.push_back("vertex cover formulation");
    m.comments.push_back("recover cover = { v : x<v> = 1 }");
    std::vector<int> x_var(g.n);
    for (int v = 0; v < g.n; ++v)
        x_var[v] = m.add_var("x" + std::to_string(v), 1);
    int e = 0;
    for (auto [u, v] : g.edges()) {
        IlpModel::Constraint c;
        c.name = "e" + std::to_string(e++);
        c.terms = {{x_var[u], 1}, {x_var[v], 1}};
        c.sense = '>';
        c.rhs = 1;
        m.constraints.push_back(std::move(c));
    }
    return m;
}

std::string render_lp(const IlpModel& model) {
    std::ostringstream out;
    for (const auto& c : model.comments) out << "\\ " << c << "\n";
    out << "Minimize\n obj:";
    bool any = false;
    for (size_t v = 0; v < model.var_names.size(); ++v) {
        if (model.objective[v] == 0) continue;
        out << (any ? " + " : " ");
        if (model.objective[v] != 1) out << model.objective[v] << " ";
        out << model.var_names[v];
        any = true;
    }
    if (!any) out << " 0";
    out << "\nSubject To\n";
    for (const auto& c : model.constraints) {
        out << " " << c.name << ":";
        bool first = true;
        for (auto [var, coef] : c.terms) {
            long long a = coef;
            if (first) {
                out << " ";
                if (a < 0) {
                    out << "- ";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1) out << a << " ";
            out << model.var_names[var];
            first = false;
        }
        out << (c.sense == '>' ? " >= " : " <= ") << c.rhs << "\n";
    }
    out << "Binary\n";
    for (const auto& name : model.var_names) out << " " << name << "\n";
    out << "End\n";
    return out.str();
}

std::string export_oct_ilp(const Graph& g) { return render_lp(build_oct_model(g)); }

std::string export_vc_ilp(const Graph& g) { return render_lp(build_vc_model(g)); }

namespace {

struct LpToken {
    std::string text;
    int line;
};

std::vector<LpToken> lp_tokens(std::string_view text) {
    std::vector<LpToken> out;
    int line = 1;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            ++line;
            ++i;
        } else if (ch == '\\') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '+' || ch == '-' || ch == ':') {
            out.push_back({std::string(1, ch), line});
            ++i;
        } else if (ch == '>' || ch == '<' || ch == '=') {
            size_t start = i;
            while (i < text.size() &&
                   (text[i] == '>' || text[i] == '<' || text[i] == '='))
                ++i;
            out.push_back({std::string(text.substr(start, i - start)), line});
        } else {
            size_t start = i;
            while (i < text.size() &&
                   !std::isspace(static_cast<unsigned char>(text[i])) &&
                   text[i] != '+' && text[i] != '-' && text[i] != ':' &&
                   text[i] != '>' && text[i] != '<' && text[i] != '=')
                ++i;
            out.push_back({std::string(text.substr(start, i - start)), line});
        }
    }
    return out;
}

bool lp_is_number(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace

IlpModel parse_lp(std::string_view text) {
    auto toks = lp_tokens(text);
    IlpModel model;
    std::map<std::string, int> var_of;
    auto var_index = [&](const std::string& name) {
        auto it = var_of.find(name);
        if (it != var_of.end()) return it->second;
        int idx = model.add_var(name, 0);
        var_of[name] = idx;
        return idx;
    };

    size_t i = 0;
    auto fail = [&](const std::string& what) -> ParseError {
        int line = i < toks.size() ? toks[i].line
                                   : (toks.empty() ? 1 : toks.back().line);
        return ParseError(line, what);
    };
    auto peek_lower = [&]() { return i < toks.size() ? lower(toks[i].text) : ""; };

    if (peek_lower() != "minimize") throw fail("expected Minimize");
    ++i;
    // objective: optional label, then signed terms
    if (i + 1 < toks.size() && toks[i + 1].text == ":") i += 2;
    auto parse_terms = [&](std::vector<std::pair<int, long long>>& terms,
                           const std::vector<std::string>& stops) {
        long long sign = 1;
        bool pending = false;
        while (i < toks.size()) {
            std::string low = lower(toks[i].text);
            if (!pending &&
                std::find(stops.begin(), stops.end(), low) != stops.end())
                break;
            if (toks[i].text == ">=" || toks[i].text == "<=" ||
                toks[i].text == "=" || toks[i].text == ">" ||
                toks[i].text == "<")
                break;
            if (toks[i].text == "+") {
                sign = 1;
                pending = true;
                ++i;
            } else if (toks[i].text == "-") {
                sign = -1;
                pending = true;
                ++i;
            } else if (lp_is_number(toks[i].text)) {
                long long coef = sign * std::stoll(toks[i].text);
                ++i;
                if (i < toks.size() && !lp_is_number(toks[i].text) &&
                    toks[i].text != "+" && toks[i].text != "-") {
                    terms.emplace_back(var_index(toks[i].text), coef);
                    ++i;
                } // bare constant (e.g. "obj: 0") contributes nothing
                sign = 1;
                pending = false;
            } else {
                terms.emplace_back(var_index(toks[i].text), sign);
                ++i;
                sign = 1;
                pending = false;
            }
        }
    };

    std::vector<std::pair<int, long long>> obj_terms;
    parse_terms(obj_terms, {"subject", "st", "s.t.", "binary", "end"});
    for (auto [var, coef] : obj_terms) model.objective[var] += coef;

    if (peek_lower() == "subject") {
        ++i;
        if (peek_lower() == "to") ++i;
    } else if (peek_lower() == "st" || peek_lower() == "s.t.") {
        ++i;
    }

    int anon = 0;
    while (i < toks.size() && peek_lower() != "binary" && peek_lower() != "end") {
        IlpModel::Constraint con;
        if (i + 1 < toks.size() && toks[i + 1].text == ":") {
            con.name = toks[i].text;
            i += 2;
        } else {
            con.name = "r" + std::to_string(anon++);
        }
        parse_terms(con.terms, {"binary", "end"});
        if (i >= toks.size()) throw fail("constraint without relation");
        std::string rel = toks[i].text;
        ++i;
        if (rel == ">=" || rel == ">")
            con.sense = '>';
        else if (rel == "<=" || rel == "<")
            con.sense = '<';
        else
            throw fail("unsupported relation '" + rel + "'");
        long long sign = 1;
        if (i < toks.size() && toks[i].text == "-") {
            sign = -1;
            ++i;
        }
        if (i >= toks.size() || !lp_is_number(toks[i].text))
            throw fail("expected integer right-hand side");
        con.rhs = sign * std::stoll(toks[i].text);
        ++i;
        model.constraints.push_back(std::move(con));
    }
    if (peek_lower() == "binary") {
        ++i;
        while (i < toks.size() && peek_lower() != "end") {
            var_index(toks[i].text);
            ++i;
        }
    }
    return model;
}

EnumResult enumerate_model(const IlpModel& model, std::optional<double> timeout,
                           long long node_budget) {
    int nvars = static_cast<int>(model.var_names.size());
    int ncons = static_cast<int>(model.constraints.size());
    for (long long c : model.objective)
        if (c < 0)
            throw std::invalid_argument(
                "enumerate_model expects nonnegative objective coefficients");

    // per-constraint running sum plus min/max achievable remainder
    std::vector<long long> cur(ncons, 0), rem_min(ncons, 0), rem_max(ncons, 0);
    std::vector<std::vector<std::pair<int, long long>>> terms_of(nvars);
    for (int c = 0; c < ncons; ++c)
        for (auto [var, coef] : model.constraints[c].terms) {
            terms_of[var].emplace_back(c, coef);
            if (coef > 0)
                rem_max[c] += coef;
            else
                rem_min[c] += coef;
        }

    Deadline deadline = Deadline::after(timeout);
    EnumResult res;
    std::vector<char> assign(nvars, 0);
    long long cur_obj = 0;

    // incremental count of constraints that can no longer be satisfied
    std::vector<char> stuck(ncons, 0);
    int stuck_count = 0;
    auto refresh = [&](int c) {
        const auto& con = model.constraints[c];
        bool bad = con.sense == '>' ? (cur[c] + rem_max[c] < con.rhs)
                                    : (cur[c] + rem_min[c] > con.rhs);
        if (bad != static_cast<bool>(stuck[c])) {
            stuck[c] = bad;
            stuck_count += bad ? 1 : -1;
        }
    };
    auto set_var = [&](int var, char value) {
        assign[var] = value;
        for (auto [c, coef] : terms_of[var]) {
            if (value) cur[c] += coef;
            if (coef > 0)
                rem_max[c] -= coef;
            else
                rem_min[c] -= coef;
            refresh(c);
        }
        if (value) cur_obj += model.objective[var];
    };
    auto unset_var = [&](int var, char value) {
        for (auto [c, coef] : terms_of[var]) {
            if (value) cur[c] -= coef;
            if (coef > 0)
                rem_max[c] += coef;
            else
                rem_min[c] += coef;
            refresh(c);
        }
        if (value) cur_obj -= model.objective[var];
    };

    // With every variable assigned the remainders are zero, so stuck_count
    // doubles as the exact feasibility test at the leaves.
    auto rec = [&](auto&& self, int var) -> bool { // false = aborted
        ++res.nodes;
        if ((node_budget >= 0 && res.nodes > node_budget) || deadline.expired())
            return false;
        if (var == nvars) {
            if (stuck_count == 0) {
                res.found = true;
                res.best_obj = cur_obj;
                res.assignment = assign;
            }
            return true;
        }
        for (char value : {0, 1}) {
            set_var(var, value);
            bool keep_going = true;
            if (stuck_count == 0 && (!res.found || cur_obj < res.best_obj))
                keep_going = self(self, var + 1);
            unset_var(var, value);
            if (!keep_going) return false;
        }
        return true;
    };
    res.proven = rec(rec, 0);
    return res;
}

namespace {

std::string substitute(const std::string& tmpl, const std::string& key,
                       const std::string& value) {
    std::string out = tmpl;
    size_t pos = 0;
    while ((pos = out.find(key, pos)) != std::string::npos) {
        out.replace(pos, key.size(), value);
        pos += value.size();
    }
    return out;
}

std::string unique_temp_dir() {
    static std::atomic<int> counter{0};
    auto base = std::filesystem::temp_directory_path();
    std::string name = "octkit-" + std::to_string(::getpid()) + "-" +
                       std::to_string(counter.fetch_add(1));
    auto dir = base / name;
    std::filesystem::create_directories(dir);
    return dir.string();
}

} // namespace

ExternalSolution run_external(const std::string& lp_text,
                              const std::string& cmd_template, double timeout) {
    std::string dir = unique_temp_dir();
    std::string in_path = dir + "/model.lp";
    std::string out_path = dir + "/solution.txt";
    write_file(in_path, lp_text);

    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", timeout);
    std::string cmd = substitute(cmd_template, "{input}", in_path);
    cmd = substitute(cmd, "{output}", out_path);
    cmd = substitute(cmd, "{timeout}", buf);

    pid_t pid = ::fork();
    if (pid < 0) throw ConfigError("fork failed");
    if (pid == 0) {
        ::setpgid(0, 0);
        ::execl("/bin/sh", "sh", "-c", cmd.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    ::setpgid(pid, pid);

    // deadline plus grace, then the whole process group is killed
    Deadline hard = Deadline::after(timeout + 5.0);
    int status = 0;
    bool killed = false;
    while (true) {
        pid_t r = ::waitpid(pid, &status, WNOHANG);
        if (r == pid) break;
        if (r < 0) throw ConfigError("waitpid failed");
        if (!killed && hard.expired()) {
            ::kill(-pid, SIGKILL);
            killed = true;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127)
        throw ConfigError("solver command failed to start: " + cmd);

    std::string raw;
    try {
        raw = read_file(out_path);
    } catch (const std::exception&) {
        throw IntegrationError("external solver produced no solution file", "");
    }

    ExternalSolution sol;
    std::istringstream lines(raw);
    std::string line;
    bool parsed_any = false;
    while (std::getline(lines, line)) {
        for (char& c : line)
            if (c == '=' || c == ':') c = ' ';
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string keyl = lower(key);
        if (keyl == "status") {
            std::string value;
            ls >> value;
            value = lower(value);
            sol.optimal = value == "optimal";
            sol.feasible = sol.optimal || value == "feasible";
            parsed_any = true;
        } else if (keyl == "objective" || keyl == "obj") {
            long long value;
            if (ls >> value) {
                sol.objective = value;
                parsed_any = true;
            }
        } else {
            long long value;
            if (ls >> value) {
                sol.values[key] = value;
                parsed_any = true;
            }
        }
    }
    if (!parsed_any)
        throw IntegrationError("unparseable external solver output", raw);
    if (!sol.values.empty() && !sol.optimal) sol.feasible = true;
    return sol;
}

namespace {

SolverReport report_from_assignment(const Graph& g, IlpForm form,
                                    const VcInstance* inst,
                                    const std::vector<int>& chosen,
                                    bool optimal, bool found,
                                    Termination term) {
    SolverReport report;
    report.termination = term;
    report.optimal = optimal;
    std::vector<int> s;
    if (found) {
        if (form == IlpForm::oct) {
            s = chosen;
        } else {
            s = from_vc_solution(*inst, chosen);
        }
    } else {
        for (int v = 0; v < g.n; ++v) s.push_back(v); // trivial fallback
    }
    report.solution.vertices = s;
    report.solution.source = Source::ilp;
    report.solution.verified = verify_oct(g, s);
    report.upper = static_cast<int>(s.size());
    report.lower = optimal ? report.upper : 0;
    return report;
}

} // namespace

SolverReport ilp_solve_external(const Graph& g, IlpForm form,
                                const std::string& cmd_template,
                                double timeout) {
    Stopwatch watch;
    VcInstance inst;
    std::string lp;
    if (form == IlpForm::oct) {
        lp = export_oct_ilp(g);
    } else {
        inst = to_vc_instance(g);
        lp = export_vc_ilp(inst.graph);
    }
    ExternalSolution ext = run_external(lp, cmd_template, timeout);

    std::vector<int> chosen;
    bool found = ext.feasible && !ext.values.empty();
    if (found) {
        if (form == IlpForm::oct) {
            for (int v = 0; v < g.n; ++v) {
                auto it = ext.values.find("c" + std::to_string(v));
                if (it != ext.values.end() && it->second != 0) chosen.push_back(v);
            }
        } else {
            for (int v = 0; v < inst.graph.n; ++v) {
                auto it = ext.values.find("x" + std::to_string(v));
                if (it != ext.values.end() && it->second != 0) chosen.push_back(v);
            }
        }
    }
    SolverReport report = report_from_assignment(
        g, form, &inst, chosen, ext.optimal, found,
        ext.optimal ? Termination::completed : Termination::deadline);
    report.elapsed = watch.seconds();
    return report;
}

SolverReport ilp_solve_enumerated(const Graph& g, IlpForm form,
                                  std::optional<double> timeout,
                                  long long node_budget,
                                  bool* flag_no_incumbent) {
    Stopwatch watch;
    VcInstance inst;
    IlpModel model;
    if (form == IlpForm::oct) {
        model = build_oct_model(g);
    } else {
        inst = to_vc_instance(g);
        model = build_vc_model(inst.graph);
    }
    EnumResult res = enumerate_model(model, timeout, node_budget);
    if (flag_no_incumbent) *flag_no_incumbent = !res.found;

    std::vector<int> chosen;
    if (res.found) {
        if (form == IlpForm::oct) {
            for (int v = 0; v < g.n; ++v)
                if (res.assignment[2 * v + 1]) chosen.push_back(v); // c after s
        } else {
            for (int v = 0; v < inst.graph.n; ++v)
                if (res.assignment[v]) chosen.push_back(v);
        }
    }
    SolverReport report = report_from_assignment(
        g, form, &inst, chosen, res.proven, res.found,
        res.proven ? Termination::completed : Termination::deadline);
    report.iterations = res.nodes;
    report.elapsed = watch.seconds();
    return report;
}

} // namespace oct
