#include "oct/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "oct/heuristics.hpp"
#include "oct/ic.hpp"
#include "oct/ilp.hpp"
#include "oct/io.hpp"
#include "oct/oracle.hpp"
#include "oct/reductions.hpp"
#include "oct/vc.hpp"

namespace oct {

namespace {

std::string format_double(double value, int precision) {
    if (std::isinf(value)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    return buf;
}

std::string dataset_of(const std::string& stem) {
    size_t dash = stem.rfind('-');
    if (dash == std::string::npos || dash + 1 >= stem.size()) return stem;
    for (size_t i = dash + 1; i < stem.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(stem[i]))) return stem;
    return stem.substr(0, dash);
}

struct LoadedInstance {
    InstanceRef ref;
    Graph reduced;
    int v_oct = 0;
    int ref_opt = -1; // OPT of the reduced graph; -1 when unavailable
    std::string skip_reason;
};

LoadedInstance load_and_reduce(const InstanceRef& ref, int oracle_cap,
                               double exact_timeout, bool want_ref) {
    LoadedInstance li;
    li.ref = ref;
    Graph g = load_graph_file(ref.path).graph;
    ReductionPartition part = reduce_fixpoint(g);
    li.reduced = part.reduced;
    li.v_oct = static_cast<int>(part.v_oct.size());
    if (!want_ref) return li;
    if (li.reduced.n <= oracle_cap) {
        li.ref_opt = brute_force_oct(li.reduced, oracle_cap).opt;
    } else {
        SolverReport rep = solve_oct_via_vc(li.reduced, exact_timeout);
        if (rep.optimal)
            li.ref_opt = rep.upper;
        else
            li.skip_reason = "no reference OPT within " +
                             format_double(exact_timeout, 1) + "s";
    }
    return li;
}

// One solver invocation on the reduced graph. Work units in budget mode:
// HE counts heuristic invocations, IC compression calls, ILP enumeration
// nodes, VC branch nodes.
SolverReport run_solver(const std::string& solver, const Graph& reduced,
                        double timeout, uint64_t seed, bool budget_mode,
                        long long budget, const std::string& ilp_cmd) {
    if (solver == "HE") {
        EnsembleConfig cfg;
        cfg.timeout = timeout;
        cfg.seed = seed;
        if (budget_mode) cfg.max_invocations = budget;
        return ensemble(reduced, cfg);
    }
    if (solver == "IC") {
        IcConfig cfg;
        cfg.seed = seed;
        cfg.level = ic_level_for_timeout(timeout);
        if (budget_mode)
            cfg.max_compress_calls = budget;
        else
            cfg.timeout = timeout;
        return solve_ic(reduced, cfg);
    }
    if (solver == "ILP") {
        if (!ilp_cmd.empty())
            return ilp_solve_external(reduced, IlpForm::vc, ilp_cmd, timeout);
        bool no_incumbent = false;
        SolverReport rep = ilp_solve_enumerated(
            reduced, IlpForm::vc,
            budget_mode ? std::optional<double>{} : std::optional<double>{timeout},
            budget_mode ? budget : -1, &no_incumbent);
        return rep;
    }
    if (solver == "VC") {
        if (budget_mode) return solve_oct_via_vc(reduced, std::nullopt, budget);
        return solve_oct_via_vc(reduced, timeout);
    }
    throw std::invalid_argument("unknown solver: " + solver);
}

} // namespace

std::vector<InstanceRef> discover_instances(const std::string& dir) {
    std::vector<InstanceRef> out;
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".graph") continue;
        InstanceRef ref;
        ref.name = entry.path().stem().string();
        ref.dataset = dataset_of(ref.name);
        ref.path = entry.path().string();
        out.push_back(std::move(ref));
    }
    std::sort(out.begin(), out.end(),
              [](const InstanceRef& a, const InstanceRef& b) {
                  return a.name < b.name;
              });
    return out;
}

namespace {

template <class Work>
void parallel_for(int jobs, int count, Work&& work) {
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    int threads = std::min(jobs, count);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) break;
                try {
                    work(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace

namespace {

void validate_matrix(const RunMatrix& m) {
    if (m.instances.empty())
        throw std::invalid_argument("run matrix needs at least one instance");
    if (m.solvers.empty())
        throw std::invalid_argument("run matrix needs at least one solver");
}

} // namespace

BenchTable run_heuristic_matrix(const RunMatrix& m) {
    validate_matrix(m);
    int count = static_cast<int>(m.instances.size());
    std::vector<LoadedInstance> loaded(count);
    parallel_for(m.jobs, count, [&](int i) {
        loaded[i] =
            load_and_reduce(m.instances[i], m.oracle_cap, m.exact_timeout, true);
    });

    struct Cell {
        double worst = 0.0;
        bool all_exact = true;
        int runs = 0;
    };
    std::map<std::tuple<std::string, std::string, double>, Cell> cells;
    BenchTable table;

    struct RunKey {
        int instance;
        int solver;
        int timeout;
        int seed;
    };
    std::vector<RunKey> runs;
    for (int i = 0; i < count; ++i)
        for (size_t s = 0; s < m.solvers.size(); ++s)
            for (size_t t = 0; t < m.timeouts.size(); ++t)
                for (size_t sd = 0; sd < m.seeds.size(); ++sd)
                    runs.push_back({i, static_cast<int>(s), static_cast<int>(t),
                                    static_cast<int>(sd)});

    struct RunOut {
        double ratio = 0.0;
        bool exact = false;
        bool skipped = false;
    };
    std::vector<RunOut> outs(runs.size());
    parallel_for(m.jobs, static_cast<int>(runs.size()), [&](int r) {
        const RunKey& key = runs[static_cast<size_t>(r)];
        const LoadedInstance& li = loaded[key.instance];
        RunOut& out = outs[static_cast<size_t>(r)];
        if (li.ref_opt < 0) {
            out.skipped = true;
            return;
        }
        double timeout = m.timeouts[key.timeout];
        long long budget = m.budget * (key.timeout + 1);
        SolverReport rep =
            run_solver(m.solvers[key.solver], li.reduced, timeout,
                       m.seeds[key.seed], m.budget_mode, budget, m.ilp_cmd);
        if (!verify_oct(li.reduced, rep.solution.vertices))
            throw std::logic_error("reported solution failed verification");
        int size = rep.solution.size();
        if (li.ref_opt == 0)
            out.ratio = size == 0 ? 1.0 : std::numeric_limits<double>::infinity();
        else
            out.ratio = static_cast<double>(size) / li.ref_opt;
        if (out.ratio < 1.0)
            throw std::logic_error("approximation ratio below 1: reference OPT is wrong");
        out.exact = size == li.ref_opt;
    });

    for (size_t r = 0; r < runs.size(); ++r) {
        const RunKey& key = runs[r];
        const RunOut& out = outs[r];
        if (out.skipped) continue;
        auto cell_key = std::make_tuple(loaded[key.instance].ref.dataset,
                                        m.solvers[key.solver],
                                        m.timeouts[key.timeout]);
        Cell& cell = cells[cell_key];
        cell.worst = std::max(cell.worst, out.ratio);
        cell.all_exact = cell.all_exact && out.exact;
        ++cell.runs;
    }
    for (const auto& li : loaded)
        if (!li.skip_reason.empty())
            table.notes.push_back("skipped " + li.ref.name + ": " + li.skip_reason);

    table.columns = {"dataset", "solver", "timeout", "worst_ratio", "all_exact",
                     "runs"};
    for (const auto& [key, cell] : cells) {
        table.rows.push_back({std::get<0>(key), std::get<1>(key),
                              format_double(std::get<2>(key), 3),
                              format_double(cell.worst, 2),
                              cell.all_exact ? "yes" : "no",
                              std::to_string(cell.runs)});
    }
    std::sort(table.rows.begin(), table.rows.end());
    return table;
}

BenchTable run_exact_matrix(const RunMatrix& m) {
    validate_matrix(m);
    int count = static_cast<int>(m.instances.size());
    std::vector<LoadedInstance> loaded(count);
    parallel_for(m.jobs, count, [&](int i) {
        loaded[i] = load_and_reduce(m.instances[i], m.oracle_cap,
                                    m.exact_timeout, false);
    });
    double timeout = m.timeouts.empty() ? 600.0 : m.timeouts[0];

    std::vector<std::vector<std::string>> rows(
        static_cast<size_t>(count) * m.solvers.size());
    std::vector<std::string> errors(rows.size());
    parallel_for(m.jobs, static_cast<int>(rows.size()), [&](int r) {
        int i = r / static_cast<int>(m.solvers.size());
        const std::string& solver = m.solvers[r % m.solvers.size()];
        const LoadedInstance& li = loaded[i];
        std::string opt_red = "-", opt_orig = "-", optimal = "no", work;
        try {
            SolverReport rep =
                run_solver(solver, li.reduced, timeout, m.seeds.empty() ? 1 : m.seeds[0],
                           m.budget_mode, m.budget, m.ilp_cmd);
            if (!verify_oct(li.reduced, rep.solution.vertices))
                throw std::logic_error("reported solution failed verification");
            if (rep.optimal) {
                opt_red = std::to_string(rep.upper);
                opt_orig = std::to_string(rep.upper + li.v_oct);
                optimal = "yes";
            }
            work = m.budget_mode ? std::to_string(rep.iterations)
                                 : format_double(rep.elapsed, 3);
        } catch (const std::exception& e) {
            optimal = "error";
            work = m.budget_mode ? "0" : format_double(0.0, 3);
            errors[r] = std::string("error on ") + li.ref.name + " / " + solver +
                        ": " + e.what();
        }
        rows[r] = {li.ref.dataset,
                   li.ref.name,
                   solver,
                   std::to_string(li.reduced.n),
                   std::to_string(li.reduced.m),
                   opt_red,
                   opt_orig,
                   optimal,
                   work};
    });

    BenchTable table;
    table.columns = {"dataset", "instance", "solver",   "n_reduced",
                     "m_reduced", "opt_reduced", "opt_original", "optimal",
                     m.budget_mode ? "work" : "elapsed"};
    table.rows = rows;
    for (const auto& e : errors)
        if (!e.empty()) table.notes.push_back(e);
    std::sort(table.rows.begin(), table.rows.end());
    return table;
}

BenchTable pivot_heuristic_table(const BenchTable& long_table) {
    // long schema: dataset, solver, timeout, worst_ratio, all_exact, runs
    std::vector<std::string> datasets;
    std::vector<std::pair<double, std::string>> cells; // (timeout, solver)
    for (const auto& row : long_table.rows) {
        if (std::find(datasets.begin(), datasets.end(), row[0]) == datasets.end())
            datasets.push_back(row[0]);
        std::pair<double, std::string> key{std::stod(row[2]), row[1]};
        if (std::find(cells.begin(), cells.end(), key) == cells.end())
            cells.push_back(key);
    }
    std::sort(datasets.begin(), datasets.end());
    std::sort(cells.begin(), cells.end());

    BenchTable wide;
    wide.notes = long_table.notes;
    wide.columns.push_back("dataset");
    for (const auto& [timeout, solver] : cells)
        wide.columns.push_back(solver + " @" + format_double(timeout, 3) + "s");
    std::map<std::pair<std::string, std::pair<double, std::string>>, std::string>
        value;
    for (const auto& row : long_table.rows) {
        std::string cell = row[4] == "yes" ? "exact" : row[3];
        value[{row[0], {std::stod(row[2]), row[1]}}] = cell;
    }
    for (const auto& dataset : datasets) {
        std::vector<std::string> row{dataset};
        for (const auto& cell : cells) {
            auto it = value.find({dataset, cell});
            row.push_back(it == value.end() ? "-" : it->second);
        }
        wide.rows.push_back(std::move(row));
    }
    return wide;
}

std::string table_to_csv(const BenchTable& table) {
    std::ostringstream out;
    for (size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
        out << "\n";
    }
    return out.str();
}

std::string table_to_markdown(const BenchTable& table) {
    std::ostringstream out;
    out << "|";
    for (const auto& col : table.columns) out << " " << col << " |";
    out << "\n|";
    for (size_t c = 0; c < table.columns.size(); ++c) out << " --- |";
    out << "\n";
    for (const auto& row : table.rows) {
        out << "|";
        for (const auto& cell : row) out << " " << cell << " |";
        out << "\n";
    }
    if (!table.notes.empty()) {
        out << "\n";
        for (const auto& note : table.notes) out << "- " << note << "\n";
    }
    return out.str();
}

std::string git_revision() {
    FILE* pipe = ::popen("git rev-parse HEAD 2>/dev/null", "r");
    if (!pipe) return "unknown";
    char buf[128] = {0};
    std::string out;
    while (std::fgets(buf, sizeof buf, pipe)) out += buf;
    ::pclose(pipe);
    while (!out.empty() && (out.back() == '\n' || out.back() == '\r'))
        out.pop_back();
    return out.empty() ? "unknown" : out;
}

EmitResult emit_tables(const BenchTable& table, const RunMatrix& m,
                       const std::string& out_prefix) {
    EmitResult res;
    res.csv_path = out_prefix + ".csv";
    res.md_path = out_prefix + ".md";
    res.manifest_path = out_prefix + ".manifest.json";
    write_file(res.csv_path, table_to_csv(table));
    bool heuristic_schema =
        !table.columns.empty() && table.columns.back() == "runs";
    write_file(res.md_path,
               heuristic_schema ? table_to_markdown(pivot_heuristic_table(table))
                                : table_to_markdown(table));

    nlohmann::json j;
    j["git_revision"] = git_revision();
    j["budget_mode"] = m.budget_mode;
    j["budget"] = m.budget;
    j["seeds"] = m.seeds;
    j["timeouts"] = m.timeouts;
    j["solvers"] = m.solvers;
    j["oracle_cap"] = m.oracle_cap;
    j["exact_timeout"] = m.exact_timeout;
    j["ilp_cmd"] = m.ilp_cmd;
    nlohmann::json inst = nlohmann::json::array();
    for (const auto& ref : m.instances)
        inst.push_back({{"dataset", ref.dataset},
                        {"name", ref.name},
                        {"path", ref.path}});
    j["instances"] = inst;
    j["notes"] = table.notes;
    write_file(res.manifest_path, j.dump(2) + "\n");
    return res;
}

int fetch_qubo_corpus(const std::string& dest_dir, std::string* err) {
    struct Source {
        const char* file;
        const char* prefix;
    };
    const Source sources[] = {
        {"bqp50.txt", "b-50"},
        {"bqp100.txt", "b-100"},
        {"bqpgka.txt", "gka"},
    };
    std::filesystem::create_directories(dest_dir);
    httplib::Client client("people.brunel.ac.uk", 80);
    client.set_connection_timeout(20, 0);
    client.set_read_timeout(60, 0);
    int written = 0;
    for (const auto& src : sources) {
        std::string path = std::string("/~mastjjb/jeb/orlib/files/") + src.file;
        auto res = client.Get(path.c_str());
        if (!res || res->status != 200) {
            if (err)
                *err += std::string("fetch failed for ") + src.file + " (" +
                        (res ? std::to_string(res->status) : "no connection") +
                        ")\n";
            continue;
        }
        write_file(dest_dir + "/" + src.file, res->body);
        try {
            auto instances = parse_qubo(res->body);
            for (size_t i = 0; i < instances.size(); ++i) {
                SanitizeResult sr = sanitize(instances[i]);
                std::string name =
                    std::string(src.prefix) + "-" + std::to_string(i + 1);
                write_file(dest_dir + "/" + name + ".graph",
                           write_canonical(sr.graph));
                ++written;
            }
        } catch (const ParseError& e) {
            if (err)
                *err += std::string("parse failed for ") + src.file + ": " +
                        e.what() + "\n";
        }
    }
    return written;
}

} // namespace oct
