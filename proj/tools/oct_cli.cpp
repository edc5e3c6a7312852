// Command-line front end for the OCT solver suite: sanitization, reductions,
// heuristics, exact solvers, ILP export, generators and the benchmark
// harness.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oct/bench.hpp"
#include "oct/generators.hpp"
#include "oct/heuristics.hpp"
#include "oct/ic.hpp"
#include "oct/ilp.hpp"
#include "oct/io.hpp"
#include "oct/oracle.hpp"
#include "oct/reductions.hpp"
#include "oct/rng.hpp"
#include "oct/vc.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitRefused = 3;
constexpr int kExitExternal = 4;

void print_vertices(const std::vector<int>& vs) {
    std::cout << "vertices";
    for (int v : vs) std::cout << ' ' << v;
    std::cout << '\n';
}

void print_report(const oct::SolverReport& r) {
    std::cout << "size " << r.solution.size() << '\n';
    print_vertices(r.solution.vertices);
    std::cout << "lower " << r.lower << '\n'
              << "upper " << r.upper << '\n'
              << "optimal " << (r.optimal ? "yes" : "no") << '\n'
              << "iterations " << r.iterations << '\n'
              << "termination " << oct::to_string(r.termination) << '\n'
              << "elapsed " << r.elapsed << '\n';
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<double> split_doubles(const std::string& csv) {
    std::vector<double> out;
    for (const auto& item : split_list(csv)) out.push_back(std::stod(item));
    return out;
}

struct CommonIn {
    std::string input;
    int instance = 1;
    bool numeric_labels = false;

    oct::Graph load() const {
        return oct::load_graph_file(input, instance,
                                    numeric_labels
                                        ? oct::LabelOrder::numeric
                                        : oct::LabelOrder::lexicographic)
            .graph;
    }
};

void add_input_options(CLI::App* sub, CommonIn& in) {
    sub->add_option("--input", in.input, "graph file (edge list, canonical or QUBO)")
        ->required();
    sub->add_option("--instance", in.instance,
                    "1-based instance index for QUBO files");
    sub->add_flag("--numeric-labels", in.numeric_labels,
                  "numeric-aware label ordering during sanitize");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"oct: odd cycle transversal solver suite"};
    app.require_subcommand(1);

    // global defaults, overridable per subcommand
    auto g_seed = std::make_shared<uint64_t>(1);
    auto g_timeout = std::make_shared<double>(-1.0);
    auto g_jobs = std::make_shared<int>(1);
    auto g_format = std::make_shared<std::string>("md");
    CLI::Option* g_seed_opt =
        app.add_option("--seed", *g_seed, "default seed for all subcommands");
    CLI::Option* g_timeout_opt =
        app.add_option("--timeout", *g_timeout, "default timeout in seconds");
    CLI::Option* g_jobs_opt =
        app.add_option("--jobs", *g_jobs, "default worker pool size");
    CLI::Option* g_format_opt =
        app.add_option("--format", *g_format, "default table format: csv or md");

    try {
        // ---- fetch ----------------------------------------------------
        auto* fetch = app.add_subcommand(
            "fetch", "download the QUBO corpus and write canonical instances");
        auto fetch_dest = std::make_shared<std::string>("data");
        fetch->add_option("--dest", *fetch_dest, "destination directory");
        fetch->callback([fetch_dest] {
            std::string err;
            int written = oct::fetch_qubo_corpus(*fetch_dest, &err);
            if (!err.empty()) std::cerr << err;
            std::cout << "instances written: " << written << '\n';
            if (written == 0) throw std::runtime_error("fetch wrote no instances");
        });

        // ---- sanitize -------------------------------------------------
        auto* san = app.add_subcommand(
            "sanitize", "parse, clean and canonicalize a graph file");
        auto san_in = std::make_shared<CommonIn>();
        auto san_out = std::make_shared<std::string>();
        auto san_outdir = std::make_shared<std::string>();
        add_input_options(san, *san_in);
        san->add_option("--output", *san_out, "canonical output file");
        san->add_option("--outdir", *san_outdir,
                        "write every QUBO instance into this directory");
        san->callback([san_in, san_out, san_outdir] {
            if (!san_outdir->empty()) {
                auto text = oct::read_file(san_in->input);
                auto instances = oct::parse_qubo(text);
                std::filesystem::create_directories(*san_outdir);
                std::string stem =
                    std::filesystem::path(san_in->input).stem().string();
                for (size_t i = 0; i < instances.size(); ++i) {
                    auto sr = oct::sanitize(
                        instances[i], san_in->numeric_labels
                                          ? oct::LabelOrder::numeric
                                          : oct::LabelOrder::lexicographic);
                    oct::write_file(*san_outdir + "/" + stem + "-" +
                                        std::to_string(i + 1) + ".graph",
                                    oct::write_canonical(sr.graph));
                }
                std::cout << "instances written: " << instances.size() << '\n';
                return;
            }
            oct::Graph g = san_in->load();
            std::string text = oct::write_canonical(g);
            if (san_out->empty())
                std::cout << text;
            else
                oct::write_file(*san_out, text);
            std::cerr << "n " << g.n << " m " << g.m << '\n';
        });

        // ---- reduce ---------------------------------------------------
        auto* red = app.add_subcommand(
            "reduce", "apply the reduction suite and emit the partition");
        auto red_in = std::make_shared<CommonIn>();
        auto red_out = std::make_shared<std::string>();
        auto red_part = std::make_shared<std::string>();
        add_input_options(red, *red_in);
        red->add_option("--output", *red_out, "reduced graph (canonical)")
            ->required();
        red->add_option("--partition", *red_part, "partition record (JSON)");
        red->callback([red_in, red_out, red_part] {
            oct::Graph g = red_in->load();
            oct::ReductionPartition p = oct::reduce_fixpoint(g);
            oct::write_file(*red_out, oct::write_canonical(p.reduced));
            if (!red_part->empty())
                oct::write_file(*red_part, oct::partition_to_json(p));
            std::cout << "n " << g.n << " -> " << p.reduced.n << '\n'
                      << "m " << g.m << " -> " << p.reduced.m << '\n'
                      << "v_removed " << p.v_removed.size() << '\n'
                      << "v_oct " << p.v_oct.size() << '\n'
                      << "v_bip " << p.v_bip.size() << '\n'
                      << "v_rest " << p.v_rest.size() << '\n';
        });

        // ---- heuristic ------------------------------------------------
        auto* heur = app.add_subcommand("heuristic", "heuristic ensemble solver");
        auto h_in = std::make_shared<CommonIn>();
        auto h_timeout = std::make_shared<double>(1.0);
        auto h_seed = std::make_shared<uint64_t>(1);
        auto h_only = std::make_shared<std::string>();
        auto h_budget = std::make_shared<long long>(-1);
        add_input_options(heur, *h_in);
        auto* h_timeout_opt = heur->add_option("--timeout", *h_timeout, "seconds");
        auto* h_seed_opt = heur->add_option("--seed", *h_seed, "master seed");
        heur->add_option("--only", *h_only, "dfs|bfs|luby|mindeg");
        heur->add_option("--budget", *h_budget,
                         "run exactly this many heuristic invocations");
        heur->callback([h_in, h_timeout, h_seed, h_only, h_budget, h_timeout_opt,
                        h_seed_opt, g_seed, g_seed_opt, g_timeout,
                        g_timeout_opt] {
            if (!h_seed_opt->count() && g_seed_opt->count()) *h_seed = *g_seed;
            if (!h_timeout_opt->count() && g_timeout_opt->count() &&
                *g_timeout > 0)
                *h_timeout = *g_timeout;
            oct::Graph g = h_in->load();
            oct::EnsembleConfig cfg;
            cfg.timeout = *h_timeout;
            cfg.seed = *h_seed;
            cfg.max_invocations = *h_budget;
            if (!h_only->empty()) {
                std::map<std::string, oct::HeuristicKind> kinds{
                    {"dfs", oct::HeuristicKind::dfs},
                    {"bfs", oct::HeuristicKind::bfs},
                    {"luby", oct::HeuristicKind::luby},
                    {"mindeg", oct::HeuristicKind::mindeg}};
                auto it = kinds.find(*h_only);
                if (it == kinds.end())
                    throw CLI::ValidationError("--only", "unknown heuristic");
                cfg.enabled = {it->second};
            }
            print_report(oct::ensemble(g, cfg));
        });

        // ---- ic -------------------------------------------------------
        auto* ic = app.add_subcommand("ic", "iterative compression solver");
        auto ic_in = std::make_shared<CommonIn>();
        auto ic_level = std::make_shared<int>(-1);
        auto ic_timeout = std::make_shared<double>(-1.0);
        auto ic_seed = std::make_shared<uint64_t>(1);
        auto ic_budget = std::make_shared<long long>(-1);
        add_input_options(ic, *ic_in);
        ic->add_option("--level", *ic_level, "ordering level p in {0,1,2}");
        auto* ic_timeout_opt = ic->add_option("--timeout", *ic_timeout, "seconds");
        auto* ic_seed_opt = ic->add_option("--seed", *ic_seed, "seed");
        ic->add_option("--budget", *ic_budget, "max compression calls");
        ic->callback([ic_in, ic_level, ic_timeout, ic_seed, ic_budget,
                      ic_timeout_opt, ic_seed_opt, g_seed, g_seed_opt, g_timeout,
                      g_timeout_opt] {
            if (!ic_seed_opt->count() && g_seed_opt->count()) *ic_seed = *g_seed;
            if (!ic_timeout_opt->count() && g_timeout_opt->count())
                *ic_timeout = *g_timeout;
            oct::Graph g = ic_in->load();
            oct::IcConfig cfg;
            if (*ic_timeout >= 0) cfg.timeout = *ic_timeout;
            cfg.level =
                *ic_level >= 0 ? *ic_level : oct::ic_level_for_timeout(cfg.timeout);
            cfg.seed = *ic_seed;
            cfg.max_compress_calls = *ic_budget;
            print_report(oct::solve_ic(g, cfg));
        });

        // ---- vc-solve / vc-transform -----------------------------------
        auto* vcs = app.add_subcommand(
            "vc-solve", "solve OCT end to end through the vertex cover route");
        auto vcs_in = std::make_shared<CommonIn>();
        auto vcs_timeout = std::make_shared<double>(-1.0);
        add_input_options(vcs, *vcs_in);
        auto* vcs_timeout_opt =
            vcs->add_option("--timeout", *vcs_timeout, "seconds");
        vcs->callback([vcs_in, vcs_timeout, vcs_timeout_opt, g_timeout,
                       g_timeout_opt] {
            if (!vcs_timeout_opt->count() && g_timeout_opt->count())
                *vcs_timeout = *g_timeout;
            oct::Graph g = vcs_in->load();
            std::optional<double> timeout;
            if (*vcs_timeout >= 0) timeout = *vcs_timeout;
            print_report(oct::solve_oct_via_vc(g, timeout));
        });

        auto* vct = app.add_subcommand(
            "vc-transform", "write the doubled vertex cover instance");
        auto vct_in = std::make_shared<CommonIn>();
        auto vct_out = std::make_shared<std::string>();
        add_input_options(vct, *vct_in);
        vct->add_option("--output", *vct_out, "canonical output")->required();
        vct->callback([vct_in, vct_out] {
            oct::Graph g = vct_in->load();
            oct::write_file(*vct_out,
                            oct::write_canonical(oct::to_vc_instance(g).graph));
        });

        // ---- ilp-export / ilp-solve / ilp-enum --------------------------
        auto* ile = app.add_subcommand("ilp-export", "write an LP-format model");
        auto ile_in = std::make_shared<CommonIn>();
        auto ile_form = std::make_shared<std::string>("vc");
        auto ile_out = std::make_shared<std::string>();
        add_input_options(ile, *ile_in);
        ile->add_option("--form", *ile_form,
                        "oct: direct; vc: doubled instance cover model");
        ile->add_option("--output", *ile_out, "LP file")->required();
        ile->callback([ile_in, ile_form, ile_out] {
            oct::Graph g = ile_in->load();
            std::string text;
            if (*ile_form == "oct")
                text = oct::export_oct_ilp(g);
            else if (*ile_form == "vc")
                text = oct::export_vc_ilp(oct::to_vc_instance(g).graph);
            else
                throw CLI::ValidationError("--form", "expected oct or vc");
            oct::write_file(*ile_out, text);
        });

        auto* ils = app.add_subcommand(
            "ilp-solve", "solve through an external MIP solver command");
        auto ils_in = std::make_shared<CommonIn>();
        auto ils_cmd = std::make_shared<std::string>();
        auto ils_timeout = std::make_shared<double>(600.0);
        auto ils_form = std::make_shared<std::string>("vc");
        auto ils_no_reduce = std::make_shared<bool>(false);
        add_input_options(ils, *ils_in);
        ils->add_option("--cmd", *ils_cmd,
                        "command template with {input} {output} {timeout}")
            ->required();
        auto* ils_timeout_opt =
            ils->add_option("--timeout", *ils_timeout, "seconds");
        ils->add_option("--form", *ils_form, "oct or vc");
        ils->add_flag("--no-reduce", *ils_no_reduce,
                      "skip the reduction preprocessing");
        ils->callback([ils_in, ils_cmd, ils_timeout, ils_form, ils_no_reduce,
                       ils_timeout_opt, g_timeout, g_timeout_opt] {
            if (!ils_timeout_opt->count() && g_timeout_opt->count() &&
                *g_timeout > 0)
                *ils_timeout = *g_timeout;
            oct::Graph g = ils_in->load();
            oct::IlpForm form =
                *ils_form == "oct" ? oct::IlpForm::oct : oct::IlpForm::vc;
            if (*ils_no_reduce) {
                print_report(oct::ilp_solve_external(g, form, *ils_cmd,
                                                     *ils_timeout));
                return;
            }
            oct::ReductionPartition p = oct::reduce_fixpoint(g);
            oct::SolverReport rep =
                oct::ilp_solve_external(p.reduced, form, *ils_cmd, *ils_timeout);
            std::vector<int> lifted =
                oct::lift_solution(p, rep.solution.vertices);
            rep.solution.vertices = lifted;
            rep.solution.verified = oct::verify_oct(g, lifted);
            rep.upper = static_cast<int>(lifted.size());
            rep.lower = rep.optimal ? rep.upper : 0;
            print_report(rep);
        });

        auto* ien = app.add_subcommand(
            "ilp-enum", "exhaustively solve a small LP-format model");
        auto ien_in = std::make_shared<std::string>();
        auto ien_out = std::make_shared<std::string>();
        auto ien_timeout = std::make_shared<double>(-1.0);
        ien->add_option("--input", *ien_in, "LP file")->required();
        ien->add_option("--output", *ien_out, "solution file")->required();
        ien->add_option("--timeout", *ien_timeout, "seconds");
        ien->callback([ien_in, ien_out, ien_timeout] {
            oct::IlpModel model = oct::parse_lp(oct::read_file(*ien_in));
            std::optional<double> timeout;
            if (*ien_timeout >= 0) timeout = *ien_timeout;
            oct::EnumResult res = oct::enumerate_model(model, timeout);
            std::ostringstream out;
            if (!res.found) {
                out << "status none\n";
            } else {
                out << "status " << (res.proven ? "optimal" : "feasible") << '\n';
                out << "objective " << res.best_obj << '\n';
                for (size_t v = 0; v < model.var_names.size(); ++v)
                    out << model.var_names[v] << ' '
                        << (res.assignment[v] ? 1 : 0) << '\n';
            }
            oct::write_file(*ien_out, out.str());
            std::cout << (res.found ? "objective " + std::to_string(res.best_obj)
                                    : std::string("no incumbent"))
                      << '\n';
        });

        // ---- generate / lookalike ---------------------------------------
        auto* gen = app.add_subcommand("generate", "synthetic graph generators");
        auto gen_family = std::make_shared<std::string>();
        auto gen_n = std::make_shared<int>(0);
        auto gen_p = std::make_shared<double>(0.0);
        auto gen_no = std::make_shared<int>(0);
        auto gen_b = std::make_shared<double>(0.5);
        auto gen_c = std::make_shared<int>(1);
        auto gen_degrees = std::make_shared<std::string>();
        auto gen_seed = std::make_shared<uint64_t>(1);
        auto gen_out = std::make_shared<std::string>();
        gen->add_option("--family", *gen_family, "er|tunable-oct|chung-lu|ba")
            ->required();
        gen->add_option("--n", *gen_n, "vertex count");
        gen->add_option("--p", *gen_p, "edge probability");
        gen->add_option("--n-o", *gen_no, "transversal pool size");
        gen->add_option("--b", *gen_b, "bipartite balance");
        gen->add_option("--c", *gen_c, "attachment count");
        gen->add_option("--degrees", *gen_degrees, "comma list for chung-lu");
        auto* gen_seed_opt = gen->add_option("--seed", *gen_seed, "seed");
        gen->add_option("--output", *gen_out, "canonical output file");
        gen->callback([gen_family, gen_n, gen_p, gen_no, gen_b, gen_c,
                       gen_degrees, gen_seed, gen_out, gen_seed_opt, g_seed,
                       g_seed_opt] {
            if (!gen_seed_opt->count() && g_seed_opt->count())
                *gen_seed = *g_seed;
            oct::Graph g;
            if (*gen_family == "er") {
                g = oct::erdos_renyi(*gen_n, *gen_p, *gen_seed);
            } else if (*gen_family == "tunable-oct") {
                g = oct::tunable_oct(*gen_n, *gen_p, *gen_no, *gen_b, *gen_seed);
            } else if (*gen_family == "chung-lu") {
                std::vector<int> degrees;
                for (const auto& tok : split_list(*gen_degrees))
                    degrees.push_back(std::stoi(tok));
                auto res = oct::chung_lu(degrees, *gen_seed);
                if (res.clamped > 0)
                    std::cerr << "clamped pair probabilities: " << res.clamped
                              << '\n';
                g = res.graph;
            } else if (*gen_family == "ba") {
                g = oct::barabasi_albert(*gen_n, *gen_c, *gen_seed);
            } else {
                throw CLI::ValidationError("--family", "unknown family");
            }
            std::string text = oct::write_canonical(g);
            if (gen_out->empty())
                std::cout << text;
            else
                oct::write_file(*gen_out, text);
            std::cerr << "n " << g.n << " m " << g.m << '\n';
        });

        auto* look = app.add_subcommand(
            "lookalike", "derive the four synthetic analogues of a graph");
        auto look_in = std::make_shared<CommonIn>();
        auto look_upper = std::make_shared<int>(0);
        auto look_outdir = std::make_shared<std::string>();
        auto look_seed = std::make_shared<uint64_t>(1);
        add_input_options(look, *look_in);
        look->add_option("--oct-upper", *look_upper,
                         "upper bound on OPT of the reference graph")
            ->required();
        look->add_option("--outdir", *look_outdir, "output directory")->required();
        auto* look_seed_opt = look->add_option("--seed", *look_seed, "seed");
        look->callback([look_in, look_upper, look_outdir, look_seed,
                        look_seed_opt, g_seed, g_seed_opt] {
            if (!look_seed_opt->count() && g_seed_opt->count())
                *look_seed = *g_seed;
            oct::Graph g = look_in->load();
            auto configs = oct::lookalike_configs(g, *look_upper);
            std::filesystem::create_directories(*look_outdir);
            nlohmann::json manifest;
            manifest["seed"] = *look_seed;
            manifest["reference"] = {{"n", g.n}, {"m", g.m}};
            auto emit = [&](const char* name,
                            const std::optional<oct::GeneratorConfig>& cfg) {
                if (!cfg) {
                    manifest[name] = nullptr;
                    return;
                }
                oct::GeneratorConfig c = *cfg;
                c.seed = *look_seed;
                long long clamped = 0;
                oct::Graph out;
                if (c.family == oct::Family::chung_lu) {
                    auto res = oct::chung_lu(c.degrees, c.seed);
                    out = res.graph;
                    clamped = res.clamped;
                } else {
                    out = oct::generate(c);
                }
                oct::write_file(*look_outdir + "/" + name + ".graph",
                                oct::write_canonical(out));
                nlohmann::json jc;
                jc["family"] = oct::to_string(c.family);
                jc["n"] = c.n;
                jc["seed"] = c.seed;
                jc["achieved_m"] = out.m;
                switch (c.family) {
                    case oct::Family::erdos_renyi:
                        jc["p"] = c.p;
                        break;
                    case oct::Family::tunable_oct:
                        jc["p"] = c.p;
                        jc["n_o"] = c.n_o;
                        jc["b"] = c.b;
                        break;
                    case oct::Family::chung_lu:
                        jc["degrees"] = c.degrees;
                        jc["clamped"] = clamped;
                        break;
                    case oct::Family::barabasi_albert:
                        jc["c"] = c.c;
                        break;
                }
                manifest[name] = jc;
            };
            emit("er", configs.er);
            emit("tunable-oct", configs.tunable);
            emit("chung-lu", configs.chung_lu);
            emit("barabasi-albert", configs.ba);
            oct::write_file(*look_outdir + "/manifest.json",
                            manifest.dump(2) + "\n");
        });

        // ---- oracle -----------------------------------------------------
        auto* ora = app.add_subcommand("oracle", "brute-force ground truth");
        auto ora_in = std::make_shared<CommonIn>();
        auto ora_problem = std::make_shared<std::string>("oct");
        auto ora_cap = std::make_shared<int>(oct::kOracleDefaultCap);
        add_input_options(ora, *ora_in);
        ora->add_option("--problem", *ora_problem, "oct or vc");
        ora->add_option("--cap", *ora_cap, "refuse instances larger than this");
        ora->callback([ora_in, ora_problem, ora_cap] {
            oct::Graph g = ora_in->load();
            oct::OracleResult res;
            if (*ora_problem == "oct")
                res = oct::brute_force_oct(g, *ora_cap);
            else if (*ora_problem == "vc")
                res = oct::brute_force_vc(g, *ora_cap);
            else
                throw CLI::ValidationError("--problem", "expected oct or vc");
            std::cout << "opt " << res.opt << '\n';
            print_vertices(res.witness);
        });

        // ---- bench ------------------------------------------------------
        auto* bench = app.add_subcommand("bench", "experiment harness");
        bench->require_subcommand(1);
        struct BenchArgs {
            std::string instances;
            std::string solvers = "HE,IC,ILP";
            std::string timeouts = "0.01,0.1,1,10";
            std::string seeds = "1";
            std::string out = "bench";
            std::string ilp_cmd;
            std::string format = "md";
            long long budget = -1;
            int jobs = 1;
            int oracle_cap = 16;
            double exact_timeout = 600.0;
        };
        auto add_bench_options = [g_seed, g_seed_opt, g_jobs, g_jobs_opt,
                                  g_format, g_format_opt](
                                     CLI::App* sub,
                                     std::shared_ptr<BenchArgs> a) {
            sub->add_option("--instances", a->instances,
                            "directory of .graph files")
                ->required();
            sub->add_option("--solvers", a->solvers, "comma list of HE,IC,ILP,VC");
            sub->add_option("--timeouts", a->timeouts, "comma list of seconds");
            sub->add_option("--seeds", a->seeds, "comma list of seeds");
            sub->add_option("--out", a->out, "output prefix");
            sub->add_option("--ilp-cmd", a->ilp_cmd,
                            "external MIP command template");
            auto* format_opt =
                sub->add_option("--format", a->format, "stdout format: csv or md");
            sub->add_option("--budget", a->budget,
                            "fixed work units (enables time-free mode)");
            auto* jobs_opt = sub->add_option("--jobs", a->jobs, "worker pool size");
            sub->add_option("--oracle-cap", a->oracle_cap,
                            "reference OPT via oracle up to this size");
            sub->add_option("--exact-timeout", a->exact_timeout,
                            "reference OPT solve deadline");
            auto* seeds_opt = sub->get_option("--seeds");
            sub->parse_complete_callback([a, seeds_opt, jobs_opt, format_opt,
                                          g_seed, g_seed_opt, g_jobs, g_jobs_opt,
                                          g_format, g_format_opt] {
                if (!seeds_opt->count() && g_seed_opt->count())
                    a->seeds = std::to_string(*g_seed);
                if (!jobs_opt->count() && g_jobs_opt->count()) a->jobs = *g_jobs;
                if (!format_opt->count() && g_format_opt->count())
                    a->format = *g_format;
            });
        };
        auto make_matrix = [](const BenchArgs& a) {
            oct::RunMatrix m;
            m.instances = oct::discover_instances(a.instances);
            if (m.instances.empty())
                throw oct::ParseError(1, "no .graph instances in " + a.instances);
            m.solvers = split_list(a.solvers);
            for (const auto& s : m.solvers)
                if (s != "HE" && s != "IC" && s != "ILP" && s != "VC")
                    throw CLI::ValidationError("--solvers",
                                               "unknown solver: " + s);
            m.timeouts = split_doubles(a.timeouts);
            m.seeds.clear();
            for (const auto& s : split_list(a.seeds))
                m.seeds.push_back(std::stoull(s));
            if (m.seeds.empty()) m.seeds = {1};
            m.budget_mode = a.budget >= 0;
            if (m.budget_mode) m.budget = a.budget;
            m.jobs = a.jobs;
            m.oracle_cap = a.oracle_cap;
            m.exact_timeout = a.exact_timeout;
            m.ilp_cmd = a.ilp_cmd;
            return m;
        };
        auto emit_and_print = [](const oct::BenchTable& table,
                                 const oct::RunMatrix& m, const BenchArgs& a) {
            oct::EmitResult res = oct::emit_tables(table, m, a.out);
            bool heuristic_schema =
                !table.columns.empty() && table.columns.back() == "runs";
            if (a.format == "csv")
                std::cout << oct::table_to_csv(table);
            else if (heuristic_schema)
                std::cout << oct::table_to_markdown(
                    oct::pivot_heuristic_table(table));
            else
                std::cout << oct::table_to_markdown(table);
            std::cerr << "wrote " << res.csv_path << ", " << res.md_path << ", "
                      << res.manifest_path << '\n';
        };

        auto hargs = std::make_shared<BenchArgs>();
        auto* bh = bench->add_subcommand(
            "heuristics", "approximation-factor matrix on reduced instances");
        add_bench_options(bh, hargs);
        bh->callback([hargs, make_matrix, emit_and_print] {
            oct::RunMatrix m = make_matrix(*hargs);
            emit_and_print(oct::run_heuristic_matrix(m), m, *hargs);
        });

        auto eargs = std::make_shared<BenchArgs>();
        auto* be = bench->add_subcommand("exact",
                                         "exact-solve matrix with one deadline");
        eargs->solvers = "VC,IC,ILP";
        eargs->timeouts = "600";
        add_bench_options(be, eargs);
        be->callback([eargs, make_matrix, emit_and_print] {
            oct::RunMatrix m = make_matrix(*eargs);
            emit_and_print(oct::run_exact_matrix(m), m, *eargs);
        });

        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const oct::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParseError;
    } catch (const oct::OracleRefused& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitRefused;
    } catch (const oct::ConfigError& e) {
        std::cerr << "external solver configuration error: " << e.what() << '\n';
        return kExitExternal;
    } catch (const oct::IntegrationError& e) {
        std::cerr << "external solver integration error: " << e.what() << '\n';
        if (!e.raw_output.empty()) std::cerr << e.raw_output << '\n';
        return kExitExternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
