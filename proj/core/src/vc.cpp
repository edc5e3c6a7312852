#include "oct/vc.hpp"

#include <algorithm>
#include <stdexcept>

#include "oct/reductions.hpp"

namespace oct {

VcInstance to_vc_instance(const Graph& g) {
    VcInstance inst;
    inst.original_n = g.n;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(2 * g.m + g.n));
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + g.n, v + g.n);
    }
    for (int v = 0; v < g.n; ++v) edges.emplace_back(v, v + g.n);
    inst.graph = Graph::from_edges(2 * g.n, std::move(edges));
    return inst;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& cover) {
    std::vector<char> in(g.n, 0);
    for (int v : cover) {
        if (v < 0 || v >= g.n)
            throw std::out_of_range("cover vertex out of range");
        in[v] = 1;
    }
    for (int u = 0; u < g.n; ++u) {
        if (in[u]) continue;
        for (int v : g.adj[u])
            if (!in[v]) return false;
    }
    return true;
}

std::vector<int> from_vc_solution(const VcInstance& inst,
                                  const std::vector<int>& cover) {
    if (!is_vertex_cover(inst.graph, cover))
        throw std::invalid_argument("from_vc_solution: input is not a vertex cover");
    std::vector<char> in(inst.graph.n, 0);
    for (int v : cover) in[v] = 1;
    std::vector<int> s;
    for (int v = 0; v < inst.original_n; ++v)
        if (in[v] && in[v + inst.original_n]) s.push_back(v);
    return s;
}

HalfIntegralLp lp_half_integral(const Graph& g) {
    // Bipartite double cover: left copy and right copy of every vertex; each
    // g-edge (u,v) appears as Lu-Rv and Lv-Ru. König on a maximum matching of
    // the double yields the extreme half-integral solution.
    int n = g.n;
    std::vector<int> match_left(n, -1), match_right(n, -1);
    std::vector<int> visited(n, -1);
    int stamp = 0;

    // Kuhn augmenting search from left vertex u, visited marks right side.
    auto try_augment = [&](auto&& self, int u) -> bool {
        for (int r : g.adj[u]) {
            if (visited[r] == stamp) continue;
            visited[r] = stamp;
            if (match_right[r] == -1 || self(self, match_right[r])) {
                match_left[u] = r;
                match_right[r] = u;
                return true;
            }
        }
        return false;
    };
    long long matched = 0;
    for (int u = 0; u < n; ++u) {
        ++stamp;
        if (try_augment(try_augment, u)) ++matched;
    }

    // Alternating reachability from unmatched left vertices.
    std::vector<char> reach_left(n, 0), reach_right(n, 0);
    std::vector<int> stack;
    for (int u = 0; u < n; ++u)
        if (match_left[u] == -1) {
            reach_left[u] = 1;
            stack.push_back(u);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int r : g.adj[u]) {
            if (reach_right[r]) continue;
            reach_right[r] = 1;
            int w = match_right[r];
            if (w != -1 && !reach_left[w]) {
                reach_left[w] = 1;
                stack.push_back(w);
            }
        }
    }

    HalfIntegralLp lp;
    lp.value2.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        int in_cover = 0;
        if (!reach_left[v]) ++in_cover;  // left copy in the König cover
        if (reach_right[v]) ++in_cover;  // right copy in the König cover
        lp.value2[v] = in_cover;
        lp.bound2 += in_cover;
    }
    return lp;
}

namespace {

// Branch-and-reduce state with an undo trail so branches restore in O(work).
struct BnrSolver {
    std::vector<std::vector<int>> adj;
    std::vector<char> alive;
    std::vector<int> deg;
    int alive_count = 0;
    int orig_n = 0;

    long long cur_cost = 0;
    std::vector<int> cur_cover; // may contain fold gadget ids

    long long best = 0;
    std::vector<int> best_cover; // original ids only

    struct Fold {
        int v, u, w, vnew;
        std::vector<int> arc_hosts; // vertices whose adj got vnew appended
        bool active = true;
    };
    std::vector<Fold> folds;

    enum OpType { op_remove, op_cover_mark, op_fold };
    struct Op {
        OpType type;
        int a;
    };
    std::vector<Op> trail;

    Deadline deadline;
    long long node_budget = -1;
    long long* nodes = nullptr; // shared across component sub-solves
    bool aborted = false;
    int root_lower = 0;

    explicit BnrSolver(const Graph& g) {
        orig_n = g.n;
        adj = g.adj;
        alive.assign(g.n, 1);
        deg.resize(g.n);
        for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
        alive_count = g.n;
    }

    bool out_of_budget() {
        if (aborted) return true;
        if ((node_budget >= 0 && *nodes >= node_budget) || deadline.expired())
            aborted = true;
        return aborted;
    }

    void remove_vertex(int v) {
        alive[v] = 0;
        --alive_count;
        for (int u : adj[v])
            if (alive[u]) --deg[u];
        trail.push_back({op_remove, v});
    }

    void undo_remove(int v) {
        alive[v] = 1;
        ++alive_count;
        int d = 0;
        for (int u : adj[v])
            if (alive[u]) {
                ++deg[u];
                ++d;
            }
        deg[v] = d;
    }

    void add_to_cover(int v) {
        cur_cover.push_back(v);
        ++cur_cost;
        trail.push_back({op_cover_mark, v});
        remove_vertex(v);
    }

    void fold_degree2(int v, int u, int w) {
        int vnew = static_cast<int>(adj.size());
        std::vector<int> nbrs;
        for (int x : adj[u])
            if (alive[x] && x != v) nbrs.push_back(x);
        for (int x : adj[w])
            if (alive[x] && x != v) nbrs.push_back(x);
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        remove_vertex(v);
        remove_vertex(u);
        remove_vertex(w);
        adj.push_back(nbrs);
        alive.push_back(1);
        deg.push_back(static_cast<int>(nbrs.size()));
        ++alive_count;
        Fold f;
        f.v = v;
        f.u = u;
        f.w = w;
        f.vnew = vnew;
        for (int x : nbrs) {
            adj[x].push_back(vnew);
            ++deg[x];
            f.arc_hosts.push_back(x);
        }
        ++cur_cost; // one endpoint of the fold is always paid
        folds.push_back(std::move(f));
        trail.push_back({op_fold, static_cast<int>(folds.size()) - 1});
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            Op op = trail.back();
            trail.pop_back();
            switch (op.type) {
                case op_remove:
                    undo_remove(op.a);
                    break;
                case op_cover_mark:
                    cur_cover.pop_back();
                    --cur_cost;
                    break;
                case op_fold: {
                    Fold& f = folds[op.a];
                    for (auto it = f.arc_hosts.rbegin(); it != f.arc_hosts.rend();
                         ++it) {
                        adj[*it].pop_back();
                        if (alive[f.vnew]) --deg[*it];
                    }
                    --alive_count;
                    adj.pop_back();
                    alive.pop_back();
                    deg.pop_back();
                    --cur_cost;
                    folds.pop_back();
                    break;
                }
            }
        }
    }

    // Expand the current cover through active folds into original ids.
    std::vector<int> expand_cover() const {
        std::vector<char> in(adj.size(), 0);
        for (int v : cur_cover) in[v] = 1;
        for (auto it = folds.rbegin(); it != folds.rend(); ++it) {
            if (in[it->vnew]) {
                in[it->vnew] = 0;
                in[it->u] = 1;
                in[it->w] = 1;
            } else {
                in[it->v] = 1;
            }
        }
        std::vector<int> out;
        for (int v = 0; v < orig_n; ++v)
            if (in[v]) out.push_back(v);
        return out;
    }

    // Half-integral LP on the live subgraph, aligned with lp_half_integral.
    HalfIntegralLp live_lp(std::vector<int>& ids) const {
        ids.clear();
        std::vector<int> pos(adj.size(), -1);
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            if (alive[v]) {
                pos[v] = static_cast<int>(ids.size());
                ids.push_back(v);
            }
        Graph h = Graph::empty(static_cast<int>(ids.size()));
        long long m = 0;
        for (size_t i = 0; i < ids.size(); ++i)
            for (int w : adj[ids[i]])
                if (alive[w] && pos[w] >= 0) {
                    h.adj[i].push_back(pos[w]);
                    ++m;
                }
        for (auto& list : h.adj) std::sort(list.begin(), list.end());
        h.m = m / 2;
        return lp_half_integral(h);
    }

    // Cheap rules to exhaustion, then LP persistency; repeats while anything
    // fires. Returns the live LP bound (doubled) of the stable state.
    long long reduce() {
        long long bound2 = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            // degree 0 / 1
            bool local = true;
            while (local) {
                local = false;
                for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
                    if (!alive[v]) continue;
                    if (deg[v] == 0) {
                        remove_vertex(v);
                        local = true;
                        changed = true;
                    } else if (deg[v] == 1) {
                        int u = -1;
                        for (int x : adj[v])
                            if (alive[x]) {
                                u = x;
                                break;
                            }
                        add_to_cover(u);
                        local = true;
                        changed = true;
                    }
                }
            }
            // dominance: u ~ v with N[u] ⊆ N[v] puts v in the cover
            std::vector<char> mark(adj.size(), 0);
            for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
                if (!alive[v]) continue;
                mark[v] = 1;
                for (int x : adj[v])
                    if (alive[x]) mark[x] = 1;
                bool took = false;
                for (int u : adj[v]) {
                    if (!alive[u] || deg[u] > deg[v]) continue;
                    bool subset = true;
                    for (int y : adj[u])
                        if (alive[y] && !mark[y]) {
                            subset = false;
                            break;
                        }
                    if (subset) {
                        took = true;
                        break;
                    }
                }
                mark[v] = 0;
                for (int x : adj[v]) mark[x] = 0;
                if (took) {
                    add_to_cover(v);
                    changed = true;
                }
            }
            // degree-2: adjacent neighbors take both, otherwise fold
            for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
                if (!alive[v] || deg[v] != 2) continue;
                int u = -1, w = -1;
                for (int x : adj[v]) {
                    if (!alive[x]) continue;
                    if (u == -1)
                        u = x;
                    else
                        w = x;
                }
                bool adjacent = false;
                for (int y : adj[u])
                    if (y == w) {
                        adjacent = true;
                        break;
                    }
                if (adjacent) {
                    add_to_cover(u);
                    add_to_cover(w);
                } else {
                    fold_degree2(v, u, w);
                }
                changed = true;
            }
            // LP persistency: value 1 into the cover, value 0 dropped
            std::vector<int> ids;
            HalfIntegralLp lp = live_lp(ids);
            bound2 = lp.bound2;
            for (size_t i = 0; i < ids.size(); ++i) {
                if (lp.value2[i] == 2) {
                    add_to_cover(ids[i]);
                    changed = true;
                } else if (lp.value2[i] == 0) {
                    remove_vertex(ids[i]);
                    changed = true;
                }
            }
        }
        return bound2;
    }

    void maybe_update_best() {
        if (cur_cost < best) {
            best = cur_cost;
            best_cover = expand_cover();
        }
    }

    // connected components of the live subgraph, ascending by lowest id
    std::vector<std::vector<int>> live_components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(adj.size(), 0);
        for (int root = 0; root < static_cast<int>(adj.size()); ++root) {
            if (!alive[root] || seen[root]) continue;
            std::vector<int> comp, stack{root};
            seen[root] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (int u : adj[v])
                    if (alive[u] && !seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    // Disconnected live graphs split into independently solved components:
    // the search space is multiplicative otherwise.
    bool solve_components(const std::vector<std::vector<int>>& comps,
                          size_t mark) {
        size_t mark2 = trail.size();
        bool complete = true;
        for (const auto& comp : comps) {
            Graph sub = Graph::empty(static_cast<int>(comp.size()));
            {
                std::vector<int> pos(adj.size(), -1);
                for (size_t i = 0; i < comp.size(); ++i)
                    pos[comp[i]] = static_cast<int>(i);
                long long m = 0;
                for (size_t i = 0; i < comp.size(); ++i)
                    for (int w : adj[comp[i]])
                        if (alive[w] && pos[w] >= 0) {
                            sub.adj[i].push_back(pos[w]);
                            ++m;
                        }
                for (auto& list : sub.adj) std::sort(list.begin(), list.end());
                sub.m = m / 2;
            }
            BnrSolver child(sub);
            child.deadline = deadline;
            child.node_budget = node_budget;
            child.nodes = nodes;
            child.run_root();
            if (child.aborted) {
                aborted = true;
                complete = false;
                break;
            }
            for (int v : child.best_cover) add_to_cover(comp[v]);
            for (int v : comp)
                if (alive[v]) remove_vertex(v);
            if (cur_cost >= best) {
                complete = false; // cannot improve the incumbent
                break;
            }
        }
        if (complete && alive_count == 0) maybe_update_best();
        undo_to(mark2);
        undo_to(mark);
        return true;
    }

    void search() {
        ++*nodes;
        if (out_of_budget()) return;
        size_t mark = trail.size();
        long long bound2 = reduce();
        if (alive_count == 0) {
            maybe_update_best();
            undo_to(mark);
            return;
        }
        long long lower = cur_cost + (bound2 + 1) / 2;
        if (lower >= best) {
            undo_to(mark);
            return;
        }
        auto comps = live_components();
        if (comps.size() > 1) {
            solve_components(comps, mark);
            return;
        }
        // branch vertex: max degree, lowest id
        int bv = -1;
        for (int v = 0; v < static_cast<int>(adj.size()); ++v)
            if (alive[v] && (bv == -1 || deg[v] > deg[bv])) bv = v;

        size_t mark2 = trail.size();
        add_to_cover(bv);
        search();
        undo_to(mark2);

        if (!aborted) {
            std::vector<int> nbrs;
            for (int x : adj[bv])
                if (alive[x]) nbrs.push_back(x);
            for (int x : nbrs) add_to_cover(x);
            remove_vertex(bv);
            search();
            undo_to(mark2);
        }
        undo_to(mark);
    }

    // incumbent from a maximal matching, then the full search
    void run_root() {
        std::vector<char> used(adj.size(), 0);
        std::vector<int> cover;
        for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
            if (!alive[u] || used[u]) continue;
            for (int v : adj[u])
                if (alive[v] && !used[v] && !used[u]) {
                    used[u] = used[v] = 1;
                    cover.push_back(u);
                    cover.push_back(v);
                }
        }
        best = static_cast<long long>(cover.size());
        best_cover = cover;
        {
            std::vector<int> ids;
            root_lower = static_cast<int>((live_lp(ids).bound2 + 1) / 2);
        }
        search();
    }
};

} // namespace

SolverReport solve_vc_exact(const Graph& g, std::optional<double> timeout,
                            long long node_budget) {
    Stopwatch watch;
    long long nodes = 0;
    BnrSolver solver(g);
    solver.deadline = Deadline::after(timeout);
    solver.node_budget = node_budget;
    solver.nodes = &nodes;
    solver.run_root();

    SolverReport report;
    std::sort(solver.best_cover.begin(), solver.best_cover.end());
    report.solution.vertices = solver.best_cover;
    report.solution.source = Source::vc;
    report.solution.verified = is_vertex_cover(g, solver.best_cover);
    report.upper = static_cast<int>(solver.best);
    report.lower = solver.aborted ? std::min<int>(solver.root_lower,
                                                  static_cast<int>(solver.best))
                                  : static_cast<int>(solver.best);
    report.optimal = !solver.aborted;
    report.termination =
        solver.aborted ? Termination::deadline : Termination::completed;
    report.iterations = nodes;
    report.elapsed = watch.seconds();
    return report;
}

SolverReport solve_oct_via_vc(const Graph& g, std::optional<double> timeout,
                              long long node_budget) {
    Stopwatch watch;
    ReductionPartition part = reduce_fixpoint(g);
    VcInstance inst = to_vc_instance(part.reduced);
    SolverReport vc_report = solve_vc_exact(inst.graph, timeout, node_budget);

    SolverReport report;
    report.iterations = vc_report.iterations;
    report.termination = vc_report.termination;
    report.optimal = vc_report.optimal;
    std::vector<int> s_reduced = from_vc_solution(inst, vc_report.solution.vertices);
    std::vector<int> lifted = lift_solution(part, s_reduced);
    report.solution.vertices = lifted;
    report.solution.source = Source::vc;
    report.solution.verified = verify_oct(g, lifted);
    report.upper = static_cast<int>(lifted.size());
    int vo = static_cast<int>(part.v_oct.size());
    report.lower = report.optimal
                       ? report.upper
                       : std::max(0, vc_report.lower - part.reduced.n) + vo;
    report.elapsed = watch.seconds();
    return report;
}

} // namespace oct
