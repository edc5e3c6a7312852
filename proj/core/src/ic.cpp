#include "oct/ic.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "oct/heuristics.hpp"
#include "oct/rng.hpp"

namespace oct {

int ic_level_for_timeout(std::optional<double> timeout) {
    return (timeout && *timeout < 1.0) ? 1 : 2;
}

std::vector<int> build_ordering(const Graph& g, const IcConfig& cfg) {
    if (cfg.level < 0 || cfg.level > 2)
        throw std::invalid_argument("ic level must be 0, 1 or 2");
    std::vector<int> ordering;
    ordering.reserve(g.n);
    if (cfg.level == 0) {
        for (int v = 0; v < g.n; ++v) ordering.push_back(v);
        return ordering;
    }
    if (!cfg.jumpstart)
        throw std::invalid_argument("ic levels 1 and 2 need a jump-start solution");
    const std::vector<int>& s = cfg.jumpstart->vertices;
    if (!verify_oct(g, s))
        throw std::invalid_argument("jump-start solution is not a feasible OCT");
    std::vector<char> in_s(g.n, 0);
    for (int v : s) in_s[v] = 1;
    for (int v = 0; v < g.n; ++v)
        if (!in_s[v]) ordering.push_back(v);
    std::vector<int> suffix(s.begin(), s.end());
    std::sort(suffix.begin(), suffix.end());
    if (cfg.level == 2 && !suffix.empty()) {
        Graph sub = induced_subgraph(g, suffix);
        DegeneracyOrder dg = degeneracy_ordering(sub);
        std::vector<int> rev;
        rev.reserve(suffix.size());
        for (auto it = dg.order.rbegin(); it != dg.order.rend(); ++it)
            rev.push_back(suffix[*it]);
        suffix = rev;
    }
    ordering.insert(ordering.end(), suffix.begin(), suffix.end());
    return ordering;
}

namespace {

// Edmonds-Karp over a vertex-split network, rebuilt cheaply between the
// O(3^k) partition assignments of one compression call.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs; // reverse arc at index ^ 1
    std::vector<std::vector<int>> head;
    std::vector<int> base_cap;
    int nodes = 0;

    void init(int node_count) {
        nodes = node_count;
        head.assign(node_count, {});
        arcs.clear();
        base_cap.clear();
    }
    int add_arc(int from, int to, int cap) {
        int idx = static_cast<int>(arcs.size());
        arcs.push_back({to, cap});
        arcs.push_back({from, 0});
        head[from].push_back(idx);
        head[to].push_back(idx + 1);
        base_cap.push_back(cap);
        base_cap.push_back(0);
        return idx;
    }
    void reset() {
        for (size_t i = 0; i < arcs.size(); ++i) arcs[i].cap = base_cap[i];
    }
    void set_cap(int idx, int cap) { arcs[idx].cap = cap; }

    // Augments until the flow would exceed `limit`; returns the flow found
    // (at most limit + 1). `tick` runs between augmenting paths and aborts
    // the search when it returns false.
    template <class Tick>
    int max_flow_capped(int src, int snk, int limit, Tick&& tick, bool* aborted) {
        int flow = 0;
        std::vector<int> parent(nodes);
        while (flow <= limit) {
            if (!tick()) {
                *aborted = true;
                return flow;
            }
            std::fill(parent.begin(), parent.end(), -1);
            parent[src] = -2;
            std::queue<int> q;
            q.push(src);
            bool found = false;
            while (!q.empty() && !found) {
                int u = q.front();
                q.pop();
                for (int idx : head[u]) {
                    const Arc& a = arcs[idx];
                    if (a.cap > 0 && parent[a.to] == -1) {
                        parent[a.to] = idx;
                        if (a.to == snk) {
                            found = true;
                            break;
                        }
                        q.push(a.to);
                    }
                }
            }
            if (!found) break;
            for (int v = snk; v != src;) {
                int idx = parent[v];
                arcs[idx].cap -= 1;
                arcs[idx ^ 1].cap += 1;
                v = arcs[idx ^ 1].to;
            }
            ++flow;
        }
        return flow;
    }

    std::vector<char> reachable(int src) const {
        std::vector<char> seen(nodes, 0);
        std::vector<int> stack{src};
        seen[src] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int idx : head[u]) {
                const Arc& a = arcs[idx];
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }
};

struct IcContext {
    Deadline deadline;
    long long max_compress_calls = -1;
    long long compress_calls = 0;
    bool aborted = false;

    bool tick() {
        if (aborted) return false;
        if (deadline.expired()) {
            aborted = true;
            return false;
        }
        return true;
    }
    bool allow_call() {
        if (aborted) return false;
        if (max_compress_calls >= 0 && compress_calls >= max_compress_calls) {
            aborted = true;
            return false;
        }
        ++compress_calls;
        return tick();
    }
};

std::optional<std::vector<int>> compress_impl(const Graph& h,
                                              const std::vector<int>& s_in,
                                              IcContext& ctx) {
    if (!verify_oct(h, s_in))
        throw std::invalid_argument("compress: old solution is not a feasible OCT");
    if (s_in.empty()) return std::nullopt;
    std::vector<int> s(s_in);
    std::sort(s.begin(), s.end());
    int k = static_cast<int>(s.size()) - 1;

    std::vector<char> in_s(h.n, 0);
    for (int v : s) in_s[v] = 1;
    auto coloring = two_color_excluding(h, in_s);

    // B0: the bipartite remainder, compacted for the flow network.
    std::vector<int> pos(h.n, -1), b0;
    for (int v = 0; v < h.n; ++v)
        if (!in_s[v]) {
            pos[v] = static_cast<int>(b0.size());
            b0.push_back(v);
        }
    int b = static_cast<int>(b0.size());

    // s-neighbor lists of B0 vertices, as indices into s.
    std::vector<std::vector<int>> s_nbrs(b);
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
        for (int u : h.adj[s[i]])
            if (!in_s[u]) s_nbrs[pos[u]].push_back(i);

    // adjacency among the old solution, for same-side pruning
    std::vector<std::vector<char>> s_adj(s.size(),
                                         std::vector<char>(s.size(), 0));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (h.has_edge(s[i], s[j])) s_adj[i][j] = s_adj[j][i] = 1;

    // nodes: in = 2i, out = 2i + 1, then source and sink
    FlowNet net;
    int src = 2 * b, snk = 2 * b + 1;
    net.init(2 * b + 2);
    const int kInf = h.n + 5;
    std::vector<int> split_arc(b), src_arc(b), snk_arc(b);
    for (int i = 0; i < b; ++i) split_arc[i] = net.add_arc(2 * i, 2 * i + 1, 1);
    for (int i = 0; i < b; ++i) {
        for (int w : h.adj[b0[i]]) {
            if (in_s[w]) continue;
            int j = pos[w];
            net.add_arc(2 * i + 1, 2 * j, kInf);
        }
    }
    for (int i = 0; i < b; ++i) src_arc[i] = net.add_arc(src, 2 * i, 0);
    for (int i = 0; i < b; ++i) snk_arc[i] = net.add_arc(2 * i + 1, snk, 0);

    // assignment of each s vertex: 0 transversal, 1 left, 2 right
    std::vector<int> assign(s.size(), -1);
    std::vector<int> result;
    // demand per B0 vertex for the current leaf: 0 none, 1 left, 2 right,
    // 3 contradictory
    std::vector<int> demand(b, 0);

    auto evaluate_leaf = [&](int t_count) -> bool {
        std::fill(demand.begin(), demand.end(), 0);
        for (int i = 0; i < b; ++i) {
            for (int si : s_nbrs[i]) {
                if (assign[si] == 0) continue;
                int want = assign[si] == 1 ? 2 : 1; // opposite side of the anchor
                demand[i] |= want;
            }
        }
        int forced = 0;
        for (int i = 0; i < b; ++i)
            if (demand[i] == 3) ++forced;
        if (t_count + forced > k) return false;
        int budget = k - t_count - forced;

        net.reset();
        for (int i = 0; i < b; ++i) {
            if (demand[i] == 3) {
                net.set_cap(split_arc[i], 0);
                continue;
            }
            if (demand[i] == 0) continue;
            bool col_left = coloring->color[b0[i]] == Color::left;
            bool want_left = demand[i] == 1;
            // type 0 keeps the precomputed coloring, type 1 flips it
            bool flip = col_left != want_left;
            if (!flip)
                net.set_cap(src_arc[i], kInf);
            else
                net.set_cap(snk_arc[i], kInf);
        }
        bool flow_aborted = false;
        int flow = net.max_flow_capped(src, snk, budget,
                                       [&] { return ctx.tick(); }, &flow_aborted);
        if (flow_aborted || flow > budget) return false;

        auto reach = net.reachable(src);
        result.clear();
        for (size_t i = 0; i < s.size(); ++i)
            if (assign[i] == 0) result.push_back(s[i]);
        for (int i = 0; i < b; ++i) {
            if (demand[i] == 3)
                result.push_back(b0[i]);
            else if (reach[2 * i] && !reach[2 * i + 1])
                result.push_back(b0[i]);
        }
        std::sort(result.begin(), result.end());
        return static_cast<int>(result.size()) <= k;
    };

    // depth-first over ternary assignments; adjacent s vertices never share
    // a partite set, and the first non-transversal vertex is pinned left to
    // kill the left/right mirror.
    bool found = false;
    auto dfs = [&](auto&& self, size_t pos_i, int t_count, bool saw_side) -> bool {
        if (ctx.aborted) return false;
        if (pos_i == s.size()) return evaluate_leaf(t_count);
        for (int choice : {0, 1, 2}) {
            if (choice == 0) {
                if (t_count + 1 > k) continue;
            } else {
                if (!saw_side && choice == 2) continue; // mirror symmetry
                bool ok = true;
                for (size_t j = 0; j < pos_i; ++j)
                    if (assign[j] == choice && s_adj[j][pos_i]) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            assign[pos_i] = choice;
            if (self(self, pos_i + 1, t_count + (choice == 0 ? 1 : 0),
                     saw_side || choice != 0))
                return true;
            if (ctx.aborted) return false;
        }
        assign[pos_i] = -1;
        return false;
    };
    found = dfs(dfs, 0, 0, false);
    if (!found) return std::nullopt;
    return result;
}

struct PrefixGraph {
    Graph graph;
    std::vector<int> keep; // local -> original id
};

PrefixGraph prefix_graph(const Graph& g, const std::vector<int>& ordering,
                         int count) {
    PrefixGraph p;
    p.keep.assign(ordering.begin(), ordering.begin() + count);
    std::sort(p.keep.begin(), p.keep.end());
    p.graph = induced_subgraph(g, p.keep);
    return p;
}

} // namespace

std::optional<std::vector<int>> compress(const Graph& h,
                                         const std::vector<int>& s) {
    IcContext ctx;
    auto res = compress_impl(h, s, ctx);
    if (res && !verify_oct(h, *res))
        throw std::logic_error("compress produced an infeasible solution");
    return res;
}

SolverReport solve_ic(const Graph& g, IcConfig cfg) {
    Stopwatch watch;
    if (cfg.level < 0 || cfg.level > 2)
        throw std::invalid_argument("ic level must be 0, 1 or 2");
    if (cfg.level >= 1 && !cfg.jumpstart) {
        EnsembleConfig ecfg;
        ecfg.seed = mix_seed(cfg.seed, 0x6a5u, 0);
        ecfg.max_invocations = 32;
        cfg.jumpstart = ensemble(g, ecfg).solution;
    }
    int n = g.n;
    IcState state;
    state.ordering = build_ordering(g, cfg);

    IcContext ctx;
    ctx.deadline = Deadline::after(cfg.timeout);
    ctx.max_compress_calls = cfg.max_compress_calls;

    if (cfg.level == 0) {
        state.frontier = 0;
    } else {
        int hs = cfg.jumpstart->size();
        if (hs == 0) {
            state.frontier = n;
        } else {
            state.frontier = n - 1;
            state.current.assign(state.ordering.begin() + (n - hs),
                                 state.ordering.begin() + (n - 1));
        }
    }
    state.lower = 0;
    state.upper =
        static_cast<int>(state.current.size()) + (n - state.frontier);

    for (int i = state.frontier; i < n; ++i) {
        if (!ctx.tick()) break;
        state.current.push_back(state.ordering[i]);
        state.frontier = i + 1;
        // compress until it certifies optimality on the current prefix
        while (!state.current.empty()) {
            if (!ctx.allow_call()) break;
            PrefixGraph prefix = prefix_graph(g, state.ordering, i + 1);
            std::vector<int> local;
            local.reserve(state.current.size());
            for (int v : state.current) {
                auto it = std::lower_bound(prefix.keep.begin(), prefix.keep.end(), v);
                local.push_back(static_cast<int>(it - prefix.keep.begin()));
            }
            auto res = compress_impl(prefix.graph, local, ctx);
            if (ctx.aborted) break;
            if (!res) {
                state.lower =
                    std::max(state.lower, static_cast<int>(state.current.size()));
                break;
            }
            state.current.clear();
            for (int lv : *res) state.current.push_back(prefix.keep[lv]);
        }
        state.upper =
            static_cast<int>(state.current.size()) + (n - state.frontier);
        if (ctx.aborted) break;
    }

    SolverReport report;
    report.seed = cfg.seed;
    report.iterations = ctx.compress_calls;
    std::vector<int> solution = state.current;
    for (int i = state.frontier; i < n; ++i)
        solution.push_back(state.ordering[i]);
    std::sort(solution.begin(), solution.end());
    report.solution.vertices = solution;
    report.solution.source = Source::ic;
    report.solution.verified = verify_oct(g, solution);
    report.upper = static_cast<int>(solution.size());
    if (!ctx.aborted) {
        report.lower = report.upper;
        report.optimal = true;
        report.termination = Termination::completed;
    } else {
        report.lower = state.lower;
        report.optimal = false;
        report.termination = Termination::deadline;
    }
    report.elapsed = watch.seconds();
    return report;
}

CutResult min_vertex_cut(const Graph& g, const std::vector<int>& sources,
                         const std::vector<int>& sinks) {
    std::vector<char> is_src(g.n, 0), is_snk(g.n, 0);
    for (int v : sources) {
        if (v < 0 || v >= g.n) throw std::out_of_range("source out of range");
        is_src[v] = 1;
    }
    for (int v : sinks) {
        if (v < 0 || v >= g.n) throw std::out_of_range("sink out of range");
        if (is_src[v])
            throw std::invalid_argument("sources and sinks must be disjoint");
        is_snk[v] = 1;
    }
    CutResult out;
    for (int v = 0; v < g.n; ++v)
        if (is_src[v])
            for (int u : g.adj[v])
                if (is_snk[u]) return out; // length-1 path: infeasible

    FlowNet net;
    int src = 2 * g.n, snk = 2 * g.n + 1;
    net.init(2 * g.n + 2);
    const int kInf = g.n + 5;
    std::vector<int> split_arc(g.n);
    for (int v = 0; v < g.n; ++v)
        split_arc[v] =
            net.add_arc(2 * v, 2 * v + 1, is_src[v] || is_snk[v] ? kInf : 1);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) net.add_arc(2 * v + 1, 2 * u, kInf);
    for (int v = 0; v < g.n; ++v) {
        if (is_src[v]) net.add_arc(src, 2 * v, kInf);
        if (is_snk[v]) net.add_arc(2 * v + 1, snk, kInf);
    }
    bool aborted = false;
    net.max_flow_capped(src, snk, g.n + 1, [] { return true; }, &aborted);
    auto reach = net.reachable(src);
    for (int v = 0; v < g.n; ++v)
        if (!is_src[v] && !is_snk[v] && reach[2 * v] && !reach[2 * v + 1])
            out.cut.push_back(v);
    out.feasible = true;
    return out;
}

} // namespace oct
