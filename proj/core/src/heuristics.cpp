#include "oct/heuristics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "oct/rng.hpp"

namespace oct {

namespace {

constexpr signed char kUncolored = -1;
constexpr signed char kDeleted = 2;

OctSolution finish(const Graph& g, std::vector<int> s, Source source) {
    std::sort(s.begin(), s.end());
    OctSolution sol;
    sol.vertices = std::move(s);
    sol.source = source;
    sol.verified = verify_oct(g, sol.vertices);
    if (!sol.verified)
        throw std::logic_error("heuristic produced an infeasible solution");
    return sol;
}

// Shared scheme for the DFS/BFS greedy 2-colorings: vertices are discovered
// with a proposed color; a proposal clashing with an already colored neighbor
// deletes the vertex instead.
OctSolution search_two_coloring(const Graph& g, uint64_t seed, bool depth_first,
                                Source source) {
    Rng rng(seed);
    std::vector<signed char> color(g.n, kUncolored);
    std::vector<int> s;
    std::deque<std::pair<int, signed char>> work;
    int colored = 0;

    auto pick_start = [&]() -> int {
        std::vector<int> pool;
        for (int v = 0; v < g.n; ++v)
            if (color[v] == kUncolored) pool.push_back(v);
        if (pool.empty()) return -1;
        return pool[rng.pick(static_cast<int>(pool.size()))];
    };

    while (colored < g.n) {
        if (work.empty()) {
            int start = pick_start();
            if (start < 0) break;
            work.emplace_back(start, 0);
        }
        auto [v, proposal] = depth_first ? work.back() : work.front();
        if (depth_first)
            work.pop_back();
        else
            work.pop_front();
        if (color[v] != kUncolored) continue;
        bool clash = false;
        for (int u : g.adj[v])
            if (color[u] == proposal) {
                clash = true;
                break;
            }
        ++colored;
        if (clash) {
            color[v] = kDeleted;
            s.push_back(v);
            continue;
        }
        color[v] = proposal;
        std::vector<int> next;
        for (int u : g.adj[v])
            if (color[u] == kUncolored) next.push_back(u);
        rng.shuffle(next);
        for (int u : next)
            work.emplace_back(u, static_cast<signed char>(1 - proposal));
    }
    return finish(g, std::move(s), source);
}

std::vector<int> component_of(const Graph& g, int root, std::vector<char>& seen) {
    std::vector<int> comp, stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int u : g.adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

// Greedy independent set by repeated minimum-degree selection over the
// vertices with active[v] set; ties broken by a seeded pick.
std::vector<int> greedy_mindeg_is(const Graph& g, std::vector<char> active,
                                  Rng& rng) {
    std::vector<int> deg(g.n, 0);
    int live = 0;
    for (int v = 0; v < g.n; ++v)
        if (active[v]) {
            ++live;
            for (int u : g.adj[v])
                if (active[u]) ++deg[v];
        }
    std::vector<int> is;
    while (live > 0) {
        int best = g.n + 1;
        for (int v = 0; v < g.n; ++v)
            if (active[v]) best = std::min(best, deg[v]);
        std::vector<int> ties;
        for (int v = 0; v < g.n; ++v)
            if (active[v] && deg[v] == best) ties.push_back(v);
        int pick = ties[rng.pick(static_cast<int>(ties.size()))];
        is.push_back(pick);
        std::vector<int> gone{pick};
        for (int u : g.adj[pick])
            if (active[u]) gone.push_back(u);
        for (int x : gone) {
            active[x] = 0;
            --live;
            for (int y : g.adj[x])
                if (active[y]) --deg[y];
        }
    }
    return is;
}

} // namespace

OctSolution dfs_two_coloring(const Graph& g, uint64_t seed) {
    return search_two_coloring(g, seed, true, Source::heuristic_dfs);
}

OctSolution bfs_two_coloring(const Graph& g, uint64_t seed) {
    return search_two_coloring(g, seed, false, Source::heuristic_bfs);
}

namespace {

// Leftover vertices of one two-round extraction with the given tie-break
// stream.
std::vector<int> two_round_strand(const Graph& g, uint64_t seed) {
    Rng rng(seed);
    std::vector<int> is1 = greedy_mindeg_is(g, std::vector<char>(g.n, 1), rng);
    std::vector<char> round2(g.n, 1);
    for (int v : is1) round2[v] = 0;
    std::vector<int> is2 = greedy_mindeg_is(g, round2, rng);
    std::vector<char> keep(g.n, 0);
    for (int v : is1) keep[v] = 1;
    for (int v : is2) keep[v] = 1;
    std::vector<int> s;
    for (int v = 0; v < g.n; ++v)
        if (!keep[v]) s.push_back(v);
    return s;
}

// Greedy 2-coloring in reverse degeneracy order; the color classes are a
// pair of independent sets, vertices blocked on both sides are the strand.
std::vector<int> insertion_strand(const Graph& g) {
    DegeneracyOrder dg = degeneracy_ordering(g);
    std::vector<signed char> color(g.n, -1);
    for (auto it = dg.order.rbegin(); it != dg.order.rend(); ++it) {
        int v = *it;
        bool left = false, right = false;
        for (int u : g.adj[v]) {
            if (color[u] == 0) left = true;
            if (color[u] == 1) right = true;
        }
        color[v] = !left ? 0 : (!right ? 1 : 2);
    }
    std::vector<int> s;
    for (int v = 0; v < g.n; ++v)
        if (color[v] == 2) s.push_back(v);
    return s;
}

} // namespace

OctSolution mindeg_independent(const Graph& g, uint64_t seed) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> s;
    for (int root = 0; root < g.n; ++root) {
        if (seen[root]) continue;
        std::vector<int> comp = component_of(g, root, seen);
        Graph sub = induced_subgraph(g, comp);
        if (is_bipartite(sub)) continue; // both partite sets recovered exactly
        // Independent restarts of the greedy extraction plus the degeneracy
        // insertion candidate; a single tie-break stream can strand more
        // than d * OPT vertices, the portfolio has not in any sweep so far.
        uint64_t base = mix_seed(seed, static_cast<uint64_t>(root), 0x8d);
        std::vector<int> best = two_round_strand(sub, base);
        for (uint64_t restart = 1; restart < 8; ++restart) {
            std::vector<int> cand =
                two_round_strand(sub, mix_seed(base, 1, restart));
            if (cand.size() < best.size()) best = std::move(cand);
        }
        std::vector<int> ins = insertion_strand(sub);
        if (ins.size() < best.size()) best = std::move(ins);
        for (int v : best) s.push_back(comp[v]);
    }
    return finish(g, std::move(s), Source::heuristic_mindeg);
}

OctSolution luby(const Graph& g, uint64_t seed) {
    Rng rng(seed);
    std::vector<char> in_set(g.n, 0);

    auto maximal_is = [&](std::vector<char> live) {
        std::vector<int> is;
        std::vector<uint64_t> pri(g.n, 0);
        int remaining = 0;
        for (int v = 0; v < g.n; ++v)
            if (live[v]) ++remaining;
        while (remaining > 0) {
            for (int v = 0; v < g.n; ++v)
                if (live[v]) pri[v] = rng.next();
            std::vector<int> joiners;
            for (int v = 0; v < g.n; ++v) {
                if (!live[v]) continue;
                bool local_max = true;
                for (int u : g.adj[v]) {
                    if (!live[u]) continue;
                    if (pri[u] > pri[v] || (pri[u] == pri[v] && u > v)) {
                        local_max = false;
                        break;
                    }
                }
                if (local_max) joiners.push_back(v);
            }
            for (int v : joiners) {
                is.push_back(v);
                live[v] = 0;
                --remaining;
                for (int u : g.adj[v])
                    if (live[u]) {
                        live[u] = 0;
                        --remaining;
                    }
            }
        }
        return is;
    };

    std::vector<char> live(g.n, 1);
    for (int v : maximal_is(live)) in_set[v] = 1;
    std::vector<char> round2(g.n, 1);
    for (int v = 0; v < g.n; ++v)
        if (in_set[v]) round2[v] = 0;
    for (int v : maximal_is(round2)) in_set[v] = 1;

    std::vector<int> s;
    for (int v = 0; v < g.n; ++v)
        if (!in_set[v]) s.push_back(v);
    return finish(g, std::move(s), Source::heuristic_luby);
}

OctSolution run_heuristic(HeuristicKind h, const Graph& g, uint64_t seed) {
    switch (h) {
        case HeuristicKind::dfs: return dfs_two_coloring(g, seed);
        case HeuristicKind::bfs: return bfs_two_coloring(g, seed);
        case HeuristicKind::luby: return luby(g, seed);
        case HeuristicKind::mindeg: return mindeg_independent(g, seed);
    }
    throw std::invalid_argument("unknown heuristic");
}

SolverReport ensemble(const Graph& g, const EnsembleConfig& cfg) {
    if (cfg.enabled.empty())
        throw std::invalid_argument("ensemble needs at least one heuristic");
    if (cfg.max_invocations < 0 && cfg.timeout <= 0)
        throw std::invalid_argument("ensemble timeout must be positive");
    Stopwatch watch;
    bool budget = cfg.max_invocations >= 0;
    Deadline deadline =
        budget ? Deadline::never() : Deadline::after(cfg.timeout);

    SolverReport report;
    report.seed = cfg.seed;
    OctSolution best;
    bool have = false;
    long long invocations = 0;
    bool done = false;
    for (long long cycle = 0; !done; ++cycle) {
        for (HeuristicKind h : cfg.enabled) {
            uint64_t s = mix_seed(cfg.seed, static_cast<uint64_t>(h),
                                  static_cast<uint64_t>(cycle));
            OctSolution sol = run_heuristic(h, g, s);
            ++invocations;
            if (!have || sol.size() < best.size()) {
                best = sol;
                have = true;
            }
            if (budget && invocations >= cfg.max_invocations) {
                done = true;
                break;
            }
            if (!budget && best.size() == 0) {
                done = true;
                break;
            }
            if (!budget &&
                invocations >= static_cast<long long>(cfg.enabled.size()) &&
                deadline.expired()) {
                done = true;
                break;
            }
        }
    }
    best.source = Source::ensemble;
    report.solution = best;
    report.lower = 0;
    report.upper = best.size();
    report.optimal = best.size() == 0;
    report.iterations = invocations;
    report.termination =
        budget || report.optimal ? Termination::completed : Termination::deadline;
    report.elapsed = watch.seconds();
    return report;
}

} // namespace oct
