#include "oct/reductions.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include <json.hpp>

#include "oct/vc.hpp"

namespace oct {

std::string to_string(ReductionRule r) {
    switch (r) {
        case ReductionRule::deg_le1: return "deg_le1";
        case ReductionRule::no_odd_cycle: return "no_odd_cycle";
        case ReductionRule::twin_c4: return "twin_c4";
        case ReductionRule::vc_isolated: return "vc_isolated";
        case ReductionRule::vc_oct: return "vc_oct";
        case ReductionRule::vc_bip: return "vc_bip";
    }
    return "?";
}

namespace {

// Mutable view of the original graph: vertices keep their original ids,
// removal is an alive flag. Edges are never added, so the live subgraph is
// always an induced subgraph of the input.
struct Reducer {
    const Graph& g;
    std::vector<char> alive;
    std::vector<int> deg;
    std::vector<char> vb_marked;
    std::vector<ReductionEvent> events;

    explicit Reducer(const Graph& graph)
        : g(graph), alive(graph.n, 1), deg(graph.n), vb_marked(graph.n, 0) {
        for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    }

    void remove(int v, ReductionRule rule, int survivor = -1, int substitute = -1) {
        alive[v] = 0;
        for (int u : g.adj[v])
            if (alive[u]) --deg[u];
        events.push_back({rule, v, survivor, substitute});
    }

    std::vector<int> alive_neighbors(int v) const {
        std::vector<int> out;
        for (int u : g.adj[v])
            if (alive[u]) out.push_back(u);
        return out;
    }

    bool r1_pass() {
        bool changed = false;
        bool local = true;
        while (local) {
            local = false;
            for (int v = 0; v < g.n; ++v) {
                if (alive[v] && deg[v] <= 1) {
                    remove(v, ReductionRule::deg_le1);
                    changed = local = true;
                }
            }
        }
        return changed;
    }

    // Vertices on no odd cycle: exactly those whose every biconnected block
    // is bipartite.
    bool r2_pass() {
        std::vector<char> in_odd_block(g.n, 0);
        std::vector<int> disc(g.n, 0), low(g.n, 0);
        int timer = 0;
        std::vector<std::pair<int, int>> edge_stack;

        // scratch for per-block bipartiteness
        std::vector<int> stamp(g.n, -1);
        int block_id = 0;

        auto process_block = [&](size_t first) {
            ++block_id;
            std::vector<std::pair<int, int>> block(edge_stack.begin() + first,
                                                   edge_stack.end());
            edge_stack.resize(first);
            std::vector<int> verts;
            for (auto [a, b] : block) {
                for (int x : {a, b})
                    if (stamp[x] != block_id) {
                        stamp[x] = block_id;
                        verts.push_back(x);
                    }
            }
            // 2-color using only the block's edges
            std::vector<std::vector<int>> local(verts.size());
            std::vector<int> pos(verts.size());
            {
                std::vector<int> idx(g.n);
                for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = (int)i;
                for (auto [a, b] : block) {
                    local[idx[a]].push_back(idx[b]);
                    local[idx[b]].push_back(idx[a]);
                }
            }
            std::vector<int> color(verts.size(), -1);
            bool bip = true;
            for (size_t root = 0; root < verts.size() && bip; ++root) {
                if (color[root] != -1) continue;
                color[root] = 0;
                std::queue<int> q;
                q.push((int)root);
                while (!q.empty() && bip) {
                    int x = q.front();
                    q.pop();
                    for (int y : local[x]) {
                        if (color[y] == -1) {
                            color[y] = 1 - color[x];
                            q.push(y);
                        } else if (color[y] == color[x]) {
                            bip = false;
                            break;
                        }
                    }
                }
            }
            if (!bip)
                for (int v : verts) in_odd_block[v] = 1;
        };

        // iterative DFS over the live subgraph
        struct Frame {
            int v, parent;
            size_t it = 0;
        };
        for (int root = 0; root < g.n; ++root) {
            if (!alive[root] || disc[root]) continue;
            std::vector<Frame> frames;
            frames.push_back({root, -1});
            disc[root] = low[root] = ++timer;
            while (!frames.empty()) {
                Frame& f = frames.back();
                bool descended = false;
                while (f.it < g.adj[f.v].size()) {
                    int w = g.adj[f.v][f.it++];
                    if (!alive[w] || w == f.parent) continue;
                    if (!disc[w]) {
                        edge_stack.emplace_back(f.v, w);
                        disc[w] = low[w] = ++timer;
                        frames.push_back({w, f.v});
                        descended = true;
                        break;
                    } else if (disc[w] < disc[f.v]) {
                        edge_stack.emplace_back(f.v, w);
                        low[f.v] = std::min(low[f.v], disc[w]);
                    }
                }
                if (descended) continue;
                Frame done = frames.back();
                frames.pop_back();
                if (!frames.empty()) {
                    Frame& par = frames.back();
                    low[par.v] = std::min(low[par.v], low[done.v]);
                    if (low[done.v] >= disc[par.v]) {
                        // block closed by the tree edge (par.v, done.v)
                        size_t idx = edge_stack.size();
                        while (idx > 0) {
                            --idx;
                            if (edge_stack[idx].first == par.v &&
                                edge_stack[idx].second == done.v)
                                break;
                        }
                        process_block(idx);
                    }
                }
            }
        }

        bool changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (alive[v] && !in_odd_block[v]) {
                remove(v, ReductionRule::no_odd_cycle);
                changed = true;
            }
        }
        return changed;
    }

    bool r3_pass() {
        bool changed = false;
        bool local = true;
        while (local) {
            local = false;
            for (int v = 0; v < g.n && !local; ++v) {
                if (!alive[v] || deg[v] != 2) continue;
                auto nb = alive_neighbors(v);
                int u = nb[0], w = nb[1];
                if (g.has_edge(u, w)) continue; // chord: cycle not induced
                for (int x : g.adj[u]) {
                    if (!alive[x] || x == v || deg[x] != 2) continue;
                    auto xb = alive_neighbors(x);
                    if (xb[0] != u || xb[1] != w) continue;
                    int removed = std::max(v, x);
                    int survivor = std::min(v, x);
                    remove(removed, ReductionRule::twin_c4, survivor,
                           std::min(u, w));
                    changed = local = true;
                    break;
                }
            }
        }
        return changed;
    }

    bool oct_rules_round() {
        bool changed = false;
        changed |= r1_pass();
        changed |= r2_pass();
        changed |= r3_pass();
        return changed;
    }

    void run_oct_rules() {
        while (oct_rules_round()) {
        }
    }

    // Isolated vertices drop to Vr; Nemhauser-Trotter persistency on the
    // doubled instance fixes whole copy-pairs into the cover (Vo) and labels
    // vertices with an excluded copy bipartite (Vb).
    bool vc_rules_pass() {
        bool changed = false;
        for (int v = 0; v < g.n; ++v) {
            if (alive[v] && deg[v] == 0) {
                remove(v, ReductionRule::vc_isolated);
                changed = true;
            }
        }
        std::vector<int> ids;
        for (int v = 0; v < g.n; ++v)
            if (alive[v]) ids.push_back(v);
        if (ids.empty()) return changed;
        Graph h = induced_subgraph(g, ids);
        VcInstance inst = to_vc_instance(h);
        HalfIntegralLp lp = lp_half_integral(inst.graph);
        int hn = h.n;
        for (int i = 0; i < hn; ++i) {
            int orig = ids[i];
            if (lp.value2[i] == 2 && lp.value2[i + hn] == 2) {
                remove(orig, ReductionRule::vc_oct);
                changed = true;
            } else if ((lp.value2[i] == 0 || lp.value2[i + hn] == 0) &&
                       !vb_marked[orig]) {
                vb_marked[orig] = 1;
                events.push_back({ReductionRule::vc_bip, orig, -1, -1});
            }
        }
        return changed;
    }

    void run_vc_rules() {
        while (vc_rules_pass()) {
        }
    }

    ReductionPartition finalize() const {
        ReductionPartition p;
        p.original_n = g.n;
        p.events = events;
        for (const auto& e : events) {
            switch (e.rule) {
                case ReductionRule::deg_le1:
                case ReductionRule::no_odd_cycle:
                case ReductionRule::twin_c4:
                case ReductionRule::vc_isolated:
                    p.v_removed.push_back(e.vertex);
                    break;
                case ReductionRule::vc_oct:
                    p.v_oct.push_back(e.vertex);
                    break;
                case ReductionRule::vc_bip:
                    break;
            }
        }
        for (int v = 0; v < g.n; ++v) {
            if (!alive[v]) continue;
            if (vb_marked[v])
                p.v_bip.push_back(v);
            else
                p.v_rest.push_back(v);
            p.lift_map.push_back(v);
        }
        std::sort(p.v_removed.begin(), p.v_removed.end());
        std::sort(p.v_oct.begin(), p.v_oct.end());
        for (auto [u, v] : g.edges())
            if (!alive[u] || !alive[v]) p.e_removed.emplace_back(u, v);
        p.reduced = induced_subgraph(g, p.lift_map);
        return p;
    }
};

} // namespace

ReductionPartition reduce_oct_rules(const Graph& g) {
    Reducer red(g);
    red.run_oct_rules();
    return red.finalize();
}

ReductionPartition reduce_vc_rules(const Graph& g) {
    Reducer red(g);
    red.run_vc_rules();
    return red.finalize();
}

ReductionPartition reduce_fixpoint(const Graph& g) {
    Reducer red(g);
    bool changed = true;
    while (changed) {
        changed = false;
        changed |= red.oct_rules_round();
        changed |= red.vc_rules_pass();
    }
    return red.finalize();
}

std::vector<int> lift_solution(const ReductionPartition& p,
                               const std::vector<int>& s_reduced) {
    std::set<int> s;
    for (int v : s_reduced) {
        if (v < 0 || v >= p.reduced.n)
            throw std::out_of_range("reduced solution id out of range");
        s.insert(p.lift_map[v]);
    }
    // Replay removals backwards. Forced vertices rejoin the solution; a twin
    // whose survivor was picked swaps to the recorded common neighbor so the
    // certificate stays valid on the pre-removal graph.
    for (auto it = p.events.rbegin(); it != p.events.rend(); ++it) {
        switch (it->rule) {
            case ReductionRule::vc_oct:
                s.insert(it->vertex);
                break;
            case ReductionRule::twin_c4:
                if (s.count(it->survivor)) {
                    s.erase(it->survivor);
                    s.insert(it->substitute);
                }
                break;
            default:
                break;
        }
    }
    return std::vector<int>(s.begin(), s.end());
}

std::string partition_to_json(const ReductionPartition& p) {
    nlohmann::json j;
    j["n"] = p.original_n;
    j["reduced_n"] = p.reduced.n;
    j["reduced_m"] = p.reduced.m;
    j["v_removed"] = p.v_removed;
    j["v_oct"] = p.v_oct;
    j["v_bip"] = p.v_bip;
    j["v_rest"] = p.v_rest;
    nlohmann::json er = nlohmann::json::array();
    for (auto [u, v] : p.e_removed) er.push_back({u, v});
    j["e_removed"] = er;
    j["lift_map"] = p.lift_map;
    nlohmann::json log = nlohmann::json::array();
    for (const auto& e : p.events) {
        nlohmann::json entry;
        entry["rule"] = to_string(e.rule);
        entry["vertex"] = e.vertex;
        if (e.rule == ReductionRule::twin_c4) {
            entry["survivor"] = e.survivor;
            entry["substitute"] = e.substitute;
        }
        log.push_back(entry);
    }
    j["log"] = log;
    return j.dump(2) + "\n";
}

} // namespace oct
