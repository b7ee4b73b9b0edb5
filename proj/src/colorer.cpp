#include "distsum/colorer.hpp"

#include "distsum/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

namespace distsum {

namespace {

// The construction runs on views of one fixed graph: a recursion level is an
// alive-vertex mask, and the conflict relation (all pairs at distance <= r in
// the original graph) is threaded through the levels. Pairs with an endpoint
// in `dropped` are disregarded below the level that dropped it; that level's
// greedy extension re-checks them against settled sums. This keeps every
// counting bound intact while also covering pairs whose distance in a reduced
// graph exceeds r.
struct Engine {
    const Graph* g = nullptr;
    int r = 0;
    BoundParams P{};
    RunStats* stats = nullptr;

    std::vector<std::vector<int>> conflict;
    std::vector<char> alive;
    std::vector<Color> color;  // per edge id, 0 = unset
    std::vector<Color> sum;    // current partial weighted degree
    std::vector<char> settled;
    std::vector<int> mods;     // per edge modification count (post-assignment writes)
    std::vector<char> processed;
    std::vector<PairSet> dset;

    explicit Engine(const Graph& graph)
        : g(&graph),
          alive(graph.vertex_count(), 1),
          color(graph.edge_count(), 0),
          sum(graph.vertex_count(), 0),
          settled(graph.vertex_count(), 0),
          mods(graph.edge_count(), 0),
          processed(graph.vertex_count(), 0),
          dset(graph.vertex_count()) {}

    Color two_k() const { return 2 * P.k_val; }
    Color four_k() const { return 4 * P.k_val; }
    Color six_k() const { return 6 * P.k_val; }

    void build_conflicts(int radius) {
        r = radius;
        conflict.assign(g->vertex_count(), {});
        for (int v = 0; v < g->vertex_count(); ++v)
            conflict[v] = r_neighborhood(*g, v, radius);
    }

    bool in_conflict(int a, int b) const {
        return std::binary_search(conflict[a].begin(), conflict[a].end(), b);
    }

    std::vector<int> alive_neighbors(int v) const {
        std::vector<int> out;
        for (int w : g->neighbors(v))
            if (alive[w]) out.push_back(w);
        return out;
    }

    int alive_deg(int v) const {
        int d = 0;
        for (int w : g->neighbors(v)) d += alive[w] ? 1 : 0;
        return d;
    }

    void write_color(int eid, Color c, bool count_always = false) {
        if (c < 1 || c > P.palette_max)
            throw std::logic_error("color out of palette range: " + std::to_string(c));
        Color old = color[eid];
        auto [u, v] = g->edges()[eid];
        sum[u] += c - old;
        sum[v] += c - old;
        color[eid] = c;
        if (old != 0 && (c != old || count_always)) {
            ++mods[eid];
            if (stats && mods[eid] == 2) ++stats->edge_second_modifications;
            if (mods[eid] > 2) throw std::logic_error("edge modified more than twice");
        }
    }

    PairSet pair_set_containing(Color s) const {
        Color b4 = s % four_k();
        Color base = (b4 < two_k()) ? s : s - two_k();
        return PairSet{base, two_k()};
    }

    std::string dump(const std::string& where) const {
        std::ostringstream os;
        os << "infeasible construction state (" << where << ")\n";
        os << "  n=" << g->vertex_count() << " m=" << g->edge_count() << " r=" << r
           << " delta=" << P.delta << " M=" << P.m_quot << " K=" << P.k_val
           << " palette=" << P.palette_max << "\n  colors:";
        for (int e = 0; e < g->edge_count(); ++e) {
            auto [u, v] = g->edges()[e];
            os << " (" << u << "," << v << ")=" << color[e];
        }
        os << "\n  sums:";
        for (int v = 0; v < g->vertex_count(); ++v) os << " " << sum[v];
        return os.str();
    }

    [[noreturn]] void infeasible(const std::string& where) {
        if (stats) ++stats->infeasible_steps;
        throw InfeasibleStep(dump(where));
    }

    [[noreturn]] void exhausted_cases(const std::string& where) {
        if (stats) ++stats->case_exhaustions;
        throw CaseExhaustion(dump(where));
    }

    void settle(int v) { settled[v] = 1; }

    EdgeColoring snapshot() const {
        EdgeColoring out(g->edge_count());
        for (int e = 0; e < g->edge_count(); ++e) out.set(e, color[e]);
        return out;
    }

    std::vector<std::vector<int>> alive_components(const std::vector<int>& verts) const {
        std::vector<std::vector<int>> comps;
        std::set<int> remaining(verts.begin(), verts.end());
        while (!remaining.empty()) {
            int s = *remaining.begin();
            std::vector<int> comp{s};
            remaining.erase(s);
            for (size_t i = 0; i < comp.size(); ++i)
                for (int w : alive_neighbors(comp[i]))
                    if (remaining.erase(w)) comp.push_back(w);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    Ordering make_ordering(const std::vector<int>& comp) const;

    void color_component(const std::vector<int>& comp, std::vector<char>& dropped);
    void color_k2(int a, int b, const std::vector<char>& dropped);
    void color_star(const std::vector<int>& comp, int center, const std::vector<char>& dropped);
    void color_small(const std::vector<int>& comp, const std::vector<char>& dropped);
    void reduce_and_extend(const std::vector<int>& comp, std::vector<char>& dropped, int v);
    void greedy_extend(int v, int u1, int u2, const std::vector<char>& dropped,
                       const std::vector<std::pair<int, int>>& k2_children);
};

struct Pipeline {
    Engine& E;
    std::vector<int> comp;
    std::vector<char> dropped;
    Ordering ord;
    std::vector<int> position;  // vertex -> index in ord.sequence, -1 outside
    int nc = 0;
    bool main_done = false;
    bool finalized = false;

    Pipeline(Engine& engine, std::vector<int> component, std::vector<char> dropped_set)
        : E(engine), comp(std::move(component)), dropped(std::move(dropped_set)) {}

    const BoundParams& P() const { return E.P; }

    void set_ordering(Ordering o) {
        ord = std::move(o);
        nc = static_cast<int>(ord.sequence.size());
        position.assign(E.g->vertex_count(), -1);
        for (int i = 0; i < nc; ++i) position[ord.sequence[i]] = i;
    }

    bool is_tree_edge(int u, int v) const { return ord.parent[u] == v || ord.parent[v] == u; }

    // A tree edge whose child end has not yet run its step carries the
    // provisional seed residue; it is re-fixed later (avoiding everything
    // colored by then), so it never blocks a residue choice. This covers the
    // root edge until the final step.
    bool residue_fixed(int eid) const {
        auto [a, b] = E.g->edges()[eid];
        if (position[a] < 0 || position[b] < 0) return true;
        int child = position[a] < position[b] ? a : b;
        int other = child == a ? b : a;
        if (ord.parent[child] == other && !E.processed[child]) return false;
        return true;
    }

    void initial_coloring();
    void main_phase();
    void step(int idx);
    void finalize();

    struct Side {
        int v = -1;
        int other = -1;
        long long deg = 0;
        Color base = 0;           // sum - (2K+1)
        std::vector<int> edges;   // non-root incident edges, ascending other endpoint
        std::set<Color> blocked;  // I^(k)
    };
    using Plan = std::vector<std::pair<int, Color>>;    // (edge id, applied delta)
    using Pending = std::vector<std::pair<int, Color>>; // (vertex, provisional sum delta)

    Side make_side(int v, int other_root) const;
    std::vector<Color> gamma_multipliers(Color rho) const {
        return rho == 0 ? std::vector<Color>{1, 2, 3} : std::vector<Color>{0, 1, 2};
    }
    int edge_other(int e, int v) const {
        auto [a, b] = E.g->edges()[e];
        return a == v ? b : a;
    }
    // Direction the edge can move while keeping its processed endpoint inside
    // its reserved pair, given provisional sum deltas from the other side.
    Color edge_dir(int e, int root, const Pending& pending) const;
    long long count_blocked(const Side& s, Color rho) const;
    // One-way step plan: shift |j| edges of the given sign, lowest endpoints
    // first; directions resolved against pending deltas.
    Plan plan_for(const Side& s, long long j, const Pending& pending) const;
    std::pair<long long, long long> way_counts(const Side& s, const Pending& pending) const;
    bool try_direct(const Side& primary, const Side& secondary, Color rho, int er);
    bool try_exchange(const Side& wide, const Side& narrow, Color rho, int er);
    void apply(const Side& a_side, const Plan& a_plan, const Side& b_side, const Plan& b_plan,
               Color gamma, int er, Color want_a, Color want_b);
    void strict_checks(int v) const;
};

Ordering Engine::make_ordering(const std::vector<int>& comp) const {
    long long best_sum = -1;
    std::pair<int, int> best{-1, -1};
    for (int u : comp) {
        if (alive_deg(u) < 2) continue;
        for (int w : alive_neighbors(u)) {
            if (w <= u || alive_deg(w) < 2) continue;
            long long s = alive_deg(u) + alive_deg(w);
            if (s > best_sum) {
                best_sum = s;
                best = {u, w};
            }
        }
    }
    if (best.first < 0)
        throw std::logic_error("no adjacent pair with both degrees >= 2 (star or tiny component)");
    if (best_sum < 6)
        throw std::logic_error("root pair degree sum below 6; degree-2 reduction incomplete");

    int du = alive_deg(best.first), dw = alive_deg(best.second);
    int vn = (dw > du) ? best.second : best.first;  // degree tie: smaller index roots
    int vn1 = (vn == best.first) ? best.second : best.first;

    const int k = static_cast<int>(comp.size());
    Ordering o;
    o.sequence.assign(k, -1);
    o.parent.assign(g->vertex_count(), -1);
    std::vector<int> pos(g->vertex_count(), -1);
    int next = k - 1;
    pos[vn] = next--;
    std::deque<int> queue{vn};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        std::vector<int> nbrs = alive_neighbors(x);
        if (x == vn) {
            auto it = std::find(nbrs.begin(), nbrs.end(), vn1);
            std::rotate(nbrs.begin(), it, it + 1);  // v_{n-1} first
        }
        for (int y : nbrs)
            if (pos[y] < 0) {
                pos[y] = next--;
                o.parent[y] = x;
                queue.push_back(y);
            }
    }
    if (next != -1) throw std::logic_error("component not connected in ordering build");
    for (int v : comp) o.sequence[pos[v]] = v;
    o.root_pair = {vn1, vn};

    // BFS discovers each vertex from its highest-position neighbor, so the
    // last forward edges are exactly the tree edges.
    for (int v : comp) {
        if (v == vn) continue;
        int hi = -1;
        for (int w : alive_neighbors(v))
            if (hi < 0 || pos[w] > pos[hi]) hi = w;
        if (hi != o.parent[v]) throw std::logic_error("last forward edge is not the tree edge");
    }
    return o;
}

void Pipeline::initial_coloring() {
    // Proper coloring of the component minus the tree, lifted into the window
    // [2K+1, 2K+delta]; tree edges seeded with 2K+1.
    std::vector<std::pair<int, int>> rest;
    for (int u : comp)
        for (int w : E.alive_neighbors(u))
            if (u < w && !is_tree_edge(u, w)) rest.emplace_back(u, w);
    Graph sub = Graph::from_edge_list(E.g->vertex_count(), rest);
    if (sub.max_degree() > P().delta - 1)
        throw std::logic_error("tree removal did not reduce the maximum degree");
    EdgeColoring mg = vizing_color(sub);
    if (mg.max_color() > P().delta)
        throw std::logic_error("seed coloring exceeds the delta-wide window");
    for (int i = 0; i < sub.edge_count(); ++i) {
        auto [u, w] = sub.edges()[i];
        E.write_color(E.g->edge_id(u, w), mg.get(i) + E.two_k());
    }
    for (int v : comp)
        if (v != ord.root_pair.second) E.write_color(E.g->edge_id(v, ord.parent[v]), E.two_k() + 1);
    if (E.stats) ++E.stats->main_pipelines;
}

void Pipeline::main_phase() {
    for (int idx = 0; idx + 2 < nc; ++idx) step(idx);
    main_done = true;
}

void Pipeline::strict_checks(int v) const {
    std::set<Color> seen;
    for (int w : E.alive_neighbors(v)) {
        Color c = E.color[E.g->edge_id(v, w)];
        if (c == 0) continue;
        if (!seen.insert(c % E.two_k()).second)
            throw std::logic_error("mod-2K properness violated at vertex " + std::to_string(v));
    }
}

void Pipeline::step(int idx) {
    const int vi = ord.sequence[idx];
    const int par = ord.parent[vi];
    const Color twoK = E.two_k();
    const int estar = E.g->edge_id(vi, par);
    if (position[par] <= idx) throw std::logic_error("parent is not a forward neighbor");
    if (E.color[estar] != twoK + 1 || E.mods[estar] != 0)
        throw std::logic_error("last forward edge touched before its step");

    std::set<Color> bad_res;
    for (int x : {vi, par})
        for (int w : E.g->neighbors(x)) {
            int e = E.g->edge_id(x, w);
            if (e != estar && E.color[e] > 0 && residue_fixed(e))
                bad_res.insert(E.color[e] % twoK);
        }
    std::vector<Color> offsets;  // new color for the last forward edge = 2K+1+x
    for (Color x = 0; x < twoK; ++x)
        if (!bad_res.count((1 + x) % twoK)) offsets.push_back(x);
    if (static_cast<long long>(offsets.size()) < 2 * P().m_quot + 1)
        E.infeasible("fewer than 2M+1 admissible residues at step " + std::to_string(idx));

    // One-way 2K shifts on the remaining incident edges: forward edges take
    // +2K, backward edges the direction that keeps the predecessor inside its
    // reserved pair.
    std::vector<int> pos_edges, neg_edges;
    for (int w : E.alive_neighbors(vi)) {
        if (w == par) continue;
        int e = E.g->edge_id(vi, w);
        if (position[w] > idx) {
            pos_edges.push_back(e);
        } else {
            if (!E.processed[w]) throw std::logic_error("backward neighbor not processed");
            if (E.sum[w] == E.dset[w].base)
                pos_edges.push_back(e);
            else if (E.sum[w] == E.dset[w].high())
                neg_edges.push_back(e);
            else
                throw std::logic_error("predecessor sum left its reserved pair");
        }
    }
    const long long npos = static_cast<long long>(pos_edges.size());
    const long long nneg = static_cast<long long>(neg_edges.size());

    std::set<Color> blocked;
    if (!dropped[vi])
        for (int y : E.conflict[vi]) {
            if (dropped[y]) continue;
            if (E.processed[y]) {
                blocked.insert(E.dset[y].base);
                blocked.insert(E.dset[y].high());
            } else if (E.settled[y]) {
                blocked.insert(E.sum[y]);
            }
        }

    std::vector<std::tuple<Color, Color, long long>> cands;  // (sum, x, j)
    for (Color x : offsets)
        for (long long j = -nneg; j <= npos; ++j)
            cands.emplace_back(E.sum[vi] + x + twoK * j, x, j);
    std::sort(cands.begin(), cands.end());
    Color chosen = -1, chosen_x = -1;
    long long chosen_j = 0;
    for (auto [s, x, j] : cands)
        if (!blocked.count(s)) {
            chosen = s;
            chosen_x = x;
            chosen_j = j;
            break;
        }
    if (chosen < 0) E.infeasible("no admissible sum at step " + std::to_string(idx));

    E.write_color(estar, twoK + 1 + chosen_x);
    if (chosen_j > 0)
        for (long long i = 0; i < chosen_j; ++i)
            E.write_color(pos_edges[i], E.color[pos_edges[i]] + twoK);
    if (chosen_j < 0)
        for (long long i = 0; i < -chosen_j; ++i)
            E.write_color(neg_edges[i], E.color[neg_edges[i]] - twoK);
    if (E.sum[vi] != chosen) throw std::logic_error("sum bookkeeping mismatch in step");
    for (int w : E.alive_neighbors(vi))
        if (w != par && position[w] < idx && !E.dset[w].contains(E.sum[w]))
            throw std::logic_error("backward shift pushed a predecessor out of its pair");

    E.processed[vi] = 1;
    E.dset[vi] = E.pair_set_containing(chosen);
    strict_checks(vi);
    if (!dropped[vi])
        for (int y : E.conflict[vi])
            if (!dropped[y] && E.processed[y] && y != vi && E.dset[y].base == E.dset[vi].base)
                throw std::logic_error("reserved pairs collide between conflicting vertices");
}

Pipeline::Side Pipeline::make_side(int v, int other_root) const {
    Side s;
    s.v = v;
    s.other = other_root;
    s.deg = E.alive_deg(v);
    s.base = E.sum[v] - (E.two_k() + 1);
    for (int w : E.alive_neighbors(v)) {
        if (w == other_root) continue;
        int e = E.g->edge_id(v, w);
        if (!E.processed[w]) throw std::logic_error("root neighbor not processed before final step");
        if (!E.dset[w].contains(E.sum[w]))
            throw std::logic_error("root neighbor sum left its reserved pair");
        s.edges.push_back(e);
    }
    auto root_adjacent = [&](int y) {
        return (E.alive[y] &&
                ((E.g->has_edge(y, ord.root_pair.first) && E.alive[ord.root_pair.first]) ||
                 (E.g->has_edge(y, ord.root_pair.second) && E.alive[ord.root_pair.second])));
    };
    if (!dropped[v])
        for (int y : E.conflict[v]) {
            if (dropped[y] || y == other_root) continue;
            if (E.processed[y]) {
                // Sums of root-adjacent vertices flip inside their reserved
                // pair during this step, so both values are off-limits.
                if (root_adjacent(y)) {
                    s.blocked.insert(E.dset[y].base);
                    s.blocked.insert(E.dset[y].high());
                } else {
                    s.blocked.insert(E.sum[y]);
                }
            } else if (E.settled[y]) {
                s.blocked.insert(E.sum[y]);
            }
        }
    return s;
}

Color Pipeline::edge_dir(int e, int root, const Pending& pending) const {
    int w = edge_other(e, root);
    Color s = E.sum[w];
    for (auto [x, delta] : pending)
        if (x == w) s += delta;
    if (s == E.dset[w].base) return E.two_k();
    if (s == E.dset[w].high()) return -E.two_k();
    throw std::logic_error("edge direction requested for a sum outside its pair");
}

long long Pipeline::count_blocked(const Side& s, Color rho) const {
    // Blocked values attainable in the joint space: a neighbor shared with the
    // other root can compensate there, so its edge counts in both directions.
    const Color twoK = E.two_k();
    auto gs = gamma_multipliers(rho);
    long long up = 0, down = 0;
    for (int e : s.edges) {
        int w = edge_other(e, s.v);
        bool shared = E.alive[w] && E.g->has_edge(w, s.other);
        if (shared) {
            ++up;
            ++down;
        } else if (edge_dir(e, s.v, {}) > 0) {
            ++up;
        } else {
            ++down;
        }
    }
    long long count = 0;
    for (long long t = gs.front() - down; t <= gs.back() + up; ++t)
        if (s.blocked.count(s.base + rho + twoK * t)) ++count;
    return count;
}

std::pair<long long, long long> Pipeline::way_counts(const Side& s, const Pending& pending) const {
    long long up = 0, down = 0;
    for (int e : s.edges) (edge_dir(e, s.v, pending) > 0 ? up : down) += 1;
    return {up, down};
}

Pipeline::Plan Pipeline::plan_for(const Side& s, long long j, const Pending& pending) const {
    Plan plan;
    Color sign = j >= 0 ? E.two_k() : -E.two_k();
    long long need = j >= 0 ? j : -j;
    for (int e : s.edges) {
        Color dir = edge_dir(e, s.v, pending);
        if (need > 0 && dir == sign) {
            plan.emplace_back(e, dir);
            --need;
        } else {
            plan.emplace_back(e, 0);
        }
    }
    if (need != 0) throw std::logic_error("shift plan exceeds one-way capacity");
    return plan;
}

void Pipeline::apply(const Side& a_side, const Plan& a_plan, const Side& b_side,
                     const Plan& b_plan, Color gamma, int er, Color want_a, Color want_b) {
    E.write_color(er, gamma, /*count_always=*/true);
    for (auto [e, delta] : a_plan)
        if (delta != 0) E.write_color(e, E.color[e] + delta);
    for (auto [e, delta] : b_plan)
        if (delta != 0) E.write_color(e, E.color[e] + delta);
    if (E.sum[a_side.v] != want_a || E.sum[b_side.v] != want_b)
        throw std::logic_error("final step sums do not match the chosen targets");
    if (want_a == want_b) throw std::logic_error("root pair sums collide");
    if (a_side.blocked.count(want_a) || b_side.blocked.count(want_b))
        throw std::logic_error("final step landed on a blocked sum");
    for (int w : E.alive_neighbors(a_side.v))
        if (w != b_side.v && !E.dset[w].contains(E.sum[w]))
            throw std::logic_error("final shifts pushed a neighbor out of its pair");
    for (int w : E.alive_neighbors(b_side.v))
        if (w != a_side.v && !E.dset[w].contains(E.sum[w]))
            throw std::logic_error("final shifts pushed a neighbor out of its pair");
    strict_checks(a_side.v);
    strict_checks(b_side.v);
}

bool Pipeline::try_direct(const Side& primary, const Side& secondary, Color rho, int er) {
    const Color twoK = E.two_k();
    auto gs = gamma_multipliers(rho);
    auto [up_p, down_p] = way_counts(primary, {});
    for (long long t = gs.front() - down_p; t <= gs.back() + up_p; ++t) {
        Color val = primary.base + rho + twoK * t;
        if (val < 0 || primary.blocked.count(val)) continue;
        for (Color gm : gs) {
            long long j = t - gm;
            if (j < -down_p || j > up_p) continue;
            Color gamma = rho + twoK * gm;
            Plan plan_p = plan_for(primary, j, {});
            Pending pending;
            for (auto [e, delta] : plan_p)
                if (delta != 0) pending.emplace_back(edge_other(e, primary.v), delta);
            auto [up_s, down_s] = way_counts(secondary, pending);
            for (long long js = -down_s; js <= up_s; ++js) {
                Color vs = E.sum[secondary.v] + (gamma - (twoK + 1)) + twoK * js;
                if (vs < 0 || vs == val || secondary.blocked.count(vs)) continue;
                apply(primary, plan_p, secondary, plan_for(secondary, js, pending), gamma, er,
                      val, vs);
                return true;
            }
        }
    }
    return false;
}

bool Pipeline::try_exchange(const Side& wide, const Side& narrow, Color rho, int er) {
    const Color twoK = E.two_k();
    auto gs = gamma_multipliers(rho);
    auto [up_w, down_w] = way_counts(wide, {});
    for (long long t = gs.front() - down_w; t <= gs.back() + up_w; ++t) {
        Color val = wide.base + rho + twoK * t;
        if (val < 0 || wide.blocked.count(val)) continue;
        for (Color gm : gs) {
            long long j = t - gm;
            if (j < -down_w || j > up_w) continue;
            Color gamma = rho + twoK * gm;
            Plan base_plan = plan_for(wide, j, {});
            for (Color dir : {-twoK, twoK}) {  // prefer lowering the root edge color
                Color gamma2 = gamma + dir;
                if (gamma2 < 1 || gamma2 > E.six_k()) continue;
                for (size_t idx = 0; idx < base_plan.size(); ++idx) {
                    int e = base_plan[idx].first;
                    int w = edge_other(e, wide.v);
                    if (w == narrow.v || E.g->has_edge(w, narrow.v)) continue;
                    Color delta2 = base_plan[idx].second - dir;
                    if (delta2 != 0 && delta2 != edge_dir(e, wide.v, {})) continue;
                    // Compensating the root edge change on an edge away from
                    // the narrow root keeps the wide sum while shifting the
                    // narrow root's reachable sums by dir.
                    Plan plan_w = base_plan;
                    plan_w[idx].second = delta2;
                    Pending pending;
                    for (auto [pe, pd] : plan_w)
                        if (pd != 0) pending.emplace_back(edge_other(pe, wide.v), pd);
                    auto [up_n, down_n] = way_counts(narrow, pending);
                    for (long long js = -down_n; js <= up_n; ++js) {
                        Color vs = E.sum[narrow.v] + (gamma2 - (twoK + 1)) + twoK * js;
                        if (vs < 0 || vs == val || narrow.blocked.count(vs)) continue;
                        apply(wide, plan_w, narrow, plan_for(narrow, js, pending), gamma2, er,
                              val, vs);
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

void Pipeline::finalize() {
    if (!main_done) throw std::logic_error("main phase must run before the final step");
    const Color twoK = E.two_k();
    const int va = ord.root_pair.first;   // v_{n-1}
    const int vb = ord.root_pair.second;  // v_n
    const int er = E.g->edge_id(va, vb);
    if (er < 0 || E.color[er] != twoK + 1 || E.mods[er] != 0)
        throw std::logic_error("root edge in unexpected state before the final step");

    std::set<Color> bad_res;
    for (int x : {va, vb})
        for (int w : E.g->neighbors(x)) {
            int e = E.g->edge_id(x, w);
            if (e != er && E.color[e] > 0) bad_res.insert(E.color[e] % twoK);
        }
    std::vector<Color> residues;
    for (Color rho = 0; rho < twoK; ++rho)
        if (!bad_res.count(rho)) residues.push_back(rho);
    if (static_cast<long long>(residues.size()) < 2 * P().m_quot)
        E.infeasible("fewer than 2M admissible residues for the root edge");
    residues.resize(static_cast<size_t>(2 * P().m_quot));

    Side sa = make_side(va, vb);
    Side sb = make_side(vb, va);

    long long j1 = 0, j2 = 0;
    Color rho = -1;
    for (Color candidate : residues) {
        long long c1 = count_blocked(sa, candidate);
        long long c2 = count_blocked(sb, candidate);
        if (c1 * (sb.deg + 2) + c2 * (sa.deg + 2) < (sa.deg + 2) * (sb.deg + 2)) {
            rho = candidate;
            j1 = c1;
            j2 = c2;
            break;
        }
    }
    if (rho < 0) E.exhausted_cases("no residue satisfies the averaging bound");
    const long long d1 = sa.deg, d2 = sb.deg;

    int case_id = 0;
    bool ok = false;
    if (j2 <= d2 - 2) {
        case_id = 1;
        ok = try_direct(sa, sb, rho, er);
    } else if (j1 <= d1 - 2) {
        case_id = 5;
        ok = try_direct(sb, sa, rho, er);
    } else if (j1 == d1 && j2 == d2 - 1 && (d1 == 4 || d1 == 5) && d2 == 2) {
        case_id = 2;
        ok = try_direct(sa, sb, rho, er) || try_exchange(sa, sb, rho, er);
    } else if (j2 == d2 && j1 == d1 - 1 && (d2 == 4 || d2 == 5) && d1 == 2) {
        case_id = 4;
        ok = try_direct(sb, sa, rho, er) || try_exchange(sb, sa, rho, er);
    } else if (j1 <= d1 - 1 && j2 <= d2 - 1) {
        case_id = 3;
        ok = try_direct(sa, sb, rho, er);
    } else {
        E.exhausted_cases("final-step blocking pattern outside cases 1-5");
    }
    if (!ok) E.exhausted_cases("final-step case " + std::to_string(case_id) + " found no target");
    if (E.stats) ++E.stats->final_case_counts[static_cast<size_t>(case_id - 1)];
    if (E.mods[er] != 1) throw std::logic_error("root edge must be modified exactly once");
    finalized = true;
    for (int v : comp)
        if (!dropped[v]) E.settle(v);
}

// ---- engine dispatch --------------------------------------------------------

void Engine::color_k2(int a, int b, const std::vector<char>& dropped) {
    if (stats) ++stats->k2_components;
    if (!dropped[a] && !dropped[b])
        throw std::logic_error("K_2 component without an attachment vertex");
    std::set<Color> bad;
    for (int x : {a, b})
        if (!dropped[x])
            for (int y : conflict[x])
                if (!dropped[y] && settled[y]) bad.insert(sum[y]);
    Color c = 1;
    while (bad.count(c)) ++c;
    if (c > P.palette_max) infeasible("K_2 component out of palette");
    write_color(g->edge_id(a, b), c);
    if (!dropped[a]) settle(a);
    if (!dropped[b]) settle(b);
}

void Engine::color_star(const std::vector<int>& comp, int center,
                        const std::vector<char>& dropped) {
    if (stats) ++stats->star_components;
    std::vector<int> leaves;
    for (int v : comp)
        if (v != center) leaves.push_back(v);

    auto leaf_ok = [&](int leaf, Color a, const std::set<Color>& used) {
        if (used.count(a)) return false;
        if (!dropped[leaf])
            for (int y : conflict[leaf])
                if (!dropped[y] && settled[y] && sum[y] == a) return false;
        return true;
    };

    std::set<Color> used;
    std::vector<Color> pick(leaves.size(), 0);
    for (size_t i = 0; i < leaves.size(); ++i) {
        Color a = 1;
        while (!leaf_ok(leaves[i], a, used)) {
            ++a;
            if (a > P.palette_max) infeasible("star leaf out of palette");
        }
        pick[i] = a;
        used.insert(a);
    }
    if (!dropped[center]) {
        auto center_blocked = [&](Color s) {
            for (int y : conflict[center])
                if (!dropped[y] && settled[y] && sum[y] == s) return true;
            return false;
        };
        Color total = 0;
        for (Color a : pick) total += a;
        while (center_blocked(total)) {
            size_t last = leaves.size() - 1;
            used.erase(pick[last]);
            Color a = pick[last] + 1;
            while (!leaf_ok(leaves[last], a, used)) {
                ++a;
                if (a > P.palette_max) infeasible("star center out of palette");
            }
            total += a - pick[last];
            pick[last] = a;
            used.insert(a);
        }
    }
    for (size_t i = 0; i < leaves.size(); ++i)
        write_color(g->edge_id(center, leaves[i]), pick[i]);
    for (Color a : pick)
        if (sum[center] == a) throw std::logic_error("star center sum equals a leaf sum");
    for (int v : comp)
        if (!dropped[v]) settle(v);
}

void Engine::color_small(const std::vector<int>& comp, const std::vector<char>& dropped) {
    if (stats) ++stats->base_case_components;
    const std::vector<int>& verts = comp;
    auto local_of = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int w : alive_neighbors(u))
            if (u < w) edges.emplace_back(local_of(u), local_of(w));
    Graph local = Graph::from_edge_list(static_cast<int>(verts.size()), edges);

    std::vector<std::pair<int, int>> pairs;
    for (int u : verts)
        if (!dropped[u])
            for (int w : conflict[u])
                if (w > u && !dropped[w] && std::binary_search(verts.begin(), verts.end(), w))
                    pairs.emplace_back(local_of(u), local_of(w));

    std::vector<std::vector<Color>> forbidden(verts.size());
    for (int u : verts)
        if (!dropped[u])
            for (int y : conflict[u])
                if (!dropped[y] && settled[y]) forbidden[local_of(u)].push_back(sum[y]);

    SearchOptions options;
    options.proper = true;
    options.pairs = &pairs;
    options.forbidden_sums = &forbidden;
    auto outcome = search_min_coloring(local, r, P.palette_max, options);
    if (!outcome.result) infeasible("no bounded coloring for a small component");
    for (int i = 0; i < local.edge_count(); ++i) {
        auto [lu, lw] = local.edges()[i];
        write_color(g->edge_id(verts[lu], verts[lw]), outcome.result->witness.get(i));
    }
    for (int v : verts)
        if (!dropped[v]) settle(v);
}

void Engine::greedy_extend(int v, int u1, int u2, const std::vector<char>& dropped,
                           const std::vector<std::pair<int, int>>& k2_children) {
    // First edge: proper at u1, the partial sum at v (the color itself) must
    // differ from the partial sum at u2, and u1's finished sum must avoid the
    // settled sums of its conflict partners.
    const Color pre_u2 = sum[u2];
    std::set<Color> bad;
    for (int w : g->neighbors(u1)) {
        int e = g->edge_id(u1, w);
        if (color[e] > 0) bad.insert(color[e]);
    }
    bad.insert(pre_u2);
    if (!dropped[u1])
        for (int y : conflict[u1])
            if (!dropped[y] && settled[y] && sum[y] - sum[u1] >= 1) bad.insert(sum[y] - sum[u1]);
    Color c1 = 1;
    while (bad.count(c1)) ++c1;
    if (c1 > P.palette_max) infeasible("reduction extension, first edge");
    write_color(g->edge_id(v, u1), c1);
    if (!dropped[u1]) settle(u1);

    // Second edge: proper at v and u2; the new sums at v and u2 must avoid the
    // settled sums of their conflict partners. v and u2 end up distinct
    // because c1 differs from u2's pre-extension sum.
    std::set<Color> bad2{c1};
    for (int w : g->neighbors(u2)) {
        int e = g->edge_id(u2, w);
        if (color[e] > 0) bad2.insert(color[e]);
    }
    if (!dropped[v])
        for (int y : conflict[v])
            if (!dropped[y] && settled[y] && sum[y] - sum[v] >= 1) bad2.insert(sum[y] - sum[v]);
    if (!dropped[u2])
        for (int y : conflict[u2])
            if (!dropped[y] && settled[y] && sum[y] - sum[u2] >= 1) bad2.insert(sum[y] - sum[u2]);
    Color c2 = 1;
    while (bad2.count(c2)) ++c2;
    if (c2 > P.palette_max) infeasible("reduction extension, second edge");
    write_color(g->edge_id(v, u2), c2);

    if (!dropped[v] && !dropped[u2] && in_conflict(v, u2) && sum[v] == sum[u2])
        throw std::logic_error("reduction extension left v and u2 in conflict");
    for (auto [a, b] : k2_children)
        if (!dropped[a] && !dropped[b] && in_conflict(a, b) && sum[a] == sum[b])
            throw std::logic_error("deferred K_2 conflict not cleared by the extension");
    if (!dropped[v]) settle(v);
    if (!dropped[u2]) settle(u2);
}

void Engine::reduce_and_extend(const std::vector<int>& comp, std::vector<char>& dropped, int v) {
    if (stats) ++stats->reductions;
    auto nbrs = alive_neighbors(v);
    int u1 = nbrs[0], u2 = nbrs[1];
    std::vector<char> child_dropped = dropped;
    child_dropped[v] = child_dropped[u1] = child_dropped[u2] = 1;
    alive[v] = 0;
    std::vector<int> rest;
    for (int x : comp)
        if (x != v) rest.push_back(x);
    std::vector<std::pair<int, int>> k2_children;
    for (auto& child : alive_components(rest)) {
        if (child.size() == 2) k2_children.emplace_back(child[0], child[1]);
        color_component(child, child_dropped);
    }
    alive[v] = 1;
    greedy_extend(v, u1, u2, dropped, k2_children);
}

void Engine::color_component(const std::vector<int>& comp, std::vector<char>& dropped) {
    const int k = static_cast<int>(comp.size());
    if (k == 1) {
        if (!dropped[comp[0]]) settle(comp[0]);
        return;
    }
    if (k == 2) {
        color_k2(comp[0], comp[1], dropped);
        return;
    }
    int center = -1;
    bool star = true;
    for (int x : comp) {
        int d = alive_deg(x);
        if (d == k - 1 && center < 0)
            center = x;
        else if (d != 1)
            star = false;
    }
    if (star && center >= 0) {
        color_star(comp, center, dropped);
        return;
    }
    if (k == 3) {
        color_small(comp, dropped);
        return;
    }
    for (int x : comp) {
        if (alive_deg(x) != 2) continue;
        auto nbrs = alive_neighbors(x);
        if (alive_deg(nbrs[0]) <= 3 && alive_deg(nbrs[1]) <= 3) {
            reduce_and_extend(comp, dropped, x);
            return;
        }
    }
    // Every degree-2 vertex has a neighbor of degree >= 4: main construction.
    Pipeline pipe(*this, comp, dropped);
    pipe.set_ordering(make_ordering(comp));
    pipe.initial_coloring();
    pipe.main_phase();
    pipe.finalize();
}

}  // namespace

// ---- public surface ----------------------------------------------------------

EdgeColoring color_distinguishing(const Graph& g, int r, RunStats* stats) {
    if (r < 2) throw std::invalid_argument("radius must be >= 2");
    validate_colorable(g);
    Engine engine(g);
    RunStats local;
    engine.stats = &local;
    engine.build_conflicts(r);
    try {
        for (const auto& comp : connected_components(g)) {
            if (comp.size() == 1) {
                engine.settle(comp[0]);
                continue;
            }
            int delta = 0;
            for (int v : comp) delta = std::max(delta, g.degree(v));
            engine.P = bound_params(std::max(delta, 2), r);
            std::vector<char> dropped(g.vertex_count(), 0);
            engine.color_component(comp, dropped);
        }
    } catch (...) {
        if (stats) stats->add(local);
        throw;
    }
    if (stats) stats->add(local);
    return engine.snapshot();
}

std::optional<std::array<int, 3>> reduce_degree_two(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        int u1 = g.neighbors(v)[0], u2 = g.neighbors(v)[1];
        if (g.degree(u1) <= 3 && g.degree(u2) <= 3) return std::array<int, 3>{v, u1, u2};
    }
    return std::nullopt;
}

struct AlgoState::Impl {
    const Graph* g;
    Engine engine;
    Pipeline pipe;

    Impl(const Graph& graph, Ordering ord, const BoundParams& params)
        : g(&graph),
          engine(graph),
          pipe(engine, {}, std::vector<char>(graph.vertex_count(), 0)) {
        engine.P = params;
        std::vector<int> comp = ord.sequence;
        std::sort(comp.begin(), comp.end());
        pipe.comp = std::move(comp);
        pipe.set_ordering(std::move(ord));
    }
};

const Ordering& AlgoState::ordering() const { return impl->pipe.ord; }
const BoundParams& AlgoState::params() const { return impl->engine.P; }
EdgeColoring AlgoState::coloring() const { return impl->engine.snapshot(); }
PairSet AlgoState::pair_set(int v) const {
    return impl->engine.processed[v] ? impl->engine.dset[v] : PairSet{};
}
int AlgoState::modification_count(int edge_id) const { return impl->engine.mods.at(edge_id); }

AlgoState initial_coloring(const Graph& g, const Ordering& ord, const BoundParams& params) {
    AlgoState state;
    state.impl = std::make_shared<AlgoState::Impl>(g, ord, params);
    state.impl->pipe.initial_coloring();
    return state;
}

void run_main_phase(AlgoState& state, int r) {
    Engine& engine = state.impl->engine;
    if (engine.conflict.empty())
        engine.build_conflicts(r);
    else if (engine.r != r)
        throw std::invalid_argument("radius changed between phases");
    state.impl->pipe.main_phase();
}

EdgeColoring finalize_root_pair(AlgoState& state, int r) {
    Engine& engine = state.impl->engine;
    if (engine.conflict.empty())
        engine.build_conflicts(r);
    else if (engine.r != r)
        throw std::invalid_argument("radius changed between phases");
    state.impl->pipe.finalize();
    return engine.snapshot();
}

Ordering build_ordering(const Graph& g) {
    Engine engine(g);
    std::vector<int> comp(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) comp[v] = v;
    return engine.make_ordering(comp);
}

EdgeColoring extend_after_reduction(const Graph& g, int v, int u1, int u2,
                                    const EdgeColoring& h_coloring, int r,
                                    const BoundParams& params) {
    if (g.degree(v) != 2 || !g.has_edge(v, u1) || !g.has_edge(v, u2))
        throw std::invalid_argument("v must have exactly the neighbors u1, u2");
    if (h_coloring.size() != g.edge_count())
        throw std::invalid_argument("h_coloring must be indexed by g's edges");
    const int e1 = g.edge_id(v, u1), e2 = g.edge_id(v, u2);
    for (int e = 0; e < g.edge_count(); ++e) {
        bool is_v_edge = (e == e1 || e == e2);
        if (is_v_edge && h_coloring.get(e) != 0)
            throw std::invalid_argument("edges at v must be uncolored in h_coloring");
        if (!is_v_edge && h_coloring.get(e) < 1)
            throw std::invalid_argument("h_coloring must color every edge of g - v");
    }
    Engine engine(g);
    engine.P = params;
    engine.build_conflicts(r);
    for (int e = 0; e < g.edge_count(); ++e)
        if (h_coloring.get(e) > 0) engine.write_color(e, h_coloring.get(e));
    for (int x = 0; x < g.vertex_count(); ++x)
        if (x != v && x != u1 && x != u2) engine.settle(x);
    std::vector<char> dropped(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> k2_children;
    {
        std::vector<std::pair<int, int>> rest;
        for (auto [a, b] : g.edges())
            if (a != v && b != v) rest.emplace_back(a, b);
        Graph h = Graph::from_edge_list(g.vertex_count(), rest);
        for (const auto& comp : connected_components(h))
            if (comp.size() == 2 && h.has_edge(comp[0], comp[1]))
                k2_children.emplace_back(comp[0], comp[1]);
    }
    engine.greedy_extend(v, u1, u2, dropped, k2_children);
    return engine.snapshot();
}

}  // namespace distsum
