#include "distsum/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace distsum {

namespace {

std::vector<std::pair<int, int>> pairs_within(const Graph& g, int r) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<int> dist(g.vertex_count(), -1);
        std::deque<int> queue{u};
        dist[u] = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (dist[x] == r) continue;
            for (int y : g.neighbors(x))
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (dist[v] >= 1) pairs.emplace_back(u, v);
    }
    return pairs;
}

struct Searcher {
    const Graph& g;
    bool proper;
    std::vector<int> order;                  // position -> edge id
    std::vector<std::vector<int>> adjacent;  // position -> earlier adjacent positions
    std::vector<std::vector<int>> completes; // position -> vertices finishing there
    std::vector<std::vector<int>> partners;  // vertex -> paired vertices
    const std::vector<std::vector<Color>>* forbidden;
    std::vector<Color> sums;
    std::vector<Color> assigned;             // position -> color (0 = none)
    std::vector<char> done;                  // vertex completed
    long long node_limit;
    long long nodes = 0;
    bool out_of_budget = false;

    Searcher(const Graph& graph, const SearchOptions& options, int r)
        : g(graph), proper(options.proper), forbidden(options.forbidden_sums),
          node_limit(options.node_limit) {
        const int m = g.edge_count();
        order.resize(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            auto [au, av] = g.edges()[a];
            auto [bu, bv] = g.edges()[b];
            int da = std::min(g.degree(au), g.degree(av));
            int db = std::min(g.degree(bu), g.degree(bv));
            if (da != db) return da > db;
            return a < b;
        });

        adjacent.resize(m);
        for (int p = 0; p < m; ++p) {
            auto [u, v] = g.edges()[order[p]];
            for (int q = 0; q < p; ++q) {
                auto [x, y] = g.edges()[order[q]];
                if (x == u || x == v || y == u || y == v) adjacent[p].push_back(q);
            }
        }

        std::vector<int> last_pos(g.vertex_count(), -1);
        for (int p = 0; p < m; ++p) {
            auto [u, v] = g.edges()[order[p]];
            last_pos[u] = p;
            last_pos[v] = p;
        }
        completes.resize(m);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (last_pos[v] >= 0) completes[last_pos[v]].push_back(v);

        partners.resize(g.vertex_count());
        std::vector<std::pair<int, int>> local;
        const std::vector<std::pair<int, int>>* pairs = options.pairs;
        if (!pairs) {
            local = pairs_within(g, r);
            pairs = &local;
        }
        for (auto [u, v] : *pairs) {
            partners[u].push_back(v);
            partners[v].push_back(u);
        }

        sums.assign(g.vertex_count(), 0);
        assigned.assign(m, 0);
        done.assign(g.vertex_count(), 0);
    }

    bool vertex_ok(int v) const {
        if (forbidden)
            for (Color bad : (*forbidden)[v])
                if (sums[v] == bad) return false;
        for (int w : partners[v])
            if (done[w] && sums[w] == sums[v]) return false;
        return true;
    }

    bool dfs(int p, Color k) {
        if (p == static_cast<int>(order.size())) return true;
        auto [u, v] = g.edges()[order[p]];
        for (Color c = 1; c <= k; ++c) {
            if (node_limit >= 0 && ++nodes > node_limit) {
                out_of_budget = true;
                return false;
            }
            if (proper) {
                bool clash = false;
                for (int q : adjacent[p])
                    if (assigned[q] == c) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
            }
            assigned[p] = c;
            sums[u] += c;
            sums[v] += c;
            bool ok = true;
            for (int w : completes[p]) {
                done[w] = 1;
                if (!vertex_ok(w)) ok = false;
            }
            if (ok && dfs(p + 1, k)) return true;
            for (int w : completes[p]) done[w] = 0;
            sums[u] -= c;
            sums[v] -= c;
            assigned[p] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }

    EdgeColoring witness() const {
        EdgeColoring c(g.edge_count());
        for (size_t p = 0; p < order.size(); ++p) c.set(order[p], assigned[p]);
        return c;
    }
};

}  // namespace

SearchOutcome search_min_coloring(const Graph& g, int r, Color k_max,
                                  const SearchOptions& options) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    SearchOutcome outcome;
    if (g.edge_count() == 0) {
        // Nothing to color; k = 1 vacuously works (no sums, no adjacency).
        outcome.result = OracleResult{1, EdgeColoring(0)};
        return outcome;
    }
    for (Color k = 1; k <= k_max; ++k) {
        Searcher searcher(g, options, r);
        if (searcher.dfs(0, k)) {
            outcome.result = OracleResult{k, searcher.witness()};
            return outcome;
        }
        if (searcher.out_of_budget) {
            outcome.out_of_budget = true;
            return outcome;
        }
    }
    return outcome;
}

std::optional<OracleResult> exact_index(const Graph& g, int r, Color k_max) {
    validate_colorable(g);
    if (r < 1) throw std::invalid_argument("radius must be >= 1");
    SearchOptions options;
    options.proper = true;
    return search_min_coloring(g, r, k_max, options).result;
}

std::optional<OracleResult> exact_sr(const Graph& g, int r, Color k_max) {
    validate_colorable(g);
    if (r < 1) throw std::invalid_argument("radius must be >= 1");
    SearchOptions options;
    options.proper = false;
    return search_min_coloring(g, r, k_max, options).result;
}

}  // namespace distsum
