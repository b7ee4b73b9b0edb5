#include "distsum/verify.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace distsum {

Color weighted_degree(const Graph& g, const EdgeColoring& c, int v) {
    Color sum = 0;
    for (int w : g.neighbors(v)) sum += c.get(g.edge_id(v, w));
    return sum;
}

VerificationReport verify(const Graph& g, const EdgeColoring& c, int r) {
    if (r < 1) throw std::invalid_argument("radius must be >= 1");
    if (c.size() != g.edge_count())
        throw std::invalid_argument("coloring size does not match graph edge count");
    if (!c.total()) {
        std::string msg = "coloring is partial; missing edges:";
        for (int eid : c.missing_edges()) {
            auto [u, v] = g.edges()[eid];
            msg += " (" + std::to_string(u) + ", " + std::to_string(v) + ")";
        }
        throw std::invalid_argument(msg);
    }

    VerificationReport report;
    report.max_color = c.max_color();

    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        for (size_t i = 0; i < nbrs.size(); ++i)
            for (size_t j = i + 1; j < nbrs.size(); ++j) {
                if (c.get(g.edge_id(v, nbrs[i])) == c.get(g.edge_id(v, nbrs[j]))) {
                    report.properness_violations.push_back(
                        {v,
                         std::minmax(v, nbrs[i]),
                         std::minmax(v, nbrs[j])});
                }
            }
    }

    std::vector<Color> sums(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) sums[v] = weighted_degree(g, c, v);

    // Fresh truncated BFS per vertex; pairs reported once with u < v.
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
            if (dist[v] >= 1 && dist[v] <= r && sums[u] == sums[v])
                report.conflicts.push_back({u, v, dist[v], sums[u]});
    }

    std::sort(report.properness_violations.begin(), report.properness_violations.end());
    std::sort(report.conflicts.begin(), report.conflicts.end());
    report.proper = report.properness_violations.empty();
    report.distinguishing = report.conflicts.empty();
    return report;
}

}  // namespace distsum
