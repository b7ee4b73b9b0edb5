#include "distsum/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace distsum {

bool EdgeColoring::total() const {
    return std::all_of(colors_.begin(), colors_.end(), [](Color c) { return c >= 1; });
}

Color EdgeColoring::max_color() const {
    Color m = 0;
    for (Color c : colors_) m = std::max(m, c);
    return m;
}

std::vector<int> EdgeColoring::missing_edges() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (colors_[i] < 1) out.push_back(i);
    return out;
}

namespace {

// Misra-Gries state: colors are 1-based, 0 = uncolored.
struct MisraGries {
    const Graph& g;
    EdgeColoring colors;
    Color limit;  // max_degree + 1

    explicit MisraGries(const Graph& graph)
        : g(graph), colors(graph.edge_count()), limit(graph.max_degree() + 1) {}

    Color color_of(int u, int v) const { return colors.get(g.edge_id(u, v)); }

    bool is_free(int v, Color c) const {
        if (c < 1) return false;
        for (int w : g.neighbors(v))
            if (color_of(v, w) == c) return false;
        return true;
    }

    Color least_free(int v) const {
        for (Color c = 1; c <= limit; ++c)
            if (is_free(v, c)) return c;
        throw std::logic_error("no free color within max_degree+1");
    }

    // Maximal fan of u starting at v: each next vertex is a neighbor whose
    // edge color is free at the current fan end; lowest index first.
    std::vector<int> maximal_fan(int u, int v) const {
        std::vector<int> fan{v};
        bool extended = true;
        while (extended) {
            extended = false;
            for (int w : g.neighbors(u)) {
                Color cw = color_of(u, w);
                if (cw == 0) continue;
                if (std::find(fan.begin(), fan.end(), w) != fan.end()) continue;
                if (is_free(fan.back(), cw)) {
                    fan.push_back(w);
                    extended = true;
                    break;
                }
            }
        }
        return fan;
    }

    // Flip the maximal path of edges alternately colored c, d starting at u.
    void invert_cd_path(int u, Color c, Color d) {
        int x = u;
        Color want = d;
        int prev_edge = -1;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(x)) {
                int eid = g.edge_id(x, w);
                if (eid != prev_edge && colors.get(eid) == want) {
                    next = w;
                    break;
                }
            }
            if (next < 0) break;
            int eid = g.edge_id(x, next);
            colors.set(eid, want == d ? c : d);
            prev_edge = eid;
            x = next;
            want = (want == d) ? c : d;
        }
    }

    // Shift colors along the fan prefix [0, end]: edge to fan[i] takes the
    // color of the edge to fan[i+1]; the last edge is left for the caller.
    void rotate_fan(int u, const std::vector<int>& fan, size_t end) {
        for (size_t i = 0; i + 1 <= end; ++i) {
            int cur = g.edge_id(u, fan[i]);
            int nxt = g.edge_id(u, fan[i + 1]);
            colors.set(cur, colors.get(nxt));
        }
    }

    void color_edge(int u, int v) {
        auto fan = maximal_fan(u, v);
        Color c = least_free(u);
        Color d = least_free(fan.back());
        if (c != d) invert_cd_path(u, c, d);
        // After the inversion d is free at u; find the first fan vertex where
        // d is also free and rotate the prefix onto it.
        size_t w = 0;
        while (w < fan.size() && !is_free(fan[w], d)) ++w;
        if (w == fan.size()) throw std::logic_error("fan rotation target not found");
        rotate_fan(u, fan, w);
        colors.set(g.edge_id(u, fan[w]), d);
    }
};

// Bipartite side assignment via BFS 2-coloring, or empty when odd cycles exist.
std::vector<char> bipartition(const Graph& g) {
    std::vector<char> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbors(x)) {
                if (side[y] < 0) {
                    side[y] = side[x] ^ 1;
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return {};
                }
            }
        }
    }
    return side;
}

// Bipartite graphs admit max_degree colors: color edges one by one, flipping
// an alternating path when the least free colors at the two ends differ. The
// path cannot close back on the first endpoint in a bipartite graph.
EdgeColoring koenig_color(const Graph& g) {
    EdgeColoring colors(g.edge_count());
    Color limit = g.max_degree();
    auto is_free = [&](int v, Color c) {
        for (int w : g.neighbors(v))
            if (colors.get(g.edge_id(v, w)) == c) return false;
        return true;
    };
    auto least_free = [&](int v) {
        for (Color c = 1; c <= limit; ++c)
            if (is_free(v, c)) return c;
        throw std::logic_error("no free color within max_degree");
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        Color a = least_free(u);
        Color b = least_free(v);
        if (a != b) {
            // Flip the a/b alternating path starting at v with color a.
            int x = v;
            Color want = a;
            int prev = -1;
            while (true) {
                int next = -1;
                for (int w : g.neighbors(x)) {
                    int eid = g.edge_id(x, w);
                    if (eid != prev && colors.get(eid) == want) {
                        next = w;
                        break;
                    }
                }
                if (next < 0) break;
                prev = g.edge_id(x, next);
                colors.set(prev, want == a ? b : a);
                x = next;
                want = (want == a) ? b : a;
            }
        }
        colors.set(e, a);
    }
    return colors;
}

}  // namespace

EdgeColoring vizing_color(const Graph& g) {
    if (!bipartition(g).empty() || g.edge_count() == 0) return koenig_color(g);
    MisraGries mg(g);
    for (auto [u, v] : g.edges()) mg.color_edge(u, v);
    return mg.colors;
}

EdgeColoring remap_colors(const EdgeColoring& c, Color offset) {
    if (offset < 0) throw std::invalid_argument("offset must be non-negative");
    EdgeColoring out(c.size());
    for (int i = 0; i < c.size(); ++i) out.set(i, c.get(i) + offset);
    return out;
}

}  // namespace distsum
