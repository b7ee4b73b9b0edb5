#include "distsum/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace distsum {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("endpoint out of range: " + pair_str(u, v));
        if (u == v) throw std::invalid_argument("self-loop: " + pair_str(u, v));
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second)
            throw std::invalid_argument("duplicate edge: " + pair_str(u, v));
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> r_neighborhood(const Graph& g, int v, int r) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    if (r < 1) throw std::invalid_argument("radius must be >= 1");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    std::vector<int> result;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (dist[x] == r) continue;
        for (int y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                result.push_back(y);
                queue.push_back(y);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t i = 0; i < comp.size(); ++i)
            for (int y : g.neighbors(comp[i]))
                if (!seen[y]) {
                    seen[y] = 1;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("Moore bound arithmetic overflow");
    return out;
}

long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("Moore bound arithmetic overflow");
    return out;
}

}  // namespace

BoundParams bound_params(long long delta, long long r) {
    if (delta < 2) throw std::invalid_argument("maximum degree must be >= 2");
    if (r < 2) throw std::invalid_argument("radius must be >= 2");
    BoundParams p;
    p.delta = delta;
    p.r = r;
    // moore = 1 + sum_{i=0}^{r-1} delta*(delta-1)^i; m_quot is the same sum
    // with the leading delta dropped, so integrality is structural.
    long long term = 1;  // (delta-1)^i
    long long quot = 0;
    for (long long i = 0; i < r; ++i) {
        quot = checked_add(quot, term);
        term = checked_mul(term, delta - 1);
    }
    p.m_quot = quot;
    p.moore = checked_add(1, checked_mul(delta, quot));
    if ((p.moore - 1) % delta != 0)
        throw std::logic_error("Moore bound integrality violated");
    if ((p.moore - 1) / delta != p.m_quot)
        throw std::logic_error("Moore quotient mismatch");
    p.k_val = checked_add(p.m_quot, delta - 1);
    p.palette_max = checked_add(checked_mul(6, p.k_val), delta);
    return p;
}

std::vector<std::pair<int, int>> isolated_edge_components(const Graph& g) {
    std::vector<std::pair<int, int>> bad;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 2 && g.has_edge(comp[0], comp[1]))
            bad.emplace_back(comp[0], comp[1]);
    }
    return bad;
}

void validate_colorable(const Graph& g) {
    auto bad = isolated_edge_components(g);
    if (bad.empty()) return;
    std::string msg = "graph has isolated edge component(s):";
    for (auto [u, v] : bad) msg += " " + pair_str(u, v);
    throw std::invalid_argument(msg);
}

}  // namespace distsum
