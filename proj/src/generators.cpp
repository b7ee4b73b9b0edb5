#include "distsum/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace distsum {

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("both parts need at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph::from_edge_list(a + b, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t draw = rng();
            bool take;
            if (p >= 1.0)
                take = true;
            else if (p <= 0.0)
                take = false;
            else
                take = static_cast<double>(draw) < p * 18446744073709551616.0;  // 2^64
            if (take) edges.emplace_back(i, j);
        }
    return Graph::from_edge_list(n, edges);
}

Graph de_bruijn_undirected(int d, int r) {
    if (d < 2) throw std::invalid_argument("alphabet size must be >= 2");
    if (r < 1) throw std::invalid_argument("word length must be >= 1");
    long long n = 1;
    for (int i = 0; i < r; ++i) {
        n *= d;
        if (n > (1 << 20)) throw std::overflow_error("de Bruijn graph too large");
    }
    // Word w = digits base d; shift-append successors of w are (w*d + a) mod n.
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<long long> seen;
    for (long long w = 0; w < n; ++w)
        for (int a = 0; a < d; ++a) {
            long long s = (w * d + a) % n;
            if (s == w) continue;
            long long lo = std::min(w, s), hi = std::max(w, s);
            if (seen.insert(lo * n + hi).second)
                edges.emplace_back(static_cast<int>(lo), static_cast<int>(hi));
        }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

namespace {

// Small-graph canonical forms: n <= 8, adjacency as per-vertex bitmask rows.
// The canonical key packs the lower triangle of the adjacency matrix, row by
// row, into a 28-bit integer, minimized over all vertex permutations by
// branch-and-bound (candidates tried in ascending chunk order, pruned against
// the best known key).
struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, 8> rows{};

    bool adjacent(int i, int j) const { return (rows[i] >> j) & 1; }
    void add_edge(int i, int j) {
        rows[i] |= std::uint8_t(1u << j);
        rows[j] |= std::uint8_t(1u << i);
    }
};

struct CanonSearch {
    const SmallGraph& g;
    std::uint32_t best = 0xFFFFFFFFu;
    std::array<int, 8> perm{};  // perm[pos] = original vertex placed at pos

    explicit CanonSearch(const SmallGraph& graph) : g(graph) {}

    void run() { descend(0, 0, 0u, true); }

    // pos: next position to fill; used: bitmask of placed vertices;
    // key: bits accumulated so far; tight: key equals best's prefix.
    void descend(int pos, unsigned used, std::uint32_t key, bool tight) {
        if (pos == g.n) {
            if (key < best) best = key;
            return;
        }
        // Chunk for a candidate = its adjacency bits against placed vertices,
        // earlier positions more significant.
        std::array<std::pair<std::uint32_t, int>, 8> cands;
        int count = 0;
        for (int v = 0; v < g.n; ++v) {
            if (used & (1u << v)) continue;
            std::uint32_t chunk = 0;
            for (int p = 0; p < pos; ++p)
                chunk = (chunk << 1) | (g.adjacent(v, perm[p]) ? 1u : 0u);
            cands[count++] = {chunk, v};
        }
        std::sort(cands.begin(), cands.begin() + count);
        for (int i = 0; i < count; ++i) {
            auto [chunk, v] = cands[i];
            std::uint32_t next_key = (key << pos) | chunk;
            if (tight) {
                std::uint32_t best_prefix = best >> bits_after(pos);
                if (next_key > best_prefix) break;  // ascending order: rest worse
                perm[pos] = v;
                descend(pos + 1, used | (1u << v), next_key, next_key == best_prefix);
            } else {
                if (i > 0 && chunk != cands[0].first) break;  // only minimal chunks matter
                perm[pos] = v;
                descend(pos + 1, used | (1u << v), next_key, false);
            }
        }
    }

    int bits_after(int pos) const {
        // Bits contributed by positions pos+1 .. n-1 (position p adds p bits).
        int total = 0;
        for (int p = pos + 1; p < g.n; ++p) total += p;
        return total;
    }
};

std::uint32_t canonical_key(const SmallGraph& g) {
    CanonSearch search(g);
    search.run();
    return search.best;
}

SmallGraph to_small(const Graph& g) {
    if (g.vertex_count() > 8) throw std::invalid_argument("canonical forms limited to n <= 8");
    SmallGraph s;
    s.n = g.vertex_count();
    for (auto [u, v] : g.edges()) s.add_edge(u, v);
    return s;
}

Graph key_to_graph(int n, std::uint32_t key) {
    // Inverse of the key packing: the chunk for row p (p = 1..n-1) holds the
    // adjacency of p to vertices 0..p-1, vertex 0 most significant; rows are
    // packed most-significant-first, so row n-1 sits in the low bits.
    std::vector<std::pair<int, int>> edges;
    int shift = 0;
    for (int p = n - 1; p >= 1; --p) {
        std::uint32_t chunk = (key >> shift) & ((1u << p) - 1);
        for (int q = p - 1; q >= 0; --q)
            if ((chunk >> (p - 1 - q)) & 1) edges.emplace_back(q, p);
        shift += p;
    }
    return Graph::from_edge_list(n, edges);
}

}  // namespace

std::vector<Graph> all_connected(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_connected supports 1 <= n <= 8");
    // Augmentation: every connected graph on k+1 vertices arises from a
    // connected graph on k vertices (remove a non-cut vertex) plus the new
    // vertex wired to a nonempty neighbor set; dedup via canonical keys.
    std::vector<std::uint32_t> level{0u};  // K_1
    for (int k = 1; k < n; ++k) {
        std::unordered_set<std::uint32_t> next_keys;
        for (std::uint32_t key : level) {
            Graph parent = key_to_graph(k, key);
            SmallGraph base = to_small(parent);
            base.n = k + 1;
            for (unsigned subset = 1; subset < (1u << k); ++subset) {
                SmallGraph child = base;
                for (int v = 0; v < k; ++v)
                    if (subset & (1u << v)) child.add_edge(k, v);
                next_keys.insert(canonical_key(child));
            }
        }
        level.assign(next_keys.begin(), next_keys.end());
        std::sort(level.begin(), level.end());
    }
    std::vector<std::pair<int, std::uint32_t>> ordered;  // (edge count, key)
    ordered.reserve(level.size());
    for (std::uint32_t key : level) ordered.emplace_back(std::popcount(key), key);
    std::sort(ordered.begin(), ordered.end());
    std::vector<Graph> out;
    out.reserve(ordered.size());
    for (auto [m, key] : ordered) out.push_back(key_to_graph(n, key));
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (a.vertex_count() == 0) return true;
    return canonical_key(to_small(a)) == canonical_key(to_small(b));
}

}  // namespace distsum
