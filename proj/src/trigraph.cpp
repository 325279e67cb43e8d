#include "schur/trigraph.hpp"

#include <algorithm>
#include <bit>

namespace schur {

void SimpleGraph::add_edge(int i, int j) {
    if (i == j) throw IndexOutOfRange("loops are not allowed");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > vertices) throw IndexOutOfRange("edge endpoint outside 1..v");
    edges.insert({i, j});
}

bool SimpleGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) > 0;
}

SimpleGraph graph_of_pairset(const std::vector<std::pair<int, int>>& pairs, int n) {
    SimpleGraph g{n, {}};
    for (auto [i, j] : pairs) g.add_edge(i, j);
    return g;
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph c{g.vertices, {}};
    for (int i = 1; i <= g.vertices; ++i)
        for (int j = i + 1; j <= g.vertices; ++j)
            if (!g.has_edge(i, j)) c.edges.insert({i, j});
    return c;
}

long long count_triangles(const SimpleGraph& g) {
    int v = g.vertices;
    int blocks = (v + 64) / 64;
    std::vector<std::vector<std::uint64_t>> adj(v + 1, std::vector<std::uint64_t>(blocks, 0));
    for (auto [i, j] : g.edges) {
        adj[i][j >> 6] |= 1ULL << (j & 63);
        adj[j][i >> 6] |= 1ULL << (i & 63);
    }
    long long tri = 0;
    for (auto [i, j] : g.edges) {
        // count common neighbours strictly above j, so each triangle shows up once
        int bj = j >> 6;
        std::uint64_t above = (~0ULL << (j & 63)) & ~(1ULL << (j & 63));
        for (int b = bj; b < blocks; ++b) {
            std::uint64_t common = adj[i][b] & adj[j][b];
            if (b == bj) common &= above;
            tri += std::popcount(common);
        }
    }
    return tri;
}

RTDecomposition rt_decompose(long long value) {
    if (value < 0) throw InvalidParams("rt_decompose needs a non-negative value");
    long long r = 1;
    while ((r + 1) * r / 2 <= value) ++r;
    return {value, r, value - r * (r - 1) / 2};
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

long long max_triangles_formula(long long edge_count) {
    RTDecomposition d = rt_decompose(edge_count);
    return binomial(d.r, 3) + binomial(d.t, 2);
}

SimpleGraph extremal_graph(long long edge_count) {
    RTDecomposition d = rt_decompose(edge_count);
    int r = int(d.r), t = int(d.t);
    SimpleGraph g{t == 0 ? r : r + 1, {}};
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) g.edges.insert({i, j});
    for (int j = 1; j <= t; ++j) g.edges.insert({j, r + 1});
    return g;
}

namespace {

constexpr long long kWorkCap = 200'000'000; // edge subsets

long long binomial_capped(long long n, long long k, long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 out = 1;
    for (long long i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > static_cast<unsigned __int128>(cap)) return cap + 1;
    }
    return static_cast<long long>(out);
}

struct BruteState {
    std::vector<std::pair<int, int>> all_edges;
    std::vector<std::uint32_t> adj; // per vertex, 0-based bitmask
    long long best = 0;

    void recurse(std::size_t from, int need, long long tris) {
        if (need == 0) {
            best = std::max(best, tris);
            return;
        }
        if (all_edges.size() - from < std::size_t(need)) return;
        for (std::size_t k = from; k + need <= all_edges.size(); ++k) {
            auto [u, v] = all_edges[k];
            long long gained = std::popcount(adj[u] & adj[v]);
            adj[u] |= 1u << v;
            adj[v] |= 1u << u;
            recurse(k + 1, need - 1, tris + gained);
            adj[u] &= ~(1u << v);
            adj[v] &= ~(1u << u);
        }
    }
};

} // namespace

long long brute_force_max_triangles(int edge_count, int max_vertices) {
    if (edge_count < 0 || max_vertices < 0) throw InvalidParams("negative enumeration bounds");
    long long slots = binomial(max_vertices, 2);
    if (edge_count > slots)
        throw InvalidParams("edge count exceeds C(max_vertices, 2)");
    if (max_vertices > 32 || binomial_capped(slots, edge_count, kWorkCap) > kWorkCap)
        throw EnumerationTooLarge("edge-subset enumeration exceeds the work cap");
    BruteState st;
    for (int i = 0; i < max_vertices; ++i)
        for (int j = i + 1; j < max_vertices; ++j) st.all_edges.push_back({i, j});
    st.adj.assign(max_vertices, 0);
    st.recurse(0, edge_count, 0);
    return st.best;
}

} // namespace schur
