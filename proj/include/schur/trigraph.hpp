#ifndef SCHUR_TRIGRAPH_HPP
#define SCHUR_TRIGRAPH_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "schur/errors.hpp"

namespace schur {

struct SimpleGraph {
    int vertices = 0;
    std::set<std::pair<int, int>> edges; // each stored (i, j) with i < j, 1-based

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    bool operator==(const SimpleGraph&) const = default;
};

SimpleGraph graph_of_pairset(const std::vector<std::pair<int, int>>& pairs, int n);
SimpleGraph complement(const SimpleGraph& g);
long long count_triangles(const SimpleGraph& g);

/// value = C(r,2) + t with 0 <= t < r; r greedy-maximal and unique.
/// value = 0 gives (1, 0), the only admissible solution.
struct RTDecomposition {
    long long value = 0;
    long long r = 1;
    long long t = 0;
};

RTDecomposition rt_decompose(long long value);

long long binomial(long long n, long long k);

/// Largest number of triangles any graph with the given edge count can
/// carry: C(r,3) + C(t,2) for the decomposition of the edge count.
long long max_triangles_formula(long long edge_count);

/// A graph attaining max_triangles_formula: K_r, plus (when t > 0) one extra
/// vertex joined to t vertices of the clique.
SimpleGraph extremal_graph(long long edge_count);

/// Exhaustive oracle: maximum triangle count over all labeled graphs with
/// exactly edge_count edges on at most max_vertices vertices. Throws
/// EnumerationTooLarge when the subset count exceeds the built-in work cap.
long long brute_force_max_triangles(int edge_count, int max_vertices);

} // namespace schur

#endif
