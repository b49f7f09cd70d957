#ifndef BIMAX_GRAPH_HPP
#define BIMAX_GRAPH_HPP

#include <cstdint>
#include <vector>

namespace bimax {

// A simple bipartite graph on a fixed bipartition (X, Y).
//
// Conventions used everywhere in this library:
//   - |X| = x_size (called k), |Y| = y_size, n = x_size + y_size.
//   - The biadjacency relation is stored row-major with rows indexed by Y
//     and columns indexed by X.
//   - Abstract vertex labels: X vertices are 0..k-1, Y vertices are k..n-1.
//
// Both sides are nonempty (1 <= x_size <= n-1). Values are immutable in
// practice once built; all operations on them are pure.
class BipartiteGraph {
public:
    BipartiteGraph(int x_size, int y_size);

    static BipartiteGraph complete(int x_size, int y_size);

    int x_size() const { return x_size_; }
    int y_size() const { return y_size_; }
    int n() const { return x_size_ + y_size_; }
    long long m() const { return edge_count_; }

    bool edge(int x, int y) const { return bits_[idx(x, y)]; }
    void set_edge(int x, int y, bool present);

    int x_degree(int x) const;
    int y_degree(int y) const;

    bool operator==(const BipartiteGraph& other) const = default;

private:
    std::size_t idx(int x, int y) const;

    int x_size_;
    int y_size_;
    long long edge_count_;
    std::vector<bool> bits_;  // row y, column x -> bits_[y * x_size_ + x]
};

// Per-side degree lists in vertex-label order. sum(x) == sum(y) == m.
struct DegreeSequence {
    std::vector<int> x;
    std::vector<int> y;

    bool operator==(const DegreeSequence&) const = default;
};

DegreeSequence degree_sequence(const BipartiteGraph& g);

// Sum over all n vertices of degree^t. Rejects t < 2. Exact in 64-bit
// integers for n <= 10^4 and t <= 4.
long long sigma_t(const BipartiteGraph& g, int t);

// Complement across the bipartition only: x~y in the result iff not x~y in
// g. Same bipartition; edge count becomes x_size*y_size - m. Involution.
BipartiteGraph bipartite_complement(const BipartiteGraph& g);

// The reflection constant relating a graph to its bipartite complement:
// sigma_2(g) - sigma_2(complement(g)) == n*(2m + k^2 - n*k) for every
// bipartite graph with side |X| = k and m edges.
long long complement_sigma2_offset(long long n, long long m, long long k);

}  // namespace bimax

#endif
