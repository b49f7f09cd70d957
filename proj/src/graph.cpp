#include "bimax/graph.hpp"

#include <stdexcept>
#include <string>

namespace bimax {

BipartiteGraph::BipartiteGraph(int x_size, int y_size)
    : x_size_(x_size),
      y_size_(y_size),
      edge_count_(0),
      bits_(static_cast<std::size_t>(x_size) * y_size, false) {
    if (x_size < 1 || y_size < 1) {
        throw std::invalid_argument("bipartition sides must both be nonempty, got (" +
                                    std::to_string(x_size) + ", " + std::to_string(y_size) + ")");
    }
}

BipartiteGraph BipartiteGraph::complete(int x_size, int y_size) {
    BipartiteGraph g(x_size, y_size);
    for (int y = 0; y < y_size; ++y)
        for (int x = 0; x < x_size; ++x) g.set_edge(x, y, true);
    return g;
}

std::size_t BipartiteGraph::idx(int x, int y) const {
    if (x < 0 || x >= x_size_ || y < 0 || y >= y_size_) {
        throw std::out_of_range("vertex index outside bipartition: x=" + std::to_string(x) +
                                " y=" + std::to_string(y));
    }
    return static_cast<std::size_t>(y) * x_size_ + x;
}

void BipartiteGraph::set_edge(int x, int y, bool present) {
    std::size_t i = idx(x, y);
    if (bits_[i] != present) {
        edge_count_ += present ? 1 : -1;
        bits_[i] = present;
    }
}

int BipartiteGraph::x_degree(int x) const {
    int d = 0;
    for (int y = 0; y < y_size_; ++y) d += bits_[idx(x, y)];
    return d;
}

int BipartiteGraph::y_degree(int y) const {
    int d = 0;
    for (int x = 0; x < x_size_; ++x) d += bits_[idx(x, y)];
    return d;
}

DegreeSequence degree_sequence(const BipartiteGraph& g) {
    DegreeSequence ds;
    ds.x.assign(g.x_size(), 0);
    ds.y.assign(g.y_size(), 0);
    for (int y = 0; y < g.y_size(); ++y) {
        for (int x = 0; x < g.x_size(); ++x) {
            if (g.edge(x, y)) {
                ++ds.x[x];
                ++ds.y[y];
            }
        }
    }
    return ds;
}

long long sigma_t(const BipartiteGraph& g, int t) {
    if (t < 2) {
        throw std::domain_error("degree power sum requires exponent t >= 2, got t=" +
                                std::to_string(t));
    }
    DegreeSequence ds = degree_sequence(g);
    long long total = 0;
    auto accumulate = [&](const std::vector<int>& degrees) {
        for (int d : degrees) {
            long long p = 1;
            for (int i = 0; i < t; ++i) p *= d;
            total += p;
        }
    };
    accumulate(ds.x);
    accumulate(ds.y);
    return total;
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
    BipartiteGraph c(g.x_size(), g.y_size());
    for (int y = 0; y < g.y_size(); ++y)
        for (int x = 0; x < g.x_size(); ++x) c.set_edge(x, y, !g.edge(x, y));
    return c;
}

long long complement_sigma2_offset(long long n, long long m, long long k) {
    return n * (2 * m + k * k - n * k);
}

}  // namespace bimax
