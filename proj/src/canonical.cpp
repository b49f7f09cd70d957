#include "bimax/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bimax {
namespace {

// One connected component, as index lists into the two sides.
struct Component {
    std::vector<int> xs;
    std::vector<int> ys;
};

std::vector<Component> connected_components(const BipartiteGraph& g) {
    int k = g.x_size(), ny = g.y_size();
    std::vector<bool> seen_x(k, false), seen_y(ny, false);
    std::vector<Component> comps;
    auto bfs = [&](bool start_in_x, int start) {
        Component c;
        std::vector<std::pair<bool, int>> stack{{start_in_x, start}};
        (start_in_x ? seen_x[start] : seen_y[start]) = true;
        while (!stack.empty()) {
            auto [in_x, v] = stack.back();
            stack.pop_back();
            if (in_x) {
                c.xs.push_back(v);
                for (int y = 0; y < ny; ++y) {
                    if (g.edge(v, y) && !seen_y[y]) {
                        seen_y[y] = true;
                        stack.emplace_back(false, y);
                    }
                }
            } else {
                c.ys.push_back(v);
                for (int x = 0; x < k; ++x) {
                    if (g.edge(x, v) && !seen_x[x]) {
                        seen_x[x] = true;
                        stack.emplace_back(true, x);
                    }
                }
            }
        }
        return c;
    };
    for (int x = 0; x < k; ++x)
        if (!seen_x[x]) comps.push_back(bfs(true, x));
    for (int y = 0; y < ny; ++y)
        if (!seen_y[y]) comps.push_back(bfs(false, y));
    return comps;
}

// Minimum over all column permutations of the sorted row-mask list. This is
// the exact minimum over all (row, column) relabelings: for a fixed column
// order, sorting the rows realizes the row-side minimum.
std::vector<std::uint32_t> min_matrix_encoding(const std::vector<std::uint32_t>& rows, int cols) {
    std::vector<int> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cur(rows.size());
    do {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::uint32_t r = 0;
            for (int c = 0; c < cols; ++c) {
                if (rows[i] >> perm[c] & 1u) r |= 1u << c;
            }
            cur[i] = r;
        }
        std::sort(cur.begin(), cur.end());
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (rows.empty()) best = {};
    return best;
}

// Per-component form: sides oriented so columns are the smaller side; both
// orientations tried on ties.
std::string component_form(const BipartiteGraph& g, const Component& c) {
    int a = static_cast<int>(c.xs.size());
    int b = static_cast<int>(c.ys.size());

    auto rows_with = [&](bool rows_are_y) {
        const auto& row_ids = rows_are_y ? c.ys : c.xs;
        const auto& col_ids = rows_are_y ? c.xs : c.ys;
        std::vector<std::uint32_t> rows(row_ids.size(), 0);
        for (std::size_t i = 0; i < row_ids.size(); ++i) {
            for (std::size_t j = 0; j < col_ids.size(); ++j) {
                bool e = rows_are_y ? g.edge(col_ids[j], row_ids[i]) : g.edge(row_ids[i], col_ids[j]);
                if (e) rows[i] |= 1u << j;
            }
        }
        return rows;
    };

    std::vector<std::uint32_t> enc;
    int rows_n, cols_n;
    if (a < b) {
        // columns = X side
        enc = min_matrix_encoding(rows_with(true), a);
        rows_n = b, cols_n = a;
    } else if (b < a) {
        enc = min_matrix_encoding(rows_with(false), b);
        rows_n = a, cols_n = b;
    } else {
        auto e1 = min_matrix_encoding(rows_with(true), a);
        auto e2 = min_matrix_encoding(rows_with(false), b);
        enc = std::min(e1, e2);
        rows_n = a, cols_n = b;
    }

    std::string s = "c" + std::to_string(cols_n) + "x" + std::to_string(rows_n) + ":";
    for (std::size_t i = 0; i < enc.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(enc[i]);
    }
    return s;
}

}  // namespace

CanonicalForm canonical_form(const BipartiteGraph& g) {
    if (g.n() > kMaxCanonicalVertices) {
        throw std::domain_error("exact canonicalization is limited to n <= " +
                                std::to_string(kMaxCanonicalVertices) + ", got n=" +
                                std::to_string(g.n()));
    }
    std::vector<std::string> parts;
    for (const Component& c : connected_components(g)) parts.push_back(component_form(g, c));
    std::sort(parts.begin(), parts.end());

    std::string key = "n" + std::to_string(g.n());
    for (const std::string& p : parts) {
        key += ";";
        key += p;
    }
    return CanonicalForm{std::move(key)};
}

}  // namespace bimax
