#ifndef BIMAX_EXTREMAL_HPP
#define BIMAX_EXTREMAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bimax/graph.hpp"

namespace bimax {

// Sign of an integer: 1, -1, or 0.
int sgn(long long x);

// Largest edge count a bipartite graph on n vertices can have.
long long max_edges(int n);

// A problem instance: all bipartite graphs with n vertices and m edges.
// Requires n >= 2 and 0 <= m <= floor(n/2)*ceil(n/2).
struct GraphParams {
    GraphParams(int n, long long m);

    int n;
    long long m;
};

// Parameters of the quasi-complete bipartite graph on sides (k, n-k) with m
// edges: q = floor(m/k) vertices of Y adjacent to all of X, one more vertex
// of Y adjacent to the first r = m - q*k vertices of X when r > 0, and the
// remaining Y vertices isolated. The construction fits iff
// k <= n - q - sgn(r), which is equivalent to m <= k*(n-k).
struct QuasiCompleteSpec {
    int n;
    long long m;
    int k;
    long long q;
    long long r;
    bool feasible;

    bool operator==(const QuasiCompleteSpec&) const = default;
};

// Computes (q, r) and the feasibility flag. Requires n >= 2, 1 <= k <= n-1,
// m >= 0; infeasible combinations are flagged, not rejected.
QuasiCompleteSpec quasi_complete_spec(int n, long long m, int k);

// Materializes the quasi-complete graph. Throws std::domain_error when the
// spec is infeasible.
BipartiteGraph build_quasi_complete(const QuasiCompleteSpec& spec);

// Degree sequence of the quasi-complete graph, computed arithmetically
// (matches degree_sequence(build_quasi_complete(spec)) without building
// the graph, so it works for large n).
DegreeSequence quasi_complete_degrees(const QuasiCompleteSpec& spec);

// Closed form for sigma_2 of the quasi-complete graph with side k and m
// edges (independent of n):
//   floor(m/k)*(k-1)*(k + floor(m/k)*k - 2m) + m^2 + m.
long long quasi_complete_sigma2(long long m, long long k);

// The largest side size k in [ceil(n/2), n-1] whose quasi-complete spec is
// feasible; this side realizes the global maximum of sigma_2 when m >= n.
// Requires n <= m <= max_edges(n) (throws std::domain_error otherwise).
int optimal_side_size(const GraphParams& params);

// Exact isomorphism test between two quasi-complete graphs on the same n.
// Both are chain graphs plus isolated vertices, and a chain graph is
// determined up to isomorphism by its nonzero degree multisets up to side
// swap; valid at any n, no materialization.
bool quasi_complete_isomorphic(const QuasiCompleteSpec& a, const QuasiCompleteSpec& b);

enum class Regime { star, case_a, case_b, case_c };

const char* regime_name(Regime r);

// m compared against (n - k0)*(k0 - 1), the split deciding which
// constructions attain the maximum.
struct BoundaryComparison {
    long long lhs;      // m
    long long rhs;      // (n - k0)*(k0 - 1)
    char relation;      // '<', '=', or '>'
};

// The complete answer for an instance: the regime, the maximum of sigma_2,
// and every extremal construction. `constructions` is the verbatim case
// list (duplicates and isomorphic coincidences possible); `iso_class_of`
// maps each entry to a deduplicated class id and `iso_classes` counts the
// classes.
struct ExtremalClassification {
    int n;
    long long m;
    Regime regime;
    std::optional<int> optimal_k;                  // absent in the star regime
    std::optional<BoundaryComparison> boundary;    // absent in the star regime
    long long max_sigma2;
    std::vector<QuasiCompleteSpec> constructions;
    std::vector<int> iso_class_of;
    int iso_classes;
};

// Full classification:
//   m <= n-1: the star with m edges plus isolated vertices, max = m^2 + m.
//   m >= n:   k0 = optimal_side_size; the construction list is {k0, n-k0},
//             {k0, n-k0, k0-1}, or {k0} according to m >, =, < the boundary
//             (n-k0)*(k0-1); max = quasi_complete_sigma2(m, k0).
ExtremalClassification classify(const GraphParams& params);

// Just the maximum value.
long long max_sigma2(const GraphParams& params);

// (k, sigma_2 of the side-k quasi-complete graph) for k from ceil(n/2) up
// to the optimal side; nondecreasing. Requires m >= n.
std::vector<std::pair<int, long long>> sigma2_profile(const GraphParams& params);

// One step of the profile: the drop of floor(m/k) between consecutive side
// sizes and the matching difference formula.
//   gap 0: delta = 2*q*(q*k + k - m)        with q = floor(m/k)
//   gap 1: delta = 2*(q - k)*(q*k - m)
// predicted_delta is absent when the gap exceeds 1 (which cannot happen
// while floor(m/k) <= k).
struct ProfileStep {
    long long floor_gap;
    std::optional<long long> predicted_delta;
    long long actual_delta;
};

ProfileStep profile_step(long long m, long long k);

// Structural facts about the optimal construction when m >= n:
//   larger_side_infeasible: no quasi-complete graph fits on a side larger
//     than the optimal one, i.e. m > (k0+1)*(n-k0-1).
//   no_isolated_vertices: the optimal construction has minimum degree >= 1
//     (checked on the built graph for small n, arithmetically beyond).
//   quotient_gap_bounded: floor(m/k) - floor(m/(k+1)) <= 1 for every k in
//     [1, n] with floor(m/k) <= k.
struct OptimalityChecks {
    bool larger_side_infeasible;
    bool no_isolated_vertices;
    bool quotient_gap_bounded;
};

OptimalityChecks check_optimal_structure(const GraphParams& params);

}  // namespace bimax

#endif
