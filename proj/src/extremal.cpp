#include "bimax/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bimax {

int sgn(long long x) { return (x > 0) - (x < 0); }

long long max_edges(int n) {
    return static_cast<long long>(n / 2) * ((n + 1) / 2);
}

GraphParams::GraphParams(int n_, long long m_) : n(n_), m(m_) {
    if (n < 2) throw std::invalid_argument("n must be at least 2, got n=" + std::to_string(n));
    if (m < 0 || m > max_edges(n))
        throw std::invalid_argument("m exceeds floor(n/2)*ceil(n/2)=" +
                                    std::to_string(max_edges(n)) + " for n=" + std::to_string(n));
}

QuasiCompleteSpec quasi_complete_spec(int n, long long m, int k) {
    if (n < 2) throw std::invalid_argument("n must be at least 2, got n=" + std::to_string(n));
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("side size k must satisfy 1 <= k <= n-1, got k=" +
                                    std::to_string(k) + " for n=" + std::to_string(n));
    if (m < 0) throw std::invalid_argument("m must be nonnegative, got m=" + std::to_string(m));
    long long q = m / k;
    long long r = m - q * k;
    bool feasible = k <= n - q - sgn(r);
    return QuasiCompleteSpec{n, m, k, q, r, feasible};
}

BipartiteGraph build_quasi_complete(const QuasiCompleteSpec& spec) {
    if (!spec.feasible)
        throw std::domain_error("quasi-complete graph with n=" + std::to_string(spec.n) +
                                " m=" + std::to_string(spec.m) + " k=" + std::to_string(spec.k) +
                                " is infeasible (k > n - q - sgn(r))");
    BipartiteGraph g(spec.k, spec.n - spec.k);
    for (long long row = 0; row < spec.q; ++row)
        for (int x = 0; x < spec.k; ++x) g.set_edge(x, static_cast<int>(row), true);
    for (long long x = 0; x < spec.r; ++x)
        g.set_edge(static_cast<int>(x), static_cast<int>(spec.q), true);
    return g;
}

DegreeSequence quasi_complete_degrees(const QuasiCompleteSpec& spec) {
    if (!spec.feasible)
        throw std::domain_error("quasi-complete graph with n=" + std::to_string(spec.n) +
                                " m=" + std::to_string(spec.m) + " k=" + std::to_string(spec.k) +
                                " is infeasible (k > n - q - sgn(r))");
    DegreeSequence ds;
    ds.x.assign(spec.k, static_cast<int>(spec.q));
    for (long long x = 0; x < spec.r; ++x) ++ds.x[static_cast<std::size_t>(x)];
    ds.y.assign(spec.n - spec.k, 0);
    for (long long row = 0; row < spec.q; ++row) ds.y[static_cast<std::size_t>(row)] = spec.k;
    if (spec.r > 0) ds.y[static_cast<std::size_t>(spec.q)] = static_cast<int>(spec.r);
    return ds;
}

long long quasi_complete_sigma2(long long m, long long k) {
    if (k < 1) throw std::invalid_argument("side size k must be positive");
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    long long q = m / k;
    return q * (k - 1) * (k + q * k - 2 * m) + m * m + m;
}

int optimal_side_size(const GraphParams& params) {
    if (params.m < params.n)
        throw std::domain_error("optimal side search requires m >= n (got n=" +
                                std::to_string(params.n) + ", m=" + std::to_string(params.m) + ")");
    for (int k = params.n - 1; k >= (params.n + 1) / 2; --k) {
        if (quasi_complete_spec(params.n, params.m, k).feasible) return k;
    }
    // Unreachable for valid instances: k = ceil(n/2) is always feasible when
    // m <= floor(n/2)*ceil(n/2).
    throw std::logic_error("no feasible side size found for n=" + std::to_string(params.n) +
                           " m=" + std::to_string(params.m));
}

namespace {

// Nonzero degrees of each side plus the isolated count, the complete
// isomorphism invariant for this construction family.
struct ChainShape {
    std::vector<long long> x;  // nonzero X degrees, descending
    std::vector<long long> y;  // nonzero Y degrees, descending
    long long isolated;

    bool operator==(const ChainShape&) const = default;
};

ChainShape chain_shape(const QuasiCompleteSpec& s) {
    ChainShape shape;
    if (s.q > 0) {
        shape.x.assign(static_cast<std::size_t>(s.r), s.q + 1);
        shape.x.resize(static_cast<std::size_t>(s.k), s.q);
    } else if (s.r > 0) {
        shape.x.assign(static_cast<std::size_t>(s.r), 1);
    }
    shape.y.assign(static_cast<std::size_t>(s.q), s.k);
    if (s.r > 0) shape.y.push_back(s.r);
    shape.isolated = s.n - static_cast<long long>(shape.x.size()) -
                     static_cast<long long>(shape.y.size());
    return shape;
}

ChainShape swapped(const ChainShape& s) { return ChainShape{s.y, s.x, s.isolated}; }

}  // namespace

bool quasi_complete_isomorphic(const QuasiCompleteSpec& a, const QuasiCompleteSpec& b) {
    if (a.n != b.n || a.m != b.m) return false;
    ChainShape sa = chain_shape(a), sb = chain_shape(b);
    return sa == sb || sa == swapped(sb);
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::star: return "star";
        case Regime::case_a: return "case_a";
        case Regime::case_b: return "case_b";
        case Regime::case_c: return "case_c";
    }
    return "?";
}

ExtremalClassification classify(const GraphParams& params) {
    ExtremalClassification result;
    result.n = params.n;
    result.m = params.m;

    if (params.m <= params.n - 1) {
        // A star with m edges plus isolated vertices, realized on side n-1.
        result.regime = Regime::star;
        result.max_sigma2 = params.m * params.m + params.m;
        result.constructions = {quasi_complete_spec(params.n, params.m, params.n - 1)};
    } else {
        int k0 = optimal_side_size(params);
        result.optimal_k = k0;
        long long rhs = static_cast<long long>(params.n - k0) * (k0 - 1);
        char relation = params.m > rhs ? '>' : (params.m == rhs ? '=' : '<');
        result.boundary = BoundaryComparison{params.m, rhs, relation};
        result.max_sigma2 = quasi_complete_sigma2(params.m, k0);

        std::vector<int> sides;
        switch (relation) {
            case '>':
                result.regime = Regime::case_a;
                sides = {k0, params.n - k0};
                break;
            case '=':
                result.regime = Regime::case_b;
                sides = {k0, params.n - k0, k0 - 1};
                break;
            default:
                result.regime = Regime::case_c;
                sides = {k0};
                break;
        }
        for (int k : sides)
            result.constructions.push_back(quasi_complete_spec(params.n, params.m, k));
    }

    result.iso_class_of.assign(result.constructions.size(), -1);
    int classes = 0;
    for (std::size_t i = 0; i < result.constructions.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (quasi_complete_isomorphic(result.constructions[i], result.constructions[j])) {
                result.iso_class_of[i] = result.iso_class_of[j];
                break;
            }
        }
        if (result.iso_class_of[i] < 0) result.iso_class_of[i] = classes++;
    }
    result.iso_classes = classes;
    return result;
}

long long max_sigma2(const GraphParams& params) {
    if (params.m <= params.n - 1) return params.m * params.m + params.m;
    return quasi_complete_sigma2(params.m, optimal_side_size(params));
}

std::vector<std::pair<int, long long>> sigma2_profile(const GraphParams& params) {
    int k0 = optimal_side_size(params);
    std::vector<std::pair<int, long long>> profile;
    for (int k = (params.n + 1) / 2; k <= k0; ++k)
        profile.emplace_back(k, quasi_complete_sigma2(params.m, k));
    return profile;
}

ProfileStep profile_step(long long m, long long k) {
    if (k < 1) throw std::invalid_argument("side size k must be positive");
    long long q = m / k;
    ProfileStep step;
    step.floor_gap = q - m / (k + 1);
    step.actual_delta = quasi_complete_sigma2(m, k + 1) - quasi_complete_sigma2(m, k);
    if (step.floor_gap == 0)
        step.predicted_delta = 2 * q * (q * k + k - m);
    else if (step.floor_gap == 1)
        step.predicted_delta = 2 * (q - k) * (q * k - m);
    return step;
}

OptimalityChecks check_optimal_structure(const GraphParams& params) {
    int k0 = optimal_side_size(params);
    OptimalityChecks checks;

    checks.larger_side_infeasible =
        params.m > static_cast<long long>(k0 + 1) * (params.n - k0 - 1);

    QuasiCompleteSpec best = quasi_complete_spec(params.n, params.m, k0);
    if (params.n <= 12) {
        DegreeSequence ds = degree_sequence(build_quasi_complete(best));
        auto positive = [](int d) { return d > 0; };
        checks.no_isolated_vertices = std::all_of(ds.x.begin(), ds.x.end(), positive) &&
                                      std::all_of(ds.y.begin(), ds.y.end(), positive);
    } else {
        checks.no_isolated_vertices =
            params.m > static_cast<long long>(k0) * (params.n - k0 - 1);
    }

    checks.quotient_gap_bounded = true;
    for (long long k = 1; k <= params.n; ++k) {
        if (params.m / k > k) continue;  // outside the bound's hypothesis
        if (params.m / k - params.m / (k + 1) > 1) checks.quotient_gap_bounded = false;
    }
    return checks;
}

}  // namespace bimax
