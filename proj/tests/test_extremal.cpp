#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bimax/canonical.hpp"
#include "bimax/extremal.hpp"
#include "bimax/records.hpp"
#include "support.hpp"

using namespace bimax;

TEST_CASE("sign function") {
    CHECK(sgn(5) == 1);
    CHECK(sgn(-3) == -1);
    CHECK(sgn(0) == 0);
}

TEST_CASE("quotient and remainder of the construction parameters") {
    QuasiCompleteSpec s = quasi_complete_spec(6, 7, 4);
    CHECK(s.q == 1);
    CHECK(s.r == 3);
    CHECK(s.feasible);

    s = quasi_complete_spec(9, 0, 4);
    CHECK(s.q == 0);
    CHECK(s.r == 0);
    CHECK(s.feasible);

    // k = 5 needs more Y vertices than remain: 5 > 6 - 1 - 1.
    s = quasi_complete_spec(6, 7, 5);
    CHECK(s.q == 1);
    CHECK(s.r == 2);
    CHECK_FALSE(s.feasible);
}

TEST_CASE("feasibility flag is equivalent to m <= k*(n-k)") {
    for (int n = 2; n <= 14; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (long long m = 0; m <= static_cast<long long>(n) * n; ++m) {
                bool fits = m <= static_cast<long long>(k) * (n - k);
                REQUIRE(quasi_complete_spec(n, m, k).feasible == fits);
            }
}

TEST_CASE("construction shape") {
    BipartiteGraph g = build_quasi_complete(quasi_complete_spec(6, 7, 4));
    CHECK(g.x_size() == 4);
    CHECK(g.y_size() == 2);
    CHECK(g.m() == 7);
    for (int x = 0; x < 4; ++x) CHECK(g.edge(x, 0));  // full row
    CHECK(g.edge(0, 1));
    CHECK(g.edge(1, 1));
    CHECK(g.edge(2, 1));
    CHECK_FALSE(g.edge(3, 1));  // partial row stops at r = 3

    BipartiteGraph complete = build_quasi_complete(quasi_complete_spec(6, 8, 4));
    CHECK(complete == BipartiteGraph::complete(4, 2));

    CHECK(build_quasi_complete(quasi_complete_spec(7, 0, 3)).m() == 0);
    CHECK_THROWS_AS(build_quasi_complete(quasi_complete_spec(6, 7, 5)), std::domain_error);
}

TEST_CASE("closed form equals the built graph's sigma_2 for every feasible spec with n <= 12") {
    for (int n = 2; n <= 12; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            for (long long m = 0; m <= static_cast<long long>(k) * (n - k); ++m) {
                QuasiCompleteSpec spec = quasi_complete_spec(n, m, k);
                REQUIRE(spec.feasible);
                REQUIRE(quasi_complete_sigma2(m, k) ==
                        sigma_t(build_quasi_complete(spec), 2));
            }
        }
    }
}

TEST_CASE("closed form spot values") {
    CHECK(quasi_complete_sigma2(7, 4) == 38);
    CHECK(quasi_complete_sigma2(3, 4) == 12);  // q = 0 reduces to m^2 + m
    CHECK(quasi_complete_sigma2(8, 5) == 48);
}

TEST_CASE("arithmetic degree sequence matches the built graph") {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (long long m = 0; m <= static_cast<long long>(k) * (n - k); ++m) {
                QuasiCompleteSpec spec = quasi_complete_spec(n, m, k);
                REQUIRE(quasi_complete_degrees(spec) ==
                        degree_sequence(build_quasi_complete(spec)));
            }
}

TEST_CASE("construction and its complement obey the reflection offset") {
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k <= n - 1; ++k)
            for (long long m = 0; m <= static_cast<long long>(k) * (n - k); ++m) {
                BipartiteGraph g = build_quasi_complete(quasi_complete_spec(n, m, k));
                long long diff = sigma_t(g, 2) - sigma_t(bipartite_complement(g), 2);
                REQUIRE(diff == complement_sigma2_offset(n, m, k));
            }
}

TEST_CASE("optimal side size for the named instances") {
    CHECK(optimal_side_size(GraphParams(6, 7)) == 4);   // k=5 infeasible
    CHECK(optimal_side_size(GraphParams(7, 8)) == 5);   // k=6 infeasible
    CHECK(optimal_side_size(GraphParams(8, 9)) == 6);   // k=7 infeasible
    CHECK(optimal_side_size(GraphParams(9, 16)) == 6);
    CHECK_THROWS_AS(optimal_side_size(GraphParams(8, 7)), std::domain_error);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(GraphParams(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(GraphParams(6, 10), std::invalid_argument);  // cap is 9
    CHECK_THROWS_AS(GraphParams(6, -1), std::invalid_argument);
    CHECK_NOTHROW(GraphParams(6, 9));
    CHECK(max_edges(6) == 9);
    CHECK(max_edges(7) == 12);
}

TEST_CASE("classification of (5,3): star plus isolated vertex") {
    ExtremalClassification c = classify(GraphParams(5, 3));
    CHECK(c.regime == Regime::star);
    CHECK_FALSE(c.optimal_k.has_value());
    CHECK_FALSE(c.boundary.has_value());
    CHECK(c.max_sigma2 == 12);
    REQUIRE(c.constructions.size() == 1);
    CHECK(c.constructions[0].k == 4);
    CHECK(c.iso_classes == 1);
    // the single construction is the star K_{1,3} with one isolated vertex
    DegreeSequence ds = quasi_complete_degrees(c.constructions[0]);
    CHECK(ds.x == std::vector<int>{1, 1, 1, 0});
    CHECK(ds.y == std::vector<int>{3});
}

TEST_CASE("classification of (6,7): above the boundary") {
    ExtremalClassification c = classify(GraphParams(6, 7));
    CHECK(c.regime == Regime::case_a);
    CHECK(c.optimal_k == 4);
    CHECK(c.boundary->lhs == 7);
    CHECK(c.boundary->rhs == 6);
    CHECK(c.boundary->relation == '>');
    CHECK(c.max_sigma2 == 38);
    REQUIRE(c.constructions.size() == 2);
    CHECK(c.constructions[0].k == 4);
    CHECK(c.constructions[1].k == 2);
    CHECK(c.iso_classes == 1);  // the two listed graphs are side swaps
}

TEST_CASE("classification of (7,8): on the boundary") {
    ExtremalClassification c = classify(GraphParams(7, 8));
    CHECK(c.regime == Regime::case_b);
    CHECK(c.optimal_k == 5);
    CHECK(c.boundary->relation == '=');
    CHECK(c.max_sigma2 == 48);
    REQUIRE(c.constructions.size() == 3);
    CHECK(c.constructions[0].k == 5);
    CHECK(c.constructions[1].k == 2);
    CHECK(c.constructions[2].k == 4);
    CHECK(c.iso_classes == 2);  // sides 2 and 4 both give K_{2,4} + isolated
    CHECK(c.iso_class_of[1] == c.iso_class_of[2]);
    CHECK(c.iso_class_of[0] != c.iso_class_of[1]);
}

TEST_CASE("classification of (8,9): below the boundary") {
    ExtremalClassification c = classify(GraphParams(8, 9));
    CHECK(c.regime == Regime::case_c);
    CHECK(c.optimal_k == 6);
    CHECK(c.boundary->relation == '<');
    CHECK(c.max_sigma2 == 60);
    REQUIRE(c.constructions.size() == 1);
    CHECK(c.iso_classes == 1);
}

TEST_CASE("classification of (9,16): two non-isomorphic maximizers") {
    ExtremalClassification c = classify(GraphParams(9, 16));
    CHECK(c.regime == Regime::case_a);
    CHECK(c.optimal_k == 6);
    CHECK(c.max_sigma2 == 132);
    REQUIRE(c.constructions.size() == 2);
    CHECK(c.constructions[1].k == 3);
    CHECK(c.iso_classes == 2);
}

TEST_CASE("every listed construction achieves the maximum") {
    for (int n = 2; n <= 12; ++n) {
        for (long long m = 0; m <= max_edges(n); ++m) {
            ExtremalClassification c = classify(GraphParams(n, m));
            for (const QuasiCompleteSpec& spec : c.constructions) {
                REQUIRE(spec.feasible);
                REQUIRE(sigma_t(build_quasi_complete(spec), 2) == c.max_sigma2);
            }
        }
    }
}

TEST_CASE("regime partition: star iff m <= n-1, no gaps up to the cap") {
    for (int n = 2; n <= 30; ++n) {
        for (long long m = 0; m <= max_edges(n); ++m) {
            ExtremalClassification c = classify(GraphParams(n, m));
            if (m <= n - 1)
                REQUIRE(c.regime == Regime::star);
            else
                REQUIRE(c.regime != Regime::star);
            if (c.regime == Regime::case_b)
                REQUIRE(c.boundary->lhs == c.boundary->rhs);
        }
    }
}

TEST_CASE("chain-shape isomorphism agrees with canonical forms for all n <= 12") {
    for (int n = 2; n <= 12; ++n) {
        for (long long m = 0; m <= max_edges(n); ++m) {
            ExtremalClassification c = classify(GraphParams(n, m));
            std::vector<CanonicalForm> forms;
            for (const QuasiCompleteSpec& spec : c.constructions)
                forms.push_back(canonical_form(build_quasi_complete(spec)));
            for (std::size_t i = 0; i < c.constructions.size(); ++i)
                for (std::size_t j = 0; j < c.constructions.size(); ++j) {
                    bool by_shape =
                        quasi_complete_isomorphic(c.constructions[i], c.constructions[j]);
                    REQUIRE(by_shape == (forms[i] == forms[j]));
                }
            std::set<CanonicalForm> unique_forms(forms.begin(), forms.end());
            REQUIRE(static_cast<int>(unique_forms.size()) == c.iso_classes);
        }
    }
}

TEST_CASE("maximum value spot checks") {
    CHECK(max_sigma2(GraphParams(2, 1)) == 2);
    CHECK(max_sigma2(GraphParams(6, 9)) == 54);  // K_{3,3} is the only graph
    CHECK(max_sigma2(GraphParams(6, 7)) == 38);
    CHECK(max_sigma2(GraphParams(5, 3)) == 12);
}

TEST_CASE("arithmetic stays exact at the large end of the supported range") {
    // K_{5000,5000}: 10^4 vertices of degree 5*10^3 each.
    CHECK(max_sigma2(GraphParams(10000, 25000000)) == 250000000000LL);
    CHECK(quasi_complete_sigma2(25000000, 5000) == 250000000000LL);
    ExtremalClassification c = classify(GraphParams(10000, 25000000));
    CHECK(c.optimal_k == 5000);
    CHECK(c.iso_classes == 1);

    // degree^4 near the top of the range still fits in 64 bits
    BipartiteGraph g = BipartiteGraph::complete(1000, 1000);
    CHECK(sigma_t(g, 4) == 2000LL * 1000 * 1000 * 1000 * 1000);
}

TEST_CASE("profile values for the named instances") {
    using Profile = std::vector<std::pair<int, long long>>;
    CHECK(sigma2_profile(GraphParams(7, 8)) == Profile{{4, 48}, {5, 48}});
    CHECK(sigma2_profile(GraphParams(8, 9)) == Profile{{4, 54}, {5, 58}, {6, 60}});
    CHECK(sigma2_profile(GraphParams(6, 7)) == Profile{{3, 36}, {4, 38}});
    CHECK_THROWS_AS(sigma2_profile(GraphParams(8, 7)), std::domain_error);
}

TEST_CASE("profile step formulas") {
    ProfileStep s = profile_step(8, 4);
    CHECK(s.floor_gap == 1);
    CHECK(s.predicted_delta == 0);
    CHECK(s.actual_delta == 0);

    s = profile_step(9, 4);
    CHECK(s.floor_gap == 1);
    CHECK(s.predicted_delta == 4);
    CHECK(s.actual_delta == 4);
    CHECK(quasi_complete_sigma2(9, 5) - quasi_complete_sigma2(9, 4) == 4);

    s = profile_step(7, 3);
    CHECK(s.floor_gap == 1);
    CHECK(s.predicted_delta == 2);
    CHECK(s.actual_delta == 38 - 36);

    // outside the bounded-gap hypothesis there is no difference formula
    s = profile_step(9, 1);
    CHECK(s.floor_gap == 5);
    CHECK_FALSE(s.predicted_delta.has_value());
}

TEST_CASE("profiles are nondecreasing with matching step formulas for n <= 60") {
    for (int n = 4; n <= 60; ++n) {
        for (long long m = n; m <= max_edges(n); ++m) {
            GraphParams params(n, m);
            auto profile = sigma2_profile(params);
            REQUIRE(!profile.empty());
            REQUIRE(profile.back().first == optimal_side_size(params));
            for (std::size_t i = 1; i < profile.size(); ++i) {
                REQUIRE(profile[i].second >= profile[i - 1].second);
                ProfileStep step = profile_step(m, profile[i - 1].first);
                REQUIRE(step.floor_gap >= 0);
                REQUIRE(step.floor_gap <= 1);
                REQUIRE(step.predicted_delta.has_value());
                REQUIRE(*step.predicted_delta == step.actual_delta);
                REQUIRE(step.actual_delta == profile[i].second - profile[i - 1].second);
                if (step.floor_gap == 0) REQUIRE(step.actual_delta > 0);
            }
        }
    }
}

TEST_CASE("quotient gap stays within 1 wherever floor(m/k) <= k") {
    for (long long m = 1; m <= 3600; ++m)
        for (long long k = 1; k <= 60; ++k) {
            if (m / k > k) continue;
            REQUIRE(m / k - m / (k + 1) <= 1);
        }
}

TEST_CASE("structure checks for the named instances") {
    OptimalityChecks checks = check_optimal_structure(GraphParams(6, 7));
    CHECK(checks.larger_side_infeasible);  // 7 > (4+1)*(6-4-1) = 5
    CHECK(checks.quotient_gap_bounded);

    checks = check_optimal_structure(GraphParams(8, 9));
    CHECK(checks.no_isolated_vertices);  // min degree of the (8,9,6) graph is 1
}

TEST_CASE("structure checks at the optimum for n <= 60") {
    for (int n = 4; n <= 60; ++n) {
        for (long long m = n; m <= max_edges(n); ++m) {
            OptimalityChecks checks = check_optimal_structure(GraphParams(n, m));
            REQUIRE(checks.larger_side_infeasible);
            REQUIRE(checks.no_isolated_vertices);
            REQUIRE(checks.quotient_gap_bounded);
        }
    }
}

TEST_CASE("structural and arithmetic isolated-vertex checks coincide") {
    for (int n = 4; n <= 12; ++n) {
        for (long long m = n; m <= max_edges(n); ++m) {
            int k0 = optimal_side_size(GraphParams(n, m));
            DegreeSequence ds =
                degree_sequence(build_quasi_complete(quasi_complete_spec(n, m, k0)));
            bool structural = true;
            for (int d : ds.x) structural = structural && d > 0;
            for (int d : ds.y) structural = structural && d > 0;
            bool arithmetic = m > static_cast<long long>(k0) * (n - k0 - 1);
            REQUIRE(structural == arithmetic);
        }
    }
}

TEST_CASE("classification records are stable and carry the contract fields") {
    ExtremalClassification c = classify(GraphParams(7, 8));
    std::string json = classification_to_json(c);
    CHECK(json == classification_to_json(classify(GraphParams(7, 8))));
    for (const char* needle :
         {"\"regime\": \"case_b\"", "\"k0\": 5", "\"lhs\": 8", "\"rhs\": 8",
          "\"relation\": \"=\"", "\"max_sigma2\": 48", "\"iso_classes\": 2",
          "\"degree_sequence\""})
        CHECK(json.find(needle) != std::string::npos);

    std::string star = classification_to_json(classify(GraphParams(5, 3)));
    CHECK(star.find("\"k0\"") == std::string::npos);
    CHECK(star.find("\"boundary\"") == std::string::npos);
    CHECK(star.find("\"regime\": \"star\"") != std::string::npos);
}
