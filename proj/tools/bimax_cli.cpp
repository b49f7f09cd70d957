// Command-line front end: classification, construction, maxima, profiles,
// and oracle verification for extremal bipartite graphs.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bimax/extremal.hpp"
#include "bimax/formats.hpp"
#include "bimax/oracle.hpp"
#include "bimax/records.hpp"

namespace {

int default_jobs() {
    if (const char* env = std::getenv("BIMAX_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum sum of squared degrees over bipartite graphs with n vertices and m edges"};
    app.require_subcommand(1);

    int n = 0, k = 0, n_max = 7, n_from = 2, n_to = 8;
    long long m = 0;
    int jobs = default_jobs();
    bool as_json = false;
    std::string format = "edge-list";

    CLI::App* cmd_classify = app.add_subcommand("classify", "classify the extremal graphs for (n, m)");
    cmd_classify->add_option("--n", n, "vertex count")->required();
    cmd_classify->add_option("--m", m, "edge count")->required();
    cmd_classify->add_flag("--json", as_json, "emit the machine-readable record");

    CLI::App* cmd_max = app.add_subcommand("max", "print the maximum sigma_2 for (n, m)");
    cmd_max->add_option("--n", n, "vertex count")->required();
    cmd_max->add_option("--m", m, "edge count")->required();

    CLI::App* cmd_construct = app.add_subcommand("construct", "print the quasi-complete graph for (n, m, k)");
    cmd_construct->add_option("--n", n, "vertex count")->required();
    cmd_construct->add_option("--m", m, "edge count")->required();
    cmd_construct->add_option("--k", k, "size of side X")->required();
    cmd_construct->add_option("--format", format, "edge-list, biadjacency, or dot")
        ->check(CLI::IsMember({"edge-list", "biadjacency", "dot"}));

    CLI::App* cmd_fk = app.add_subcommand("fk", "print sigma_2 of the side-k construction for each k up to the optimum");
    cmd_fk->add_option("--n", n, "vertex count")->required();
    cmd_fk->add_option("--m", m, "edge count")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "compare the engine against brute-force enumeration");
    cmd_verify->add_option("--n-max", n_max, "verify every (n, m) with n up to this bound")
        ->check(CLI::Range(2, bimax::kMaxOracleVertices));
    cmd_verify->add_option("--jobs", jobs, "worker threads (default $BIMAX_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    CLI::App* cmd_table = app.add_subcommand("table", "one row per (n, m) with regime, k0, max, classes");
    cmd_table->add_option("--n-from", n_from, "first n")->required();
    cmd_table->add_option("--n-to", n_to, "last n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_classify) {
            bimax::ExtremalClassification cls = bimax::classify(bimax::GraphParams(n, m));
            std::cout << (as_json ? bimax::classification_to_json(cls)
                                  : bimax::classification_to_text(cls));
        } else if (*cmd_max) {
            std::cout << bimax::max_sigma2(bimax::GraphParams(n, m)) << "\n";
        } else if (*cmd_construct) {
            bimax::QuasiCompleteSpec spec = bimax::quasi_complete_spec(n, m, k);
            if (!spec.feasible) {
                std::cerr << "error: no quasi-complete graph with n=" << n << " m=" << m
                          << " k=" << k << " (k exceeds n - q - sgn(r) = "
                          << n - spec.q - bimax::sgn(spec.r) << ")\n";
                return 2;
            }
            std::cout << bimax::serialize(bimax::build_quasi_complete(spec),
                                          bimax::parse_format_name(format));
        } else if (*cmd_fk) {
            for (auto [side, value] : bimax::sigma2_profile(bimax::GraphParams(n, m)))
                std::cout << side << " " << value << "\n";
        } else if (*cmd_verify) {
            bimax::SweepSummary summary = bimax::verify_sweep(n_max, jobs);
            for (const bimax::OracleReport& r : summary.reports)
                std::cout << bimax::report_line(r) << "\n";
            std::cout << "instances=" << summary.instances
                      << " agreements=" << summary.agreements
                      << " disagreements=" << summary.disagreements.size() << "\n";
            if (!summary.disagreements.empty()) {
                for (const bimax::OracleReport& r : summary.disagreements)
                    std::cerr << bimax::report_to_json(r);
                return 1;
            }
        } else if (*cmd_table) {
            if (n_from < 2 || n_to < n_from) {
                std::cerr << "error: need 2 <= n-from <= n-to\n";
                return 2;
            }
            for (int nn = n_from; nn <= n_to; ++nn) {
                for (long long mm = 0; mm <= bimax::max_edges(nn); ++mm) {
                    bimax::ExtremalClassification cls =
                        bimax::classify(bimax::GraphParams(nn, mm));
                    std::cout << nn << " " << mm << " " << bimax::regime_name(cls.regime) << " "
                              << (cls.optimal_k ? std::to_string(*cls.optimal_k) : "-") << " "
                              << cls.max_sigma2 << " " << cls.iso_classes << "\n";
                }
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
