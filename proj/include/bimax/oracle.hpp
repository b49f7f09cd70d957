#ifndef BIMAX_ORACLE_HPP
#define BIMAX_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bimax/canonical.hpp"
#include "bimax/extremal.hpp"
#include "bimax/graph.hpp"

namespace bimax {

// Exhaustive enumeration is only supported for small instances.
inline constexpr int kMaxOracleVertices = 10;

// Representatives kept while enumerating; beyond this the report is flagged.
inline constexpr std::size_t kMaxMaximizerRepresentatives = 10000;

enum class Verdict { agree, value_mismatch, set_mismatch };

const char* verdict_name(Verdict v);

struct MaximizerClass {
    CanonicalForm form;
    BipartiteGraph representative;
};

// Ground truth for one instance: the true maximum of sigma_2 over every
// bipartite graph with the given vertex and edge counts, the maximizers up
// to isomorphism, and (after verify) the engine's answer next to it.
struct OracleReport {
    int n = 0;
    long long m = 0;
    long long brute_max = 0;
    std::vector<MaximizerClass> maximizer_classes;
    std::uint64_t enumeration_count = 0;
    bool representative_overflow = false;

    // Filled by verify().
    std::optional<Regime> regime;
    std::optional<long long> engine_max;
    std::vector<CanonicalForm> engine_classes;
    std::optional<Verdict> verdict;
};

// Enumerates every bipartite graph with n vertices and m edges: for each
// side size k in [ceil(n/2), n-1], all m-subsets of the k*(n-k) biadjacency
// cells (smaller k are side swaps of these). Tracks the maximum sigma_2 and
// all labeled maximizers; when dedup is set, collapses them by canonical
// form. jobs > 1 partitions the combination ranges across threads; results
// are identical regardless of job count.
OracleReport enumerate_max(const GraphParams& params, bool dedup, int jobs = 1);

// enumerate_max plus the engine's classification, with the verdict:
// agree iff the values match and the deduplicated construction set equals
// the brute-force maximizer set up to isomorphism.
OracleReport verify(const GraphParams& params, int jobs = 1);

struct SweepSummary {
    int instances = 0;
    int agreements = 0;
    std::vector<OracleReport> reports;        // every instance, in (n, m) order
    std::vector<OracleReport> disagreements;  // the failing subset
};

// verify() for every n in [2, n_max] and every m in [0, max_edges(n)].
SweepSummary verify_sweep(int n_max, int jobs = 1);

// Brute-force maximum of sigma_2 at one fixed side size (all m-subsets of
// the k*(n-k) cells). Throws when no graph exists there (m > k*(n-k)).
long long max_sigma2_at_side(int n, long long m, int k);

}  // namespace bimax

#endif
