#include "bimax/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "bimax/combinatorics.hpp"

namespace bimax {
namespace {

constexpr int kMaxCells = 25;  // k*(n-k) <= 25 for n <= 10

// C(i, j) for i <= kMaxCells.
struct BinomialTable {
    std::uint64_t c[kMaxCells + 1][kMaxCells + 1] = {};
    constexpr BinomialTable() {
        for (int i = 0; i <= kMaxCells; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
        }
    }
};
constexpr BinomialTable kBinomial;

}  // namespace

std::uint64_t binomial(int i, int j) {
    if (j < 0 || j > i) return 0;
    return kBinomial.c[i][j];
}

std::uint64_t unrank_combination(std::uint64_t rank, int m, int cells) {
    std::uint64_t mask = 0;
    int hi = cells;
    for (int i = m; i >= 1; --i) {
        int c = hi - 1;
        while (binomial(c, i) > rank) --c;
        mask |= std::uint64_t{1} << c;
        rank -= binomial(c, i);
        hi = c;
    }
    return mask;
}

std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

namespace {

// sigma_2 evaluator for bitmask candidates at one side size.
struct SideEvaluator {
    int k, ny;
    std::uint64_t row_mask;
    std::uint64_t col_mask[kMaxCells];

    SideEvaluator(int n, int k_) : k(k_), ny(n - k_) {
        row_mask = (std::uint64_t{1} << k) - 1;
        for (int x = 0; x < k; ++x) {
            col_mask[x] = 0;
            for (int y = 0; y < ny; ++y) col_mask[x] |= std::uint64_t{1} << (y * k + x);
        }
    }

    long long sigma2(std::uint64_t mask) const {
        long long s = 0;
        for (int y = 0; y < ny; ++y) {
            long long d = std::popcount(mask >> (y * k) & row_mask);
            s += d * d;
        }
        for (int x = 0; x < k; ++x) {
            long long d = std::popcount(mask & col_mask[x]);
            s += d * d;
        }
        return s;
    }
};

struct Candidate {
    int k;
    std::uint64_t mask;

    auto operator<=>(const Candidate&) const = default;
};

struct Chunk {
    int k;
    std::uint64_t lo, hi;  // combination rank range [lo, hi)
};

struct ChunkResult {
    long long best = -1;
    std::vector<Candidate> reps;
    std::uint64_t count = 0;
    bool overflow = false;
};

ChunkResult run_chunk(int n, int m, const Chunk& chunk) {
    SideEvaluator eval(n, chunk.k);
    int cells = chunk.k * (n - chunk.k);
    ChunkResult result;
    std::uint64_t mask = unrank_combination(chunk.lo, m, cells);
    for (std::uint64_t rank = chunk.lo; rank < chunk.hi; ++rank) {
        ++result.count;
        long long s = eval.sigma2(mask);
        if (s > result.best) {
            result.best = s;
            result.reps.clear();
            result.overflow = false;
        }
        if (s == result.best) {
            if (result.reps.size() < kMaxMaximizerRepresentatives)
                result.reps.push_back({chunk.k, mask});
            else
                result.overflow = true;
        }
        if (m > 0 && rank + 1 < chunk.hi) mask = next_combination(mask);
    }
    return result;
}

BipartiteGraph materialize(int n, const Candidate& c) {
    BipartiteGraph g(c.k, n - c.k);
    for (int y = 0; y < n - c.k; ++y)
        for (int x = 0; x < c.k; ++x)
            if (c.mask >> (y * c.k + x) & 1) g.set_edge(x, y, true);
    return g;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::agree: return "agree";
        case Verdict::value_mismatch: return "value_mismatch";
        case Verdict::set_mismatch: return "set_mismatch";
    }
    return "?";
}

OracleReport enumerate_max(const GraphParams& params, bool dedup, int jobs) {
    if (params.n > kMaxOracleVertices)
        throw std::domain_error("exhaustive enumeration is limited to n <= " +
                                std::to_string(kMaxOracleVertices) + ", got n=" +
                                std::to_string(params.n));
    int n = params.n;
    int m = static_cast<int>(params.m);

    constexpr std::uint64_t kChunkSize = 1 << 18;
    std::vector<Chunk> chunks;
    for (int k = (n + 1) / 2; k <= n - 1; ++k) {
        std::uint64_t total = binomial(k * (n - k), m);
        for (std::uint64_t lo = 0; lo < total; lo += kChunkSize)
            chunks.push_back({k, lo, std::min(total, lo + kChunkSize)});
    }

    std::vector<ChunkResult> results(chunks.size());
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(chunks.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < chunks.size(); ++i) results[i] = run_chunk(n, m, chunks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < chunks.size(); i = next.fetch_add(1))
                    results[i] = run_chunk(n, m, chunks[i]);
            });
        }
        for (std::thread& t : pool) t.join();
    }

    OracleReport report;
    report.n = n;
    report.m = params.m;
    std::vector<Candidate> reps;
    long long best = -1;
    for (const ChunkResult& r : results) {
        report.enumeration_count += r.count;
        if (r.best > best) {
            best = r.best;
            reps.clear();
            report.representative_overflow = false;
        }
        if (r.best == best) {
            if (r.overflow) report.representative_overflow = true;
            for (const Candidate& c : r.reps) {
                if (reps.size() < kMaxMaximizerRepresentatives)
                    reps.push_back(c);
                else
                    report.representative_overflow = true;
            }
        }
    }
    report.brute_max = best;

    if (dedup) {
        std::map<CanonicalForm, Candidate> classes;
        for (const Candidate& c : reps) {
            CanonicalForm form = canonical_form(materialize(n, c));
            auto [it, inserted] = classes.try_emplace(form, c);
            if (!inserted && c < it->second) it->second = c;
        }
        for (const auto& [form, c] : classes)
            report.maximizer_classes.push_back({form, materialize(n, c)});
    } else {
        std::sort(reps.begin(), reps.end());
        for (const Candidate& c : reps) {
            BipartiteGraph g = materialize(n, c);
            report.maximizer_classes.push_back({canonical_form(g), std::move(g)});
        }
    }
    return report;
}

OracleReport verify(const GraphParams& params, int jobs) {
    OracleReport report = enumerate_max(params, true, jobs);
    ExtremalClassification cls = classify(params);
    report.regime = cls.regime;
    report.engine_max = cls.max_sigma2;

    std::vector<CanonicalForm> engine_forms;
    for (const QuasiCompleteSpec& spec : cls.constructions)
        engine_forms.push_back(canonical_form(build_quasi_complete(spec)));
    std::sort(engine_forms.begin(), engine_forms.end());
    engine_forms.erase(std::unique(engine_forms.begin(), engine_forms.end()), engine_forms.end());
    report.engine_classes = engine_forms;

    if (report.brute_max != cls.max_sigma2) {
        report.verdict = Verdict::value_mismatch;
        return report;
    }
    std::vector<CanonicalForm> brute_forms;
    for (const MaximizerClass& c : report.maximizer_classes) brute_forms.push_back(c.form);
    report.verdict = brute_forms == engine_forms ? Verdict::agree : Verdict::set_mismatch;
    return report;
}

SweepSummary verify_sweep(int n_max, int jobs) {
    if (n_max < 2 || n_max > kMaxOracleVertices)
        throw std::domain_error("sweep depth must be in [2, " +
                                std::to_string(kMaxOracleVertices) + "], got " +
                                std::to_string(n_max));
    SweepSummary summary;
    for (int n = 2; n <= n_max; ++n) {
        for (long long m = 0; m <= max_edges(n); ++m) {
            OracleReport report = verify(GraphParams(n, m), jobs);
            ++summary.instances;
            if (report.verdict == Verdict::agree)
                ++summary.agreements;
            else
                summary.disagreements.push_back(report);
            summary.reports.push_back(std::move(report));
        }
    }
    return summary;
}

long long max_sigma2_at_side(int n, long long m, int k) {
    if (n > kMaxOracleVertices)
        throw std::domain_error("exhaustive enumeration is limited to n <= " +
                                std::to_string(kMaxOracleVertices));
    if (k < 1 || k > n - 1) throw std::invalid_argument("side size out of range");
    int cells = k * (n - k);
    if (m < 0 || m > cells)
        throw std::domain_error("no bipartite graph has " + std::to_string(m) + " edges on sides (" +
                                std::to_string(k) + ", " + std::to_string(n - k) + ")");
    SideEvaluator eval(n, k);
    long long best = -1;
    std::uint64_t mask = unrank_combination(0, static_cast<int>(m), cells);
    std::uint64_t total = binomial(cells, static_cast<int>(m));
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        best = std::max(best, eval.sigma2(mask));
        if (m > 0 && rank + 1 < total) mask = next_combination(mask);
    }
    return best;
}

}  // namespace bimax
