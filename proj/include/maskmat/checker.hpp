#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "maskmat/probes.hpp"

#include <json.hpp>

namespace maskmat {

enum class Method { automatic, oracle, subsets, batch, safepp };

Method method_from_name(const std::string& name);

// Violation evidence. columns/v give a sparse kernel vector of the probe
// matrix (0-based columns internally, 1-based in JSON reports) with
// wt(v) <= n whose tagged share product is nonzero in every row. For alg4
// the vector may live in the J - gamma companion system (delta = true).
struct Witness {
    Selection columns;
    std::vector<Elem> v;
    bool delta = false;
    std::string product;
};

struct CheckReport {
    bool safe = true;
    std::optional<Witness> witness;
    // Counter semantics per method:
    //   oracle:  total/checked = supports enumerated, skipped = 0
    //   subsets: total = subsets enumerated, skipped = filtered out by the
    //            row-coverage rule, checked = kernel-tested
    //   batch:   total = nominal C(ell, n) per system, checked = extension
    //            columns tested at full depth, skipped = 0
    //   safepp:  inner triangular-part subset counts, summed
    std::uint64_t subsets_total = 0;
    std::uint64_t subsets_skipped = 0;
    std::uint64_t subsets_checked = 0;
    double elapsed_ms = 0.0;
    std::string method;  // oracle | subsets | batch | safepp | analytic
};

struct WorkBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Session-scoped subset priority memory: subsets that produced violations
// are revisited first on later candidates. Advisory only; never changes a
// verdict, only how fast unsafe candidates are refuted.
struct PriorityCache {
    struct Entry {
        Selection columns;
        std::uint32_t fails = 0;
    };
    std::unordered_map<std::uint64_t, Entry> entries;

    static std::uint64_t key(const Selection& columns);
    void record(const Selection& columns);
    // Cached subsets ordered by descending failure count, then by key.
    std::vector<const Entry*> ordered() const;
};

struct CheckOptions {
    bool use_skip = true;
    PriorityCache* priority = nullptr;
    std::uint64_t work_bound = 1000000000ull;
};

// Naive reference: enumerates every vector of support size 1..max_weight
// (default n) and nonzero coordinates, in both systems for alg4. Feasible
// only for small q and d; throws WorkBoundError above the vector budget.
CheckReport check_oracle(const FieldCtx& f, const GammaCandidate& g,
                         std::optional<int> max_weight = {},
                         std::uint64_t work_bound = 1000000000ull);

// Kernel test over column subsets of size n with the row-coverage skip
// filter. For alg4 one subset enumeration feeds both the gamma and delta
// systems. Unsafe requires an explicit single-vector witness; over fields
// with at least n+2 elements one always exists for a covering subset.
CheckReport check_subsets(const FieldCtx& f, const GammaCandidate& g,
                          const CheckOptions& opts = {});

// Incremental variant: depth-first over (n-1)-subsets keeping a reduced
// matrix, pivot bookkeeping, and the set of share rows already witnessed
// nonzero by kernel vectors inside the current subset; each extension
// column beyond the maximal element is tested by one dependency probe.
// Verdict always equals check_subsets.
CheckReport check_batch(const FieldCtx& f, const GammaCandidate& g,
                        const CheckOptions& opts = {});

// Triangular-part reformulation: checks every column subset of gamma by
// running the subset test on the triangular views. Requires field order
// > n+1 so the kernel test decides the inner condition exactly. An unsafe
// verdict recovers its witness through the batch path.
CheckReport check_safepp(const FieldCtx& f, const GammaCandidate& g);

// Sufficient small-order tests for n <= 3 (throws on n > 3):
//   n=1: no zero entries; n=2: all square submatrices invertible;
//   n=3: MDS plus the zero-cornered triple determinants.
// Reports method "analytic" on success, nullopt when inconclusive.
std::optional<CheckReport> check_fast_small(const FieldCtx& f, const GammaCandidate& g);

// Method::automatic = fast-small for n <= 3 (falling through on
// inconclusive), batch otherwise.
CheckReport check(const FieldCtx& f, const GammaCandidate& g,
                  Method method = Method::automatic, const CheckOptions& opts = {});

// Independent witness re-verification: kernel membership, weight bound,
// and a nonzero tagged product in every share row.
bool verify_witness(const FieldCtx& f, const GammaCandidate& g, const Witness& w);

// (kept, total) counts of the row-coverage skip filter over all size-d
// column subsets of the d-column probe layout. Depends only on d: the
// support masks are value-independent. d=4 gives 103030 of 211876.
std::pair<std::uint64_t, std::uint64_t> filter_count(int d);

// {"verdict":...,"method":...,"subsets_total":...,"subsets_skipped":...,
//  "subsets_checked":...,"elapsed_ms":...,"witness":null|{...}}
nlohmann::json report_to_json(const CheckReport& r);

}  // namespace maskmat
