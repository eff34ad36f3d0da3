#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maskmat/checker.hpp"

#include <json.hpp>

namespace maskmat {

enum class SamplerKind { cauchy_preconditioned, uniform_valid };

const char* sampler_name(SamplerKind s);
SamplerKind sampler_from_name(const std::string& name);

struct SearchConfig {
    Scheme scheme = Scheme::alg4;
    int k = 8;
    int d = 2;
    SamplerKind sampler = SamplerKind::cauchy_preconditioned;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::optional<std::uint64_t> early_stop;  // stop after this many safe hits
};

struct FoundMatrix {
    std::uint64_t index = 0;
    Mat gamma;
};

struct SearchStats {
    std::uint64_t tried = 0;
    std::uint64_t safe_count = 0;
    double fraction = 0.0;
    double log2_fraction = 0.0;  // -inf when safe_count == 0
    double t_p50_ms = 0.0;
    double t_p90_ms = 0.0;
    double t_max_ms = 0.0;
    std::vector<FoundMatrix> found;  // ascending by index
};

// Deterministic function of (cfg.seed, index), independent of any other
// call. cauchy mode rejection-samples the distinct parameter tuple and
// builds the preconditioned candidate; uniform mode draws entries
// uniformly and then forces the scheme constraint (alg4: row 0 := ones,
// alg5: last row := column-sum fix). Throws when the field is too small
// for the required distinct tuple.
GammaCandidate sample_candidate(const FieldCtx& f, const SearchConfig& cfg,
                                std::uint64_t index);

// Checks cfg.samples candidates with the auto method. Verdict-affecting
// state is per-candidate, so the stats (everything except the timing
// quantiles) depend only on cfg, not on the worker count. Candidates are
// processed in fixed blocks of 256; early_stop truncates after the block
// containing the target hit, at the exact candidate index reaching it.
// jsonl, when given, receives one record per safe matrix in index order.
SearchStats run_search(const FieldCtx& f, const SearchConfig& cfg,
                       std::ostream* jsonl = nullptr);

// {"config":{...},"stats":{...},"found":[{"index":...,"gamma":[[hex]]}]}
nlohmann::json search_report_json(const FieldCtx& f, const SearchConfig& cfg,
                                  const SearchStats& stats);

}  // namespace maskmat
