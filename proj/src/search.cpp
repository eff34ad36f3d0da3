#include "maskmat/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "maskmat/rng.hpp"
#include "maskmat/structures.hpp"

#ifdef MASKMAT_OPENMP
#include <omp.h>
#endif

namespace maskmat {

namespace {

constexpr std::uint64_t kBlock = 256;

std::vector<Elem> draw_distinct(SplitMix64& rng, const FieldCtx& f, int count,
                                bool allow_zero) {
    std::vector<Elem> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        Elem v = allow_zero ? static_cast<Elem>(rng.below(f.order))
                            : static_cast<Elem>(1 + rng.below(f.order - 1));
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

void validate_config(const FieldCtx& f, const SearchConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (cfg.d < 1) throw std::invalid_argument("d must be >= 1");
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (cfg.sampler == SamplerKind::cauchy_preconditioned) {
        if (cfg.scheme == Scheme::alg4 && f.order - 1 < 2u * cfg.d)
            throw std::invalid_argument("field too small: need 2d distinct nonzero elements");
        if (cfg.scheme == Scheme::alg5 && f.order < 2u * cfg.d + 1)
            throw std::invalid_argument("field too small: need 2d+1 distinct elements");
    }
}

double quantile(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0.0;
    size_t pos = static_cast<size_t>(q * static_cast<double>(sorted.size() - 1));
    return sorted[pos];
}

}  // namespace

const char* sampler_name(SamplerKind s) {
    return s == SamplerKind::cauchy_preconditioned ? "cauchy" : "uniform";
}

SamplerKind sampler_from_name(const std::string& name) {
    if (name == "cauchy") return SamplerKind::cauchy_preconditioned;
    if (name == "uniform") return SamplerKind::uniform_valid;
    throw std::invalid_argument("unknown sampler: " + name);
}

GammaCandidate sample_candidate(const FieldCtx& f, const SearchConfig& cfg,
                                std::uint64_t index) {
    validate_config(f, cfg);
    SplitMix64 rng = derive_stream(cfg.seed, index);
    const int d = cfg.d;
    if (cfg.sampler == SamplerKind::cauchy_preconditioned) {
        if (cfg.scheme == Scheme::alg4) {
            std::vector<Elem> vals = draw_distinct(rng, f, 2 * d, false);
            std::vector<Elem> xs(vals.begin(), vals.begin() + d);
            std::vector<Elem> ys(vals.begin() + d, vals.end());
            return construct_precond41(f, xs, ys);
        }
        std::vector<Elem> vals = draw_distinct(rng, f, 2 * d + 1, true);
        std::vector<Elem> xs(vals.begin(), vals.begin() + d + 1);
        std::vector<Elem> ys(vals.begin() + d + 1, vals.end());
        return construct_precond51(f, xs, ys);
    }
    Mat g(d + 1, d);
    if (cfg.scheme == Scheme::alg4) {
        for (int j = 0; j < d; ++j) g.at(0, j) = 1;
        for (int i = 1; i <= d; ++i)
            for (int j = 0; j < d; ++j) g.at(i, j) = static_cast<Elem>(rng.below(f.order));
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g.at(i, j) = static_cast<Elem>(rng.below(f.order));
        for (int j = 0; j < d; ++j) {
            Elem s = 0;
            for (int i = 0; i < d; ++i) s = add(f, s, g.at(i, j));
            g.at(d, j) = s;
        }
    }
    return make_candidate(f, cfg.scheme, d, g);
}

SearchStats run_search(const FieldCtx& f, const SearchConfig& cfg, std::ostream* jsonl) {
    validate_config(f, cfg);
    SearchStats stats;
    std::vector<double> timings;
    timings.reserve(cfg.samples);

    const int nworkers = cfg.workers;
    std::vector<PriorityCache> caches(static_cast<size_t>(nworkers));

    struct Slot {
        bool safe = false;
        double ms = 0.0;
        Mat gamma;
    };

    bool stopped = false;
    for (std::uint64_t base = 0; base < cfg.samples && !stopped; base += kBlock) {
        const std::uint64_t hi = std::min(base + kBlock, cfg.samples);
        const int count = static_cast<int>(hi - base);
        std::vector<Slot> slots(static_cast<size_t>(count));

#ifdef MASKMAT_OPENMP
#pragma omp parallel for num_threads(nworkers) schedule(dynamic) if (nworkers > 1)
#endif
        for (int i = 0; i < count; ++i) {
            int tid = 0;
#ifdef MASKMAT_OPENMP
            tid = omp_get_thread_num() % nworkers;
#endif
            GammaCandidate g = sample_candidate(f, cfg, base + static_cast<std::uint64_t>(i));
            CheckOptions opts;
            opts.priority = &caches[static_cast<size_t>(tid)];
            auto t0 = std::chrono::steady_clock::now();
            CheckReport rep = check(f, g, Method::automatic, opts);
            slots[static_cast<size_t>(i)].ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            slots[static_cast<size_t>(i)].safe = rep.safe;
            if (rep.safe) slots[static_cast<size_t>(i)].gamma = g.gamma;
        }

        for (int i = 0; i < count && !stopped; ++i) {
            const std::uint64_t idx = base + static_cast<std::uint64_t>(i);
            timings.push_back(slots[static_cast<size_t>(i)].ms);
            stats.tried = idx + 1;
            if (!slots[static_cast<size_t>(i)].safe) continue;
            ++stats.safe_count;
            stats.found.push_back({idx, std::move(slots[static_cast<size_t>(i)].gamma)});
            if (jsonl) {
                nlohmann::json rec{{"index", idx},
                                   {"scheme", scheme_name(cfg.scheme)},
                                   {"k", cfg.k},
                                   {"d", cfg.d},
                                   {"gamma", mat_to_json(f.k, stats.found.back().gamma)["data"]}};
                *jsonl << rec.dump() << "\n";
            }
            if (cfg.early_stop && stats.safe_count >= *cfg.early_stop) stopped = true;
        }
    }

    stats.fraction = static_cast<double>(stats.safe_count) / static_cast<double>(stats.tried);
    stats.log2_fraction = stats.safe_count == 0 ? -std::numeric_limits<double>::infinity()
                                                : std::log2(stats.fraction);
    std::sort(timings.begin(), timings.end());
    stats.t_p50_ms = quantile(timings, 0.5);
    stats.t_p90_ms = quantile(timings, 0.9);
    stats.t_max_ms = timings.empty() ? 0.0 : timings.back();
    return stats;
}

nlohmann::json search_report_json(const FieldCtx& f, const SearchConfig& cfg,
                                  const SearchStats& stats) {
    nlohmann::json cfgj{{"scheme", scheme_name(cfg.scheme)},
                        {"k", cfg.k},
                        {"d", cfg.d},
                        {"sampler", sampler_name(cfg.sampler)},
                        {"samples", cfg.samples},
                        {"seed", cfg.seed},
                        {"workers", cfg.workers}};
    cfgj["early_stop"] = cfg.early_stop ? nlohmann::json(*cfg.early_stop) : nlohmann::json();
    nlohmann::json statsj{{"tried", stats.tried},
                          {"safe_count", stats.safe_count},
                          {"fraction", stats.fraction},
                          {"t_p50_ms", stats.t_p50_ms},
                          {"t_p90_ms", stats.t_p90_ms},
                          {"t_max_ms", stats.t_max_ms}};
    statsj["log2_fraction"] = std::isfinite(stats.log2_fraction)
                                  ? nlohmann::json(stats.log2_fraction)
                                  : nlohmann::json();
    nlohmann::json found = nlohmann::json::array();
    for (const FoundMatrix& fm : stats.found)
        found.push_back({{"index", fm.index}, {"gamma", mat_to_json(f.k, fm.gamma)["data"]}});
    return nlohmann::json{{"config", std::move(cfgj)},
                          {"stats", std::move(statsj)},
                          {"found", std::move(found)}};
}

}  // namespace maskmat
