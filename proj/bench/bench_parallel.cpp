// Compares the serial reference path (workers = 1) against the
// OpenMP-parallel path on the two across-candidate workloads: randomized
// search and catalog verification.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

#include "maskmat/catalog.hpp"
#include "maskmat/search.hpp"

using namespace maskmat;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    int par = static_cast<int>(std::thread::hardware_concurrency());
    if (par < 1) par = 1;
    if (argc > 1) par = std::max(1, std::atoi(argv[1]));

#ifdef MASKMAT_OPENMP
    std::printf("OpenMP enabled, parallel runs use %d workers\n", par);
#else
    std::printf("OpenMP disabled at build time, parallel runs fall back to serial\n");
#endif
    std::printf("%-34s %12s %12s %8s\n", "workload", "serial ms", "parallel ms", "speedup");

    {
        FieldCtx f = ctx_new(8);
        SearchConfig cfg;
        cfg.scheme = Scheme::alg4;
        cfg.k = 8;
        cfg.d = 4;
        cfg.sampler = SamplerKind::cauchy_preconditioned;
        cfg.samples = 192;
        cfg.seed = 11;

        SearchStats serial_stats, par_stats;
        cfg.workers = 1;
        double ts = time_ms([&] { serial_stats = run_search(f, cfg); });
        cfg.workers = par;
        double tp = time_ms([&] { par_stats = run_search(f, cfg); });
        if (serial_stats.safe_count != par_stats.safe_count ||
            serial_stats.tried != par_stats.tried) {
            std::printf("FAIL: serial and parallel search disagree\n");
            return 1;
        }
        std::printf("%-34s %12.1f %12.1f %7.2fx\n", "search alg4 d=4 k=8 (192 samples)", ts, tp,
                    ts / tp);
    }

    {
        CatalogFilter filter;
        filter.d = 4;
        std::vector<CatalogResult> rs, rp;
        double ts = time_ms([&] { rs = catalog_verify(filter, Method::automatic, 5, 1); });
        double tp = time_ms([&] { rp = catalog_verify(filter, Method::automatic, 5, par); });
        bool agree = rs.size() == rp.size();
        for (size_t i = 0; agree && i < rs.size(); ++i)
            agree = rs[i].report.safe == rp[i].report.safe;
        if (!agree) {
            std::printf("FAIL: serial and parallel catalog verification disagree\n");
            return 1;
        }
        std::printf("%-34s %12.1f %12.1f %7.2fx\n", "catalog verify d=4 (24 entries)", ts, tp,
                    ts / tp);
    }
    return 0;
}
