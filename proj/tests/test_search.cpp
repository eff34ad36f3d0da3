#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "maskmat/search.hpp"
#include "maskmat/structures.hpp"

using namespace maskmat;

namespace {

SearchConfig base_cfg(Scheme s, int k, int d, SamplerKind sampler,
                      std::uint64_t samples, std::uint64_t seed) {
    SearchConfig cfg;
    cfg.scheme = s;
    cfg.k = k;
    cfg.d = d;
    cfg.sampler = sampler;
    cfg.samples = samples;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("sampler names round trip") {
    CHECK(sampler_from_name("cauchy") == SamplerKind::cauchy_preconditioned);
    CHECK(sampler_from_name("uniform") == SamplerKind::uniform_valid);
    CHECK(sampler_name(SamplerKind::cauchy_preconditioned) == std::string("cauchy"));
    CHECK(sampler_name(SamplerKind::uniform_valid) == std::string("uniform"));
    CHECK_THROWS_AS(sampler_from_name("gaussian"), std::invalid_argument);
}

TEST_CASE("sampling is deterministic in (seed, index)") {
    FieldCtx f = ctx_new(8);
    SearchConfig cfg = base_cfg(Scheme::alg4, 8, 3, SamplerKind::cauchy_preconditioned, 10, 77);
    GammaCandidate a = sample_candidate(f, cfg, 5);
    GammaCandidate b = sample_candidate(f, cfg, 5);
    CHECK(a.gamma == b.gamma);
    GammaCandidate c = sample_candidate(f, cfg, 6);
    CHECK_FALSE(a.gamma == c.gamma);

    cfg.seed = 78;
    GammaCandidate d = sample_candidate(f, cfg, 5);
    CHECK_FALSE(a.gamma == d.gamma);
}

TEST_CASE("cauchy samples satisfy their precondition") {
    FieldCtx f = ctx_new(8);
    for (Scheme s : {Scheme::alg4, Scheme::alg5}) {
        SearchConfig cfg = base_cfg(s, 8, 3, SamplerKind::cauchy_preconditioned, 10, 3);
        for (std::uint64_t i = 0; i < 50; ++i) {
            GammaCandidate g = sample_candidate(f, cfg, i);
            CHECK(g.scheme == s);
            CHECK(check_precondition(f, g));
        }
    }
}

TEST_CASE("uniform samples satisfy the scheme constraint") {
    FieldCtx f = ctx_new(4);
    SearchConfig c4 = base_cfg(Scheme::alg4, 4, 3, SamplerKind::uniform_valid, 10, 5);
    SearchConfig c5 = base_cfg(Scheme::alg5, 4, 3, SamplerKind::uniform_valid, 10, 5);
    for (std::uint64_t i = 0; i < 50; ++i) {
        GammaCandidate g4 = sample_candidate(f, c4, i);
        for (int j = 0; j < g4.n(); ++j) CHECK(g4.gamma.at(0, j) == 1);
        GammaCandidate g5 = sample_candidate(f, c5, i);
        for (int j = 0; j < g5.n(); ++j) {
            Elem sum = 0;
            for (int r = 0; r <= g5.d; ++r) sum = add(f, sum, g5.gamma.at(r, j));
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("too-small fields are rejected") {
    FieldCtx f8 = ctx_new(3);
    SearchConfig cfg = base_cfg(Scheme::alg4, 3, 4, SamplerKind::cauchy_preconditioned, 1, 1);
    CHECK_THROWS_AS(sample_candidate(f8, cfg, 0), std::invalid_argument);

    // alg4 d=4 over F_16: 8 distinct nonzero of 15 exist, so this works
    FieldCtx f16 = ctx_new(4);
    SearchConfig ok = base_cfg(Scheme::alg4, 4, 4, SamplerKind::cauchy_preconditioned, 1, 1);
    CHECK_NOTHROW(sample_candidate(f16, ok, 0));

    SearchConfig zero = base_cfg(Scheme::alg4, 4, 2, SamplerKind::uniform_valid, 0, 1);
    CHECK_THROWS_AS(run_search(f16, zero), std::invalid_argument);
    SearchConfig noworkers = base_cfg(Scheme::alg4, 4, 2, SamplerKind::uniform_valid, 5, 1);
    noworkers.workers = 0;
    CHECK_THROWS_AS(run_search(f16, noworkers), std::invalid_argument);
}

TEST_CASE("search stats are worker-count independent") {
    FieldCtx f = ctx_new(4);
    SearchConfig cfg = base_cfg(Scheme::alg4, 4, 2, SamplerKind::uniform_valid, 300, 5);
    cfg.workers = 1;
    SearchStats serial = run_search(f, cfg);
    cfg.workers = 4;
    SearchStats parallel = run_search(f, cfg);

    CHECK(serial.tried == 300);
    CHECK(serial.tried == parallel.tried);
    CHECK(serial.safe_count == parallel.safe_count);
    CHECK(serial.fraction == doctest::Approx(parallel.fraction));
    REQUIRE(serial.found.size() == parallel.found.size());
    for (size_t i = 0; i < serial.found.size(); ++i) {
        CHECK(serial.found[i].index == parallel.found[i].index);
        CHECK(serial.found[i].gamma == parallel.found[i].gamma);
    }
    CHECK(serial.fraction == doctest::Approx(double(serial.safe_count) / 300.0));
    CHECK(serial.t_p50_ms <= serial.t_p90_ms);
    CHECK(serial.t_p90_ms <= serial.t_max_ms);
    CHECK(serial.safe_count > 0);
    CHECK(serial.log2_fraction == doctest::Approx(std::log2(serial.fraction)));
}

TEST_CASE("found matrices re-verify from a cold start") {
    FieldCtx f = ctx_new(5);
    SearchConfig cfg = base_cfg(Scheme::alg5, 5, 3, SamplerKind::cauchy_preconditioned, 40, 9);
    SearchStats stats = run_search(f, cfg);
    CHECK(stats.safe_count > 0);
    for (const FoundMatrix& fm : stats.found) {
        GammaCandidate g = make_candidate(f, Scheme::alg5, 3, fm.gamma);
        CHECK(check_subsets(f, g).safe);
    }
}

TEST_CASE("early stop truncates at the exact hit") {
    FieldCtx f = ctx_new(4);
    SearchConfig cfg = base_cfg(Scheme::alg4, 4, 2, SamplerKind::uniform_valid, 2000, 6);
    SearchStats full = run_search(f, cfg);
    REQUIRE(full.safe_count >= 3);
    std::uint64_t third = full.found[2].index;

    cfg.early_stop = 3;
    for (int workers : {1, 3}) {
        cfg.workers = workers;
        SearchStats stopped = run_search(f, cfg);
        CHECK(stopped.safe_count == 3);
        CHECK(stopped.tried == third + 1);
        CHECK(stopped.found.size() == 3);
        CHECK(stopped.found[2].index == third);
    }
}

TEST_CASE("a fruitless search reports negative infinity") {
    FieldCtx f = ctx_new(5);
    SearchConfig cfg = base_cfg(Scheme::alg4, 5, 4, SamplerKind::uniform_valid, 40, 12);
    SearchStats stats = run_search(f, cfg);
    CHECK(stats.safe_count == 0);
    CHECK(stats.found.empty());
    CHECK(std::isinf(stats.log2_fraction));
    CHECK(stats.log2_fraction < 0);
}

TEST_CASE("jsonl stream and report json") {
    FieldCtx f = ctx_new(4);
    SearchConfig cfg = base_cfg(Scheme::alg4, 4, 2, SamplerKind::uniform_valid, 200, 5);
    std::ostringstream lines;
    SearchStats stats = run_search(f, cfg, &lines);

    size_t count = 0;
    std::istringstream in(lines.str());
    std::string line;
    std::uint64_t last_index = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json rec = nlohmann::json::parse(line);
        CHECK(rec["scheme"] == "alg4");
        CHECK(rec["k"] == 4);
        CHECK(rec["d"] == 2);
        std::uint64_t idx = rec["index"].get<std::uint64_t>();
        if (count > 0) CHECK(idx > last_index);
        last_index = idx;
        CHECK(rec["gamma"].is_array());
        ++count;
    }
    CHECK(count == stats.found.size());

    nlohmann::json rep = search_report_json(f, cfg, stats);
    CHECK(rep["config"]["scheme"] == "alg4");
    CHECK(rep["config"]["sampler"] == "uniform");
    CHECK(rep["config"]["early_stop"].is_null());
    CHECK(rep["stats"]["tried"] == 200);
    CHECK(rep["stats"]["safe_count"] == stats.safe_count);
    CHECK(rep["found"].size() == stats.found.size());
}
