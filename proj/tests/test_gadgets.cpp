#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "maskmat/gadgets.hpp"
#include "maskmat/rng.hpp"
#include "maskmat/structures.hpp"

using namespace maskmat;

namespace {

std::vector<Elem> draw(const FieldCtx& f, SplitMix64& rng, int count) {
    std::vector<Elem> out(static_cast<size_t>(count));
    for (auto& e : out) e = static_cast<Elem>(rng.below(f.order));
    return out;
}

std::vector<Elem> draw_distinct(const FieldCtx& f, SplitMix64& rng, int count,
                                bool allow_zero) {
    std::vector<Elem> out;
    while (static_cast<int>(out.size()) < count) {
        Elem e = static_cast<Elem>(rng.below(f.order));
        if (!allow_zero && e == 0) continue;
        bool dup = false;
        for (Elem o : out) dup = dup || o == e;
        if (!dup) out.push_back(e);
    }
    return out;
}

Elem sum(const FieldCtx& f, const std::vector<Elem>& v) {
    Elem acc = 0;
    for (Elem e : v) acc = add(f, acc, e);
    return acc;
}

GammaCandidate random41(const FieldCtx& f, SplitMix64& rng, int d) {
    auto v = draw_distinct(f, rng, 2 * d, false);
    return construct_precond41(f, {v.begin(), v.begin() + d}, {v.begin() + d, v.end()});
}

GammaCandidate random51(const FieldCtx& f, SplitMix64& rng, int d) {
    auto v = draw_distinct(f, rng, 2 * d + 1, true);
    return construct_precond51(f, {v.begin(), v.begin() + d + 1},
                               {v.begin() + d + 1, v.end()});
}

}  // namespace

TEST_CASE("alg4 gadget on degenerate sharings") {
    FieldCtx f = ctx_new(8);
    SplitMix64 rng(11);
    GammaCandidate g = random41(f, rng, 3);

    std::vector<Elem> zero_r(3, 0);
    std::vector<Elem> a = {0x2b, 0, 0, 0};
    std::vector<Elem> b = {0x91, 0, 0, 0};
    auto c = eval_alg4_shares(f, g, a, b, zero_r, zero_r);
    CHECK(c.size() == 7);
    CHECK(sum(f, c) == mul(f, 0x2b, 0x91));

    // a zero input keeps the sum at zero regardless of randoms
    std::vector<Elem> az = {0x15, 0x15, 0x3c, 0x3c};
    auto cz = eval_alg4_shares(f, g, az, b, draw(f, rng, 3), draw(f, rng, 3));
    CHECK(sum(f, cz) == 0);
}

TEST_CASE("alg4 gadget identity on random inputs") {
    FieldCtx f = ctx_new(8);
    SplitMix64 rng(12);
    for (int d : {1, 2, 3, 4}) {
        GammaCandidate g = random41(f, rng, d);
        for (int t = 0; t < 250; ++t) {
            auto a = draw(f, rng, d + 1);
            auto b = draw(f, rng, d + 1);
            auto r = draw(f, rng, d);
            auto s = draw(f, rng, d);
            auto c = eval_alg4_shares(f, g, a, b, r, s);
            REQUIRE(c.size() == static_cast<size_t>(2 * d + 1));
            REQUIRE(sum(f, c) == mul(f, sum(f, a), sum(f, b)));
        }
    }
}

TEST_CASE("alg5 gadget identity on random inputs") {
    FieldCtx f = ctx_new(8);
    SplitMix64 rng(13);
    for (int d : {1, 2, 3, 4}) {
        GammaCandidate g = random51(f, rng, d);
        for (int t = 0; t < 250; ++t) {
            auto a = draw(f, rng, d + 1);
            auto b = draw(f, rng, d + 1);
            auto r = draw(f, rng, d);
            auto c = eval_alg5_shares(f, g, a, b, r);
            REQUIRE(c.size() == static_cast<size_t>(d + 1));
            REQUIRE(sum(f, c) == mul(f, sum(f, a), sum(f, b)));
        }
    }

    // randoms folded to zero: c_i collapses to b_i * sum(a)
    GammaCandidate g = random51(f, rng, 3);
    auto a = draw(f, rng, 4);
    auto b = draw(f, rng, 4);
    auto c = eval_alg5_shares(f, g, a, b, {0, 0, 0});
    for (int i = 0; i <= 3; ++i)
        CHECK(c[static_cast<size_t>(i)] == mul(f, b[static_cast<size_t>(i)], sum(f, a)));
}

TEST_CASE("broken zero-sum columns break the identity") {
    FieldCtx f = ctx_new(8);
    SplitMix64 rng(14);
    GammaCandidate g = random51(f, rng, 3);
    g.gamma.at(1, 2) = add(f, g.gamma.at(1, 2), 0x1);  // perturb one entry

    bool failed = false;
    for (int t = 0; t < 200 && !failed; ++t) {
        auto a = draw(f, rng, 4);
        auto b = draw(f, rng, 4);
        auto r = draw(f, rng, 3);
        auto c = eval_alg5_shares(f, g, a, b, r);
        failed = sum(f, c) != mul(f, sum(f, a), sum(f, b));
    }
    CHECK(failed);
}

TEST_CASE("share length validation") {
    FieldCtx f = ctx_new(8);
    SplitMix64 rng(15);
    GammaCandidate g4 = random41(f, rng, 2);
    GammaCandidate g5 = random51(f, rng, 2);
    std::vector<Elem> a3 = {1, 2, 3};
    std::vector<Elem> r2 = {1, 2};
    CHECK_THROWS_AS(eval_alg4_shares(f, g4, {1, 2}, a3, r2, r2), std::invalid_argument);
    CHECK_THROWS_AS(eval_alg4_shares(f, g4, a3, a3, {1}, r2), std::invalid_argument);
    CHECK_THROWS_AS(eval_alg5_shares(f, g5, a3, {1, 2}, r2), std::invalid_argument);
    CHECK_THROWS_AS(eval_alg5_shares(f, g5, a3, a3, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("randomized selftest reports zero failures") {
    FieldCtx f = ctx_new(8);
    for (int d : {1, 2, 3}) {
        CHECK(gadget_selftest(f, d, 500, 0xbeef + static_cast<std::uint64_t>(d)) == 0);
    }
}

TEST_CASE("exhaustive identity over the order-2 tiny field") {
    FieldCtx f4 = ctx_new(2);
    SplitMix64 rng(16);

    // alg4 needs row 0 all ones; draw the rest freely
    Mat m4(3, 2);
    m4.at(0, 0) = m4.at(0, 1) = 1;
    for (int i = 1; i <= 2; ++i)
        for (int j = 0; j < 2; ++j) m4.at(i, j) = static_cast<Elem>(rng.below(4));
    GammaCandidate g4 = make_candidate(f4, Scheme::alg4, 2, m4);
    CHECK(gadget_exhaustive(f4, g4) == 0);

    // alg5 needs zero column sums
    Mat m5(3, 2);
    for (int j = 0; j < 2; ++j) {
        m5.at(0, j) = static_cast<Elem>(rng.below(4));
        m5.at(1, j) = static_cast<Elem>(rng.below(4));
        m5.at(2, j) = add(f4, m5.at(0, j), m5.at(1, j));
    }
    GammaCandidate g5 = make_candidate(f4, Scheme::alg5, 2, m5);
    CHECK(gadget_exhaustive(f4, g5) == 0);
}
