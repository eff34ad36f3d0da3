#include "maskmat/gadgets.hpp"

#include <stdexcept>

#include "maskmat/rng.hpp"

namespace maskmat {

namespace {

void require_sizes(const GammaCandidate& g, size_t a, size_t b, size_t r, size_t s,
                   bool alg4) {
    size_t d = static_cast<size_t>(g.d);
    if (g.n() != g.d)
        throw std::invalid_argument("gadget evaluation needs a full d-column candidate");
    if (a != d + 1 || b != d + 1 || r != d || (alg4 && s != d))
        throw std::invalid_argument("share/random vector size mismatch");
}

}  // namespace

std::vector<Elem> eval_alg4_shares(const FieldCtx& f, const GammaCandidate& g,
                                   const std::vector<Elem>& a, const std::vector<Elem>& b,
                                   const std::vector<Elem>& r, const std::vector<Elem>& s) {
    if (g.scheme != Scheme::alg4) throw std::invalid_argument("alg4 candidate required");
    require_sizes(g, a.size(), b.size(), r.size(), s.size(), true);
    const int d = g.d;
    std::vector<Elem> c;
    c.reserve(static_cast<size_t>(2 * d + 1));

    Elem t0 = a[0];
    for (int i = 0; i < d; ++i) t0 = add(f, t0, add(f, r[i], a[static_cast<size_t>(1 + i)]));
    Elem u0 = b[0];
    for (int i = 0; i < d; ++i) u0 = add(f, u0, add(f, s[i], b[static_cast<size_t>(1 + i)]));
    c.push_back(mul(f, t0, u0));

    for (int i = 0; i < d; ++i) {
        Elem acc = b[0];
        for (int j = 0; j < d; ++j) {
            Elem delta_ji = add(f, 1, g.gamma.at(1 + j, i));
            acc = add(f, acc, add(f, mul(f, delta_ji, s[j]), b[static_cast<size_t>(1 + j)]));
        }
        c.push_back(mul(f, r[i], acc));
    }
    for (int i = 0; i < d; ++i) {
        Elem acc = a[0];
        for (int j = 0; j < d; ++j)
            acc = add(f, acc,
                      add(f, mul(f, g.gamma.at(1 + i, j), r[j]), a[static_cast<size_t>(1 + j)]));
        c.push_back(mul(f, s[i], acc));
    }
    return c;
}

std::vector<Elem> eval_alg5_shares(const FieldCtx& f, const GammaCandidate& g,
                                   const std::vector<Elem>& a, const std::vector<Elem>& b,
                                   const std::vector<Elem>& r) {
    if (g.scheme != Scheme::alg5) throw std::invalid_argument("alg5 candidate required");
    require_sizes(g, a.size(), b.size(), r.size(), r.size(), false);
    const int d = g.d;
    Elem a_full = 0;
    for (Elem v : a) a_full = add(f, a_full, v);
    std::vector<Elem> c;
    c.reserve(static_cast<size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        Elem acc = mul(f, a_full, b[static_cast<size_t>(i)]);
        for (int j = 0; j < d; ++j)
            acc = add(f, acc, mul(f, g.gamma.at(i, j), r[j]));
        c.push_back(acc);
    }
    return c;
}

std::uint64_t gadget_exhaustive(const FieldCtx& f, const GammaCandidate& g) {
    const int d = g.d;
    const bool alg4 = g.scheme == Scheme::alg4;
    const int nvals = 2 * (d + 1) + (alg4 ? 2 * d : d);
    std::vector<Elem> v(static_cast<size_t>(nvals), 0);
    std::vector<Elem> a(static_cast<size_t>(d + 1)), b(static_cast<size_t>(d + 1));
    std::vector<Elem> r(static_cast<size_t>(d)), s(static_cast<size_t>(d));
    std::uint64_t failures = 0;
    for (;;) {
        for (int i = 0; i <= d; ++i) {
            a[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
            b[static_cast<size_t>(i)] = v[static_cast<size_t>(d + 1 + i)];
        }
        for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)] = v[static_cast<size_t>(2 * d + 2 + i)];
        if (alg4)
            for (int i = 0; i < d; ++i)
                s[static_cast<size_t>(i)] = v[static_cast<size_t>(3 * d + 2 + i)];
        Elem af = 0, bf = 0;
        for (Elem x : a) af = add(f, af, x);
        for (Elem x : b) bf = add(f, bf, x);
        Elem got = 0;
        if (alg4)
            for (Elem x : eval_alg4_shares(f, g, a, b, r, s)) got = add(f, got, x);
        else
            for (Elem x : eval_alg5_shares(f, g, a, b, r)) got = add(f, got, x);
        if (got != mul(f, af, bf)) ++failures;

        int i = 0;
        while (i < nvals && v[static_cast<size_t>(i)] == static_cast<Elem>(f.order - 1))
            v[static_cast<size_t>(i++)] = 0;
        if (i == nvals) break;
        ++v[static_cast<size_t>(i)];
    }
    return failures;
}

int gadget_selftest(const FieldCtx& f, int d, int trials, std::uint64_t seed) {
    SplitMix64 rng = derive_stream(seed, 0x67616467);
    auto elem = [&] { return static_cast<Elem>(rng.below(f.order)); };
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        Mat g4(d + 1, d);
        for (int c = 0; c < d; ++c) g4.at(0, c) = 1;
        for (int rr = 1; rr <= d; ++rr)
            for (int c = 0; c < d; ++c) g4.at(rr, c) = elem();
        GammaCandidate cand4 = make_candidate(f, Scheme::alg4, d, std::move(g4));

        Mat g5(d + 1, d);
        for (int rr = 0; rr < d; ++rr)
            for (int c = 0; c < d; ++c) g5.at(rr, c) = elem();
        for (int c = 0; c < d; ++c) {
            Elem s = 0;
            for (int rr = 0; rr < d; ++rr) s = add(f, s, g5.at(rr, c));
            g5.at(d, c) = s;
        }
        GammaCandidate cand5 = make_candidate(f, Scheme::alg5, d, std::move(g5));

        std::vector<Elem> a(static_cast<size_t>(d + 1)), b(static_cast<size_t>(d + 1));
        std::vector<Elem> r(static_cast<size_t>(d)), s(static_cast<size_t>(d));
        for (auto& v : a) v = elem();
        for (auto& v : b) v = elem();
        for (auto& v : r) v = elem();
        for (auto& v : s) v = elem();
        Elem af = 0, bf = 0;
        for (Elem v : a) af = add(f, af, v);
        for (Elem v : b) bf = add(f, bf, v);
        Elem want = mul(f, af, bf);

        Elem got4 = 0;
        for (Elem v : eval_alg4_shares(f, cand4, a, b, r, s)) got4 = add(f, got4, v);
        Elem got5 = 0;
        for (Elem v : eval_alg5_shares(f, cand5, a, b, r)) got5 = add(f, got5, v);
        if (got4 != want) ++failures;
        if (got5 != want) ++failures;
    }
    return failures;
}

}  // namespace maskmat
