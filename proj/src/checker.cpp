#include "maskmat/checker.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_set>

#include "maskmat/rng.hpp"

namespace maskmat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

bool next_subset(std::vector<int>& idx, int n, int sz) {
    int i = sz - 1;
    while (i >= 0 && idx[i] == n - sz + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

// Kernel vector of the probe matrix in sparse form, with the bitmask of
// share rows where its tagged product is nonzero.
struct SparseVec {
    Selection cols;
    std::vector<Elem> coeffs;
    std::uint8_t mask = 0;
};

std::uint8_t product_mask(const FieldCtx& f, const ProbeSystem& ps, const Selection& cols,
                          const std::vector<Elem>& coeffs) {
    const int ns = product_slots(ps);
    Elem slots[8 + 1][8] = {};
    for (size_t i = 0; i < cols.size(); ++i) {
        if (coeffs[i] == 0) continue;
        std::uint8_t sup = ps.l_support[static_cast<size_t>(cols[i])];
        int slot = ps.l_slot[static_cast<size_t>(cols[i])];
        for (int r = 0; r <= ps.n; ++r)
            if (sup >> r & 1) slots[r][slot] = add(f, slots[r][slot], coeffs[i]);
    }
    std::uint8_t mask = 0;
    for (int r = 0; r <= ps.n; ++r)
        for (int s = 0; s < ns; ++s)
            if (slots[r][s] != 0) {
                mask |= static_cast<std::uint8_t>(1u << r);
                break;
            }
    return mask;
}

SparseVec make_sparse(const FieldCtx& f, const ProbeSystem& ps, Selection cols,
                      std::vector<Elem> coeffs) {
    SparseVec v;
    for (size_t i = 0; i < cols.size(); ++i) {
        if (coeffs[i] == 0) continue;
        v.cols.push_back(cols[i]);
        v.coeffs.push_back(coeffs[i]);
    }
    // canonical order
    std::vector<size_t> order(v.cols.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return v.cols[a] < v.cols[b]; });
    SparseVec out;
    for (size_t i : order) {
        out.cols.push_back(v.cols[i]);
        out.coeffs.push_back(v.coeffs[i]);
    }
    out.mask = product_mask(f, ps, out.cols, out.coeffs);
    return out;
}

std::string render_product(const FieldCtx& f, const ProbeSystem& ps, const SparseVec& v) {
    std::string out;
    for (int r = 0; r <= ps.n; ++r) {
        if (r) out += "; ";
        out += "row " + std::to_string(r + 1) + ": " +
               render_slots(symbolic_product_entry(f, ps, r, v.cols, v.coeffs));
    }
    return out;
}

// Hunts for a single kernel combination whose product is nonzero in every
// share row. Exists whenever the row coverage holds and q >= n+2; for
// smaller fields the exhaustive scan decides existence exactly.
std::optional<SparseVec> full_weight_combination(const FieldCtx& f, const ProbeSystem& ps,
                                                 const std::vector<SparseVec>& vs) {
    const std::uint8_t full = ps.full_rows();
    for (const SparseVec& v : vs)
        if (v.mask == full) return v;
    const size_t t = vs.size();
    if (t < 2) return std::nullopt;

    // per-vector per-row slot tables
    const int ns = product_slots(ps);
    const int rows = ps.n + 1;
    std::vector<std::vector<Elem>> tab(t);
    for (size_t i = 0; i < t; ++i) {
        tab[i].assign(static_cast<size_t>(rows) * ns, 0);
        for (size_t j = 0; j < vs[i].cols.size(); ++j) {
            int c = vs[i].cols[j];
            std::uint8_t sup = ps.l_support[static_cast<size_t>(c)];
            int slot = ps.l_slot[static_cast<size_t>(c)];
            for (int r = 0; r < rows; ++r)
                if (sup >> r & 1) {
                    Elem& e = tab[i][static_cast<size_t>(r) * ns + slot];
                    e = add(f, e, vs[i].coeffs[j]);
                }
        }
    }
    auto lambda_works = [&](const std::vector<Elem>& lam) {
        for (int r = 0; r < rows; ++r) {
            bool nonzero = false;
            for (int s = 0; s < ns && !nonzero; ++s) {
                Elem acc = 0;
                for (size_t i = 0; i < t; ++i)
                    if (lam[i] != 0)
                        acc = add(f, acc, mul(f, lam[i], tab[i][static_cast<size_t>(r) * ns + s]));
                nonzero = acc != 0;
            }
            if (!nonzero) return false;
        }
        return true;
    };
    auto combine = [&](const std::vector<Elem>& lam) {
        Selection cols;
        std::vector<Elem> coeffs;
        for (size_t i = 0; i < t; ++i) {
            if (lam[i] == 0) continue;
            for (size_t j = 0; j < vs[i].cols.size(); ++j) {
                int c = vs[i].cols[j];
                Elem v = mul(f, lam[i], vs[i].coeffs[j]);
                auto it = std::lower_bound(cols.begin(), cols.end(), c);
                if (it != cols.end() && *it == c) {
                    size_t pos = static_cast<size_t>(it - cols.begin());
                    coeffs[pos] = add(f, coeffs[pos], v);
                } else {
                    size_t pos = static_cast<size_t>(it - cols.begin());
                    cols.insert(it, c);
                    coeffs.insert(coeffs.begin() + static_cast<long>(pos), v);
                }
            }
        }
        return make_sparse(f, ps, std::move(cols), std::move(coeffs));
    };

    double space = std::pow(static_cast<double>(f.order), static_cast<double>(t));
    if (space <= static_cast<double>(1u << 20)) {
        std::vector<Elem> lam(t, 0);
        for (;;) {
            size_t i = 0;
            while (i < t && lam[i] == static_cast<Elem>(f.order - 1)) lam[i++] = 0;
            if (i == t) break;
            ++lam[i];
            if (lambda_works(lam)) {
                SparseVec out = combine(lam);
                if (out.mask == full) return out;
            }
        }
        return std::nullopt;
    }
    SplitMix64 rng(0x6c616d626461ull);
    std::vector<Elem> lam(t);
    for (int trial = 0; trial < 256; ++trial) {
        for (size_t i = 0; i < t; ++i) lam[i] = static_cast<Elem>(rng.below(f.order));
        if (lambda_works(lam)) {
            SparseVec out = combine(lam);
            if (out.mask == full) return out;
        }
    }
    return std::nullopt;
}

std::vector<std::pair<ProbeSystem, bool>> systems_for(const FieldCtx& f,
                                                      const GammaCandidate& g) {
    std::vector<std::pair<ProbeSystem, bool>> out;
    out.emplace_back(build_probe_system(f, g), false);
    if (g.scheme == Scheme::alg4)
        out.emplace_back(build_probe_system(f, delta_candidate(f, g)), true);
    return out;
}

// Kernel test of one column subset in one system; returns a full-weight
// single-vector violation if the subset is unsafe.
std::optional<SparseVec> kernel_violation(const FieldCtx& f, const ProbeSystem& ps,
                                          const Selection& cols) {
    Mat sub = select_cols(ps.M, cols);
    Mat basis = kernel_basis(f, sub);
    if (basis.cols == 0) return std::nullopt;
    std::vector<SparseVec> vs;
    std::uint8_t cover = 0;
    for (int j = 0; j < basis.cols; ++j) {
        Selection vc;
        std::vector<Elem> vv;
        for (int i = 0; i < basis.rows; ++i)
            if (basis.at(i, j) != 0) {
                vc.push_back(cols[static_cast<size_t>(i)]);
                vv.push_back(basis.at(i, j));
            }
        vs.push_back(make_sparse(f, ps, std::move(vc), std::move(vv)));
        cover |= vs.back().mask;
    }
    if (cover != ps.full_rows()) return std::nullopt;
    return full_weight_combination(f, ps, vs);
}

Witness witness_from(const FieldCtx& f, const ProbeSystem& ps, const SparseVec& v,
                     bool delta) {
    return Witness{v.cols, v.coeffs, delta, render_product(f, ps, v)};
}

}  // namespace

Method method_from_name(const std::string& name) {
    if (name == "auto") return Method::automatic;
    if (name == "oracle") return Method::oracle;
    if (name == "subsets") return Method::subsets;
    if (name == "batch") return Method::batch;
    if (name == "safepp") return Method::safepp;
    throw std::invalid_argument("unknown method: " + name);
}

std::uint64_t PriorityCache::key(const Selection& columns) {
    std::uint64_t k = static_cast<std::uint64_t>(columns.size()) << 56;
    for (size_t i = 0; i < columns.size() && i < 8; ++i)
        k |= static_cast<std::uint64_t>(columns[i] & 0x7f) << (7 * i);
    return k;
}

void PriorityCache::record(const Selection& columns) {
    Entry& e = entries[key(columns)];
    e.columns = columns;
    ++e.fails;
}

std::vector<const PriorityCache::Entry*> PriorityCache::ordered() const {
    std::vector<const Entry*> out;
    out.reserve(entries.size());
    for (const auto& [k, e] : entries) out.push_back(&e);
    std::sort(out.begin(), out.end(), [](const Entry* a, const Entry* b) {
        if (a->fails != b->fails) return a->fails > b->fails;
        return a->columns < b->columns;
    });
    return out;
}

CheckReport check_oracle(const FieldCtx& f, const GammaCandidate& g,
                         std::optional<int> max_weight, std::uint64_t work_bound) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.method = "oracle";
    const int n = g.n();
    const int maxw = std::min(max_weight.value_or(n), n);
    auto systems = systems_for(f, g);
    const int ell = systems[0].first.ell;
    const std::uint32_t nz = f.order - 1;

    long double work = 0;
    for (int w = 1; w <= maxw; ++w)
        work += static_cast<long double>(binomial(ell, w)) * std::pow(static_cast<long double>(nz), w);
    work *= static_cast<long double>(systems.size());
    if (work > static_cast<long double>(work_bound))
        throw WorkBoundError("oracle work bound exceeded");

    for (auto& [ps, is_delta] : systems) {
        for (int w = 1; w <= maxw; ++w) {
            std::vector<int> sup(static_cast<size_t>(w));
            for (int i = 0; i < w; ++i) sup[i] = i;
            do {
                ++rep.subsets_total;
                ++rep.subsets_checked;
                std::vector<Elem> coeffs(static_cast<size_t>(w), 1);
                // odometer over nonzero coordinates with incremental sums
                std::vector<std::vector<Elem>> partial(static_cast<size_t>(w + 1),
                                                       std::vector<Elem>(static_cast<size_t>(n), 0));
                auto recompute = [&](int lev) {
                    for (int r = 0; r < n; ++r)
                        partial[static_cast<size_t>(lev + 1)][static_cast<size_t>(r)] =
                            add(f, partial[static_cast<size_t>(lev)][static_cast<size_t>(r)],
                                mul(f, coeffs[static_cast<size_t>(lev)],
                                    ps.M.at(r, sup[static_cast<size_t>(lev)])));
                };
                for (int lev = 0; lev < w; ++lev) recompute(lev);
                for (;;) {
                    bool zero = true;
                    for (int r = 0; r < n && zero; ++r)
                        zero = partial[static_cast<size_t>(w)][static_cast<size_t>(r)] == 0;
                    if (zero) {
                        Selection cols(sup.begin(), sup.end());
                        SparseVec v = make_sparse(f, ps, cols, coeffs);
                        if (v.mask == ps.full_rows()) {
                            rep.safe = false;
                            rep.witness = witness_from(f, ps, v, is_delta);
                            rep.elapsed_ms = ms_since(t0);
                            return rep;
                        }
                    }
                    int lev = w - 1;
                    while (lev >= 0 && coeffs[static_cast<size_t>(lev)] == static_cast<Elem>(nz))
                        coeffs[static_cast<size_t>(lev--)] = 1;
                    if (lev < 0) break;
                    ++coeffs[static_cast<size_t>(lev)];
                    for (int l2 = lev; l2 < w; ++l2) recompute(l2);
                }
            } while (next_subset(sup, ell, w));
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

CheckReport check_subsets(const FieldCtx& f, const GammaCandidate& g,
                          const CheckOptions& opts) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.method = "subsets";
    const int n = g.n();
    auto systems = systems_for(f, g);
    const ProbeSystem& ps0 = systems[0].first;
    const int ell = ps0.ell;
    const std::uint8_t full = ps0.full_rows();

    auto process = [&](const Selection& cols) -> bool {
        ++rep.subsets_total;
        if (opts.use_skip) {
            std::uint8_t u = 0;
            for (int c : cols) u |= ps0.l_support[static_cast<size_t>(c)];
            if (u != full) {
                ++rep.subsets_skipped;
                return false;
            }
        }
        ++rep.subsets_checked;
        for (auto& [ps, is_delta] : systems) {
            if (auto v = kernel_violation(f, ps, cols)) {
                rep.safe = false;
                rep.witness = witness_from(f, ps, *v, is_delta);
                if (opts.priority) opts.priority->record(cols);
                return true;
            }
        }
        return false;
    };

    std::unordered_set<std::uint64_t> visited;
    if (opts.priority && !opts.priority->entries.empty()) {
        for (const auto* e : opts.priority->ordered()) {
            if (static_cast<int>(e->columns.size()) != n) continue;
            if (e->columns.back() >= ell) continue;
            visited.insert(PriorityCache::key(e->columns));
            if (process(e->columns)) {
                rep.elapsed_ms = ms_since(t0);
                return rep;
            }
        }
    }

    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[i] = i;
    do {
        Selection cols(idx.begin(), idx.end());
        if (!visited.empty() && visited.count(PriorityCache::key(cols))) continue;
        if (process(cols)) {
            rep.elapsed_ms = ms_since(t0);
            return rep;
        }
    } while (next_subset(idx, ell, n));
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

namespace {

// Depth-first incremental reducer over column subsets of one probe system.
struct BatchRunner {
    const FieldCtx& f;
    const ProbeSystem& ps;
    const int n;
    const int ell;
    const std::uint8_t full;
    std::vector<std::vector<Elem>> R;          // reduced matrix per depth
    std::vector<std::pair<int, int>> pivots;   // (row, column)
    std::uint32_t pivot_rows = 0;
    std::vector<SparseVec> kvecs;
    std::uint64_t extensions = 0;
    std::optional<SparseVec> found;

    BatchRunner(const FieldCtx& fld, const ProbeSystem& sys)
        : f(fld), ps(sys), n(sys.n), ell(sys.ell), full(sys.full_rows()) {
        R.assign(static_cast<size_t>(std::max(n, 1)),
                 std::vector<Elem>(static_cast<size_t>(n) * ell, 0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < ell; ++c)
                R[0][static_cast<size_t>(r) * ell + c] = ps.M.at(r, c);
    }

    bool dependent(const std::vector<Elem>& rm, int c) const {
        for (int r = 0; r < n; ++r)
            if (!(pivot_rows >> r & 1) && rm[static_cast<size_t>(r) * ell + c] != 0)
                return false;
        return true;
    }

    SparseVec kernel_vec(const std::vector<Elem>& rm, int c) const {
        Selection cols{c};
        std::vector<Elem> coeffs{1};
        for (auto [pr, pc] : pivots) {
            Elem v = rm[static_cast<size_t>(pr) * ell + c];
            if (v != 0) {
                cols.push_back(pc);
                coeffs.push_back(v);
            }
        }
        return make_sparse(f, ps, std::move(cols), std::move(coeffs));
    }

    bool try_violation() {
        if (auto w = full_weight_combination(f, ps, kvecs)) {
            found = w;
            return true;
        }
        return false;
    }

    bool dfs(int depth, int start, std::uint8_t row_status) {
        // reduced matrices are stacked per pivot, not per subset element:
        // dependent columns extend the subset without changing the reduction
        std::vector<Elem>& rm = R[pivots.size()];
        if (depth == n - 1) {
            for (int c = start; c < ell; ++c) {
                ++extensions;
                if (!dependent(rm, c)) continue;
                SparseVec kv = kernel_vec(rm, c);
                if ((row_status | kv.mask) == full) {
                    kvecs.push_back(std::move(kv));
                    if (try_violation()) return true;
                    kvecs.pop_back();
                }
            }
            return false;
        }
        for (int c = start; c < ell; ++c) {
            if (dependent(rm, c)) {
                SparseVec kv = kernel_vec(rm, c);
                std::uint8_t ns = row_status | kv.mask;
                kvecs.push_back(std::move(kv));
                if (ns == full && try_violation()) return true;
                if (dfs(depth + 1, c + 1, ns)) return true;
                kvecs.pop_back();
            } else {
                int pr = -1;
                for (int r = 0; r < n; ++r)
                    if (!(pivot_rows >> r & 1) && rm[static_cast<size_t>(r) * ell + c] != 0) {
                        pr = r;
                        break;
                    }
                std::vector<Elem>& nx = R[pivots.size() + 1];
                Elem iv = inv(f, rm[static_cast<size_t>(pr) * ell + c]);
                for (int j = c + 1; j < ell; ++j)
                    nx[static_cast<size_t>(pr) * ell + j] =
                        mul(f, iv, rm[static_cast<size_t>(pr) * ell + j]);
                for (int r = 0; r < n; ++r) {
                    if (r == pr) continue;
                    Elem fac = rm[static_cast<size_t>(r) * ell + c];
                    if (fac == 0) {
                        for (int j = c + 1; j < ell; ++j)
                            nx[static_cast<size_t>(r) * ell + j] =
                                rm[static_cast<size_t>(r) * ell + j];
                    } else {
                        for (int j = c + 1; j < ell; ++j)
                            nx[static_cast<size_t>(r) * ell + j] =
                                add(f, rm[static_cast<size_t>(r) * ell + j],
                                    mul(f, fac, nx[static_cast<size_t>(pr) * ell + j]));
                    }
                }
                pivots.emplace_back(pr, c);
                pivot_rows |= 1u << pr;
                if (dfs(depth + 1, c + 1, row_status)) return true;
                pivots.pop_back();
                pivot_rows &= ~(1u << pr);
            }
        }
        return false;
    }
};

}  // namespace

CheckReport check_batch(const FieldCtx& f, const GammaCandidate& g,
                        const CheckOptions& opts) {
    (void)opts;
    auto t0 = Clock::now();
    CheckReport rep;
    rep.method = "batch";
    const int n = g.n();
    auto systems = systems_for(f, g);
    for (auto& [ps, is_delta] : systems) {
        rep.subsets_total += binomial(ps.ell, n);
        BatchRunner runner(f, ps);
        bool unsafe = runner.dfs(0, 0, 0);
        rep.subsets_checked += runner.extensions;
        if (unsafe) {
            rep.safe = false;
            rep.witness = witness_from(f, ps, *runner.found, is_delta);
            break;
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

CheckReport check_safepp(const FieldCtx& f, const GammaCandidate& g) {
    auto t0 = Clock::now();
    const int n = g.n();
    if (f.order <= static_cast<std::uint32_t>(n) + 1)
        throw std::invalid_argument("field too small for the triangular-part equivalence");
    CheckReport rep;
    rep.method = "safepp";

    bool unsafe = false;
    for (int kk = 1; kk <= n && !unsafe; ++kk) {
        std::vector<int> csel(static_cast<size_t>(kk));
        for (int i = 0; i < kk; ++i) csel[i] = i;
        do {
            Selection sel(csel.begin(), csel.end());
            GammaCandidate sub{g.scheme, g.d, select_cols(g.gamma, sel)};
            auto systems = systems_for(f, sub);
            for (auto& [ps, is_delta] : systems) {
                TPartViews t = tpart_views(ps);
                const std::uint8_t tfull = static_cast<std::uint8_t>((1u << kk) - 1);
                std::vector<int> tsel(static_cast<size_t>(kk));
                for (int i = 0; i < kk; ++i) tsel[i] = i;
                do {
                    ++rep.subsets_total;
                    std::uint8_t u = 0;
                    for (int c : tsel) u |= t.l_support[static_cast<size_t>(c)];
                    if (u != tfull) {
                        ++rep.subsets_skipped;
                        continue;
                    }
                    ++rep.subsets_checked;
                    Selection cols(tsel.begin(), tsel.end());
                    Mat subm = select_cols(t.M, cols);
                    Mat basis = kernel_basis(f, subm);
                    if (basis.cols == 0) continue;
                    std::uint8_t cover = 0;
                    for (int j = 0; j < basis.cols && cover != tfull; ++j) {
                        Elem slots[8][8] = {};
                        for (int i = 0; i < basis.rows; ++i) {
                            Elem v = basis.at(i, j);
                            if (v == 0) continue;
                            int c = cols[static_cast<size_t>(i)];
                            std::uint8_t sup = t.l_support[static_cast<size_t>(c)];
                            int slot = t.l_slot[static_cast<size_t>(c)];
                            for (int r = 0; r < kk; ++r)
                                if (sup >> r & 1) slots[r][slot] = add(f, slots[r][slot], v);
                        }
                        for (int r = 0; r < kk; ++r)
                            for (int s = 0; s < ps.d + 2; ++s)
                                if (slots[r][s] != 0) {
                                    cover |= static_cast<std::uint8_t>(1u << r);
                                    break;
                                }
                    }
                    if (cover == tfull) {
                        unsafe = true;
                        break;
                    }
                } while (!unsafe && next_subset(tsel, t.M.cols, kk));
                if (unsafe) break;
            }
            if (unsafe) break;
        } while (next_subset(csel, n, kk));
    }

    if (unsafe) {
        CheckReport wrep = check_batch(f, g);
        if (wrep.safe)
            throw std::logic_error("triangular-part and batch checkers disagree");
        rep.safe = false;
        rep.witness = wrep.witness;
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

namespace {

// Matrix-level sufficient conditions for n <= 3; one-directional.
bool fast_small_matrix_ok(const FieldCtx& f, const Mat& m, int n) {
    if (n == 1) {
        for (int r = 0; r < m.rows; ++r)
            if (m.at(r, 0) == 0) return false;
        return true;
    }
    for (int sz = 1; sz <= n; ++sz) {
        std::vector<int> rsel(static_cast<size_t>(sz));
        for (int i = 0; i < sz; ++i) rsel[i] = i;
        do {
            std::vector<int> cs(static_cast<size_t>(sz));
            for (int i = 0; i < sz; ++i) cs[i] = i;
            do {
                Mat sub(sz, sz);
                for (int i = 0; i < sz; ++i)
                    for (int j = 0; j < sz; ++j)
                        sub.at(i, j) = m.at(rsel[static_cast<size_t>(i)],
                                            cs[static_cast<size_t>(j)]);
                if (!is_invertible(f, sub)) return false;
            } while (next_subset(cs, n, sz));
        } while (next_subset(rsel, m.rows, sz));
    }
    if (n == 3) {
        for (int i = 0; i < m.rows; ++i)
            for (int j = i + 1; j < m.rows; ++j)
                for (int k2 = 0; k2 < m.rows; ++k2) {
                    if (k2 == i || k2 == j) continue;
                    Mat x(3, 3);
                    for (int r = 0; r < 3; ++r) {
                        x.at(r, 0) = m.at(i, r);
                        x.at(r, 1) = m.at(j, r);
                    }
                    x.at(0, 2) = m.at(k2, 0);
                    x.at(1, 2) = m.at(k2, 1);
                    x.at(2, 2) = 0;
                    if (!is_invertible(f, x)) return false;
                }
    }
    return true;
}

}  // namespace

std::optional<CheckReport> check_fast_small(const FieldCtx& f, const GammaCandidate& g) {
    const int n = g.n();
    if (n > 3) throw std::invalid_argument("fast-small path requires n <= 3");
    auto t0 = Clock::now();

    bool ok = fast_small_matrix_ok(f, g.gamma, n);
    if (ok && g.scheme == Scheme::alg4)
        ok = fast_small_matrix_ok(f, delta_candidate(f, g).gamma, n);
    if (!ok) return std::nullopt;
    CheckReport rep;
    rep.method = "analytic";
    rep.safe = true;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

CheckReport check(const FieldCtx& f, const GammaCandidate& g, Method method,
                  const CheckOptions& opts) {
    switch (method) {
        case Method::oracle:
            return check_oracle(f, g, {}, opts.work_bound);
        case Method::subsets:
            return check_subsets(f, g, opts);
        case Method::batch:
            return check_batch(f, g, opts);
        case Method::safepp:
            return check_safepp(f, g);
        case Method::automatic:
            break;
    }
    if (g.n() <= 3)
        if (auto rep = check_fast_small(f, g)) return *rep;
    return check_batch(f, g, opts);
}

bool verify_witness(const FieldCtx& f, const GammaCandidate& g, const Witness& w) {
    if (w.columns.empty() || w.columns.size() != w.v.size()) return false;
    GammaCandidate sys = w.delta ? delta_candidate(f, g) : g;
    ProbeSystem ps = build_probe_system(f, sys);
    if (!selection_valid(w.columns, ps.ell)) return false;
    int weight = 0;
    for (Elem c : w.v)
        if (c != 0) ++weight;
    if (weight == 0 || weight > ps.n) return false;
    for (int r = 0; r < ps.n; ++r) {
        Elem acc = 0;
        for (size_t i = 0; i < w.columns.size(); ++i)
            acc = add(f, acc, mul(f, w.v[i], ps.M.at(r, w.columns[i])));
        if (acc != 0) return false;
    }
    for (int r = 0; r <= ps.n; ++r) {
        auto slots = symbolic_product_entry(f, ps, r, w.columns, w.v);
        bool nonzero = false;
        for (Elem s : slots) nonzero = nonzero || s != 0;
        if (!nonzero) return false;
    }
    return true;
}

std::pair<std::uint64_t, std::uint64_t> filter_count(int d) {
    FieldCtx f = ctx_new(1);
    Mat ones(d + 1, d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j < d; ++j) ones.at(i, j) = 1;
    GammaCandidate g = make_candidate(f, Scheme::alg4, d, ones);
    ProbeSystem ps = build_probe_system(f, g);
    const std::uint8_t full = ps.full_rows();

    std::uint64_t kept = 0, total = 0;
    std::vector<int> idx(static_cast<size_t>(d));
    std::vector<std::uint8_t> stack(static_cast<size_t>(d + 1), 0);
    // DFS over increasing index tuples with running mask union
    int depth = 0;
    idx[0] = -1;
    while (depth >= 0) {
        int c = ++idx[static_cast<size_t>(depth)];
        if (c > ps.ell - (d - depth)) {
            --depth;
            continue;
        }
        std::uint8_t u = static_cast<std::uint8_t>(stack[static_cast<size_t>(depth)] |
                                                   ps.l_support[static_cast<size_t>(c)]);
        if (depth == d - 1) {
            ++total;
            if (u == full) ++kept;
        } else {
            stack[static_cast<size_t>(depth + 1)] = u;
            ++depth;
            idx[static_cast<size_t>(depth)] = c;
        }
    }
    return {kept, total};
}

nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json j{{"verdict", r.safe ? "safe" : "unsafe"},
                     {"method", r.method},
                     {"subsets_total", r.subsets_total},
                     {"subsets_skipped", r.subsets_skipped},
                     {"subsets_checked", r.subsets_checked},
                     {"elapsed_ms", r.elapsed_ms}};
    if (r.witness) {
        nlohmann::json cols = nlohmann::json::array();
        for (int c : r.witness->columns) cols.push_back(c + 1);
        nlohmann::json vs = nlohmann::json::array();
        for (Elem v : r.witness->v) vs.push_back(elem_to_hex(v));
        j["witness"] = {{"columns", std::move(cols)},
                        {"v", std::move(vs)},
                        {"matrix", r.witness->delta ? "delta" : "gamma"},
                        {"product", r.witness->product}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace maskmat
