#include "maskmat/structures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace maskmat {

namespace {

void require_distinct(const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
    std::set<Elem> seen;
    for (Elem v : xs)
        if (!seen.insert(v).second)
            throw std::invalid_argument("cauchy parameters must be pairwise distinct");
    for (Elem v : ys)
        if (!seen.insert(v).second)
            throw std::invalid_argument("cauchy parameters must be pairwise distinct");
}

// Iterates strictly increasing index subsets of size sz over [0, n).
bool next_subset(std::vector<int>& idx, int n, int sz) {
    int i = sz - 1;
    while (i >= 0 && idx[i] == n - sz + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
    return true;
}

bool all_square_submatrices_invertible(const FieldCtx& f, const Mat& m) {
    int maxsz = std::min(m.rows, m.cols);
    for (int sz = 1; sz <= maxsz; ++sz) {
        std::vector<int> rsel(sz), csel(sz);
        for (int i = 0; i < sz; ++i) rsel[i] = i;
        do {
            for (int i = 0; i < sz; ++i) csel[i] = i;
            do {
                Mat sub(sz, sz);
                for (int i = 0; i < sz; ++i)
                    for (int j = 0; j < sz; ++j) sub.at(i, j) = m.at(rsel[i], csel[j]);
                if (!is_invertible(f, sub)) return false;
            } while (next_subset(csel, m.cols, sz));
        } while (next_subset(rsel, m.rows, sz));
    }
    return true;
}

Mat ones_extended(const Mat& m) {
    Mat ext(m.rows + 1, m.cols);
    for (int c = 0; c < m.cols; ++c) ext.at(0, c) = 1;
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) ext.at(r + 1, c) = m.at(r, c);
    return ext;
}

}  // namespace

Mat cauchy_matrix(const FieldCtx& f, const CauchySpec& spec) {
    require_distinct(spec.xs, spec.ys);
    int rows = static_cast<int>(spec.xs.size());
    int cols = static_cast<int>(spec.ys.size());
    if (!spec.row_scale.empty() && static_cast<int>(spec.row_scale.size()) != rows)
        throw std::invalid_argument("row_scale size mismatch");
    if (!spec.col_scale.empty() && static_cast<int>(spec.col_scale.size()) != cols)
        throw std::invalid_argument("col_scale size mismatch");
    Mat out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Elem v = inv(f, add(f, spec.xs[i], spec.ys[j]));
            if (!spec.row_scale.empty()) {
                if (spec.row_scale[i] == 0) throw std::invalid_argument("zero row scale");
                v = mul(f, spec.row_scale[i], v);
            }
            if (!spec.col_scale.empty()) {
                if (spec.col_scale[j] == 0) throw std::invalid_argument("zero column scale");
                v = mul(f, spec.col_scale[j], v);
            }
            out.at(i, j) = v;
        }
    return out;
}

bool is_mds_all_submatrices(const FieldCtx& f, const Mat& m) {
    return all_square_submatrices_invertible(f, m);
}

bool is_row_xmds(const FieldCtx& f, const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("is_row_xmds expects a square matrix");
    Mat ext = ones_extended(m);
    // duplicate rows only show up as singular submatrices from order 2 on,
    // which leaves the one-column case undetected without this check
    for (int i = 0; i < ext.rows; ++i)
        for (int j = i + 1; j < ext.rows; ++j) {
            bool same = true;
            for (int c = 0; c < ext.cols && same; ++c) same = ext.at(i, c) == ext.at(j, c);
            if (same) return false;
        }
    return all_square_submatrices_invertible(f, ext);
}

GammaCandidate construct_precond41(const FieldCtx& f, const std::vector<Elem>& xs,
                                   const std::vector<Elem>& ys) {
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("need d nonzero xs and d nonzero ys");
    require_distinct(xs, ys);
    for (Elem v : xs)
        if (v == 0) throw std::invalid_argument("alg4 parameters must be nonzero");
    for (Elem v : ys)
        if (v == 0) throw std::invalid_argument("alg4 parameters must be nonzero");
    int d = static_cast<int>(xs.size());
    Mat gamma(d + 1, d);
    for (int c = 0; c < d; ++c) gamma.at(0, c) = 1;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gamma.at(i + 1, j) = mul(f, xs[i], inv(f, add(f, xs[i], ys[j])));
    return make_candidate(f, Scheme::alg4, d, std::move(gamma));
}

Mat left_kernel(const FieldCtx& f, const Mat& m) {
    Mat mt(m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) mt.at(c, r) = m.at(r, c);
    Mat basis = kernel_basis(f, mt);
    Mat out(basis.cols, m.rows);
    for (int v = 0; v < basis.cols; ++v)
        for (int r = 0; r < m.rows; ++r) out.at(v, r) = basis.at(r, v);
    return out;
}

GammaCandidate construct_precond51(const FieldCtx& f, const std::vector<Elem>& xs,
                                   const std::vector<Elem>& ys,
                                   const std::vector<Elem>& col_scale) {
    if (xs.size() < 2 || xs.size() != ys.size() + 1)
        throw std::invalid_argument("need d+1 xs and d ys");
    int d = static_cast<int>(ys.size());
    CauchySpec spec{xs, ys, {}, col_scale};
    Mat A = cauchy_matrix(f, spec);
    Mat lk = left_kernel(f, A);
    if (lk.rows != 1) throw std::invalid_argument("left kernel is not one-dimensional");
    for (int i = 0; i <= d; ++i)
        if (lk.at(0, i) == 0)
            throw std::invalid_argument("left kernel vector has a zero entry");
    Elem norm = inv(f, lk.at(0, 0));
    Mat gamma(d + 1, d);
    for (int i = 0; i <= d; ++i) {
        Elem ci = mul(f, norm, lk.at(0, i));
        for (int j = 0; j < d; ++j) gamma.at(i, j) = mul(f, ci, A.at(i, j));
    }
    return make_candidate(f, Scheme::alg5, d, std::move(gamma));
}

bool check_precondition(const FieldCtx& f, const GammaCandidate& g) {
    if (g.scheme == Scheme::alg4) {
        Mat A(g.d, g.n());
        for (int r = 0; r < g.d; ++r)
            for (int c = 0; c < g.n(); ++c) A.at(r, c) = g.gamma.at(r + 1, c);
        Mat D = mat_sub_from_ones(f, A);
        return all_square_submatrices_invertible(f, ones_extended(A)) &&
               all_square_submatrices_invertible(f, ones_extended(D));
    }
    return is_mds_all_submatrices(f, g.gamma);
}

}  // namespace maskmat
