#pragma once

#include <optional>
#include <vector>

#include "maskmat/probes.hpp"

namespace maskmat {

// Parameters of a (generalized) Cauchy matrix: entry (i,j) is
// row_scale[i] * col_scale[j] / (xs[i] + ys[j]). Empty scale vectors mean
// no scaling. All xs and ys must be pairwise distinct (union-wise).
struct CauchySpec {
    std::vector<Elem> xs;
    std::vector<Elem> ys;
    std::vector<Elem> row_scale;
    std::vector<Elem> col_scale;
};

Mat cauchy_matrix(const FieldCtx& f, const CauchySpec& spec);

// True iff every square submatrix (all sizes, all row/column subsets) is
// invertible. Exponential in min(rows, cols); fine for the orders here.
bool is_mds_all_submatrices(const FieldCtx& f, const Mat& m);

// Square input only: all square submatrices of [ones-row; m] invertible.
bool is_row_xmds(const FieldCtx& f, const Mat& m);

// alg4 construction: 2d pairwise distinct nonzero xs, ys; the candidate is
// the all-ones row over A with A[i][j] = x_i / (x_i + y_j). Both A and
// J - A then satisfy the alg4 precondition.
GammaCandidate construct_precond41(const FieldCtx& f, const std::vector<Elem>& xs,
                                   const std::vector<Elem>& ys);

// alg5 construction: 2d+1 pairwise distinct xs (d+1 of them) and ys (d),
// zero allowed. Builds the (d+1) x d Cauchy matrix, scales its rows by the
// unique left-kernel vector normalized to first entry 1, and returns the
// resulting zero-column-sum candidate. An optional column scaling (nonzero
// entries) preserves both the zero sums and the MDS property.
GammaCandidate construct_precond51(const FieldCtx& f, const std::vector<Elem>& xs,
                                   const std::vector<Elem>& ys,
                                   const std::vector<Elem>& col_scale = {});

// alg4: rows 1..d and their J - A companion are both row-XMDS (checked on
// rectangular shapes as all square submatrices of the ones-extended block).
// alg5: all square submatrices of gamma invertible.
bool check_precondition(const FieldCtx& f, const GammaCandidate& g);

// Left kernel basis vectors as rows (kernel of the transpose).
Mat left_kernel(const FieldCtx& f, const Mat& m);

}  // namespace maskmat
