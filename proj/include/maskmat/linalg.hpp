#pragma once

#include <string>
#include <vector>

#include "maskmat/field.hpp"

#include <json.hpp>

namespace maskmat {

// Dense row-major matrix over one field context. Dimensions stay small
// (at most a few hundred columns), so no blocking or sparsity.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    Elem& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Elem at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    bool operator==(const Mat&) const = default;
};

// Strictly increasing 0-based column indices.
using Selection = std::vector<int>;

bool selection_valid(const Selection& sel, int cols);

Mat select_cols(const Mat& m, const Selection& sel);

// Right kernel basis, returned as a matrix whose columns are the basis
// vectors (cols == nullity). Reduction is deterministic: columns are swept
// left to right, the pivot is the first unprocessed row with a nonzero
// entry (swapped upward), and each free variable is normalized to 1 in its
// basis vector. An invertible input yields a 0-column result.
Mat kernel_basis(const FieldCtx& f, const Mat& m);

int rank(const FieldCtx& f, const Mat& m);
bool is_invertible(const FieldCtx& f, const Mat& m);

Mat mat_mul(const FieldCtx& f, const Mat& a, const Mat& b);

// J - A entrywise; over characteristic 2 this flips the low bit pattern
// against the all-ones matrix.
Mat mat_sub_from_ones(const FieldCtx& f, const Mat& m);

// Text format: one row per line, entries as whitespace-separated lowercase
// hex. Parsing accepts ragged spacing but requires rectangular shape.
std::string mat_to_text(const Mat& m);
Mat mat_from_text(const FieldCtx& f, const std::string& text);

// JSON: {"k":8,"rows":4,"cols":3,"data":[["e3","b7","50"],...]}
nlohmann::json mat_to_json(int k, const Mat& m);
Mat mat_from_json(const FieldCtx& f, const nlohmann::json& j);

}  // namespace maskmat
