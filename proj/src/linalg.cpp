#include "maskmat/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace maskmat {

bool selection_valid(const Selection& sel, int cols) {
    int prev = -1;
    for (int c : sel) {
        if (c <= prev || c >= cols) return false;
        prev = c;
    }
    return true;
}

Mat select_cols(const Mat& m, const Selection& sel) {
    if (!selection_valid(sel, m.cols))
        throw std::invalid_argument("selection must be strictly increasing within range");
    Mat out(m.rows, static_cast<int>(sel.size()));
    for (int r = 0; r < m.rows; ++r)
        for (int j = 0; j < out.cols; ++j) out.at(r, j) = m.at(r, sel[j]);
    return out;
}

namespace {

// In-place RREF; returns pivot row index per column (-1 for free columns).
std::vector<int> rref(const FieldCtx& f, Mat& m) {
    std::vector<int> piv_of_col(m.cols, -1);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Elem iv = inv(f, m.at(r, c));
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = mul(f, iv, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Elem fac = m.at(i, c);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = add(f, m.at(i, j), mul(f, fac, m.at(r, j)));
        }
        piv_of_col[c] = r;
        ++r;
    }
    return piv_of_col;
}

}  // namespace

Mat kernel_basis(const FieldCtx& f, const Mat& m) {
    Mat red = m;
    std::vector<int> piv = rref(f, red);
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (piv[c] < 0) free_cols.push_back(c);
    Mat basis(m.cols, static_cast<int>(free_cols.size()));
    for (int j = 0; j < basis.cols; ++j) {
        int fc = free_cols[j];
        basis.at(fc, j) = 1;
        for (int c = 0; c < m.cols; ++c)
            if (piv[c] >= 0) basis.at(c, j) = red.at(piv[c], fc);
    }
    return basis;
}

int rank(const FieldCtx& f, const Mat& m) {
    Mat red = m;
    std::vector<int> piv = rref(f, red);
    int r = 0;
    for (int c = 0; c < m.cols; ++c)
        if (piv[c] >= 0) ++r;
    return r;
}

bool is_invertible(const FieldCtx& f, const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("is_invertible needs a square matrix");
    return rank(f, m) == m.rows;
}

Mat mat_mul(const FieldCtx& f, const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
    Mat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int t = 0; t < a.cols; ++t) {
            Elem v = a.at(i, t);
            if (v == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = add(f, out.at(i, j), mul(f, v, b.at(t, j)));
        }
    return out;
}

Mat mat_sub_from_ones(const FieldCtx& f, const Mat& m) {
    Mat out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out.at(r, c) = add(f, 1, m.at(r, c));
    return out;
}

std::string mat_to_text(const Mat& m) {
    std::string out;
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) {
            if (c) out += ' ';
            out += elem_to_hex(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

Mat mat_from_text(const FieldCtx& f, const std::string& text) {
    std::vector<std::vector<Elem>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<Elem> row;
        std::string tok;
        while (ls >> tok) row.push_back(elem_from_hex(f, tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    Mat out(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw std::invalid_argument("ragged matrix text");
        for (size_t c = 0; c < rows[r].size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    }
    return out;
}

nlohmann::json mat_to_json(int k, const Mat& m) {
    nlohmann::json data = nlohmann::json::array();
    for (int r = 0; r < m.rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(elem_to_hex(m.at(r, c)));
        data.push_back(std::move(row));
    }
    return {{"k", k}, {"rows", m.rows}, {"cols", m.cols}, {"data", std::move(data)}};
}

Mat mat_from_json(const FieldCtx& f, const nlohmann::json& j) {
    if (j.at("k").get<int>() != f.k)
        throw std::invalid_argument("matrix JSON field degree mismatch");
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    const auto& data = j.at("data");
    if (static_cast<int>(data.size()) != rows)
        throw std::invalid_argument("matrix JSON row count mismatch");
    Mat out(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(data[r].size()) != cols)
            throw std::invalid_argument("matrix JSON column count mismatch");
        for (int c = 0; c < cols; ++c)
            out.at(r, c) = elem_from_hex(f, data[r][c].get<std::string>());
    }
    return out;
}

}  // namespace maskmat
