#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maskmat/linalg.hpp"

namespace maskmat {

enum class Scheme { alg4, alg5 };

const char* scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

// Instantiation candidate: gamma is (d+1) x n with the unified row 0 first.
// n < d is allowed (column sub-candidates used by the small-order theory).
// alg4 requires row 0 all ones; alg5 requires every column to sum to zero.
struct GammaCandidate {
    Scheme scheme = Scheme::alg4;
    int d = 0;
    Mat gamma;

    int n() const { return gamma.cols; }
};

// Validates the invariants above (throws std::invalid_argument).
GammaCandidate make_candidate(const FieldCtx& f, Scheme scheme, int d, Mat gamma);

// alg4 companion candidate: row 0 stays all ones, rows 1..d become J - A.
GammaCandidate delta_candidate(const FieldCtx& f, const GammaCandidate& g);

// Symbolic entry of the share-indicator matrix: 0, 1, or omega_j. The alg4
// system uses plain ones; the alg5 system tags entries with omega_0..omega_d.
struct LEntry {
    enum Kind { zero, one, omega } kind = zero;
    int j = -1;  // omega index when kind == omega
};

// Probe system for one candidate:
//   M is n x ell over K, ell = 2dn + 4n + 1;
//   the share-indicator matrix has n+1 rows; per column c its nonzero
//   entries all carry one tag, stored as a row-support bitmask
//   (l_support[c], bit r = row r) plus a slot id (l_slot[c]: 0 for plain 1,
//   1+j for omega_j).
//
// Column layout (0-based):
//   0                       zero column            support {0}
//   1+i,        i < n       zero columns           support {1+i}
//   n+1+i,      i < n       e_i                    support {}
//   2n+1+j*n+i             gamma[j][i] * e_i       support {1+i}, slot(j)
//   2n+1+(d+1)n+j*n+i      prefix column           support {0,1..i+1}, slot(j)
// where the prefix column holds gamma[j][0..i] in rows 0..i and slot(j) is
// 0 for alg4 and 1+j for alg5.
struct ProbeSystem {
    int d = 0;
    int n = 0;
    int ell = 0;
    bool tagged = false;  // alg5: entries carry omega tags
    Mat M;
    std::vector<std::uint8_t> l_support;
    std::vector<std::int8_t> l_slot;

    std::uint8_t full_rows() const {
        return static_cast<std::uint8_t>((1u << (n + 1)) - 1);
    }
};

ProbeSystem build_probe_system(const FieldCtx& f, const GammaCandidate& g);

// Entry (row, col) of the share-indicator matrix.
LEntry l_entry(const ProbeSystem& ps, int row, int col);

// Triangular part: the bottom-right n x (d+1)n block of M and the matching
// share-indicator columns with their top row dropped (supports shifted down
// one row, so masks cover rows 0..n-1).
struct TPartViews {
    Mat M;
    std::vector<std::uint8_t> l_support;
    std::vector<std::int8_t> l_slot;
};

TPartViews tpart_views(const ProbeSystem& ps);

// Number of omega slots needed for products over this system (slot 0 plain,
// slots 1..d+1 for omega_0..omega_d).
inline int product_slots(const ProbeSystem& ps) { return ps.d + 2; }

// Row `row` of (share-indicator matrix) * v for the sparse vector v given by
// parallel (columns, coeffs); returns the (d+2)-slot coefficient vector.
std::vector<Elem> symbolic_product_entry(const FieldCtx& f, const ProbeSystem& ps,
                                         int row, const Selection& columns,
                                         const std::vector<Elem>& coeffs);

// Renders a tagged slot vector, e.g. "3 + 5*w0 + 1*w2" (internal debug aid).
std::string render_slots(const std::vector<Elem>& slots);

// Debug dump of the block structure with per-block labels.
std::string dump_probe_system(const ProbeSystem& ps);

}  // namespace maskmat
