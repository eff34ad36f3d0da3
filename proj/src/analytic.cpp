#include "maskmat/analytic.hpp"

#include <set>
#include <stdexcept>

#include "maskmat/structures.hpp"

namespace maskmat {

namespace {

// Terms written as packed variable tokens ("x2y1y3" = x2*y1*y3), one
// string per polynomial. Kept in this spelled-out form so the tables can
// be proofread token by token.
const char* const kAlg4Polys[] = {
    "x2x3 y1y2 x2y3 x3y3 y1y3 y2y3",
    "x2x3 x3y1 x3y2 y1y2 x2y3 x3y3",
    "x2x3 x2y1 x2y2 y1y2 x2y3 x3y3",
    "x1x3 y1y2 x1y3 x3y3 y1y3 y2y3",
    "x1x3 x3y1 x3y2 y1y2 x1y3 x3y3",
    "x1x3 x1y1 x1y2 y1y2 x1y3 x3y3",
    "x1x2 y1y2 x1y3 x2y3 y1y3 y2y3",
    "x1x2 x2y1 x2y2 y1y2 x1y3 x2y3",
    "x1x2 x1y1 x1y2 y1y2 x1y3 x2y3",
    "x2y1y2 x3y1y2 x2x3y3 x3y1y3 x3y2y3 y1y2y3",
    "x2y1y2 x3y1y2 x2x3y3 x2y1y3 x2y2y3 y1y2y3",
    "x1y1y2 x3y1y2 x1x3y3 x3y1y3 x3y2y3 y1y2y3",
    "x1y1y2 x3y1y2 x1x3y3 x1y1y3 x1y2y3 y1y2y3",
    "x1y1y2 x2y1y2 x1x2y3 x2y1y3 x2y2y3 y1y2y3",
    "x1y1y2 x2y1y2 x1x2y3 x1y1y3 x1y2y3 y1y2y3",
    "x2x3y1 x2x3y2 x2y1y2 x3y1y2 x2x3y3 y1y2y3",
    "x1x3y1 x1x3y2 x1y1y2 x3y1y2 x1x3y3 y1y2y3",
    "x1x2y1 x1x2y2 x1y1y2 x2y1y2 x1x2y3 y1y2y3",
    "x1x2x3 x2x3y1 x2x3y2 x1y1y2 x2y1y2 x3y1y2 x1x2y3 x1x3y3 x2x3y3 x1y1y3 x1y2y3 y1y2y3",
    "x1x2x3 x1x3y1 x1x3y2 x1y1y2 x2y1y2 x3y1y2 x1x2y3 x1x3y3 x2x3y3 x2y1y3 x2y2y3 y1y2y3",
    "x1x2x3 x1x2y1 x1x2y2 x1y1y2 x2y1y2 x3y1y2 x1x2y3 x1x3y3 x2x3y3 x3y1y3 x3y2y3 y1y2y3",
};

const char* const kAlg5Polys[] = {
    "x2x3x4 x3x4y1 x3x4y2 x2y1y2 x3y1y2 x4y1y2 x2x3y3 x2x4y3 x3x4y3 x2y1y3 x2y2y3 y1y2y3",
    "x2x3x4 x2x4y1 x2x4y2 x2y1y2 x3y1y2 x4y1y2 x2x3y3 x2x4y3 x3x4y3 x3y1y3 x3y2y3 y1y2y3",
    "x2x3x4 x2x3y1 x2x3y2 x2y1y2 x3y1y2 x4y1y2 x2x3y3 x2x4y3 x3x4y3 x4y1y3 x4y2y3 y1y2y3",
    "x1x3x4 x3x4y1 x3x4y2 x1y1y2 x3y1y2 x4y1y2 x1x3y3 x1x4y3 x3x4y3 x1y1y3 x1y2y3 y1y2y3",
    "x1x3x4 x1x4y1 x1x4y2 x1y1y2 x3y1y2 x4y1y2 x1x3y3 x1x4y3 x3x4y3 x3y1y3 x3y2y3 y1y2y3",
    "x1x3x4 x1x3y1 x1x3y2 x1y1y2 x3y1y2 x4y1y2 x1x3y3 x1x4y3 x3x4y3 x4y1y3 x4y2y3 y1y2y3",
    "x1x2x4 x2x4y1 x2x4y2 x1y1y2 x2y1y2 x4y1y2 x1x2y3 x1x4y3 x2x4y3 x1y1y3 x1y2y3 y1y2y3",
    "x1x2x4 x1x4y1 x1x4y2 x1y1y2 x2y1y2 x4y1y2 x1x2y3 x1x4y3 x2x4y3 x2y1y3 x2y2y3 y1y2y3",
    "x1x2x4 x1x2y1 x1x2y2 x1y1y2 x2y1y2 x4y1y2 x1x2y3 x1x4y3 x2x4y3 x4y1y3 x4y2y3 y1y2y3",
    "x1x2x3 x2x3y1 x2x3y2 x1y1y2 x2y1y2 x3y1y2 x1x2y3 x1x3y3 x2x3y3 x1y1y3 x1y2y3 y1y2y3",
    "x1x2x3 x1x3y1 x1x3y2 x1y1y2 x2y1y2 x3y1y2 x1x2y3 x1x3y3 x2x3y3 x2y1y3 x2y2y3 y1y2y3",
    "x1x2x3 x1x2y1 x1x2y2 x1y1y2 x2y1y2 x3y1y2 x1x2y3 x1x3y3 x2x3y3 x3y1y3 x3y2y3 y1y2y3",
};

int var_index(char base, char digit, int nx, int ny) {
    int idx = digit - '1';
    if (base == 'x' && idx >= 0 && idx < nx) return idx;
    if (base == 'y' && idx >= 0 && idx < ny) return 4 + idx;
    throw std::logic_error("bad variable token in polynomial table");
}

Poly parse_poly(const char* s, int nx, int ny) {
    Poly p;
    PolyTerm term;
    while (*s) {
        if (*s == ' ') {
            p.push_back(term);
            term.clear();
            ++s;
            continue;
        }
        term.push_back(var_index(s[0], s[1], nx, ny));
        s += 2;
    }
    p.push_back(term);
    return p;
}

PolySystem build_system(Scheme scheme) {
    PolySystem sys;
    sys.scheme = scheme;
    sys.nx = scheme == Scheme::alg4 ? 3 : 4;
    sys.ny = 3;
    const char* const* table = scheme == Scheme::alg4 ? kAlg4Polys : kAlg5Polys;
    size_t count = scheme == Scheme::alg4 ? std::size(kAlg4Polys) : std::size(kAlg5Polys);
    for (size_t i = 0; i < count; ++i)
        sys.polys.push_back(parse_poly(table[i], sys.nx, sys.ny));

    // shape checksum against transcription slips
    int d2t6 = 0, d3t6 = 0, d3t12 = 0;
    for (const Poly& p : sys.polys) {
        size_t deg = 0;
        for (const PolyTerm& t : p) deg = std::max(deg, t.size());
        for (const PolyTerm& t : p)
            if (t.empty() || t.size() > deg) throw std::logic_error("ragged polynomial");
        if (deg == 2 && p.size() == 6)
            ++d2t6;
        else if (deg == 3 && p.size() == 6)
            ++d3t6;
        else if (deg == 3 && p.size() == 12)
            ++d3t12;
        else
            throw std::logic_error("unexpected polynomial shape");
    }
    bool ok = scheme == Scheme::alg4 ? (d2t6 == 9 && d3t6 == 9 && d3t12 == 3)
                                     : (d2t6 == 0 && d3t6 == 0 && d3t12 == 12);
    if (!ok) throw std::logic_error("polynomial system shape mismatch");
    return sys;
}

}  // namespace

const PolySystem& analytic_system(Scheme scheme) {
    static const PolySystem a4 = build_system(Scheme::alg4);
    static const PolySystem a5 = build_system(Scheme::alg5);
    return scheme == Scheme::alg4 ? a4 : a5;
}

std::vector<Elem> eval_poly_system_each(const FieldCtx& f, const PolySystem& sys,
                                        const std::vector<Elem>& xs,
                                        const std::vector<Elem>& ys) {
    if (static_cast<int>(xs.size()) != sys.nx || static_cast<int>(ys.size()) != sys.ny)
        throw std::invalid_argument("assignment arity mismatch");
    std::set<Elem> seen;
    for (Elem v : xs) seen.insert(v);
    for (Elem v : ys) seen.insert(v);
    if (seen.size() != xs.size() + ys.size())
        throw std::invalid_argument("assignment values must be pairwise distinct");
    if (sys.scheme == Scheme::alg4 && seen.count(0))
        throw std::invalid_argument("assignment values must be nonzero");

    Elem val[7] = {};
    for (int i = 0; i < sys.nx; ++i) val[i] = xs[static_cast<size_t>(i)];
    for (int i = 0; i < sys.ny; ++i) val[4 + i] = ys[static_cast<size_t>(i)];
    std::vector<Elem> out;
    out.reserve(sys.polys.size());
    for (const Poly& p : sys.polys) {
        Elem acc = 0;
        for (const PolyTerm& t : p) {
            Elem prod = 1;
            for (int v : t) prod = mul(f, prod, val[v]);
            acc = add(f, acc, prod);
        }
        out.push_back(acc);
    }
    return out;
}

bool eval_poly_system(const FieldCtx& f, const PolySystem& sys,
                      const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
    for (Elem v : eval_poly_system_each(f, sys, xs, ys))
        if (v == 0) return false;
    return true;
}

GammaCandidate explicit_construct(const FieldCtx& f, Scheme scheme) {
    if (f.k < 4) throw std::invalid_argument("explicit construction requires k >= 4");
    if (scheme == Scheme::alg4) {
        return construct_precond41(f, {0x1, 0x3, 0x5}, {0x6, 0x4, 0xa});
    }
    return construct_precond51(f, {0x1, 0x2, 0x5, 0x6}, {0x4, 0x7, 0xf});
}

std::string poly_to_string(const Poly& p) {
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out += " + ";
        for (size_t j = 0; j < p[i].size(); ++j) {
            if (j) out += "*";
            int v = p[i][j];
            out += v < 4 ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - 3);
        }
    }
    return out;
}

}  // namespace maskmat
