#include "maskmat/field.hpp"

#include <cstdio>
#include <stdexcept>

namespace maskmat {

std::uint32_t default_ipoly(int k) {
    static const std::uint32_t tab[17] = {
        0,       0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,
        0x11b,   0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003,
        0x1002b};
    if (k < 1 || k > 16) throw std::invalid_argument("field degree must be in [1,16]");
    return tab[k];
}

Elem clmul_reduce(int k, std::uint32_t ipoly, Elem a, Elem b) {
    std::uint32_t acc = 0;
    std::uint32_t aa = a;
    for (std::uint32_t bb = b; bb; bb >>= 1) {
        if (bb & 1) acc ^= aa;
        aa <<= 1;
    }
    for (int bit = 2 * k - 2; bit >= k; --bit)
        if (acc >> bit & 1) acc ^= ipoly << (bit - k);
    return static_cast<Elem>(acc & ((1u << k) - 1));
}

namespace {

// Degree of a nonzero polynomial bitmask.
int poly_deg(std::uint32_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
    int dm = poly_deg(m);
    for (int da = poly_deg(a); da >= dm; --da)
        if (a >> da & 1) a ^= m << (da - dm);
    return a;
}

bool poly_irreducible(int k, std::uint32_t p) {
    if (poly_deg(p) != k) return false;
    for (std::uint32_t q = 2; poly_deg(q) <= k / 2; ++q)
        if (poly_mod(p, q) == 0) return false;
    return true;
}

FieldCtx build(int k, std::uint32_t ipoly) {
    FieldCtx f;
    f.k = k;
    f.ipoly = ipoly;
    f.order = 1u << k;
    const std::uint32_t qm1 = f.order - 1;
    f.log_tab.assign(f.order, 0);
    f.exp_tab.assign(2 * qm1, 0);
    if (k == 1) {
        f.generator = 1;
        f.exp_tab[0] = 1;
        f.exp_tab[1] = 1;
        f.log_tab[1] = 0;
        return f;
    }
    for (std::uint32_t g = 2; g < f.order; ++g) {
        std::vector<Elem> logs(f.order, 0);
        Elem p = 1;
        std::uint32_t i = 0;
        for (; i < qm1; ++i) {
            if (p == 1 && i > 0) break;  // g has order i < q-1
            f.exp_tab[i] = p;
            logs[p] = static_cast<Elem>(i);
            p = clmul_reduce(k, ipoly, p, static_cast<Elem>(g));
        }
        if (i == qm1 && p == 1) {
            f.generator = static_cast<Elem>(g);
            f.log_tab = std::move(logs);
            for (std::uint32_t j = 0; j < qm1; ++j) f.exp_tab[qm1 + j] = f.exp_tab[j];
            return f;
        }
    }
    throw std::logic_error("no generator found; modulus not irreducible?");
}

}  // namespace

FieldCtx ctx_new(int k) { return build(k, default_ipoly(k)); }

FieldCtx ctx_new(int k, std::uint32_t ipoly) {
    if (k < 1 || k > 16) throw std::invalid_argument("field degree must be in [1,16]");
    if (!poly_irreducible(k, ipoly))
        throw std::invalid_argument("modulus is not an irreducible polynomial of degree k");
    return build(k, ipoly);
}

Elem inv(const FieldCtx& f, Elem a) {
    debug_check_elem(f, a);
    if (a == 0) throw std::domain_error("inverse of zero");
    if (a == 1) return 1;
    return f.exp_tab[f.order - 1 - f.log_tab[a]];
}

std::string elem_to_hex(Elem v) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%x", static_cast<unsigned>(v));
    return buf;
}

Elem elem_from_hex(const FieldCtx& f, std::string_view tok) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string_view::npos) throw std::invalid_argument("empty hex token");
    tok = tok.substr(b, e - b + 1);
    std::uint32_t v = 0;
    for (char c : tok) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw std::invalid_argument("bad hex digit in element");
        v = v << 4 | static_cast<std::uint32_t>(d);
        if (v >= (1u << 20)) throw std::invalid_argument("hex element out of range");
    }
    if (v >= f.order) throw std::invalid_argument("element exceeds field order");
    return static_cast<Elem>(v);
}

}  // namespace maskmat
