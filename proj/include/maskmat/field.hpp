#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maskmat {

// Field element of GF(2^k), k <= 16, stored as the coefficient bitmask of
// its polynomial representative (bit i = coefficient of x^i).
using Elem = std::uint16_t;

// Log/antilog table context for one binary field GF(2^k), 1 <= k <= 16.
// The modulus is stored with its x^k bit set (e.g. 0x11b for k = 8).
// Contexts are immutable after construction and safe to share across threads.
struct FieldCtx {
    int k = 0;
    std::uint32_t ipoly = 0;
    std::uint32_t order = 0;       // 2^k
    Elem generator = 0;
    std::vector<Elem> log_tab;     // [e] -> discrete log, e != 0
    std::vector<Elem> exp_tab;     // doubled to 2*(order-1) entries
};

// Default modulus for each k (low-weight irreducible polynomials).
std::uint32_t default_ipoly(int k);

// Builds the table context. The explicit-modulus overload verifies that the
// polynomial has degree exactly k and is irreducible (trial division by all
// polynomials of degree <= k/2) and throws std::invalid_argument otherwise.
FieldCtx ctx_new(int k);
FieldCtx ctx_new(int k, std::uint32_t ipoly);

// Schoolbook carry-less multiply followed by reduction mod ipoly. Reference
// path used to build and cross-check the tables; independent of them.
Elem clmul_reduce(int k, std::uint32_t ipoly, Elem a, Elem b);

inline void debug_check_elem(const FieldCtx& f, Elem a) {
#ifndef NDEBUG
    assert(static_cast<std::uint32_t>(a) < f.order && "element out of range for ctx");
#else
    (void)f;
    (void)a;
#endif
}

inline Elem add(const FieldCtx& f, Elem a, Elem b) {
    debug_check_elem(f, a);
    debug_check_elem(f, b);
    return static_cast<Elem>(a ^ b);
}

inline Elem mul(const FieldCtx& f, Elem a, Elem b) {
    debug_check_elem(f, a);
    debug_check_elem(f, b);
    if (a == 0 || b == 0) return 0;
    return f.exp_tab[f.log_tab[a] + f.log_tab[b]];
}

// Throws std::domain_error on zero input.
Elem inv(const FieldCtx& f, Elem a);

inline Elem fdiv(const FieldCtx& f, Elem a, Elem b) { return mul(f, a, inv(f, b)); }

// Hex I/O: lowercase, no prefix; leading/trailing whitespace ignored on
// parse. Parse validates the value fits the field and throws on junk.
std::string elem_to_hex(Elem v);
Elem elem_from_hex(const FieldCtx& f, std::string_view tok);

}  // namespace maskmat
