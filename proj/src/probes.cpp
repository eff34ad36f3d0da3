#include "maskmat/probes.hpp"

#include <stdexcept>

namespace maskmat {

const char* scheme_name(Scheme s) { return s == Scheme::alg4 ? "alg4" : "alg5"; }

Scheme scheme_from_name(const std::string& name) {
    if (name == "alg4") return Scheme::alg4;
    if (name == "alg5") return Scheme::alg5;
    throw std::invalid_argument("unknown scheme: " + name);
}

GammaCandidate make_candidate(const FieldCtx& f, Scheme scheme, int d, Mat gamma) {
    if (d < 1) throw std::invalid_argument("order d must be >= 1");
    if (gamma.rows != d + 1) throw std::invalid_argument("candidate must have d+1 rows");
    if (gamma.cols < 1 || gamma.cols > d)
        throw std::invalid_argument("candidate must have between 1 and d columns");
    for (Elem v : gamma.a)
        if (static_cast<std::uint32_t>(v) >= f.order)
            throw std::invalid_argument("candidate entry exceeds field order");
    if (scheme == Scheme::alg4) {
        for (int c = 0; c < gamma.cols; ++c)
            if (gamma.at(0, c) != 1)
                throw std::invalid_argument("alg4 candidate row 0 must be all ones");
    } else {
        for (int c = 0; c < gamma.cols; ++c) {
            Elem s = 0;
            for (int r = 0; r < gamma.rows; ++r) s = add(f, s, gamma.at(r, c));
            if (s != 0)
                throw std::invalid_argument("alg5 candidate columns must sum to zero");
        }
    }
    return GammaCandidate{scheme, d, std::move(gamma)};
}

GammaCandidate delta_candidate(const FieldCtx& f, const GammaCandidate& g) {
    if (g.scheme != Scheme::alg4)
        throw std::invalid_argument("delta companion only exists for alg4");
    Mat delta = g.gamma;
    for (int r = 1; r < delta.rows; ++r)
        for (int c = 0; c < delta.cols; ++c) delta.at(r, c) = add(f, 1, delta.at(r, c));
    return GammaCandidate{Scheme::alg4, g.d, std::move(delta)};
}

ProbeSystem build_probe_system(const FieldCtx& f, const GammaCandidate& g) {
    (void)f;
    if (g.n() > 7)
        throw std::invalid_argument("support masks are byte-wide; n <= 7 required");
    ProbeSystem ps;
    ps.d = g.d;
    ps.n = g.n();
    ps.ell = 2 * ps.d * ps.n + 4 * ps.n + 1;
    ps.tagged = g.scheme == Scheme::alg5;
    ps.M = Mat(ps.n, ps.ell);
    ps.l_support.assign(ps.ell, 0);
    ps.l_slot.assign(ps.ell, 0);

    ps.l_support[0] = 1u << 0;
    for (int i = 0; i < ps.n; ++i) ps.l_support[1 + i] = static_cast<std::uint8_t>(1u << (1 + i));
    for (int i = 0; i < ps.n; ++i) ps.M.at(i, ps.n + 1 + i) = 1;

    const int base_diag = 2 * ps.n + 1;
    for (int j = 0; j <= ps.d; ++j)
        for (int i = 0; i < ps.n; ++i) {
            int c = base_diag + j * ps.n + i;
            ps.M.at(i, c) = g.gamma.at(j, i);
            ps.l_support[c] = static_cast<std::uint8_t>(1u << (1 + i));
            ps.l_slot[c] = static_cast<std::int8_t>(ps.tagged ? 1 + j : 0);
        }

    const int base_tri = base_diag + (ps.d + 1) * ps.n;
    for (int j = 0; j <= ps.d; ++j)
        for (int i = 0; i < ps.n; ++i) {
            int c = base_tri + j * ps.n + i;
            for (int r = 0; r <= i; ++r) ps.M.at(r, c) = g.gamma.at(j, r);
            std::uint8_t m = 1u << 0;
            for (int r = 0; r <= i; ++r) m |= static_cast<std::uint8_t>(1u << (1 + r));
            ps.l_support[c] = m;
            ps.l_slot[c] = static_cast<std::int8_t>(ps.tagged ? 1 + j : 0);
        }
    return ps;
}

LEntry l_entry(const ProbeSystem& ps, int row, int col) {
    if (row < 0 || row > ps.n || col < 0 || col >= ps.ell)
        throw std::out_of_range("l_entry index");
    if (!(ps.l_support[col] >> row & 1)) return LEntry{LEntry::zero, -1};
    if (ps.l_slot[col] == 0) return LEntry{LEntry::one, -1};
    return LEntry{LEntry::omega, ps.l_slot[col] - 1};
}

TPartViews tpart_views(const ProbeSystem& ps) {
    const int base_tri = 2 * ps.n + 1 + (ps.d + 1) * ps.n;
    const int tcols = (ps.d + 1) * ps.n;
    TPartViews t;
    t.M = Mat(ps.n, tcols);
    t.l_support.assign(tcols, 0);
    t.l_slot.assign(tcols, 0);
    for (int c = 0; c < tcols; ++c) {
        for (int r = 0; r < ps.n; ++r) t.M.at(r, c) = ps.M.at(r, base_tri + c);
        t.l_support[c] = static_cast<std::uint8_t>(ps.l_support[base_tri + c] >> 1);
        t.l_slot[c] = ps.l_slot[base_tri + c];
    }
    return t;
}

std::vector<Elem> symbolic_product_entry(const FieldCtx& f, const ProbeSystem& ps,
                                         int row, const Selection& columns,
                                         const std::vector<Elem>& coeffs) {
    if (columns.size() != coeffs.size())
        throw std::invalid_argument("columns/coeffs length mismatch");
    std::vector<Elem> slots(static_cast<size_t>(product_slots(ps)), 0);
    for (size_t i = 0; i < columns.size(); ++i) {
        int c = columns[i];
        if (c < 0 || c >= ps.ell) throw std::out_of_range("product column index");
        if (!(ps.l_support[c] >> row & 1)) continue;
        int s = ps.l_slot[c];
        slots[static_cast<size_t>(s)] = add(f, slots[static_cast<size_t>(s)], coeffs[i]);
    }
    return slots;
}

std::string render_slots(const std::vector<Elem>& slots) {
    std::string out;
    for (size_t s = 0; s < slots.size(); ++s) {
        if (slots[s] == 0) continue;
        if (!out.empty()) out += " + ";
        out += elem_to_hex(slots[s]);
        if (s > 0) out += "*w" + std::to_string(s - 1);
    }
    return out.empty() ? "0" : out;
}

std::string dump_probe_system(const ProbeSystem& ps) {
    auto block = [&](int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); };
    std::string out;
    out += "probe system: d=" + std::to_string(ps.d) + " n=" + std::to_string(ps.n) +
           " ell=" + std::to_string(ps.ell) + (ps.tagged ? " (tagged)\n" : "\n");
    out += "  col 0: a0*b0 probe\n";
    out += "  cols " + block(1, ps.n) + ": a0*bi probes\n";
    out += "  cols " + block(ps.n + 1, 2 * ps.n) + ": random columns e_i\n";
    const int base_diag = 2 * ps.n + 1;
    for (int j = 0; j <= ps.d; ++j)
        out += "  cols " + block(base_diag + j * ps.n, base_diag + j * ps.n + ps.n - 1) +
               ": diagonal block row " + std::to_string(j) + "\n";
    const int base_tri = base_diag + (ps.d + 1) * ps.n;
    for (int j = 0; j <= ps.d; ++j)
        out += "  cols " + block(base_tri + j * ps.n, base_tri + j * ps.n + ps.n - 1) +
               ": triangular block row " + std::to_string(j) + "\n";
    out += "M =\n" + mat_to_text(ps.M);
    return out;
}

}  // namespace maskmat
