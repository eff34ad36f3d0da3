#include "maskmat/catalog.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#ifdef MASKMAT_OPENMP
#include <omp.h>
#endif

namespace maskmat {

namespace detail {
extern const char* const kCatalogAlg4;
extern const char* const kCatalogAlg5;
}  // namespace detail

namespace {

std::vector<CatalogEntry> parse_catalog(Scheme scheme, std::string_view text) {
    std::vector<CatalogEntry> out;
    std::map<int, FieldCtx> ctxs;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (word != "entry") throw std::runtime_error("catalog: expected entry header");
        std::string sname;
        int d = 0, k = 0;
        if (!(ls >> sname >> d >> k)) throw std::runtime_error("catalog: bad entry header");
        if (scheme_from_name(sname) != scheme)
            throw std::runtime_error("catalog: entry scheme does not match file");
        auto [it, fresh] = ctxs.try_emplace(k, FieldCtx{});
        if (fresh) it->second = ctx_new(k);
        const FieldCtx& f = it->second;
        const int nrows = scheme == Scheme::alg4 ? d : d + 1;
        Mat m(nrows, d);
        for (int r = 0; r < nrows; ++r) {
            if (!std::getline(in, line)) throw std::runtime_error("catalog: truncated entry");
            std::istringstream rs(line);
            std::string tok;
            for (int c = 0; c < d; ++c) {
                if (!(rs >> tok)) throw std::runtime_error("catalog: short row");
                m.at(r, c) = elem_from_hex(f, tok);
            }
            if (rs >> tok) throw std::runtime_error("catalog: long row");
        }
        CatalogEntry e;
        e.scheme = scheme;
        e.d = d;
        e.k = k;
        e.stored = std::move(m);
        e.label = "listing " + std::string(scheme_name(scheme)) + " d=" + std::to_string(d) +
                  " F_{2^" + std::to_string(k) + "}";
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> all = parse_catalog(Scheme::alg4, detail::kCatalogAlg4);
        std::vector<CatalogEntry> a5 = parse_catalog(Scheme::alg5, detail::kCatalogAlg5);
        all.insert(all.end(), std::make_move_iterator(a5.begin()),
                   std::make_move_iterator(a5.end()));
        return all;
    }();
    return entries;
}

std::string_view catalog_raw_text(Scheme scheme) {
    return scheme == Scheme::alg4 ? detail::kCatalogAlg4 : detail::kCatalogAlg5;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

GammaCandidate entry_candidate(const FieldCtx& f, const CatalogEntry& e) {
    if (f.k != e.k) throw std::invalid_argument("field degree does not match entry");
    if (e.scheme == Scheme::alg5) return make_candidate(f, e.scheme, e.d, e.stored);
    Mat g(e.d + 1, e.d);
    for (int j = 0; j < e.d; ++j) g.at(0, j) = 1;
    for (int i = 0; i < e.d; ++i)
        for (int j = 0; j < e.d; ++j) g.at(i + 1, j) = e.stored.at(i, j);
    return make_candidate(f, e.scheme, e.d, g);
}

std::vector<CatalogResult> catalog_verify(const CatalogFilter& filter, Method method,
                                          int max_d, int workers) {
    std::vector<const CatalogEntry*> selected;
    for (const CatalogEntry& e : catalog()) {
        if (filter.scheme && *filter.scheme != e.scheme) continue;
        if (filter.d && *filter.d != e.d) continue;
        if (filter.k && *filter.k != e.k) continue;
        if (e.d > max_d) continue;
        selected.push_back(&e);
    }
    std::vector<CatalogResult> results(selected.size());
    const int count = static_cast<int>(selected.size());
#ifdef MASKMAT_OPENMP
#pragma omp parallel for num_threads(workers) schedule(dynamic) if (workers > 1)
#endif
    for (int i = 0; i < count; ++i) {
        const CatalogEntry& e = *selected[static_cast<size_t>(i)];
        FieldCtx f = ctx_new(e.k);
        GammaCandidate g = entry_candidate(f, e);
        results[static_cast<size_t>(i)].entry = &e;
        results[static_cast<size_t>(i)].report = check(f, g, method);
    }
    (void)workers;
    return results;
}

}  // namespace maskmat
