#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maskmat/checker.hpp"

namespace maskmat {

// One published safe matrix, stored as printed: alg4 entries carry the
// d x d block (the unified ones-row is prepended at load), alg5 entries
// the full (d+1) x d matrix.
struct CatalogEntry {
    Scheme scheme;
    int d = 0;
    int k = 0;
    Mat stored;
    std::string label;  // "listing alg4 d=3 F_{2^8}"
};

// Parsed once from the embedded data; ordered alg4 before alg5, then by
// (d, k) as listed.
const std::vector<CatalogEntry>& catalog();

// Embedded source text, byte-identical to data/catalog/<scheme>.txt.
std::string_view catalog_raw_text(Scheme scheme);

std::uint64_t fnv1a64(std::string_view data);

// The entry as a checkable candidate (ones row prepended for alg4).
GammaCandidate entry_candidate(const FieldCtx& f, const CatalogEntry& e);

struct CatalogFilter {
    std::optional<Scheme> scheme;
    std::optional<int> d;
    std::optional<int> k;
};

struct CatalogResult {
    const CatalogEntry* entry = nullptr;
    CheckReport report;
};

// Checks every entry passing the filter with d <= max_d, parallel across
// entries when workers > 1. Results keep catalog order; failures are
// results, not errors.
std::vector<CatalogResult> catalog_verify(const CatalogFilter& filter,
                                          Method method = Method::automatic,
                                          int max_d = 5, int workers = 1);

}  // namespace maskmat
