#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "maskmat/catalog.hpp"
#include "maskmat/structures.hpp"

using namespace maskmat;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Mat from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
    int r = 0;
    for (const auto& row : rows) {
        int c = 0;
        for (int v : row) m.at(r, c++) = static_cast<Elem>(v);
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("entry counts and degree coverage per order") {
    std::map<std::pair<Scheme, int>, std::set<int>> ks;
    for (const auto& e : catalog()) {
        ks[{e.scheme, e.d}].insert(e.k);
    }
    auto range = [](int lo, int hi) {
        std::set<int> s;
        for (int k = lo; k <= hi; ++k) s.insert(k);
        return s;
    };
    CHECK(ks[{Scheme::alg4, 3}] == range(3, 16));
    CHECK(ks[{Scheme::alg4, 4}] == range(5, 16));
    CHECK(ks[{Scheme::alg4, 5}] == range(10, 16));
    CHECK(ks[{Scheme::alg4, 6}] == std::set<int>{15, 16});
    CHECK(ks[{Scheme::alg5, 3}] == range(3, 16));
    CHECK(ks[{Scheme::alg5, 4}] == range(5, 16));
    CHECK(ks[{Scheme::alg5, 5}] == range(9, 16));
    CHECK(ks[{Scheme::alg5, 6}] == std::set<int>{15, 16});
    CHECK(catalog().size() == 14 + 12 + 7 + 2 + 14 + 12 + 8 + 2);
}

TEST_CASE("known entries parse to the published values") {
    bool saw4 = false, saw5 = false;
    for (const auto& e : catalog()) {
        if (e.scheme == Scheme::alg4 && e.d == 3 && e.k == 3) {
            CHECK(e.stored == from_rows({{3, 5, 4}, {3, 6, 7}, {3, 5, 4}}));
            CHECK(e.label == "listing alg4 d=3 F_{2^3}");
            saw4 = true;
        }
        if (e.scheme == Scheme::alg5 && e.d == 3 && e.k == 3) {
            CHECK(e.stored == from_rows({{1, 7, 4}, {4, 4, 4}, {2, 1, 4}, {7, 2, 4}}));
            saw5 = true;
        }
    }
    CHECK(saw4);
    CHECK(saw5);
}

TEST_CASE("every entry builds a structurally valid candidate") {
    std::map<int, FieldCtx> ctxs;
    for (const auto& e : catalog()) {
        auto it = ctxs.find(e.k);
        if (it == ctxs.end()) it = ctxs.emplace(e.k, ctx_new(e.k)).first;
        const FieldCtx& f = it->second;
        GammaCandidate g = entry_candidate(f, e);
        CHECK(g.d == e.d);
        CHECK(g.n() == e.d);
        CHECK(g.gamma.rows == e.d + 1);
        if (e.scheme == Scheme::alg4) {
            CHECK(e.stored.rows == e.d);
            for (int j = 0; j < g.n(); ++j) CHECK(g.gamma.at(0, j) == 1);
        } else {
            CHECK(e.stored.rows == e.d + 1);
            // zero column sums are a strong transcription check
            for (int j = 0; j < g.n(); ++j) {
                Elem sum = 0;
                for (int i = 0; i <= g.d; ++i) sum = add(f, sum, g.gamma.at(i, j));
                CHECK(sum == 0);
            }
        }
        CHECK(mat_from_text(f, mat_to_text(e.stored)) == e.stored);
    }
}

TEST_CASE("embedded text matches the data files and the manifest") {
    std::string dir = MASKMAT_DATA_DIR;
    std::map<std::string, std::string> manifest;
    std::istringstream mf(read_file(dir + "/MANIFEST"));
    std::string algo, hash, name;
    while (mf >> algo >> hash >> name) {
        CHECK(algo == "fnv1a64");
        manifest[name] = hash;
    }
    REQUIRE(manifest.size() == 2);

    for (auto [scheme, file] : {std::pair<Scheme, std::string>{Scheme::alg4, "alg4.txt"},
                                {Scheme::alg5, "alg5.txt"}}) {
        std::string disk = read_file(dir + "/" + file);
        CHECK(disk == catalog_raw_text(scheme));
        std::ostringstream hex;
        hex << std::hex << fnv1a64(disk);
        CHECK(hex.str() == manifest[file]);
    }
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("filtered verification with result ordering") {
    CatalogFilter filter;
    filter.d = 3;
    auto results = catalog_verify(filter);
    CHECK(results.size() == 28);
    for (const auto& r : results) {
        CHECK(r.entry->d == 3);
        CHECK(r.report.safe);
    }
    for (size_t i = 1; i < results.size(); ++i) {
        bool order_ok = results[i - 1].entry->scheme != results[i].entry->scheme ||
                        results[i - 1].entry->k <= results[i].entry->k;
        CHECK(order_ok);
    }

    auto wide = catalog_verify(filter, Method::automatic, 5, 4);
    REQUIRE(wide.size() == results.size());
    for (size_t i = 0; i < wide.size(); ++i) {
        CHECK(wide[i].entry == results[i].entry);
        CHECK(wide[i].report.safe == results[i].report.safe);
    }

    CatalogFilter one;
    one.scheme = Scheme::alg5;
    one.d = 3;
    one.k = 3;
    auto single = catalog_verify(one, Method::subsets);
    REQUIRE(single.size() == 1);
    CHECK(single[0].report.safe);
    CHECK(single[0].report.method == "subsets");

    CatalogFilter high;
    high.d = 6;
    CHECK(catalog_verify(high).empty());  // max_d defaults to 5
}
