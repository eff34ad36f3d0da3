#include "maskmat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "maskmat/analytic.hpp"
#include "maskmat/catalog.hpp"
#include "maskmat/gadgets.hpp"
#include "maskmat/search.hpp"
#include "maskmat/structures.hpp"

#include <CLI11.hpp>

namespace maskmat {

namespace {

// Accepts the candidate either in printed form (alg4: d rows, the ones row
// added here) or in full unified form (d+1 rows).
GammaCandidate candidate_from_mat(const FieldCtx& f, Scheme scheme, int d, const Mat& m) {
    if (scheme == Scheme::alg4 && m.rows == d) {
        Mat g(d + 1, m.cols);
        for (int j = 0; j < m.cols; ++j) g.at(0, j) = 1;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < m.cols; ++j) g.at(i + 1, j) = m.at(i, j);
        return make_candidate(f, scheme, d, g);
    }
    return make_candidate(f, scheme, d, m);
}

std::vector<Elem> parse_elems(const FieldCtx& f, const std::vector<std::string>& toks) {
    std::vector<Elem> out;
    out.reserve(toks.size());
    for (const std::string& t : toks) out.push_back(elem_from_hex(f, t));
    return out;
}

void print_report_line(std::ostream& os, const CheckReport& rep) {
    os << (rep.safe ? "safe" : "unsafe") << " (method " << rep.method << ", "
       << rep.subsets_checked << " of " << rep.subsets_total << " subsets checked, "
       << rep.elapsed_ms << " ms)\n";
    if (rep.witness) {
        os << "witness in " << (rep.witness->delta ? "delta" : "gamma") << " system, columns";
        for (int c : rep.witness->columns) os << " " << c + 1;
        os << ", v";
        for (Elem v : rep.witness->v) os << " " << elem_to_hex(v);
        os << "\n";
    }
}

int run_verify(const std::string& scheme_s, int k, int d, const std::string& gamma_path,
               const std::string& format, const std::string& method_s, bool as_json) {
    FieldCtx f = ctx_new(k);
    std::string text;
    if (gamma_path.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(gamma_path);
        if (!in) {
            std::cerr << "cannot open " << gamma_path << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    Mat m = format == "json" ? mat_from_json(f, nlohmann::json::parse(text))
                             : mat_from_text(f, text);
    GammaCandidate g = candidate_from_mat(f, scheme_from_name(scheme_s), d, m);
    CheckReport rep = check(f, g, method_from_name(method_s));
    if (as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        print_report_line(std::cout, rep);
    return rep.safe ? 0 : 1;
}

int run_construct(const std::string& scheme_s, int k, const std::vector<std::string>& xs_s,
                  const std::vector<std::string>& ys_s, const std::vector<std::string>& cs_s) {
    Scheme scheme = scheme_from_name(scheme_s);
    FieldCtx f = ctx_new(k);
    std::vector<Elem> xs = parse_elems(f, xs_s);
    std::vector<Elem> ys = parse_elems(f, ys_s);
    std::vector<Elem> cs = parse_elems(f, cs_s);
    GammaCandidate g = [&] {
        if (scheme == Scheme::alg4) {
            if (!cs.empty())
                throw std::invalid_argument("--cs applies to alg5 column scaling only");
            if (xs.size() != ys.size() || xs.empty())
                throw std::invalid_argument("need |xs| = |ys| = d");
            return construct_precond41(f, xs, ys);
        }
        if (xs.size() != ys.size() + 1 || ys.empty())
            throw std::invalid_argument("need |xs| = d+1 and |ys| = d");
        return construct_precond51(f, xs, ys, cs);
    }();
    std::cout << mat_to_text(g.gamma);
    // verdict on stderr so the matrix pipes cleanly into verify
    CheckReport rep = check(f, g);
    print_report_line(std::cerr, rep);
    return rep.safe ? 0 : 1;
}

int run_search_cmd(const std::string& scheme_s, int k, int d, const std::string& sampler_s,
                   std::uint64_t samples, std::uint64_t seed, int workers,
                   std::uint64_t early_stop, const std::string& out_path) {
    SearchConfig cfg;
    cfg.scheme = scheme_from_name(scheme_s);
    cfg.k = k;
    cfg.d = d;
    cfg.sampler = sampler_from_name(sampler_s);
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.workers = workers;
    if (early_stop > 0) cfg.early_stop = early_stop;
    FieldCtx f = ctx_new(k);
    std::ofstream out;
    std::ostream* jsonl = nullptr;
    if (!out_path.empty()) {
        out.open(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << "\n";
            return 2;
        }
        jsonl = &out;
    }
    SearchStats stats = run_search(f, cfg, jsonl);
    std::cout << search_report_json(f, cfg, stats).dump(2) << "\n";
    return 0;
}

int run_analytic_check(const std::string& scheme_s, int k, const std::vector<std::string>& xs_s,
                       const std::vector<std::string>& ys_s) {
    Scheme scheme = scheme_from_name(scheme_s);
    FieldCtx f = ctx_new(k);
    const PolySystem& sys = analytic_system(scheme);
    std::vector<Elem> xs = parse_elems(f, xs_s);
    std::vector<Elem> ys = parse_elems(f, ys_s);
    std::vector<Elem> vals = eval_poly_system_each(f, sys, xs, ys);
    bool all_nonzero = true;
    for (size_t i = 0; i < vals.size(); ++i) {
        std::cout << poly_to_string(sys.polys[i]) << " = " << elem_to_hex(vals[i]) << "\n";
        all_nonzero = all_nonzero && vals[i] != 0;
    }
    std::cout << (all_nonzero ? "all nonzero" : "has zero") << "\n";
    return all_nonzero ? 0 : 1;
}

int run_analytic_construct(const std::string& scheme_s, int k) {
    FieldCtx f = ctx_new(k);
    GammaCandidate g = explicit_construct(f, scheme_from_name(scheme_s));
    std::cout << mat_to_text(g.gamma);
    CheckReport rep = check(f, g);
    print_report_line(std::cerr, rep);
    return rep.safe ? 0 : 1;
}

int run_catalog_verify(const std::string& scheme_s, int d, int k, const std::string& method_s,
                       int max_d, int workers) {
    CatalogFilter filter;
    if (!scheme_s.empty()) filter.scheme = scheme_from_name(scheme_s);
    if (d > 0) filter.d = d;
    if (k > 0) filter.k = k;
    auto results = catalog_verify(filter, method_from_name(method_s), max_d, workers);
    int unsafe = 0;
    for (const CatalogResult& r : results) {
        std::cout << r.entry->label << ": " << (r.report.safe ? "safe" : "UNSAFE")
                  << " (method " << r.report.method << ", " << r.report.elapsed_ms << " ms)\n";
        if (!r.report.safe) ++unsafe;
    }
    std::cout << results.size() << " entries checked, " << unsafe << " unsafe\n";
    return unsafe == 0 ? 0 : 1;
}

int run_selftest() {
    int bad = 0;
    {
        FieldCtx f4 = ctx_new(2);
        SearchConfig cfg;
        cfg.k = 2;
        cfg.d = 2;
        cfg.sampler = SamplerKind::uniform_valid;
        cfg.seed = 42;
        for (Scheme scheme : {Scheme::alg4, Scheme::alg5}) {
            cfg.scheme = scheme;
            for (std::uint64_t i = 0; i < 3; ++i) {
                GammaCandidate g = sample_candidate(f4, cfg, i);
                std::uint64_t fails = gadget_exhaustive(f4, g);
                std::cout << "exhaustive d=2 F_4 " << scheme_name(scheme) << " candidate " << i
                          << ": " << fails << " failures\n";
                if (fails) ++bad;
            }
        }
    }
    FieldCtx f256 = ctx_new(8);
    for (int d : {3, 4}) {
        int fails = gadget_selftest(f256, d, 10000, 7);
        std::cout << "randomized d=" << d << " F_{2^8}: " << fails << " failures in 10000\n";
        if (fails) ++bad;
    }
    std::cout << (bad == 0 ? "selftest passed" : "selftest FAILED") << "\n";
    return bad == 0 ? 0 : 1;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"construct, verify, and search safe instantiation matrices "
                 "for masked multiplication over GF(2^k)"};
    app.require_subcommand(1);
    int rc = 0;

    // verify
    auto* verify = app.add_subcommand("verify", "check one candidate matrix");
    struct {
        std::string scheme, gamma, format = "hex", method = "auto";
        int k = 0, d = 0;
        bool json = false;
    } v;
    verify->add_option("--scheme", v.scheme, "alg4 or alg5")->required();
    verify->add_option("--k", v.k, "field degree")->required()->check(CLI::Range(1, 16));
    verify->add_option("-d,--d", v.d, "masking order")->required()->check(CLI::Range(1, 16));
    verify->add_option("--gamma", v.gamma, "matrix file (stdin when omitted)");
    verify->add_option("--format", v.format, "hex or json")
        ->check(CLI::IsMember({"hex", "json"}));
    verify->add_option("--method", v.method, "auto|oracle|subsets|batch|safepp")
        ->check(CLI::IsMember({"auto", "oracle", "subsets", "batch", "safepp"}));
    verify->add_flag("--json", v.json, "print the report as JSON");
    verify->callback([&] { rc = run_verify(v.scheme, v.k, v.d, v.gamma, v.format, v.method, v.json); });

    // construct
    auto* construct = app.add_subcommand("construct", "build a preconditioned candidate");
    struct {
        std::string scheme;
        int k = 0;
        std::vector<std::string> xs, ys, cs;
    } c;
    construct->add_option("--scheme", c.scheme, "alg4 or alg5")->required();
    construct->add_option("--k", c.k, "field degree")->required()->check(CLI::Range(1, 16));
    construct->add_option("--xs", c.xs, "x parameters (hex)")->required()->delimiter(',');
    construct->add_option("--ys", c.ys, "y parameters (hex)")->required()->delimiter(',');
    construct->add_option("--cs", c.cs, "column scales (hex, alg5 only)")->delimiter(',');
    construct->callback([&] { rc = run_construct(c.scheme, c.k, c.xs, c.ys, c.cs); });

    // search
    auto* search = app.add_subcommand("search", "randomized candidate search");
    struct {
        std::string scheme, sampler = "cauchy", out;
        int k = 0, d = 0, workers = 1;
        std::uint64_t samples = 1000, seed = 1, early_stop = 0;
    } s;
    search->add_option("--scheme", s.scheme, "alg4 or alg5")->required();
    search->add_option("--k", s.k, "field degree")->required()->check(CLI::Range(1, 16));
    search->add_option("-d,--d", s.d, "masking order")->required()->check(CLI::Range(1, 16));
    search->add_option("--sampler", s.sampler, "cauchy or uniform")
        ->check(CLI::IsMember({"cauchy", "uniform"}));
    search->add_option("--samples", s.samples, "candidates to try");
    search->add_option("--seed", s.seed, "master seed")->envname("MASKMAT_SEED");
    search->add_option("--workers", s.workers, "worker threads")->envname("MASKMAT_WORKERS");
    search->add_option("--early-stop", s.early_stop, "stop after this many safe hits");
    search->add_option("--out", s.out, "JSONL stream of safe matrices");
    search->callback([&] {
        rc = run_search_cmd(s.scheme, s.k, s.d, s.sampler, s.samples, s.seed, s.workers,
                            s.early_stop, s.out);
    });

    // analytic
    auto* analytic = app.add_subcommand("analytic", "order-3 certificate systems");
    analytic->require_subcommand(1);
    auto* acheck = analytic->add_subcommand("check", "evaluate the polynomial system");
    struct {
        std::string scheme;
        int k = 0;
        std::vector<std::string> xs, ys;
    } ac;
    acheck->add_option("--scheme", ac.scheme, "alg4 or alg5")->required();
    acheck->add_option("--k", ac.k, "field degree")->required()->check(CLI::Range(1, 16));
    acheck->add_option("--xs", ac.xs, "x assignment (hex)")->required()->delimiter(',');
    acheck->add_option("--ys", ac.ys, "y assignment (hex)")->required()->delimiter(',');
    acheck->callback([&] { rc = run_analytic_check(ac.scheme, ac.k, ac.xs, ac.ys); });
    auto* acons = analytic->add_subcommand("construct", "emit the fixed-point candidate");
    struct {
        std::string scheme;
        int k = 0;
    } an;
    acons->add_option("--scheme", an.scheme, "alg4 or alg5")->required();
    acons->add_option("--k", an.k, "field degree")->required()->check(CLI::Range(4, 16));
    acons->callback([&] { rc = run_analytic_construct(an.scheme, an.k); });

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "published matrix listings");
    catalog_cmd->require_subcommand(1);
    auto* cverify = catalog_cmd->add_subcommand("verify", "re-check the embedded listings");
    struct {
        std::string scheme, method = "auto";
        int d = 0, k = 0, max_d = 5, workers = 1;
    } cv;
    cverify->add_option("--scheme", cv.scheme, "restrict to one scheme");
    cverify->add_option("-d,--d", cv.d, "restrict to one order");
    cverify->add_option("--k", cv.k, "restrict to one field degree");
    cverify->add_option("--method", cv.method, "auto|oracle|subsets|batch|safepp")
        ->check(CLI::IsMember({"auto", "oracle", "subsets", "batch", "safepp"}));
    cverify->add_option("--max-d", cv.max_d, "skip entries above this order (d=6 is slow)");
    cverify->add_option("--workers", cv.workers, "worker threads")->envname("MASKMAT_WORKERS");
    cverify->callback(
        [&] { rc = run_catalog_verify(cv.scheme, cv.d, cv.k, cv.method, cv.max_d, cv.workers); });

    // filter-count
    auto* fcount = app.add_subcommand("filter-count", "row-coverage filter counts");
    int fc_d = 0;
    fcount->add_option("-d,--d", fc_d, "masking order")->required()->check(CLI::Range(1, 6));
    fcount->callback([&] {
        auto [kept, total] = filter_count(fc_d);
        std::cout << kept << " / " << total << "\n";
    });

    // selftest
    auto* selftest = app.add_subcommand("selftest", "gadget share identities");
    selftest->callback([&] { rc = run_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace maskmat
