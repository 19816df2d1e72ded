#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "quot/cobordism.hpp"
#include "quot/geometry.hpp"
#include "quot/json_io.hpp"
#include "quot/oracle.hpp"
#include "quot/rationality.hpp"
#include "quot/suites.hpp"

using namespace quot;

namespace {

void print_series(const Series<Rat>& s, const std::string& format) {
    if (format == "json") {
        std::cout << series_to_json(s).dump(2) << "\n";
        return;
    }
    for (long n = s.valuation(); n < s.trunc(); ++n)
        std::cout << "q^" << n << ": " << rat_str(s.coeff(n)) << "\n";
}

int run_compute(const std::string& family, long N, const std::vector<long>& ranks,
                const std::vector<long>& c1K, long K2, long chiO,
                const std::vector<int>& orders, long betaBiK,
                const std::vector<long>& betaC1, const std::string& sw, long trunc,
                const std::string& format) {
    GenusSpec spec;
    std::vector<KClassNumbers> classes;
    if (family == "ktheory") {
        if (ranks.empty())
            throw CLI::ValidationError("--ranks", "ktheory requires at least one rank");
        spec = GenusSpec::ktheory(N, ranks);
        for (std::size_t s = 0; s < ranks.size(); ++s)
            classes.push_back({ranks[s], s < c1K.size() ? c1K[s] : 0, 0, 0});
    } else if (family == "verlinde" || family == "segre") {
        long r = ranks.empty() ? 0 : ranks[0];
        spec = family == "verlinde" ? GenusSpec::verlinde(N, r) : GenusSpec::segre(N, r);
        classes.push_back({r, c1K.empty() ? 0 : c1K[0], 0, 0});
    } else {
        throw CLI::ValidationError("--family", "unknown family " + family);
    }
    long ell = spec.family == Family::KTheory ? spec.ell() : 1;
    Decomposition d;
    d.parts.assign(static_cast<std::size_t>(N),
                   DecompPart{Rat(1), 0, std::vector<long>(static_cast<std::size_t>(ell), 0)});
    if (betaBiK != 0 || !betaC1.empty()) {
        std::vector<long> bc(static_cast<std::size_t>(ell), 0);
        for (std::size_t s = 0; s < betaC1.size() && s < bc.size(); ++s)
            bc[s] = betaC1[s];
        d.parts[0] = DecompPart{rat_parse(sw), betaBiK, bc};
    }
    std::vector<int> ord = orders;
    if (spec.family == Family::KTheory && ord.empty())
        ord.assign(static_cast<std::size_t>(ell), 0);
    Series<Rat> z = assemble_wedge(spec, {K2, chiO}, classes, {d}, ord, trunc);
    print_series(z, format);
    return 0;
}

int run_check(const std::string& suite, long maxN, long trunc, unsigned long long seed,
              const std::string& format) {
    SuiteParams params;
    params.maxN = maxN;
    params.trunc = trunc;
    params.seed = seed;
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names.push_back(suite);
    bool all_ok = true;
    nlohmann::json out = nlohmann::json::array();
    for (const std::string& name : names) {
        SuiteResult res = run_suite(name, params);
        all_ok = all_ok && res.ok();
        if (format == "json") {
            nlohmann::json fails = nlohmann::json::array();
            for (const CheckFailure& f : res.failures)
                fails.push_back({{"tag", f.tag},
                                 {"provenance", f.provenance},
                                 {"qpower", f.qpower},
                                 {"expected", f.expected},
                                 {"got", f.got}});
            out.push_back({{"suite", res.name},
                           {"checks", res.checks},
                           {"pass", res.ok()},
                           {"failures", fails}});
        } else {
            std::cout << "suite " << res.name << ": " << (res.ok() ? "PASS" : "FAIL") << " ("
                      << res.checks << " checks)\n";
            for (const CheckFailure& f : res.failures)
                std::cout << "  FAIL " << f.tag << " [" << f.provenance << "] at q^"
                          << f.qpower << ": expected " << f.expected << ", got " << f.got
                          << "\n";
        }
    }
    if (format == "json")
        std::cout << out.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int run_fit(const std::string& in, long degNum, long degDen, long surplus,
            const std::string& format) {
    std::ifstream f(in);
    if (!f)
        throw CLI::ValidationError("--in", "cannot open " + in);
    nlohmann::json j;
    f >> j;
    FitRequest req;
    req.series = series_from_json(j);
    req.degNum = degNum;
    req.degDen = degDen;
    req.surplus = surplus;
    FitResult res = fit_rational(req);
    std::cerr << "conjectural instance check: rational reconstruction at bounds ("
              << degNum << "," << degDen << "), surplus " << surplus << "\n";
    nlohmann::json out = fit_to_json(res);
    if (format == "json" || format == "text")
        std::cout << out.dump(2) << "\n";
    return 0;
}

int run_oracle(long qorder, long vorder, long trunc, unsigned long long seed,
               const std::string& format) {
    bool fsym = false, wstar = false;
    for (int attempt = 0; attempt < 5 && !fsym; ++attempt) {
        try {
            fsym = f_symmetry_check(qorder, vorder, seeded_eval_point(seed, attempt));
            break;
        } catch (const PoleAtEvalPoint&) {
        }
    }
    for (int attempt = 0; attempt < 5 && !wstar; ++attempt) {
        try {
            wstar = w_star_check(attempt == 0 ? EvalPoint{} : seeded_eval_point(seed + 1, attempt),
                                 trunc)
                        .equal;
            break;
        } catch (const PoleAtEvalPoint&) {
        }
    }
    if (format == "json") {
        std::cout << nlohmann::json{{"fSymmetry", fsym}, {"wStar", wstar}}.dump(2) << "\n";
    } else {
        std::cout << "f-symmetry (" << qorder << "," << vorder << "): "
                  << (fsym ? "PASS" : "FAIL") << "\n";
        std::cout << "w-star trunc " << trunc << ": " << (wstar ? "PASS" : "FAIL") << "\n";
    }
    return (fsym && wstar) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generating-series engine for virtual Quot-scheme invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "flat key=value config file; flags override");
    app.allow_config_extras(false);

    long trunc = 10;
    std::string format = "text";
    unsigned long long seed = 2026;
    app.add_option("--trunc", trunc, "series truncation order")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "deterministic seed for oracle eval points");

    auto* compute = app.add_subcommand("compute", "assemble an invariant series");
    std::string family = "ktheory";
    long N = 1, K2 = 0, chiO = 1, betaBiK = 0;
    std::vector<long> ranks, c1K, betaC1;
    std::vector<int> orders;
    std::string sw = "1";
    compute->add_option("--family", family, "ktheory | verlinde | segre");
    compute->add_option("--N", N, "quotient length N")->check(CLI::PositiveNumber);
    compute->add_option("--ranks", ranks, "class ranks (one per jet slot for ktheory)");
    compute->add_option("--c1K", c1K, "c1(alpha_s).K values");
    compute->add_option("--K2", K2, "K^2 of the surface");
    compute->add_option("--chiO", chiO, "chi(O) of the surface");
    compute->add_option("--k", orders, "jet extraction orders k_s");
    compute->add_option("--beta-K", betaBiK, "beta.K of a single active curve class");
    compute->add_option("--beta-c1", betaC1, "beta.c1(alpha_s) of the active class");
    compute->add_option("--sw", sw, "Seiberg-Witten weight of the active class");

    auto* check = app.add_subcommand("check", "run identity suites");
    std::string suite = "all";
    long maxN = 0, suiteTrunc = 0;
    check->add_option("--suite", suite, "suite name or 'all'");
    check->add_option("--max-N", maxN, "override the suite's N bound");
    check->add_option("--suite-trunc", suiteTrunc, "override the suite's truncation");

    auto* fit = app.add_subcommand("fit", "fit a rational function to a JSON series");
    std::string in;
    long degNum = 4, degDen = 4, surplus = 5;
    fit->add_option("--in", in, "input series JSON file")->required();
    fit->add_option("--deg", [&degNum, &degDen](const std::vector<std::string>& vals) {
           degNum = std::stol(vals[0]);
           degDen = std::stol(vals[1]);
           return true;
       },
       "numerator and denominator degree bounds")
        ->expected(2);
    fit->add_option("--surplus", surplus, "verification coefficients beyond the solve window");

    auto* oracle = app.add_subcommand("oracle", "partition-sum oracle checks");
    long qorder = 4, vorder = 4;
    oracle->add_option("--qorder", qorder, "bivariate q order");
    oracle->add_option("--vorder", vorder, "bivariate v order");

    try {
        app.parse(argc, argv);
        if (compute->parsed())
            return run_compute(family, N, ranks, c1K, K2, chiO, orders, betaBiK, betaC1, sw,
                               trunc, format);
        if (check->parsed())
            return run_check(suite, maxN, suiteTrunc, seed, format);
        if (fit->parsed())
            return run_fit(in, degNum, degDen, surplus, format);
        if (oracle->parsed())
            return run_oracle(qorder, vorder, trunc, seed, format);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const quot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
