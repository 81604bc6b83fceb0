#include "darcais/cli.hpp"

#include "darcais/cyclo.hpp"
#include "darcais/errors.hpp"
#include "darcais/gfp.hpp"
#include "darcais/hooks.hpp"
#include "darcais/int_poly.hpp"
#include "darcais/nt.hpp"
#include "darcais/roots.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace darcais::cli {

namespace {

IntPoly parse_poly(const std::string& csv) {
    std::vector<Int> c;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) c.emplace_back(item);
    return IntPoly(std::move(c));
}

std::vector<Int> parse_coords(const std::string& csv) {
    std::vector<Int> c;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) c.emplace_back(item);
    return c;
}

// Every A_n^g mod p splits into linear factors (unconditional for p = 2,
// conditional on g(3) mod 3 in {0,1} for p = 3).
Report linear_split_invariant(const ArithFn& g, std::uint64_t p, long N) {
    Timer t;
    Report rep;
    rep.claim_id = "lemma.mod" + std::to_string(p) + "-linear-split";
    rep.params = {{"g", g.name()}, {"p", p}, {"N", N}};
    rep.status = Status::verified;
    auto A = darcais_sequence_mod_p(g, p, N);
    for (long n = 1; n <= N; ++n) {
        if (!splits_into_linears(A[n])) {
            rep.status = Status::falsified;
            Json degs = Json::array();
            for (long d : degree_spectrum(A[n])) degs.push_back(d);
            rep.add_witness({{"n", n},
                             {"A_n_mod_p", A[n].to_string()},
                             {"degree_spectrum", degs}});
            break;
        }
    }
    rep.timing_ms = t.ms();
    return rep;
}

Report dk_sweep(const std::vector<long>& ps, long m_max) {
    Timer t;
    Report rep;
    rep.claim_id = "dk.cyclotomic-splitting-sweep";
    rep.params = {{"p_set", ps}, {"m_max", m_max}};
    rep.status = Status::verified;
    for (long p : ps) {
        for (long m = 1; m <= m_max; ++m) {
            Report one = dedekind_kummer_check(p, m);
            if (one.status != Status::verified) {
                rep.status = Status::falsified;
                rep.add_witness({{"p", p}, {"m", m}, {"sub", one.to_json()}});
            }
        }
    }
    rep.timing_ms = t.ms();
    return rep;
}

Report rp_closed_forms(long m_max) {
    Timer t;
    Report rep;
    rep.claim_id = "rp.closed-forms";
    rep.params = {{"m_max", m_max}};
    rep.status = Status::verified;
    for (long p : {2L, 3L}) {
        for (long m = 1; m <= m_max; ++m) {
            try {
                in_R_p(p, m); // cross-checks closed form against the order
            } catch (const error& e) {
                rep.status = Status::falsified;
                rep.add_witness({{"p", p}, {"m", m}, {"error", e.what()}});
            }
        }
    }
    rep.timing_ms = t.ms();
    return rep;
}

} // namespace

SuiteProfile SuiteProfile::quick() {
    return {"quick", 60, 30, 30, 12, 12, 50, 3, 10, 6, 15, 30};
}

SuiteProfile SuiteProfile::full() {
    return {"full", 200, 150, 100, 30, 40, 200, 10, 20, 10, 40, 100};
}

std::vector<Report> run_suite(const ArithFn& g, const SuiteProfile& profile,
                              std::uint64_t seed, int jobs) {
    std::vector<Report> reports;
    bool sigma = g.name() == "sigma";

    reports.push_back(pentagonal_pattern_check(profile.pentagonal_N));
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        reports.push_back(verify_periodicity(g, p, profile.lemma_N));
        reports.push_back(verify_falling_factorial(g, p));
    }
    reports.push_back(linear_split_invariant(g, 2, profile.lemma_N));
    reports.push_back(linear_split_invariant(g, 3, profile.lemma_N));
    reports.push_back(zmija_conditions(g));
    reports.push_back(
        verify_roots_of_unity(g, profile.zeta_N, profile.zeta_M, 3, jobs));
    reports.push_back(
        modp_nonvanishing_certificate(IntPoly({Int(1), Int(0), Int(1)}), g, 3));
    reports.push_back(
        modp_nonvanishing_certificate(IntPoly({Int(9), Int(0), Int(1)}), g, 7));
    reports.push_back(dk_sweep({2, 3, 5, 7}, profile.dk_m_max));
    reports.push_back(rp_closed_forms(profile.rp_m_max));
    for (auto [m, mu] : {std::pair<long, long>{5, 2},
                         {7, 2},
                         {4, 3},
                         {5, 3},
                         {5, 6}})
        reports.push_back(verify_shifted_nonvanishing(
            g, m, mu, profile.shifted_samples, seed, 5, profile.shifted_N));
    reports.push_back(verify_hook_length_identity(profile.hook_n));
    if (sigma) {
        reports.push_back(radius_report(g, 2, profile.roots_n_hi, jobs));
        reports.push_back(hurwitz_report(g, 1, profile.roots_n_hi, 1e-8, 12, jobs));
        reports.push_back(kostant_han_scan(1, profile.roots_n_hi));
        reports.push_back(imaginary_axis_scan(g, {1, 3}, profile.imag_N));
    }

    std::sort(reports.begin(), reports.end(), [](const Report& a, const Report& b) {
        if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
        return a.params.dump() < b.params.dump();
    });

    Report agg;
    agg.claim_id = "suite." + profile.name;
    agg.params = {{"profile", profile.name}, {"g", g.name()}, {"jobs", jobs}};
    agg.seed = seed;
    agg.status = worst_status(reports);
    Json hist = Json::object();
    for (const auto& r : reports) {
        std::string s = to_string(r.status);
        hist[s] = (hist.contains(s) ? hist[s].get<long>() : 0L) + 1;
    }
    agg.details = {{"members", reports.size()}, {"status_histogram", hist}};
    reports.push_back(std::move(agg));
    return reports;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact arithmetic for D'Arcais polynomials: computation, "
                 "finite-field certificates, cyclotomic verifiers, and root scans"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string out_file;
    bool timings = false;
    int jobs = 0;
    std::string g_spec = "sigma";
    std::uint64_t seed = 1;
    app.add_option("--out", out_file, "write reports to this file instead of stdout");
    app.add_flag("--timings", timings, "include timing_ms in reports (non-reproducible)");
    app.add_option("--jobs", jobs, "worker threads (0 = hardware)");

    // compute
    auto* compute = app.add_subcommand("compute", "emit coefficients of A_0..A_N");
    long compute_n = 10;
    std::string compute_format = "text";
    compute->add_option("--g", g_spec, "arithmetic function: sigma | power:<d> | table:@file | [1,...]");
    compute->add_option("--n", compute_n, "compute A_0..A_n")->required();
    compute->add_option("--format", compute_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    // factor-modp
    auto* factor_cmd = app.add_subcommand("factor-modp", "factor A_n^g over F_p");
    long factor_n = 3;
    std::uint64_t factor_p = 3;
    factor_cmd->add_option("--g", g_spec);
    factor_cmd->add_option("--n", factor_n)->required();
    factor_cmd->add_option("--p", factor_p)->required();
    factor_cmd->add_option("--seed", seed);

    // certify
    auto* certify = app.add_subcommand(
        "certify", "mod-p nonvanishing certificate for the roots of a minimal polynomial");
    std::string minpoly_csv;
    std::uint64_t certify_p = 3;
    certify->add_option("--minpoly", minpoly_csv, "coefficients, constant first (x^2+9 is 9,0,1)")
        ->required();
    certify->add_option("--g", g_spec);
    certify->add_option("--p", certify_p)->required();

    // verify group
    auto* verify = app.add_subcommand("verify", "run a verifier");
    verify->require_subcommand(1);

    auto* v_zeta = verify->add_subcommand("roots-of-unity", "A_n^g(zeta_m) != 0 scan");
    long zeta_N = 50, zeta_M = 20, zeta_mlo = 3;
    v_zeta->add_option("--g", g_spec);
    v_zeta->add_option("--N", zeta_N);
    v_zeta->add_option("--M", zeta_M);
    v_zeta->add_option("--m-lo", zeta_mlo);

    auto* v_shift = verify->add_subcommand("shifted", "zeta_m + mu*beta nonvanishing samples");
    long sh_m = 5, sh_mu = 2, sh_samples = 10, sh_box = 5, sh_N = 20;
    v_shift->add_option("--g", g_spec);
    v_shift->add_option("--m", sh_m)->required();
    v_shift->add_option("--p", sh_mu, "shift multiplier mu: 2, 3, or 6")->required();
    v_shift->add_option("--samples", sh_samples);
    v_shift->add_option("--seed", seed);
    v_shift->add_option("--box", sh_box);
    v_shift->add_option("--N", sh_N);

    auto* v_zmija = verify->add_subcommand("zmija", "degree-spectrum conditions mod 5, 7, 11");
    v_zmija->add_option("--g", g_spec);

    auto* v_period = verify->add_subcommand("periodicity", "A_{lp+r} == A_r A_p^l (mod p)");
    std::uint64_t period_p = 2;
    long period_N = 50;
    v_period->add_option("--g", g_spec);
    v_period->add_option("--p", period_p)->required();
    v_period->add_option("--N", period_N);

    auto* v_fall = verify->add_subcommand("falling-factorial", "A_p == x(x-1)...(x-p+1) (mod p)");
    std::uint64_t fall_p = 2;
    v_fall->add_option("--g", g_spec);
    v_fall->add_option("--p", fall_p)->required();

    auto* v_hook = verify->add_subcommand("hooklength", "hook product sum vs P_n(1-z)");
    long hook_n = 8;
    v_hook->add_option("--n", hook_n);

    auto* v_pent = verify->add_subcommand("pentagonal", "A_n(-1) zero pattern vs pentagonal set");
    long pent_N = 50;
    v_pent->add_option("--N", pent_N);

    // cyclo group
    auto* cyclo = app.add_subcommand("cyclo", "cyclotomic field computations");
    cyclo->require_subcommand(1);

    auto* c_inertial = cyclo->add_subcommand("inertial", "e, f, g for p in Q(zeta_m)");
    long cy_p = 2, cy_m = 5;
    c_inertial->add_option("--p", cy_p)->required();
    c_inertial->add_option("--m", cy_m)->required();

    auto* c_dk = cyclo->add_subcommand("dk-check", "factor Phi_m mod p against e, f, g");
    c_dk->add_option("--p", cy_p)->required();
    c_dk->add_option("--m", cy_m)->required();

    auto* c_minpoly = cyclo->add_subcommand("minpoly", "minimal polynomial of a ring element");
    std::string alpha_csv;
    c_minpoly->add_option("--m", cy_m)->required();
    c_minpoly->add_option("--alpha", alpha_csv, "power-basis coordinates, comma separated")
        ->required();

    auto* c_index = cyclo->add_subcommand("index", "index coprimality check for alpha = zeta + mu*beta");
    c_index->add_option("--m", cy_m)->required();
    c_index->add_option("--alpha", alpha_csv)->required();
    c_index->add_option("--p", cy_p)->required();

    // roots
    auto* roots_cmd = app.add_subcommand("roots", "numeric root scans");
    std::string n_range = "2:20";
    std::string checks = "hurwitz,radius";
    std::string t_list = "1,3";
    double tol = 1e-8;
    roots_cmd->add_option("--g", g_spec);
    roots_cmd->add_option("--n-range", n_range, "lo:hi");
    roots_cmd->add_option("--check", checks, "comma list of hurwitz,radius,kostant,imaginary");
    roots_cmd->add_option("--t", t_list, "imaginary-axis t values");
    roots_cmd->add_option("--tol", tol);

    // suite
    auto* suite = app.add_subcommand("suite", "run the whole verification suite");
    std::string profile_name = "quick";
    suite->add_option("--profile", profile_name)->check(CLI::IsMember({"quick", "full"}));
    suite->add_option("--seed", seed);
    suite->add_option("--g", g_spec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!out_file.empty()) {
        file_out.open(out_file);
        if (!file_out) {
            err << "cannot open " << out_file << "\n";
            return 1;
        }
        sink = &file_out;
    }

    std::vector<Report> reports;
    try {
        ArithFn g = ArithFn::parse(g_spec);

        if (compute->parsed()) {
            auto A = darcais_sequence(g, compute_n);
            for (long n = 0; n <= compute_n; ++n) {
                if (compute_format == "json") {
                    Json j;
                    j["n"] = n;
                    Json coeffs = Json::array();
                    for (long k = 0; k <= A[n].degree(); ++k)
                        coeffs.push_back(A[n].coeff(k).get_str());
                    j["coeffs"] = coeffs;
                    *sink << j.dump() << "\n";
                } else {
                    for (long k = 0; k <= A[n].degree(); ++k)
                        *sink << (k ? " " : "") << A[n].coeff(k).get_str();
                    *sink << "\n";
                }
            }
            return 0;
        }

        if (factor_cmd->parsed()) {
            auto A = darcais_sequence_mod_p(g, factor_p, factor_n);
            auto fl = factor_gfp(A[factor_n], seed);
            Report rep;
            rep.claim_id = "factorization.A_n-mod-p";
            rep.params = {{"g", g.name()}, {"n", factor_n}, {"p", factor_p}};
            rep.seed = fl.seed;
            rep.status = Status::verified; // round-trip checked below
            GFpPoly prod = GFpPoly::constant(factor_p, fl.unit);
            Json factors = Json::array();
            for (const auto& fac : fl.factors) {
                factors.push_back({{"factor", fac.poly.to_string()},
                                   {"degree", fac.poly.degree()},
                                   {"multiplicity", fac.multiplicity}});
                for (long i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
            }
            if (!(prod == A[factor_n])) {
                rep.status = Status::falsified;
                rep.add_witness({{"reason", "factor product does not reconstruct input"}});
            }
            rep.details = {{"input", A[factor_n].to_string()}, {"factors", factors}};
            reports.push_back(std::move(rep));
        } else if (certify->parsed()) {
            reports.push_back(
                modp_nonvanishing_certificate(parse_poly(minpoly_csv), g, certify_p));
        } else if (v_zeta->parsed()) {
            reports.push_back(verify_roots_of_unity(g, zeta_N, zeta_M, zeta_mlo, jobs));
        } else if (v_shift->parsed()) {
            reports.push_back(verify_shifted_nonvanishing(g, sh_m, sh_mu, sh_samples,
                                                          seed, sh_box, sh_N));
        } else if (v_zmija->parsed()) {
            reports.push_back(zmija_conditions(g));
        } else if (v_period->parsed()) {
            reports.push_back(verify_periodicity(g, period_p, period_N));
        } else if (v_fall->parsed()) {
            reports.push_back(verify_falling_factorial(g, fall_p));
        } else if (v_hook->parsed()) {
            reports.push_back(verify_hook_length_identity(hook_n));
        } else if (v_pent->parsed()) {
            reports.push_back(pentagonal_pattern_check(pent_N));
        } else if (c_inertial->parsed()) {
            auto sd = inertial_data(cy_p, cy_m);
            Report rep;
            rep.claim_id = "cyclo.inertial";
            rep.params = {{"p", cy_p}, {"m", cy_m}};
            rep.status = Status::verified;
            rep.details = {{"e", sd.e},
                           {"f", sd.f},
                           {"g", sd.g_count},
                           {"phi", euler_phi(cy_m)},
                           {"in_R_p", in_R_p(cy_p, cy_m)}};
            reports.push_back(std::move(rep));
        } else if (c_dk->parsed()) {
            reports.push_back(dedekind_kummer_check(cy_p, cy_m));
        } else if (c_minpoly->parsed()) {
            auto alpha = CycloElem::from_coords(cy_m, parse_coords(alpha_csv));
            auto mp = min_poly(alpha);
            Report rep;
            rep.claim_id = "cyclo.min-poly";
            rep.params = {{"m", cy_m}, {"alpha", alpha.to_string()}};
            rep.status = Status::verified;
            rep.details = {{"min_poly", mp.poly.to_string()},
                           {"degree", mp.poly.degree()},
                           {"primitive", mp.primitive}};
            reports.push_back(std::move(rep));
        } else if (c_index->parsed()) {
            auto alpha = CycloElem::from_coords(cy_m, parse_coords(alpha_csv));
            reports.push_back(index_coprime_check(alpha, cy_p));
        } else if (roots_cmd->parsed()) {
            auto sep = n_range.find(':');
            if (sep == std::string::npos) throw error("--n-range must be lo:hi");
            long lo = std::stol(n_range.substr(0, sep));
            long hi = std::stol(n_range.substr(sep + 1));
            std::stringstream cs(checks);
            std::string c;
            while (std::getline(cs, c, ',')) {
                if (c == "hurwitz")
                    reports.push_back(hurwitz_report(g, lo, hi, tol, 12, jobs));
                else if (c == "radius")
                    reports.push_back(radius_report(g, std::max<long>(lo, 2), hi, jobs));
                else if (c == "kostant")
                    reports.push_back(kostant_han_scan(lo, hi));
                else if (c == "imaginary") {
                    std::vector<long> ts;
                    std::stringstream tss(t_list);
                    std::string tv;
                    while (std::getline(tss, tv, ',')) ts.push_back(std::stol(tv));
                    reports.push_back(imaginary_axis_scan(g, ts, hi));
                } else {
                    throw error("unknown check: " + c);
                }
            }
        } else if (suite->parsed()) {
            auto profile = profile_name == "quick" ? SuiteProfile::quick()
                                                   : SuiteProfile::full();
            reports = run_suite(g, profile, seed, jobs);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!suite->parsed()) {
        std::sort(reports.begin(), reports.end(),
                  [](const Report& a, const Report& b) {
                      if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
                      return a.params.dump() < b.params.dump();
                  });
    }
    for (const auto& r : reports) *sink << r.to_line(timings) << "\n";

    Status worst = worst_status(reports);
    if (worst == Status::falsified || worst == Status::violation_candidate) return 1;
    if (worst == Status::hypothesis_violated) return 2;
    return 0;
}

} // namespace darcais::cli
