#include "darcais/roots.hpp"

#include "darcais/errors.hpp"
#include "darcais/gfp.hpp"
#include "darcais/nt.hpp"
#include "darcais/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace darcais {

namespace {

using cd = std::complex<double>;

std::vector<double> normalized_coeffs(const IntPoly& a) {
    double maxabs = 0.0;
    std::vector<double> c(a.degree() + 1);
    for (long k = 0; k <= a.degree(); ++k) {
        c[k] = a.coeff(k).get_d();
        maxabs = std::max(maxabs, std::fabs(c[k]));
    }
    for (auto& v : c) v /= maxabs;
    return c;
}

cd horner(const std::vector<double>& c, cd z) {
    cd acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Fujiwara root bound: 2 max_k |c_{d-k}/c_d|^{1/k}.
double root_bound(const std::vector<double>& c) {
    long d = static_cast<long>(c.size()) - 1;
    double b = 0.0;
    for (long k = 1; k <= d; ++k) {
        double q = std::fabs(c[d - k] / c[d]);
        if (q > 0) b = std::max(b, std::pow(q, 1.0 / k));
    }
    return 2.0 * b + 1e-12;
}

} // namespace

RootSet complex_roots(const IntPoly& a, int /*jobs*/) {
    if (a.degree() < 1) throw error("root extraction needs degree >= 1");
    RootSet rs;
    auto c = normalized_coeffs(a);
    long d = static_cast<long>(c.size()) - 1;
    std::vector<double> dc(d);
    for (long k = 1; k <= d; ++k) dc[k - 1] = c[k] * k;

    // Fixed initial configuration: points on a circle inside the root bound,
    // angle-offset to avoid symmetry stalls.
    double r0 = 0.7 * root_bound(c);
    std::vector<cd> z(d);
    for (long i = 0; i < d; ++i) {
        double theta = 2.0 * M_PI * i / d + 0.4 / d + 0.5;
        z[i] = r0 * cd(std::cos(theta), std::sin(theta));
    }

    const int max_iter = 500;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool settled = true;
        for (long i = 0; i < d; ++i) {
            cd p = horner(c, z[i]);
            if (std::abs(p) == 0.0) continue;
            cd pd = horner(dc, z[i]);
            cd newton = (pd == cd(0.0)) ? cd(1e-8, 1e-8) : p / pd;
            cd sum = 0.0;
            for (long j = 0; j < d; ++j)
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            cd w = newton / (1.0 - newton * sum);
            z[i] -= w;
            if (std::abs(w) > 1e-13 * (1.0 + std::abs(z[i]))) settled = false;
        }
        if (settled) break;
    }
    rs.roots = std::move(z);
    std::sort(rs.roots.begin(), rs.roots.end(), [](cd a, cd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    // Convergence is judged by the residual contract, not the step size:
    // |A(r)| <= 1e-10 * sum|c_k| * max(1,|r|)^deg with an order of headroom.
    rs.residual.resize(d);
    double coeff_sum = 0.0;
    for (long k = 0; k <= d; ++k) coeff_sum += std::fabs(c[k]);
    rs.converged = true;
    for (long i = 0; i < d; ++i) {
        double m = std::max(1.0, std::abs(rs.roots[i]));
        double mp = 1.0;
        for (long k = 0; k < d; ++k) mp *= m;
        rs.residual[i] = std::abs(horner(c, rs.roots[i])) / (coeff_sum * mp);
        if (!(rs.residual[i] <= 1e-11)) rs.converged = false;
    }
    return rs;
}

RouthResult routh_hurwitz_stable(const IntPoly& a) {
    long d = a.degree();
    if (d < 1) return {true, true};
    // rows of the Routh table, exact rationals
    std::vector<Rat> r0, r1;
    for (long k = d; k >= 0; k -= 2) r0.emplace_back(a.coeff(k));
    for (long k = d - 1; k >= 0; k -= 2) r1.emplace_back(a.coeff(k));
    // leading coefficient positive convention
    if (r0[0] < 0)
        for (auto* row : {&r0, &r1})
            for (auto& v : *row) v = -v;

    std::vector<Rat> first_col{r0[0]};
    while (!r1.empty()) {
        first_col.push_back(r1[0]);
        if (r1[0] == 0) return {false, false}; // degenerate pivot
        std::vector<Rat> next;
        size_t len = r0.size() >= 1 ? r0.size() - 1 : 0;
        for (size_t j = 0; j < len; ++j) {
            Rat above = j + 1 < r0.size() ? r0[j + 1] : Rat(0);
            Rat side = j + 1 < r1.size() ? r1[j + 1] : Rat(0);
            Rat v = (r1[0] * above - r0[0] * side) / r1[0];
            v.canonicalize();
            next.push_back(v);
        }
        r0 = std::move(r1);
        r1 = std::move(next);
        while (!r1.empty() && r1.size() > r0.size()) r1.pop_back();
    }
    for (const auto& v : first_col)
        if (v <= 0) return {true, false};
    return {true, true};
}

int squarefree_over_q(const IntPoly& a) {
    static const long witnesses[] = {10007, 10009, 10037, 10039, 10061,
                                     10067, 10069, 10079, 10091, 10093};
    for (long p : witnesses) {
        if (a.coeff(a.degree()) % p == 0) continue;
        GFpPoly f = reduce_mod_p(a, p);
        if (gcd(f, f.derivative()).degree() == 0) return 1;
    }
    return 0; // no witness found; does not certify non-squarefreeness
}

Report hurwitz_report(const ArithFn& g, long n_lo, long n_hi, double tol,
                      long routh_cap, int jobs) {
    Timer t;
    Report rep;
    rep.claim_id = "conjecture.hurwitz-simple";
    rep.params = {{"g", g.name()}, {"n_lo", n_lo}, {"n_hi", n_hi}, {"tol", tol}};
    rep.status = Status::consistent;

    auto A = darcais_sequence(g, n_hi);
    struct Item {
        Status st = Status::consistent;
        Json witness;
        bool routh_checked = false, routh_ok = false;
        int sqfree = 0;
    };
    std::vector<Item> items(n_hi - n_lo + 1);

    parallel_for(n_lo, n_hi + 1, jobs, [&](long n) {
        Item& it = items[n - n_lo];
        IntPoly body = A[n].quotient_by_x(); // "the zero at x = 0 is irrelevant"
        if (body.degree() < 1) return;       // n = 1: constant, nothing to check
        RootSet rs = complex_roots(body);
        if (!rs.converged) {
            it.st = Status::indeterminate;
            it.witness = {{"n", n}, {"reason", "root iteration did not converge"}};
            return;
        }
        for (const auto& r : rs.roots) {
            if (r.real() >= -tol) {
                it.st = Status::violation_candidate;
                it.witness = {{"n", n},
                              {"root_re", r.real()},
                              {"root_im", r.imag()},
                              {"reason", "real part not below -tol"}};
                return;
            }
        }
        for (size_t i = 0; i < rs.roots.size(); ++i)
            for (size_t j = i + 1; j < rs.roots.size(); ++j)
                if (std::abs(rs.roots[i] - rs.roots[j]) <= tol) {
                    it.st = Status::violation_candidate;
                    it.witness = {{"n", n},
                                  {"reason", "root pair closer than tol"},
                                  {"re", rs.roots[i].real()},
                                  {"im", rs.roots[i].imag()}};
                    return;
                }
        // exact cross-checks
        it.sqfree = squarefree_over_q(body);
        if (n <= routh_cap) {
            it.routh_checked = true;
            auto rh = routh_hurwitz_stable(body);
            it.routh_ok = rh.determinate && rh.stable;
        }
    });

    long routh_confirmed = 0, sqfree_confirmed = 0;
    for (long n = n_lo; n <= n_hi; ++n) {
        auto& it = items[n - n_lo];
        if (it.st != Status::consistent) {
            if (severity(it.st) > severity(rep.status)) rep.status = it.st;
            rep.add_witness(it.witness);
        }
        if (it.routh_checked) {
            if (it.routh_ok) {
                ++routh_confirmed;
            } else {
                rep.status = Status::falsified; // exact arithmetic: not a candidate
                rep.add_witness({{"n", n}, {"reason", "exact Routh-Hurwitz says unstable"}});
            }
        }
        if (it.sqfree == 1) ++sqfree_confirmed;
    }
    rep.details = {{"routh_exact_confirmed_upto", std::min(n_hi, routh_cap)},
                   {"routh_confirmed_count", routh_confirmed},
                   {"squarefree_witness_count", sqfree_confirmed}};
    rep.timing_ms = t.ms();
    return rep;
}

Report radius_report(const ArithFn& g, long n_lo, long n_hi, int jobs) {
    Timer t;
    Report rep;
    rep.claim_id = "bound.zero-free-radius";
    const double c_bound = 9.7226;
    rep.params = {{"g", g.name()}, {"n_lo", n_lo}, {"n_hi", n_hi}, {"c", c_bound}};
    rep.status = Status::consistent;
    if (n_lo < 2) throw error("radius ratio needs n >= 2");

    auto A = darcais_sequence(g, n_hi);
    std::vector<double> ratio(n_hi - n_lo + 1, 0.0);
    std::vector<char> conv(n_hi - n_lo + 1, 1);
    parallel_for(n_lo, n_hi + 1, jobs, [&](long n) {
        RootSet rs = complex_roots(A[n]);
        conv[n - n_lo] = rs.converged ? 1 : 0;
        double mx = 0.0;
        for (const auto& r : rs.roots) mx = std::max(mx, std::abs(r));
        ratio[n - n_lo] = mx / static_cast<double>(n - 1);
    });

    double running_max = 0.0;
    long argmax = n_lo;
    for (long n = n_lo; n <= n_hi; ++n) {
        if (!conv[n - n_lo]) {
            if (severity(Status::indeterminate) > severity(rep.status))
                rep.status = Status::indeterminate;
            rep.add_witness({{"n", n}, {"reason", "root iteration did not converge"}});
            continue;
        }
        if (ratio[n - n_lo] > running_max) {
            running_max = ratio[n - n_lo];
            argmax = n;
        }
        if (ratio[n - n_lo] > c_bound) {
            rep.status = Status::violation_candidate;
            rep.add_witness({{"n", n}, {"ratio", ratio[n - n_lo]}});
        }
    }
    rep.details = {{"max_ratio", running_max}, {"argmax_n", argmax}};
    rep.timing_ms = t.ms();
    return rep;
}

Report kostant_han_scan(long n_lo, long n_hi) {
    Timer t;
    Report rep;
    rep.claim_id = "kostant-han.boundary";
    rep.params = {{"n_lo", n_lo}, {"n_hi", n_hi}};
    rep.status = Status::verified;

    auto A = darcais_sequence(ArithFn::sigma(), n_hi);
    Json table = Json::array();
    for (long n = std::max<long>(n_lo, 1); n <= n_hi; ++n) {
        for (long m = n; m <= n + 3; ++m) {
            Int x = -(Int(m) * m - 1);
            Int v = A[n].eval(x);
            bool zero = v == 0;
            if (zero && m == n) {
                // vanishing on the |x| = n^2 - 1 boundary; evidence, not failure
                rep.add_witness({{"kind", "boundary_vanishing"},
                                 {"n", n},
                                 {"m", m},
                                 {"x", x.get_str()}});
            } else if (zero) {
                rep.status = Status::falsified; // would contradict the interior bound
                rep.add_witness({{"kind", "interior_vanishing"},
                                 {"n", n},
                                 {"m", m},
                                 {"x", x.get_str()}});
            }
            table.push_back({{"n", n}, {"m", m}, {"zero", zero}});
        }
    }
    rep.details = {{"scan", table}};
    rep.timing_ms = t.ms();
    return rep;
}

Report imaginary_axis_scan(const ArithFn& g, const std::vector<long>& t_values,
                           long N) {
    Timer t;
    Report rep;
    rep.claim_id = "scan.imaginary-axis";
    rep.params = {{"g", g.name()}, {"t", t_values}, {"N", N}};
    rep.status = Status::verified;

    auto A = darcais_sequence(g, N);
    Json per_t = Json::array();
    for (long tv : t_values) {
        if (tv == 0) throw error("t values must be nonzero");
        long zeros = 0;
        for (long n = 1; n <= N; ++n) {
            auto [re, im] = A[n].eval_gaussian(Int(0), Int(tv));
            if (re == 0 && im == 0) {
                ++zeros;
                rep.status = Status::falsified;
                rep.add_witness({{"t", tv}, {"n", n}});
            }
        }
        long a = ((tv % 3) + 3) % 3;
        std::string covered = (a == 1 || a == 2) ? "mod-3 certificate (m=4, p=3)"
                              : (tv == 3 || tv == -3)
                                  ? "mod-7 certificate (x^2+9)"
                                  : "none (empirical only)";
        per_t.push_back({{"t", tv}, {"zeros", zeros}, {"covered_by", covered}});
    }
    rep.details = {{"per_t", per_t}};
    rep.timing_ms = t.ms();
    return rep;
}

} // namespace darcais
