#include "darcais/gfp.hpp"

#include "darcais/errors.hpp"
#include "darcais/nt.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace darcais {

namespace {

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p; // p < 2^31, so a*b < 2^62
}
std::uint64_t powm(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t invm(std::uint64_t a, std::uint64_t p) { return powm(a, p - 2, p); }

void check_prime(std::uint64_t p) {
    if (p >= (1ull << 31) || !is_prime_u64(p)) throw not_prime(p);
}

} // namespace

GFpPoly::GFpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    normalize();
}

void GFpPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

GFpPoly GFpPoly::constant(std::uint64_t p, std::uint64_t v) {
    return GFpPoly(p, std::vector<std::uint64_t>{v});
}

GFpPoly GFpPoly::x(std::uint64_t p) {
    return GFpPoly(p, std::vector<std::uint64_t>{0, 1});
}

std::uint64_t GFpPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return 0;
    return c_[k];
}

GFpPoly GFpPoly::operator+(const GFpPoly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = addm(coeff(i), o.coeff(i), p_);
    return GFpPoly(p_, std::move(r));
}

GFpPoly GFpPoly::operator-(const GFpPoly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = subm(coeff(i), o.coeff(i), p_);
    return GFpPoly(p_, std::move(r));
}

GFpPoly GFpPoly::operator*(const GFpPoly& o) const {
    if (is_zero() || o.is_zero()) return GFpPoly(p_);
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % p_;
    }
    return GFpPoly(p_, std::move(r));
}

bool GFpPoly::operator<(const GFpPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (long k = degree(); k >= 0; --k)
        if (coeff(k) != o.coeff(k)) return coeff(k) < o.coeff(k);
    return false;
}

GFpPoly GFpPoly::monic() const {
    if (is_zero()) return *this;
    std::uint64_t inv = invm(c_.back(), p_);
    std::vector<std::uint64_t> r(c_);
    for (auto& v : r) v = mulm(v, inv, p_);
    return GFpPoly(p_, std::move(r));
}

GFpPoly GFpPoly::derivative() const {
    if (c_.size() <= 1) return GFpPoly(p_);
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = mulm(c_[i], i % p_, p_);
    return GFpPoly(p_, std::move(r));
}

std::pair<GFpPoly, GFpPoly> GFpPoly::divmod(const GFpPoly& divisor) const {
    if (divisor.is_zero()) throw zero_polynomial();
    long dd = divisor.degree();
    if (degree() < dd) return {GFpPoly(p_), *this};
    std::uint64_t lead_inv = invm(divisor.c_.back(), p_);
    std::vector<std::uint64_t> rem(c_);
    std::vector<std::uint64_t> quo(degree() - dd + 1, 0);
    for (long i = degree(); i >= dd; --i) {
        std::uint64_t f = mulm(rem[i], lead_inv, p_);
        if (f == 0) continue;
        quo[i - dd] = f;
        for (long j = 0; j <= dd; ++j)
            rem[i - dd + j] = subm(rem[i - dd + j], mulm(f, divisor.coeff(j), p_), p_);
    }
    return {GFpPoly(p_, std::move(quo)), GFpPoly(p_, std::move(rem))};
}

bool GFpPoly::divides(const GFpPoly& f) const {
    if (is_zero()) return f.is_zero();
    return f.divmod(*this).second.is_zero();
}

std::string GFpPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        std::uint64_t v = coeff(k);
        if (v == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (v != 1 || k == 0) os << v;
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

GFpPoly gcd(GFpPoly a, GFpPoly b) {
    while (!b.is_zero()) {
        GFpPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

GFpPoly powmod(const GFpPoly& base, const Int& e, const GFpPoly& modulus) {
    GFpPoly result = GFpPoly::constant(base.modulus(), 1);
    GFpPoly b = base.mod(modulus);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) result = (result * b).mod(modulus);
        k >>= 1;
        if (k > 0) b = (b * b).mod(modulus);
    }
    return result;
}

GFpPoly pth_root(const GFpPoly& f) {
    std::uint64_t p = f.modulus();
    std::vector<std::uint64_t> r;
    for (long k = 0; k <= f.degree(); k += p) r.push_back(f.coeff(k));
    return GFpPoly(p, std::move(r));
}

namespace {

// Distinct-degree split of a squarefree monic polynomial: (product, degree).
std::vector<std::pair<GFpPoly, long>> distinct_degree(const GFpPoly& f) {
    std::uint64_t p = f.modulus();
    std::vector<std::pair<GFpPoly, long>> out;
    GFpPoly rem = f;
    GFpPoly h = GFpPoly::x(p).mod(rem); // x^{p^d} mod rem, d = 0
    long d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (2 * d > rem.degree()) {
            out.emplace_back(rem, rem.degree());
            break;
        }
        h = powmod(h, Int(static_cast<long>(p)), rem);
        GFpPoly g = gcd(h - GFpPoly::x(p), rem);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rem = rem.divmod(g).first;
            h = h.mod(rem);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting of a monic squarefree product of
// irreducibles of degree d.
void equal_degree(const GFpPoly& f, long d, std::mt19937_64& rng,
                  std::vector<GFpPoly>& out) {
    std::uint64_t p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    while (true) {
        std::vector<std::uint64_t> rc(f.degree());
        for (auto& v : rc) v = dist(rng);
        GFpPoly u(p, std::move(rc));
        if (u.degree() < 1) continue;
        GFpPoly g = gcd(u, f);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map u + u^2 + ... + u^{2^{d-1}} mod f
                GFpPoly t = u.mod(f);
                GFpPoly acc = t;
                for (long i = 1; i < d; ++i) {
                    t = (t * t).mod(f);
                    acc = acc + t;
                }
                g = gcd(acc, f);
            } else {
                Int e = 1;
                for (long i = 0; i < d; ++i) e *= static_cast<long>(p);
                e = (e - 1) / 2;
                GFpPoly w = powmod(u, e, f);
                g = gcd(w - GFpPoly::constant(p, 1), f);
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f.divmod(g).first, d, rng, out);
            return;
        }
    }
}

// Distinct irreducible factors of a monic polynomial of degree >= 1.
void radical_factors(const GFpPoly& f, std::mt19937_64& rng,
                     std::vector<GFpPoly>& out) {
    if (f.degree() <= 0) return;
    if (f.derivative().is_zero()) {
        radical_factors(pth_root(f), rng, out);
        return;
    }
    GFpPoly sqf = f.divmod(gcd(f, f.derivative())).first.monic();
    std::vector<GFpPoly> found;
    for (const auto& [part, d] : distinct_degree(sqf))
        equal_degree(part, d, rng, found);
    GFpPoly rest = f;
    for (const auto& q : found)
        while (q.divides(rest)) rest = rest.divmod(q).first;
    out.insert(out.end(), found.begin(), found.end());
    radical_factors(rest, rng, out); // factors with multiplicity divisible by p
}

} // namespace

FactorList factor_gfp(const GFpPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw zero_polynomial();
    FactorList fl;
    fl.unit = f.leading();
    fl.seed = seed;
    if (f.degree() == 0) return fl;
    std::mt19937_64 rng(seed);
    std::vector<GFpPoly> rad;
    radical_factors(f.monic(), rng, rad);
    std::sort(rad.begin(), rad.end());
    for (const auto& q : rad) {
        long mult = 0;
        GFpPoly rest = f;
        while (q.divides(rest)) {
            rest = rest.divmod(q).first;
            ++mult;
        }
        fl.factors.push_back({q, mult});
    }
    return fl;
}

bool is_irreducible(const GFpPoly& f) {
    if (f.degree() < 1) return false;
    std::uint64_t p = f.modulus();
    long d = f.degree();
    GFpPoly xp = GFpPoly::x(p);
    Int pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
    if (!(powmod(xp, pd, f) - xp.mod(f)).is_zero()) return false;
    for (auto [ell, e] : factorize(d)) {
        Int sub;
        mpz_ui_pow_ui(sub.get_mpz_t(), p, d / ell);
        GFpPoly h = powmod(xp, sub, f) - xp.mod(f);
        if (gcd(h, f).degree() != 0) return false;
    }
    return true;
}

std::set<long> degree_spectrum(const GFpPoly& f) {
    if (f.is_zero()) throw zero_polynomial();
    std::set<long> degs;
    for (const auto& fac : factor_gfp(f).factors) degs.insert(fac.poly.degree());
    return degs;
}

bool splits_into_linears(const GFpPoly& f) {
    auto degs = degree_spectrum(f);
    return degs.empty() || (degs.size() == 1 && *degs.begin() == 1);
}

GFpPoly reduce_mod_p(const IntPoly& a, std::uint64_t p) {
    check_prime(p);
    std::vector<std::uint64_t> r(a.degree() + 1);
    for (long k = 0; k <= a.degree(); ++k) {
        Int v = a.coeff(k) % static_cast<long>(p);
        if (v < 0) v += static_cast<long>(p);
        r[k] = v.get_ui();
    }
    return GFpPoly(p, std::move(r));
}

std::vector<GFpPoly> darcais_sequence_mod_p(const ArithFn& g, std::uint64_t p, long N) {
    check_prime(p);
    std::vector<std::uint64_t> gm(N + 1);
    for (long k = 1; k <= N; ++k) {
        Int v = g(k) % static_cast<long>(p);
        if (v < 0) v += static_cast<long>(p);
        gm[k] = v.get_ui();
    }
    std::vector<GFpPoly> A;
    A.reserve(N + 1);
    A.push_back(GFpPoly::constant(p, 1));
    for (long n = 1; n <= N; ++n) {
        GFpPoly s(p);
        std::uint64_t c = 1 % p; // (n-1)!/(n-k)! mod p
        for (long k = 1; k <= n; ++k) {
            std::uint64_t scale = mulm(c, gm[k], p);
            if (scale != 0)
                s = s + A[n - k] * GFpPoly::constant(p, scale);
            c = mulm(c, (n - k) % p, p);
        }
        // multiply by x
        std::vector<std::uint64_t> coeffs(s.degree() + 2, 0);
        for (long k = 0; k <= s.degree(); ++k) coeffs[k + 1] = s.coeff(k);
        A.push_back(GFpPoly(p, std::move(coeffs)));
    }
    return A;
}

GFpPoly falling_factorial_mod_p(std::uint64_t p) {
    GFpPoly f = GFpPoly::constant(p, 1);
    for (std::uint64_t i = 0; i < p; ++i)
        f = f * (GFpPoly::x(p) - GFpPoly::constant(p, i));
    return f;
}

// --- Lemma verifiers ---------------------------------------------------------

Report verify_periodicity(const ArithFn& g, std::uint64_t p, long N) {
    check_prime(p);
    Timer t;
    Report rep;
    rep.claim_id = "lemma.periodicity";
    rep.params = {{"g", g.name()}, {"p", p}, {"N", N}};
    rep.status = Status::verified;

    auto A = darcais_sequence_mod_p(g, p, N);
    GFpPoly ap_power = GFpPoly::constant(p, 1); // (A_p)^l
    long ell = 0;
    for (long n = 0; n <= N; ++n) {
        long l = n / static_cast<long>(p), r = n % static_cast<long>(p);
        while (ell < l) {
            ap_power = ap_power * A[p];
            ++ell;
        }
        GFpPoly rhs = A[r] * ap_power;
        if (!(A[n] == rhs)) {
            rep.status = Status::falsified;
            rep.add_witness({{"n", n},
                             {"p", p},
                             {"lhs", A[n].to_string()},
                             {"rhs", rhs.to_string()}});
            break;
        }
    }
    rep.timing_ms = t.ms();
    return rep;
}

Report verify_falling_factorial(const ArithFn& g, std::uint64_t p) {
    check_prime(p);
    Timer t;
    Report rep;
    rep.claim_id = "lemma.falling-factorial";
    rep.params = {{"g", g.name()}, {"p", p}};

    auto A = darcais_sequence(g, static_cast<long>(p));

    // Hypothesis probe: P_n = A_n/n! integer-valued for n <= p, i.e.
    // n! | A_n(j) at the n+1 consecutive points j = 0..n.
    bool integer_valued = true;
    Json probe_witness;
    Int fact = 1;
    for (long n = 1; n <= static_cast<long>(p) && integer_valued; ++n) {
        fact *= n;
        for (long j = 0; j <= n; ++j) {
            if (A[n].eval(Int(j)) % fact != 0) {
                integer_valued = false;
                probe_witness = {{"n", n},
                                 {"x", j},
                                 {"A_n(x)", A[n].eval(Int(j)).get_str()},
                                 {"n!", fact.get_str()}};
                break;
            }
        }
    }

    GFpPoly lhs = reduce_mod_p(A[p], p);
    GFpPoly rhs = falling_factorial_mod_p(p);
    bool congruent = lhs == rhs;

    rep.details = {{"hypothesis_P_integer_valued", integer_valued},
                   {"hypothesis_note",
                    "probed n! | A_n(j) for n <= p, j = 0..n; the congruence "
                    "A_p == x(x-1)...(x-p+1) mod p assumes integer-valued P_n"}};
    if (congruent) {
        rep.status = Status::verified;
    } else if (!integer_valued) {
        rep.status = Status::hypothesis_violated;
        rep.add_witness({{"A_p_mod_p", lhs.to_string()},
                         {"falling_factorial", rhs.to_string()},
                         {"non_integer_value", probe_witness}});
    } else {
        rep.status = Status::falsified;
        rep.add_witness({{"A_p_mod_p", lhs.to_string()},
                         {"falling_factorial", rhs.to_string()}});
    }
    rep.timing_ms = t.ms();
    return rep;
}

Report zmija_conditions(const ArithFn& g) {
    Timer t;
    Report rep;
    rep.claim_id = "thm2.zmija-conditions";
    rep.params = {{"g", g.name()}};
    rep.status = Status::verified;
    Json conds = Json::array();

    struct Cond {
        int id;
        std::uint64_t p;
        long r_lo, r_hi;
        long banned_degree;
    };
    // Condition (3) reduces to banning degree exactly 6: an irreducible
    // q != x over F_11 divides x^{11^d - 1} - 1 iff deg q | d, and among
    // 1..10 only d = 6 is a multiple of 6.
    const Cond table[] = {{1, 5, 3, 4, 2}, {2, 7, 2, 6, 4}, {3, 11, 2, 10, 6}};

    for (const auto& c : table) {
        auto A = darcais_sequence_mod_p(g, c.p, c.r_hi);
        bool holds = true;
        Json spectra = Json::object();
        for (long r = c.r_lo; r <= c.r_hi; ++r) {
            auto fl = factor_gfp(A[r]);
            Json degs = Json::array();
            for (const auto& fac : fl.factors) degs.push_back(fac.poly.degree());
            spectra[std::to_string(r)] = degs;
            for (const auto& fac : fl.factors) {
                if (fac.poly.degree() == c.banned_degree) {
                    holds = false;
                    rep.add_witness({{"condition", c.id},
                                     {"p", c.p},
                                     {"r", r},
                                     {"factor", fac.poly.to_string()},
                                     {"degree", fac.poly.degree()}});
                }
            }
        }
        conds.push_back({{"condition", c.id},
                         {"p", c.p},
                         {"banned_degree", c.banned_degree},
                         {"holds", holds},
                         {"degree_spectra", spectra}});
        if (!holds) rep.status = Status::falsified;
    }
    rep.details = {{"conditions", conds}};
    rep.timing_ms = t.ms();
    return rep;
}

Report modp_nonvanishing_certificate(const IntPoly& minpoly, const ArithFn& g,
                                     std::uint64_t p) {
    check_prime(p);
    if (!minpoly.is_monic()) throw non_monic();
    Timer t;
    Report rep;
    rep.claim_id = "certificate.modp-nonvanishing";
    rep.params = {{"minpoly", minpoly.to_string()}, {"g", g.name()}, {"p", p}};

    GFpPoly m = reduce_mod_p(minpoly, p);
    auto fl = factor_gfp(m);
    Json factor_info = Json::array();
    for (const auto& fac : fl.factors)
        factor_info.push_back({{"factor", fac.poly.to_string()},
                               {"degree", fac.poly.degree()},
                               {"multiplicity", fac.multiplicity}});

    rep.status = Status::certified;
    for (const auto& fac : fl.factors) {
        if (fac.poly.degree() < 2) {
            rep.status = Status::inconclusive;
            rep.add_witness({{"reason", "linear factor mod p"},
                             {"factor", fac.poly.to_string()}});
        }
    }
    if (rep.status == Status::certified) {
        auto A = darcais_sequence_mod_p(g, p, static_cast<long>(p));
        // The chain needs A_p to split into linear factors mod p; verify it
        // rather than assuming (it can fail for g with g(3) == 2 mod 3).
        if (!splits_into_linears(A[p])) {
            rep.status = Status::inconclusive;
            rep.add_witness({{"reason", "A_p mod p does not split into linear factors"},
                             {"A_p", A[p].to_string()}});
        }
        for (long r = 1; r < static_cast<long>(p) && rep.status == Status::certified; ++r) {
            for (const auto& fac : fl.factors) {
                if (fac.poly.divides(A[r])) {
                    rep.status = Status::inconclusive;
                    rep.add_witness({{"reason", "factor divides A_r mod p"},
                                     {"r", r},
                                     {"factor", fac.poly.to_string()},
                                     {"A_r", A[r].to_string()}});
                }
            }
        }
    }
    rep.details = {
        {"factors_mod_p", factor_info},
        {"soundness",
         "if P_n^g(alpha) = 0 then minpoly | A_n over Z, so each irreducible "
         "factor of minpoly mod p divides A_n == A_r * (A_p)^l (mod p); A_p "
         "splits into linear factors mod p, hence a degree >= 2 factor must "
         "divide A_r for some 1 <= r <= p-1. No factor does, and none is "
         "linear, so P_n^g(alpha) != 0 for all n >= 1."}};
    rep.timing_ms = t.ms();
    return rep;
}

} // namespace darcais
