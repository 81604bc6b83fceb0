#include "darcais/cyclo.hpp"

#include "darcais/errors.hpp"
#include "darcais/gfp.hpp"
#include "darcais/nt.hpp"
#include "darcais/parallel.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

namespace darcais {

const IntPoly& cyclotomic_poly(long m) {
    static std::map<long, IntPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    // x^m - 1 divided by Phi_d for all proper divisors d; compute bottom-up
    // so recursion never reenters the lock.
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        std::vector<Int> xm(d + 1);
        xm[0] = -1;
        xm[d] = 1;
        IntPoly num(std::move(xm));
        for (long dd = 1; dd < d; ++dd) {
            if (d % dd != 0) continue;
            auto [q, r] = num.divmod_monic(cache.at(dd));
            num = std::move(q);
        }
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

SplittingData inertial_data(long p, long m) {
    if (!is_prime_u64(p)) throw not_prime(p);
    SplittingData sd;
    sd.p = p;
    sd.m = m;
    long mp = coprime_part(m, p);
    sd.f = multiplicative_order(p % mp, mp);
    long p_part = m / mp;
    sd.e = euler_phi(p_part);
    sd.g_count = euler_phi(m) / (sd.e * sd.f);
    return sd;
}

bool in_R_p(long p, long m) {
    bool f_is_one = inertial_data(p, m).f == 1;
    if (p == 2) {
        long r = m;
        while (r % 2 == 0) r /= 2;
        bool closed = (r == 1);
        if (closed != f_is_one) throw error("R_2 closed form disagrees with order computation");
    } else if (p == 3) {
        long r = m;
        if (r % 2 == 0) r /= 2;
        while (r % 3 == 0) r /= 3;
        bool closed = (r == 1);
        if (closed != f_is_one) throw error("R_3 closed form disagrees with order computation");
    }
    return f_is_one;
}

Report dedekind_kummer_check(long p, long m) {
    Timer t;
    Report rep;
    rep.claim_id = "dk.cyclotomic-splitting";
    rep.params = {{"p", p}, {"m", m}};
    auto sd = inertial_data(p, m);
    auto fl = factor_gfp(reduce_mod_p(cyclotomic_poly(m), p));
    rep.status = Status::verified;
    Json factors = Json::array();
    for (const auto& fac : fl.factors)
        factors.push_back({{"factor", fac.poly.to_string()},
                           {"degree", fac.poly.degree()},
                           {"multiplicity", fac.multiplicity}});
    rep.details = {{"e", sd.e}, {"f", sd.f}, {"g", sd.g_count}, {"factors", factors}};
    if (static_cast<long>(fl.factors.size()) != sd.g_count) {
        rep.status = Status::falsified;
        rep.add_witness({{"reason", "distinct factor count != g"},
                         {"count", fl.factors.size()},
                         {"g", sd.g_count}});
        rep.timing_ms = t.ms();
        return rep;
    }
    for (const auto& fac : fl.factors) {
        if (fac.poly.degree() != sd.f || fac.multiplicity != sd.e) {
            rep.status = Status::falsified;
            rep.add_witness({{"factor", fac.poly.to_string()},
                             {"degree", fac.poly.degree()},
                             {"multiplicity", fac.multiplicity},
                             {"expected_degree", sd.f},
                             {"expected_multiplicity", sd.e}});
        }
    }
    rep.timing_ms = t.ms();
    return rep;
}

// --- CycloElem ---------------------------------------------------------------

CycloElem::CycloElem(long m) : m_(m), coords_(euler_phi(m)) {}

CycloElem CycloElem::zeta(long m) {
    CycloElem z(m);
    if (z.coords_.size() > 1)
        z.coords_[1] = 1;
    else
        z.coords_[0] = (m == 1) ? 1 : -1; // zeta_1 = 1, zeta_2 = -1
    return z;
}

CycloElem CycloElem::integer(long m, Int v) {
    CycloElem z(m);
    z.coords_[0] = std::move(v);
    return z;
}

CycloElem CycloElem::from_poly(long m, const IntPoly& p) {
    CycloElem z(m);
    IntPoly rem = p.divmod_monic(cyclotomic_poly(m)).second;
    for (long k = 0; k <= rem.degree(); ++k) z.coords_[k] = rem.coeff(k);
    return z;
}

CycloElem CycloElem::from_coords(long m, std::vector<Int> coords) {
    CycloElem z(m);
    if (static_cast<long>(coords.size()) != euler_phi(m)) throw conductor_mismatch();
    z.coords_ = std::move(coords);
    return z;
}

bool CycloElem::is_zero() const {
    for (const auto& v : coords_)
        if (v != 0) return false;
    return true;
}

bool CycloElem::operator==(const CycloElem& o) const {
    return m_ == o.m_ && coords_ == o.coords_;
}

CycloElem CycloElem::operator+(const CycloElem& o) const {
    if (m_ != o.m_) throw conductor_mismatch();
    CycloElem r(m_);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i] + o.coords_[i];
    return r;
}

CycloElem CycloElem::operator-(const CycloElem& o) const {
    if (m_ != o.m_) throw conductor_mismatch();
    CycloElem r(m_);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i] - o.coords_[i];
    return r;
}

CycloElem CycloElem::operator*(const CycloElem& o) const {
    if (m_ != o.m_) throw conductor_mismatch();
    return from_poly(m_, to_poly() * o.to_poly());
}

CycloElem CycloElem::operator*(const Int& s) const {
    CycloElem r(m_);
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i] * s;
    return r;
}

CycloElem CycloElem::galois(long j) const {
    j = ((j % m_) + m_) % m_;
    if (std::gcd(j, m_) != 1) throw error("galois exponent not coprime to conductor");
    std::vector<Int> big(m_);
    for (size_t i = 0; i < coords_.size(); ++i)
        big[(static_cast<long>(i) * j) % m_] += coords_[i];
    return from_poly(m_, IntPoly(std::move(big)));
}

IntPoly CycloElem::to_poly() const {
    return IntPoly(std::vector<Int>(coords_.begin(), coords_.end()));
}

std::string CycloElem::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords_.size(); ++i)
        os << (i ? "," : "") << coords_[i].get_str();
    os << ")";
    return os.str();
}

CycloElem eval_poly_at(const IntPoly& p, const CycloElem& alpha) {
    CycloElem acc(alpha.conductor());
    for (long k = p.degree(); k >= 0; --k)
        acc = acc * alpha + CycloElem::integer(alpha.conductor(), p.coeff(k));
    return acc;
}

CycloElem eval_A_at_zeta(const ArithFn& g, long n, long m) {
    return CycloElem::from_poly(m, darcais_sequence(g, n)[n]);
}

Report verify_roots_of_unity(const ArithFn& g, long N, long M, long m_lo, int jobs) {
    Timer t;
    Report rep;
    rep.claim_id = "thm3.roots-of-unity";
    rep.params = {{"g", g.name()}, {"N", N}, {"M", M}, {"m_lo", m_lo}};
    int g3 = g.g3_mod3();
    bool gate = (g3 == 0 || g3 == 1);
    rep.status = gate ? Status::verified : Status::hypothesis_violated;
    if (!gate)
        rep.details = {{"hypothesis", "g(3) mod 3 in {0,1}"}, {"g3_mod3", g3}};

    auto A = darcais_sequence(g, N);
    m_lo = std::max<long>(m_lo, 2);

    struct MResult {
        std::vector<long> zero_n;
    };
    std::vector<MResult> results(M >= m_lo ? M - m_lo + 1 : 0);
    parallel_for(m_lo, M + 1, jobs, [&](long m) {
        auto& out = results[m - m_lo];
        for (long n = 1; n <= N; ++n)
            if (CycloElem::from_poly(m, A[n]).is_zero()) out.zero_n.push_back(n);
    });

    bool sigma = g.name() == "sigma";
    for (long m = m_lo; m <= M; ++m) {
        const auto& zeros = results[m - m_lo];
        if (m >= 3) {
            for (long n : zeros.zero_n) {
                if (gate) rep.status = Status::falsified;
                rep.add_witness({{"n", n}, {"m", m}, {"value", "0"}});
            }
        } else if (m == 2 && sigma) {
            // zeros at zeta_2 = -1 occur exactly off the pentagonal set
            std::vector<long> expected;
            for (long n = 1; n <= N; ++n)
                if (!is_generalized_pentagonal(n)) expected.push_back(n);
            if (zeros.zero_n != expected) {
                if (gate) rep.status = Status::falsified;
                rep.add_witness({{"m", 2},
                                 {"zero_indices", zeros.zero_n},
                                 {"expected_non_pentagonal", expected}});
            } else {
                Json d = rep.details.is_null() ? Json::object() : rep.details;
                d["m2_zero_indices"] = zeros.zero_n;
                rep.details = d;
            }
        } else if (m == 2) {
            Json d = rep.details.is_null() ? Json::object() : rep.details;
            d["m2_zero_indices"] = zeros.zero_n;
            rep.details = d;
        }
    }
    rep.timing_ms = t.ms();
    return rep;
}

// --- minimal polynomials and the index -----------------------------------------

MinPolyResult min_poly(const CycloElem& alpha) {
    long m = alpha.conductor();
    std::vector<CycloElem> conjugates;
    for (long j = 1; j <= m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        conjugates.push_back(alpha.galois(j));
    }
    // Distinct conjugate values: the Galois orbit, i.e. the roots of the
    // minimal polynomial, each exactly once.
    std::vector<CycloElem> orbit;
    for (const auto& c : conjugates) {
        bool seen = false;
        for (const auto& o : orbit)
            if (o == c) { seen = true; break; }
        if (!seen) orbit.push_back(c);
    }
    bool primitive = orbit.size() == conjugates.size();
    if (conjugates.size() % orbit.size() != 0)
        throw error("conjugate orbit size does not divide the group order");

    // prod (x - root) with coefficients in Z[zeta_m]
    std::vector<CycloElem> poly{CycloElem::integer(m, 1)};
    for (const auto& root : orbit) {
        std::vector<CycloElem> next(poly.size() + 1, CycloElem(m));
        for (size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = next[k + 1] + poly[k];
            next[k] = next[k] - poly[k] * root;
        }
        poly = std::move(next);
    }
    std::vector<Int> coeffs(poly.size());
    for (size_t k = 0; k < poly.size(); ++k) {
        const auto& c = poly[k].coords();
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0)
                throw error("conjugate product has a non-rational coefficient");
        coeffs[k] = c[0];
    }
    return {IntPoly(std::move(coeffs)), primitive};
}

Int cyclotomic_field_discriminant(long m) {
    if (m <= 2) return 1;
    long phi = euler_phi(m);
    Int num;
    mpz_ui_pow_ui(num.get_mpz_t(), m, phi);
    Int den = 1;
    for (auto [q, e] : factorize(m)) {
        Int qe;
        mpz_ui_pow_ui(qe.get_mpz_t(), q, phi / (q - 1));
        den *= qe;
    }
    Int d = num / den;
    if ((phi / 2) % 2 == 1) d = -d;
    return d;
}

namespace {

// Resultant over Q by the Euclidean recurrence; exact for integer inputs.
struct RatPoly {
    std::vector<Rat> c;
    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rat& lc() const { return c.back(); }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

RatPoly to_rat(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.degree() + 1);
    for (long k = 0; k <= p.degree(); ++k) r.c.emplace_back(p.coeff(k));
    return r;
}

RatPoly rat_mod(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    while (r.degree() >= b.degree() && !r.is_zero()) {
        Rat f = r.lc() / b.lc();
        long shift = r.degree() - b.degree();
        for (long j = 0; j <= b.degree(); ++j) {
            r.c[j + shift] -= f * b.c[j];
            r.c[j + shift].canonicalize();
        }
        r.normalize();
    }
    return r;
}

Rat resultant(RatPoly a, RatPoly b) {
    if (a.is_zero() || b.is_zero()) return 0;
    Rat acc = 1;
    while (true) {
        if (b.degree() == 0) {
            Rat p = 1;
            for (long i = 0; i < a.degree(); ++i) p *= b.c[0];
            return acc * p;
        }
        RatPoly r = rat_mod(a, b);
        if (r.is_zero()) return 0;
        Rat lead = 1;
        for (long i = 0; i < a.degree() - r.degree(); ++i) lead *= b.lc();
        if ((a.degree() * b.degree()) % 2 == 1) lead = -lead;
        acc *= lead;
        a = std::move(b);
        b = std::move(r);
    }
}

} // namespace

Int poly_discriminant(const IntPoly& f) {
    if (f.degree() < 1) throw error("discriminant needs degree >= 1");
    Rat res = resultant(to_rat(f), to_rat(f.derivative()));
    res /= Rat(f.coeff(f.degree()));
    if ((f.degree() * (f.degree() - 1) / 2) % 2 == 1) res = -res;
    res.canonicalize();
    if (res.get_den() != 1) throw error("discriminant is not an integer");
    return res.get_num();
}

Report index_coprime_check(const CycloElem& alpha, long p) {
    if (!is_prime_u64(p)) throw not_prime(p);
    Timer t;
    long m = alpha.conductor();
    CycloElem diff = alpha - CycloElem::zeta(m);
    for (const auto& v : diff.coords())
        if (v % p != 0) throw not_congruent();

    auto mp = min_poly(alpha);
    if (!mp.primitive) throw not_primitive();

    Int disc = poly_discriminant(mp.poly);
    Int delta_k = cyclotomic_field_discriminant(m);
    Int ratio = disc / delta_k;
    if (ratio * delta_k != disc || ratio < 0) throw non_square_ratio();
    Int kappa;
    if (mpz_perfect_square_p(ratio.get_mpz_t()) == 0) throw non_square_ratio();
    mpz_sqrt(kappa.get_mpz_t(), ratio.get_mpz_t());

    Report rep;
    rep.claim_id = "lemma.index-coprime";
    rep.params = {{"m", m}, {"p", p}, {"alpha", alpha.to_string()}};
    rep.details = {{"min_poly", mp.poly.to_string()},
                   {"disc", disc.get_str()},
                   {"disc_K", delta_k.get_str()},
                   {"kappa", kappa.get_str()}};
    if (kappa % p != 0) {
        rep.status = Status::verified;
    } else {
        rep.status = Status::falsified;
        rep.add_witness({{"kappa", kappa.get_str()}, {"p", p}});
    }
    rep.timing_ms = t.ms();
    return rep;
}

// --- shifted-set verifier -----------------------------------------------------

namespace {

bool has_odd_prime_divisor(long m) { return coprime_part(m, 2) > 1; }

bool is_two_a_three_ell(long m) {
    // {2^a 3^l : a in {0,1}}
    if (m % 2 == 0) m /= 2;
    while (m % 3 == 0) m /= 3;
    return m == 1;
}

} // namespace

Report verify_shifted_nonvanishing(const ArithFn& g, long m, long mu,
                                   long beta_samples, std::uint64_t seed,
                                   long box, long N) {
    Timer t;
    Report rep;
    rep.claim_id = mu == 6 ? "corollary.shifted-6" : "thm4.shifted";
    rep.params = {{"g", g.name()}, {"m", m},      {"mu", mu},
                  {"samples", beta_samples},      {"box", box},
                  {"N", N}};
    rep.seed = seed;
    if (mu != 2 && mu != 3 && mu != 6) throw error("mu must be 2, 3, or 6");

    // Hypothesis gates from the theorem.
    std::vector<std::string> violated;
    int g3 = g.g3_mod3();
    if (mu == 2 || mu == 6) {
        if (m < 3 || !has_odd_prime_divisor(m))
            violated.push_back("m must have an odd prime divisor");
    }
    if (mu == 3 || mu == 6) {
        if (is_two_a_three_ell(m))
            violated.push_back("m must not be of the form 2^a 3^l, a in {0,1}");
        if (g3 == 2) violated.push_back("g(3) mod 3 must be 0 or 1");
    }
    if (!violated.empty()) {
        rep.status = Status::hypothesis_violated;
        rep.details = {{"violated_hypotheses", violated}};
        rep.timing_ms = t.ms();
        return rep;
    }

    std::vector<long> route_primes = mu == 2   ? std::vector<long>{2}
                                     : mu == 3 ? std::vector<long>{3}
                                               : std::vector<long>{2, 3};

    long phi = euler_phi(m);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-box, box);
    auto A = darcais_sequence(g, N);

    rep.status = Status::verified;
    auto escalate = [&](Status s) {
        if (severity(s) > severity(rep.status)) rep.status = s;
    };
    Json samples = Json::array();
    for (long s = 0; s < beta_samples; ++s) {
        std::vector<Int> bc(phi);
        for (auto& v : bc) v = dist(rng);
        CycloElem beta = CycloElem::from_coords(m, bc);
        CycloElem alpha = CycloElem::zeta(m) + beta * Int(mu);

        Json sample = {{"beta", beta.to_string()}, {"alpha", alpha.to_string()}};
        bool ok = true;

        MinPolyResult mp = min_poly(alpha);
        sample["min_poly"] = mp.poly.to_string();
        sample["primitive"] = mp.primitive;
        if (!mp.primitive) {
            // would contradict the theorem's K = Q(alpha) assertion
            escalate(Status::inconclusive);
            rep.add_witness({{"sample", s},
                             {"reason", "alpha generates a proper subfield"},
                             {"alpha", alpha.to_string()}});
            samples.push_back(sample);
            continue;
        }

        for (long p : route_primes) {
            Report idx = index_coprime_check(alpha, p);
            sample["kappa"] = idx.details["kappa"];
            if (idx.status != Status::verified) {
                ok = false;
                rep.add_witness({{"sample", s},
                                 {"reason", "p divides the index kappa"},
                                 {"p", p},
                                 {"kappa", idx.details["kappa"]}});
            }
            auto fl = factor_gfp(reduce_mod_p(mp.poly, p));
            Json degs = Json::array();
            for (const auto& fac : fl.factors) degs.push_back(fac.poly.degree());
            sample["factor_degrees_mod_" + std::to_string(p)] = degs;
            for (const auto& fac : fl.factors) {
                if (fac.poly.degree() < 2) {
                    ok = false;
                    rep.add_witness({{"sample", s},
                                     {"reason", "linear factor of min_poly mod p"},
                                     {"p", p},
                                     {"factor", fac.poly.to_string()}});
                }
            }
        }

        for (long n = 1; n <= N; ++n) {
            if (eval_poly_at(A[n], alpha).is_zero()) {
                ok = false;
                rep.add_witness({{"sample", s},
                                 {"reason", "A_n(alpha) = 0"},
                                 {"n", n},
                                 {"alpha", alpha.to_string()}});
            }
        }
        sample["ok"] = ok;
        samples.push_back(sample);
        if (!ok) escalate(Status::falsified);
    }
    rep.details = Json{{"samples", samples}};
    rep.timing_ms = t.ms();
    return rep;
}

} // namespace darcais
