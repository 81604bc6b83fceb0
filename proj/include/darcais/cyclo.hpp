#ifndef DARCAIS_CYCLO_HPP
#define DARCAIS_CYCLO_HPP

#include "darcais/arith_fn.hpp"
#include "darcais/int_poly.hpp"
#include "darcais/report.hpp"

#include <cstdint>
#include <vector>

namespace darcais {

// Phi_m, monic of degree phi(m), by iterated exact division of x^m - 1.
// Cached; safe for concurrent callers.
const IntPoly& cyclotomic_poly(long m);

/// Splitting of p in Q(zeta_m): phi(m) = e * f * g_count.
struct SplittingData {
    long p = 0;
    long m = 0;
    long e = 1;       // ramification index, phi(p^a) for the exact p-part p^a of m
    long f = 1;       // inertial degree, order of p mod m_p
    long g_count = 1; // number of primes above p
};

SplittingData inertial_data(long p, long m);

// True iff the inertial degree of p in Q(zeta_m) is 1. For p in {2, 3} the
// result is cross-checked against the closed forms R_2 = {2^l} and
// R_3 = {2^a 3^l : a in {0,1}}.
bool in_R_p(long p, long m);

// Factors Phi_m mod p and matches degrees, multiplicities, and factor count
// against inertial_data (Dedekind-Kummer, applicable since O_K = Z[zeta_m]).
Report dedekind_kummer_check(long p, long m);

/// Element of Z[zeta_m] in coordinates w.r.t. the power basis
/// 1, zeta, ..., zeta^{phi(m)-1}.
class CycloElem {
public:
    explicit CycloElem(long m);
    static CycloElem zeta(long m);
    static CycloElem integer(long m, Int v);
    static CycloElem from_poly(long m, const IntPoly& p); // reduce mod Phi_m
    static CycloElem from_coords(long m, std::vector<Int> coords);

    long conductor() const { return m_; }
    const std::vector<Int>& coords() const { return coords_; }
    bool is_zero() const;
    bool operator==(const CycloElem& o) const;

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem operator*(const Int& s) const;

    // The Galois automorphism zeta -> zeta^j; requires gcd(j, m) = 1.
    CycloElem galois(long j) const;

    IntPoly to_poly() const;
    std::string to_string() const;

private:
    long m_;
    std::vector<Int> coords_;
};

// Horner evaluation of an integer polynomial at a ring element.
CycloElem eval_poly_at(const IntPoly& p, const CycloElem& alpha);

// A_n^g(zeta_m) as an exact ring element; zero iff P_n^g(zeta_m) = 0.
CycloElem eval_A_at_zeta(const ArithFn& g, long n, long m);

// Scans 1 <= n <= N, m_lo <= m <= M for zeros of A_n^g at zeta_m. The claim
// covers m >= 3; m = 2 (when included) is checked against the pentagonal
// pattern for sigma and reported informationally otherwise.
Report verify_roots_of_unity(const ArithFn& g, long N, long M, long m_lo = 3,
                             int jobs = 0);

struct MinPolyResult {
    IntPoly poly;   // the minimal polynomial (the radical of the conjugate product)
    bool primitive; // true iff alpha generates the whole field
};

// prod_j (x - sigma_j(alpha)) over the Galois group, computed exactly in
// Z[zeta_m][x]; returns the radical and a primitivity flag.
MinPolyResult min_poly(const CycloElem& alpha);

// Field discriminant of Q(zeta_m), closed form.
Int cyclotomic_field_discriminant(long m);

// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f), exact.
Int poly_discriminant(const IntPoly& f);

// For alpha == zeta_m (mod p Z[zeta_m]): computes the index
// kappa = sqrt(disc(min_poly) / disc(K)) and reports whether p does not
// divide it. Throws not_congruent / not_primitive / non_square_ratio.
Report index_coprime_check(const CycloElem& alpha, long p);

// Samples beta in Z[zeta_m] with coordinates in [-box, box], forms
// alpha = zeta_m + mu*beta, and per sample: checks index coprimality,
// factors min_poly(alpha) mod the route primes (all factor degrees must be
// >= 2), and confirms A_n^g(alpha) != 0 for n <= N. mu in {2, 3, 6}.
Report verify_shifted_nonvanishing(const ArithFn& g, long m, long mu,
                                   long beta_samples, std::uint64_t seed,
                                   long box, long N);

} // namespace darcais

#endif
