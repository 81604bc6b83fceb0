#ifndef DARCAIS_GFP_HPP
#define DARCAIS_GFP_HPP

#include "darcais/arith_fn.hpp"
#include "darcais/int_poly.hpp"
#include "darcais/report.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace darcais {

/// Dense polynomial over F_p for a machine-word prime p (p < 2^31 so products
/// of residues fit in uint64_t). Residues are kept reduced in [0, p).
class GFpPoly {
public:
    explicit GFpPoly(std::uint64_t p) : p_(p) {}
    GFpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
    static GFpPoly constant(std::uint64_t p, std::uint64_t v);
    static GFpPoly x(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::uint64_t coeff(long k) const;
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t leading() const { return c_.back(); }

    GFpPoly operator+(const GFpPoly& o) const;
    GFpPoly operator-(const GFpPoly& o) const;
    GFpPoly operator*(const GFpPoly& o) const;
    bool operator==(const GFpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator<(const GFpPoly& o) const; // degree, then lexicographic coeffs

    GFpPoly monic() const;
    GFpPoly derivative() const;
    std::pair<GFpPoly, GFpPoly> divmod(const GFpPoly& divisor) const;
    GFpPoly mod(const GFpPoly& divisor) const { return divmod(divisor).second; }
    bool divides(const GFpPoly& f) const; // *this | f

    std::string to_string() const;

private:
    void normalize();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

GFpPoly gcd(GFpPoly a, GFpPoly b);

// base^e mod modulus (binary exponentiation in F_p[x]/(modulus)).
GFpPoly powmod(const GFpPoly& base, const Int& e, const GFpPoly& modulus);

// f(x^p) -> f(x)^(1/p) in characteristic p: keep every p-th coefficient.
GFpPoly pth_root(const GFpPoly& f);

struct GFpFactor {
    GFpPoly poly; // monic irreducible
    long multiplicity;
};

/// Complete factorization: unit * prod factor^multiplicity reconstructs the
/// input; factors are monic, irreducible, pairwise distinct, sorted.
struct FactorList {
    std::uint64_t unit;
    std::vector<GFpFactor> factors;
    std::uint64_t seed; // equal-degree splitting randomness, for reproducibility
};

inline constexpr std::uint64_t kDefaultFactorSeed = 1;

// Squarefree decomposition + distinct-degree + Cantor-Zassenhaus equal-degree
// splitting. Deterministic for a fixed seed.
FactorList factor_gfp(const GFpPoly& f, std::uint64_t seed = kDefaultFactorSeed);

// x^{p^d} == x (mod f) exactly at d = deg f, plus gcd checks at proper prime
// quotients of the degree.
bool is_irreducible(const GFpPoly& f);

std::set<long> degree_spectrum(const GFpPoly& f);

// True iff every irreducible factor has degree 1.
bool splits_into_linears(const GFpPoly& f);

// Coefficientwise reduction into [0, p).
GFpPoly reduce_mod_p(const IntPoly& a, std::uint64_t p);

// A_0..A_N computed natively in F_p[x] from the recurrence.
std::vector<GFpPoly> darcais_sequence_mod_p(const ArithFn& g, std::uint64_t p, long N);

// x(x-1)...(x-p+1) over F_p.
GFpPoly falling_factorial_mod_p(std::uint64_t p);

// --- Lemma verifiers and certificates ---------------------------------------

// A_{lp+r} == A_r * A_p^l (mod p) for every n = lp + r <= N.
Report verify_periodicity(const ArithFn& g, std::uint64_t p, long N);

// A_p == x(x-1)...(x-p+1) (mod p). Holds when the P_n^g are integer-valued;
// the report probes that hypothesis (P_n integer-valued for n <= p) and
// records it, so a failing congruence with a failing hypothesis is reported
// as hypothesis_violated rather than falsified.
Report verify_falling_factorial(const ArithFn& g, std::uint64_t p);

// The three degree-spectrum conditions on A_r mod 5, 7, 11.
Report zmija_conditions(const ArithFn& g);

// One-sided certificate that P_n^g(alpha) != 0 for every n >= 1 and every
// root alpha of minpoly: all irreducible factors of minpoly mod p must have
// degree >= 2 and divide no A_r mod p, 1 <= r <= p-1.
Report modp_nonvanishing_certificate(const IntPoly& minpoly, const ArithFn& g,
                                     std::uint64_t p);

} // namespace darcais

#endif
