#ifndef DARCAIS_INT_POLY_HPP
#define DARCAIS_INT_POLY_HPP

#include "darcais/arith_fn.hpp"
#include "darcais/report.hpp"

#include <utility>
#include <vector>

namespace darcais {

/// Dense polynomial over Z with arbitrary-precision coefficients.
/// coeffs[k] is the coefficient of x^k; the zero polynomial is the empty
/// vector, otherwise the last entry is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPoly constant(Int v);
    static IntPoly x(); // the monomial x

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& coeff(long k) const; // 0 beyond the stored range
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const; // schoolbook
    IntPoly operator*(const Int& s) const;
    IntPoly shifted_up(long k) const; // multiply by x^k
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    Int eval(const Int& x) const; // Horner
    // Value at a + b*i as (real, imag).
    std::pair<Int, Int> eval_gaussian(const Int& a, const Int& b) const;

    IntPoly derivative() const;

    // Quotient and remainder by a monic divisor; exact over Z.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    // Exact division by x; requires zero constant term.
    IntPoly quotient_by_x() const;

    // p(q(x)), expanded; Horner over IntPoly.
    IntPoly compose(const IntPoly& inner) const;

    std::string to_string() const; // human form, e.g. "x^3 + 9x^2 + 8x"

private:
    void normalize();
    std::vector<Int> c_;
};

/// Truncated power series (or exact polynomial) with rational coefficients.
class RatSeries {
public:
    RatSeries() = default;
    explicit RatSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { canonicalize(); }
    static RatSeries one(long n_terms);

    long size() const { return static_cast<long>(c_.size()); }
    const Rat& coeff(long k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    long degree() const; // index of last nonzero entry, -1 if none

    RatSeries& add_in_place(const RatSeries& o);
    RatSeries mul_truncated(const RatSeries& o, long n_terms) const;
    RatSeries mul(const RatSeries& o) const; // exact product
    RatSeries& scale(const Rat& s);
    bool operator==(const RatSeries& o) const;

private:
    void canonicalize();
    std::vector<Rat> c_;
};

// --- D'Arcais sequence and oracles ---------------------------------------

// A_0..A_N with A_n = x * sum_{k=1..n} [(n-1)!/(n-k)!] g(k) A_{n-k}, A_0 = 1.
std::vector<IntPoly> darcais_sequence(const ArithFn& g, long N);

// Coefficient n of the result is P_n^g(z) = A_n^g(z)/n!, obtained by formal
// exponentiation of z * sum_n g(n) q^n / n as a Taylor sum of powers -- an
// independent route from the recurrence.
RatSeries exp_series_oracle(const ArithFn& g, const Int& z, long N);

// Exact coefficients of prod_{n=1..N} (1 - q^n)^r up to q^N; entry n equals
// P_n^sigma(-r).
std::vector<Int> product_expansion_oracle(long r, long N);

// Checks that A_n^sigma(-1) = 0 exactly for non-pentagonal n <= N, and that
// the values match product_expansion_oracle(1, N) scaled by n!.
Report pentagonal_pattern_check(long N);

} // namespace darcais

#endif
