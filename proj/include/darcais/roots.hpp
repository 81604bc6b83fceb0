#ifndef DARCAIS_ROOTS_HPP
#define DARCAIS_ROOTS_HPP

#include "darcais/arith_fn.hpp"
#include "darcais/int_poly.hpp"
#include "darcais/report.hpp"

#include <complex>
#include <vector>

namespace darcais {

/// Numeric roots with per-root residual bounds |A(r)| / (sum |c_i| max(1,|r|)^deg).
struct RootSet {
    long n = 0; // index when the polynomial is some A_n; informational
    std::vector<std::complex<double>> roots;
    std::vector<double> residual;
    bool converged = true;
};

// All complex roots by Aberth-Ehrlich simultaneous iteration on the
// max-coefficient-normalized polynomial; deterministic (fixed initial
// configuration). A non-converged run returns the best iterate with
// converged = false.
RootSet complex_roots(const IntPoly& a, int jobs = 0);

// Exact Routh-Hurwitz criterion over Q: true iff all zeros have negative
// real part. Degenerate pivots return indeterminate via the flag.
struct RouthResult {
    bool determinate = true;
    bool stable = false;
};
RouthResult routh_hurwitz_stable(const IntPoly& a);

// Squarefreeness over Q certified by a mod-p witness (gcd(f, f') = 1 over
// F_p for some prime p not dividing lc). Returns +1 certified squarefree,
// -1 certified not squarefree, 0 unknown.
int squarefree_over_q(const IntPoly& a);

// Stability scan of A_n^g / x over an n range: every root must satisfy
// Re < -tol and pairwise distances > tol. Exact cross-checks: Routh-Hurwitz
// for n <= routh_cap, squarefreeness witness for all n.
Report hurwitz_report(const ArithFn& g, long n_lo, long n_hi, double tol,
                      long routh_cap = 12, int jobs = 0);

// max |root| / (n-1) against the bound 9.7226 (the zero-free radius constant).
Report radius_report(const ArithFn& g, long n_lo, long n_hi, int jobs = 0);

// Exact integer evaluation of A_n^sigma(-(m^2-1)) for m in {n..n+3}; flags
// boundary vanishings at m = n.
Report kostant_han_scan(long n_lo, long n_hi);

// Exact Gaussian-integer evaluation A_n^g(it) for n <= N and each t; notes
// which t values are covered by the mod-3 / mod-7 certificates.
Report imaginary_axis_scan(const ArithFn& g, const std::vector<long>& t_values,
                           long N);

} // namespace darcais

#endif
