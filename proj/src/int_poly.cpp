#include "darcais/int_poly.hpp"

#include "darcais/errors.hpp"
#include "darcais/nt.hpp"

#include <sstream>

namespace darcais {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::x() { return IntPoly({Int(0), Int(1)}); }

const Int& IntPoly::coeff(long k) const {
    static const Int zero = 0;
    if (k < 0 || k >= static_cast<long>(c_.size())) return zero;
    return c_[k];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& s) const {
    if (s == 0) return {};
    std::vector<Int> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::shifted_up(long k) const {
    if (is_zero()) return {};
    std::vector<Int> r(c_.size() + k);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Int, Int> IntPoly::eval_gaussian(const Int& a, const Int& b) const {
    Int re = 0, im = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Int nre = re * a - im * b + *it;
        Int nim = re * b + im * a;
        re = std::move(nre);
        im = std::move(nim);
    }
    return {re, im};
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

std::pair<IntPoly, IntPoly> IntPoly::divmod_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic()) throw non_monic();
    long dd = divisor.degree();
    if (degree() < dd) return {IntPoly{}, *this};
    std::vector<Int> rem(c_);
    std::vector<Int> quo(degree() - dd + 1);
    for (long i = degree(); i >= dd; --i) {
        Int f = rem[i];
        if (f == 0) continue;
        quo[i - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.coeff(j);
    }
    return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly IntPoly::quotient_by_x() const {
    if (is_zero()) return {};
    if (c_[0] != 0) throw error("constant term nonzero: x does not divide");
    return IntPoly(std::vector<Int>(c_.begin() + 1, c_.end()));
}

IntPoly IntPoly::compose(const IntPoly& inner) const {
    IntPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + IntPoly::constant(*it);
    return acc;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Int& v = c_[k];
        if (v == 0) continue;
        Int a = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (a != 1 || k == 0) os << a.get_str();
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

// --- RatSeries -------------------------------------------------------------

void RatSeries::canonicalize() {
    for (auto& v : c_) v.canonicalize();
}

RatSeries RatSeries::one(long n_terms) {
    std::vector<Rat> c(std::max<long>(n_terms, 1));
    c[0] = 1;
    return RatSeries(std::move(c));
}

const Rat& RatSeries::coeff(long k) const {
    static const Rat zero = 0;
    if (k < 0 || k >= size()) return zero;
    return c_[k];
}

long RatSeries::degree() const {
    for (long k = size() - 1; k >= 0; --k)
        if (c_[k] != 0) return k;
    return -1;
}

RatSeries& RatSeries::add_in_place(const RatSeries& o) {
    if (o.size() > size()) c_.resize(o.size());
    for (long k = 0; k < o.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

RatSeries RatSeries::mul_truncated(const RatSeries& o, long n_terms) const {
    std::vector<Rat> r(n_terms);
    for (long i = 0; i < size() && i < n_terms; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < o.size() && i + j < n_terms; ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return RatSeries(std::move(r));
}

RatSeries RatSeries::mul(const RatSeries& o) const {
    if (degree() < 0 || o.degree() < 0) return RatSeries{};
    return mul_truncated(o, degree() + o.degree() + 1);
}

RatSeries& RatSeries::scale(const Rat& s) {
    for (auto& v : c_) v *= s;
    return *this;
}

bool RatSeries::operator==(const RatSeries& o) const {
    long n = std::max(size(), o.size());
    for (long k = 0; k < n; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

// --- D'Arcais sequence and oracles ------------------------------------------

std::vector<IntPoly> darcais_sequence(const ArithFn& g, long N) {
    std::vector<IntPoly> A;
    A.reserve(N + 1);
    A.push_back(IntPoly::constant(1));
    for (long n = 1; n <= N; ++n) {
        IntPoly s;
        Int c = 1; // (n-1)!/(n-k)!, updated as k grows
        for (long k = 1; k <= n; ++k) {
            s = s + A[n - k] * (c * g(k));
            c *= (n - k);
        }
        A.push_back(s.shifted_up(1));
    }
    return A;
}

RatSeries exp_series_oracle(const ArithFn& g, const Int& z, long N) {
    // S = z * sum_{n>=1} g(n) q^n / n, then E = sum_j S^j / j!.
    std::vector<Rat> s(N + 1);
    for (long n = 1; n <= N; ++n) {
        s[n] = Rat(z * g(n), n);
        s[n].canonicalize();
    }
    RatSeries S(std::move(s));
    RatSeries result = RatSeries::one(N + 1);
    RatSeries term = RatSeries::one(N + 1);
    for (long j = 1; j <= N; ++j) {
        term = term.mul_truncated(S, N + 1);
        term.scale(Rat(1, j));
        result.add_in_place(term);
    }
    return result;
}

std::vector<Int> product_expansion_oracle(long r, long N) {
    std::vector<Int> acc(N + 1);
    acc[0] = 1;
    if (r == 0) return acc;
    // Expand each (1 - q^n)^r by binomials truncated at q^N, multiply in.
    for (long n = 1; n <= N; ++n) {
        std::vector<Int> f(N + 1);
        if (r > 0) {
            // sum_j C(r, j) (-1)^j q^{n j}
            for (long j = 0; j <= r && n * j <= N; ++j) {
                Int b;
                mpz_bin_uiui(b.get_mpz_t(), r, j);
                f[n * j] = (j % 2) ? -b : b;
            }
        } else {
            // (1 - q^n)^{-s} = sum_j C(j + s - 1, s - 1) q^{n j}, s = -r
            long s = -r;
            for (long j = 0; n * j <= N; ++j) {
                Int b;
                mpz_bin_uiui(b.get_mpz_t(), j + s - 1, s - 1);
                f[n * j] = b;
            }
        }
        std::vector<Int> next(N + 1);
        for (long i = 0; i <= N; ++i) {
            if (acc[i] == 0) continue;
            for (long j = 0; j < static_cast<long>(f.size()) && i + j <= N; ++j) {
                if (f[j] == 0) continue;
                next[i + j] += acc[i] * f[j];
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Report pentagonal_pattern_check(long N) {
    Timer t;
    Report rep;
    rep.claim_id = "euler.pentagonal-pattern";
    rep.params = {{"N", N}};
    auto A = darcais_sequence(ArithFn::sigma(), N);
    auto prod = product_expansion_oracle(1, N);
    Int fact = 1;
    rep.status = Status::verified;
    for (long n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        Int v = A[n].eval(Int(-1));
        bool pent = is_generalized_pentagonal(n);
        bool mismatch = (v == 0) == pent;          // zero exactly off the pentagonal set
        bool oracle_mismatch = v != fact * prod[n]; // A_n(-1) = n! * [q^n] prod (1-q^k)
        if (mismatch || oracle_mismatch) {
            rep.status = Status::falsified;
            rep.add_witness({{"n", n},
                             {"A_n(-1)", v.get_str()},
                             {"pentagonal", pent},
                             {"product_coefficient", prod[n].get_str()}});
            break;
        }
    }
    rep.timing_ms = t.ms();
    return rep;
}

} // namespace darcais
