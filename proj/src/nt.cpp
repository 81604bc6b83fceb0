#include "darcais/nt.hpp"

#include <numeric>

namespace darcais {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

long euler_phi(long m) {
    long result = m;
    for (auto [p, e] : factorize(m)) result -= result / p;
    return result;
}

std::vector<long> divisors_of(long m) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        if (d != m / d) large.push_back(m / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::map<long, int> factorize(long m) {
    std::map<long, int> f;
    for (long p = 2; p * p <= m; ++p)
        while (m % p == 0) { ++f[p]; m /= p; }
    if (m > 1) ++f[m];
    return f;
}

long coprime_part(long m, long p) {
    while (m % p == 0) m /= p;
    return m;
}

long multiplicative_order(long a, long m) {
    if (m <= 1) return 1;
    long x = ((a % m) + m) % m;
    long ord = 1;
    long cur = x;
    while (cur != 1) {
        cur = (cur * x) % m;
        ++ord;
        if (ord > m) return -1; // gcd(a, m) != 1
    }
    return ord;
}

bool is_generalized_pentagonal(long n) {
    if (n < 0) return false;
    for (long k = 0;; ++k) {
        long a = k * (3 * k - 1) / 2;
        long b = k * (3 * k + 1) / 2;
        if (a == n || b == n) return true;
        if (a > n && b > n) return false;
    }
}

long triangular_index(long n) {
    if (n < 0) return -1;
    for (long k = 0;; ++k) {
        long t = k * (k + 1) / 2;
        if (t == n) return k;
        if (t > n) return -1;
    }
}

} // namespace darcais
