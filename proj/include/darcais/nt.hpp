#ifndef DARCAIS_NT_HPP
#define DARCAIS_NT_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace darcais {

// Trial division; intended for machine-word moduli (the target primes are <= 13).
bool is_prime_u64(std::uint64_t n);

long euler_phi(long m);

std::vector<long> divisors_of(long m);

std::map<long, int> factorize(long m);

// Largest divisor of m coprime to p.
long coprime_part(long m, long p);

// Multiplicative order of a mod m; requires gcd(a, m) = 1. ord(a mod 1) = 1.
long multiplicative_order(long a, long m);

// Generalized pentagonal numbers k(3k-1)/2, k in Z.
bool is_generalized_pentagonal(long n);

// Triangular numbers k(k+1)/2; returns k >= 0 or -1 when n is not triangular.
long triangular_index(long n);

} // namespace darcais

#endif
