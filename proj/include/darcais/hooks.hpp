#ifndef DARCAIS_HOOKS_HPP
#define DARCAIS_HOOKS_HPP

#include "darcais/int_poly.hpp"
#include "darcais/report.hpp"

#include <vector>

namespace darcais {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<long> parts;
    long weight() const;
};

// Enumeration cap; p(40) = 37338 keeps brute force instant.
inline constexpr long kPartitionCap = 40;

// All partitions of n in reverse lexicographic order, e.g. for n = 4:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). Throws bound_exceeded above the cap.
std::vector<Partition> partitions(long n);

// Hook lengths of every cell of the Young diagram, sorted descending;
// size equals the weight.
std::vector<long> hook_multiset(const Partition& p);

// sum_{lambda |- n} prod_{h in H(lambda)} (1 - z/h^2), exact in z.
RatSeries hook_product_sum(long n);

// Checks hook_product_sum(n) = P_n^sigma(1 - z) as exact polynomials for all
// n <= n_max (the hook length formula as a polynomial identity).
Report verify_hook_length_identity(long n_max);

} // namespace darcais

#endif
