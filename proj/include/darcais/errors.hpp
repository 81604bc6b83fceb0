#ifndef DARCAIS_ERRORS_HPP
#define DARCAIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace darcais {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_normalized : error {
    not_normalized() : error("arithmetic function must satisfy g(1) = 1") {}
};

struct table_out_of_range : error {
    explicit table_out_of_range(long n)
        : error("table-backed g has no value at n = " + std::to_string(n)) {}
};

struct not_prime : error {
    explicit not_prime(unsigned long p)
        : error(std::to_string(p) + " is not prime") {}
};

struct zero_polynomial : error {
    zero_polynomial() : error("operation undefined for the zero polynomial") {}
};

struct non_monic : error {
    non_monic() : error("polynomial must be monic") {}
};

struct conductor_mismatch : error {
    conductor_mismatch() : error("cyclotomic elements have different conductors") {}
};

struct not_congruent : error {
    not_congruent() : error("alpha is not congruent to zeta_m mod p") {}
};

struct not_primitive : error {
    not_primitive() : error("alpha does not generate the full cyclotomic field") {}
};

struct non_square_ratio : error {
    non_square_ratio()
        : error("disc(min_poly)/disc(K) is not a perfect square (internal inconsistency)") {}
};

struct bound_exceeded : error {
    explicit bound_exceeded(long n, long cap)
        : error("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                std::to_string(cap)) {}
};

} // namespace darcais

#endif
