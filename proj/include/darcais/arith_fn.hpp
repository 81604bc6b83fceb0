#ifndef DARCAIS_ARITH_FN_HPP
#define DARCAIS_ARITH_FN_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace darcais {

using Int = mpz_class;
using Rat = mpq_class;

/// Normalized integer arithmetic function g with g(1) = 1.
///
/// Three kinds: the divisor sum sigma, the power family g(n) = n^d, and an
/// explicit table of values (values[0] = g(1)). Immutable after construction,
/// safe for concurrent reads.
class ArithFn {
public:
    static ArithFn sigma();
    static ArithFn power(unsigned d);
    static ArithFn table(std::vector<Int> values); // throws not_normalized

    // "sigma" | "power:<d>" | "table:@file.json" | inline JSON array "[1, ...]"
    static ArithFn parse(const std::string& spec);

    // g(n) for n >= 1; throws table_out_of_range when a table lacks the index.
    Int operator()(long n) const;

    // g(3) mod 3, in {0, 1, 2}; the hypothesis gate of the mod-3 lemmas.
    int g3_mod3() const;

    // Spec string usable by parse(); tables render inline.
    std::string name() const;

    bool is_table() const { return kind_ == Kind::Table; }
    long table_size() const { return static_cast<long>(values_.size()); }

private:
    enum class Kind { Sigma, Power, Table };
    ArithFn(Kind k, unsigned d, std::vector<Int> v);

    Kind kind_;
    unsigned power_d_ = 0;
    std::vector<Int> values_;
};

} // namespace darcais

#endif
