#include "darcais/hooks.hpp"

#include "darcais/errors.hpp"

#include <algorithm>
#include <numeric>

namespace darcais {

long Partition::weight() const {
    return std::accumulate(parts.begin(), parts.end(), 0L);
}

namespace {

void emit(std::vector<long>& stack, long rest, long max_part,
          std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(Partition{stack});
        return;
    }
    for (long first = std::min(rest, max_part); first >= 1; --first) {
        stack.push_back(first);
        emit(stack, rest - first, first, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(long n) {
    if (n < 0 || n > kPartitionCap) throw bound_exceeded(n, kPartitionCap);
    std::vector<Partition> out;
    std::vector<long> stack;
    emit(stack, n, n == 0 ? 1 : n, out);
    return out;
}

std::vector<long> hook_multiset(const Partition& p) {
    const auto& parts = p.parts;
    long rows = static_cast<long>(parts.size());
    // conjugate[j] = number of rows with at least j+1 cells
    std::vector<long> conjugate(rows ? parts[0] : 0, 0);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < parts[i]; ++j) ++conjugate[j];
    std::vector<long> hooks;
    hooks.reserve(p.weight());
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < parts[i]; ++j) {
            long arm = parts[i] - j - 1;
            long leg = conjugate[j] - i - 1;
            hooks.push_back(arm + leg + 1);
        }
    std::sort(hooks.rbegin(), hooks.rend());
    return hooks;
}

RatSeries hook_product_sum(long n) {
    RatSeries sum;
    for (const auto& lambda : partitions(n)) {
        RatSeries term = RatSeries::one(1);
        for (long h : hook_multiset(lambda)) {
            // multiply by (1 - z/h^2)
            RatSeries factor(std::vector<Rat>{Rat(1), Rat(-1, h * h)});
            term = term.mul(factor);
        }
        sum.add_in_place(term);
    }
    return sum;
}

Report verify_hook_length_identity(long n_max) {
    Timer t;
    Report rep;
    rep.claim_id = "eq.hook-length";
    rep.params = {{"n_max", n_max}};
    rep.status = Status::verified;

    auto A = darcais_sequence(ArithFn::sigma(), n_max);
    IntPoly one_minus_z({Int(1), Int(-1)});
    Int fact = 1;
    for (long n = 0; n <= n_max; ++n) {
        if (n > 0) fact *= n;
        IntPoly rhs_scaled = A[n].compose(one_minus_z); // n! * P_n(1-z)
        RatSeries lhs = hook_product_sum(n);
        bool equal = true;
        long deg = std::max(lhs.degree(), rhs_scaled.degree());
        for (long k = 0; k <= deg && equal; ++k)
            equal = lhs.coeff(k) * fact == Rat(rhs_scaled.coeff(k));
        if (!equal) {
            rep.status = Status::falsified;
            rep.add_witness({{"n", n},
                             {"hook_sum", [&] {
                                  Json a = Json::array();
                                  for (long k = 0; k <= lhs.degree(); ++k)
                                      a.push_back(lhs.coeff(k).get_str());
                                  return a;
                              }()},
                             {"P_n(1-z)_times_n!", [&] {
                                  Json a = Json::array();
                                  for (long k = 0; k <= rhs_scaled.degree(); ++k)
                                      a.push_back(rhs_scaled.coeff(k).get_str());
                                  return a;
                              }()}});
            break;
        }
    }
    rep.timing_ms = t.ms();
    return rep;
}

} // namespace darcais
