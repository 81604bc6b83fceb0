#ifndef DARCAIS_CLI_HPP
#define DARCAIS_CLI_HPP

#include "darcais/arith_fn.hpp"
#include "darcais/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace darcais::cli {

/// Suite bounds; quick trims everything for fast runs.
struct SuiteProfile {
    std::string name;
    long pentagonal_N;
    long lemma_N;       // periodicity bound
    long zeta_N, zeta_M; // roots-of-unity scan
    long dk_m_max;
    long rp_m_max;
    long shifted_samples, shifted_N;
    long hook_n;
    long roots_n_hi;
    long imag_N;

    static SuiteProfile quick();
    static SuiteProfile full();
};

// Runs every suite member for g; deterministic for fixed (g, seed).
// The aggregate report (worst member status) is appended last.
std::vector<Report> run_suite(const ArithFn& g, const SuiteProfile& profile,
                              std::uint64_t seed, int jobs);

// Entry point behind the binary: parses argv, writes JSON-lines reports to
// `out` (or --out file), errors to `err`. Exit code 0 when no report is
// falsified / violation_candidate, 2 when the worst status is
// hypothesis_violated, 1 on errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace darcais::cli

#endif
