#ifndef DARCAIS_REPORT_HPP
#define DARCAIS_REPORT_HPP

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace darcais {

using Json = nlohmann::ordered_json;

enum class Status {
    verified,
    certified,
    consistent,
    falsified,
    violation_candidate,
    inconclusive,
    hypothesis_violated,
    indeterminate,
};

const char* to_string(Status s);
Status status_from_string(const std::string& s);

// Badness rank; aggregation keeps the worst member status.
int severity(Status s);

/// Structured verification outcome. Witnesses hold counterexample or evidence
/// records; falsified and violation_candidate require at least one. The seed
/// is present exactly when randomness was used. Timing is kept out of the
/// serialized form by default so identical (argv, seed) runs are
/// byte-identical.
struct Report {
    std::string claim_id;
    Json params = Json::object();
    Status status = Status::verified;
    std::vector<Json> witnesses;
    std::optional<std::uint64_t> seed;
    std::int64_t timing_ms = 0;
    Json details; // optional extras (sub-reports, notes); omitted when null

    Json to_json(bool with_timing = false) const;
    std::string to_line(bool with_timing = false) const;

    void add_witness(Json w) { witnesses.push_back(std::move(w)); }
    bool ok() const { return severity(status) == 0; }
};

Status worst_status(const std::vector<Report>& members);

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

} // namespace darcais

#endif
